#ifndef MOLP_RATIONAL_HPP
#define MOLP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "molp/errors.hpp"

namespace molp {

// Exact arbitrary-precision rational, always kept in canonical form
// (positive denominator, coprime numerator/denominator) by gmpxx.
using Rat = mpq_class;
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionError("dot: vectors have sizes " +
                             std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec mat_vec(const Mat& m, const Vec& x) {
    Vec out;
    out.reserve(m.size());
    for (const Vec& row : m) out.push_back(dot(row, x));
    return out;
}

// Lexicographic comparison; used everywhere a canonical order is needed.
inline bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

// Parses "a" or "a/b" with b > 0.  Decimal notation is rejected.
inline Rat parse_rational(const std::string& s) {
    std::size_t pos = 0;
    auto digits = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        return pos > start;
    };
    if (pos < s.size() && s[pos] == '-') ++pos;
    if (!digits()) throw ParseError("bad rational: '" + s + "'");
    if (pos < s.size()) {
        if (s[pos] != '/') throw ParseError("bad rational: '" + s + "'");
        ++pos;
        if (!digits() || pos != s.size())
            throw ParseError("bad rational: '" + s + "'");
    }
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rat& q) { return q.get_str(); }

}  // namespace molp

#endif  // MOLP_RATIONAL_HPP

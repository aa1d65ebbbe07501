#ifndef MOLP_IO_HPP
#define MOLP_IO_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "molp/errors.hpp"
#include "molp/molp.hpp"
#include "molp/outer.hpp"
#include "molp/rational.hpp"

// Line-oriented key/value file formats.  Rationals are always "a" or
// "a/b" strings (never floating point), vectors are [a,b,...] and
// matrices [[...],[...]]; serialisation round-trips bit-exactly.
//
//   molp-instance v1          molp-result v1
//   p 2                       algorithm projective
//   n 3                       outcomes [[0,1],[1,0]]
//   m 1                       iterations 1
//   C [[1,0,0],[0,1,0]]       lp_solves 12
//   A [[1,1,1]]               vertex_counts [4]
//   b [1]                     final_vertices 4
//                             final_non_efficient 2
//                             wall_ms 3

namespace molp {
namespace io {

namespace detail {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    char peek() const {
        if (pos_ >= text_.size()) throw ParseError("unexpected end of value");
        return text_[pos_];
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "' in value");
        ++pos_;
    }
    bool done() const { return pos_ >= text_.size(); }

    Rat rational() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']')
            ++pos_;
        return parse_rational(text_.substr(start, pos_ - start));
    }

    Vec vector() {
        expect('[');
        Vec out;
        if (peek() != ']') {
            out.push_back(rational());
            while (peek() == ',') {
                expect(',');
                out.push_back(rational());
            }
        }
        expect(']');
        return out;
    }

    Mat matrix() {
        expect('[');
        Mat out;
        if (peek() != ']') {
            out.push_back(vector());
            while (peek() == ',') {
                expect(',');
                out.push_back(vector());
            }
        }
        expect(']');
        return out;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

inline Vec parse_vector(const std::string& text) {
    Cursor c(text);
    Vec v = c.vector();
    if (!c.done()) throw ParseError("trailing characters after vector");
    return v;
}

inline Mat parse_matrix(const std::string& text) {
    Cursor c(text);
    Mat m = c.matrix();
    if (!c.done()) throw ParseError("trailing characters after matrix");
    return m;
}

inline std::string format_vector(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_rational(v[i]);
    }
    return out + "]";
}

inline std::string format_matrix(const Mat& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ',';
        out += format_vector(m[i]);
    }
    return out + "]";
}

// key -> rest-of-line map preserving the header check
inline std::vector<std::pair<std::string, std::string>> key_values(
    const std::string& text, const std::string& header) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw ParseError("missing '" + header + "' header");
    std::vector<std::pair<std::string, std::string>> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t sp = line.find(' ');
        if (sp == std::string::npos)
            throw ParseError("malformed line: '" + line + "'");
        out.emplace_back(line.substr(0, sp), line.substr(sp + 1));
    }
    return out;
}

inline std::size_t parse_size(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer field");
    std::size_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad integer: '" + s + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

}  // namespace detail

inline std::string serialize_instance(const MolpInstance& inst) {
    std::string out = "molp-instance v1\n";
    out += "p " + std::to_string(inst.p()) + "\n";
    out += "n " + std::to_string(inst.n()) + "\n";
    out += "m " + std::to_string(inst.m()) + "\n";
    out += "C " + detail::format_matrix(inst.C) + "\n";
    out += "A " + detail::format_matrix(inst.A) + "\n";
    out += "b " + detail::format_vector(inst.b) + "\n";
    return out;
}

inline MolpInstance parse_instance(const std::string& text) {
    MolpInstance inst;
    std::size_t p = 0, n = 0, m = 0;
    bool have[6] = {};
    for (auto& [key, value] : detail::key_values(text, "molp-instance v1")) {
        if (key == "p") { p = detail::parse_size(value); have[0] = true; }
        else if (key == "n") { n = detail::parse_size(value); have[1] = true; }
        else if (key == "m") { m = detail::parse_size(value); have[2] = true; }
        else if (key == "C") { inst.C = detail::parse_matrix(value); have[3] = true; }
        else if (key == "A") { inst.A = detail::parse_matrix(value); have[4] = true; }
        else if (key == "b") { inst.b = detail::parse_vector(value); have[5] = true; }
        else throw ParseError("unknown instance field: '" + key + "'");
    }
    for (bool h : have)
        if (!h) throw ParseError("incomplete instance file");
    check_dimensions(inst);
    if (inst.p() != p || inst.n() != n || inst.m() != m)
        throw ParseError("instance dimensions disagree with p/n/m fields");
    return inst;
}

inline std::string serialize_result(const std::string& algorithm,
                                    const SolveResult& result) {
    std::string out = "molp-result v1\n";
    out += "algorithm " + algorithm + "\n";
    out += "outcomes " +
           detail::format_matrix(result.efficient_extreme_outcomes) + "\n";
    out += "iterations " + std::to_string(result.stats.iterations) + "\n";
    out += "lp_solves " + std::to_string(result.stats.lp_solves) + "\n";
    out += "vertex_counts [";
    for (std::size_t i = 0; i < result.stats.vertex_counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(result.stats.vertex_counts[i]);
    }
    out += "]\n";
    out += "final_vertices " + std::to_string(result.stats.final_vertices) + "\n";
    out += "final_non_efficient " +
           std::to_string(result.stats.final_non_efficient) + "\n";
    out += "wall_ms " + std::to_string(result.stats.wall_time.count()) + "\n";
    return out;
}

}  // namespace io
}  // namespace molp

#endif  // MOLP_IO_HPP

#ifndef MOLP_PROJECTIVE_HPP
#define MOLP_PROJECTIVE_HPP

#include <cstddef>
#include <utility>

#include "molp/errors.hpp"
#include "molp/rational.hpp"

// Oriented projective geometry kernel.  Points and half-spaces are
// (d+1)-tuples of rationals identified up to positive scaling; the sign
// of the last coordinate classifies a point as visible, infinite or
// invisible.  All values are immutable and all operations are pure.

namespace molp {

enum class PointClass { Visible, Infinite, Invisible };

namespace detail {

// Scales a nonzero rational vector by the unique positive rational that
// turns it into a coprime integer vector.  Sign pattern is preserved.
inline Vec canonical_coords(const Vec& raw) {
    bool all_zero = true;
    for (const Rat& q : raw)
        if (q != 0) { all_zero = false; break; }
    if (all_zero) throw InvalidCoordinates("all-zero coordinate tuple");

    mpz_class lcm_den = 1;
    for (const Rat& q : raw) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                     q.get_den().get_mpz_t());
    mpz_class gcd_num = 0;
    std::vector<mpz_class> scaled;
    scaled.reserve(raw.size());
    for (const Rat& q : raw) {
        mpz_class v = q.get_num() * (lcm_den / q.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_mpz_t());
        scaled.push_back(std::move(v));
    }
    Vec out;
    out.reserve(scaled.size());
    for (const mpz_class& v : scaled) out.emplace_back(v / gcd_num);
    return out;
}

}  // namespace detail

// A point of oriented projective d-space in canonical signed homogeneous
// coordinates (coprime integers; positive scaling quotiented away, so
// structural equality is geometric equality).
class HPoint {
public:
    explicit HPoint(Vec raw) : coords_(detail::canonical_coords(raw)) {}

    const Vec& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }

    // geometric dimension d (one less than the coordinate count)
    std::size_t dim() const { return coords_.size() - 1; }

    friend bool operator==(const HPoint& a, const HPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const HPoint& a, const HPoint& b) {
        return !(a == b);
    }
    friend bool operator<(const HPoint& a, const HPoint& b) {
        return lex_less(a.coords_, b.coords_);
    }

private:
    Vec coords_;
};

// A projective half-space {x | h·x >= 0}; with equality intended it also
// serves as a projective hyperplane.  Same canonical form as HPoint
// (only positive scaling preserves the half-space).
class HHalfspace {
public:
    explicit HHalfspace(Vec raw) : coeffs_(detail::canonical_coords(raw)) {}

    const Vec& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    std::size_t dim() const { return coeffs_.size() - 1; }

    friend bool operator==(const HHalfspace& a, const HHalfspace& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const HHalfspace& a, const HHalfspace& b) {
        return !(a == b);
    }

private:
    Vec coeffs_;
};

inline HPoint canonicalize(const Vec& raw) { return HPoint(raw); }

inline PointClass classify(const HPoint& p) {
    int s = sgn(p.coords().back());
    if (s > 0) return PointClass::Visible;
    if (s < 0) return PointClass::Invisible;
    return PointClass::Infinite;
}

// Embeds a Euclidean point into visible space.
inline HPoint lift(const Vec& e) {
    Vec raw = e;
    raw.emplace_back(1);
    return HPoint(std::move(raw));
}

// Euclidean coordinates of a visible point.
inline Vec project(const HPoint& p) {
    if (classify(p) != PointClass::Visible)
        throw NotVisible("project: point is not visible");
    const Rat& w = p.coords().back();
    Vec e;
    e.reserve(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) e.push_back(p[i] / w);
    return e;
}

inline HPoint opposite(const HPoint& p) {
    Vec neg;
    neg.reserve(p.size());
    for (const Rat& q : p.coords()) neg.push_back(-q);
    return HPoint(std::move(neg));
}

inline bool opposite_points(const HPoint& u, const HPoint& v) {
    return u == opposite(v);
}

// Sign of the exact dot product h·p; invariant under canonicalization of
// either argument.
inline int side(const HHalfspace& h, const HPoint& p) {
    if (h.size() != p.size())
        throw DimensionError("side: half-space and point dimensions differ");
    return sgn(dot(h.coeffs(), p.coords()));
}

// Non-negative combination of two non-opposite points; lies on the
// projective line segment joining them.
inline HPoint combine(const HPoint& u, const HPoint& v, const Rat& alpha,
                      const Rat& beta) {
    if (u.size() != v.size())
        throw DimensionError("combine: point dimensions differ");
    if (alpha < 0 || beta < 0 || (alpha == 0 && beta == 0))
        throw InvalidCombination("combine: need alpha, beta >= 0, not both 0");
    if (opposite_points(u, v))
        throw OppositePoints("combine: endpoints are opposite points");
    Vec raw;
    raw.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        raw.push_back(alpha * u[i] + beta * v[i]);
    return HPoint(std::move(raw));
}

}  // namespace molp

#endif  // MOLP_PROJECTIVE_HPP

#ifndef MOLP_DD_HPP
#define MOLP_DD_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "molp/errors.hpp"
#include "molp/projective.hpp"
#include "molp/rational.hpp"

// Double description engine over oriented projective space.  A polytope
// carries both a vertex list and a half-space list, plus the
// vertex/half-space incidence structure used by the combinatorial
// adjacency test.  Euclidean polytopes are the special case where every
// vertex is visible.

namespace molp {

namespace detail {

// incidence row: one bit per half-space index
class Bitset {
public:
    explicit Bitset(std::size_t bits = 0)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    Bitset operator&(const Bitset& o) const {
        Bitset r(bits_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            r.words_[w] = words_[w] & o.words_[w];
        return r;
    }
    bool contains(const Bitset& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((o.words_[w] & ~words_[w]) != 0) return false;
        return true;
    }

private:
    std::size_t bits_;
    std::vector<std::uint64_t> words_;
};

}  // namespace detail

class DDPolytope {
public:
    // Vertices are canonically sorted and deduplicated; incidence is
    // recomputed from exact side tests.  Every vertex must satisfy all
    // half-spaces and lie strictly inside the witness half-space.
    DDPolytope(std::vector<HPoint> vertices, std::vector<HHalfspace> halfspaces,
               HHalfspace witness)
        : halfspaces_(std::move(halfspaces)), witness_(std::move(witness)) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()),
                       vertices.end());
        vertices_ = std::move(vertices);
        if (vertices_.empty())
            throw EmptyResult("DDPolytope: no vertices remain");
        rebuild_incidence();
    }

    const std::vector<HPoint>& vertices() const { return vertices_; }
    const std::vector<HHalfspace>& halfspaces() const { return halfspaces_; }
    const HHalfspace& witness() const { return witness_; }

    bool incident(std::size_t vertex, std::size_t halfspace) const {
        return incidence_[vertex].test(halfspace);
    }

    // Combinatorial adjacency test: i and j are adjacent iff no third
    // vertex lies on every half-space boundary common to both.
    bool adjacent(std::size_t i, std::size_t j) const {
        if (i == j || i >= vertices_.size() || j >= vertices_.size())
            throw IndexError("adjacent: bad vertex indices");
        detail::Bitset common = incidence_[i] & incidence_[j];
        for (std::size_t z = 0; z < vertices_.size(); ++z) {
            if (z == i || z == j) continue;
            if (incidence_[z].contains(common)) return false;
        }
        return true;
    }

private:
    void rebuild_incidence() {
        incidence_.clear();
        incidence_.reserve(vertices_.size());
        for (const HPoint& v : vertices_) {
            if (side(witness_, v) <= 0)
                throw InternalError(
                    "DDPolytope: vertex not strictly inside witness");
            detail::Bitset row(halfspaces_.size());
            for (std::size_t h = 0; h < halfspaces_.size(); ++h) {
                int s = side(halfspaces_[h], v);
                if (s < 0)
                    throw InternalError("DDPolytope: vertex violates half-space");
                if (s == 0) row.set(h);
            }
            incidence_.push_back(std::move(row));
        }
    }

    std::vector<HPoint> vertices_;
    std::vector<HHalfspace> halfspaces_;
    HHalfspace witness_;
    std::vector<detail::Bitset> incidence_;
};

// The point where the segment [u, v] cuts the bounding hyperplane of h,
// given that u is strictly inside h and v strictly outside.
inline HPoint crossing_point(const HPoint& u, const HPoint& v,
                             const HHalfspace& h) {
    Rat su = dot(h.coeffs(), u.coords());
    Rat sv = dot(h.coeffs(), v.coords());
    if (su <= 0 || sv >= 0)
        throw NotCrossing("crossing_point: segment does not cross boundary");
    // su*v - sv*u is a positive combination of u and v, and h·result = 0
    return combine(v, u, su, -sv);
}

inline bool adjacent(const DDPolytope& p, std::size_t i, std::size_t j) {
    return p.adjacent(i, j);
}

// Intersects P with the half-space h.  Vertices strictly inside or on
// the boundary of h survive; each adjacent inside/outside pair
// contributes its crossing point.  Redundant half-spaces are retained.
inline DDPolytope cut(const DDPolytope& p, const HHalfspace& h) {
    const std::vector<HPoint>& verts = p.vertices();
    std::vector<int> sides(verts.size());
    bool any_negative = false;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        sides[i] = side(h, verts[i]);
        if (sides[i] < 0) any_negative = true;
    }

    std::vector<HHalfspace> halfspaces = p.halfspaces();
    halfspaces.push_back(h);

    if (!any_negative)
        return DDPolytope(verts, std::move(halfspaces), p.witness());

    std::vector<HPoint> kept;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (sides[i] >= 0) kept.push_back(verts[i]);
    if (kept.empty())
        throw EmptyResult("cut: half-space eliminates every vertex");

    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (sides[i] <= 0) continue;
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (sides[j] >= 0) continue;
            if (p.adjacent(i, j))
                kept.push_back(crossing_point(verts[i], verts[j], h));
        }
    }
    return DDPolytope(std::move(kept), std::move(halfspaces), p.witness());
}

// Iterated cut: seed must contain the target polytope.
inline DDPolytope enumerate_from_halfspaces(
    const std::vector<HHalfspace>& halfspaces, const DDPolytope& seed) {
    DDPolytope p = seed;
    for (const HHalfspace& h : halfspaces) p = cut(p, h);
    return p;
}

// Axis-aligned Euclidean box [lo, hi] as an all-visible DDPolytope;
// a convenient seed for enumerate_from_halfspaces.
inline DDPolytope make_box(const Vec& lo, const Vec& hi) {
    const std::size_t d = lo.size();
    if (hi.size() != d) throw DimensionError("make_box: bound sizes differ");
    for (std::size_t i = 0; i < d; ++i)
        if (lo[i] >= hi[i]) throw InvalidSpec("make_box: needs lo < hi");
    std::vector<HPoint> verts;
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        Vec e(d);
        for (std::size_t i = 0; i < d; ++i)
            e[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        verts.push_back(lift(e));
    }
    std::vector<HHalfspace> hs;
    for (std::size_t i = 0; i < d; ++i) {
        Vec ge(d + 1, Rat(0)), le(d + 1, Rat(0));
        ge[i] = 1;
        ge[d] = -lo[i];
        le[i] = -1;
        le[d] = hi[i];
        hs.emplace_back(std::move(ge));
        hs.emplace_back(std::move(le));
    }
    Vec w(d + 1, Rat(0));
    w[d] = 1;  // visible half-space
    return DDPolytope(std::move(verts), std::move(hs), HHalfspace(std::move(w)));
}

}  // namespace molp

#endif  // MOLP_DD_HPP

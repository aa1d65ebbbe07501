#ifndef MOLP_OUTER_HPP
#define MOLP_OUTER_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "molp/dd.hpp"
#include "molp/errors.hpp"
#include "molp/molp.hpp"
#include "molp/projective.hpp"
#include "molp/rational.hpp"

// The two outer approximation drivers: the classical algorithm builds
// the Euclidean polytope Y^[] while the projective algorithm builds the
// projective polytope T^<= whose only non-efficient vertices are the p
// vertices at infinity.  Both emit per-iteration statistics so the
// vertex-count contrast between the two is directly observable.

namespace molp {

struct RunStats {
    std::size_t iterations = 0;
    long long lp_solves = 0;
    std::vector<std::size_t> vertex_counts;  // after each cut
    std::size_t final_vertices = 0;
    std::size_t final_non_efficient = 0;
    std::chrono::milliseconds wall_time{0};
};

struct SolveResult {
    std::vector<Vec> efficient_extreme_outcomes;  // canonically sorted
    RunStats stats;
    std::optional<DDPolytope> final_polytope;
};

// Simplex {y_hat, y_hat + alpha*e_i} with alpha = sum(y_max - y_hat) + 1,
// which strictly contains Y^[].
inline DDPolytope initial_simplex_euclidean(const MolpInstance& inst,
                                            const AnchorData& anchor) {
    const std::size_t p = inst.p();
    Rat alpha = 1;
    for (std::size_t i = 0; i < p; ++i)
        alpha += anchor.y_max[i] - anchor.y_hat[i];

    std::vector<HPoint> verts;
    verts.push_back(lift(anchor.y_hat));
    for (std::size_t i = 0; i < p; ++i) {
        Vec v = anchor.y_hat;
        v[i] += alpha;
        verts.push_back(lift(v));
    }
    std::vector<HHalfspace> hs;
    for (std::size_t i = 0; i < p; ++i) {
        Vec h(p + 1, Rat(0));
        h[i] = 1;
        h[p] = -anchor.y_hat[i];
        hs.emplace_back(std::move(h));
    }
    Vec diag(p + 1, Rat(-1));
    diag[p] = alpha;
    for (std::size_t i = 0; i < p; ++i) diag[p] += anchor.y_hat[i];
    hs.emplace_back(std::move(diag));

    Vec w(p + 1, Rat(0));
    w[p] = 1;
    return DDPolytope(std::move(verts), std::move(hs), HHalfspace(std::move(w)));
}

// Projective simplex with one visible vertex y_max and p vertices at
// infinity in the negative axis directions; half-spaces y_i <= y_max_i
// plus the visible half-space.
inline DDPolytope initial_simplex_projective(const MolpInstance& inst,
                                             const AnchorData& anchor) {
    const std::size_t p = inst.p();
    std::vector<HPoint> verts;
    verts.push_back(lift(anchor.y_max));
    for (std::size_t i = 0; i < p; ++i) {
        Vec v(p + 1, Rat(0));
        v[i] = -1;
        verts.emplace_back(std::move(v));
    }
    std::vector<HHalfspace> hs;
    for (std::size_t i = 0; i < p; ++i) {
        Vec h(p + 1, Rat(0));
        h[i] = -1;
        h[p] = anchor.y_max[i];
        hs.emplace_back(std::move(h));
    }
    Vec visible(p + 1, Rat(0));
    visible[p] = 1;
    hs.emplace_back(std::move(visible));

    Vec w(p + 1, Rat(-1));
    w[p] = 1;
    for (std::size_t i = 0; i < p; ++i) w[p] += anchor.y_max[i];
    return DDPolytope(std::move(verts), std::move(hs), HHalfspace(std::move(w)));
}

namespace detail {

inline std::vector<HPoint> expected_infinite_vertices(std::size_t p) {
    std::vector<HPoint> out;
    for (std::size_t i = 0; i < p; ++i) {
        Vec v(p + 1, Rat(0));
        v[i] = -1;
        out.emplace_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void check_infinite_invariant(const DDPolytope& q, std::size_t p) {
    std::vector<HPoint> infinite;
    for (const HPoint& v : q.vertices())
        if (classify(v) == PointClass::Infinite) infinite.push_back(v);
    if (infinite != expected_infinite_vertices(p))
        throw InternalError("projective run: infinite vertex set changed");
}

struct DriverSetup {
    AnchorData anchor;
    Vec ybar;
    DDPolytope polytope;
};

inline DriverSetup prepare(const MolpInstance& inst, TargetSet target) {
    Vec x0 = validate_instance(inst);
    AnchorData anchor = anchor_point(inst);
    Vec ybar = interior_reference(inst, anchor, x0, target);
    DDPolytope start = target == TargetSet::Ysquare
                           ? initial_simplex_euclidean(inst, anchor)
                           : initial_simplex_projective(inst, anchor);
    return DriverSetup{std::move(anchor), std::move(ybar), std::move(start)};
}

// Shared iteration: refine the start polytope until every candidate
// vertex is a member of the target set.  visible_only restricts the
// membership scan to visible vertices (the projective driver relies on
// the invariant that its infinite vertices never change).
inline SolveResult drive(const MolpInstance& inst, TargetSet target,
                         bool visible_only) {
    auto t0 = std::chrono::steady_clock::now();
    long long solves0 = lp_tally().solves.load();

    DriverSetup setup = prepare(inst, target);
    DDPolytope polytope = std::move(setup.polytope);
    RunStats stats;

    for (;;) {
        if (visible_only) check_infinite_invariant(polytope, inst.p());
        const HPoint* outside = nullptr;
        for (const HPoint& v : polytope.vertices()) {
            if (visible_only && classify(v) != PointClass::Visible) continue;
            if (!member(inst, setup.anchor, project(v), target)) {
                outside = &v;
                break;
            }
        }
        if (!outside) break;

        BoundaryPoint bp = boundary_point(inst, setup.anchor, project(*outside),
                                          setup.ybar, target);
        HHalfspace h =
            cut_halfspace(inst, setup.anchor, bp.point, setup.ybar, target);
        if (side(h, *outside) >= 0)
            throw InternalError("outer: cut fails to separate chosen vertex");
        polytope = cut(polytope, h);
        ++stats.iterations;
        stats.vertex_counts.push_back(polytope.vertices().size());
    }

    SolveResult result;
    std::vector<Vec> visible_vertices;
    for (const HPoint& v : polytope.vertices())
        if (classify(v) == PointClass::Visible)
            visible_vertices.push_back(project(v));
    result.efficient_extreme_outcomes =
        target == TargetSet::Ysquare
            ? efficient_filter(visible_vertices, setup.anchor.y_hat)
            : visible_vertices;
    std::sort(result.efficient_extreme_outcomes.begin(),
              result.efficient_extreme_outcomes.end(), lex_less);

    stats.final_vertices = polytope.vertices().size();
    stats.final_non_efficient =
        stats.final_vertices - result.efficient_extreme_outcomes.size();
    stats.lp_solves = lp_tally().solves.load() - solves0;
    stats.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    result.stats = std::move(stats);
    result.final_polytope = std::move(polytope);
    return result;
}

}  // namespace detail

// Algorithm over Y^[] in Euclidean space.
inline SolveResult run_euclidean(const MolpInstance& inst) {
    return detail::drive(inst, TargetSet::Ysquare, /*visible_only=*/false);
}

// Algorithm over T^<= in oriented projective space.
inline SolveResult run_projective(const MolpInstance& inst) {
    return detail::drive(inst, TargetSet::Yleq, /*visible_only=*/true);
}

}  // namespace molp

#endif  // MOLP_OUTER_HPP

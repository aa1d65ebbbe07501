#ifndef MOLP_MOLP_HPP
#define MOLP_MOLP_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "molp/errors.hpp"
#include "molp/lp.hpp"
#include "molp/projective.hpp"
#include "molp/rational.hpp"

// Multiobjective LP instance model and the shared algorithmic steps of
// the outer approximation drivers: anchor and ideal points, membership
// tests for the target sets, efficiency checks, exact boundary line
// search and supporting-cut generation.

namespace molp {

// max Cx over X = {x | Ax = b, x >= 0}
struct MolpInstance {
    Mat C;  // p x n objective matrix
    Mat A;  // m x n
    Vec b;  // m

    std::size_t p() const { return C.size(); }
    std::size_t n() const { return C.empty() ? 0 : C[0].size(); }
    std::size_t m() const { return A.size(); }
};

struct AnchorData {
    Vec y_hat;  // strictly dominated by every outcome
    Vec y_max;  // componentwise objective maxima
    Vec y_min;  // componentwise objective minima
};

// Y^<= is the set of points dominated by some outcome; Y^[] additionally
// clips from below at the anchor point.
enum class TargetSet { Yleq, Ysquare };

inline void check_dimensions(const MolpInstance& inst) {
    if (inst.C.empty() || inst.C[0].empty())
        throw InvalidInstance("instance: empty objective matrix");
    const std::size_t n = inst.n();
    for (const Vec& row : inst.C)
        if (row.size() != n) throw InvalidInstance("instance: ragged C");
    for (const Vec& row : inst.A)
        if (row.size() != n)
            throw InvalidInstance("instance: A width differs from C");
    if (inst.b.size() != inst.m())
        throw InvalidInstance("instance: b size differs from row count of A");
}

// Checks the standing assumptions (X nonempty and bounded) with one
// feasibility LP and n boundedness LPs.  Returns a feasible point.
inline Vec validate_instance(const MolpInstance& inst) {
    check_dimensions(inst);
    LpResult feas = solve(standard_lp(Vec(inst.n(), Rat(0)), inst.A, inst.b));
    if (feas.status != LpStatus::Optimal)
        throw InvalidInstance("instance: feasible set X is empty");
    for (std::size_t j = 0; j < inst.n(); ++j) {
        Vec c(inst.n(), Rat(0));
        c[j] = 1;
        if (solve(standard_lp(std::move(c), inst.A, inst.b)).status ==
            LpStatus::Unbounded)
            throw InvalidInstance("instance: feasible set X is unbounded");
    }
    return feas.primal;
}

namespace detail {

inline Vec objective_extreme(const MolpInstance& inst, bool maximise) {
    Vec out(inst.p());
    for (std::size_t i = 0; i < inst.p(); ++i) {
        Vec c = inst.C[i];
        if (!maximise)
            for (Rat& q : c) q = -q;
        LpResult res = solve(standard_lp(std::move(c), inst.A, inst.b));
        if (res.status != LpStatus::Optimal)
            throw InvalidInstance("instance: objective LP not optimal");
        out[i] = maximise ? res.value : -res.value;
    }
    return out;
}

}  // namespace detail

inline Vec ideal_point(const MolpInstance& inst) {
    return detail::objective_extreme(inst, true);
}

// y_hat_i = y_min_i - 1: strictly dominated by all of Y^= by construction.
inline AnchorData anchor_point(const MolpInstance& inst) {
    AnchorData a;
    a.y_max = ideal_point(inst);
    a.y_min = detail::objective_extreme(inst, false);
    a.y_hat = a.y_min;
    for (Rat& q : a.y_hat) q -= 1;
    return a;
}

inline bool member(const MolpInstance& inst, const AnchorData& anchor,
                   const Vec& z, TargetSet target) {
    if (z.size() != inst.p())
        throw DimensionError("member: point dimension differs from p");
    if (target == TargetSet::Ysquare)
        for (std::size_t i = 0; i < inst.p(); ++i)
            if (z[i] < anchor.y_hat[i]) return false;
    LinearProgram lp = standard_lp(Vec(inst.n(), Rat(0)), inst.A, inst.b);
    for (std::size_t i = 0; i < inst.p(); ++i)
        lp.add_row(inst.C[i], Relation::Ge, z[i]);
    return solve(lp).status == LpStatus::Optimal;
}

// y is efficient iff no feasible outcome dominates it: the surplus LP
// max sum(Cx - y) over {Cx >= y} has optimum exactly 0.
inline bool efficiency_check(const MolpInstance& inst, const AnchorData& anchor,
                             const Vec& y) {
    if (!member(inst, anchor, y, TargetSet::Yleq))
        throw NotInOutcomeSet("efficiency_check: point is not in Y^<=");
    Vec c(inst.n(), Rat(0));
    for (std::size_t i = 0; i < inst.p(); ++i)
        for (std::size_t j = 0; j < inst.n(); ++j) c[j] += inst.C[i][j];
    LinearProgram lp = standard_lp(std::move(c), inst.A, inst.b);
    Rat offset = 0;
    for (std::size_t i = 0; i < inst.p(); ++i) {
        lp.add_row(inst.C[i], Relation::Ge, y[i]);
        offset += y[i];
    }
    LpResult res = solve(lp);
    if (res.status != LpStatus::Optimal)
        throw InternalError("efficiency_check: surplus LP not optimal");
    return res.value == offset;
}

// The interior reference point for boundary search: y_hat is interior to
// Y^<=, and for Y^[] the midpoint of y_hat and any outcome is interior.
inline Vec interior_reference(const MolpInstance& inst, const AnchorData& anchor,
                              const Vec& feasible_x, TargetSet target) {
    if (target == TargetSet::Yleq) return anchor.y_hat;
    Vec y0 = mat_vec(inst.C, feasible_x);
    Vec ybar(inst.p());
    for (std::size_t i = 0; i < inst.p(); ++i)
        ybar[i] = (anchor.y_hat[i] + y0[i]) / 2;
    return ybar;
}

namespace detail {

struct RayScan {
    Rat lambda;       // optimal step along the ray
    Vec obj_duals;    // multipliers of the p coupling rows Cx >= ...
    Vec box_duals;    // multipliers of the p anchor-box rows (Ysquare)
    Rat eq_offset;    // b-weighted equality duals
};

// max lambda s.t. ybar + lambda*delta stays in the target set, with
// lambda capped at `cap`.  The duals certify a supporting half-space
// whenever the optimum is interior to the cap.
inline RayScan ray_scan(const MolpInstance& inst, const AnchorData& anchor,
                        const Vec& ybar, const Vec& delta, TargetSet target,
                        const Rat& cap) {
    const std::size_t n = inst.n(), p = inst.p();
    LinearProgram lp;
    lp.num_vars = n + 1;  // x plus the step variable
    lp.objective.assign(n + 1, Rat(0));
    lp.objective[n] = 1;
    for (std::size_t k = 0; k < inst.m(); ++k) {
        Vec row = inst.A[k];
        row.emplace_back(0);
        lp.add_row(std::move(row), Relation::Eq, inst.b[k]);
    }
    for (std::size_t i = 0; i < p; ++i) {
        Vec row = inst.C[i];
        row.push_back(-delta[i]);
        lp.add_row(std::move(row), Relation::Ge, ybar[i]);
    }
    if (target == TargetSet::Ysquare) {
        for (std::size_t i = 0; i < p; ++i) {
            Vec row(n + 1, Rat(0));
            row[n] = delta[i];
            lp.add_row(std::move(row), Relation::Ge,
                       anchor.y_hat[i] - ybar[i]);
        }
    }
    Vec cap_row(n + 1, Rat(0));
    cap_row[n] = 1;
    lp.add_row(std::move(cap_row), Relation::Le, cap);

    LpResult res = solve(lp);
    if (res.status != LpStatus::Optimal)
        throw BadSegment("ray scan: reference point is outside the target");

    RayScan out;
    out.lambda = res.value;
    out.eq_offset = 0;
    for (std::size_t k = 0; k < inst.m(); ++k)
        out.eq_offset += res.dual[k] * inst.b[k];
    for (std::size_t i = 0; i < p; ++i)
        out.obj_duals.push_back(-res.dual[inst.m() + i]);  // now >= 0
    if (target == TargetSet::Ysquare)
        for (std::size_t i = 0; i < p; ++i)
            out.box_duals.push_back(-res.dual[inst.m() + p + i]);
    else
        out.box_duals.assign(p, Rat(0));
    return out;
}

}  // namespace detail

struct BoundaryPoint {
    Vec point;
    Rat lambda;
};

// Exact line search: the farthest point of [ybar, v] inside the target.
// Requires v outside the target and ybar strictly interior.
inline BoundaryPoint boundary_point(const MolpInstance& inst,
                                    const AnchorData& anchor, const Vec& v,
                                    const Vec& ybar, TargetSet target) {
    if (member(inst, anchor, v, target))
        throw BadSegment("boundary_point: v is already in the target");
    Vec delta(inst.p());
    for (std::size_t i = 0; i < inst.p(); ++i) delta[i] = v[i] - ybar[i];
    detail::RayScan scan =
        detail::ray_scan(inst, anchor, ybar, delta, target, Rat(1));
    if (scan.lambda <= 0 || scan.lambda >= 1)
        throw BadSegment("boundary_point: reference point is not interior");
    BoundaryPoint out;
    out.lambda = scan.lambda;
    out.point.resize(inst.p());
    for (std::size_t i = 0; i < inst.p(); ++i)
        out.point[i] = ybar[i] + scan.lambda * delta[i];
    return out;
}

// A half-space containing the whole target set with x on its bounding
// hyperplane, in homogeneous objective-space coefficients (-g, g·x) so
// that the target satisfies g·y <= g·x.  The normal comes from the dual
// multipliers of a ray-scan LP from the interior reference through x,
// which guarantees that the half-space strictly separates any point
// beyond x on that ray.
inline HHalfspace cut_halfspace(const MolpInstance& inst,
                                const AnchorData& anchor, const Vec& x,
                                const Vec& ybar, TargetSet target) {
    const std::size_t p = inst.p();
    Vec delta(p);
    bool zero = true;
    for (std::size_t i = 0; i < p; ++i) {
        delta[i] = x[i] - ybar[i];
        if (delta[i] != 0) zero = false;
    }
    if (zero) throw NotOnBoundary("cut_halfspace: x equals the reference point");

    detail::RayScan scan;
    try {
        scan = detail::ray_scan(inst, anchor, ybar, delta, target, Rat(2));
    } catch (const BadSegment&) {
        throw NotOnBoundary("cut_halfspace: reference point outside target");
    }
    if (scan.lambda != 1)
        throw NotOnBoundary(scan.lambda < 1
                                ? "cut_halfspace: x lies outside the target"
                                : "cut_halfspace: x is interior to the target");

    // g·y <= beta combines the Y^<= support  w·y <= u^T b  with the
    // anchor-box faces  -y_i <= -y_hat_i  weighted by the box duals.
    Vec coeffs(p + 1);
    Rat beta = scan.eq_offset;
    bool normal_zero = true;
    for (std::size_t i = 0; i < p; ++i) {
        Rat g = scan.obj_duals[i] - scan.box_duals[i];
        beta -= scan.box_duals[i] * anchor.y_hat[i];
        coeffs[i] = -g;
        if (g != 0) normal_zero = false;
    }
    coeffs[p] = beta;
    if (normal_zero) {
        // vacuous dual (possible only off the ray-scan path); fall back
        // to a box face through x
        if (target == TargetSet::Ysquare)
            for (std::size_t i = 0; i < p; ++i)
                if (x[i] == anchor.y_hat[i]) {
                    Vec face(p + 1, Rat(0));
                    face[i] = 1;
                    face[p] = -anchor.y_hat[i];
                    return HHalfspace(std::move(face));
                }
        throw InternalError("cut_halfspace: dual produced no supporting normal");
    }
    HHalfspace h{std::move(coeffs)};
    if (side(h, lift(x)) != 0)
        throw InternalError("cut_halfspace: x is not on the cut boundary");
    return h;
}

// The efficient vertices of Y^[] are exactly those that strictly
// dominate the anchor point in every coordinate.
inline std::vector<Vec> efficient_filter(const std::vector<Vec>& vertices,
                                         const Vec& y_hat) {
    std::vector<Vec> out;
    for (const Vec& v : vertices) {
        bool keep = true;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] <= y_hat[i]) { keep = false; break; }
        if (keep) out.push_back(v);
    }
    return out;
}

}  // namespace molp

#endif  // MOLP_MOLP_HPP

#ifndef MOLP_CYCLICGEN_HPP
#define MOLP_CYCLICGEN_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "molp/dd.hpp"
#include "molp/errors.hpp"
#include "molp/lp.hpp"
#include "molp/molp.hpp"
#include "molp/rational.hpp"

// Worst-case instance generator: dual cyclic polytopes (polar duals of
// cyclic polytopes on the moment curve) and their embedding as MOLP
// outcome sets inside the hyperplane sum(y) = 1.

namespace molp {
namespace cyclicgen {

// Exact vertex count of the (d,k) dual cyclic polytope:
// C(k - floor((d+1)/2), k-d) + C(k - floor((d+2)/2), k-d).
inline unsigned long long count_dual_cyclic_vertices(std::size_t d,
                                                     std::size_t k) {
    if (d < 2 || k <= d)
        throw InvalidSpec("dual cyclic: need 2 <= d < k");
    mpz_class b1, b2;
    mpz_bin_uiui(b1.get_mpz_t(), k - (d + 1) / 2, k - d);
    mpz_bin_uiui(b2.get_mpz_t(), k - (d + 2) / 2, k - d);
    mpz_class total = b1 + b2;
    if (!total.fits_ulong_p())
        throw BudgetExceeded("dual cyclic: vertex count overflows");
    return total.get_ui();
}

namespace detail {

// max (or min) of coordinate j over {y | rows·y <= 1}, with y free
// (split into positive and negative parts for the solver).
inline Rat coordinate_extreme(const Mat& normals, std::size_t d, std::size_t j,
                              bool maximise) {
    LinearProgram lp;
    lp.num_vars = 2 * d;
    lp.objective.assign(2 * d, Rat(0));
    lp.objective[j] = maximise ? 1 : -1;
    lp.objective[d + j] = maximise ? -1 : 1;
    for (const Vec& v : normals) {
        Vec row(2 * d);
        for (std::size_t c = 0; c < d; ++c) {
            row[c] = v[c];
            row[d + c] = -v[c];
        }
        lp.add_row(std::move(row), Relation::Le, Rat(1));
    }
    LpResult res = solve(lp);
    if (res.status != LpStatus::Optimal)
        throw InternalError("dual cyclic: polar dual is unbounded");
    return maximise ? res.value : -res.value;
}

}  // namespace detail

// Builds the (d,k) dual cyclic polytope: cyclic polytope on the moment
// curve at t = 1..k, centroid moved to the origin, then polarised into
// the half-space system {v_i . y <= 1} and vertex-enumerated.
inline DDPolytope dual_cyclic_polytope(std::size_t d, std::size_t k) {
    unsigned long long expected = count_dual_cyclic_vertices(d, k);

    Mat points(k, Vec(d));
    for (std::size_t t = 1; t <= k; ++t) {
        Rat power = 1;
        for (std::size_t c = 0; c < d; ++c) {
            power *= Rat(static_cast<long>(t));
            points[t - 1][c] = power;
        }
    }
    Vec centroid(d, Rat(0));
    for (const Vec& pt : points)
        for (std::size_t c = 0; c < d; ++c) centroid[c] += pt[c];
    for (Rat& q : centroid) q /= Rat(static_cast<long>(k));
    for (Vec& pt : points)
        for (std::size_t c = 0; c < d; ++c) pt[c] -= centroid[c];

    std::vector<HHalfspace> cuts;
    for (const Vec& v : points) {
        Vec h(d + 1);
        for (std::size_t c = 0; c < d; ++c) h[c] = -v[c];
        h[d] = 1;
        cuts.emplace_back(std::move(h));
    }

    Vec lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        lo[j] = detail::coordinate_extreme(points, d, j, false) - 1;
        hi[j] = detail::coordinate_extreme(points, d, j, true) + 1;
    }
    DDPolytope dual = enumerate_from_halfspaces(cuts, make_box(lo, hi));

    if (dual.vertices().size() != expected)
        throw InternalError("dual cyclic: vertex count disagrees with formula");
    // the k polar half-spaces must all be facets; the seed-box faces
    // must all be slack
    const std::size_t box_faces = 2 * d;
    for (std::size_t h = 0; h < dual.halfspaces().size(); ++h) {
        std::size_t incident = 0;
        for (std::size_t v = 0; v < dual.vertices().size(); ++v)
            if (dual.incident(v, h)) ++incident;
        bool is_box = h < box_faces;
        if (is_box ? incident != 0 : incident < d)
            throw InternalError("dual cyclic: unexpected facet structure");
    }
    return dual;
}

// Embeds a d-polytope affinely into the hyperplane sum(y) = 1 of
// (d+1)-space and realises it as the outcome set of the MOLP whose
// feasible set is the standard simplex: C's columns are the embedded
// vertices, so Y^= is exactly the embedded polytope.
inline MolpInstance embed_as_molp(const DDPolytope& polytope, std::size_t d) {
    if (d < 2) throw InvalidSpec("embed: need dimension >= 2");
    const std::size_t p = d + 1;
    const std::size_t n = polytope.vertices().size();

    MolpInstance inst;
    inst.C.assign(p, Vec(n));
    for (std::size_t j = 0; j < n; ++j) {
        Vec z = project(polytope.vertices()[j]);
        if (z.size() != d) throw InvalidSpec("embed: vertex dimension mismatch");
        // y = y0 + B z with y0 = (1/p,...,1/p) and B's columns e_i - e_{i+1}
        Vec y(p, Rat(1) / Rat(static_cast<long>(p)));
        for (std::size_t i = 0; i < d; ++i) {
            y[i] += z[i];
            y[i + 1] -= z[i];
        }
        for (std::size_t i = 0; i < p; ++i) inst.C[i][j] = y[i];
    }
    inst.A.assign(1, Vec(n, Rat(1)));
    inst.b.assign(1, Rat(1));
    return inst;
}

}  // namespace cyclicgen
}  // namespace molp

#endif  // MOLP_CYCLICGEN_HPP

#ifndef MOLP_ORACLE_HPP
#define MOLP_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "molp/errors.hpp"
#include "molp/lp.hpp"
#include "molp/molp.hpp"
#include "molp/rational.hpp"

// Brute-force ground truth at desk scale: outcome-set vertex enumeration
// from basic solutions, efficient extreme outcomes by definition, and
// the V(S) decomposition of the vertices of Y^[].

namespace molp {
namespace oracle {

namespace detail {

// Exact solve of a square rational system; nullopt when singular.
inline std::optional<Vec> solve_square(Mat a, Vec rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
    return x;
}

inline unsigned long long binomial_count(std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b.fits_ulong_p() ? b.get_ui() : ~0ull;
}

// q is extreme among the candidates iff it is not a convex combination
// of the others.
inline bool is_hull_vertex(const std::vector<Vec>& candidates,
                           std::size_t index) {
    const std::size_t p = candidates[index].size();
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (i != index) others.push_back(i);
    if (others.empty()) return true;

    LinearProgram lp;
    lp.num_vars = others.size();
    lp.objective.assign(others.size(), Rat(0));
    for (std::size_t i = 0; i < p; ++i) {
        Vec row;
        for (std::size_t o : others) row.push_back(candidates[o][i]);
        lp.add_row(std::move(row), Relation::Eq, candidates[index][i]);
    }
    lp.add_row(Vec(others.size(), Rat(1)), Relation::Eq, Rat(1));
    return solve(lp).status == LpStatus::Infeasible;
}

}  // namespace detail

inline constexpr unsigned long long kDefaultBudget = 200000;

// All vertices of the outcome set Y^=, from basic solutions of X mapped
// through C and filtered down to convex hull vertices.
inline std::vector<Vec> enumerate_outcome_vertices(
    const MolpInstance& inst, unsigned long long budget = kDefaultBudget) {
    check_dimensions(inst);
    const std::size_t n = inst.n(), m = inst.m();
    if (m > n || detail::binomial_count(n, m) > budget)
        throw BudgetExceeded("oracle: too many column subsets");

    std::vector<Vec> candidates;
    std::vector<std::size_t> cols(m);
    for (std::size_t i = 0; i < m; ++i) cols[i] = i;
    for (;;) {
        Mat square(m, Vec(m));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                square[r][c] = inst.A[r][cols[c]];
        if (auto z = detail::solve_square(std::move(square), inst.b)) {
            bool nonneg = true;
            for (const Rat& q : *z)
                if (q < 0) { nonneg = false; break; }
            if (nonneg) {
                Vec x(n, Rat(0));
                for (std::size_t c = 0; c < m; ++c) x[cols[c]] = (*z)[c];
                candidates.push_back(mat_vec(inst.C, x));
            }
        }
        // next m-combination of {0..n-1}
        std::size_t i = m;
        while (i > 0 && cols[i - 1] == n - m + i - 1) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < m; ++j) cols[j] = cols[j - 1] + 1;
    }
    if (m == 0) candidates.push_back(Vec(inst.p(), Rat(0)));

    std::sort(candidates.begin(), candidates.end(), lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::vector<Vec> vertices;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (detail::is_hull_vertex(candidates, i))
            vertices.push_back(candidates[i]);
    return vertices;
}

inline std::vector<Vec> brute_efficient_extremes(
    const MolpInstance& inst, unsigned long long budget = kDefaultBudget) {
    AnchorData anchor = anchor_point(inst);
    std::vector<Vec> out;
    for (const Vec& y : enumerate_outcome_vertices(inst, budget))
        if (efficiency_check(inst, anchor, y)) out.push_back(y);
    return out;
}

// V(S): efficient extreme outcomes of the sub-problem on the objective
// rows in S, with the deleted coordinates fixed at the anchor values.
inline std::vector<Vec> vset(const MolpInstance& inst,
                             const std::vector<std::size_t>& s, const Vec& y_hat,
                             unsigned long long budget = kDefaultBudget) {
    if (s.empty()) return {y_hat};
    MolpInstance sub;
    sub.A = inst.A;
    sub.b = inst.b;
    for (std::size_t i : s) {
        if (i >= inst.p()) throw IndexError("vset: objective index out of range");
        sub.C.push_back(inst.C[i]);
    }
    std::vector<Vec> out;
    for (const Vec& small : brute_efficient_extremes(sub, budget)) {
        Vec full = y_hat;
        for (std::size_t k = 0; k < s.size(); ++k) full[s[k]] = small[k];
        out.push_back(std::move(full));
    }
    return out;
}

// Subsets of {0..p-1} by size then lexicographically.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << p); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < p; ++i)
            if ((mask >> i) & 1) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) {
                         return a.size() != b.size() ? a.size() < b.size()
                                                     : a < b;
                     });
    return out;
}

// Union of the V(S) over all S, asserting pairwise disjointness on the
// way.  By the decomposition theorem this is the vertex set of Y^[].
inline std::vector<Vec> vsquare_vertices(
    const MolpInstance& inst, unsigned long long budget = kDefaultBudget) {
    AnchorData anchor = anchor_point(inst);
    std::vector<Vec> all;
    for (const auto& s : index_subsets(inst.p())) {
        for (Vec& v : vset(inst, s, anchor.y_hat, budget)) {
            if (std::find(all.begin(), all.end(), v) != all.end())
                throw InternalError("vsquare: V(S) sets are not disjoint");
            all.push_back(std::move(v));
        }
    }
    std::sort(all.begin(), all.end(), lex_less);
    return all;
}

}  // namespace oracle
}  // namespace molp

#endif  // MOLP_ORACLE_HPP

#ifndef MOLP_LP_HPP
#define MOLP_LP_HPP

#include <atomic>
#include <cstddef>
#include <utility>
#include <vector>

#include "molp/errors.hpp"
#include "molp/rational.hpp"

// Exact rational linear programming: maximise c·x subject to a mix of
// equality and inequality rows plus x >= 0.  Two-phase dense simplex
// with Bland's pivoting rule, so termination is guaranteed and results
// are deterministic.  Every Optimal result carries a dual vector and is
// checked against the four exact optimality certificates before being
// returned.

namespace molp {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Relation { Eq, Ge, Le };

struct LpRow {
    Vec coeffs;
    Relation rel = Relation::Eq;
    Rat rhs;
};

struct LinearProgram {
    std::size_t num_vars = 0;
    Vec objective;  // maximised; size num_vars
    std::vector<LpRow> rows;

    void add_row(Vec coeffs, Relation rel, Rat rhs) {
        rows.push_back(LpRow{std::move(coeffs), rel, std::move(rhs)});
    }
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Vec primal;  // size num_vars when Optimal
    Rat value;
    Vec dual;    // one multiplier per row when Optimal
};

// Running totals across all solves in the process; the drivers snapshot
// these for their per-run statistics and the tests use them to confirm
// that every Optimal solve was certified.
struct LpTally {
    std::atomic<long long> solves{0};
    std::atomic<long long> optimal{0};
    std::atomic<long long> certified{0};
};

inline LpTally& lp_tally() {
    static LpTally tally;
    return tally;
}

// max c·x subject to Ax = b, x >= 0
inline LinearProgram standard_lp(Vec c, const Mat& a, const Vec& b) {
    LinearProgram lp;
    lp.num_vars = c.size();
    lp.objective = std::move(c);
    for (std::size_t i = 0; i < a.size(); ++i)
        lp.add_row(a[i], Relation::Eq, b[i]);
    return lp;
}

// Exact optimality certificates: primal feasibility, dual feasibility
// (with the sign conventions y free / y <= 0 / y >= 0 for Eq / Ge / Le
// rows), strong duality, and complementary slackness.
inline void check_certificates(const LinearProgram& lp, const LpResult& res) {
    if (res.status != LpStatus::Optimal)
        throw NoDualAvailable("check_certificates: result is not Optimal");
    const std::size_t n = lp.num_vars;
    if (res.primal.size() != n || res.dual.size() != lp.rows.size())
        throw InternalError("lp certificate: result dimensions inconsistent");

    for (std::size_t j = 0; j < n; ++j)
        if (res.primal[j] < 0)
            throw InternalError("lp certificate: negative primal variable");
    for (std::size_t k = 0; k < lp.rows.size(); ++k) {
        const LpRow& row = lp.rows[k];
        Rat lhs = dot(row.coeffs, res.primal);
        bool ok = row.rel == Relation::Eq   ? lhs == row.rhs
                  : row.rel == Relation::Ge ? lhs >= row.rhs
                                            : lhs <= row.rhs;
        if (!ok) throw InternalError("lp certificate: primal infeasible row");
        if (row.rel == Relation::Ge && res.dual[k] > 0)
            throw InternalError("lp certificate: Ge dual must be <= 0");
        if (row.rel == Relation::Le && res.dual[k] < 0)
            throw InternalError("lp certificate: Le dual must be >= 0");
        // y_k != 0 on a slack inequality row violates slackness
        if (row.rel != Relation::Eq && res.dual[k] != 0 && lhs != row.rhs)
            throw InternalError("lp certificate: row slackness violated");
    }
    Rat dual_obj = 0;
    for (std::size_t k = 0; k < lp.rows.size(); ++k)
        dual_obj += res.dual[k] * lp.rows[k].rhs;
    if (dual_obj != res.value)
        throw InternalError("lp certificate: strong duality violated");
    if (dot(lp.objective, res.primal) != res.value)
        throw InternalError("lp certificate: objective value mismatch");
    for (std::size_t j = 0; j < n; ++j) {
        Rat reduced = -lp.objective[j];
        for (std::size_t k = 0; k < lp.rows.size(); ++k)
            reduced += res.dual[k] * lp.rows[k].coeffs[j];
        if (reduced < 0)
            throw InternalError("lp certificate: dual infeasible column");
        if (res.primal[j] > 0 && reduced != 0)
            throw InternalError("lp certificate: column slackness violated");
    }
    ++lp_tally().certified;
}

namespace detail {

class SimplexTableau {
public:
    explicit SimplexTableau(const LinearProgram& lp) : lp_(lp) {
        const std::size_t m = lp.rows.size();
        n_struct_ = lp.num_vars;
        n_slack_ = 0;
        for (const LpRow& row : lp.rows)
            if (row.rel != Relation::Eq) ++n_slack_;
        art_base_ = n_struct_ + n_slack_;
        n_total_ = art_base_ + m;

        table_.assign(m, Vec(n_total_, Rat(0)));
        rhs_.assign(m, Rat(0));
        basis_.assign(m, 0);
        flip_.assign(m, false);

        std::size_t slack = n_struct_;
        for (std::size_t k = 0; k < m; ++k) {
            const LpRow& row = lp.rows[k];
            if (row.coeffs.size() != n_struct_)
                throw DimensionError("lp: row width differs from num_vars");
            for (std::size_t j = 0; j < n_struct_; ++j)
                table_[k][j] = row.coeffs[j];
            if (row.rel == Relation::Ge)
                table_[k][slack++] = -1;
            else if (row.rel == Relation::Le)
                table_[k][slack++] = 1;
            rhs_[k] = row.rhs;
            if (rhs_[k] < 0) {
                flip_[k] = true;
                rhs_[k] = -rhs_[k];
                for (std::size_t j = 0; j < n_total_; ++j)
                    table_[k][j] = -table_[k][j];
            }
            table_[k][art_base_ + k] = 1;
            basis_[k] = art_base_ + k;
        }
    }

    LpResult solve() {
        ++lp_tally().solves;
        // Phase 1: max -sum(artificials)
        Vec cost1(n_total_, Rat(0));
        for (std::size_t k = 0; k < rows(); ++k) cost1[art_base_ + k] = -1;
        run(cost1, /*allow_artificial=*/true);
        if (objective_value(cost1) != 0) {
            LpResult res;
            res.status = LpStatus::Infeasible;
            return res;
        }
        drive_out_artificials();

        // Phase 2: original objective, artificial columns barred
        Vec cost2(n_total_, Rat(0));
        for (std::size_t j = 0; j < n_struct_; ++j) cost2[j] = lp_.objective[j];
        if (!run(cost2, /*allow_artificial=*/false)) {
            LpResult res;
            res.status = LpStatus::Unbounded;
            return res;
        }

        LpResult res;
        res.status = LpStatus::Optimal;
        res.primal.assign(n_struct_, Rat(0));
        for (std::size_t k = 0; k < rows(); ++k)
            if (basis_[k] < n_struct_) res.primal[basis_[k]] = rhs_[k];
        res.value = objective_value(cost2);
        res.dual = extract_dual(cost2);
        ++lp_tally().optimal;
        check_certificates(lp_, res);
        return res;
    }

private:
    std::size_t rows() const { return table_.size(); }

    Rat objective_value(const Vec& cost) const {
        Rat v = 0;
        for (std::size_t k = 0; k < rows(); ++k)
            v += cost[basis_[k]] * rhs_[k];
        return v;
    }

    Rat reduced_cost(const Vec& cost, std::size_t j) const {
        Rat z = cost[j];
        for (std::size_t k = 0; k < rows(); ++k)
            z -= cost[basis_[k]] * table_[k][j];
        return z;
    }

    void pivot(std::size_t r, std::size_t j) {
        Rat piv = table_[r][j];
        for (std::size_t c = 0; c < n_total_; ++c) table_[r][c] /= piv;
        rhs_[r] /= piv;
        for (std::size_t k = 0; k < rows(); ++k) {
            if (k == r || table_[k][j] == 0) continue;
            Rat f = table_[k][j];
            for (std::size_t c = 0; c < n_total_; ++c)
                table_[k][c] -= f * table_[r][c];
            rhs_[k] -= f * rhs_[r];
        }
        basis_[r] = j;
    }

    // Bland's rule: smallest-index entering column with positive reduced
    // cost, smallest-basis-index leaving row among ratio ties.
    // Returns false on unboundedness.
    bool run(const Vec& cost, bool allow_artificial) {
        const std::size_t limit = allow_artificial ? n_total_ : art_base_;
        for (;;) {
            std::size_t enter = n_total_;
            for (std::size_t j = 0; j < limit; ++j) {
                if (reduced_cost(cost, j) > 0) { enter = j; break; }
            }
            if (enter == n_total_) return true;

            std::size_t leave = rows();
            Rat best_ratio;
            for (std::size_t k = 0; k < rows(); ++k) {
                if (table_[k][enter] <= 0) continue;
                Rat ratio = rhs_[k] / table_[k][enter];
                if (leave == rows() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[k] < basis_[leave])) {
                    leave = k;
                    best_ratio = ratio;
                }
            }
            if (leave == rows()) return false;
            pivot(leave, enter);
        }
    }

    // After phase 1, pivot basic artificials (all at value 0) onto any
    // non-artificial column.  A row with no such nonzero entry is
    // redundant and stays parked on its artificial harmlessly.
    void drive_out_artificials() {
        for (std::size_t k = 0; k < rows(); ++k) {
            if (basis_[k] < art_base_) continue;
            for (std::size_t j = 0; j < art_base_; ++j) {
                if (table_[k][j] != 0) { pivot(k, j); break; }
            }
        }
    }

    // y^T = c_B B^{-1}; the artificial columns hold B^{-1} since they
    // began as the identity.  Row sign flips are undone on the way out.
    Vec extract_dual(const Vec& cost) const {
        Vec y(rows(), Rat(0));
        for (std::size_t r = 0; r < rows(); ++r) {
            Rat v = 0;
            for (std::size_t k = 0; k < rows(); ++k)
                v += cost[basis_[k]] * table_[k][art_base_ + r];
            y[r] = flip_[r] ? -v : v;
        }
        return y;
    }

    const LinearProgram& lp_;
    std::size_t n_struct_ = 0, n_slack_ = 0, art_base_ = 0, n_total_ = 0;
    Mat table_;
    Vec rhs_;
    std::vector<std::size_t> basis_;
    std::vector<bool> flip_;
};

}  // namespace detail

inline LpResult solve(const LinearProgram& lp) {
    detail::SimplexTableau tableau(lp);
    return tableau.solve();
}

inline Vec dual_witness(const LinearProgram&, const LpResult& result) {
    if (result.status != LpStatus::Optimal)
        throw NoDualAvailable("dual_witness: no dual for non-Optimal result");
    return result.dual;
}

}  // namespace molp

#endif  // MOLP_LP_HPP

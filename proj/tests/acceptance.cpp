// Acceptance gate: one pass/fail line per criterion, exit 0 only if all
// pass.  All comparisons are exact rational equality.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "molp/cyclicgen.hpp"
#include "molp/io.hpp"
#include "molp/oracle.hpp"
#include "molp/outer.hpp"

using namespace molp;

namespace {

struct Named {
    std::string name;
    MolpInstance inst;
};

Vec rv(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

MolpInstance simplex2() {
    MolpInstance inst;
    inst.C = {rv({1, 0, 0}), rv({0, 1, 0})};
    inst.A = {rv({1, 1, 1})};
    inst.b = rv({1});
    return inst;
}

// Random bounded instances: b = A x_hat for a random nonnegative x_hat
// keeps X nonempty, and the all-ones row keeps it bounded.
std::vector<Named> random_instances() {
    std::mt19937 rng(20240823);
    std::uniform_int_distribution<long> coef(-2, 3);
    std::uniform_int_distribution<long> xval(0, 2);
    std::uniform_int_distribution<std::size_t> psize(2, 3), nsize(3, 7),
        msize(1, 3);
    std::vector<Named> out;
    for (int t = 0; t < 6; ++t) {
        MolpInstance inst;
        std::size_t p = psize(rng), n = nsize(rng), m = msize(rng);
        Vec x_hat(n);
        for (std::size_t j = 0; j < n; ++j) x_hat[j] = xval(rng);
        x_hat[0] += 1;
        for (std::size_t i = 0; i < p; ++i) {
            Vec row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = coef(rng);
            inst.C.push_back(std::move(row));
        }
        for (std::size_t i = 0; i + 1 < m; ++i) {
            Vec row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = coef(rng);
            inst.A.push_back(std::move(row));
        }
        inst.A.push_back(Vec(n, Rat(1)));
        inst.b = mat_vec(inst.A, x_hat);
        out.push_back({"random-" + std::to_string(t), std::move(inst)});
    }
    return out;
}

std::vector<Named> instance_suite() {
    std::vector<Named> out;
    out.push_back({"simplex2", simplex2()});
    for (auto [d, k] : {std::pair<std::size_t, std::size_t>{2, 5},
                        {2, 6},
                        {2, 7},
                        {2, 8},
                        {3, 5},
                        {3, 6}}) {
        std::string name =
            "dual-cyclic-" + std::to_string(d) + "-" + std::to_string(k);
        out.push_back({name, cyclicgen::embed_as_molp(
                                 cyclicgen::dual_cyclic_polytope(d, k), d)});
    }
    for (Named& r : random_instances()) out.push_back(std::move(r));
    return out;
}

struct SolvedInstance {
    Named named;
    SolveResult projective;
    SolveResult euclidean;
    std::vector<Vec> brute;
};

// naive vertex oracle: intersect every d-subset of bounding hyperplanes
std::vector<HPoint> subset_vertices(const std::vector<HHalfspace>& halfspaces,
                                    std::size_t d) {
    std::vector<HPoint> out;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    for (;;) {
        Mat a(d, Vec(d));
        Vec rhs(d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c)
                a[r][c] = halfspaces[idx[r]].coeffs()[c];
            rhs[r] = -halfspaces[idx[r]].coeffs()[d];
        }
        if (auto x = oracle::detail::solve_square(std::move(a), std::move(rhs))) {
            bool inside = true;
            for (const HHalfspace& h : halfspaces)
                if (side(h, lift(*x)) < 0) { inside = false; break; }
            if (inside) out.push_back(lift(*x));
        }
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == halfspaces.size() - d + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DDPolytope simplex_seed(std::size_t d, long scale) {
    std::vector<HPoint> verts;
    verts.push_back(lift(Vec(d, Rat(0))));
    for (std::size_t i = 0; i < d; ++i) {
        Vec v(d, Rat(0));
        v[i] = scale;
        verts.push_back(lift(v));
    }
    std::vector<HHalfspace> hs;
    for (std::size_t i = 0; i < d; ++i) {
        Vec h(d + 1, Rat(0));
        h[i] = 1;
        hs.emplace_back(std::move(h));
    }
    Vec diag(d + 1, Rat(-1));
    diag[d] = scale;
    hs.emplace_back(std::move(diag));
    Vec w(d + 1, Rat(0));
    w[d] = 1;
    return DDPolytope(std::move(verts), std::move(hs), HHalfspace(std::move(w)));
}

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL");
    if (!ok) {
        std::cout << " (" << detail << ")";
        ++failures;
    }
    std::cout << "\n";
}

}  // namespace

int main() {
    long long solves0 = lp_tally().solves.load();
    long long optimal0 = lp_tally().optimal.load();
    long long certified0 = lp_tally().certified.load();

    std::vector<SolvedInstance> solved;
    for (Named& named : instance_suite()) {
        SolvedInstance s;
        s.projective = run_projective(named.inst);
        s.euclidean = run_euclidean(named.inst);
        s.brute = oracle::brute_efficient_extremes(named.inst);
        std::sort(s.brute.begin(), s.brute.end(), lex_less);
        s.named = std::move(named);
        solved.push_back(std::move(s));
    }

    // 1: all three algorithms agree exactly on every instance
    {
        std::string bad;
        for (const SolvedInstance& s : solved)
            if (s.projective.efficient_extreme_outcomes != s.brute ||
                s.euclidean.efficient_extreme_outcomes != s.brute)
                bad += s.named.name + " ";
        report(1, solved.size() >= 11 && bad.empty(),
               bad.empty() ? "fewer than 11 instances" : "disagree on: " + bad);
    }

    // 2: the projective polytope's only non-efficient vertices are the p
    // canonical vertices at infinity
    {
        std::string bad;
        for (const SolvedInstance& s : solved) {
            const std::size_t p = s.named.inst.p();
            std::vector<HPoint> infinite, expected;
            std::size_t visible = 0;
            for (const HPoint& v : s.projective.final_polytope->vertices()) {
                if (classify(v) == PointClass::Infinite)
                    infinite.push_back(v);
                else if (classify(v) == PointClass::Visible)
                    ++visible;
                else
                    infinite.push_back(v);  // invisible: instant failure
            }
            for (std::size_t i = 0; i < p; ++i) {
                Vec e(p + 1, Rat(0));
                e[i] = -1;
                expected.emplace_back(std::move(e));
            }
            std::sort(expected.begin(), expected.end());
            if (infinite != expected || visible != s.brute.size() ||
                s.projective.stats.final_non_efficient != p)
                bad += s.named.name + " ";
        }
        report(2, bad.empty(), "wrong T^<= structure on: " + bad);
    }

    // 3: Euclidean non-efficient vertex count >= 2^p - 1, == 3 on simplex2
    {
        std::string bad;
        for (const SolvedInstance& s : solved) {
            std::size_t lower =
                (std::size_t(1) << s.named.inst.p()) - 1;
            if (s.euclidean.stats.final_non_efficient < lower)
                bad += s.named.name + " ";
            if (s.named.name == "simplex2" &&
                s.euclidean.stats.final_non_efficient != 3)
                bad += "simplex2-exact ";
        }
        report(3, bad.empty(), "bound violated on: " + bad);
    }

    // 4: V(S) sets are disjoint and partition the vertices of Y^[]
    {
        std::string bad;
        for (const SolvedInstance& s : solved) {
            if (s.named.inst.p() > 3) continue;
            std::vector<Vec> dd;
            for (const HPoint& v : s.euclidean.final_polytope->vertices())
                dd.push_back(project(v));
            std::sort(dd.begin(), dd.end(), lex_less);
            try {
                if (oracle::vsquare_vertices(s.named.inst) != dd)
                    bad += s.named.name + " ";
            } catch (const Error&) {
                bad += s.named.name + "(disjointness) ";
            }
        }
        report(4, bad.empty(), "V(S) decomposition failed on: " + bad);
    }

    // 5: dual cyclic vertex counts against the closed-form values
    {
        bool ok = true;
        const std::size_t expected[4][3] = {
            {2, 5, 5}, {3, 6, 8}, {3, 8, 12}, {4, 8, 20}};
        for (const auto& [d, k, count] : expected) {
            if (cyclicgen::count_dual_cyclic_vertices(d, k) != count)
                ok = false;
            if (cyclicgen::dual_cyclic_polytope(d, k).vertices().size() !=
                count)
                ok = false;
        }
        report(5, ok, "vertex count formula or construction mismatch");
    }

    // 6: cut agrees with the hyperplane-subset oracle on random problems
    {
        std::mt19937 rng(20240824);
        std::uniform_int_distribution<long> coef(-3, 3);
        std::uniform_int_distribution<long> off(1, 5);
        std::uniform_int_distribution<std::size_t> dim(2, 4);
        std::uniform_int_distribution<int> ncuts(1, 4);
        int problems = 0, agreed = 0;
        while (problems < 60) {
            std::size_t d = dim(rng);
            // seeds stay at <= 8 vertices: boxes up to 3D, simplex in 4D
            DDPolytope poly = d < 4 ? make_box(Vec(d, Rat(-2)), Vec(d, Rat(2)))
                                    : simplex_seed(4, 4);
            for (int k = ncuts(rng); k-- > 0;) {
                Vec h(d + 1);
                bool zero = true;
                for (std::size_t c = 0; c < d; ++c) {
                    h[c] = coef(rng);
                    if (h[c] != 0) zero = false;
                }
                h[d] = off(rng);
                if (zero) continue;
                poly = cut(poly, HHalfspace(std::move(h)));
                ++problems;
                if (poly.vertices() == subset_vertices(poly.halfspaces(), d))
                    ++agreed;
            }
        }
        report(6, problems >= 50 && agreed == problems,
               std::to_string(problems - agreed) + " of " +
                   std::to_string(problems) + " cut problems disagree");
    }

    // 7: every Optimal LP solve in this run carried verified certificates
    {
        long long optimal = lp_tally().optimal.load() - optimal0;
        long long certified = lp_tally().certified.load() - certified0;
        long long solves = lp_tally().solves.load() - solves0;
        bool beale_ok = false;
        {
            LinearProgram lp;
            lp.num_vars = 4;
            lp.objective = {Rat(3, 4), Rat(-150), Rat(1, 50), Rat(-6)};
            lp.add_row({Rat(1, 4), Rat(-60), Rat(-1, 25), Rat(9)},
                       Relation::Le, Rat(0));
            lp.add_row({Rat(1, 2), Rat(-90), Rat(-1, 50), Rat(3)},
                       Relation::Le, Rat(0));
            lp.add_row({Rat(0), Rat(0), Rat(1), Rat(0)}, Relation::Le, Rat(1));
            LpResult res = solve(lp);
            beale_ok =
                res.status == LpStatus::Optimal && res.value == Rat(1, 20);
        }
        report(7,
               optimal > 0 && optimal == certified && solves >= optimal &&
                   beale_ok,
               "optimal=" + std::to_string(optimal) +
                   " certified=" + std::to_string(certified) +
                   (beale_ok ? "" : " degenerate LP failed"));
    }

    // 8: the CLI verify report reproduces the vertex-count contrast on
    // the dual-cyclic suite
    {
        bool ok = true;
        std::string detail;
        for (const SolvedInstance& s : solved) {
            if (s.named.name.rfind("dual-cyclic-", 0) != 0) continue;
            std::string in = "/tmp/molp_acceptance_" + s.named.name + ".molp";
            std::string out = in + ".log";
            std::ofstream(in) << io::serialize_instance(s.named.inst);
            int status = std::system(
                (std::string(MOLP_CLI_PATH) + " verify --input " + in + " > " +
                 out + " 2>&1")
                    .c_str());
            std::ifstream log(out);
            std::stringstream buf;
            buf << log.rdbuf();
            std::string text = buf.str();
            if (WEXITSTATUS(status) != 0 ||
                text.find("per-iteration vertices") == std::string::npos ||
                text.find("all checks passed") == std::string::npos) {
                ok = false;
                detail += s.named.name + " ";
            }
        }
        report(8, ok, "verify report failed on: " + detail);
    }

    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

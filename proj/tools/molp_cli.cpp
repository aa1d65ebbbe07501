// Command-line surface for the efficient-extreme-outcome solvers:
//   molp solve    --input FILE --algorithm projective|euclidean|oracle
//                 [--output FILE] [--stats FILE]
//   molp generate dual-cyclic --dimension D --facets K --output FILE
//   molp verify   --input FILE [--budget N]
//
// Exit codes: 0 ok, 1 verification mismatch, 2 input error,
// 3 invalid instance, 4 oracle budget exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "molp/cyclicgen.hpp"
#include "molp/io.hpp"
#include "molp/molp.hpp"
#include "molp/oracle.hpp"
#include "molp/outer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitInstance = 3;
constexpr int kExitBudget = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw molp::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw molp::ParseError("cannot write '" + path + "'");
    out << content;
}

std::string stats_block(const molp::RunStats& stats) {
    std::string out;
    out += "iterations " + std::to_string(stats.iterations) + "\n";
    out += "lp_solves " + std::to_string(stats.lp_solves) + "\n";
    out += "vertex_counts [";
    for (std::size_t i = 0; i < stats.vertex_counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(stats.vertex_counts[i]);
    }
    out += "]\n";
    out += "final_vertices " + std::to_string(stats.final_vertices) + "\n";
    out += "final_non_efficient " + std::to_string(stats.final_non_efficient) +
           "\n";
    out += "wall_ms " + std::to_string(stats.wall_time.count()) + "\n";
    return out;
}

molp::SolveResult run_algorithm(const molp::MolpInstance& inst,
                                const std::string& algorithm,
                                unsigned long long budget) {
    if (algorithm == "projective") return molp::run_projective(inst);
    if (algorithm == "euclidean") return molp::run_euclidean(inst);
    // oracle: brute force by definition, no polytope construction
    molp::validate_instance(inst);
    auto t0 = std::chrono::steady_clock::now();
    long long solves0 = molp::lp_tally().solves.load();
    molp::SolveResult result;
    result.efficient_extreme_outcomes =
        molp::oracle::brute_efficient_extremes(inst, budget);
    std::sort(result.efficient_extreme_outcomes.begin(),
              result.efficient_extreme_outcomes.end(), molp::lex_less);
    result.stats.lp_solves = molp::lp_tally().solves.load() - solves0;
    result.stats.wall_time =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0);
    return result;
}

int cmd_solve(const std::string& input, const std::string& algorithm,
              const std::string& output, const std::string& stats_path,
              unsigned long long budget) {
    molp::MolpInstance inst = molp::io::parse_instance(read_file(input));
    molp::SolveResult result = run_algorithm(inst, algorithm, budget);
    std::string serialized = molp::io::serialize_result(algorithm, result);
    if (output.empty())
        std::cout << serialized;
    else
        write_file(output, serialized);
    if (!stats_path.empty()) write_file(stats_path, stats_block(result.stats));
    return kExitOk;
}

int cmd_generate(std::size_t dimension, std::size_t facets,
                 const std::string& output) {
    molp::DDPolytope dual =
        molp::cyclicgen::dual_cyclic_polytope(dimension, facets);
    molp::MolpInstance inst = molp::cyclicgen::embed_as_molp(dual, dimension);
    std::string serialized = molp::io::serialize_instance(inst);
    if (output.empty())
        std::cout << serialized;
    else
        write_file(output, serialized);
    return kExitOk;
}

std::string outcome_set_str(const std::vector<molp::Vec>& outcomes) {
    return molp::io::detail::format_matrix(outcomes);
}

int cmd_verify(const std::string& input, unsigned long long budget) {
    molp::MolpInstance inst = molp::io::parse_instance(read_file(input));
    molp::validate_instance(inst);
    const std::size_t p = inst.p();

    molp::SolveResult proj = molp::run_projective(inst);
    molp::SolveResult eucl = molp::run_euclidean(inst);
    std::vector<molp::Vec> brute =
        molp::oracle::brute_efficient_extremes(inst, budget);
    std::sort(brute.begin(), brute.end(), molp::lex_less);

    auto counts = [](const molp::RunStats& s) {
        std::string out;
        for (std::size_t i = 0; i < s.vertex_counts.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(s.vertex_counts[i]);
        }
        return out.empty() ? std::string("-") : out;
    };
    std::cout << "algorithm   outcomes  iterations  non-efficient  "
                 "per-iteration vertices\n";
    std::cout << "projective  " << proj.efficient_extreme_outcomes.size()
              << "         " << proj.stats.iterations << "           "
              << proj.stats.final_non_efficient << "              "
              << counts(proj.stats) << "\n";
    std::cout << "euclidean   " << eucl.efficient_extreme_outcomes.size()
              << "         " << eucl.stats.iterations << "           "
              << eucl.stats.final_non_efficient << "              "
              << counts(eucl.stats) << "\n";
    std::cout << "oracle      " << brute.size() << "\n";

    bool ok = true;
    if (proj.efficient_extreme_outcomes != eucl.efficient_extreme_outcomes ||
        proj.efficient_extreme_outcomes != brute) {
        ok = false;
        std::cout << "MISMATCH: outcome sets differ\n"
                  << "  projective: "
                  << outcome_set_str(proj.efficient_extreme_outcomes) << "\n"
                  << "  euclidean:  "
                  << outcome_set_str(eucl.efficient_extreme_outcomes) << "\n"
                  << "  oracle:     " << outcome_set_str(brute) << "\n";
    }
    if (proj.stats.final_non_efficient != p) {
        ok = false;
        std::cout << "MISMATCH: projective non-efficient count "
                  << proj.stats.final_non_efficient << " != p = " << p << "\n";
    }
    std::size_t lower = (std::size_t(1) << p) - 1;
    if (eucl.stats.final_non_efficient < lower) {
        ok = false;
        std::cout << "MISMATCH: euclidean non-efficient count "
                  << eucl.stats.final_non_efficient << " < 2^p-1 = " << lower
                  << "\n";
    }

    std::vector<molp::Vec> dd_vertices;
    for (const molp::HPoint& v : eucl.final_polytope->vertices())
        dd_vertices.push_back(molp::project(v));
    std::sort(dd_vertices.begin(), dd_vertices.end(), molp::lex_less);
    std::vector<molp::Vec> vsq = molp::oracle::vsquare_vertices(inst, budget);
    if (dd_vertices != vsq) {
        ok = false;
        std::cout << "MISMATCH: V(S) union differs from enumerated Y^[] "
                     "vertices\n"
                  << "  V(S) union: " << outcome_set_str(vsq) << "\n"
                  << "  enumerated: " << outcome_set_str(dd_vertices) << "\n";
    }
    std::cout << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of efficient extreme outcomes for "
                 "multiobjective linear programs"};
    app.require_subcommand(1);

    std::string input, output, stats_path, algorithm;
    unsigned long long budget = molp::oracle::kDefaultBudget;
    std::size_t dimension = 0, facets = 0;

    CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("--input", input)->required();
    solve->add_option("--algorithm", algorithm)
        ->required()
        ->check(CLI::IsMember({"projective", "euclidean", "oracle"}));
    solve->add_option("--output", output);
    solve->add_option("--stats", stats_path);
    solve->add_option("--budget", budget);

    CLI::App* generate =
        app.add_subcommand("generate", "generate a worst-case instance");
    CLI::App* dual_cyclic = generate->add_subcommand(
        "dual-cyclic", "embedded dual cyclic polytope instance");
    dual_cyclic->add_option("--dimension", dimension)->required();
    dual_cyclic->add_option("--facets", facets)->required();
    dual_cyclic->add_option("--output", output);

    CLI::App* verify =
        app.add_subcommand("verify", "cross-check all three algorithms");
    verify->add_option("--input", input)->required();
    verify->add_option("--budget", budget);

    try {
        app.parse(argc, argv);
        if (solve->parsed())
            return cmd_solve(input, algorithm, output, stats_path, budget);
        if (generate->parsed()) {
            if (!dual_cyclic->parsed()) {
                std::cerr << "generate: missing kind (expected dual-cyclic)\n";
                return kExitInput;
            }
            return cmd_generate(dimension, facets, output);
        }
        return cmd_verify(input, budget);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    } catch (const molp::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const molp::InvalidSpec& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const molp::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const molp::InvalidInstance& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return kExitInstance;
    } catch (const molp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

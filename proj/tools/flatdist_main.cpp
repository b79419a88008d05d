#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "flatdist/instance_io.hpp"
#include "flatdist/linalg.hpp"
#include "flatdist/oracle.hpp"
#include "flatdist/solver.hpp"

namespace {

using nlohmann::json;
using namespace flatdist;

const char* path_name(SolvePath p) {
    switch (p) {
        case SolvePath::FullRankCramer: return "full_rank_cramer";
        case SolvePath::ReducedColumns: return "reduced_columns";
        case SolvePath::PointPoint: return "point_point";
    }
    return "unknown";
}

std::string join_reals(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += format_real(v[i]);
    }
    return out;
}

json diagnostics_json(const Diagnostics& d) {
    return json{{"gram_det", d.gram_det},
                {"rank_used", d.rank_used},
                {"dropped_columns", d.dropped_columns},
                {"unique", d.unique},
                {"tolerances_used",
                 {{"rank_tol", d.tolerances_used.rank_tol},
                  {"gram_clamp_fired", d.tolerances_used.gram_clamp_fired}}},
                {"path", path_name(d.path)}};
}

json pair_json(const PairSolution& sol) {
    return json{{"b_star", sol.b_star},
                {"c_star", sol.c_star},
                {"u_star", sol.u_star},
                {"v_star", sol.v_star},
                {"distance", sol.distance},
                {"distance_sq_gram", sol.distance_sq_gram},
                {"diagnostics", diagnostics_json(sol.diagnostics)}};
}

double effective_tol(const Instance& inst, double cli_tol, bool cli_tol_set) {
    if (cli_tol_set) return cli_tol;
    if (inst.tol_override) return *inst.tol_override;
    return kDefaultRankTol;
}

int cmd_distance(const Instance& inst, double tol, bool as_json) {
    const PairSolution sol = optimal_pair(inst.vb, inst.vc, tol);
    if (as_json) {
        std::cout << json{{"distance", sol.distance},
                          {"distance_sq_gram", sol.distance_sq_gram}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "distance " << format_real(sol.distance) << "\n";
        std::cout << "distance_sq " << format_real(sol.distance_sq_gram) << "\n";
    }
    return 0;
}

int cmd_pair(const Instance& inst, double tol, bool as_json) {
    const PairSolution sol = optimal_pair(inst.vb, inst.vc, tol);
    if (as_json) {
        std::cout << pair_json(sol).dump() << "\n";
        return 0;
    }
    std::cout << "b_star " << join_reals(sol.b_star) << "\n";
    std::cout << "c_star " << join_reals(sol.c_star) << "\n";
    std::cout << "u_star " << join_reals(sol.u_star) << "\n";
    std::cout << "v_star " << join_reals(sol.v_star) << "\n";
    std::cout << "distance " << format_real(sol.distance) << "\n";
    std::cout << "path " << path_name(sol.diagnostics.path) << "\n";
    std::cout << "gram_det " << format_real(sol.diagnostics.gram_det) << "\n";
    std::cout << "unique " << (sol.diagnostics.unique ? "true" : "false") << "\n";
    return 0;
}

int cmd_gram(const Instance& inst, double tol, bool as_json) {
    const Flat vb = validate(inst.vb, tol);
    const Flat vc = validate(inst.vc, tol);
    const ProblemData pd = difference_setup(vb, vc);
    const std::size_t n = pd.a.cols();

    double g = 1.0;
    double g_bordered = dot(pd.d, pd.d);
    json g_rows = json::array();
    if (n > 0) {
        const auto cols = pd.a.columns();
        const Matrix g_mat = gram_matrix(cols);
        g = gram_determinant(cols);
        std::vector<Vec> bordered;
        bordered.push_back(pd.d);
        bordered.insert(bordered.end(), cols.begin(), cols.end());
        g_bordered = gram_determinant(bordered);
        for (std::size_t i = 0; i < n; ++i) g_rows.push_back(g_mat.column(i));
    }
    if (as_json) {
        std::cout << json{{"n", n},
                          {"G", g_rows},
                          {"gram_det", g},
                          {"gram_det_bordered", g_bordered}}
                         .dump()
                  << "\n";
        return 0;
    }
    std::cout << "n " << n << "\n";
    for (const auto& row : g_rows) {
        std::cout << "G " << join_reals(row.get<Vec>()) << "\n";
    }
    std::cout << "gram_det " << format_real(g) << "\n";
    std::cout << "gram_det_bordered " << format_real(g_bordered) << "\n";
    return 0;
}

int cmd_check(const Instance& inst, double tol, bool as_json) {
    const PairSolution sol = optimal_pair(inst.vb, inst.vc, tol);
    const Flat vb = validate(inst.vb, tol);
    const Flat vc = validate(inst.vc, tol);
    const OracleReport ap = alternating_projections(vb, vc, 10000, 1e-12);
    const double sample_min = sampled_upper_bound(vb, vc, 10000, 20240817);

    const bool ap_ok =
        std::abs(ap.ap_distance - sol.distance) <= 1e-6 * std::max(1.0, sol.distance);
    const bool bound_ok = sol.distance <= sample_min + 1e-9;
    const bool agreement = ap_ok && bound_ok;

    if (as_json) {
        std::cout << json{{"distance", sol.distance},
                          {"ap_distance", ap.ap_distance},
                          {"ap_iterations", ap.iterations},
                          {"sample_min", sample_min},
                          {"unique", sol.diagnostics.unique},
                          {"agreement", agreement}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "distance " << format_real(sol.distance) << "\n";
        std::cout << "ap_distance " << format_real(ap.ap_distance) << "\n";
        std::cout << "sample_min " << format_real(sample_min) << "\n";
        std::cout << "path " << path_name(sol.diagnostics.path) << "\n";
        std::cout << "unique " << (sol.diagnostics.unique ? "true" : "false") << "\n";
        std::cout << "agreement " << (agreement ? "true" : "false") << "\n";
    }
    return agreement ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Best-approximation pair and distance between two affine subspaces"};
    app.require_subcommand(1);

    double tol = kDefaultRankTol;
    bool as_json = false;
    std::string file;
    app.add_option("--tol", tol, "Rank decision tolerance")->check(CLI::PositiveNumber);
    app.add_flag("--json", as_json, "Machine-readable JSON output");

    auto* dist_cmd = app.add_subcommand("distance", "Distance between the two flats");
    auto* pair_cmd = app.add_subcommand("pair", "Optimal pair and diagnostics");
    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix and determinants");
    auto* check_cmd = app.add_subcommand("check", "Solver vs independent oracles");
    for (auto* cmd : {dist_cmd, pair_cmd, gram_cmd, check_cmd}) {
        cmd->add_option("file", file, "Instance JSON file")->required();
        cmd->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        const Instance inst = load_instance(file);
        const double t = effective_tol(inst, tol, app.count("--tol") > 0);
        if (dist_cmd->parsed()) return cmd_distance(inst, t, as_json);
        if (pair_cmd->parsed()) return cmd_pair(inst, t, as_json);
        if (gram_cmd->parsed()) return cmd_gram(inst, t, as_json);
        if (check_cmd->parsed()) return cmd_check(inst, t, as_json);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

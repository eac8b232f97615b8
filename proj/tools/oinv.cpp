// oinv command line: exact dimensions, orbit enumeration, invariant
// rendering, numerical invariance checks, and the matching <-> tree tools.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 cap/budget exceeded.

#include "oinv/dimension.hpp"
#include "oinv/invariants.hpp"
#include "oinv/json_io.hpp"
#include "oinv/orbits.hpp"
#include "oinv/phylo.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

struct Caps {
    int max_points = oinv::kDefaultMaxPoints;       // matching enumeration
    int canonical_cap = oinv::kDefaultCanonicalCap; // canonicalization sweeps
};

int fail(const std::string& category, const std::string& message) {
    std::cerr << "oinv: error: " << category << ": " << message << "\n";
    if (category == "usage") return 2;
    if (category == "cap" || category == "budget") return 3;
    return 1;
}

std::vector<int> dims_or_stable(std::vector<int> dims, int r, int m) {
    if (dims.empty()) dims.assign(r, 2 * m); // stable range: every n_i >= 2m
    if (static_cast<int>(dims.size()) != r)
        throw std::invalid_argument("--dims must list exactly r values");
    for (int n : dims)
        if (n < 1) throw std::invalid_argument("--dims entries must be >= 1");
    return dims;
}

int cmd_dim(int r, int m, int d, bool use_degree, bool json) {
    const oinv::BigInt value =
        use_degree ? oinv::stable_dimension_degree(r, d) : oinv::stable_dimension(r, m);
    if (json) {
        oinv::Json out{{"r", r}};
        if (use_degree)
            out["d"] = d;
        else
            out["m"] = m;
        out["dim"] = value.str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
    return 0;
}

int cmd_table(int rmax, int mmax, bool json) {
    const auto table = oinv::dimension_table(rmax, mmax);
    if (json) {
        oinv::Json values = oinv::Json::array();
        for (const auto& row : table) {
            oinv::Json jrow = oinv::Json::array();
            for (const auto& v : row) jrow.push_back(v.str());
            values.push_back(jrow);
        }
        std::cout << oinv::Json{{"rmax", rmax}, {"mmax", mmax}, {"values", values}}.dump() << "\n";
    } else {
        std::cout << oinv::format_dimension_table(table);
    }
    return 0;
}

int cmd_orbits(int r, int m, const std::string& dot_dir, bool json, const Caps& caps) {
    const auto reps = oinv::enumerate_orbits(r, m, caps.canonical_cap);
    if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        for (std::size_t k = 0; k < reps.size(); ++k) {
            const std::string name = "orbit_" + std::to_string(k + 1);
            std::ofstream out(std::filesystem::path(dot_dir) / (name + ".dot"));
            out << oinv::to_dot(oinv::to_colored_graph(reps[k]), name);
        }
    }
    if (json) {
        oinv::Json orbits = oinv::Json::array();
        for (std::size_t k = 0; k < reps.size(); ++k) {
            oinv::Json entry = oinv::graph_to_json(oinv::to_colored_graph(reps[k]));
            entry["index"] = k + 1;
            entry["orbit_size"] = oinv::orbit_size(reps[k], caps.canonical_cap).str();
            orbits.push_back(entry);
        }
        std::cout << oinv::Json{{"r", r}, {"m", m}, {"count", reps.size()}, {"orbits", orbits}}.dump()
                  << "\n";
    } else {
        std::cout << reps.size() << " orbit(s) for r=" << r << " m=" << m << "\n";
        for (std::size_t k = 0; k < reps.size(); ++k)
            std::cout << "  " << (k + 1) << ": " << reps[k].str()
                      << "  orbit_size=" << oinv::orbit_size(reps[k], caps.canonical_cap) << "\n";
    }
    return 0;
}

int cmd_invariant(int r, int m, int orbit, std::vector<int> dims, bool json, const Caps& caps) {
    const auto reps = oinv::enumerate_orbits(r, m, caps.canonical_cap);
    if (orbit < 1 || orbit > static_cast<int>(reps.size()))
        throw std::invalid_argument("--orbit must be in 1.." + std::to_string(reps.size()) +
                                    " for r=" + std::to_string(r) + " m=" + std::to_string(m));
    const auto f = oinv::build_invariant(reps[orbit - 1], dims_or_stable(std::move(dims), r, m));
    const oinv::PhyloForest forest = oinv::forest_of(reps[orbit - 1]);
    if (json) {
        oinv::Json out = oinv::invariant_to_json(f);
        out["orbit"] = orbit;
        out["tuple"] = oinv::tuple_to_json(reps[orbit - 1]);
        out["forest"] = oinv::forest_to_json(forest);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "orbit " << orbit << ": " << reps[orbit - 1].str() << "\n"
                  << oinv::format_invariant(f) << "\n"
                  << "forest:";
        for (const oinv::PhyloTree& t : forest.trees) std::cout << " " << t.newick();
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(int r, int m, std::vector<int> dims_in, int trials, std::uint64_t seed,
               const std::string& kind, double tolerance, bool json, const Caps& caps) {
    const auto dims = dims_or_stable(std::move(dims_in), r, m);
    std::vector<oinv::OrthogonalKind> kinds;
    if (kind == "real" || kind == "both") kinds.push_back(oinv::OrthogonalKind::real_householder);
    if (kind == "cayley" || kind == "both") kinds.push_back(oinv::OrthogonalKind::complex_cayley);
    if (kinds.empty()) throw std::invalid_argument("--kind must be real, cayley, or both");

    const auto reps = oinv::enumerate_orbits(r, m, caps.canonical_cap);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    oinv::Json results = oinv::Json::array();
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const auto f = oinv::build_invariant(reps[k], dims);
        const auto x = oinv::random_complex_tensor(dims, rng);
        double max_residual = 0.0;
        for (oinv::OrthogonalKind kd : kinds)
            for (int t = 0; t < trials; ++t) {
                const auto g = oinv::random_orthogonal_tuple(dims, kd, rng);
                max_residual = std::max(max_residual, oinv::verify_invariance(f, x, g));
            }
        worst = std::max(worst, max_residual);
        if (json)
            results.push_back(oinv::Json{{"invariant", k + 1}, {"max_residual", max_residual}});
        else
            std::cout << "invariant " << (k + 1) << ": max residual = " << max_residual << "\n";
    }
    if (json) {
        std::cout << oinv::Json{{"r", r},
                                {"m", m},
                                {"dims", dims},
                                {"trials", trials},
                                {"seed", seed},
                                {"kind", kind},
                                {"tolerance", tolerance},
                                {"results", results},
                                {"max_residual", worst},
                                {"pass", worst <= tolerance}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "max residual = " << worst << " (tolerance " << tolerance << ")\n";
    }
    if (worst > tolerance)
        return fail("verify", "max residual " + std::to_string(worst) + " exceeds tolerance");
    return 0;
}

int cmd_trees(const std::string& matching, const std::string& act, const std::string& forest_file,
              bool json, const Caps& caps) {
    if (!matching.empty()) {
        const oinv::Matching tau = oinv::parse_matching_cycles(matching);
        if (tau.points() > caps.max_points)
            throw oinv::CapExceeded("trees: 2m = " + std::to_string(tau.points()) +
                                    " exceeds cap " + std::to_string(caps.max_points));
        const oinv::PhyloTree tree = oinv::matching_to_tree(tau);
        if (json)
            std::cout << oinv::Json{{"matching", oinv::matching_to_json(tau)},
                                    {"newick", tree.newick()}}
                             .dump()
                      << "\n";
        else
            std::cout << tree.newick() << "\n";
        return 0;
    }
    // --act PERM --forest FILE
    std::ifstream in(forest_file);
    if (!in) throw std::invalid_argument("cannot open forest file: " + forest_file);
    oinv::Json j;
    in >> j;
    const oinv::PhyloForest forest = oinv::forest_from_json(j);
    const int points = 2 * (forest.trees[0].n_leaves - 1);
    if (points > caps.max_points)
        throw oinv::CapExceeded("trees: 2m = " + std::to_string(points) + " exceeds cap " +
                                std::to_string(caps.max_points));
    const oinv::Permutation g = oinv::parse_permutation_cycles(act, points);
    const oinv::PhyloForest result = oinv::forest_act(g, forest);
    std::cout << oinv::forest_to_json(result).dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of tensor products under products of complex orthogonal groups"};
    app.require_subcommand(1);

    Caps caps;
    app.add_option("--max-points", caps.max_points,
                   "cap on 2m for matching enumeration (env OINV_MAX_POINTS)")
        ->envname("OINV_MAX_POINTS")
        ->check(CLI::PositiveNumber);

    int r = 1, m = 0, d = 0, rmax = 1, mmax = 1, orbit = 1, trials = 20;
    std::uint64_t seed = kDefaultSeed;
    double tolerance = 1e-8;
    std::vector<int> dims;
    std::string dot_dir, kind = "both", matching, act_perm, forest_file;
    bool json_dim = false, json_table = false, json_orbits = false, json_inv = false,
         json_verify = false, json_trees = false;

    auto* c_dim = app.add_subcommand("dim", "stable dimension for r factors in degree 2m");
    c_dim->add_option("--r", r, "number of tensor factors")->required()->check(CLI::PositiveNumber);
    auto* opt_m = c_dim->add_option("--m", m, "half-degree (degree d = 2m)")
                      ->check(CLI::NonNegativeNumber);
    auto* opt_d = c_dim->add_option("--d", d, "raw degree (odd degrees give 0)")
                      ->check(CLI::NonNegativeNumber)
                      ->excludes(opt_m);
    c_dim->add_flag("--json", json_dim, "emit JSON");

    auto* c_table = app.add_subcommand("table", "dimension grid for r = 1..rmax, m = 1..mmax");
    c_table->add_option("--rmax", rmax)->required()->check(CLI::PositiveNumber);
    c_table->add_option("--mmax", mmax)->required()->check(CLI::PositiveNumber);
    c_table->add_flag("--json", json_table, "emit JSON");

    auto* c_orbits = app.add_subcommand("orbits", "canonical orbit representatives of r-tuples");
    c_orbits->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    c_orbits->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    c_orbits->add_option("--dot", dot_dir, "write one DOT file per orbit into this directory");
    c_orbits->add_flag("--json", json_orbits, "emit JSON");

    auto* c_inv = app.add_subcommand("invariant", "render the polynomial of one orbit");
    c_inv->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    c_inv->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    c_inv->add_option("--orbit", orbit, "1-based orbit index")->required()->check(CLI::PositiveNumber);
    c_inv->add_option("--dims", dims, "factor dimensions n1,n2,... (default: all 2m)")
        ->delimiter(',');
    c_inv->add_flag("--json", json_inv, "emit JSON");

    auto* c_verify = app.add_subcommand("verify", "numerical invariance check of all orbits");
    c_verify->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    c_verify->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    c_verify->add_option("--dims", dims, "factor dimensions n1,n2,... (default: all 2m)")
        ->delimiter(',');
    c_verify->add_option("--trials", trials, "group samples per kind per invariant")
        ->check(CLI::PositiveNumber);
    c_verify->add_option("--seed", seed, "RNG seed (default 1729)");
    c_verify->add_option("--kind", kind, "real | cayley | both")
        ->check(CLI::IsMember({"real", "cayley", "both"}));
    c_verify->add_option("--tolerance", tolerance, "max relative residual accepted");
    c_verify->add_flag("--json", json_verify, "emit JSON");

    auto* c_trees = app.add_subcommand("trees", "matching <-> phylogenetic tree tools");
    auto* opt_matching =
        c_trees->add_option("--matching", matching, "matching in cycle notation, e.g. \"(1 4)(2 3)\"");
    auto* opt_act = c_trees->add_option("--act", act_perm, "permutation in cycle notation")
                        ->excludes(opt_matching);
    c_trees->add_option("--forest", forest_file, "JSON file: array of Newick strings")
        ->needs(opt_act);
    c_trees->add_flag("--json", json_trees, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what());
    }

    try {
        if (c_dim->parsed()) {
            if (!*opt_m && !*opt_d) throw std::invalid_argument("dim requires --m or --d");
            return cmd_dim(r, m, d, static_cast<bool>(*opt_d), json_dim);
        }
        if (c_table->parsed()) return cmd_table(rmax, mmax, json_table);
        if (c_orbits->parsed()) return cmd_orbits(r, m, dot_dir, json_orbits, caps);
        if (c_inv->parsed()) return cmd_invariant(r, m, orbit, dims, json_inv, caps);
        if (c_verify->parsed())
            return cmd_verify(r, m, dims, trials, seed, kind, tolerance, json_verify, caps);
        if (c_trees->parsed()) {
            if (matching.empty() && (act_perm.empty() || forest_file.empty()))
                throw std::invalid_argument("trees requires --matching or --act with --forest");
            return cmd_trees(matching, act_perm, forest_file, json_trees, caps);
        }
        return fail("usage", "no subcommand");
    } catch (const oinv::CapExceeded& e) {
        return fail("cap", e.what());
    } catch (const oinv::BudgetExceeded& e) {
        return fail("budget", e.what());
    } catch (const std::invalid_argument& e) {
        return fail("usage", e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
}

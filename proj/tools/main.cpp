#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graug/cones.hpp"
#include "graug/core.hpp"
#include "graug/equalsum.hpp"
#include "graug/gen.hpp"
#include "graug/graver.hpp"
#include "graug/ints.hpp"
#include "graug/io.hpp"
#include "graug/lowerbound.hpp"
#include "graug/multistage.hpp"
#include "graug/steinitz.hpp"
#include "graug/twostage.hpp"

namespace {

using namespace graug;

std::string slurp(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw io::parse_error(0, "cannot open '" + path + "'");
        ss << f.rdbuf();
    }
    return ss.str();
}

int status_code(twostage::Status st) {
    switch (st) {
        case twostage::Status::optimal: return 0;
        case twostage::Status::infeasible: return 2;
        case twostage::Status::budget_stopped: return 3;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and verification toolkit for block-structured integer programs"};
    app.require_subcommand(1);

    auto* c_solve = app.add_subcommand("solve", "augment a feasible point to a certified optimum");
    std::string solve_in = "-", report_path;
    bool opt_tree = false, opt_exact = false, opt_lambda_all = false;
    long long opt_fixed_cap = -1;
    long opt_max_iter = 100000;
    long long opt_max_heads = 2'000'000;
    int opt_threads = 1;
    c_solve->add_option("-i,--input", solve_in, "instance file, - for stdin");
    c_solve->add_flag("--tree", opt_tree, "read a tree-structured instance");
    c_solve->add_flag("--exact-cap", opt_exact, "head cap from the structural bound");
    c_solve->add_option("--fixed-cap", opt_fixed_cap, "fixed head one-norm cap");
    c_solve->add_flag("--lambda-all", opt_lambda_all, "sweep every step length up to the box width");
    c_solve->add_option("--max-iterations", opt_max_iter, "augmentation iteration budget");
    c_solve->add_option("--max-heads", opt_max_heads, "candidate heads per sweep");
    c_solve->add_option("--threads", opt_threads, "parallel head evaluation");
    c_solve->add_option("--report", report_path, "also write the report to this file");

    auto* c_graver = app.add_subcommand("graver", "indecomposable kernel elements of a matrix");
    std::string graver_in = "-";
    long long graver_cap = 0;
    bool graver_signed = false;
    long long graver_nodes = 50'000'000, graver_points = 2'000'000;
    c_graver->add_option("-i,--input", graver_in, "matrix file, - for stdin");
    c_graver->add_option("--cap", graver_cap, "one-norm enumeration cap")->required();
    c_graver->add_flag("--signed", graver_signed, "print both signs of each element");
    c_graver->add_option("--max-nodes", graver_nodes, "enumeration node budget");
    c_graver->add_option("--max-points", graver_points, "kernel point budget");

    auto* c_cone =
        app.add_subcommand("cone-intersect", "generators of an intersection of integer cones");
    std::vector<std::string> cone_in;
    long long cone_delta = 1;
    long long cone_box = 10'000'000;
    c_cone->add_option("-i,--input", cone_in, "generator files, one cone each")
        ->required()
        ->expected(-2);
    c_cone->add_option("--delta", cone_delta, "entry bound of the inputs")->required();
    c_cone->add_option("--box-budget", cone_box, "candidate box cell budget");

    auto* c_st =
        app.add_subcommand("steinitz", "reorder zero-sum vectors to keep prefix sums small");
    std::string st_in = "-";
    long long st_delta = 1;
    c_st->add_option("-i,--input", st_in, "vectors file, - for stdin");
    c_st->add_option("--delta", st_delta, "max-norm bound of the vectors")->required();

    auto* c_eq = app.add_subcommand("equal-sums", "submultisets with one common sum");
    std::string eq_in = "-";
    long long eq_delta = 1;
    long long eq_cells = 50'000'000;
    c_eq->add_option("-i,--input", eq_in, "multisets file, - for stdin");
    c_eq->add_option("--delta", eq_delta, "entry bound of the vectors")->required();
    c_eq->add_option("--box-budget", eq_cells, "reachability box cell budget");

    auto* c_lb = app.add_subcommand("lb-gen", "families with huge minimal kernel coordinates");
    std::string lb_family = "harmonic", lb_what = "matrix";
    long long lb_delta = 2, lb_delta_max = -1;
    int lb_s = 1, lb_s_max = -1;
    long lb_limit = 1000;
    c_lb->add_option("--family", lb_family, "harmonic or encoded")
        ->check(CLI::IsMember({"harmonic", "encoded"}));
    c_lb->add_option("--what", lb_what, "matrix, certificate or table")
        ->check(CLI::IsMember({"matrix", "certificate", "table"}));
    c_lb->add_option("--delta", lb_delta, "entry bound");
    c_lb->add_option("--s", lb_s, "carry chain length of the encoded family");
    c_lb->add_option("--delta-max", lb_delta_max, "table: end of the delta range");
    c_lb->add_option("--s-max", lb_s_max, "table: end of the s range");
    c_lb->add_option("--limit", lb_limit, "table: largest encoded value allowed");

    auto* c_gen = app.add_subcommand("gen-instance", "deterministic random test inputs");
    std::string gen_kind = "twostage";
    unsigned long long gen_seed = 1;
    int g_n = 2, g_r = 1, g_s = 1, g_t = 1;
    int g_rows = 1, g_cols = 2, g_dim = 2, g_count = 3;
    int g_sets = 2, g_max_items = 10, g_max_count = 10, g_leaf_rows = 1;
    long long g_delta = 1, g_width = 2;
    bool g_indep = false;
    std::vector<int> g_fanout{2}, g_level_widths{1, 1};
    c_gen->add_option("--kind", gen_kind, "what to generate")
        ->check(CLI::IsMember({"twostage", "tree", "matrix", "vectors", "generators", "multisets"}));
    c_gen->add_option("--seed", gen_seed, "stream seed");
    c_gen->add_option("--blocks", g_n, "twostage: number of blocks");
    c_gen->add_option("--block-rows", g_r, "twostage: rows per block");
    c_gen->add_option("--shared-cols", g_s, "twostage: first-stage columns");
    c_gen->add_option("--block-cols", g_t, "twostage: columns per block");
    c_gen->add_option("--fanout", g_fanout, "tree: children per node at each depth")
        ->delimiter(',');
    c_gen->add_option("--level-widths", g_level_widths, "tree: columns per block at each depth")
        ->delimiter(',');
    c_gen->add_option("--leaf-rows", g_leaf_rows, "tree: rows per leaf block");
    c_gen->add_option("--rows", g_rows, "matrix: rows");
    c_gen->add_option("--cols", g_cols, "matrix: columns");
    c_gen->add_flag("--independent", g_indep, "matrix: reroll dependent rows");
    c_gen->add_option("--dim", g_dim, "vectors/generators/multisets: dimension");
    c_gen->add_option("--count", g_count, "generators: how many");
    c_gen->add_option("--max-count", g_max_count, "vectors: family size limit");
    c_gen->add_option("--sets", g_sets, "multisets: how many");
    c_gen->add_option("--max-items", g_max_items, "multisets: members per set limit");
    c_gen->add_option("--delta", g_delta, "entry bound");
    c_gen->add_option("--width", g_width, "box edge length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (*c_solve) {
            twostage::SolverConfig cfg;
            cfg.cap_mode = opt_exact ? twostage::CapMode::exact : twostage::CapMode::adaptive;
            if (opt_fixed_cap >= 0) cfg.fixed_cap = opt_fixed_cap;
            cfg.lambda_all = opt_lambda_all;
            cfg.max_iterations = opt_max_iter;
            cfg.max_heads = opt_max_heads;
            cfg.parallel_width = opt_threads;
            std::istringstream in(slurp(solve_in));
            twostage::SolveReport rep;
            if (opt_tree)
                rep = multistage::solve(io::parse_tree(in), cfg);
            else
                rep = twostage::solve(io::parse_twostage(in), cfg);
            std::string text = io::render_report(rep);
            std::cout << text;
            if (!report_path.empty()) {
                std::ofstream f(report_path);
                if (!f) throw io::parse_error(0, "cannot write '" + report_path + "'");
                f << text;
            }
            code = status_code(rep.status);
        } else if (*c_graver) {
            std::istringstream in(slurp(graver_in));
            IntMatrix m = io::parse_matrix(in);
            graver::Config cfg;
            cfg.max_nodes = graver_nodes;
            cfg.max_points = graver_points;
            graver::Basis b = graver::basis(m, BigInt(graver_cap), cfg);
            std::cout << io::serialize(graver_signed ? b.elements() : b.reps);
            std::cerr << (b.complete ? "complete" : "truncated") << "\n";
        } else if (*c_cone) {
            std::vector<cones::GeneratorSet> sets;
            for (const std::string& p : cone_in) {
                std::istringstream in(slurp(p));
                sets.push_back(io::parse_generators(in));
            }
            cones::Config cfg;
            cfg.max_box_points = cone_box;
            cones::Intersection got = cones::intersect_many(sets, cone_delta, cfg);
            std::cout << io::serialize(got.gens);
            std::cerr << "radius " << got.radius << "\n"
                      << (got.complete ? "complete" : "boxed") << "\n";
        } else if (*c_st) {
            std::istringstream in(slurp(st_in));
            std::vector<IntVec> vs = io::parse_vectors(in);
            std::vector<int> perm = steinitz::reorder(vs, st_delta);
            std::cout << "permutation";
            for (int i : perm) std::cout << " " << i;
            std::cout << "\nradius " << steinitz::prefix_radius(vs, perm) << "\n";
        } else if (*c_eq) {
            std::istringstream in(slurp(eq_in));
            auto sets = io::parse_multisets(in);
            equalsum::Config cfg;
            cfg.max_box_cells = eq_cells;
            std::cout << io::serialize(equalsum::common_submultisets(sets, eq_delta, cfg));
        } else if (*c_lb) {
            if (lb_what == "table") {
                Int dhi = lb_delta_max < 0 ? lb_delta : lb_delta_max;
                int shi = lb_s_max < 0 ? lb_s : lb_s_max;
                for (const auto& row : lowerbound::growth_table(lb_delta, dhi, lb_s, shi, lb_limit))
                    std::cout << row.delta << " " << row.s << " " << row.value << " " << row.bits
                              << "\n";
            } else if (lb_what == "matrix") {
                IntMatrix m = lb_family == "harmonic" ? lowerbound::harmonic_matrix(lb_delta)
                                                      : lowerbound::encoded_matrix(lb_delta, lb_s);
                std::cout << io::serialize(m);
            } else {
                lowerbound::Certificate cert = lb_family == "harmonic"
                                                   ? lowerbound::harmonic_certificate(lb_delta)
                                                   : lowerbound::encoded_certificate(lb_delta, lb_s);
                std::cout << "min_coord " << cert.min_coord << "\n";
                std::cout << "bits " << cert.bits << "\n";
                std::cout << "witness";
                for (const BigInt& w : cert.witness) std::cout << " " << w;
                std::cout << "\n";
            }
        } else if (*c_gen) {
            if (gen_kind == "twostage") {
                gen::TwoStageParams p;
                p.n = g_n;
                p.r = g_r;
                p.s = g_s;
                p.t = g_t;
                p.delta = g_delta;
                p.width = g_width;
                std::cout << io::serialize(gen::twostage_instance(gen_seed, p));
            } else if (gen_kind == "tree") {
                gen::TreeParams p;
                p.fanout = g_fanout;
                p.widths = g_level_widths;
                p.leaf_rows = g_leaf_rows;
                p.delta = g_delta;
                p.width = g_width;
                std::cout << io::serialize(gen::tree_instance(gen_seed, p));
            } else if (gen_kind == "matrix") {
                std::cout << io::serialize(gen::matrix(gen_seed, g_rows, g_cols, g_delta, g_indep));
            } else if (gen_kind == "vectors") {
                std::cout << io::serialize(gen::zero_sum_family(gen_seed, g_dim, g_delta, g_max_count));
            } else if (gen_kind == "generators") {
                std::cout << io::serialize(gen::generator_set(gen_seed, g_count, g_dim, g_delta));
            } else {
                std::cout << io::serialize(
                    gen::equal_sum_multisets(gen_seed, g_sets, g_dim, g_delta, g_max_items));
            }
        }
    } catch (const io::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 4;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 3;
    } catch (const size_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 1;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "elapsed_ms " << elapsed << "\n";
    return code;
}

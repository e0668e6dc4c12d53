#include <doctest.h>

#include <sstream>
#include <string>

#include "graug/gen.hpp"
#include "graug/io.hpp"

using namespace graug;

namespace {

template <typename Parse>
auto parsed(const std::string& text, Parse&& p) {
    std::istringstream in(text);
    return p(in);
}

long error_line(const std::string& text, void (*run)(std::istream&)) {
    std::istringstream in(text);
    try {
        run(in);
    } catch (const io::parse_error& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST_CASE("two-stage instances round trip") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        gen::TwoStageParams p;
        p.n = 1 + int(seed % 3);
        p.r = 1 + int(seed % 2);
        p.s = 1 + int((seed / 2) % 2);
        p.t = 1 + int(seed % 2);
        p.delta = 2;
        p.width = 3;
        TwoStageInstance inst = gen::twostage_instance(seed, p);
        std::string text = io::serialize(inst);
        CHECK(parsed(text, io::parse_twostage) == inst);
        CHECK(io::serialize(parsed(text, io::parse_twostage)) == text);
    }
}

TEST_CASE("tree instances round trip") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        gen::TreeParams p;
        p.fanout = {2};
        p.widths = {1 + int(seed % 2), 1};
        p.leaf_rows = 1 + int(seed % 2);
        p.delta = 2;
        p.width = 3;
        auto t = gen::tree_instance(seed, p);
        std::string text = io::serialize(t);
        CHECK(parsed(text, io::parse_tree) == t);
        CHECK(io::serialize(parsed(text, io::parse_tree)) == text);
    }
}

TEST_CASE("matrices, vector lists and generator sets round trip") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        IntMatrix m = gen::matrix(seed, 1 + int(seed % 3), 2 + int(seed % 2), 3);
        CHECK(parsed(io::serialize(m), io::parse_matrix) == m);
        CHECK(io::serialize(parsed(io::serialize(m), io::parse_matrix)) == io::serialize(m));

        auto vs = gen::zero_sum_family(seed, 2 + int(seed % 2), 3, 12);
        CHECK(parsed(io::serialize(vs), io::parse_vectors) == vs);

        auto g = gen::generator_set(seed, 3, 2, 3);
        CHECK(parsed(io::serialize(g), io::parse_generators) == g);
        CHECK(io::serialize(parsed(io::serialize(g), io::parse_generators)) == io::serialize(g));
    }
    CHECK(io::serialize(std::vector<IntVec>{}) == "vectors 0 1\n");
    CHECK(parsed(std::string("vectors 0 1\n"), io::parse_vectors).empty());
}

TEST_CASE("multisets round trip") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto sets = gen::equal_sum_multisets(seed, 2 + int(seed % 2), 1 + int(seed % 3), 2, 12);
        std::string text = io::serialize(sets);
        CHECK(parsed(text, io::parse_multisets) == sets);
        CHECK(io::serialize(parsed(text, io::parse_multisets)) == text);
    }
}

TEST_CASE("comments, blank lines and CR line endings are tolerated") {
    std::string text =
        "# a matrix\r\n"
        "\n"
        "matrix 2 2\r\n"
        "  1 -2\n"
        "\t# interior comment\n"
        "0 3\n"
        "\n";
    CHECK(parsed(text, io::parse_matrix) == IntMatrix(2, 2, {1, -2, 0, 3}));

    std::string gens =
        "generators 2 1\n"
        "# order gets canonicalized\n"
        "3\n"
        "2\n";
    CHECK(parsed(gens, io::parse_generators).gens == std::vector<IntVec>{{2}, {3}});
}

TEST_CASE("parse errors carry the offending line") {
    auto run_matrix = +[](std::istream& in) { (void)io::parse_matrix(in); };
    auto run_two = +[](std::istream& in) { (void)io::parse_twostage(in); };
    auto run_sets = +[](std::istream& in) { (void)io::parse_multisets(in); };
    auto run_tree = +[](std::istream& in) { (void)io::parse_tree(in); };
    auto run_vecs = +[](std::istream& in) { (void)io::parse_vectors(in); };

    CHECK(error_line("matrx 1 1\n1\n", run_matrix) == 1);
    CHECK(error_line("matrix 1 1\n1.5\n", run_matrix) == 2);
    CHECK(error_line("matrix 2 1\n1\n", run_matrix) == 2);          // missing second row
    CHECK(error_line("matrix 1 1\n1\nextra\n", run_matrix) == 3);   // trailing content
    CHECK(error_line("# intro\nmatrix 1 2\n1\n", run_matrix) == 3); // wrong entry count
    CHECK(error_line("matrix 0 1\n", run_matrix) == 1);

    CHECK(error_line("twostage 1 1 1\n", run_two) == 1);  // header needs four numbers
    std::string bad_bounds =
        "twostage 1 1 1 1\na_block 1\nb_block 1\nrhs 0\nlower 5 0\nupper 4 0\nobjective 0 0\n";
    CHECK(error_line(bad_bounds, run_two) == 7);

    CHECK(error_line("multisets 1 1\nset 1\n0 1\n", run_sets) == 3);      // multiplicity < 1
    CHECK(error_line("multisets 1 1\nset 2\n1 1\n2 1\n", run_sets) == 4); // repeated vector

    CHECK(error_line("tree 1 1 1\nblock 4 0 1 0 1 1\nrhs 0\nlower 0\nupper 0\nobjective 0\n",
                     run_tree) == 2);  // parent out of range

    CHECK(error_line("vectors 1 2\n1\n", run_vecs) == 2);

    std::istringstream empty("");
    CHECK_THROWS_AS(io::parse_matrix(empty), io::parse_error);
}

TEST_CASE("parsed instances are validated") {
    // equations fine but a lower bound sits above its upper bound
    std::string text =
        "tree 1 2 1\nblock -1 0 1 0 2 1 1\nrhs 0\nlower 1 0\nupper 0 0\nobjective 0 0\n";
    std::istringstream in(text);
    CHECK_THROWS_AS(io::parse_tree(in), io::parse_error);
}

TEST_CASE("reports render deterministically") {
    twostage::SolveReport rep;
    rep.status = twostage::Status::optimal;
    rep.iterations = 3;
    rep.augmentations.push_back({{1, -2}, 2, 4});
    rep.solution = {1, 2};
    rep.objective = 7;
    CHECK(io::render_report(rep) ==
          "status optimal\n"
          "iterations 3\n"
          "augmentations 1\n"
          "augment 2 4 1 -2\n"
          "objective 7\n"
          "solution 1 2\n");

    twostage::SolveReport none;
    none.status = twostage::Status::infeasible;
    CHECK(io::render_report(none) ==
          "status infeasible\n"
          "iterations 0\n"
          "augmentations 0\n");
}

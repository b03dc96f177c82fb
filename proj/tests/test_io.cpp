#include <catch_amalgamated.hpp>

#include <sstream>

#include "radon_lab/generators.hpp"
#include "radon_lab/io.hpp"

using namespace radon_lab;

namespace {

template <class F>
std::string error_of(F&& f)
{
    try {
        f();
    }
    catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("space files round-trip", "[io]")
{
    const auto s = grid_box_space({{2, 3}});
    std::stringstream buf;
    write_space(buf, s);
    CHECK(read_space(buf) == s);

    std::istringstream gen("space 3\n# two generators\ngen 0 1\ngen 1 2\n");
    CHECK(read_space(gen).size() == 5);

    std::istringstream explicit_sets("space 2\nset\nset 0 1\nset 0\n");
    CHECK(read_space(explicit_sets).size() == 3);
}

TEST_CASE("space file errors carry line numbers", "[io]")
{
    CHECK(error_of([] {
              std::istringstream in("space 3\nset\nset 0 1 2\nset 0 1\nset 1 2\n");
              read_space(in, "bad.space");
          }).find("bad.space:1: axiom check failed") != std::string::npos);
    CHECK(error_of([] {
              std::istringstream in("space 3\nset 0 7\n");
              read_space(in, "f");
          }) == "f:2: value 7 outside [0, 2]");
    CHECK(error_of([] {
              std::istringstream in("space 3\nset\ngen 0\n");
              read_space(in, "f");
          }) == "f:3: cannot mix 'set' and 'gen' lines");
    CHECK(!error_of([] {
               std::istringstream in("");
               read_space(in);
           }).empty());
    CHECK(!error_of([] { load_space("/nonexistent/file.space"); }).empty());
}

TEST_CASE("hypergraph files", "[io]")
{
    std::istringstream in("hypergraph 2 4\n0 1\n2 3 # second edge\n");
    const auto h = read_hypergraph(in);
    CHECK(h.edge_count() == 2);
    std::stringstream buf;
    write_hypergraph(buf, h);
    CHECK(buf.str() == "hypergraph 2 4\n0 1\n2 3\n");

    CHECK(error_of([] {
              std::istringstream bad("hypergraph 2 4\n0 1 2\n");
              read_hypergraph(bad, "h");
          }) == "h:2: edge must list exactly 2 vertices");
    CHECK(!error_of([] {
               std::istringstream bad("hypergraph 2 4\n0 0\n");
               read_hypergraph(bad);
           }).empty());
    CHECK(!error_of([] {
               std::istringstream empty("hypergraph 2 4\n");
               read_hypergraph(empty);
           }).empty());
}

TEST_CASE("set-pair files", "[io]")
{
    const auto f = build(4, 2);
    std::stringstream buf;
    write_setpairs(buf, f);
    const auto back = read_setpairs(buf, 2);
    CHECK(back.n == f.n);
    CHECK(back.m() == f.m());
    for (int i = 0; i < f.m(); ++i) {
        CHECK(back.pairs[static_cast<std::size_t>(i)].a == f.pairs[static_cast<std::size_t>(i)].a);
        CHECK(back.pairs[static_cast<std::size_t>(i)].b == f.pairs[static_cast<std::size_t>(i)].b);
    }
    CHECK(!error_of([] {
               std::istringstream bad("setpairs 1 2\nA 1 1\n");
               read_setpairs(bad, 2);
           }).empty());
    CHECK(!error_of([] {
               std::istringstream bad("setpairs 1 2\nA 1 3\nB 1 1\n");
               read_setpairs(bad, 2);
           }).empty());
}

TEST_CASE("family and LP files", "[io]")
{
    std::istringstream sets("set 0 1\nset\nset 2\n");
    const auto fam = read_sets(sets, 3);
    REQUIRE(fam.size() == 3);
    CHECK(fam[1].is_empty());

    std::istringstream lp("# triangle\nmin 1 1 1\nrow 1 1 0 >= 1\nrow 0 1 1 >= 1\nrow 1 0 1 >= 1\n");
    const auto prog = read_lp(lp);
    CHECK(solve_min(prog).value == Rational(3, 2));
    CHECK(!error_of([] {
               std::istringstream bad("min 1 1\nrow 1 >= 1\n");
               read_lp(bad);
           }).empty());
    CHECK(!error_of([] {
               std::istringstream bad("min 1\nrow 1 <= 1\n");
               read_lp(bad);
           }).empty());
    CHECK(!error_of([] {
               std::istringstream bad("min 1\nrow 1/0 >= 1\n");
               read_lp(bad);
           }).empty());
}

TEST_CASE("subset order files", "[io]")
{
    std::istringstream in("T\nT 2\nT 1\nT 1 2\n");
    const auto o = read_subset_order(in, 2);
    CHECK(o.sequence == std::vector<std::uint32_t>{0, 2, 1, 3});
    std::istringstream dup("T\nT 1\nT 1\nT 1 2\n");
    CHECK(!error_of([&] { read_subset_order(dup, 2); }).empty());
}

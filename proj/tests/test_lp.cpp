#include <catch_amalgamated.hpp>

#include "radon_lab/lp.hpp"
#include "radon_lab/random.hpp"

using namespace radon_lab;

namespace {

std::vector<Rational> v(std::initializer_list<int> xs)
{
    std::vector<Rational> out;
    for (int x : xs)
        out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("rational printing and parsing", "[lp]")
{
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("solve_min examples", "[lp]")
{
    LinearProgram one{v({1}), {v({1})}, v({1})};
    const auto r = solve_min(one);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.value == 1);

    // Triangle family {0,1},{1,2},{0,2}.
    LinearProgram tri{v({1, 1, 1}), {v({1, 1, 0}), v({0, 1, 1}), v({1, 0, 1})}, v({1, 1, 1})};
    const auto t = solve_min(tri);
    CHECK(t.value == Rational(3, 2));
    for (const auto& y : t.dual)
        CHECK(y == Rational(1, 2));

    LinearProgram infeasible{v({0}), {v({1}), v({-1})}, v({1, 0})};
    CHECK(solve_min(infeasible).status == LpStatus::Infeasible);

    LinearProgram unbounded{v({-1}), {v({1})}, v({1})};
    CHECK(solve_min(unbounded).status == LpStatus::Unbounded);

    LinearProgram bad{v({1, 1}), {v({1})}, v({1})};
    CHECK_THROWS_AS(solve_min(bad), std::invalid_argument);
}

TEST_CASE("negative right-hand sides and zero rows", "[lp]")
{
    // x - y >= -2, x + y >= 4, minimize x: optimum x = 1, y = 3.
    LinearProgram lp{v({1, 0}), {v({1, -1}), v({1, 1})}, v({-2, 4})};
    const auto r = solve_min(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 1);
    // A redundant all-zero row with zero rhs leaves an artificial basic.
    LinearProgram degenerate{v({1}), {v({0}), v({1})}, v({0, 2})};
    CHECK(solve_min(degenerate).value == 2);
}

TEST_CASE("strong duality on random programs", "[lp][property]")
{
    for (int i = 0; i < 100; ++i) {
        auto rng = Rng::stream(11, "lp.random", static_cast<std::uint64_t>(i));
        const auto lp = random_lp(rng, 8, 12);
        const auto r = solve_min(lp);
        REQUIRE(r.status == LpStatus::Optimal);
        Rational dual;
        for (std::size_t j = 0; j < lp.rhs.size(); ++j)
            dual += lp.rhs[j] * r.dual[j];
        CHECK(dual == r.value);
        // Same input, same pivots.
        CHECK(solve_min(lp).pivots == r.pivots);
    }
}

TEST_CASE("point_in_hull", "[lp]")
{
    const std::vector<std::vector<Rational>> seg{v({0, 0}), v({2, 2})};
    CHECK(point_in_hull(v({1, 1}), seg));
    CHECK(point_in_hull(v({2, 2}), seg));
    const std::vector<std::vector<Rational>> tri{v({0, 0}), v({0, 2}), v({2, 2})};
    CHECK_FALSE(feasibility_point_in_hull(v({1, 0}), tri));
    CHECK(point_in_hull(v({0, 1}), tri));
    const std::vector<std::vector<Rational>> mixed{v({0, 0}), v({1})};
    CHECK_THROWS_AS(point_in_hull(v({0, 0}), mixed), std::invalid_argument);
}

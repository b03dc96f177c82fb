#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "radon_lab/generators.hpp"
#include "radon_lab/hypergraph.hpp"
#include "radon_lab/invariants.hpp"
#include "radon_lab/random.hpp"

using namespace radon_lab;

namespace {

PointSet ps(int n, std::initializer_list<int> m) { return PointSet::of(n, m); }

ConvexitySpace trivial_space(int n)
{
    return {n, std::vector<PointSet>{PointSet::empty(n), PointSet::full(n)}};
}

/// Small random spaces for oracle comparisons: ground <= 8, at most 40 sets.
std::vector<ConvexitySpace> oracle_pool(const char* name, int count, int max_n)
{
    std::vector<ConvexitySpace> out;
    for (int i = 0; out.size() < static_cast<std::size_t>(count); ++i) {
        auto rng = Rng::stream(3, name, static_cast<std::uint64_t>(i));
        const int n = rng.between(1, max_n);
        auto s = random_space(rng, n, rng.between(0, 5), rng.between(1, 3), 4);
        if (s.size() <= 40)
            out.push_back(std::move(s));
    }
    return out;
}

bool radon_free(const ConvexitySpace& s, std::uint64_t y)
{
    for (std::uint64_t a = (y - 1) & y; a != 0; a = (a - 1) & y)
        if ((s.hull(a) & s.hull(y & ~a)) != 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("radon_number examples", "[invariants]")
{
    for (int n = 1; n <= 5; ++n) {
        const auto r = radon_number(powerset_space(n));
        CHECK(r.value == n + 1);
        CHECK(r.exact);
        CHECK(r.witness_free_set.is_full());
    }
    const auto iv = radon_number(interval_space(6));
    CHECK(iv.value == 3);
    CHECK(iv.witness_free_set == ps(6, {0, 1}));
    REQUIRE(iv.witness_partition);
    CHECK((interval_space(6).hull(iv.witness_partition->first) &
           interval_space(6).hull(iv.witness_partition->second))
              .size() > 0);
    for (int n = 2; n <= 5; ++n)
        CHECK(radon_number(trivial_space(n)).value == 2);
    CHECK(radon_number(interval_space(6), false).value == 3);
}

TEST_CASE("radon witnesses are checkable", "[invariants][property]")
{
    for (const auto& s : oracle_pool("inv.radon.witness", 40, 8)) {
        const auto r = radon_number(s);
        CHECK(radon_free(s, r.witness_free_set.bits()));
        CHECK(r.witness_free_set.size() == r.value - 1);
        if (r.witness_partition) {
            const auto [a, b] = *r.witness_partition;
            CHECK(!a.is_empty());
            CHECK(!b.is_empty());
            CHECK((s.hull(a) & s.hull(b)).size() > 0);
        }
    }
}

TEST_CASE("radon_number agrees with the naive oracle", "[invariants][oracle]")
{
    for (const auto& s : oracle_pool("inv.radon.oracle", 60, 8)) {
        const oracle::Space naive(s);
        CHECK(radon_number(s).value == oracle::radon(naive));
    }
    CHECK(radon_number(powerset_space(3)).value == oracle::radon(oracle::Space(powerset_space(3))));
}

TEST_CASE("tverberg_number", "[invariants]")
{
    for (int n = 1; n <= 3; ++n)
        for (int k = 2; k <= 3; ++k)
            CHECK(tverberg_number(powerset_space(n), k).value == (k - 1) * n + 1);
    const auto iv = interval_space(5);
    CHECK(tverberg_number(iv, 3).value == oracle::tverberg(oracle::Space(iv), 3));
    CHECK_THROWS_AS(tverberg_number(iv, 1), std::invalid_argument);
    for (const auto& s : oracle_pool("inv.tverberg", 30, 6)) {
        CHECK(tverberg_number(s, 2).value == radon_number(s).value);
        CHECK(tverberg_number(s, 3).value == oracle::tverberg(oracle::Space(s), 3));
    }
}

TEST_CASE("helly_number examples", "[invariants]")
{
    CHECK(helly_number(grid_box_space({{4, 4}})).value == 2);
    CHECK(helly_number(interval_space(6)).value == 2);
    CHECK(helly_number(lattice_window_space({{3, 3}})).value == 4);
    for (int n = 1; n <= 4; ++n) {
        const auto h = helly_number(powerset_space(n));
        CHECK(h.value == n);
        CHECK(h.exact);
    }
    const auto one = helly_number(trivial_space(3));
    CHECK(one.value == 1);
    REQUIRE(one.witness_family.size() == 1);
    CHECK(one.witness_family[0].is_empty());
}

TEST_CASE("helly witness is minimally non-intersecting", "[invariants][property]")
{
    for (const auto& s : oracle_pool("inv.helly.witness", 40, 8)) {
        const auto h = helly_number(s);
        REQUIRE(static_cast<int>(h.witness_family.size()) == h.value);
        const int n = s.ground_size();
        CHECK(intersect_all(h.witness_family, n).is_empty());
        for (std::size_t i = 0; i < h.witness_family.size() && h.value > 1; ++i) {
            auto rest = h.witness_family;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            CHECK(!intersect_all(rest, n).is_empty());
        }
        for (const auto& m : h.witness_family)
            CHECK(s.contains(m));
    }
}

TEST_CASE("helly_number agrees with both naive oracles", "[invariants][oracle]")
{
    // The family oracle enumerates subfamilies of all convex sets, so it also
    // checks that restricting to meet-irreducible sets loses nothing.
    for (const auto& s : oracle_pool("inv.helly.oracle", 60, 7)) {
        const oracle::Space naive(s);
        const int h = helly_number(s).value;
        CHECK(h == oracle::helly_points(naive));
        CHECK(h == oracle::helly_families(naive, s.ground_size() + 1));
    }
    CHECK(oracle::helly_points(oracle::Space(grid_box_space({{4, 4}}))) == 2);
    CHECK(oracle::helly_points(oracle::Space(lattice_window_space({{3, 3}}))) == 4);
}

TEST_CASE("helly budget gives a lower bound", "[invariants]")
{
    const auto h = helly_number(powerset_space(8), 3);
    CHECK_FALSE(h.exact);
    CHECK(h.value <= 8);
}

TEST_CASE("colorful_helly_number examples", "[invariants]")
{
    const auto g = colorful_helly_number(grid_box_space({{2, 2}}));
    CHECK(g.value == 3);
    CHECK(g.exact);
    REQUIRE(g.obstruction.size() == 2);
    CHECK(is_colorful_obstruction(g.obstruction, 4));
    CHECK(oracle::colorful(oracle::Space(grid_box_space({{2, 2}})), 4, 5) == 3);

    const auto matching = Hypergraph::from_lists(4, 2, {{0, 1}, {2, 3}});
    CHECK(colorful_helly_number(associated_space(matching).space).value == 3);

    CHECK(colorful_helly_number(trivial_space(3)).value == 1);
}

TEST_CASE("colorful_helly_number agrees with the naive oracle", "[invariants][oracle]")
{
    for (const auto& s : oracle_pool("inv.colorful.oracle", 40, 5)) {
        const auto c = colorful_helly_number(s);
        REQUIRE(c.exact);
        CHECK(c.value == oracle::colorful(oracle::Space(s), s.ground_size() + 1, 8));
        CHECK(helly_number(s).value <= c.value);
        if (c.value > 1)
            CHECK(is_colorful_obstruction(c.obstruction, s.ground_size()));
    }
}

TEST_CASE("merging the last two classes keeps an obstruction", "[invariants][structure]")
{
    for (const auto& s : oracle_pool("inv.colorful.merge", 60, 6)) {
        const auto c = colorful_helly_number(s);
        if (c.obstruction.size() < 2)
            continue;
        const auto merged = merge_last_two(c.obstruction);
        CHECK(merged.size() == c.obstruction.size() - 1);
        CHECK(is_colorful_obstruction(merged, s.ground_size()));
        for (const auto& f : merged)
            for (const auto& k : f)
                CHECK(s.contains(k));
    }
}

TEST_CASE("colorful obstructions are monotone in m", "[invariants][structure]")
{
    // Exhaustive at m and m + 1 over classes drawn from all convex sets.
    for (const auto& s : oracle_pool("inv.colorful.monotone", 40, 5)) {
        const oracle::Space naive(s);
        if (oracle::helly_points(naive) > 3)
            continue;
        const auto classes = oracle::minimal_nonintersecting(naive, 3);
        for (int m = 1; m <= 4; ++m)
            if (!oracle::colorful_obstruction(naive, classes, m))
                CHECK_FALSE(oracle::colorful_obstruction(naive, classes, m + 1));
    }
}

TEST_CASE("obstructions reduce to meet-irreducible classes", "[invariants][structure]")
{
    // Splitting each member into its meet-irreducible supersets keeps both
    // the non-intersecting and the rainbow condition.
    for (const auto& s : oracle_pool("inv.colorful.basis", 40, 5)) {
        const oracle::Space naive(s);
        const auto classes = oracle::minimal_nonintersecting(naive, 4);
        const int n = s.ground_size();
        for (int m = 1; m <= 3; ++m) {
            oracle::for_each_multiset(static_cast<int>(classes.size()), m,
                                      [&](const std::vector<int>& pick) {
                ColorfulFamilies fam;
                for (int i : pick)
                    fam.push_back(detail::to_sets(n, classes[static_cast<std::size_t>(i)]));
                if (!is_colorful_obstruction(fam, n))
                    return true;
                ColorfulFamilies split;
                for (const auto& f : fam) {
                    std::vector<std::uint64_t> parts;
                    for (const auto& k : f)
                        for (auto b : s.basis())
                            if (b != 0 && (k.bits() & ~b) == 0)
                                parts.push_back(b);
                    std::sort(parts.begin(), parts.end());
                    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
                    split.push_back(detail::to_sets(n, parts));
                }
                CHECK(is_colorful_obstruction(split, n));
                return true;
            });
        }
    }
}

TEST_CASE("fractional_helly_profile examples", "[invariants]")
{
    const auto p = powerset_space(7);
    const std::vector<PointSet> shared{ps(7, {0, 1}), ps(7, {0, 2}), ps(7, {0})};
    auto prof = fractional_helly_profile(p, shared, 2);
    CHECK(prof.alpha == 1);
    CHECK(prof.beta_observed == 1);
    CHECK(prof.deepest_point == 0);

    const std::vector<PointSet> disjoint{ps(7, {0}), ps(7, {1}), ps(7, {2})};
    prof = fractional_helly_profile(p, disjoint, 2);
    CHECK(prof.alpha == 0);
    CHECK(prof.beta_observed == Rational(1, 3));

    const auto iv = interval_space(7);
    const std::vector<PointSet> intervals{ps(7, {0, 1, 2}), ps(7, {1, 2, 3}), ps(7, {2, 3, 4}),
                                          ps(7, {5, 6})};
    prof = fractional_helly_profile(iv, intervals, 2);
    CHECK(prof.alpha == Rational(1, 2));
    CHECK(prof.beta_observed == Rational(3, 4));
    CHECK(prof.deepest_point == 2);

    CHECK_THROWS_AS(fractional_helly_profile(iv, intervals, 5), std::invalid_argument);
    const std::vector<PointSet> not_convex{ps(7, {0, 2})};
    CHECK_THROWS_AS(fractional_helly_profile(iv, not_convex, 1), std::invalid_argument);
}

TEST_CASE("transversal examples", "[invariants]")
{
    const std::vector<PointSet> single{ps(3, {0, 1})};
    auto t = transversal(single);
    CHECK(t.tau == 1);
    CHECK(t.tau_star == 1);

    const std::vector<PointSet> tri{ps(3, {0, 1}), ps(3, {1, 2}), ps(3, {0, 2})};
    t = transversal(tri);
    CHECK(t.tau == 2);
    CHECK(t.tau_star == Rational(3, 2));
    CHECK(t.pierce_points == std::vector<int>{0, 1});

    const std::vector<PointSet> with_empty{ps(3, {0}), PointSet::empty(3)};
    CHECK_THROWS_AS(transversal(with_empty), std::invalid_argument);
}

TEST_CASE("transversal matches the partition definition", "[invariants][oracle]")
{
    for (int i = 0; i < 80; ++i) {
        auto rng = Rng::stream(5, "inv.transversal", static_cast<std::uint64_t>(i));
        const int n = rng.between(1, 8);
        const int f = rng.between(1, 9);
        std::vector<PointSet> family;
        std::vector<std::uint64_t> masks;
        for (int j = 0; j < f; ++j) {
            const std::uint64_t m = 1 + rng.below(full_mask(n));
            family.emplace_back(n, m);
            masks.push_back(m);
        }
        const auto t = transversal(family);
        CHECK(t.tau == oracle::tau_partition(masks, full_mask(n)));
        CHECK(static_cast<int>(t.pierce_points.size()) == t.tau);
        for (const auto& m : family) {
            bool hit = false;
            Rational weight;
            for (int x : t.pierce_points)
                hit = hit || m.contains(x);
            for (int x = 0; x < n; ++x)
                if (m.contains(x))
                    weight += t.weights[static_cast<std::size_t>(x)];
            CHECK(hit);
            CHECK(weight >= 1);
        }
        Rational total;
        for (const auto& w : t.weights)
            total += w;
        CHECK(total == t.tau_star);
        CHECK(t.tau_star <= t.tau);
        CHECK(t.tau <= n);
    }
}

TEST_CASE("pq_property", "[invariants]")
{
    const std::vector<PointSet> tri{ps(3, {0, 1}), ps(3, {1, 2}), ps(3, {0, 2})};
    CHECK(pq_property(tri, 2, 2).holds);
    CHECK_FALSE(pq_property(tri, 3, 3).holds);
    const std::vector<PointSet> disjoint{ps(3, {0}), ps(3, {1}), ps(3, {2})};
    const auto r = pq_property(disjoint, 3, 2);
    CHECK_FALSE(r.holds);
    CHECK(r.violating == std::vector<int>{0, 1, 2});
    CHECK(pq_property(disjoint, 4, 2).holds);
    CHECK_THROWS_AS(pq_property(tri, 2, 3), std::invalid_argument);

    const auto rep = pq_report(powerset_space(3), disjoint, 3, 2);
    CHECK_FALSE(rep.pq_holds);
    CHECK(rep.tau == 3);
    CHECK(rep.tau_star == 3);

    const auto common = pq_report(powerset_space(3), std::vector<PointSet>{ps(3, {0}), ps(3, {0, 1})}, 2, 2);
    CHECK(common.pq_holds);
    CHECK(common.tau == 1);
    CHECK(common.tau_star == 1);
}

TEST_CASE("(p,q) implies (p+1,q)", "[invariants][property]")
{
    for (int i = 0; i < 60; ++i) {
        auto rng = Rng::stream(5, "inv.pq", static_cast<std::uint64_t>(i));
        const int n = rng.between(2, 6);
        std::vector<PointSet> family;
        for (int j = 0, f = rng.between(2, 8); j < f; ++j)
            family.emplace_back(n, 1 + rng.below(full_mask(n)));
        for (int q = 2; q <= 3; ++q)
            for (int p = q; p <= 5; ++p)
                if (pq_property(family, p, q).holds)
                    CHECK(pq_property(family, p + 1, q).holds);
    }
}

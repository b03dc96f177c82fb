#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "radon_lab/io.hpp"
#include "radon_lab/setpairs.hpp"

using namespace radon_lab;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> one_based(const Bits& b)
{
    std::vector<int> out;
    for (auto j = b.find_first(); j != Bits::npos; j = b.find_next(j))
        out.push_back(static_cast<int>(j) + 1);
    return out;
}

SubsetOrder example_order()
{
    auto in = std::ifstream(std::string(GOLDEN_DIR) + "/order_k3_example.txt");
    return read_subset_order(in, 3);
}

Hypergraph disjointness_graph()
{
    // Vertices: nonempty proper subsets of {0,1,2,3}; edges join disjoint ones.
    std::vector<std::vector<int>> e;
    for (int i = 0; i < 14; ++i)
        for (int j = i + 1; j < 14; ++j)
            if (((i + 1) & (j + 1)) == 0)
                e.push_back({i, j});
    return Hypergraph::from_lists(14, 2, e);
}

}  // namespace

TEST_CASE("base family for k = 3 in the example order", "[setpairs]")
{
    const auto f = build_base(3, example_order());
    CHECK(one_based(f.pairs[0].a) == std::vector<int>{2, 3, 4, 5});
    CHECK(one_based(f.pairs[0].b) == std::vector<int>{1, 6, 7, 8});
    CHECK(one_based(f.pairs[1].a) == std::vector<int>{3, 5, 6, 7});
    CHECK(one_based(f.pairs[1].b) == std::vector<int>{1, 2, 4, 8});
    CHECK(one_based(f.pairs[2].a) == std::vector<int>{4, 5, 7, 8});
    CHECK(one_based(f.pairs[2].b) == std::vector<int>{1, 2, 3, 6});
    CHECK(verify(f).ok);
    std::ostringstream out;
    write_setpairs(out, f);
    CHECK(out.str() == slurp(std::string(GOLDEN_DIR) + "/setpairs_k3_example.txt"));
}

TEST_CASE("base family for k = 2 in binary-counter order", "[setpairs]")
{
    const auto f = build_base(2);
    CHECK(one_based(f.pairs[0].a) == std::vector<int>{2, 4});
    CHECK(one_based(f.pairs[0].b) == std::vector<int>{1, 3});
    CHECK(one_based(f.pairs[1].a) == std::vector<int>{3, 4});
    CHECK(one_based(f.pairs[1].b) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(build_base(1), std::invalid_argument);
    CHECK_THROWS_AS(build_base(7), std::invalid_argument);
    SubsetOrder bad{2, {0, 1, 1, 3}};
    CHECK_THROWS_AS(build_base(2, bad), std::invalid_argument);
}

TEST_CASE("base family sides and unique pattern witnesses", "[setpairs][property]")
{
    for (int k = 2; k <= 6; ++k) {
        const auto order = k == 3 ? example_order() : SubsetOrder::binary_counter(k);
        const auto f = build_base(k, order);
        CHECK(verify(f).ok);
        for (const auto& p : f.pairs) {
            CHECK(p.a.count() == (std::size_t{1} << (k - 1)));
            CHECK(p.b.count() == (std::size_t{1} << (k - 1)));
        }
        for (std::uint32_t sides_a = 0; sides_a < (1u << k); ++sides_a) {
            Bits meet(static_cast<std::size_t>(f.n));
            meet.set();
            for (int j = 0; j < k; ++j)
                meet &= ((sides_a >> j) & 1u) ? f.pairs[static_cast<std::size_t>(j)].a
                                              : f.pairs[static_cast<std::size_t>(j)].b;
            REQUIRE(meet.count() == 1);
            CHECK(order.sequence[meet.find_first()] == sides_a);
        }
    }
}

TEST_CASE("extend and pad", "[setpairs]")
{
    const auto base = build_base(3);
    const auto same = extend(base, 3);
    CHECK(same.n == base.n);
    CHECK(same.pairs[0].a == base.pairs[0].a);

    const auto grown = extend(build_base(2), 3);
    CHECK(grown.m() == 3);
    CHECK(grown.n <= 12);
    CHECK(verify(grown).ok);

    // From nothing: every pair of pairs needs its own block.
    const auto fresh = extend(SetPairFamily{2, 0, {}}, 3);
    CHECK(fresh.n == 12);
    CHECK(verify(fresh).ok);

    const auto padded = pad(grown, 20);
    CHECK(padded.n == 20);
    CHECK(verify(padded).ok);
    CHECK_THROWS_AS(pad(grown, 2), std::invalid_argument);
    CHECK_THROWS_AS(extend(grown, 2), std::invalid_argument);
}

TEST_CASE("build verifies within the element bound", "[setpairs]")
{
    for (int k = 2; k <= 4; ++k)
        for (int m = k; m <= 6; ++m) {
            const auto f = build(m, k);
            CHECK(verify(f).ok);
            CHECK(f.m() == m);
            CHECK(static_cast<std::uint64_t>(f.n) <= binomial(m, k) * (std::uint64_t{1} << k));
        }
    CHECK(build(4, 2).n <= 24);
    CHECK(build(5, 3).n <= 80);
    const auto kk = build(3, 3);
    CHECK(kk.pairs[1].a == build_base(3).pairs[1].a);
    CHECK_THROWS_AS(build(9, 2), CapExceeded);
    CHECK_THROWS_AS(build(5, 5), CapExceeded);
    CHECK_THROWS_AS(build(2, 3), std::invalid_argument);
}

TEST_CASE("verify reports the first failure", "[setpairs]")
{
    auto f = build_base(3, example_order());
    // Move element 5 from A1 to B1.
    f.pairs[0].a.reset(4);
    f.pairs[0].b.set(4);
    const auto r = verify(f);
    CHECK_FALSE(r.ok);
    CHECK(r.bad_tuple == std::vector<int>{0, 1, 2});
    CHECK(r.bad_pattern == 0b111u);
    CHECK(r.message.find("AAA") != std::string::npos);

    auto broken = build_base(2);
    broken.pairs[1].b.reset();
    const auto r1 = verify(broken);
    CHECK_FALSE(r1.ok);
    REQUIRE(r1.bad_pair);
    CHECK(*r1.bad_pair == 1);

    // Fewer pairs than k: only (i) is checked.
    SetPairFamily small{3, 2, {SetPair{Bits(2, 1), Bits(2, 2)}}};
    CHECK(verify(small).ok);
}

TEST_CASE("certificates from partition-free sets", "[setpairs]")
{
    const auto g = disjointness_graph();
    const auto out = radon_free_certificate(g, 2);
    CHECK(out.needed == 4);
    REQUIRE(out.certificate);
    const auto& cert = *out.certificate;
    CHECK(cert.edges.size() == 2);
    CHECK(cert.free_points.size() == 4);
    CHECK(verify(cert.pairs).ok);
    std::vector<std::uint64_t> slots;
    for (const auto& e : cert.edges)
        slots.push_back(e.bits());
    CHECK_FALSE(oracle::has_sdr_edge(g, slots));
    CHECK_FALSE(has_property_Tkm(g, 2).holds);

    const auto k3 = Hypergraph::from_lists(3, 2, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(has_property_Tkm(k3, 2).holds);
    CHECK_FALSE(radon_free_certificate(k3, 2).certificate);

    const auto edge = Hypergraph::from_lists(2, 2, {{0, 1}});
    CHECK_FALSE(radon_free_certificate(edge, 2).certificate);
    const auto edge3 = Hypergraph::from_lists(3, 3, {{0, 1, 2}});
    CHECK_FALSE(radon_free_certificate(edge3, 3).certificate);
}

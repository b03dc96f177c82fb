#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

#include "radon_lab/convexity_space.hpp"
#include "radon_lab/hypergraph.hpp"
#include "radon_lab/lp.hpp"

namespace radon_lab {

inline std::uint64_t fnv1a(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * SplitMix64 with its own bounded draw, so streams are identical on every
 * platform (std distributions are implementation-defined).
 */
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    /// Stream for instance `index` of check `name` under `seed`.
    static Rng stream(std::uint64_t seed, std::string_view name, std::uint64_t index)
    {
        return Rng(mix64(mix64(seed ^ fnv1a(name)) + index));
    }

    std::uint64_t next()
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform in [0, n), n > 0, by rejection.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold)
                return x % n;
        }
    }

    int between(int lo, int hi)
    {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

/// Closure of `gens` random subsets of {0..n-1}, each point kept with
/// probability num/den.
inline ConvexitySpace random_space(Rng& rng, int n, int gens, std::uint64_t num = 1,
                                   std::uint64_t den = 2)
{
    std::vector<PointSet> g;
    for (int i = 0; i < gens; ++i) {
        std::uint64_t m = 0;
        for (int x = 0; x < n; ++x)
            if (rng.chance(num, den))
                m |= bit(x);
        g.emplace_back(n, m);
    }
    return closure_from_generators(n, g);
}

/// Random k-uniform hypergraph on n vertices with 1..max_edges distinct edges.
inline Hypergraph random_hypergraph(Rng& rng, int n, int k, int max_edges)
{
    const int want = rng.between(1, max_edges);
    std::vector<std::uint64_t> edges;
    int attempts = 0;
    while (static_cast<int>(edges.size()) < want && attempts++ < 50 * max_edges) {
        std::uint64_t e = 0;
        while (popcount(e) < k)
            e |= bit(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        if (std::find(edges.begin(), edges.end(), e) == edges.end())
            edges.push_back(e);
    }
    std::vector<PointSet> sets;
    for (auto e : edges)
        sets.emplace_back(n, e);
    return {n, k, std::move(sets)};
}

/// Feasible bounded LP: rows with nonnegative coefficients, positive costs.
inline LinearProgram random_lp(Rng& rng, int max_vars, int max_rows)
{
    LinearProgram lp;
    const int n = rng.between(1, max_vars);
    const int m = rng.between(1, max_rows);
    for (int j = 0; j < n; ++j)
        lp.objective.emplace_back(rng.between(1, 9), rng.between(1, 4));
    for (int i = 0; i < m; ++i) {
        std::vector<Rational> row;
        bool any = false;
        for (int j = 0; j < n; ++j) {
            const int a = rng.chance(2, 3) ? rng.between(0, 6) : 0;
            any = any || a > 0;
            row.emplace_back(a);
        }
        if (!any)
            row[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)))] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(rng.between(-3, 12), rng.between(1, 3));
    }
    return lp;
}

}  // namespace radon_lab

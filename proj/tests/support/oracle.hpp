#pragma once

// Naive reference implementations for tests. Nothing here shares search
// code with the library: hulls intersect every convex set, and all searches
// enumerate without pruning.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "radon_lab/convexity_space.hpp"
#include "radon_lab/hypergraph.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline int count(Mask m) { return __builtin_popcountll(m); }

struct Space {
    int n = 0;
    std::vector<Mask> sets;

    explicit Space(const radon_lab::ConvexitySpace& s)
        : n(s.ground_size()), sets(s.masks().begin(), s.masks().end()) {}

    Mask full() const { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

    Mask hull(Mask y) const
    {
        Mask acc = full();
        for (auto s : sets)
            if ((y & ~s) == 0)
                acc &= s;
        return acc;
    }
};

/// Calls f(items) for every nondecreasing sequence of `size` values in [0, n).
inline void for_each_multiset(int n, int size, const std::function<bool(const std::vector<int>&)>& f)
{
    std::vector<int> items;
    std::function<bool(int)> rec = [&](int lo) -> bool {
        if (static_cast<int>(items.size()) == size)
            return f(items);
        for (int v = lo; v < n; ++v) {
            items.push_back(v);
            if (!rec(v))
                return false;
            items.pop_back();
        }
        return true;
    };
    rec(0);
}

/// Does the multiset split into exactly k nonempty parts with a common hull point?
inline bool has_partition(const Space& s, const std::vector<int>& items, int k)
{
    const int len = static_cast<int>(items.size());
    std::vector<int> part(static_cast<std::size_t>(len), 0);
    // All functions items -> [k], by odometer.
    for (;;) {
        std::vector<Mask> blocks(static_cast<std::size_t>(k), 0);
        std::vector<int> sizes(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < len; ++i) {
            blocks[static_cast<std::size_t>(part[static_cast<std::size_t>(i)])] |= bit(items[static_cast<std::size_t>(i)]);
            ++sizes[static_cast<std::size_t>(part[static_cast<std::size_t>(i)])];
        }
        if (std::all_of(sizes.begin(), sizes.end(), [](int z) { return z > 0; })) {
            Mask meet = s.full();
            for (auto b : blocks)
                meet &= s.hull(b);
            if (meet != 0)
                return true;
        }
        int i = 0;
        while (i < len && part[static_cast<std::size_t>(i)] == k - 1)
            part[static_cast<std::size_t>(i++)] = 0;
        if (i == len)
            return false;
        ++part[static_cast<std::size_t>(i)];
    }
}

/// Least size s such that every multiset of s points has a k-partition.
inline int tverberg(const Space& s, int k)
{
    for (int size = 1;; ++size) {
        bool all = true;
        for_each_multiset(s.n, size, [&](const std::vector<int>& items) {
            all = has_partition(s, items, k);
            return all;
        });
        if (all)
            return size;
    }
}

inline int radon(const Space& s) { return tverberg(s, 2); }

/// Largest Y with the hulls of all Y - y sharing no point.
inline int helly_points(const Space& s)
{
    int best = 0;
    for (Mask y = 0; y <= s.full(); ++y) {
        Mask meet = s.full();
        for (Mask r = y; r != 0; r &= r - 1)
            meet &= s.hull(y & ~(r & (~r + 1)));
        if (y != 0 && meet == 0)
            best = std::max(best, count(y));
        if (y == s.full())
            break;
    }
    return best;
}

/// All minimally non-intersecting subfamilies of nonempty convex sets, by
/// plain subset enumeration up to `max_size` members.
inline std::vector<std::vector<Mask>> minimal_nonintersecting(const Space& s, int max_size)
{
    std::vector<Mask> pool;
    for (auto m : s.sets)
        if (m != 0)
            pool.push_back(m);
    std::vector<std::vector<Mask>> out;
    std::vector<Mask> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!cur.empty()) {
            Mask meet = s.full();
            for (auto c : cur)
                meet &= c;
            if (meet == 0) {
                bool minimal = true;
                for (std::size_t i = 0; i < cur.size() && minimal; ++i) {
                    Mask rest = s.full();
                    for (std::size_t j = 0; j < cur.size(); ++j)
                        if (j != i)
                            rest &= cur[j];
                    minimal = rest != 0;
                }
                if (minimal)
                    out.push_back(cur);
            }
        }
        if (static_cast<int>(cur.size()) == max_size)
            return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Helly number as the largest minimally non-intersecting family.
inline int helly_families(const Space& s, int max_size)
{
    int best = 1;
    for (const auto& f : minimal_nonintersecting(s, max_size))
        best = std::max(best, static_cast<int>(f.size()));
    return best;
}

/// Is there an m-multiset of classes from L with every rainbow selection
/// intersecting? Checks every selection explicitly.
inline bool colorful_obstruction(const Space& s, const std::vector<std::vector<Mask>>& classes, int m)
{
    bool found = false;
    for_each_multiset(static_cast<int>(classes.size()), m, [&](const std::vector<int>& pick) {
        std::vector<std::size_t> choice(pick.size(), 0);
        bool all = true;
        for (;;) {
            Mask meet = s.full();
            for (std::size_t i = 0; i < pick.size(); ++i)
                meet &= classes[static_cast<std::size_t>(pick[i])][choice[i]];
            if (meet == 0) {
                all = false;
                break;
            }
            std::size_t i = 0;
            while (i < pick.size() &&
                   choice[i] + 1 == classes[static_cast<std::size_t>(pick[i])].size())
                choice[i++] = 0;
            if (i == pick.size())
                break;
            ++choice[i];
        }
        found = all;
        return !found;
    });
    return found;
}

/// Colorful Helly number over classes drawn from all convex sets.
inline int colorful(const Space& s, int max_family, int max_m)
{
    const auto classes = minimal_nonintersecting(s, max_family);
    for (int m = 1; m <= max_m; ++m)
        if (!colorful_obstruction(s, classes, m))
            return m;
    return -1;
}

/// Fewest intersecting parts partitioning the family.
inline int tau_partition(const std::vector<Mask>& family, Mask full)
{
    const std::size_t n = family.size();
    int best = static_cast<int>(n);
    std::vector<Mask> parts;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (static_cast<int>(parts.size()) >= best)
            return;
        if (i == n) {
            best = static_cast<int>(parts.size());
            return;
        }
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const Mask saved = parts[j];
            if ((saved & family[i]) == 0)
                continue;
            parts[j] = saved & family[i];
            rec(i + 1);
            parts[j] = saved;
        }
        parts.push_back(family[i] & full);
        rec(i + 1);
        parts.pop_back();
    };
    rec(0);
    return best;
}

// ---------------------------------------------------------------------------
// Hypergraph oracles

inline bool independent(const radon_lab::Hypergraph& h, Mask s)
{
    for (auto e : h.edge_masks())
        if ((e & ~s) == 0)
            return false;
    return true;
}

inline std::vector<Mask> mis(const radon_lab::Hypergraph& h)
{
    std::vector<Mask> out;
    const int n = h.vertex_count();
    for (Mask s = 0; s < bit(n); ++s) {
        if (!independent(h, s))
            continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if ((s & bit(v)) == 0 && independent(h, s | bit(v)))
                maximal = false;
        if (maximal)
            out.push_back(s);
    }
    return out;
}

inline int chromatic(const radon_lab::Hypergraph& h)
{
    const int n = h.vertex_count();
    for (int c = 1;; ++c) {
        std::vector<int> col(static_cast<std::size_t>(n), 0);
        for (;;) {
            bool proper = true;
            for (auto e : h.edge_masks()) {
                int first = -1;
                bool mono = true;
                for (int v = 0; v < n; ++v)
                    if (e & bit(v)) {
                        if (first < 0)
                            first = col[static_cast<std::size_t>(v)];
                        else if (col[static_cast<std::size_t>(v)] != first)
                            mono = false;
                    }
                if (mono) {
                    proper = false;
                    break;
                }
            }
            if (proper)
                return c;
            int i = 0;
            while (i < n && col[static_cast<std::size_t>(i)] == c - 1)
                col[static_cast<std::size_t>(i++)] = 0;
            if (i == n)
                break;
            ++col[static_cast<std::size_t>(i)];
        }
    }
}

inline int clique(const radon_lab::Hypergraph& h)
{
    const int n = h.vertex_count(), k = h.uniformity();
    int best = 0;
    for (Mask w = 0; w < bit(n); ++w) {
        if (count(w) < k || count(w) <= best)
            continue;
        bool ok = true;
        for (Mask t = w; t != 0 && ok; t = (t - 1) & w)
            if (count(t) == k && !h.is_edge(t))
                ok = false;
        if (ok)
            best = count(w);
    }
    return best;
}

/// SDR edge among the slots by trying every k slots and every choice of
/// one vertex per slot.
inline bool has_sdr_edge(const radon_lab::Hypergraph& h, const std::vector<Mask>& slots)
{
    const int k = h.uniformity();
    const int s = static_cast<int>(slots.size());
    bool found = false;
    std::vector<int> chosen;
    std::function<void(int, Mask)> pick = [&](int next, Mask reps) {
        if (found)
            return;
        if (static_cast<int>(chosen.size()) == k) {
            found = h.is_edge(reps);
            return;
        }
        for (int i = next; i < s; ++i) {
            chosen.push_back(i);
            for (Mask r = slots[static_cast<std::size_t>(i)]; r != 0; r &= r - 1) {
                const Mask v = r & (~r + 1);
                if ((reps & v) == 0)
                    pick(i + 1, reps | v);
            }
            chosen.pop_back();
        }
    };
    pick(0, 0);
    return found;
}

inline bool tkm(const radon_lab::Hypergraph& h, int m)
{
    const auto edges = h.edge_masks();
    bool holds = true;
    for_each_multiset(static_cast<int>(edges.size()), m, [&](const std::vector<int>& pick) {
        std::vector<Mask> slots;
        for (int i : pick)
            slots.push_back(edges[static_cast<std::size_t>(i)]);
        holds = has_sdr_edge(h, slots);
        return holds;
    });
    return holds;
}

}  // namespace oracle

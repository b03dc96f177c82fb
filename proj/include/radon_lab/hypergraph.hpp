#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "radon_lab/convexity_space.hpp"
#include "radon_lab/invariants.hpp"

namespace radon_lab {

inline constexpr int kMaxMisVertices = 24;
inline constexpr int kMaxChromaticVertices = 20;
inline constexpr std::size_t kDefaultMisCap = 1 << 16;

/// Nonempty k-uniform hypergraph on {0, ..., n-1}; edges canonically sorted.
class Hypergraph {
public:
    Hypergraph(int vertex_count, int uniformity, std::vector<PointSet> edges)
        : n_(vertex_count), k_(uniformity)
    {
        if (n_ < 1 || n_ > kMaxGround)
            throw std::invalid_argument("hypergraph vertex count must lie in [1, 64], got " +
                                        std::to_string(n_));
        if (k_ < 2 || k_ > n_)
            throw std::invalid_argument("uniformity must lie in [2, n], got " + std::to_string(k_));
        if (edges.empty())
            throw std::invalid_argument("hypergraph needs at least one edge");
        for (const auto& e : edges) {
            if (e.ground_size() != n_)
                throw std::invalid_argument("edge over the wrong vertex set");
            if (e.size() != k_)
                throw std::invalid_argument("edge " + to_string(e) + " does not have " +
                                            std::to_string(k_) + " distinct vertices");
            edges_.push_back(e.bits());
        }
        std::sort(edges_.begin(), edges_.end(),
                  [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("duplicate edge");
        edge_index_.insert(edges_.begin(), edges_.end());
    }

    /// Builds from vertex lists, e.g. {{0,1},{1,2}}.
    static Hypergraph from_lists(int vertex_count, int uniformity,
                                 const std::vector<std::vector<int>>& lists)
    {
        std::vector<PointSet> edges;
        for (const auto& l : lists) {
            if (static_cast<int>(l.size()) != uniformity)
                throw std::invalid_argument("edge list of wrong length");
            edges.push_back(PointSet::of(vertex_count, l));
        }
        return {vertex_count, uniformity, std::move(edges)};
    }

    int vertex_count() const noexcept { return n_; }
    int uniformity() const noexcept { return k_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const std::uint64_t> edge_masks() const noexcept { return edges_; }
    PointSet edge(std::size_t i) const { return {n_, edges_.at(i)}; }
    std::uint64_t all_vertices() const { return full_mask(n_); }

    std::vector<PointSet> edges() const
    {
        std::vector<PointSet> out;
        for (auto e : edges_)
            out.emplace_back(n_, e);
        return out;
    }

    bool is_edge(std::uint64_t mask) const { return edge_index_.contains(mask); }

    /// True iff some edge lies inside `mask`.
    bool contains_edge(std::uint64_t mask) const
    {
        return std::any_of(edges_.begin(), edges_.end(),
                           [&](std::uint64_t e) { return (e & ~mask) == 0; });
    }

private:
    int n_, k_;
    std::vector<std::uint64_t> edges_;
    std::unordered_set<std::uint64_t> edge_index_;
};

/// Independent: contains no edge. Maximal: every outside vertex completes one.
inline bool is_maximal_independent(const Hypergraph& h, std::uint64_t s)
{
    if (h.contains_edge(s))
        return false;
    for (std::uint64_t out = h.all_vertices() & ~s; out != 0; out &= out - 1)
        if (!h.contains_edge(s | (out & (~out + 1))))
            return false;
    return true;
}

/**
 * All maximal independent sets, canonically ordered. Backtracks over
 * vertices; an excluded vertex must keep some edge through it that could
 * still be completed, otherwise no maximal set is reachable below.
 */
inline std::vector<PointSet> maximal_independent_sets(const Hypergraph& h,
                                                      std::size_t cap = kDefaultMisCap)
{
    const int n = h.vertex_count();
    if (n > kMaxMisVertices)
        throw CapExceeded("maximal_independent_sets supports at most 24 vertices",
                          static_cast<std::size_t>(n));
    const auto edges = h.edge_masks();
    std::vector<std::uint64_t> found;

    auto blockable = [&](int v, std::uint64_t chosen) {
        // Vertices above v are still open.
        const std::uint64_t open = full_mask(n) & ~(bit(v + 1) - 1);
        for (auto e : edges)
            if ((e & bit(v)) != 0 && (e & ~bit(v) & ~(chosen | open)) == 0)
                return true;
        return false;
    };

    std::function<void(int, std::uint64_t)> dfs = [&](int v, std::uint64_t chosen) {
        if (v == n) {
            if (is_maximal_independent(h, chosen)) {
                if (found.size() >= cap)
                    throw CapExceeded("more than " + std::to_string(cap) +
                                          " maximal independent sets",
                                      found.size());
                found.push_back(chosen);
            }
            return;
        }
        const std::uint64_t with = chosen | bit(v);
        if (!h.contains_edge(with))
            dfs(v + 1, with);
        if (blockable(v, chosen))
            dfs(v + 1, chosen);
    };
    dfs(0, 0);

    std::sort(found.begin(), found.end(),
              [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
    std::vector<PointSet> out;
    for (auto s : found) {
        if (!is_maximal_independent(h, s))
            throw std::logic_error("enumerated set failed the maximality check");
        out.emplace_back(n, s);
    }
    return out;
}

struct ColoringResult {
    int chi = 0;
    /// Colour of every vertex, in [0, chi).
    std::vector<int> coloring;
};

/// True iff no colour class contains an edge.
inline bool is_proper_coloring(const Hypergraph& h, std::span<const int> coloring)
{
    if (static_cast<int>(coloring.size()) != h.vertex_count())
        return false;
    for (auto e : h.edge_masks()) {
        const int c = coloring[static_cast<std::size_t>(lowest(e))];
        bool mono = true;
        for (std::uint64_t r = e; r != 0 && mono; r &= r - 1)
            mono = coloring[static_cast<std::size_t>(lowest(r))] == c;
        if (mono)
            return false;
    }
    return true;
}

/// Exact chromatic number by iterative deepening on the number of parts.
/// Vertex v may only open colour max_used + 1, which removes relabelings.
inline ColoringResult chromatic_number(const Hypergraph& h)
{
    const int n = h.vertex_count();
    if (n > kMaxChromaticVertices)
        throw CapExceeded("chromatic_number supports at most 20 vertices",
                          static_cast<std::size_t>(n));
    std::vector<std::vector<std::uint64_t>> through(static_cast<std::size_t>(n));
    for (auto e : h.edge_masks())
        for (std::uint64_t r = e; r != 0; r &= r - 1)
            through[static_cast<std::size_t>(lowest(r))].push_back(e);

    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int c = 1; c <= n; ++c) {
        std::vector<std::uint64_t> cls(static_cast<std::size_t>(c), 0);
        std::function<bool(int, int)> dfs = [&](int v, int used) -> bool {
            if (v == n)
                return true;
            for (int col = 0; col < std::min(used + 1, c); ++col) {
                const std::uint64_t next = cls[static_cast<std::size_t>(col)] | bit(v);
                const auto& es = through[static_cast<std::size_t>(v)];
                if (std::any_of(es.begin(), es.end(),
                                [&](std::uint64_t e) { return (e & ~next) == 0; }))
                    continue;
                cls[static_cast<std::size_t>(col)] = next;
                color[static_cast<std::size_t>(v)] = col;
                if (dfs(v + 1, std::max(used, col + 1)))
                    return true;
                cls[static_cast<std::size_t>(col)] &= ~bit(v);
            }
            return false;
        };
        if (dfs(0, 0)) {
            if (!is_proper_coloring(h, color))
                throw std::logic_error("chromatic_number produced an improper colouring");
            return {c, color};
        }
    }
    throw std::logic_error("no proper colouring found");
}

struct CliqueResult {
    int omega = 0;
    PointSet clique;
};

/// Largest W whose k-subsets are all edges.
inline CliqueResult clique_number(const Hypergraph& h)
{
    const int n = h.vertex_count(), k = h.uniformity();
    if (n > kMaxMisVertices)
        throw CapExceeded("clique_number supports at most 24 vertices", static_cast<std::size_t>(n));
    std::uint64_t best = h.edge_masks().front();
    int best_size = k;

    // Does every (k-1)-subset T of w give an edge T + v?
    auto extends = [&](std::uint64_t w, int v) {
        if (popcount(w) < k - 1)
            return true;
        bool ok = true;
        std::vector<int> members;
        for (std::uint64_t r = w; r != 0; r &= r - 1)
            members.push_back(lowest(r));
        detail::for_each_combination(static_cast<int>(members.size()), k - 1,
                                     [&](std::span<const int> idx) {
                                         std::uint64_t t = bit(v);
                                         for (int i : idx)
                                             t |= bit(members[static_cast<std::size_t>(i)]);
                                         ok = h.is_edge(t);
                                         return ok;
                                     });
        return ok;
    };

    std::function<void(std::uint64_t, int)> dfs = [&](std::uint64_t w, int next) {
        const int size = popcount(w);
        if (size > best_size) {
            best_size = size;
            best = w;
        }
        for (int v = next; v < n; ++v) {
            if (size + (n - v) <= best_size)
                return;
            if (extends(w, v))
                dfs(w | bit(v), v + 1);
        }
    };
    dfs(0, 0);
    return {best_size, PointSet(n, best)};
}

/// Indices of the maximal independent sets containing W.
inline PointSet star(std::span<const PointSet> mis, const PointSet& w)
{
    if (mis.size() > static_cast<std::size_t>(kMaxGround))
        throw CapExceeded("more than 64 maximal independent sets", mis.size());
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < mis.size(); ++i)
        if (w.subset_of(mis[i]))
            out |= bit(static_cast<int>(i));
    return {static_cast<int>(mis.size()), out};
}

/// Convexity space on the maximal independent sets (by index) whose convex
/// sets are the stars of vertex sets.
struct AssociatedSpace {
    std::vector<PointSet> mis;
    ConvexitySpace space;
    /// star({v}) for every vertex v.
    std::vector<PointSet> vertex_stars;
};

inline AssociatedSpace associated_space(const Hypergraph& h, std::size_t mis_cap = kDefaultMisCap)
{
    auto mis = maximal_independent_sets(h, mis_cap);
    if (mis.size() > static_cast<std::size_t>(kMaxGround))
        throw CapExceeded("associated space needs at most 64 maximal independent sets, found " +
                              std::to_string(mis.size()),
                          mis.size());
    std::vector<PointSet> stars;
    for (int v = 0; v < h.vertex_count(); ++v)
        stars.push_back(star(mis, PointSet(h.vertex_count(), bit(v))));
    auto space = closure_from_generators(static_cast<int>(mis.size()), stars);
    return {std::move(mis), std::move(space), std::move(stars)};
}

// ---------------------------------------------------------------------------
// SDR properties

struct SdrWitness {
    /// Slot positions in the edge multiset, one per representative.
    std::vector<int> chosen_indices;
    std::vector<int> representatives;
    PointSet witness_edge;
};

namespace detail {

/// Kuhn matching of the vertices of `target` into slots whose edge contains
/// them. Returns slot per vertex (in vertex order) when all are matched.
inline std::optional<std::vector<int>> saturate(std::uint64_t target,
                                                std::span<const std::uint64_t> slots)
{
    std::vector<int> verts;
    for (std::uint64_t r = target; r != 0; r &= r - 1)
        verts.push_back(lowest(r));
    std::vector<int> owner(slots.size(), -1);
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t vi) -> bool {
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if ((slots[s] & bit(verts[vi])) == 0 || seen[s])
                continue;
            seen[s] = 1;
            if (owner[s] < 0 || augment(static_cast<std::size_t>(owner[s]))) {
                owner[s] = static_cast<int>(vi);
                return true;
            }
        }
        return false;
    };
    for (std::size_t vi = 0; vi < verts.size(); ++vi) {
        seen.assign(slots.size(), 0);
        if (!augment(vi))
            return std::nullopt;
    }
    std::vector<int> slot_of(verts.size(), -1);
    for (std::size_t s = 0; s < slots.size(); ++s)
        if (owner[s] >= 0)
            slot_of[static_cast<std::size_t>(owner[s])] = static_cast<int>(s);
    return slot_of;
}

}  // namespace detail

/// First edge (canonical order) that is an SDR of some k slots of the
/// multiset `slots` (edge masks, repeats allowed).
inline std::optional<SdrWitness> find_sdr_edge(const Hypergraph& h,
                                               std::span<const std::uint64_t> slots)
{
    if (static_cast<int>(slots.size()) < h.uniformity())
        return std::nullopt;
    std::uint64_t reach = 0;
    for (auto s : slots)
        reach |= s;
    for (auto e : h.edge_masks()) {
        if ((e & ~reach) != 0)
            continue;
        if (auto match = detail::saturate(e, slots)) {
            SdrWitness w;
            w.witness_edge = PointSet(h.vertex_count(), e);
            std::size_t i = 0;
            for (std::uint64_t r = e; r != 0; r &= r - 1, ++i) {
                w.representatives.push_back(lowest(r));
                w.chosen_indices.push_back((*match)[i]);
            }
            return w;
        }
    }
    return std::nullopt;
}

struct TkmResult {
    bool holds = true;
    /// Lex-first failing multiset as sorted edge indices (empty when holds).
    std::vector<int> violating;
    /// Fewer distinct edges than m; the check still runs over multisets.
    bool fewer_edges_than_m = false;
    std::uint64_t nodes = 0;
};

namespace detail {

/**
 * Depth-first search over multisets of edges (nondecreasing index) without
 * an SDR edge, up to `limit` items. Failure is inherited by sub-multisets,
 * and an edge used k times is its own SDR, so multiplicities stay below k.
 * `visit(items)` runs on every failing multiset; returning false stops.
 */
template <class Visit>
void search_failing_multisets(const Hypergraph& h, int limit, Budget& budget, Visit&& visit)
{
    const int k = h.uniformity();
    const auto edges = h.edge_masks();
    std::vector<int> items;
    std::vector<std::uint64_t> slots;
    std::vector<int> mult(edges.size(), 0);
    bool stop = false;
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        if (!visit(std::span<const int>(items))) {
            stop = true;
            return;
        }
        if (static_cast<int>(items.size()) == limit)
            return;
        for (std::size_t i = start; i < edges.size() && !stop; ++i) {
            if (mult[i] >= k - 1)
                continue;
            if (!budget.spend()) {
                stop = true;
                return;
            }
            items.push_back(static_cast<int>(i));
            slots.push_back(edges[i]);
            ++mult[i];
            if (!find_sdr_edge(h, slots))
                dfs(i);
            --mult[i];
            slots.pop_back();
            items.pop_back();
        }
    };
    dfs(0);
}

}  // namespace detail

/// T_k(m): every multiset of m edges has k slots with an SDR that is an edge.
inline TkmResult has_property_Tkm(const Hypergraph& h, int m,
                                  std::uint64_t budget_limit = kDefaultNodeBudget)
{
    if (m < h.uniformity())
        throw std::invalid_argument("has_property_Tkm needs m >= k");
    Budget budget(budget_limit);
    TkmResult out;
    out.fewer_edges_than_m = static_cast<int>(h.edge_count()) < m;
    detail::search_failing_multisets(h, m, budget, [&](std::span<const int> items) {
        if (static_cast<int>(items.size()) == m) {
            out.holds = false;
            out.violating.assign(items.begin(), items.end());
            return false;
        }
        return true;
    });
    out.nodes = budget.used();
    if (budget.exhausted())
        throw CapExceeded("has_property_Tkm exceeded its node budget", budget.used());
    return out;
}

struct MinMResult {
    /// Least m with T_k(m); empty when above the cap.
    std::optional<int> value;
    /// Largest multiset without an SDR edge (edge indices).
    std::vector<int> largest_failing;
    std::uint64_t nodes = 0;
};

/// T_k is monotone in m since failure passes to sub-multisets, so the least
/// m is one more than the largest failing multiset (and at least k).
inline MinMResult min_m_Tk(const Hypergraph& h, int cap,
                           std::uint64_t budget_limit = kDefaultNodeBudget)
{
    if (cap < h.uniformity())
        throw std::invalid_argument("min_m_Tk needs cap >= k");
    Budget budget(budget_limit);
    MinMResult out;
    detail::search_failing_multisets(h, cap, budget, [&](std::span<const int> items) {
        if (items.size() > out.largest_failing.size())
            out.largest_failing.assign(items.begin(), items.end());
        return static_cast<int>(items.size()) < cap;
    });
    out.nodes = budget.used();
    if (budget.exhausted())
        throw CapExceeded("min_m_Tk exceeded its node budget", budget.used());
    const int fail = static_cast<int>(out.largest_failing.size());
    if (fail < cap)
        out.value = std::max(h.uniformity(), fail + 1);
    return out;
}

struct EdgeFamilyCheck {
    bool holds = true;
    /// First offending family as edge indices.
    std::vector<int> witness;
};

/// delta_k(m): every sunflower of m distinct edges has an SDR edge.
inline EdgeFamilyCheck has_property_delta_km(const Hypergraph& h, int m)
{
    if (m < h.uniformity())
        throw std::invalid_argument("has_property_delta_km needs m >= k");
    const auto edges = h.edge_masks();
    EdgeFamilyCheck out;
    detail::for_each_combination(static_cast<int>(edges.size()), m, [&](std::span<const int> idx) {
        const std::uint64_t core = edges[static_cast<std::size_t>(idx[0])] &
                                   edges[static_cast<std::size_t>(idx[1])];
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                if ((edges[static_cast<std::size_t>(idx[a])] &
                     edges[static_cast<std::size_t>(idx[b])]) != core)
                    return true;
        std::vector<std::uint64_t> slots;
        for (int i : idx)
            slots.push_back(edges[static_cast<std::size_t>(i)]);
        if (!find_sdr_edge(h, slots)) {
            out.holds = false;
            out.witness.assign(idx.begin(), idx.end());
            return false;
        }
        return true;
    });
    return out;
}

/// D_k(m): m pairwise disjoint edges always span an edge meeting each in at
/// most one vertex.
inline EdgeFamilyCheck has_property_Dkm(const Hypergraph& h, int m)
{
    if (m < h.uniformity())
        throw std::invalid_argument("has_property_Dkm needs m >= k");
    const auto edges = h.edge_masks();
    EdgeFamilyCheck out;
    detail::for_each_combination(static_cast<int>(edges.size()), m, [&](std::span<const int> idx) {
        std::uint64_t cover = 0;
        for (int i : idx) {
            const std::uint64_t e = edges[static_cast<std::size_t>(i)];
            if ((cover & e) != 0)
                return true;
            cover |= e;
        }
        const bool spanned = std::any_of(edges.begin(), edges.end(), [&](std::uint64_t f) {
            if ((f & ~cover) != 0)
                return false;
            return std::all_of(idx.begin(), idx.end(), [&](int i) {
                return popcount(f & edges[static_cast<std::size_t>(i)]) <= 1;
            });
        });
        if (!spanned) {
            out.holds = false;
            out.witness.assign(idx.begin(), idx.end());
            return false;
        }
        return true;
    });
    return out;
}

/// Graphs only: true iff there are no m disjoint edges whose endpoints span
/// no further edge.
inline bool induced_matching_oracle(const Hypergraph& g, int m)
{
    if (g.uniformity() != 2)
        throw std::invalid_argument("induced_matching_oracle needs a graph (k = 2)");
    const auto edges = g.edge_masks();
    bool none = true;
    detail::for_each_combination(static_cast<int>(edges.size()), m, [&](std::span<const int> idx) {
        std::uint64_t cover = 0;
        for (int i : idx) {
            const std::uint64_t e = edges[static_cast<std::size_t>(i)];
            if ((cover & e) != 0)
                return true;
            cover |= e;
        }
        int inside = 0;
        for (auto e : edges)
            inside += (e & ~cover) == 0 ? 1 : 0;
        if (inside == m)
            none = false;
        return none;
    });
    return none;
}

}  // namespace radon_lab

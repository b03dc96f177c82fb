#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "radon_lab/convexity_space.hpp"
#include "radon_lab/lp.hpp"

namespace radon_lab {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Per-call search budget. Exhaustion turns an exact answer into a bound.
class Budget {
public:
    explicit Budget(std::uint64_t limit = kDefaultNodeBudget) : limit_(limit) {}

    /// Returns false once the limit is passed.
    bool spend(std::uint64_t n = 1)
    {
        used_ += n;
        if (used_ > limit_)
            exhausted_ = true;
        return !exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    bool exhausted_ = false;
};

namespace detail {

/// Memoized hull lookups for one search.
class HullCache {
public:
    explicit HullCache(const ConvexitySpace& space) : space_(space) {}

    std::uint64_t operator()(std::uint64_t y)
    {
        auto it = memo_.find(y);
        if (it != memo_.end())
            return it->second;
        const std::uint64_t h = space_.hull(y);
        memo_.emplace(y, h);
        return h;
    }

private:
    const ConvexitySpace& space_;
    std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

inline std::vector<PointSet> to_sets(int ground, std::span<const std::uint64_t> masks)
{
    std::vector<PointSet> out;
    for (auto m : masks)
        out.emplace_back(ground, m);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Radon number

struct RadonResult {
    /// r, or a lower bound on r when `exact` is false.
    int value = 0;
    bool exact = true;
    bool multiset_mode = true;
    /// Canonically least largest set without a Radon partition.
    PointSet witness_free_set;
    /// Radon partition of the free set plus its least outside point.
    std::optional<std::pair<PointSet, PointSet>> witness_partition;
    std::uint64_t nodes = 0;
};

namespace detail {

/// First Radon partition (A, B) of y | {x} with x in B, if any.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>>
radon_partition_with(HullCache& hull, std::uint64_t y, int x)
{
    for (std::uint64_t a = y; a != 0; a = (a - 1) & y) {
        const std::uint64_t b = (y & ~a) | bit(x);
        if ((hull(a) & hull(b)) != 0)
            return std::pair{a, b};
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Radon number by depth-first search over partition-free point sets, which
 * are closed under taking subsets. Both parts of a partition are nonempty.
 *
 * In multiset mode a repeated point always splits as ({x}, {x, ...}), so the
 * partition-free multisets are exactly the partition-free sets and both modes
 * return the same value, |X| + 1 when X itself is partition-free.
 */
inline RadonResult radon_number(const ConvexitySpace& space, bool allow_multisets = true,
                                std::uint64_t budget_limit = kDefaultNodeBudget)
{
    const int n = space.ground_size();
    detail::HullCache hull(space);
    Budget budget(budget_limit);
    std::uint64_t best = 0;
    int best_size = 0;

    std::function<void(std::uint64_t, int, int)> dfs = [&](std::uint64_t y, int size, int next) {
        if (!budget.spend())
            return;
        if (size > best_size) {
            best_size = size;
            best = y;
        }
        for (int x = next; x < n; ++x) {
            if (size + (n - x) <= best_size || budget.exhausted())
                return;
            if (!detail::radon_partition_with(hull, y, x))
                dfs(y | bit(x), size + 1, x + 1);
        }
    };
    dfs(0, 0, 0);

    RadonResult result;
    result.multiset_mode = allow_multisets;
    result.value = best_size + 1;
    result.exact = !budget.exhausted();
    result.witness_free_set = PointSet(n, best);
    result.nodes = budget.used();
    const std::uint64_t outside = space.full() & ~best;
    if (outside != 0) {
        if (auto part = detail::radon_partition_with(hull, best, lowest(outside)))
            result.witness_partition = std::pair{PointSet(n, part->first), PointSet(n, part->second)};
    }
    else if (allow_multisets && n > 0) {
        result.witness_partition = std::pair{PointSet(n, bit(0)), PointSet(n, bit(0))};
    }
    return result;
}

// ---------------------------------------------------------------------------
// Tverberg numbers

struct TverbergResult {
    int k = 2;
    int value = 0;
    bool exact = true;
    /// Largest multiset (sorted, with repeats) without a Tverberg k-partition.
    std::vector<int> witness_free_multiset;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Does the item list admit a partition into exactly k nonempty parts whose
/// hulls share a point?
inline bool has_tverberg_partition(HullCache& hull, std::span<const int> items, int k,
                                   std::uint64_t full, Budget& budget)
{
    const int s = static_cast<int>(items.size());
    if (s < k)
        return false;
    std::vector<std::uint64_t> block(static_cast<std::size_t>(k), 0);
    std::function<bool(int, int)> assign = [&](int i, int used) -> bool {
        if (s - i < k - used)
            return false;
        if (i == s) {
            if (!budget.spend())
                return false;
            std::uint64_t meet = full;
            for (int b = 0; b < k && meet != 0; ++b)
                meet &= hull(block[static_cast<std::size_t>(b)]);
            return meet != 0;
        }
        const std::uint64_t p = bit(items[static_cast<std::size_t>(i)]);
        const int limit = std::min(used + 1, k);
        for (int b = 0; b < limit; ++b) {
            const std::uint64_t saved = block[static_cast<std::size_t>(b)];
            block[static_cast<std::size_t>(b)] |= p;
            const bool found = assign(i + 1, std::max(used, b + 1));
            block[static_cast<std::size_t>(b)] = saved;
            if (found || budget.exhausted())
                return found;
        }
        return false;
    };
    return assign(0, 0);
}

}  // namespace detail

/**
 * k-th Tverberg number over multisets. A point of multiplicity k splits
 * trivially, so only multiplicities up to k-1 are searched; partition-free
 * multisets are closed under removing items.
 */
inline TverbergResult tverberg_number(const ConvexitySpace& space, int k,
                                      std::uint64_t budget_limit = kDefaultNodeBudget)
{
    if (k < 2)
        throw std::invalid_argument("tverberg_number: k must be at least 2");
    const int n = space.ground_size();
    detail::HullCache hull(space);
    Budget budget(budget_limit);
    std::vector<int> items, best;
    std::vector<int> count(static_cast<std::size_t>(n), 0);

    std::function<void(int)> dfs = [&](int next) {
        if (!budget.spend())
            return;
        if (items.size() > best.size())
            best = items;
        for (int x = next; x < n; ++x) {
            long long capacity = static_cast<long long>(items.size());
            for (int y = x; y < n; ++y)
                capacity += k - 1 - count[static_cast<std::size_t>(y)];
            if (capacity <= static_cast<long long>(best.size()) || budget.exhausted())
                return;
            if (count[static_cast<std::size_t>(x)] >= k - 1)
                continue;
            items.push_back(x);
            ++count[static_cast<std::size_t>(x)];
            if (!detail::has_tverberg_partition(hull, items, k, space.full(), budget))
                dfs(x);
            --count[static_cast<std::size_t>(x)];
            items.pop_back();
        }
    };
    dfs(0);

    TverbergResult result;
    result.k = k;
    result.value = static_cast<int>(best.size()) + 1;
    result.exact = !budget.exhausted();
    result.witness_free_multiset = best;
    result.nodes = budget.used();
    return result;
}

// ---------------------------------------------------------------------------
// Helly and colorful Helly numbers

struct HellyResult {
    int value = 0;
    bool exact = true;
    std::vector<PointSet> witness_family;
    std::uint64_t nodes = 0;
};

namespace detail {

/**
 * Enumerates minimally non-intersecting families of size >= 2 drawn from
 * `pool` (nonempty masks, distinct). Families grow in index order and every
 * member must stay irredundant: a member whose removal leaves the
 * intersection unchanged stays redundant in every superfamily.
 *
 * `visit` returns false to stop. `min_size_hint` prunes branches that cannot
 * reach that size.
 */
template <class Visit>
void enumerate_minimal_nonintersecting(std::span<const std::uint64_t> pool, std::uint64_t full,
                                       Budget& budget, Visit&& visit,
                                       const std::function<std::size_t()>& min_size_hint = {})
{
    std::vector<std::size_t> chosen;
    std::vector<std::uint64_t> prefix{full};
    bool stop = false;

    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        for (std::size_t j = start; j < pool.size() && !stop; ++j) {
            if (min_size_hint && chosen.size() + (pool.size() - j) < min_size_hint())
                return;
            if (!budget.spend()) {
                stop = true;
                return;
            }
            const std::uint64_t meet = prefix.back() & pool[j];
            if (meet == prefix.back())
                continue;
            // Irredundancy of earlier members: intersection without member i.
            bool irredundant = true;
            std::uint64_t suffix = pool[j];
            for (std::size_t i = chosen.size(); i-- > 0 && irredundant;) {
                if ((prefix[i] & suffix) == meet)
                    irredundant = false;
                suffix &= pool[chosen[i]];
            }
            if (!irredundant)
                continue;
            chosen.push_back(j);
            if (meet == 0) {
                if (!visit(std::span<const std::size_t>(chosen)))
                    stop = true;
            }
            else {
                prefix.push_back(meet);
                dfs(j + 1);
                prefix.pop_back();
            }
            chosen.pop_back();
        }
    };
    dfs(0);
}

inline std::vector<std::uint64_t> nonempty_basis(const ConvexitySpace& space)
{
    std::vector<std::uint64_t> out;
    for (auto b : space.basis())
        if (b != 0)
            out.push_back(b);
    return out;
}

}  // namespace detail

/**
 * Largest minimally non-intersecting family. Families of size two or more
 * never contain the empty set, and any such family in the space can be
 * traded for one of equal size drawn from the meet-irreducible sets, so the
 * search runs over the nonempty hull basis. {empty set} gives the value 1.
 */
inline HellyResult helly_number(const ConvexitySpace& space,
                                std::uint64_t budget_limit = kDefaultNodeBudget)
{
    const int n = space.ground_size();
    const auto pool = detail::nonempty_basis(space);
    Budget budget(budget_limit);
    HellyResult result;
    result.value = 1;
    result.witness_family = {PointSet::empty(n)};
    std::size_t best = 1;
    detail::enumerate_minimal_nonintersecting(
        pool, space.full(), budget,
        [&](std::span<const std::size_t> family) {
            if (family.size() > best) {
                best = family.size();
                result.witness_family.clear();
                for (auto i : family)
                    result.witness_family.emplace_back(n, pool[i]);
            }
            return true;
        },
        [&] { return best + 1; });
    result.value = static_cast<int>(best);
    result.exact = !budget.exhausted();
    result.nodes = budget.used();
    return result;
}

/// One colour class per entry; each a list of convex sets.
using ColorfulFamilies = std::vector<std::vector<PointSet>>;

/// Every family non-intersecting, every member nonempty, every rainbow
/// selection intersecting.
inline bool is_colorful_obstruction(const ColorfulFamilies& families, int ground)
{
    if (families.empty())
        return false;
    std::vector<std::uint64_t> partial{full_mask(ground)};
    for (const auto& f : families) {
        if (f.empty() || !intersect_all(f, ground).is_empty())
            return false;
        std::vector<std::uint64_t> next;
        for (auto p : partial)
            for (const auto& k : f) {
                if ((p & k.bits()) == 0)
                    return false;
                next.push_back(p & k.bits());
            }
        partial = std::move(next);
    }
    return true;
}

/**
 * Replaces the last two colour classes by their pairwise intersections. For
 * an obstruction with m >= 2 classes over an intersection-closed family the
 * result is an obstruction with m - 1 classes, which makes the colorful
 * property monotone in m.
 */
inline ColorfulFamilies merge_last_two(const ColorfulFamilies& families)
{
    if (families.size() < 2)
        throw std::invalid_argument("merge_last_two needs at least two classes");
    ColorfulFamilies out(families.begin(), families.end() - 2);
    std::vector<std::uint64_t> merged;
    for (const auto& a : families[families.size() - 2])
        for (const auto& b : families.back())
            merged.push_back((a & b).bits());
    std::sort(merged.begin(), merged.end(),
              [](std::uint64_t x, std::uint64_t y) { return canonical_less(x, y); });
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    const int ground = families.back().front().ground_size();
    out.push_back(detail::to_sets(ground, merged));
    return out;
}

struct ColorfulResult {
    /// h_c, or a lower bound when `exact` is false.
    int value = 0;
    bool exact = true;
    /// Obstruction with value-1 classes (empty when value is 1).
    ColorfulFamilies obstruction;
    std::size_t minimal_families = 0;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Keeps only inclusion-minimal masks; larger ones cannot die first.
inline void reduce_to_minimal(std::vector<std::uint64_t>& masks)
{
    std::sort(masks.begin(), masks.end(),
              [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint64_t> kept;
    for (auto m : masks) {
        const bool dominated = std::any_of(kept.begin(), kept.end(),
                                           [&](std::uint64_t k) { return (k & ~m) == 0; });
        if (!dominated)
            kept.push_back(m);
    }
    masks = std::move(kept);
}

/// First obstruction with m classes drawn (with repetition, nondecreasing
/// index) from `families`, as indices.
inline std::optional<std::vector<std::size_t>>
find_obstruction(const std::vector<std::vector<std::uint64_t>>& families, int m,
                 std::uint64_t full, Budget& budget)
{
    std::vector<std::size_t> chosen;
    std::optional<std::vector<std::size_t>> found;
    std::function<void(std::size_t, const std::vector<std::uint64_t>&)> dfs =
        [&](std::size_t start, const std::vector<std::uint64_t>& partial) {
            if (static_cast<int>(chosen.size()) == m) {
                found = chosen;
                return;
            }
            for (std::size_t i = start; i < families.size() && !found; ++i) {
                if (!budget.spend())
                    return;
                std::vector<std::uint64_t> next;
                bool alive = true;
                for (auto p : partial) {
                    for (auto k : families[i]) {
                        const std::uint64_t meet = p & k;
                        if (meet == 0) {
                            alive = false;
                            break;
                        }
                        next.push_back(meet);
                    }
                    if (!alive)
                        break;
                }
                if (!alive)
                    continue;
                reduce_to_minimal(next);
                chosen.push_back(i);
                dfs(i, next);
                chosen.pop_back();
            }
        };
    dfs(0, {full});
    return found;
}

}  // namespace detail

/**
 * Colorful Helly number: least m such that no m non-intersecting classes
 * have all rainbow selections intersecting.
 *
 * Reductions used (each covered by its own unit test):
 *  - every member of an obstruction splits into meet-irreducible sets
 *    without changing either condition, so classes come from the hull basis;
 *  - each class shrinks to a minimally non-intersecting subfamily;
 *  - obstructions at m + 1 yield obstructions at m (merge_last_two), so the
 *    first m without an obstruction is the answer.
 */
inline ColorfulResult colorful_helly_number(const ConvexitySpace& space,
                                            std::uint64_t budget_limit = kDefaultNodeBudget,
                                            int max_m = 16)
{
    const int n = space.ground_size();
    const auto pool = detail::nonempty_basis(space);
    Budget budget(budget_limit);
    std::vector<std::vector<std::uint64_t>> families;
    detail::enumerate_minimal_nonintersecting(pool, space.full(), budget,
                                              [&](std::span<const std::size_t> family) {
                                                  std::vector<std::uint64_t> f;
                                                  for (auto i : family)
                                                      f.push_back(pool[i]);
                                                  families.push_back(std::move(f));
                                                  return true;
                                              });
    ColorfulResult result;
    result.minimal_families = families.size();
    int m = 1;
    while (!budget.exhausted()) {
        if (m > max_m) {
            result.value = m;
            result.exact = false;
            result.nodes = budget.used();
            return result;
        }
        auto found = detail::find_obstruction(families, m, space.full(), budget);
        if (budget.exhausted())
            break;
        if (!found) {
            result.value = m;
            result.nodes = budget.used();
            return result;
        }
        result.obstruction.clear();
        for (auto i : *found)
            result.obstruction.push_back(detail::to_sets(n, families[i]));
        ++m;
    }
    result.value = m;
    result.exact = false;
    result.nodes = budget.used();
    return result;
}

// ---------------------------------------------------------------------------
// Family-level measurements

struct FractionalHellyProfile {
    int k = 0;
    Rational alpha;
    Rational beta_observed;
    int deepest_point = -1;
    std::uint64_t intersecting_tuples = 0;
    std::uint64_t total_tuples = 0;
    int max_depth = 0;
};

namespace detail {

inline void check_family_in_space(const ConvexitySpace& space, std::span<const PointSet> family)
{
    for (std::size_t i = 0; i < family.size(); ++i)
        if (!space.contains(family[i]))
            throw std::invalid_argument("family member " + std::to_string(i) + " " +
                                        to_string(family[i]) + " is not a convex set of the space");
}

inline int family_ground(std::span<const PointSet> family)
{
    if (family.empty())
        return 0;
    const int g = family.front().ground_size();
    for (const auto& s : family)
        if (s.ground_size() != g)
            throw std::invalid_argument("ground-set mismatch in family");
    return g;
}

/// Calls visit(indices) for every k-subset of [0, n) in lex order; visit
/// returns false to stop.
template <class Visit>
void for_each_combination(int n, int k, Visit&& visit)
{
    if (k < 0 || k > n)
        return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        if (!visit(std::span<const int>(idx)))
            return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

/// alpha = intersecting k-tuples / C(|F|, k); beta = deepest point depth / |F|.
/// A subfamily intersects iff some point lies in all its members, so the
/// largest intersecting subfamily is the deepest point's star.
inline FractionalHellyProfile fractional_helly_profile(const ConvexitySpace& space,
                                                       std::span<const PointSet> family, int k)
{
    if (k < 1)
        throw std::invalid_argument("fractional_helly_profile: k must be positive");
    if (static_cast<int>(family.size()) < k)
        throw std::invalid_argument("fractional_helly_profile: family has " +
                                    std::to_string(family.size()) + " members, fewer than k = " +
                                    std::to_string(k));
    detail::check_family_in_space(space, family);
    FractionalHellyProfile out;
    out.k = k;
    const int size = static_cast<int>(family.size());
    detail::for_each_combination(size, k, [&](std::span<const int> idx) {
        std::uint64_t meet = space.full();
        for (int i : idx)
            meet &= family[static_cast<std::size_t>(i)].bits();
        ++out.total_tuples;
        if (meet != 0)
            ++out.intersecting_tuples;
        return true;
    });
    for (int x = 0; x < space.ground_size(); ++x) {
        int depth = 0;
        for (const auto& s : family)
            depth += s.contains(x) ? 1 : 0;
        if (depth > out.max_depth) {
            out.max_depth = depth;
            out.deepest_point = x;
        }
    }
    out.alpha = Rational(out.intersecting_tuples, out.total_tuples);
    out.beta_observed = Rational(out.max_depth, size);
    return out;
}

struct TransversalResult {
    int tau = 0;
    /// Canonically least optimal piercing set.
    std::vector<int> pierce_points;
    Rational tau_star;
    /// One weight per ground point; every member carries total weight >= 1.
    std::vector<Rational> weights;
};

namespace detail {

/// Greedy count of pairwise disjoint members: a lower bound on piercing.
inline int disjoint_packing(std::span<const std::uint64_t> members, std::uint64_t allowed)
{
    int count = 0;
    std::uint64_t used = 0;
    for (auto m : members) {
        const std::uint64_t live = m & allowed;
        if ((live & used) == 0) {
            ++count;
            used |= live;
        }
    }
    return count;
}

/// Lexicographically least piercing set of exactly `target` points, if any.
inline std::optional<std::vector<int>> pierce_with(std::span<const std::uint64_t> members,
                                                   int ground, int target)
{
    std::vector<int> chosen;
    std::function<bool(int, const std::vector<std::uint64_t>&)> dfs =
        [&](int next, const std::vector<std::uint64_t>& uncovered) -> bool {
        if (uncovered.empty())
            return true;
        const int left = target - static_cast<int>(chosen.size());
        if (left == 0)
            return false;
        const std::uint64_t allowed = full_mask(ground) & ~(bit(next) - 1);
        int limit = ground - 1;
        for (auto u : uncovered) {
            const std::uint64_t live = u & allowed;
            if (live == 0)
                return false;
            limit = std::min(limit, 63 - std::countl_zero(live));
        }
        if (disjoint_packing(uncovered, allowed) > left)
            return false;
        for (int q = next; q <= limit; ++q) {
            std::vector<std::uint64_t> rest;
            for (auto u : uncovered)
                if ((u & bit(q)) == 0)
                    rest.push_back(u);
            if (rest.size() == uncovered.size())
                continue;
            chosen.push_back(q);
            if (dfs(q + 1, rest))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    std::vector<std::uint64_t> all(members.begin(), members.end());
    if (dfs(0, all))
        return chosen;
    return std::nullopt;
}

}  // namespace detail

/**
 * tau by exact set-cover branch and bound over points (a partition into
 * intersecting parts is the same as a set of piercing points, one common
 * point per part); tau* by exact LP.
 */
inline TransversalResult transversal(std::span<const PointSet> family)
{
    const int ground = detail::family_ground(family);
    std::vector<std::uint64_t> members;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].is_empty())
            throw std::invalid_argument("transversal: member " + std::to_string(i) +
                                        " is empty and cannot be pierced");
        members.push_back(family[i].bits());
    }
    TransversalResult out;
    if (members.empty())
        return out;
    int target = std::max(1, detail::disjoint_packing(members, full_mask(ground)));
    for (;; ++target) {
        if (auto pts = detail::pierce_with(members, ground, target)) {
            out.tau = target;
            out.pierce_points = std::move(*pts);
            break;
        }
    }

    LinearProgram lp;
    lp.objective.assign(static_cast<std::size_t>(ground), Rational(1));
    for (auto m : members) {
        std::vector<Rational> row(static_cast<std::size_t>(ground));
        for (int x = 0; x < ground; ++x)
            if ((m & bit(x)) != 0)
                row[static_cast<std::size_t>(x)] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(1);
    }
    const LpResult sol = solve_min(lp);
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("fractional transversal LP not optimal");
    out.tau_star = sol.value;
    out.weights = sol.solution;
    if (out.tau_star > out.tau)
        throw std::logic_error("tau* exceeds tau");
    return out;
}

struct PqResult {
    bool holds = true;
    /// Indices of the first p-subset (lex order) with no intersecting q members.
    std::vector<int> violating;
};

/// (p,q)-property over p-subsets of distinct members; vacuous when |F| < p.
inline PqResult pq_property(std::span<const PointSet> family, int p, int q)
{
    if (q < 1 || p < q)
        throw std::invalid_argument("pq_property needs p >= q >= 1, got p=" + std::to_string(p) +
                                    " q=" + std::to_string(q));
    const int ground = detail::family_ground(family);
    PqResult out;
    detail::for_each_combination(static_cast<int>(family.size()), p, [&](std::span<const int> idx) {
        // Some q of them intersect iff some point has depth >= q here.
        bool ok = false;
        for (int x = 0; x < ground && !ok; ++x) {
            int depth = 0;
            for (int i : idx)
                depth += family[static_cast<std::size_t>(i)].contains(x) ? 1 : 0;
            ok = depth >= q;
        }
        if (!ok) {
            out.holds = false;
            out.violating.assign(idx.begin(), idx.end());
            return false;
        }
        return true;
    });
    return out;
}

struct PqReport {
    bool pq_holds = true;
    int tau = 0;
    Rational tau_star;
};

inline PqReport pq_report(const ConvexitySpace& space, std::span<const PointSet> family, int p,
                          int q)
{
    detail::check_family_in_space(space, family);
    const auto pq = pq_property(family, p, q);
    const auto tr = transversal(family);
    return {pq.holds, tr.tau, tr.tau_star};
}

}  // namespace radon_lab

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "radon_lab/point_set.hpp"

namespace radon_lab {

inline constexpr std::size_t kDefaultClosureCap = 200000;
inline constexpr int kDefaultNerveCap = 20;

/// Intersection of a subfamily given as masks. The empty subfamily
/// intersects to the full ground set.
inline std::uint64_t intersect_all(std::span<const std::uint64_t> masks, int ground)
{
    std::uint64_t acc = full_mask(ground);
    for (auto m : masks)
        acc &= m;
    return acc;
}

inline PointSet intersect_all(std::span<const PointSet> family, int ground)
{
    std::uint64_t acc = full_mask(ground);
    for (const auto& s : family) {
        if (s.ground_size() != ground)
            throw std::invalid_argument("ground-set mismatch in family");
        acc &= s.bits();
    }
    return {ground, acc};
}

/// Outcome of checking the closure-system axioms on a candidate family.
struct AxiomReport {
    bool c1 = true;  ///< empty set and ground set present
    bool c2 = true;  ///< closed under pairwise intersection
    /// Finite ground sets make the nested-union axiom automatic.
    bool c3 = true;
    std::string c3_note = "vacuous: every chain in a finite family has a largest member";
    std::optional<PointSet> c1_missing;
    std::optional<std::pair<PointSet, PointSet>> c2_pair;
    std::optional<PointSet> c2_missing;

    bool passed() const { return c1 && c2; }

    std::string describe() const
    {
        std::string out;
        out += "C1=" + std::string(c1 ? "pass" : "fail");
        if (c1_missing)
            out += " (missing " + to_string(*c1_missing) + ")";
        out += " C2=" + std::string(c2 ? "pass" : "fail");
        if (c2_missing)
            out += " (" + to_string(c2_pair->first) + " & " + to_string(c2_pair->second) +
                   " = " + to_string(*c2_missing) + " absent)";
        out += " C3=pass (" + c3_note + ")";
        return out;
    }
};

/// Checks C1 and C2 on an arbitrary family over `ground`. The reported C2
/// counterexample is the first failing pair in canonical order.
inline AxiomReport verify_axioms(int ground, std::span<const PointSet> family)
{
    std::vector<std::uint64_t> masks;
    masks.reserve(family.size());
    for (const auto& s : family) {
        if (s.ground_size() != ground)
            throw std::invalid_argument("ground-set mismatch: family member over " +
                                        std::to_string(s.ground_size()) + " points, expected " +
                                        std::to_string(ground));
        masks.push_back(s.bits());
    }
    std::sort(masks.begin(), masks.end(),
              [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::unordered_set<std::uint64_t> present(masks.begin(), masks.end());

    AxiomReport report;
    if (!present.contains(0)) {
        report.c1 = false;
        report.c1_missing = PointSet::empty(ground);
    }
    else if (!present.contains(full_mask(ground))) {
        report.c1 = false;
        report.c1_missing = PointSet::full(ground);
    }
    for (std::size_t i = 0; i < masks.size() && report.c2; ++i) {
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            const std::uint64_t meet = masks[i] & masks[j];
            if (!present.contains(meet)) {
                report.c2 = false;
                report.c2_pair = {PointSet(ground, masks[i]), PointSet(ground, masks[j])};
                report.c2_missing = PointSet(ground, meet);
                break;
            }
        }
    }
    return report;
}

/**
 * A finite convexity space: an intersection-closed family of subsets of
 * {0, ..., n-1} containing the empty set and the ground set.
 *
 * Sets are kept in canonical order (cardinality, then lexicographic). The
 * meet-irreducible members form the hull basis: every convex set other than
 * the ground set is an intersection of basis members.
 */
class ConvexitySpace {
public:
    ConvexitySpace(int ground_size, std::vector<PointSet> sets) : ground_(ground_size)
    {
        check_ground(ground_size);
        const AxiomReport report = verify_axioms(ground_size, sets);
        if (!report.passed())
            throw std::invalid_argument("family is not a convexity space: " + report.describe());
        std::vector<std::uint64_t> masks;
        masks.reserve(sets.size());
        for (const auto& s : sets)
            masks.push_back(s.bits());
        init(std::move(masks));
    }

    /// Tag for constructors whose output is intersection-closed by
    /// construction; skips the quadratic axiom check.
    struct Trusted {};

    ConvexitySpace(Trusted, int ground_size, std::vector<std::uint64_t> masks)
        : ground_(ground_size)
    {
        check_ground(ground_size);
        init(std::move(masks));
    }

    int ground_size() const noexcept { return ground_; }
    std::size_t size() const noexcept { return masks_.size(); }
    std::uint64_t full() const noexcept { return full_mask(ground_); }

    /// Canonically ordered member masks.
    std::span<const std::uint64_t> masks() const noexcept { return masks_; }

    /// Meet-irreducible members, canonically ordered.
    std::span<const std::uint64_t> basis() const noexcept { return basis_; }

    std::vector<PointSet> sets() const
    {
        std::vector<PointSet> out;
        out.reserve(masks_.size());
        for (auto m : masks_)
            out.emplace_back(ground_, m);
        return out;
    }

    PointSet set(std::size_t i) const { return {ground_, masks_.at(i)}; }

    bool contains(std::uint64_t mask) const { return index_.contains(mask); }
    bool contains(const PointSet& s) const
    {
        return s.ground_size() == ground_ && index_.contains(s.bits());
    }

    std::optional<std::size_t> index_of(const PointSet& s) const
    {
        if (s.ground_size() != ground_)
            return std::nullopt;
        auto it = index_.find(s.bits());
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    /// Smallest convex set containing `y` (mask form, no ground check).
    std::uint64_t hull(std::uint64_t y) const
    {
        if (index_.contains(y))
            return y;
        std::uint64_t acc = full();
        for (auto b : basis_)
            if ((y & ~b) == 0)
                acc &= b;
        return acc;
    }

    PointSet hull(const PointSet& y) const
    {
        if (y.ground_size() != ground_)
            throw std::invalid_argument("ground-set mismatch: hull argument over " +
                                        std::to_string(y.ground_size()) + " points, space over " +
                                        std::to_string(ground_));
        return {ground_, hull(y.bits())};
    }

    friend bool operator==(const ConvexitySpace& a, const ConvexitySpace& b)
    {
        return a.ground_ == b.ground_ && a.masks_ == b.masks_;
    }

private:
    static void check_ground(int ground_size)
    {
        if (ground_size < 1 || ground_size > kMaxGround)
            throw std::invalid_argument("ground size must lie in [1, 64], got " +
                                        std::to_string(ground_size));
    }

    void init(std::vector<std::uint64_t> masks)
    {
        masks_ = std::move(masks);
        std::sort(masks_.begin(), masks_.end(),
                  [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
        masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
        index_.reserve(masks_.size());
        for (std::size_t i = 0; i < masks_.size(); ++i)
            index_.emplace(masks_[i], i);
        cardinality_start_.assign(static_cast<std::size_t>(ground_ + 2), masks_.size());
        for (std::size_t i = masks_.size(); i-- > 0;)
            cardinality_start_[static_cast<std::size_t>(popcount(masks_[i]))] = i;
        for (int c = ground_; c >= 0; --c)
            cardinality_start_[c] = std::min(cardinality_start_[c], cardinality_start_[c + 1]);
        compute_basis();
    }

    // First member in canonical order containing y; members of equal
    // cardinality that contain y would contain the hull and so equal it.
    std::uint64_t first_superset(std::uint64_t y) const
    {
        for (std::size_t i = cardinality_start_[static_cast<std::size_t>(popcount(y))];
             i < masks_.size(); ++i)
            if ((y & ~masks_[i]) == 0)
                return masks_[i];
        return full();
    }

    void compute_basis()
    {
        const std::uint64_t all = full();
        for (auto k : masks_) {
            if (k == all)
                continue;
            // Meet of the strict supersets of k.
            std::uint64_t meet = all;
            for (std::uint64_t out = all & ~k; out != 0; out &= out - 1) {
                const std::uint64_t y = k | (out & (~out + 1));
                meet &= index_.contains(y) ? y : first_superset(y);
                if (meet == k)
                    break;
            }
            if (meet != k)
                basis_.push_back(k);
        }
    }

    int ground_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint64_t> basis_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<std::size_t> cardinality_start_;
};

inline AxiomReport verify_axioms(const ConvexitySpace& space)
{
    const auto sets = space.sets();
    return verify_axioms(space.ground_size(), sets);
}

/// Smallest intersection-closed family containing the generators, the empty
/// set and the ground set.
inline ConvexitySpace closure_from_generators(int ground_size,
                                              std::span<const PointSet> generators,
                                              std::size_t cap = kDefaultClosureCap)
{
    if (ground_size < 1 || ground_size > kMaxGround)
        throw std::invalid_argument("ground size must lie in [1, 64]");
    std::vector<std::uint64_t> members{0, full_mask(ground_size)};
    std::unordered_set<std::uint64_t> seen(members.begin(), members.end());
    std::deque<std::uint64_t> pending;
    for (const auto& g : generators) {
        if (g.ground_size() != ground_size)
            throw std::invalid_argument("ground-set mismatch in generators");
        if (seen.insert(g.bits()).second) {
            if (members.size() >= cap)
                throw CapExceeded("intersection closure exceeds cap of " + std::to_string(cap) +
                                      " sets",
                                  members.size());
            members.push_back(g.bits());
            pending.push_back(g.bits());
        }
    }
    while (!pending.empty()) {
        const std::uint64_t s = pending.front();
        pending.pop_front();
        const std::size_t count = members.size();
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint64_t meet = s & members[i];
            if (seen.insert(meet).second) {
                if (members.size() >= cap)
                    throw CapExceeded("intersection closure exceeds cap of " +
                                          std::to_string(cap) + " sets",
                                      members.size());
                members.push_back(meet);
                pending.push_back(meet);
            }
        }
    }
    return {ConvexitySpace::Trusted{}, ground_size, std::move(members)};
}

/// The space on the index set of an antichain `family` whose convex sets are
/// the subfamilies {S in family : Y subset of S}.
inline ConvexitySpace dual_space(std::span<const PointSet> family)
{
    if (family.empty())
        throw std::invalid_argument("dual_space needs a nonempty family");
    if (family.size() > static_cast<std::size_t>(kMaxGround))
        throw CapExceeded("dual_space family larger than 64 members", family.size());
    const int base = family.front().ground_size();
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].ground_size() != base)
            throw std::invalid_argument("ground-set mismatch in family");
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (i == j)
                continue;
            if (family[i] == family[j])
                throw std::invalid_argument("family members must be distinct");
            if (family[i].subset_of(family[j]))
                throw std::invalid_argument("family is not an antichain: member " +
                                            std::to_string(i) + " is contained in member " +
                                            std::to_string(j));
        }
    }
    const int n = static_cast<int>(family.size());
    std::vector<PointSet> gens;
    for (int x = 0; x < base; ++x) {
        std::uint64_t star = 0;
        for (int i = 0; i < n; ++i)
            if (family[static_cast<std::size_t>(i)].contains(x))
                star |= bit(i);
        gens.emplace_back(n, star);
    }
    return closure_from_generators(n, gens);
}

/// Convex sets whose complement is convex, in canonical order.
inline std::vector<PointSet> halfspaces(const ConvexitySpace& space)
{
    std::vector<PointSet> out;
    for (auto k : space.masks())
        if (space.contains(space.full() & ~k))
            out.emplace_back(space.ground_size(), k);
    return out;
}

struct SeparabilityResult {
    bool separable = true;
    std::optional<PointSet> convex_set;  ///< K of the first failure
    int point = -1;                      ///< p outside K not cut off from K
};

inline SeparabilityResult is_separable(const ConvexitySpace& space)
{
    const auto hs = halfspaces(space);
    for (auto k : space.masks()) {
        for (std::uint64_t out = space.full() & ~k; out != 0; out &= out - 1) {
            const int p = lowest(out);
            const bool cut = std::any_of(hs.begin(), hs.end(), [&](const PointSet& h) {
                return (k & ~h.bits()) == 0 && !h.contains(p);
            });
            if (!cut)
                return {false, PointSet(space.ground_size(), k), p};
        }
    }
    return {};
}

/// Nerve of a family, stored by its inclusion-maximal faces over member
/// indices.
struct NerveComplex {
    int vertex_count = 0;
    std::vector<PointSet> maximal_faces;

    bool is_face(const PointSet& sigma) const
    {
        return std::any_of(maximal_faces.begin(), maximal_faces.end(),
                           [&](const PointSet& f) { return sigma.subset_of(f); });
    }
};

inline NerveComplex nerve(std::span<const PointSet> family, int cap = kDefaultNerveCap)
{
    if (static_cast<int>(family.size()) > cap)
        throw CapExceeded("nerve family exceeds cap of " + std::to_string(cap),
                          family.size());
    const int n = static_cast<int>(family.size());
    NerveComplex out;
    out.vertex_count = n;
    if (n == 0)
        return out;
    const int ground = family.front().ground_size();
    for (const auto& s : family)
        if (s.ground_size() != ground)
            throw std::invalid_argument("ground-set mismatch in family");
    // Every face lies inside the set of members through some point, so the
    // maximal faces are the maximal point stars.
    std::vector<std::uint64_t> stars;
    for (int x = 0; x < ground; ++x) {
        std::uint64_t star = 0;
        for (int i = 0; i < n; ++i)
            if (family[static_cast<std::size_t>(i)].contains(x))
                star |= bit(i);
        if (star != 0)
            stars.push_back(star);
    }
    std::sort(stars.begin(), stars.end());
    stars.erase(std::unique(stars.begin(), stars.end()), stars.end());
    std::vector<std::uint64_t> maximal;
    for (auto s : stars) {
        const bool dominated = std::any_of(stars.begin(), stars.end(), [&](std::uint64_t t) {
            return t != s && (s & ~t) == 0;
        });
        if (!dominated)
            maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
    for (auto m : maximal)
        out.maximal_faces.emplace_back(n, m);
    return out;
}

}  // namespace radon_lab

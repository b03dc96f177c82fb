#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "radon_lab/hypergraph.hpp"
#include "radon_lab/invariants.hpp"

namespace radon_lab {

using Bits = boost::dynamic_bitset<>;

/// A complementary pair (A, B) over the elements {0, ..., N-1}.
struct SetPair {
    Bits a;
    Bits b;
};

/**
 * m complementary pairs over N elements such that any k pairs, with one side
 * chosen from each, have a common element.
 */
struct SetPairFamily {
    int k = 2;
    int n = 0;
    std::vector<SetPair> pairs;

    int m() const { return static_cast<int>(pairs.size()); }
};

/// A permutation of the 2^k subsets of {0, ..., k-1}, as bitmasks.
struct SubsetOrder {
    int k = 0;
    std::vector<std::uint32_t> sequence;

    void validate() const
    {
        if (k < 1 || k > 16)
            throw std::invalid_argument("subset order: k out of range");
        const std::size_t total = std::size_t{1} << k;
        if (sequence.size() != total)
            throw std::invalid_argument("subset order must list all " + std::to_string(total) +
                                        " subsets, got " + std::to_string(sequence.size()));
        std::vector<char> seen(total, 0);
        for (auto t : sequence) {
            if (t >= total)
                throw std::invalid_argument("subset order: element outside [k]");
            if (seen[t])
                throw std::invalid_argument("subset order: repeated subset");
            seen[t] = 1;
        }
    }

    /// T_i = bits of i (0-based position i).
    static SubsetOrder binary_counter(int k)
    {
        SubsetOrder o;
        o.k = k;
        for (std::uint32_t t = 0; t < (1u << k); ++t)
            o.sequence.push_back(t);
        return o;
    }
};

inline constexpr int kMaxBaseK = 6;
inline constexpr int kMaxBuildM = 8;
inline constexpr int kMaxBuildK = 4;

/// C(n, r) for the small values used here.
inline std::uint64_t binomial(int n, int r)
{
    if (r < 0 || r > n)
        return 0;
    std::uint64_t out = 1;
    for (int i = 1; i <= r; ++i)
        out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return out;
}

/// Element i joins A_j exactly when j is in T_i.
inline SetPairFamily build_base(int k, const SubsetOrder& order)
{
    if (k < 2 || k > kMaxBaseK)
        throw std::invalid_argument("build_base: k must lie in [2, 6], got " + std::to_string(k));
    if (order.k != k)
        throw std::invalid_argument("build_base: order is for k = " + std::to_string(order.k));
    order.validate();
    SetPairFamily f;
    f.k = k;
    f.n = 1 << k;
    const auto n = static_cast<std::size_t>(f.n);
    for (int j = 0; j < k; ++j) {
        SetPair p{Bits(n), Bits(n)};
        for (std::size_t i = 0; i < n; ++i) {
            if ((order.sequence[i] >> j) & 1u)
                p.a.set(i);
            else
                p.b.set(i);
        }
        f.pairs.push_back(std::move(p));
    }
    return f;
}

inline SetPairFamily build_base(int k) { return build_base(k, SubsetOrder::binary_counter(k)); }

struct SetPairReport {
    bool ok = true;
    /// First pair violating (i), 0-based.
    std::optional<int> bad_pair;
    /// First k-tuple and side pattern violating (ii); pattern bit j set
    /// means side A at tuple position j.
    std::vector<int> bad_tuple;
    std::uint32_t bad_pattern = 0;
    std::string message;
};

namespace detail {

/// Bit j of the returned pattern index 0..2^k-1 chooses B (set) or A (clear)
/// at tuple position k-1-j, so increasing index walks patterns in
/// lexicographic order with A before B.
inline std::uint32_t pattern_from_index(std::uint32_t index, int k)
{
    std::uint32_t sides_a = 0;
    for (int j = 0; j < k; ++j)
        if (((index >> (k - 1 - j)) & 1u) == 0)
            sides_a |= 1u << j;
    return sides_a;
}

inline std::string pattern_string(std::uint32_t sides_a, int k)
{
    std::string s;
    for (int j = 0; j < k; ++j)
        s += ((sides_a >> j) & 1u) ? 'A' : 'B';
    return s;
}

/// First side pattern of the tuple with empty intersection, if any.
inline std::optional<std::uint32_t> failing_pattern(const SetPairFamily& f,
                                                    std::span<const int> tuple)
{
    const int k = static_cast<int>(tuple.size());
    for (std::uint32_t idx = 0; idx < (1u << k); ++idx) {
        const std::uint32_t sides_a = pattern_from_index(idx, k);
        Bits meet(static_cast<std::size_t>(f.n));
        meet.set();
        for (int j = 0; j < k; ++j) {
            const auto& p = f.pairs[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])];
            meet &= ((sides_a >> j) & 1u) ? p.a : p.b;
        }
        if (meet.none())
            return sides_a;
    }
    return std::nullopt;
}

}  // namespace detail

/// Checks (i) on every pair and (ii) on every k-tuple and side pattern,
/// reporting the first failure in lexicographic order.
inline SetPairReport verify(const SetPairFamily& f)
{
    SetPairReport r;
    const auto n = static_cast<std::size_t>(f.n);
    for (int i = 0; i < f.m(); ++i) {
        const auto& p = f.pairs[static_cast<std::size_t>(i)];
        std::string why;
        if (p.a.size() != n || p.b.size() != n)
            why = "sides not over N elements";
        else if (p.a.none())
            why = "A is empty";
        else if (p.b.none())
            why = "B is empty";
        else if (p.a.intersects(p.b))
            why = "A and B overlap";
        else if ((p.a | p.b).count() != n)
            why = "A and B do not cover all elements";
        if (!why.empty()) {
            r.ok = false;
            r.bad_pair = i;
            r.message = "property (i) fails at pair " + std::to_string(i + 1) + ": " + why;
            return r;
        }
    }
    detail::for_each_combination(f.m(), f.k, [&](std::span<const int> tuple) {
        if (auto pat = detail::failing_pattern(f, tuple)) {
            r.ok = false;
            r.bad_tuple.assign(tuple.begin(), tuple.end());
            r.bad_pattern = *pat;
            r.message = "property (ii) fails at pairs";
            for (int t : tuple)
                r.message += " " + std::to_string(t + 1);
            r.message += " with sides " + detail::pattern_string(*pat, f.k);
            return false;
        }
        return true;
    });
    return r;
}

/**
 * Grows the family to m_target pairs. New pairs start with every existing
 * element on their A side. Each k-tuple still violating (ii), in lex order,
 * receives 2^k fresh elements split among its pairs by the base rule (in
 * binary-counter order); every other pair takes them on its A side. Adding
 * elements never empties an intersection, so one pass suffices; verify()
 * still runs and a failure raises std::logic_error.
 */
inline SetPairFamily extend(SetPairFamily f, int m_target)
{
    if (m_target < f.m())
        throw std::invalid_argument("extend: m_target below current m");
    if (f.m() > 0) {
        const auto pre = verify(f);
        if (pre.bad_pair)
            throw std::invalid_argument("extend: input fails property (i): " + pre.message);
    }
    const auto n0 = static_cast<std::size_t>(f.n);
    while (f.m() < m_target) {
        SetPair p{Bits(n0), Bits(n0)};
        p.a.set();
        f.pairs.push_back(std::move(p));
    }
    const int k = f.k;
    detail::for_each_combination(f.m(), k, [&](std::span<const int> tuple) {
        if (!detail::failing_pattern(f, tuple))
            return true;
        const std::size_t start = static_cast<std::size_t>(f.n);
        const std::size_t fresh = std::size_t{1} << k;
        f.n += static_cast<int>(fresh);
        for (auto& p : f.pairs) {
            p.a.resize(static_cast<std::size_t>(f.n), true);
            p.b.resize(static_cast<std::size_t>(f.n), false);
        }
        for (int j = 0; j < k; ++j) {
            auto& p = f.pairs[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])];
            for (std::size_t t = 0; t < fresh; ++t) {
                const bool side_a = ((t >> j) & 1u) != 0;
                p.a.set(start + t, side_a);
                p.b.set(start + t, !side_a);
            }
        }
        return true;
    });
    const auto post = verify(f);
    if (!post.ok)
        throw std::logic_error("extend produced an invalid family: " + post.message);
    return f;
}

/// Appends dummy elements to the A side of every pair until N = n_target.
inline SetPairFamily pad(SetPairFamily f, int n_target)
{
    if (n_target < f.n)
        throw std::invalid_argument("pad: target below current N");
    f.n = n_target;
    for (auto& p : f.pairs) {
        p.a.resize(static_cast<std::size_t>(n_target), true);
        p.b.resize(static_cast<std::size_t>(n_target), false);
    }
    return f;
}

inline SetPairFamily build(int m, int k)
{
    if (k < 2 || m < k)
        throw std::invalid_argument("build needs m >= k >= 2");
    if (m > kMaxBuildM || k > kMaxBuildK)
        throw CapExceeded("build supports m <= 8 and k <= 4", static_cast<std::size_t>(m));
    auto f = extend(build_base(k), m);
    if (static_cast<std::uint64_t>(f.n) > binomial(m, k) * (std::uint64_t{1} << k))
        throw std::logic_error("build exceeded C(m,k) 2^k elements");
    return f;
}

// ---------------------------------------------------------------------------
// Certificates from partition-free sets

struct RadonFreeCertificate {
    /// Points of the associated space (indices of maximal independent sets).
    std::vector<int> free_points;
    SetPairFamily pairs;
    /// e_i inside Y_i + Z_i, one per pair.
    std::vector<PointSet> edges;
};

struct CertificateOutcome {
    std::optional<RadonFreeCertificate> certificate;
    /// Largest partition-free set found, and the size that was needed.
    int largest_free = 0;
    std::uint64_t needed = 0;
};

/**
 * Looks for C(m,k) 2^k maximal independent sets without a Radon partition.
 * If found, the set pairs turn them into m edges e_i inside
 * Y_i = meet of sigma_j over A_i plus Z_i = meet over B_i, and those edges
 * are checked to have no SDR edge. Absence of a large enough free set gives
 * an empty certificate.
 */
inline CertificateOutcome radon_free_certificate(const Hypergraph& h, int m,
                                                 std::uint64_t budget_limit = kDefaultNodeBudget)
{
    const int k = h.uniformity();
    if (m < k)
        throw std::invalid_argument("radon_free_certificate needs m >= k");
    CertificateOutcome out;
    out.needed = binomial(m, k) * (std::uint64_t{1} << k);
    const auto assoc = associated_space(h);
    const auto radon = radon_number(assoc.space, true, budget_limit);
    out.largest_free = radon.witness_free_set.size();
    if (static_cast<std::uint64_t>(out.largest_free) < out.needed) {
        if (!radon.exact)
            throw CapExceeded("radon search budget exhausted before deciding the certificate",
                              radon.nodes);
        return out;
    }
    RadonFreeCertificate cert;
    for (int p : radon.witness_free_set.members())
        if (cert.free_points.size() < out.needed)
            cert.free_points.push_back(p);
    const int n_target = static_cast<int>(out.needed);
    cert.pairs = pad(build(m, k), n_target);

    const std::uint64_t vertices = h.all_vertices();
    auto meet_over = [&](const Bits& side) {
        std::uint64_t acc = vertices;
        for (std::size_t j = side.find_first(); j != Bits::npos; j = side.find_next(j))
            acc &= assoc.mis[static_cast<std::size_t>(cert.free_points[j])].bits();
        return acc;
    };
    for (const auto& p : cert.pairs.pairs) {
        const std::uint64_t span = meet_over(p.a) | meet_over(p.b);
        std::optional<std::uint64_t> edge;
        for (auto e : h.edge_masks())
            if ((e & ~span) == 0) {
                edge = e;
                break;
            }
        if (!edge)
            throw std::logic_error("partition-free set yields an independent Y_i + Z_i");
        cert.edges.emplace_back(h.vertex_count(), *edge);
    }
    std::vector<std::uint64_t> slots;
    for (const auto& e : cert.edges)
        slots.push_back(e.bits());
    if (find_sdr_edge(h, slots))
        throw std::logic_error("certificate edges admit an SDR edge");
    out.certificate = std::move(cert);
    return out;
}

}  // namespace radon_lab

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace radon_lab {

/// Largest supported ground set; a PointSet is a single machine word.
inline constexpr int kMaxGround = 64;

/// Thrown when a search or construction exceeds a configured size cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::size_t partial)
        : std::runtime_error(what), partial_(partial) {}

    /// Size reached when the cap was hit.
    std::size_t partial() const noexcept { return partial_; }

private:
    std::size_t partial_;
};

inline constexpr std::uint64_t full_mask(int ground)
{
    return ground >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << ground) - 1);
}

inline constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

inline int popcount(std::uint64_t x) { return std::popcount(x); }

/// Lowest set bit index; undefined for zero.
inline int lowest(std::uint64_t x) { return std::countr_zero(x); }

/// Canonical order on masks of equal ground: cardinality first, then
/// lexicographic on the sorted member lists.
inline bool canonical_less(std::uint64_t a, std::uint64_t b)
{
    const int ca = popcount(a), cb = popcount(b);
    if (ca != cb)
        return ca < cb;
    if (a == b)
        return false;
    // With equal cardinality the sorted lists first differ at the smallest
    // element of the symmetric difference.
    return (a & (std::uint64_t{1} << lowest(a ^ b))) != 0;
}

/// A subset of the ground set {0, ..., ground_size-1}, ground_size <= 64.
class PointSet {
public:
    PointSet() = default;

    PointSet(int ground_size, std::uint64_t bits) : ground_(ground_size), bits_(bits)
    {
        if (ground_size < 0 || ground_size > kMaxGround)
            throw std::invalid_argument("ground size " + std::to_string(ground_size) +
                                        " outside [0, 64]");
        if ((bits & ~full_mask(ground_size)) != 0)
            throw std::invalid_argument("point index outside ground set of size " +
                                        std::to_string(ground_size));
    }

    static PointSet empty(int ground_size) { return {ground_size, 0}; }
    static PointSet full(int ground_size) { return {ground_size, full_mask(ground_size)}; }

    static PointSet of(int ground_size, std::span<const int> members)
    {
        std::uint64_t bits = 0;
        for (int m : members) {
            if (m < 0 || m >= ground_size)
                throw std::invalid_argument("point " + std::to_string(m) +
                                            " outside ground set of size " +
                                            std::to_string(ground_size));
            bits |= bit(m);
        }
        return {ground_size, bits};
    }

    static PointSet of(int ground_size, std::initializer_list<int> members)
    {
        return of(ground_size, std::span<const int>(members.begin(), members.size()));
    }

    int ground_size() const noexcept { return ground_; }
    std::uint64_t bits() const noexcept { return bits_; }
    int size() const noexcept { return popcount(bits_); }
    bool is_empty() const noexcept { return bits_ == 0; }
    bool is_full() const noexcept { return bits_ == full_mask(ground_); }
    bool contains(int i) const noexcept { return i >= 0 && i < ground_ && (bits_ & bit(i)) != 0; }

    bool subset_of(const PointSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    PointSet complement() const { return {ground_, full_mask(ground_) & ~bits_}; }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(lowest(b));
        return out;
    }

    friend PointSet operator&(const PointSet& a, const PointSet& b)
    {
        check_same_ground(a, b);
        return {a.ground_, a.bits_ & b.bits_};
    }
    friend PointSet operator|(const PointSet& a, const PointSet& b)
    {
        check_same_ground(a, b);
        return {a.ground_, a.bits_ | b.bits_};
    }
    friend PointSet operator-(const PointSet& a, const PointSet& b)
    {
        check_same_ground(a, b);
        return {a.ground_, a.bits_ & ~b.bits_};
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

    static void check_same_ground(const PointSet& a, const PointSet& b)
    {
        if (a.ground_ != b.ground_)
            throw std::invalid_argument("ground-set mismatch: " + std::to_string(a.ground_) +
                                        " vs " + std::to_string(b.ground_));
    }

private:
    int ground_ = 0;
    std::uint64_t bits_ = 0;
};

inline bool canonical_less(const PointSet& a, const PointSet& b)
{
    return canonical_less(a.bits(), b.bits());
}

/// "{0,2,5}" style rendering, 0-based.
inline std::string to_string(const PointSet& s)
{
    std::string out = "{";
    bool first = true;
    for (int m : s.members()) {
        if (!first)
            out += ',';
        out += std::to_string(m);
        first = false;
    }
    return out + "}";
}

/// Space-separated member list, as used by the text file formats.
inline std::string to_list(const PointSet& s, int offset = 0)
{
    std::string out;
    for (int m : s.members()) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(m + offset);
    }
    return out;
}

}  // namespace radon_lab

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "radon_lab/convexity_space.hpp"
#include "radon_lab/lp.hpp"

namespace radon_lab {

/// Axis lengths of a finite grid; point index is row-major with axis 0
/// varying fastest.
struct GridBoxSpec {
    std::vector<int> dims;
};

/// Side lengths of a lattice window {0..a-1} x {0..b-1} x ..., d <= 3.
struct LatticeWindowSpec {
    std::vector<int> dims;
};

namespace detail {

inline int checked_grid_size(const std::vector<int>& dims, const char* what)
{
    if (dims.empty())
        throw std::invalid_argument(std::string(what) + ": dims must be nonempty");
    long long product = 1;
    for (int d : dims) {
        if (d < 1)
            throw std::invalid_argument(std::string(what) + ": dims must be positive");
        product *= d;
        if (product > kMaxGround)
            throw CapExceeded(std::string(what) + ": grid has more than 64 points",
                              static_cast<std::size_t>(product));
    }
    return static_cast<int>(product);
}

inline std::vector<int> coordinates(int index, const std::vector<int>& dims)
{
    std::vector<int> c(dims.size());
    for (std::size_t a = 0; a < dims.size(); ++a) {
        c[a] = index % dims[a];
        index /= dims[a];
    }
    return c;
}

}  // namespace detail

inline ConvexitySpace grid_box_space(const GridBoxSpec& spec)
{
    const int n = detail::checked_grid_size(spec.dims, "grid_box_space");
    std::vector<std::vector<int>> coords;
    for (int p = 0; p < n; ++p)
        coords.push_back(detail::coordinates(p, spec.dims));

    // Every product of per-axis intervals [lo, hi].
    std::vector<std::uint64_t> masks{0};
    const std::size_t d = spec.dims.size();
    std::vector<int> lo(d, 0), hi(d, 0);
    for (;;) {
        std::uint64_t m = 0;
        for (int p = 0; p < n; ++p) {
            bool inside = true;
            for (std::size_t a = 0; a < d && inside; ++a)
                inside = coords[p][a] >= lo[a] && coords[p][a] <= hi[a];
            if (inside)
                m |= bit(p);
        }
        masks.push_back(m);
        std::size_t a = 0;
        for (; a < d; ++a) {
            if (hi[a] + 1 < spec.dims[a]) {
                ++hi[a];
                break;
            }
            if (lo[a] + 1 < spec.dims[a]) {
                ++lo[a];
                hi[a] = lo[a];
                break;
            }
            lo[a] = hi[a] = 0;
        }
        if (a == d)
            break;
    }
    return {ConvexitySpace::Trusted{}, n, std::move(masks)};
}

inline ConvexitySpace interval_space(int n)
{
    if (n < 1 || n > kMaxGround)
        throw std::invalid_argument("interval_space: n must lie in [1, 64], got " +
                                    std::to_string(n));
    return grid_box_space({{n}});
}

inline ConvexitySpace powerset_space(int n)
{
    if (n < 1 || n > 16)
        throw std::invalid_argument("powerset_space: n must lie in [1, 16], got " +
                                    std::to_string(n));
    std::vector<std::uint64_t> masks;
    masks.reserve(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        masks.push_back(m);
    return {ConvexitySpace::Trusted{}, n, std::move(masks)};
}

/// Window geometry plus the lattice closure T -> conv(T) & window.
class LatticeWindow {
public:
    explicit LatticeWindow(const LatticeWindowSpec& spec) : dims_(spec.dims)
    {
        if (spec.dims.size() > 3)
            throw std::invalid_argument("lattice_window_space: dimension must be at most 3");
        size_ = detail::checked_grid_size(spec.dims, "lattice_window_space");
        for (int p = 0; p < size_; ++p) {
            auto c = detail::coordinates(p, dims_);
            coords_.push_back(c);
            std::vector<Rational> q;
            for (int x : c)
                q.emplace_back(x);
            points_.push_back(std::move(q));
        }
    }

    int size() const { return size_; }
    const std::vector<int>& coords(int p) const { return coords_[static_cast<std::size_t>(p)]; }

    /// Is lattice point p in the real convex hull of the points in `t`?
    bool in_real_hull(int p, std::uint64_t t) const
    {
        if ((t & bit(p)) != 0)
            return true;
        if (t == 0)
            return false;
        // Outside the bounding box means outside the hull.
        for (std::size_t a = 0; a < dims_.size(); ++a) {
            int lo = dims_[a], hi = -1;
            for (std::uint64_t r = t; r != 0; r &= r - 1) {
                const int x = coords_[static_cast<std::size_t>(lowest(r))][a];
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
            const int x = coords_[static_cast<std::size_t>(p)][a];
            if (x < lo || x > hi)
                return false;
        }
        std::vector<std::vector<Rational>> verts;
        for (std::uint64_t r = t; r != 0; r &= r - 1)
            verts.push_back(points_[static_cast<std::size_t>(lowest(r))]);
        return point_in_hull(points_[static_cast<std::size_t>(p)], verts);
    }

    /// Lattice hull by fixpoint iteration of T <- conv(T) & window.
    std::uint64_t closure(std::uint64_t t) const
    {
        for (;;) {
            std::uint64_t next = t;
            for (int p = 0; p < size_; ++p)
                if ((t & bit(p)) == 0 && in_real_hull(p, t))
                    next |= bit(p);
            if (next == t)
                return t;
            t = next;
        }
    }

private:
    std::vector<int> dims_;
    int size_ = 0;
    std::vector<std::vector<int>> coords_;
    std::vector<std::vector<Rational>> points_;
};

/**
 * Trace of the lattice convexity on a finite window: T is convex iff
 * conv(T) meets the window exactly in T. Closed sets are enumerated with
 * Ganter's next-closure in lectic order, so only closed sets are visited.
 */
inline ConvexitySpace lattice_window_space(const LatticeWindowSpec& spec)
{
    const LatticeWindow window(spec);
    const int n = window.size();
    std::vector<std::uint64_t> masks;
    std::uint64_t current = window.closure(0);
    masks.push_back(current);
    const std::uint64_t all = full_mask(n);
    while (current != all) {
        bool advanced = false;
        for (int i = n - 1; i >= 0 && !advanced; --i) {
            if ((current & bit(i)) != 0)
                continue;
            const std::uint64_t below = bit(i) - 1;
            const std::uint64_t next = window.closure((current & below) | bit(i));
            if ((next & below) == (current & below)) {
                current = next;
                advanced = true;
            }
        }
        if (!advanced)
            throw std::logic_error("next-closure failed to advance");
        masks.push_back(current);
    }
    masks.push_back(0);
    return {ConvexitySpace::Trusted{}, n, std::move(masks)};
}

}  // namespace radon_lab

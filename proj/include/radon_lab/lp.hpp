#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace radon_lab {

/// Exact rational: always reduced, positive denominator, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// "a/b", or "a" when the denominator is one.
inline std::string to_string(const Rational& q)
{
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "a" or "a/b" with optional leading sign.
inline Rational parse_rational(const std::string& text)
{
    using boost::multiprecision::cpp_int;
    auto parse_int = [&](const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("malformed rational '" + text + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument("malformed rational '" + text + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational '" + text + "'");
        return cpp_int(s[0] == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text));
    const cpp_int den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

inline constexpr std::size_t kMaxLpVariables = 64;
inline constexpr std::size_t kMaxLpConstraints = 4096;

/// minimize objective . x  subject to  rows[i] . x >= rhs[i],  x >= 0.
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;

    std::size_t variables() const { return objective.size(); }
    std::size_t constraints() const { return rows.size(); }

    void validate() const
    {
        if (rows.size() != rhs.size())
            throw std::invalid_argument("dimension mismatch: " + std::to_string(rows.size()) +
                                        " rows but " + std::to_string(rhs.size()) +
                                        " right-hand sides");
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].size() != objective.size())
                throw std::invalid_argument("dimension mismatch: row " + std::to_string(i) +
                                            " has " + std::to_string(rows[i].size()) +
                                            " coefficients, objective has " +
                                            std::to_string(objective.size()));
        if (objective.size() > kMaxLpVariables || rows.size() > kMaxLpConstraints)
            throw std::invalid_argument("linear program exceeds 64 variables / 4096 constraints");
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LpStatus s)
{
    switch (s) {
    case LpStatus::Optimal: return "OPTIMAL";
    case LpStatus::Infeasible: return "INFEASIBLE";
    case LpStatus::Unbounded: return "UNBOUNDED";
    }
    return "?";
}

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> solution;
    /// Dual multipliers y >= 0 with A^T y <= c and b . y == value.
    std::vector<Rational> dual;
    /// (row, column) of every pivot, both phases, in order.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

namespace detail {

class Tableau {
public:
    Tableau(const LinearProgram& lp) : n_(lp.variables()), m_(lp.constraints())
    {
        width_ = n_ + 2 * m_;
        cells_.assign(m_, std::vector<Rational>(width_ + 1));
        sign_.assign(m_, 1);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            sign_[i] = lp.rhs[i] < 0 ? -1 : 1;
            auto& row = cells_[i];
            for (std::size_t j = 0; j < n_; ++j)
                row[j] = lp.rows[i][j] * sign_[i];
            row[n_ + i] = -sign_[i];
            row[n_ + m_ + i] = 1;
            row[width_] = lp.rhs[i] * sign_[i];
            basis_[i] = n_ + m_ + i;
        }
    }

    bool is_artificial(std::size_t col) const { return col >= n_ + m_; }

    /// Bland's rule on `cost`; returns false when unbounded.
    bool optimize(const std::vector<Rational>& cost,
                  std::vector<std::pair<std::size_t, std::size_t>>& pivots)
    {
        for (;;) {
            std::size_t entering = width_;
            for (std::size_t j = 0; j < width_ && entering == width_; ++j) {
                if (is_artificial(j) || is_basic(j))
                    continue;
                if (reduced_cost(cost, j) < 0)
                    entering = j;
            }
            if (entering == width_)
                return true;
            std::size_t leaving = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational& a = cells_[i][entering];
                if (a <= 0)
                    continue;
                Rational ratio = cells_[i][width_] / a;
                if (leaving == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best = std::move(ratio);
                }
            }
            if (leaving == m_)
                return false;
            pivot(leaving, entering);
            pivots.emplace_back(leaving, entering);
        }
    }

    /// Pivots basic artificials out wherever a structural column allows it.
    void drive_out_artificials(std::vector<std::pair<std::size_t, std::size_t>>& pivots)
    {
        for (std::size_t i = 0; i < m_; ++i) {
            if (!is_artificial(basis_[i]))
                continue;
            for (std::size_t j = 0; j < n_ + m_; ++j) {
                if (cells_[i][j] != 0) {
                    pivot(i, j);
                    pivots.emplace_back(i, j);
                    break;
                }
            }
        }
    }

    Rational objective(const std::vector<Rational>& cost) const
    {
        Rational z;
        for (std::size_t i = 0; i < m_; ++i)
            z += cost[basis_[i]] * cells_[i][width_];
        return z;
    }

    std::vector<Rational> primal() const
    {
        std::vector<Rational> x(n_);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                x[basis_[i]] = cells_[i][width_];
        return x;
    }

    /// y_i = sign_i * c_B^T B^{-1} e_i; artificial columns hold B^{-1}.
    std::vector<Rational> dual(const std::vector<Rational>& cost) const
    {
        std::vector<Rational> y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rational acc;
            for (std::size_t r = 0; r < m_; ++r)
                acc += cost[basis_[r]] * cells_[r][n_ + m_ + i];
            y[i] = acc * sign_[i];
        }
        return y;
    }

    std::size_t width() const { return width_; }

private:
    bool is_basic(std::size_t col) const
    {
        for (auto b : basis_)
            if (b == col)
                return true;
        return false;
    }

    Rational reduced_cost(const std::vector<Rational>& cost, std::size_t col) const
    {
        Rational d = cost[col];
        for (std::size_t i = 0; i < m_; ++i)
            if (cells_[i][col] != 0)
                d -= cost[basis_[i]] * cells_[i][col];
        return d;
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational p = cells_[row][col];
        for (auto& v : cells_[row])
            v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || cells_[i][col] == 0)
                continue;
            const Rational f = cells_[i][col];
            for (std::size_t j = 0; j <= width_; ++j)
                if (cells_[row][j] != 0)
                    cells_[i][j] -= f * cells_[row][j];
        }
        basis_[row] = col;
    }

    std::size_t n_, m_, width_;
    std::vector<std::vector<Rational>> cells_;
    std::vector<int> sign_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

/**
 * Exact two-phase simplex with Bland's rule. On OPTIMAL the returned primal
 * solution and dual multipliers are re-verified by substitution; a failed
 * certificate raises std::logic_error.
 */
inline LpResult solve_min(const LinearProgram& lp)
{
    lp.validate();
    const std::size_t n = lp.variables(), m = lp.constraints();
    LpResult result;
    detail::Tableau tab(lp);

    std::vector<Rational> phase1(tab.width(), Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        phase1[n + m + i] = 1;
    tab.optimize(phase1, result.pivots);
    if (tab.objective(phase1) > 0) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    tab.drive_out_artificials(result.pivots);

    std::vector<Rational> phase2(tab.width(), Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        phase2[j] = lp.objective[j];
    if (!tab.optimize(phase2, result.pivots)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.solution = tab.primal();
    result.dual = tab.dual(phase2);
    for (std::size_t j = 0; j < n; ++j)
        result.value += lp.objective[j] * result.solution[j];

    // Certificate: primal feasible, dual feasible, equal objectives.
    for (std::size_t j = 0; j < n; ++j)
        if (result.solution[j] < 0)
            throw std::logic_error("simplex returned a negative primal value");
    for (std::size_t i = 0; i < m; ++i) {
        Rational lhs;
        for (std::size_t j = 0; j < n; ++j)
            lhs += lp.rows[i][j] * result.solution[j];
        if (lhs < lp.rhs[i])
            throw std::logic_error("simplex returned an infeasible primal point");
        if (result.dual[i] < 0)
            throw std::logic_error("simplex returned a negative dual multiplier");
    }
    Rational dual_value;
    for (std::size_t i = 0; i < m; ++i)
        dual_value += lp.rhs[i] * result.dual[i];
    for (std::size_t j = 0; j < n; ++j) {
        Rational col;
        for (std::size_t i = 0; i < m; ++i)
            col += lp.rows[i][j] * result.dual[i];
        if (col > lp.objective[j])
            throw std::logic_error("simplex returned an infeasible dual point");
    }
    if (dual_value != result.value)
        throw std::logic_error("strong duality violated: primal " + to_string(result.value) +
                               " vs dual " + to_string(dual_value));
    return result;
}

/// True iff `point` is a convex combination of `vertices` (exact LP).
inline bool point_in_hull(std::span<const Rational> point,
                          std::span<const std::vector<Rational>> vertices)
{
    const std::size_t d = point.size();
    for (const auto& v : vertices)
        if (v.size() != d)
            throw std::invalid_argument("dimension mismatch: vertex of dimension " +
                                        std::to_string(v.size()) + ", point of dimension " +
                                        std::to_string(d));
    if (vertices.empty())
        return false;
    LinearProgram lp;
    const std::size_t k = vertices.size();
    lp.objective.assign(k, Rational(0));
    auto add_equality = [&](std::vector<Rational> coeffs, const Rational& value) {
        std::vector<Rational> neg(coeffs.size());
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            neg[j] = -coeffs[j];
        lp.rows.push_back(std::move(coeffs));
        lp.rhs.push_back(value);
        lp.rows.push_back(std::move(neg));
        lp.rhs.push_back(-value);
    };
    add_equality(std::vector<Rational>(k, Rational(1)), Rational(1));
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<Rational> coeffs(k);
        for (std::size_t j = 0; j < k; ++j)
            coeffs[j] = vertices[j][c];
        add_equality(std::move(coeffs), point[c]);
    }
    return solve_min(lp).status == LpStatus::Optimal;
}

inline bool feasibility_point_in_hull(std::span<const Rational> point,
                                      std::span<const std::vector<Rational>> vertices)
{
    return point_in_hull(point, vertices);
}

}  // namespace radon_lab

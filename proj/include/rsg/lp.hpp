#pragma once

#include "rsg/rational.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsg {

// min c.y  s.t.  A_ub.y <= b_ub,  A_eq.y = b_eq,  y >= 0.  Dense; sized
// for the small signaling programs this project produces.
template <typename Num> struct LinearProgram {
    std::vector<Num> objective;
    std::vector<std::vector<Num>> ub_rows;
    std::vector<Num> ub_rhs;
    std::vector<std::vector<Num>> eq_rows;
    std::vector<Num> eq_rhs;

    std::size_t variables() const { return objective.size(); }
    void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Num> struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Num> values;
    Num objective{};
};

namespace lp_detail {

inline bool is_negative(double v, double eps) { return v < -eps; }
inline bool is_positive(double v, double eps) { return v > eps; }
inline bool is_negative(const Rational &v, double) { return v < Rational(0); }
inline bool is_positive(const Rational &v, double) { return v > Rational(0); }
inline double abs_of(double v) { return std::fabs(v); }
inline Rational abs_of(const Rational &v) { return v < Rational(0) ? -v : v; }

// Tableau with explicit basis; Bland's rule on both the entering and the
// leaving choice, which rules out cycling.
template <typename Num> class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols, double eps)
        : rows_(rows), cols_(cols), entering_limit_(cols), eps_(eps),
          a_(rows, std::vector<Num>(cols + 1, Num(0))), cost_(cols + 1, Num(0)), basis_(rows, 0) {}

    // Columns >= limit (the artificials) may never enter the basis.
    void set_entering_limit(std::size_t limit) { entering_limit_ = limit; }

    std::vector<Num> &row(std::size_t r) { return a_[r]; }
    std::vector<Num> &cost_row() { return cost_; }
    std::vector<std::size_t> &basis() { return basis_; }
    Num objective() const { return -cost_[cols_]; }

    void price_out_basis() {
        for (std::size_t r = 0; r < rows_; ++r)
            if (is_positive(abs_of(cost_[basis_[r]]), eps_))
                add_row_multiple(cost_, a_[r], -cost_[basis_[r]]);
    }

    // Returns false on unboundedness.
    bool optimize() {
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < entering_limit_; ++j) {
                if (is_negative(cost_[j], eps_)) {
                    enter = j;
                    break; // Bland: smallest index
                }
            }
            if (enter == cols_)
                return true;
            std::size_t leave = rows_;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (!is_positive(a_[r][enter], eps_))
                    continue;
                if (leave == rows_)
                    leave = r;
                else {
                    Num lhs = a_[r][cols_] * a_[leave][enter];
                    Num rhs = a_[leave][cols_] * a_[r][enter];
                    if (lhs < rhs || (lhs == rhs && basis_[r] < basis_[leave]))
                        leave = r;
                }
            }
            if (leave == rows_)
                return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t j) {
        Num p = a_[r][j];
        for (auto &v : a_[r])
            v /= p;
        for (std::size_t k = 0; k < rows_; ++k)
            if (k != r && is_positive(abs_of(a_[k][j]), 0.0))
                add_row_multiple(a_[k], a_[r], -a_[k][j]);
        if (is_positive(abs_of(cost_[j]), 0.0))
            add_row_multiple(cost_, a_[r], -cost_[j]);
        basis_[r] = j;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Num rhs(std::size_t r) const { return a_[r][cols_]; }

private:
    static void add_row_multiple(std::vector<Num> &target, const std::vector<Num> &src, Num f) {
        for (std::size_t k = 0; k < target.size(); ++k)
            target[k] += f * src[k];
    }

    std::size_t rows_, cols_;
    std::size_t entering_limit_;
    double eps_;
    std::vector<std::vector<Num>> a_;
    std::vector<Num> cost_;
    std::vector<std::size_t> basis_;
};

} // namespace lp_detail

template <typename Num> void LinearProgram<Num>::validate() const {
    if (ub_rows.size() != ub_rhs.size() || eq_rows.size() != eq_rhs.size())
        throw std::invalid_argument("row/rhs count mismatch");
    for (const auto &r : ub_rows)
        if (r.size() != variables())
            throw std::invalid_argument("inequality row width mismatch");
    for (const auto &r : eq_rows)
        if (r.size() != variables())
            throw std::invalid_argument("equality row width mismatch");
}

// Two-phase primal simplex. `eps` is the feasibility/optimality tolerance
// (ignored for exact number types).
template <typename Num>
LpSolution<Num> solve_lp(const LinearProgram<Num> &lp, double eps = 1e-9) {
    lp.validate();
    using lp_detail::is_positive;

    const std::size_t n = lp.variables();
    const std::size_t m_ub = lp.ub_rows.size();
    const std::size_t m = m_ub + lp.eq_rows.size();
    const std::size_t slack0 = n;
    const std::size_t art0 = n + m_ub;
    const std::size_t cols = n + m_ub + m;

    lp_detail::Tableau<Num> tab(m, cols, eps);
    for (std::size_t r = 0; r < m; ++r) {
        const auto &src = r < m_ub ? lp.ub_rows[r] : lp.eq_rows[r - m_ub];
        Num rhs = r < m_ub ? lp.ub_rhs[r] : lp.eq_rhs[r - m_ub];
        auto &row = tab.row(r);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = src[j];
        if (r < m_ub)
            row[slack0 + r] = Num(1);
        row[cols] = rhs;
        bool negate = lp_detail::is_negative(rhs, 0.0);
        if (negate)
            for (auto &v : row)
                v = -v;
        row[art0 + r] = Num(1);
        tab.basis()[r] = art0 + r;
    }

    // Phase 1: minimize the sum of artificials.
    tab.set_entering_limit(art0);
    for (std::size_t r = 0; r < m; ++r)
        tab.cost_row()[art0 + r] = Num(1);
    tab.price_out_basis();
    if (!tab.optimize())
        throw std::logic_error("phase-1 objective cannot be unbounded");
    LpSolution<Num> result;
    if (is_positive(tab.objective(), eps)) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    // Pivot leftover artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis()[r] < art0)
            continue;
        for (std::size_t j = 0; j < art0; ++j) {
            if (is_positive(lp_detail::abs_of(tab.row(r)[j]), eps)) {
                tab.pivot(r, j);
                break;
            }
        }
        // A row still basic in an artificial is redundant; its rhs is ~0.
    }

    // Phase 2: the real objective; artificial columns can no longer enter.
    auto &cost = tab.cost_row();
    std::fill(cost.begin(), cost.end(), Num(0));
    for (std::size_t j = 0; j < n; ++j)
        cost[j] = lp.objective[j];
    tab.price_out_basis();
    if (!tab.optimize()) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    result.status = LpStatus::Optimal;
    result.values.assign(n, Num(0));
    for (std::size_t r = 0; r < m; ++r)
        if (tab.basis()[r] < n)
            result.values[tab.basis()[r]] = tab.rhs(r);
    result.objective = Num(0);
    for (std::size_t j = 0; j < n; ++j)
        result.objective += lp.objective[j] * result.values[j];
    return result;
}

} // namespace rsg

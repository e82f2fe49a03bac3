#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hirzebruch/rational.hpp"

namespace hirzebruch::lp {

enum class Sense { LessEq, Equal, GreaterEq };

struct Row {
    std::vector<Rational> coeffs;
    Sense sense = Sense::LessEq;
    Rational rhs;
};

/// maximize objective . x  subject to  rows, x >= 0.
struct Problem {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    std::vector<Row> rows;
};

enum class Status { Optimal, Infeasible, Unbounded };

/// Duals follow the convention of the dual program
///   minimize rhs . y  subject to  A^T y >= objective,
///   y_i >= 0 on <= rows, y_i <= 0 on >= rows, y_i free on = rows.
/// When Infeasible, `duals` is a Farkas ray: A^T y >= 0 and rhs . y < 0 with the
/// same sign pattern. When Unbounded, `duals` is empty.
struct Result {
    Status status = Status::Infeasible;
    std::vector<Rational> x;
    Rational value;
    std::vector<Rational> duals;
    std::size_t pivots = 0;
};

namespace detail {

// Dense tableau over the rationals. Columns: structural, then one slack or
// surplus per inequality row, then one artificial per row lacking a slack.
class Tableau {
public:
    explicit Tableau(const Problem& p) : m_(p.rows.size()), n_(p.num_vars)
    {
        flip_.assign(m_, false);
        identity_col_.assign(m_, 0);
        std::vector<Sense> sense(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (p.rows[i].coeffs.size() != n_) throw std::invalid_argument("row width mismatch");
            sense[i] = p.rows[i].sense;
            // rhs >= 0 after the flip; >= rows with zero rhs become <= rows
            const bool negative = p.rows[i].rhs < 0;
            const bool zero_ge = p.rows[i].rhs == 0 && sense[i] == Sense::GreaterEq;
            if (negative || zero_ge) {
                flip_[i] = true;
                if (sense[i] == Sense::LessEq)
                    sense[i] = Sense::GreaterEq;
                else if (sense[i] == Sense::GreaterEq)
                    sense[i] = Sense::LessEq;
            }
        }
        std::size_t slack_count = 0, art_count = 0;
        for (auto s : sense) {
            if (s != Sense::Equal) ++slack_count;
            if (s != Sense::LessEq) ++art_count;
        }
        art_begin_ = n_ + slack_count;
        cols_ = art_begin_ + art_count;
        t_.assign(m_, std::vector<Rational>(cols_, Rational(0)));
        rhs_.assign(m_, Rational(0));
        basis_.assign(m_, 0);

        std::size_t slack = n_, art = art_begin_;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational sign = flip_[i] ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sign * p.rows[i].coeffs[j];
            rhs_[i] = sign * p.rows[i].rhs;
            if (sense[i] == Sense::LessEq) {
                t_[i][slack] = 1;
                basis_[i] = identity_col_[i] = slack++;
            } else {
                if (sense[i] == Sense::GreaterEq) t_[i][slack++] = -1;
                t_[i][art] = 1;
                basis_[i] = identity_col_[i] = art++;
            }
        }
    }

    Result solve(const Problem& p)
    {
        Result res;
        // phase 1: maximize -sum(artificials)
        std::vector<Rational> cost1(cols_, Rational(0));
        for (std::size_t j = art_begin_; j < cols_; ++j) cost1[j] = -1;
        if (art_begin_ < cols_) {
            set_objective(cost1);
            run(cols_, res.pivots);
            if (objective_value(cost1) < 0) {
                res.status = Status::Infeasible;
                res.duals = duals(cost1);
                return res;
            }
            drive_out_artificials(res.pivots);
        }

        // phase 2: artificials may not re-enter
        std::vector<Rational> cost2(cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost2[j] = p.objective[j];
        set_objective(cost2);
        if (!run(art_begin_, res.pivots)) {
            res.status = Status::Unbounded;
            return res;
        }
        res.status = Status::Optimal;
        res.x.assign(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) res.x[basis_[i]] = rhs_[i];
        res.value = objective_value(cost2);
        res.duals = duals(cost2);
        return res;
    }

private:
    void set_objective(const std::vector<Rational>& cost)
    {
        // reduced costs d_j = c_j - c_B^T B^-1 A_j
        reduced_ = cost;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (t_[i][j] != 0) reduced_[j] -= cb * t_[i][j];
        }
    }

    Rational objective_value(const std::vector<Rational>& cost) const
    {
        Rational v = 0;
        for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * rhs_[i];
        return v;
    }

    // y_i = c_{e_i} - d_{e_i} on the identity column of row i, mapped back
    // through the row flip.
    std::vector<Rational> duals(const std::vector<Rational>& cost) const
    {
        std::vector<Rational> y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rational v = cost[identity_col_[i]] - reduced_[identity_col_[i]];
            y[i] = flip_[i] ? Rational(-v) : v;
        }
        return y;
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational inv = 1 / t_[row][col];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < cols_; ++j)
            if (t_[row][j] != 0) {
                t_[row][j] *= inv;
                nz.push_back(j);
            }
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || t_[i][col] == 0) continue;
            const Rational f = t_[i][col];
            for (std::size_t j : nz) t_[i][j] -= f * t_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        if (reduced_[col] != 0) {
            const Rational f = reduced_[col];
            for (std::size_t j : nz) reduced_[j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    // Bland's rule: lowest-index improving column, ties in the ratio test
    // broken by lowest basic variable index. Returns false when unbounded.
    bool run(std::size_t enter_limit, std::size_t& pivots)
    {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < enter_limit; ++j)
                if (reduced_[j] > 0) {
                    enter = j;
                    break;
                }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][*enter] <= 0) continue;
                Rational ratio = rhs_[i] / t_[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
            ++pivots;
        }
    }

    // Basic artificials at level zero are pivoted onto any structural or
    // slack column; rows where none exists are redundant and stay put.
    void drive_out_artificials(std::size_t& pivots)
    {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < art_begin_) continue;
            for (std::size_t j = 0; j < art_begin_; ++j)
                if (t_[i][j] != 0) {
                    pivot(i, j);
                    ++pivots;
                    break;
                }
        }
    }

    std::size_t m_, n_, cols_ = 0, art_begin_ = 0;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> rhs_, reduced_;
    std::vector<std::size_t> basis_, identity_col_;
    std::vector<bool> flip_;
};

}  // namespace detail

/// Two-phase primal simplex in exact rational arithmetic.
inline Result solve(const Problem& p)
{
    if (p.objective.size() != p.num_vars) throw std::invalid_argument("objective width mismatch");
    detail::Tableau tab(p);
    return tab.solve(p);
}

}  // namespace hirzebruch::lp

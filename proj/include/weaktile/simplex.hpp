#pragma once

// Exact two-phase tableau simplex over the rationals with Bland's rule.
// Solves: maximize c.x subject to A x = b, x >= 0.

#include "weaktile/rational.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace weaktile {

struct LpProblem {
    std::vector<std::vector<Rational>> rows;  // A, one entry per variable
    std::vector<Rational> rhs;                // b
    std::vector<Rational> objective;          // c; empty means pure feasibility
    std::size_t num_vars = 0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;
    Rational value;
    std::size_t pivots = 0;
};

namespace detail {

class Tableau {
  public:
    Tableau(const LpProblem& lp) : m_(lp.rows.size()), n_(lp.num_vars)
    {
        if (lp.rhs.size() != m_) {
            throw std::invalid_argument("lp: rhs size does not match row count");
        }
        cols_ = n_ + m_;
        t_.assign(m_, std::vector<mpq_class>(cols_, mpq_class(0)));
        rhs_.assign(m_, mpq_class(0));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (lp.rows[i].size() != n_) {
                throw std::invalid_argument("lp: row width does not match variable count");
            }
            const bool flip = lp.rhs[i].sign() < 0;
            for (std::size_t j = 0; j < n_; ++j) {
                t_[i][j] = flip ? mpq_class(-lp.rows[i][j].raw()) : lp.rows[i][j].raw();
            }
            rhs_[i] = flip ? mpq_class(-lp.rhs[i].raw()) : lp.rhs[i].raw();
            t_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
        }
    }

    LpResult solve(const std::vector<Rational>& objective)
    {
        LpResult res;
        // phase 1: maximize -sum(artificials)
        obj_.assign(cols_, mpq_class(0));
        obj_value_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                obj_[j] -= t_[i][j];
            }
            obj_value_ -= rhs_[i];
        }
        iterate(cols_, res.pivots);
        if (sgn(obj_value_) < 0) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        drive_out_artificials(res.pivots);

        // phase 2 over the original columns only
        obj_.assign(cols_, mpq_class(0));
        obj_value_ = 0;
        if (!objective.empty()) {
            for (std::size_t j = 0; j < n_; ++j) {
                obj_[j] = -objective[j].raw();
            }
            for (std::size_t i = 0; i < t_.size(); ++i) {
                const std::size_t bv = basis_[i];
                if (bv >= n_ || sgn(obj_[bv]) == 0) {
                    continue;
                }
                const mpq_class f = obj_[bv];
                for (std::size_t j = 0; j < n_; ++j) {
                    if (sgn(t_[i][j]) != 0) {
                        obj_[j] -= f * t_[i][j];
                    }
                }
                obj_value_ -= f * rhs_[i];
            }
            if (!iterate(n_, res.pivots)) {
                res.status = LpStatus::Unbounded;
                return res;
            }
        }
        res.status = LpStatus::Optimal;
        res.x.assign(n_, Rational(0));
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (basis_[i] < n_) {
                res.x[basis_[i]] = Rational(rhs_[i]);
            }
        }
        res.value = Rational(obj_value_);
        return res;
    }

  private:
    // Bland's rule; returns false on unboundedness.
    bool iterate(std::size_t allowed_cols, std::size_t& pivots)
    {
        for (;;) {
            std::size_t enter = allowed_cols;
            for (std::size_t j = 0; j < allowed_cols; ++j) {
                if (sgn(obj_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == allowed_cols) {
                return true;
            }
            std::size_t leave = t_.size();
            mpq_class best;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (sgn(t_[i][enter]) <= 0) {
                    continue;
                }
                mpq_class ratio = rhs_[i] / t_[i][enter];
                if (leave == t_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == t_.size()) {
                return false;
            }
            pivot(leave, enter);
            ++pivots;
        }
    }

    void drive_out_artificials(std::size_t& pivots)
    {
        for (std::size_t i = 0; i < t_.size();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(t_[i][j]) != 0) {
                    col = j;
                    break;
                }
            }
            if (col == n_) {
                // redundant row
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            pivot(i, col);
            ++pivots;
            ++i;
        }
    }

    void pivot(std::size_t r, std::size_t s)
    {
        auto& prow = t_[r];
        const mpq_class inv = 1 / prow[s];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] *= inv;
                nz.push_back(j);
            }
        }
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || sgn(t_[i][s]) == 0) {
                continue;
            }
            const mpq_class f = t_[i][s];
            for (auto j : nz) {
                t_[i][j] -= f * prow[j];
            }
            rhs_[i] -= f * rhs_[r];
        }
        if (sgn(obj_[s]) != 0) {
            const mpq_class f = obj_[s];
            for (auto j : nz) {
                obj_[j] -= f * prow[j];
            }
            obj_value_ -= f * rhs_[r];
        }
        basis_[r] = s;
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t cols_ = 0;
    std::vector<std::vector<mpq_class>> t_;
    std::vector<mpq_class> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<mpq_class> obj_;
    mpq_class obj_value_;
};

}  // namespace detail

inline LpResult solve_lp(const LpProblem& lp)
{
    if (!lp.objective.empty() && lp.objective.size() != lp.num_vars) {
        throw std::invalid_argument("lp: objective size does not match variable count");
    }
    detail::Tableau tab(lp);
    return tab.solve(lp.objective);
}

}  // namespace weaktile

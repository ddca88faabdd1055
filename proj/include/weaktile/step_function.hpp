#pragma once

#include "weaktile/interval.hpp"
#include "weaktile/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace weaktile {

// One open cell of a step function restricted to a window.
struct Cell {
    Rational left;
    Rational right;
    Rational value;

    friend bool operator==(const Cell&, const Cell&) = default;
};

// Piecewise-constant function on the line. values_[0] holds on
// (-inf, breakpoints_[0]), values_[k] on (breakpoints_[k-1], breakpoints_[k])
// and values_.back() on (breakpoints_.back(), +inf). Values at the breakpoints
// themselves are not represented: all comparisons are almost-everywhere.
// Always canonical: neighbouring cells carry different values.
class StepFunction {
  public:
    StepFunction() : values_{Rational(0)} {}

    static StepFunction constant(Rational v)
    {
        StepFunction f;
        f.values_.front() = std::move(v);
        return f;
    }

    // base is the value near -inf; each entry adds its jump at its point.
    static StepFunction from_jumps(Rational base, const std::map<Rational, Rational>& jumps)
    {
        std::vector<Rational> bps;
        std::vector<Rational> vals{base};
        bps.reserve(jumps.size());
        for (const auto& [x, dj] : jumps) {
            bps.push_back(x);
            vals.push_back(vals.back() + dj);
        }
        return from_pieces(std::move(bps), std::move(vals));
    }

    // Builds from a possibly redundant description and merges equal neighbours.
    static StepFunction from_pieces(std::vector<Rational> breakpoints, std::vector<Rational> values)
    {
        if (values.size() != breakpoints.size() + 1) {
            throw std::invalid_argument("step function needs one more value than breakpoints");
        }
        for (std::size_t i = 1; i < breakpoints.size(); ++i) {
            if (!(breakpoints[i - 1] < breakpoints[i])) {
                throw std::invalid_argument("step function breakpoints must increase strictly");
            }
        }
        StepFunction f;
        f.values_.clear();
        f.values_.push_back(std::move(values[0]));
        for (std::size_t i = 0; i < breakpoints.size(); ++i) {
            if (values[i + 1] == f.values_.back()) {
                continue;
            }
            f.breakpoints_.push_back(std::move(breakpoints[i]));
            f.values_.push_back(std::move(values[i + 1]));
        }
        return f;
    }

    static StepFunction from_cells(const std::vector<Cell>& cells, const Rational& outside = Rational(0))
    {
        std::vector<Rational> bps;
        std::vector<Rational> vals{outside};
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0 && cells[i - 1].right != cells[i].left) {
                throw std::invalid_argument("cells must be contiguous");
            }
            bps.push_back(cells[i].left);
            vals.push_back(cells[i].value);
        }
        if (!cells.empty()) {
            bps.push_back(cells.back().right);
            vals.push_back(outside);
        }
        return from_pieces(std::move(bps), std::move(vals));
    }

    static StepFunction indicator(const IntervalUnion& omega)
    {
        std::map<Rational, Rational> jumps;
        for (const auto& c : omega.components()) {
            jumps[c.left()] += Rational(1);
            jumps[c.right()] -= Rational(1);
        }
        return from_jumps(Rational(0), jumps);
    }

    static StepFunction complement_indicator(const IntervalUnion& omega)
    {
        return constant(Rational(1)) - indicator(omega);
    }

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }

    // Value on the open cell immediately to the right of x.
    const Rational& value_right_of(const Rational& x) const
    {
        const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
        return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
    }

    // Value on the open cell immediately to the left of x.
    const Rational& value_left_of(const Rational& x) const
    {
        const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
        return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
    }

    // Cells covering w, split at every breakpoint inside w and at the extra
    // points. The result is not merged.
    std::vector<Cell> cells(const Window& w, const std::vector<Rational>& extra = {}) const
    {
        std::vector<Rational> cuts{w.left(), w.right()};
        for (const auto& b : breakpoints_) {
            if (w.left() < b && b < w.right()) {
                cuts.push_back(b);
            }
        }
        for (const auto& b : extra) {
            if (w.left() < b && b < w.right()) {
                cuts.push_back(b);
            }
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        std::vector<Cell> out;
        out.reserve(cuts.size());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            out.push_back(Cell{cuts[i], cuts[i + 1], value_right_of(cuts[i])});
        }
        return out;
    }

    Rational integral(const Window& w) const
    {
        Rational total;
        for (const auto& c : cells(w)) {
            total += c.value * (c.right - c.left);
        }
        return total;
    }

    StepFunction shifted(const Rational& s) const
    {
        StepFunction f = *this;
        for (auto& b : f.breakpoints_) {
            b += s;
        }
        return f;
    }

    StepFunction scaled(const Rational& k) const
    {
        std::vector<Rational> vals;
        vals.reserve(values_.size());
        for (const auto& v : values_) {
            vals.push_back(v * k);
        }
        return from_pieces(breakpoints_, std::move(vals));
    }

    friend StepFunction operator+(const StepFunction& f, const StepFunction& g) { return combine(f, g, 1); }
    friend StepFunction operator-(const StepFunction& f, const StepFunction& g) { return combine(f, g, -1); }

    friend bool operator==(const StepFunction&, const StepFunction&) = default;

  private:
    static StepFunction combine(const StepFunction& f, const StepFunction& g, int sign)
    {
        std::vector<Rational> bps;
        bps.reserve(f.breakpoints_.size() + g.breakpoints_.size());
        std::merge(f.breakpoints_.begin(), f.breakpoints_.end(), g.breakpoints_.begin(), g.breakpoints_.end(),
                   std::back_inserter(bps));
        bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
        const Rational s(sign);
        std::vector<Rational> vals;
        vals.reserve(bps.size() + 1);
        vals.push_back(f.values_.front() + s * g.values_.front());
        for (const auto& b : bps) {
            vals.push_back(f.value_right_of(b) + s * g.value_right_of(b));
        }
        return from_pieces(std::move(bps), std::move(vals));
    }

    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

// Exact almost-everywhere comparison of f and g on the window.
inline bool step_equal_ae(const StepFunction& f, const StepFunction& g, const Window& w)
{
    for (const auto& c : f.cells(w, g.breakpoints())) {
        if (c.value != g.value_right_of(c.left)) {
            return false;
        }
    }
    return true;
}

}  // namespace weaktile

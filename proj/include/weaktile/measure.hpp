#pragma once

#include "weaktile/interval.hpp"
#include "weaktile/rational.hpp"
#include "weaktile/step_function.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace weaktile {

struct Atom {
    Rational point;
    Rational weight;

    friend bool operator==(const Atom&, const Atom&) = default;
};

// Finite positive atomic measure. Atoms are sorted by point; coinciding atoms
// are merged by adding their weights.
class AtomicMeasure {
  public:
    AtomicMeasure() = default;

    explicit AtomicMeasure(const std::vector<Atom>& atoms)
    {
        std::map<Rational, Rational> acc;
        for (const auto& a : atoms) {
            if (a.weight.sign() <= 0) {
                throw std::invalid_argument("atom weights must be positive, got " + a.weight.str() + " at " +
                                            a.point.str());
            }
            acc[a.point] += a.weight;
        }
        atoms_.reserve(acc.size());
        for (auto& [p, w] : acc) {
            atoms_.push_back(Atom{p, w});
        }
    }

    // Unit atoms at the given points.
    static AtomicMeasure unit_atoms(const std::vector<Rational>& points)
    {
        std::vector<Atom> atoms;
        atoms.reserve(points.size());
        for (const auto& p : points) {
            atoms.push_back(Atom{p, Rational(1)});
        }
        return AtomicMeasure(atoms);
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    std::size_t size() const { return atoms_.size(); }

    Rational total_mass() const
    {
        Rational m;
        for (const auto& a : atoms_) {
            m += a.weight;
        }
        return m;
    }

    Rational weight_at(const Rational& x) const
    {
        for (const auto& a : atoms_) {
            if (a.point == x) {
                return a.weight;
            }
        }
        return Rational(0);
    }

    // Atoms t for which omega + t meets the window.
    AtomicMeasure restricted_to(const IntervalUnion& omega, const Window& w) const
    {
        std::vector<Atom> kept;
        for (const auto& a : atoms_) {
            if (omega.left() + a.point < w.right() && w.left() < omega.right() + a.point) {
                kept.push_back(a);
            }
        }
        return AtomicMeasure(kept);
    }

    friend AtomicMeasure operator+(const AtomicMeasure& a, const AtomicMeasure& b)
    {
        std::vector<Atom> all = a.atoms_;
        all.insert(all.end(), b.atoms_.begin(), b.atoms_.end());
        return AtomicMeasure(all);
    }

    friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;

  private:
    std::vector<Atom> atoms_;
};

// The function sum_t mu(t) 1_{omega + t}.
inline StepFunction convolve_indicator(const IntervalUnion& omega, const AtomicMeasure& mu)
{
    std::map<Rational, Rational> jumps;
    for (const auto& a : mu.atoms()) {
        for (const auto& c : omega.components()) {
            jumps[c.left() + a.point] += a.weight;
            jumps[c.right() + a.point] -= a.weight;
        }
    }
    return StepFunction::from_jumps(Rational(0), jumps);
}

struct WeakTilingVerdict {
    bool holds = true;
    // First offending cell in left-to-right order: value is the convolution
    // there, expected the value of the complement indicator.
    std::optional<Cell> offending;
    Rational expected;
};

// Checks 1_omega * nu == 1_{omega^c} on every cell of w. The caller supplies
// every atom whose translate meets w.
inline WeakTilingVerdict weak_tiling_check(const IntervalUnion& omega, const AtomicMeasure& nu, const Window& w)
{
    const StepFunction lhs = convolve_indicator(omega, nu);
    const StepFunction rhs = StepFunction::complement_indicator(omega);
    const auto cells = lhs.cells(w, rhs.breakpoints());
    WeakTilingVerdict verdict;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Rational& want = rhs.value_right_of(cells[i].left);
        if (cells[i].value == want) {
            continue;
        }
        // grow to the maximal run with the same (value, expected) pair
        Cell bad = cells[i];
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            if (cells[j].value != bad.value || rhs.value_right_of(cells[j].left) != want) {
                break;
            }
            bad.right = cells[j].right;
        }
        verdict.holds = false;
        verdict.offending = bad;
        verdict.expected = want;
        return verdict;
    }
    return verdict;
}

}  // namespace weaktile

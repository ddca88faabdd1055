#pragma once

#include "weaktile/interval.hpp"
#include "weaktile/measure.hpp"
#include "weaktile/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace weaktile {

// sum_{k in Z} sum_atoms weight * delta_{point + k T}, points in [0, T).
// With includes_origin set, the unit atom at 0 is the delta_0 of
// mu = delta_0 + nu and is left out when the measure is read as nu.
class PeriodicMeasure {
  public:
    PeriodicMeasure(Rational period, const std::vector<Atom>& cell_atoms, bool includes_origin = true)
        : period_(std::move(period)), includes_origin_(includes_origin)
    {
        if (period_.sign() <= 0) {
            throw std::invalid_argument("period must be positive");
        }
        std::map<Rational, Rational> acc;
        for (const auto& a : cell_atoms) {
            if (a.weight.sign() <= 0) {
                throw std::invalid_argument("periodic atom weights must be positive");
            }
            acc[mod_period(a.point, period_)] += a.weight;
        }
        for (auto& [p, w] : acc) {
            atoms_.push_back(Atom{p, w});
        }
        if (includes_origin_) {
            if (atoms_.empty() || !atoms_.front().point.is_zero() || atoms_.front().weight != Rational(1)) {
                throw std::invalid_argument("measure flagged as delta_0 + nu needs a unit atom at 0");
            }
        }
    }

    const Rational& period() const { return period_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    bool includes_origin() const { return includes_origin_; }

    Rational mass_per_period() const
    {
        Rational m;
        for (const auto& a : atoms_) {
            m += a.weight;
        }
        return m;
    }

    bool all_unit() const
    {
        return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.weight == Rational(1); });
    }

    Rational weight_at(const Rational& x) const
    {
        const Rational r = mod_period(x, period_);
        for (const auto& a : atoms_) {
            if (a.point == r) {
                return a.weight;
            }
        }
        return Rational(0);
    }

    // Atoms of nu (or of mu when as_mu is set) in the open range (lo, hi).
    AtomicMeasure expand(const Rational& lo, const Rational& hi, bool as_mu = false) const
    {
        std::vector<Atom> out;
        for (const auto& a : atoms_) {
            for (mpz_class k = floor_int((lo - a.point) / period_); ; ++k) {
                const Rational t = a.point + Rational(k) * period_;
                if (!(t < hi)) {
                    break;
                }
                if (!(lo < t)) {
                    continue;
                }
                if (!as_mu && includes_origin_ && t.is_zero()) {
                    continue;
                }
                out.push_back(Atom{t, a.weight});
            }
        }
        return AtomicMeasure(out);
    }

    // Atoms t of nu for which omega + t meets w.
    AtomicMeasure nu_for_window(const IntervalUnion& omega, const Window& w) const
    {
        return expand(w.left() - omega.right(), w.right() - omega.left());
    }

    friend bool operator==(const PeriodicMeasure&, const PeriodicMeasure&) = default;

  private:
    Rational period_;
    std::vector<Atom> atoms_;
    bool includes_origin_ = true;
};

enum class SolutionKind { Proper, WeakNonProper };

inline const char* to_string(SolutionKind k) { return k == SolutionKind::Proper ? "Proper" : "WeakNonProper"; }

struct TilingSolution {
    PeriodicMeasure measure;
    SolutionKind kind;
    Window certificate_window;
    std::size_t cells_checked = 0;
};

class VerificationFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Checks the weak tiling identity for the periodized measure on
// (-T - diam, T + diam) after moving omega to start at 0.
inline TilingSolution verify_periodic(const IntervalUnion& omega, const PeriodicMeasure& mu)
{
    if (!mu.includes_origin()) {
        throw std::invalid_argument("verification expects the delta_0 + nu form");
    }
    const IntervalUnion base = omega.translated(-omega.left());
    const Rational reach = mu.period() + base.diameter();
    const Window w(-reach, reach);
    const AtomicMeasure nu = mu.nu_for_window(base, w);
    const auto verdict = weak_tiling_check(base, nu, w);
    if (!verdict.holds) {
        const auto& c = *verdict.offending;
        throw VerificationFailure("weak tiling identity fails on (" + c.left.str() + ", " + c.right.str() +
                                  "): value " + c.value.str() + ", expected " + verdict.expected.str());
    }
    const StepFunction f = convolve_indicator(base, nu);
    const std::size_t cells = f.cells(w, StepFunction::complement_indicator(base).breakpoints()).size();
    return TilingSolution{mu, mu.all_unit() ? SolutionKind::Proper : SolutionKind::WeakNonProper, w, cells};
}

}  // namespace weaktile

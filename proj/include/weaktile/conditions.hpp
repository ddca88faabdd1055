#pragma once

// Necessary conditions and special-case classifiers for weak tiling of the
// complement by a finite union of intervals.

#include "weaktile/interval.hpp"
#include "weaktile/rational.hpp"
#include "weaktile/semigroup.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weaktile {

struct GapEntry {
    std::size_t gap_index = 0;
    Rational gap_length;
    // Multiplicity per component of omega; none when the gap length is not
    // a sum of component lengths.
    std::optional<std::vector<std::int64_t>> representation;
};

struct GapReport {
    std::vector<GapEntry> entries;
    bool non_weak_tiler = false;
};

// Expresses a semigroup representation (indexed by distinct generators) per
// component: each count goes to the first component of that length.
inline std::vector<std::int64_t> representation_per_component(const IntervalUnion& omega,
                                                              const LengthSemigroup& s,
                                                              const LengthSemigroup::Representation& p)
{
    std::vector<std::int64_t> out(omega.size(), 0);
    const auto& gens = s.generators();
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t i = 0; i < omega.size(); ++i) {
            if (omega[i].length() == gens[g]) {
                out[i] = p[g];
                break;
            }
        }
    }
    return out;
}

inline GapReport gap_condition(const IntervalUnion& omega)
{
    if (omega.size() < 2) {
        throw std::invalid_argument("gap condition needs at least two components");
    }
    const LengthSemigroup s(omega.lengths());
    GapReport report;
    const auto gaps = omega.gaps();
    for (std::size_t k = 0; k < gaps.size(); ++k) {
        GapEntry e;
        e.gap_index = k;
        e.gap_length = gaps[k].length();
        if (auto p = s.member(e.gap_length)) {
            e.representation = representation_per_component(omega, s, *p);
        } else {
            report.non_weak_tiler = true;
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

struct IntegerCaseReport {
    bool gaps_integral = true;
    std::vector<std::size_t> non_integral_gaps;
    bool non_weak_tiler = false;
    // Every weak tiling measure is supported in Z \ {0}.
    std::string support = "Z\\{0}";
};

inline IntegerCaseReport integer_case(const IntervalUnion& omega)
{
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (!omega[i].length().is_integer()) {
            throw std::invalid_argument("component " + std::to_string(i) + " has non-integer length " +
                                        omega[i].length().str() + "; rescale the instance first");
        }
    }
    IntegerCaseReport r;
    const auto gaps = omega.gaps();
    for (std::size_t k = 0; k < gaps.size(); ++k) {
        if (!gaps[k].length().is_integer()) {
            r.gaps_integral = false;
            r.non_integral_gaps.push_back(k);
        }
    }
    r.non_weak_tiler = !r.gaps_integral;
    return r;
}

// A single interval of length l admits exactly one weak tiling measure:
// unit atoms at l * (Z \ {0}).
struct ForcedTiling {
    Rational step;

    std::vector<Rational> atoms_in(const Rational& lo, const Rational& hi) const
    {
        std::vector<Rational> out;
        for (mpz_class k = ceil_int(lo / step); Rational(k) * step <= hi; ++k) {
            if (k != 0) {
                out.push_back(Rational(k) * step);
            }
        }
        return out;
    }
};

inline ForcedTiling single_interval(const IntervalUnion& omega)
{
    if (omega.size() != 1) {
        throw std::invalid_argument("single_interval needs exactly one component, got " +
                                    std::to_string(omega.size()));
    }
    return ForcedTiling{omega[0].length()};
}

enum class TwoIntervalCase {
    EqualLengthsGapMultiple,
    EqualLengthsGapNotMultiple,
    UnequalLengthsProperForced,
};

inline const char* to_string(TwoIntervalCase c)
{
    switch (c) {
    case TwoIntervalCase::EqualLengthsGapMultiple:
        return "EqualLengths_GapMultiple";
    case TwoIntervalCase::EqualLengthsGapNotMultiple:
        return "EqualLengths_GapNotMultiple";
    case TwoIntervalCase::UnequalLengthsProperForced:
        return "UnequalLengths_ProperForced";
    }
    return "?";
}

struct TwoIntervalVerdict {
    TwoIntervalCase kind;
    std::string detail;
    // normal form (0,h) u (a,b) with h <= b - a
    Rational h;
    Rational a;
    Rational b;
    std::optional<Rational> multiple;  // gap / length, equal-length case only
};

inline TwoIntervalVerdict classify_two_intervals(const IntervalUnion& omega)
{
    if (omega.size() != 2) {
        throw std::invalid_argument("classify_two_intervals needs exactly two components, got " +
                                    std::to_string(omega.size()));
    }
    // reflect so that the longer interval comes second
    const IntervalUnion nf = omega[1].length() < omega[0].length() ? omega.reflected() : omega;
    const IntervalUnion shifted = nf.translated(-nf.left());
    TwoIntervalVerdict v{TwoIntervalCase::UnequalLengthsProperForced, {}, shifted[0].right(), shifted[1].left(),
                         shifted[1].right(), std::nullopt};
    const Rational l = v.b - v.a;
    const Rational gap = v.a - v.h;
    if (v.h != l) {
        v.detail = "lengths " + v.h.str() + " and " + l.str() +
                   " differ: every weak tiling of the complement is a proper tiling, alternating short and long "
                   "unit-weight translates";
        return v;
    }
    const Rational m = gap / l;
    v.multiple = m;
    if (m.is_integer()) {
        v.kind = TwoIntervalCase::EqualLengthsGapMultiple;
        v.detail = "gap " + gap.str() + " = " + m.str() + " * " + l.str() + ": a proper tiling exists";
    } else {
        v.kind = TwoIntervalCase::EqualLengthsGapNotMultiple;
        v.detail = "gap " + gap.str() + " is not a multiple of the common length " + l.str() +
                   ": the gap is not a sum of component lengths, so no weak tiling exists";
    }
    return v;
}

}  // namespace weaktile

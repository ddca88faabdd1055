#pragma once

// Shared helpers and oracles. The oracles here deliberately avoid the library
// routine they check: cell sums are evaluated point by point.

#include "weaktile/weaktile.hpp"

#include <set>
#include <string>
#include <vector>

namespace wt_test {

using weaktile::Atom;
using weaktile::Interval;
using weaktile::IntervalUnion;
using weaktile::Rational;

inline Rational Q(const std::string& s) { return Rational::parse(s); }

inline IntervalUnion omega(const std::string& inline_syntax) { return weaktile::io::parse_omega_inline(inline_syntax); }

// sum_p w_p 1_{omega + p}(x), by direct membership
inline Rational cover_at(const IntervalUnion& om, const std::vector<Atom>& atoms, const Rational& x)
{
    Rational s;
    for (const auto& a : atoms) {
        for (const auto& c : om.components()) {
            if (c.left() + a.point < x && x < c.right() + a.point) {
                s += a.weight;
            }
        }
    }
    return s;
}

// Midpoints of every cell cut out of (lo, hi) by the translated endpoints.
inline std::vector<Rational> cell_midpoints(const IntervalUnion& om, const std::vector<Atom>& atoms,
                                            const Rational& lo, const Rational& hi)
{
    std::set<Rational> cuts{lo, hi};
    auto add = [&](const Rational& x) {
        if (lo < x && x < hi) {
            cuts.insert(x);
        }
    };
    for (const auto& c : om.components()) {
        add(c.left());
        add(c.right());
        for (const auto& a : atoms) {
            add(c.left() + a.point);
            add(c.right() + a.point);
        }
    }
    std::vector<Rational> mids;
    for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
        mids.push_back((*it + *std::next(it)) / Rational(2));
    }
    return mids;
}

// 1_omega * nu == 1_{omega^c} on (lo, hi), checked at every cell midpoint.
inline bool weak_tiling_oracle(const IntervalUnion& om, const std::vector<Atom>& nu, const Rational& lo,
                               const Rational& hi)
{
    for (const auto& x : cell_midpoints(om, nu, lo, hi)) {
        bool inside = false;
        for (const auto& c : om.components()) {
            inside = inside || c.contains_open(x);
        }
        if (cover_at(om, nu, x) != Rational(inside ? 0 : 1)) {
            return false;
        }
    }
    return true;
}

// Periodic mu (including the origin) expanded to nu on a window.
inline std::vector<Atom> expand_nu(const Rational& period, const std::vector<Atom>& cell, long periods)
{
    std::vector<Atom> out;
    for (long k = -periods; k <= periods; ++k) {
        for (const auto& a : cell) {
            const Rational p = a.point + Rational(k) * period;
            if (!p.is_zero()) {
                out.push_back(Atom{p, a.weight});
            }
        }
    }
    return out;
}

// Brute force semigroup membership over integer generators.
inline bool brute_member(const std::vector<long>& gens, long x)
{
    if (x < 0) {
        return false;
    }
    std::vector<bool> ok(static_cast<std::size_t>(x) + 1, false);
    ok[0] = true;
    for (long v = 1; v <= x; ++v) {
        for (long g : gens) {
            if (g <= v && ok[static_cast<std::size_t>(v - g)]) {
                ok[static_cast<std::size_t>(v)] = true;
            }
        }
    }
    return ok[static_cast<std::size_t>(x)];
}

}  // namespace wt_test

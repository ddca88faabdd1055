#pragma once

// Periodic weak-tiling search. A T-periodic measure mu = delta_0 + nu with
// atoms on a finite grid in [0, T) turns 1_omega * mu = 1 into one linear
// equation per cell of the torus R/TZ, solved exactly.

#include "weaktile/conditions.hpp"
#include "weaktile/interval.hpp"
#include "weaktile/measure.hpp"
#include "weaktile/periodic.hpp"
#include "weaktile/rational.hpp"
#include "weaktile/semigroup.hpp"
#include "weaktile/simplex.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace weaktile {

// Reductions mod T of (Theta u -Theta): the subgroup of R/TZ generated by the
// component lengths, i.e. the multiples of gcd(lengths, T).
inline std::vector<Rational> default_grid(const IntervalUnion& omega, const Rational& period)
{
    if (period.sign() <= 0) {
        throw std::invalid_argument("period must be positive");
    }
    mpz_class scale = period.denominator();
    for (const auto& l : omega.lengths()) {
        scale = lcm(scale, l.denominator());
    }
    const Rational s(scale);
    mpz_class g = (period * s).numerator();
    for (const auto& l : omega.lengths()) {
        g = gcd(g, (l * s).numerator());
    }
    const Rational step = Rational(g) / s;
    std::vector<Rational> out;
    for (Rational x(0); x < period; x += step) {
        out.push_back(x);
    }
    return out;
}

// All multiples of 1/q in [0, T).
inline std::vector<Rational> dense_grid(const Rational& period, long q)
{
    if (q <= 0) {
        throw std::invalid_argument("dense grid denominator must be positive");
    }
    std::vector<Rational> out;
    const Rational step = Rational(1) / Rational(q);
    for (Rational x(0); x < period; x += step) {
        out.push_back(x);
    }
    return out;
}

inline std::vector<Rational> merge_grids(std::vector<Rational> a, const std::vector<Rational>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

// The exact constraint system of the periodic search, after presolve.
class TilingSystem {
  public:
    TilingSystem(const IntervalUnion& omega, Rational period, std::vector<Rational> grid)
        : omega_(omega.translated(-omega.left())), period_(std::move(period))
    {
        if (period_.sign() <= 0) {
            throw std::invalid_argument("period must be positive");
        }
        for (auto& g : grid) {
            g = mod_period(g, period_);
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        if (grid.empty() || !grid.front().is_zero()) {
            throw std::invalid_argument("grid must contain 0");
        }
        grid_ = std::move(grid);
        build_rows();
        presolve();
    }

    const std::vector<Rational>& grid() const { return grid_; }
    const Rational& period() const { return period_; }
    std::size_t num_cells() const { return cover_.size(); }
    std::size_t num_free() const { return free_.size(); }
    bool trivially_infeasible() const { return infeasible_; }

    // Weights over grid() (index 0 is the origin, weight 1), or none.
    std::optional<std::vector<Rational>> feasible_point() const
    {
        auto res = run({});
        if (!res) {
            return std::nullopt;
        }
        return res->first;
    }

    // max of objective . w over the feasible set; none when infeasible.
    std::optional<Rational> maximize(const std::vector<Rational>& objective) const
    {
        if (objective.size() != grid_.size()) {
            throw std::invalid_argument("objective must have one entry per grid point");
        }
        auto res = run(objective);
        if (!res) {
            return std::nullopt;
        }
        return res->second;
    }

    // True when point is the only feasible weight vector.
    bool is_unique(const std::vector<Rational>& point) const
    {
        std::vector<Rational> off(grid_.size(), Rational(0));
        for (std::size_t v = 1; v < grid_.size(); ++v) {
            if (point[v].is_zero()) {
                off[v] = Rational(1);
            }
        }
        const auto best = maximize(off);
        if (!best || best->sign() > 0) {
            return false;
        }
        // feasible points live on the support of point; unique iff the
        // reduced columns of that support are linearly independent
        std::vector<std::size_t> cols;
        for (std::size_t k = 0; k < free_.size(); ++k) {
            if (point[free_[k]].sign() > 0) {
                cols.push_back(k);
            }
        }
        std::vector<std::vector<Rational>> m;
        for (const auto& row : rows_) {
            std::vector<Rational> r;
            for (auto c : cols) {
                r.push_back(row[c]);
            }
            m.push_back(std::move(r));
        }
        return rank(m) == cols.size();
    }

  private:
    void build_rows()
    {
        // torus breakpoints
        std::vector<Rational> pts{Rational(0)};
        for (const auto& g : grid_) {
            for (const auto& c : omega_.components()) {
                pts.push_back(mod_period(c.left() + g, period_));
                pts.push_back(mod_period(c.right() + g, period_));
            }
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        const std::size_t cells = pts.size();
        auto index_of = [&](const Rational& x) {
            return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin());
        };
        cover_.assign(cells, std::vector<long>(grid_.size(), 0));
        for (std::size_t v = 0; v < grid_.size(); ++v) {
            for (const auto& c : omega_.components()) {
                const Rational len = c.length();
                const mpz_class full = floor_int(len / period_);
                const Rational rest = len - Rational(full) * period_;
                const long whole = full.get_si();
                if (whole > 0) {
                    for (std::size_t k = 0; k < cells; ++k) {
                        cover_[k][v] += whole;
                    }
                }
                if (rest.is_zero()) {
                    continue;
                }
                const Rational start = mod_period(c.left() + v_shift(v), period_);
                const Rational stop = start + rest;
                const std::size_t i0 = index_of(start);
                if (stop <= period_) {
                    const std::size_t i1 = stop == period_ ? cells : index_of(stop);
                    for (std::size_t k = i0; k < i1; ++k) {
                        ++cover_[k][v];
                    }
                } else {
                    for (std::size_t k = i0; k < cells; ++k) {
                        ++cover_[k][v];
                    }
                    const std::size_t i1 = index_of(stop - period_);
                    for (std::size_t k = 0; k < i1; ++k) {
                        ++cover_[k][v];
                    }
                }
            }
        }
    }

    const Rational& v_shift(std::size_t v) const { return grid_[v]; }

    // Nonnegative coefficients make two deductions exact: a row with zero
    // remaining right-hand side forces its variables to 0, and a row with a
    // single free variable fixes it.
    void presolve()
    {
        const std::size_t nv = grid_.size();
        fixed_.assign(nv, std::nullopt);
        fixed_[0] = Rational(1);
        std::vector<bool> alive(cover_.size(), true);
        bool changed = true;
        while (changed && !infeasible_) {
            changed = false;
            for (std::size_t k = 0; k < cover_.size() && !infeasible_; ++k) {
                if (!alive[k]) {
                    continue;
                }
                Rational rhs(1);
                std::vector<std::size_t> open;
                for (std::size_t v = 0; v < nv; ++v) {
                    const long c = cover_[k][v];
                    if (c == 0) {
                        continue;
                    }
                    if (fixed_[v]) {
                        rhs -= Rational(c) * *fixed_[v];
                    } else {
                        open.push_back(v);
                    }
                }
                if (rhs.sign() < 0) {
                    infeasible_ = true;
                } else if (open.empty()) {
                    infeasible_ = !rhs.is_zero();
                    alive[k] = false;
                } else if (rhs.is_zero()) {
                    for (auto v : open) {
                        fixed_[v] = Rational(0);
                    }
                    alive[k] = false;
                    changed = true;
                } else if (open.size() == 1) {
                    fixed_[open[0]] = rhs / Rational(cover_[k][open[0]]);
                    alive[k] = false;
                    changed = true;
                }
            }
        }
        if (infeasible_) {
            return;
        }
        for (std::size_t v = 0; v < nv; ++v) {
            if (!fixed_[v]) {
                free_.push_back(v);
            }
        }
        std::set<std::pair<std::vector<Rational>, Rational>> seen;
        for (std::size_t k = 0; k < cover_.size(); ++k) {
            if (!alive[k]) {
                continue;
            }
            Rational rhs(1);
            std::vector<Rational> row;
            row.reserve(free_.size());
            for (std::size_t v = 0; v < nv; ++v) {
                if (fixed_[v] && cover_[k][v] != 0) {
                    rhs -= Rational(cover_[k][v]) * *fixed_[v];
                }
            }
            for (auto v : free_) {
                row.emplace_back(cover_[k][v]);
            }
            if (seen.emplace(row, rhs).second) {
                rows_.push_back(std::move(row));
                rhs_.push_back(std::move(rhs));
            }
        }
    }

    std::optional<std::pair<std::vector<Rational>, Rational>> run(const std::vector<Rational>& objective) const
    {
        if (infeasible_) {
            return std::nullopt;
        }
        std::vector<Rational> w(grid_.size(), Rational(0));
        Rational value;
        for (std::size_t v = 0; v < grid_.size(); ++v) {
            if (fixed_[v]) {
                w[v] = *fixed_[v];
                if (!objective.empty()) {
                    value += objective[v] * w[v];
                }
            }
        }
        if (!free_.empty()) {
            LpProblem lp;
            lp.rows = rows_;
            lp.rhs = rhs_;
            lp.num_vars = free_.size();
            if (!objective.empty()) {
                for (auto v : free_) {
                    lp.objective.push_back(objective[v]);
                }
            }
            const LpResult res = solve_lp(lp);
            if (res.status == LpStatus::Infeasible) {
                return std::nullopt;
            }
            if (res.status == LpStatus::Unbounded) {
                throw std::logic_error("periodic tiling LP cannot be unbounded");
            }
            for (std::size_t k = 0; k < free_.size(); ++k) {
                w[free_[k]] = res.x[k];
            }
            value += res.value;
        }
        return std::make_pair(std::move(w), std::move(value));
    }

    static std::size_t rank(std::vector<std::vector<Rational>> m)
    {
        if (m.empty()) {
            return 0;
        }
        const std::size_t cols = m.front().size();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
            std::size_t p = r;
            while (p < m.size() && m[p][c].is_zero()) {
                ++p;
            }
            if (p == m.size()) {
                continue;
            }
            std::swap(m[p], m[r]);
            for (std::size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][c].is_zero()) {
                    continue;
                }
                const Rational f = m[i][c] / m[r][c];
                for (std::size_t j = c; j < cols; ++j) {
                    m[i][j] -= f * m[r][j];
                }
            }
            ++r;
        }
        return r;
    }

    IntervalUnion omega_;
    Rational period_;
    std::vector<Rational> grid_;
    std::vector<std::vector<long>> cover_;  // cell x grid coverage counts
    std::vector<std::optional<Rational>> fixed_;
    std::vector<std::size_t> free_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    bool infeasible_ = false;
};

inline PeriodicMeasure measure_from_weights(const Rational& period, const std::vector<Rational>& grid,
                                            const std::vector<Rational>& weights)
{
    std::vector<Atom> atoms;
    for (std::size_t v = 0; v < grid.size(); ++v) {
        if (weights[v].sign() > 0) {
            atoms.push_back(Atom{grid[v], weights[v]});
        }
    }
    return PeriodicMeasure(period, atoms, true);
}

// Exact LP feasibility for a T-periodic weak tiling with atoms on the grid.
// Any solution found is re-verified before it is returned.
inline std::optional<TilingSolution> weak_tiling_lp(const IntervalUnion& omega, const Rational& period,
                                                    const std::vector<Rational>& grid)
{
    const TilingSystem sys(omega, period, grid);
    const auto w = sys.feasible_point();
    if (!w) {
        return std::nullopt;
    }
    return verify_periodic(omega, measure_from_weights(period, sys.grid(), *w));
}

inline std::optional<TilingSolution> weak_tiling_lp(const IntervalUnion& omega, const Rational& period)
{
    return weak_tiling_lp(omega, period, default_grid(omega, period));
}

struct ProperSearchResult {
    std::vector<TilingSolution> solutions;  // one per class up to translation
    std::string explanation;
};

namespace detail {

// Segments of [0, T) covered so far, keyed by start.
class TorusCover {
  public:
    explicit TorusCover(Rational period) : period_(std::move(period)) {}

    // Splits (start, start + len) mod T into non-wrapping segments.
    std::vector<std::pair<Rational, Rational>> segments(const Rational& start, const Rational& len) const
    {
        const Rational s = mod_period(start, period_);
        if (s + len <= period_) {
            return {{s, s + len}};
        }
        return {{s, period_}, {Rational(0), s + len - period_}};
    }

    bool overlaps(const std::pair<Rational, Rational>& seg) const
    {
        auto it = segs_.lower_bound(seg.first);
        if (it != segs_.end() && it->first < seg.second) {
            return true;
        }
        if (it != segs_.begin()) {
            --it;
            if (seg.first < it->second) {
                return true;
            }
        }
        return false;
    }

    void add(const std::pair<Rational, Rational>& seg) { segs_.emplace(seg.first, seg.second); }
    void remove(const std::pair<Rational, Rational>& seg) { segs_.erase(seg.first); }

    // Leftmost point not covered, or none when the torus is full.
    std::optional<Rational> first_gap() const
    {
        Rational x(0);
        for (const auto& [a, b] : segs_) {
            if (x < a) {
                return x;
            }
            x = b;
        }
        if (x < period_) {
            return x;
        }
        return std::nullopt;
    }

  private:
    Rational period_;
    std::map<Rational, Rational> segs_;
};

inline std::vector<Rational> canonical_shift(const std::vector<Rational>& lambda, const Rational& period)
{
    std::vector<Rational> best;
    for (const auto& base : lambda) {
        std::vector<Rational> s;
        for (const auto& p : lambda) {
            s.push_back(mod_period(p - base, period));
        }
        std::sort(s.begin(), s.end());
        if (best.empty() || s < best) {
            best = std::move(s);
        }
    }
    return best;
}

}  // namespace detail

// All T-periodic proper tilings up to translation. Needs T = k |omega| for a
// positive integer k (k translates per period).
inline ProperSearchResult proper_tiling_search(const IntervalUnion& omega, const Rational& period)
{
    ProperSearchResult result;
    const Rational k = period / omega.measure();
    if (period.sign() <= 0 || !k.is_integer()) {
        result.explanation = "period " + period.str() + " is not a positive integer multiple of |omega| = " +
                             omega.measure().str() + "; a proper T-periodic tiling needs exactly T/|omega| "
                             "translates per period";
        return result;
    }
    const IntervalUnion base = omega.translated(-omega.left());
    for (const auto& c : base.components()) {
        if (period < c.length()) {
            result.explanation = "a component is longer than the period";
            return result;
        }
    }
    detail::TorusCover cover(period);
    std::vector<Rational> placed;
    std::set<std::vector<Rational>> found;

    auto place = [&](const Rational& g) -> std::optional<std::vector<std::pair<Rational, Rational>>> {
        std::vector<std::pair<Rational, Rational>> added;
        for (const auto& c : base.components()) {
            for (const auto& seg : cover.segments(c.left() + g, c.length())) {
                if (cover.overlaps(seg)) {
                    for (const auto& s : added) {
                        cover.remove(s);
                    }
                    return std::nullopt;
                }
                cover.add(seg);
                added.push_back(seg);
            }
        }
        return added;
    };

    auto recurse = [&](auto&& self) -> void {
        const auto gap = cover.first_gap();
        if (!gap) {
            found.insert(detail::canonical_shift(placed, period));
            return;
        }
        std::set<Rational> candidates;
        for (const auto& c : base.components()) {
            candidates.insert(mod_period(*gap - c.left(), period));
        }
        for (const auto& g : candidates) {
            auto added = place(g);
            if (!added) {
                continue;
            }
            placed.push_back(g);
            self(self);
            placed.pop_back();
            for (const auto& s : *added) {
                cover.remove(s);
            }
        }
    };

    if (place(Rational(0))) {
        placed.push_back(Rational(0));
        recurse(recurse);
    }
    for (const auto& lambda : found) {
        std::vector<Atom> atoms;
        for (const auto& p : lambda) {
            atoms.push_back(Atom{p, Rational(1)});
        }
        result.solutions.push_back(verify_periodic(omega, PeriodicMeasure(period, atoms, true)));
    }
    result.explanation = std::to_string(result.solutions.size()) + " proper tiling class(es) with " + k.str() +
                         " translate(s) per period";
    return result;
}

// Every translate of each class that keeps an atom at the origin.
inline std::vector<PeriodicMeasure> proper_tilings_through_origin(const ProperSearchResult& search)
{
    std::set<std::vector<Rational>> seen;
    std::vector<PeriodicMeasure> out;
    for (const auto& sol : search.solutions) {
        const Rational& t = sol.measure.period();
        for (const auto& base : sol.measure.atoms()) {
            std::vector<Rational> pts;
            for (const auto& a : sol.measure.atoms()) {
                pts.push_back(mod_period(a.point - base.point, t));
            }
            std::sort(pts.begin(), pts.end());
            if (!seen.insert(pts).second) {
                continue;
            }
            std::vector<Atom> atoms;
            for (const auto& p : pts) {
                atoms.push_back(Atom{p, Rational(1)});
            }
            out.emplace_back(t, atoms, true);
        }
    }
    return out;
}

enum class DecompositionKind { AlreadyProper, Decomposed, NotDecomposable };

inline const char* to_string(DecompositionKind k)
{
    switch (k) {
    case DecompositionKind::AlreadyProper:
        return "AlreadyProper";
    case DecompositionKind::Decomposed:
        return "Decomposed";
    case DecompositionKind::NotDecomposable:
        return "NotDecomposable";
    }
    return "?";
}

struct DecompositionTerm {
    Rational coefficient;
    PeriodicMeasure tiling;
};

struct DecompositionReport {
    DecompositionKind kind = DecompositionKind::NotDecomposable;
    std::vector<DecompositionTerm> terms;
    std::size_t candidates = 0;
    std::string note;
};

// Tries mu = sum_r alpha_r mu_r with alpha_r > 0 summing to 1 over the proper
// tilings of the same period (optionally only those with atoms in
// allowed_points). The verdict is relative to that period and grid.
inline DecompositionReport vertex_decompose(const TilingSolution& sol, const IntervalUnion& omega,
                                            const std::optional<std::vector<Rational>>& allowed_points = std::nullopt)
{
    DecompositionReport report;
    if (sol.kind == SolutionKind::Proper) {
        report.kind = DecompositionKind::AlreadyProper;
        report.note = "the measure is already a sum of unit masses";
        return report;
    }
    const Rational& period = sol.measure.period();
    const ProperSearchResult search = proper_tiling_search(omega, period);
    std::vector<PeriodicMeasure> cands;
    for (auto& m : proper_tilings_through_origin(search)) {
        if (allowed_points) {
            const bool inside = std::all_of(m.atoms().begin(), m.atoms().end(), [&](const Atom& a) {
                return std::any_of(allowed_points->begin(), allowed_points->end(),
                                   [&](const Rational& p) { return mod_period(p, period) == a.point; });
            });
            if (!inside) {
                continue;
            }
        }
        cands.push_back(std::move(m));
    }
    report.candidates = cands.size();
    if (cands.empty()) {
        report.note = "no proper tiling of period " + period.str() + " on the given grid; inconclusive beyond it. " +
                      search.explanation;
        return report;
    }
    std::set<Rational> points;
    for (const auto& a : sol.measure.atoms()) {
        points.insert(a.point);
    }
    for (const auto& m : cands) {
        for (const auto& a : m.atoms()) {
            points.insert(a.point);
        }
    }
    LpProblem lp;
    lp.num_vars = cands.size();
    for (const auto& p : points) {
        std::vector<Rational> row;
        for (const auto& m : cands) {
            row.push_back(m.weight_at(p));
        }
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(sol.measure.weight_at(p));
    }
    lp.rows.emplace_back(cands.size(), Rational(1));
    lp.rhs.emplace_back(1);
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal) {
        report.note = "not a convex combination of the " + std::to_string(cands.size()) +
                      " proper tilings of period " + period.str() +
                      " considered; this says nothing about other periods or grids";
        return report;
    }
    report.kind = DecompositionKind::Decomposed;
    for (std::size_t r = 0; r < cands.size(); ++r) {
        if (res.x[r].sign() > 0) {
            report.terms.push_back(DecompositionTerm{res.x[r], cands[r]});
        }
    }
    report.note = "convex combination of " + std::to_string(report.terms.size()) + " proper tilings";
    return report;
}

struct DensityReport {
    std::size_t max_atoms = 0;   // sup over x of #(supp cap (x, x+1))
    Rational max_mass;           // sup over x of nu((x, x+1))
    Rational anchor_atoms;       // window (anchor - 0, anchor + 1) attains max_atoms
    Rational anchor_mass;
};

// Open unit windows: the suprema are attained by windows starting just left
// of an atom, so it suffices to count each [p, p + 1) for atoms p in one period.
inline DensityReport density_report(const TilingSolution& sol)
{
    const PeriodicMeasure& m = sol.measure;
    DensityReport r;
    bool first = true;
    for (const auto& a : m.atoms()) {
        std::size_t count = 0;
        Rational mass;
        for (const auto& b : m.atoms()) {
            mpz_class k = ceil_int((a.point - b.point) / m.period());
            for (;; ++k) {
                const Rational t = b.point + Rational(k) * m.period();
                if (!(t < a.point + Rational(1))) {
                    break;
                }
                ++count;
                mass += b.weight;
            }
        }
        if (first || count > r.max_atoms) {
            r.max_atoms = count;
            r.anchor_atoms = a.point;
        }
        if (first || r.max_mass < mass) {
            r.max_mass = mass;
            r.anchor_mass = a.point;
        }
        first = false;
    }
    return r;
}

}  // namespace weaktile

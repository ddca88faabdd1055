#pragma once

// Left-to-right scan certifying that a finite weighted family of intervals
// sums to the indicator of an interval (or of a half-line, inside a window).
//
// At frontier x_k the pieces already taken (A_k) sum to a level lambda_k < 1
// just right of x_k. Exactly 1 - lambda_k of weight must start at x_k; those
// pieces form the group B_k. After adding them the sum is 1 up to the first
// right endpoint of an active piece, which becomes x_{k+1}. Any piece whose
// left endpoint falls strictly inside (x_k, x_{k+1}) pushes the sum above 1.

#include "weaktile/interval.hpp"
#include "weaktile/rational.hpp"
#include "weaktile/step_function.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace weaktile {

struct Piece {
    Interval interval;
    Rational weight;
};

class ScanError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The pieces starting at the frontier carry less weight than needed.
class CoverDeficit : public ScanError {
  public:
    CoverDeficit(Rational point, Rational level)
        : ScanError("cover deficit at " + point.str() + ": reachable level " + level.str() + " < 1"),
          point(std::move(point)), level(std::move(level))
    {
    }
    Rational point;
    Rational level;
};

// The summed weights exceed 1 on the cell (left, right).
class CoverExcess : public ScanError {
  public:
    CoverExcess(Rational left, Rational right, Rational value)
        : ScanError("cover excess on (" + left.str() + ", " + right.str() + "): value " + value.str()),
          left(std::move(left)), right(std::move(right)), value(std::move(value))
    {
    }
    Rational left;
    Rational right;
    Rational value;
};

class PieceEscapesInterval : public ScanError {
  public:
    explicit PieceEscapesInterval(std::size_t index)
        : ScanError("piece " + std::to_string(index) + " is not contained in the covered interval"), index(index)
    {
    }
    std::size_t index;
};

// Weighted intervals whose lengths lie in a declared finite set. Coinciding
// intervals are merged by adding weights; order of first occurrence is kept.
class WeightedPieces {
  public:
    WeightedPieces(const std::vector<Piece>& pieces, std::vector<Rational> lengths)
    {
        std::sort(lengths.begin(), lengths.end());
        lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
        for (const auto& l : lengths) {
            if (l.sign() <= 0) {
                throw std::invalid_argument("declared lengths must be positive");
            }
        }
        lengths_ = std::move(lengths);
        std::map<Interval, std::size_t> seen;
        for (const auto& p : pieces) {
            if (p.weight.sign() <= 0) {
                throw std::invalid_argument("piece weights must be positive");
            }
            if (!std::binary_search(lengths_.begin(), lengths_.end(), p.interval.length())) {
                throw std::invalid_argument("piece (" + p.interval.left().str() + ", " + p.interval.right().str() +
                                            ") has a length outside the declared set");
            }
            if (auto it = seen.find(p.interval); it != seen.end()) {
                pieces_[it->second].weight += p.weight;
                continue;
            }
            seen.emplace(p.interval, pieces_.size());
            pieces_.push_back(p);
        }
    }

    const std::vector<Piece>& pieces() const { return pieces_; }
    const std::vector<Rational>& lengths() const { return lengths_; }
    std::size_t size() const { return pieces_.size(); }
    const Piece& operator[](std::size_t i) const { return pieces_[i]; }

    // sum_j w_j 1_{I_j}
    StepFunction sum() const
    {
        std::map<Rational, Rational> jumps;
        for (const auto& p : pieces_) {
            jumps[p.interval.left()] += p.weight;
            jumps[p.interval.right()] -= p.weight;
        }
        return StepFunction::from_jumps(Rational(0), jumps);
    }

  private:
    std::vector<Piece> pieces_;
    std::vector<Rational> lengths_;
};

struct ScanCertificate {
    std::vector<Rational> breakpoints;         // x_0 < x_1 < ... < x_N
    std::vector<std::vector<std::size_t>> groups;  // B_0, ..., B_{N-1}
    std::vector<Rational> levels;              // lambda_0, ..., lambda_{N-1}
};

namespace detail {

inline ScanCertificate run_scan(const Rational& start, const std::optional<Rational>& end, const Rational& stop,
                                const WeightedPieces& pieces)
{
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        const auto& iv = pieces[j].interval;
        if (iv.left() < start || (end && *end < iv.right())) {
            throw PieceEscapesInterval(j);
        }
    }
    // unprocessed pieces keyed by left endpoint
    std::multimap<Rational, std::size_t> pending;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        pending.emplace(pieces[j].interval.left(), j);
    }
    // active pieces keyed by right endpoint
    std::multimap<Rational, std::size_t> active;

    ScanCertificate cert;
    Rational x = start;
    Rational level(0);
    cert.breakpoints.push_back(x);
    while (x < stop) {
        std::vector<std::size_t> group;
        Rational added(0);
        for (auto it = pending.find(x); it != pending.end() && it->first == x; it = pending.erase(it)) {
            group.push_back(it->second);
            added += pieces[it->second].weight;
        }
        std::sort(group.begin(), group.end());
        for (auto j : group) {
            active.emplace(pieces[j].interval.right(), j);
        }
        const Rational total = level + added;
        if (total < Rational(1)) {
            throw CoverDeficit(x, total);
        }
        if (Rational(1) < total) {
            Rational right = active.begin()->first;
            if (!pending.empty() && pending.begin()->first < right) {
                right = pending.begin()->first;
            }
            throw CoverExcess(x, right, total);
        }
        const Rational next = active.begin()->first;
        if (!pending.empty() && pending.begin()->first < next) {
            // a piece starting strictly inside (x, next) lifts the sum above 1
            const Rational& s = pending.begin()->first;
            Rational right = next;
            const auto after = pending.upper_bound(s);
            if (after != pending.end() && after->first < right) {
                right = after->first;
            }
            Rational value(1);
            for (auto it = pending.begin(); it != pending.end() && it->first == s; ++it) {
                value += pieces[it->second].weight;
            }
            throw CoverExcess(s, right, value);
        }
        cert.groups.push_back(std::move(group));
        cert.levels.push_back(level);
        while (!active.empty() && active.begin()->first == next) {
            active.erase(active.begin());
        }
        level = Rational(0);
        for (const auto& [r, j] : active) {
            level += pieces[j].weight;
        }
        x = next;
        cert.breakpoints.push_back(x);
    }
    return cert;
}

}  // namespace detail

// Certifies sum_j w_j 1_{I_j} == 1_I almost everywhere.
inline ScanCertificate scan_cover(const Interval& interval, const WeightedPieces& pieces)
{
    return detail::run_scan(interval.left(), interval.right(), interval.right(), pieces);
}

// Half-line (a, +inf) version: the scan stops once its frontier reaches the
// right end of the window. Pieces must cover (a, right(w)); those starting at
// or beyond right(w) may be omitted.
inline ScanCertificate halfline_scan(const Rational& a, const WeightedPieces& pieces, const Window& w)
{
    if (w.left() < a) {
        throw std::invalid_argument("window must lie in the half-line");
    }
    return detail::run_scan(a, std::nullopt, w.right(), pieces);
}

// Chain of pieces from left(I) to right(I) with matching endpoints; at each
// point the shortest piece starting there is taken.
inline std::vector<std::size_t> gap_chain(const Interval& interval, const WeightedPieces& pieces)
{
    scan_cover(interval, pieces);
    std::vector<std::size_t> chain;
    Rational x = interval.left();
    while (x < interval.right()) {
        std::optional<std::size_t> best;
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (pieces[j].interval.left() != x) {
                continue;
            }
            if (!best || pieces[j].interval.length() < pieces[*best].interval.length()) {
                best = j;
            }
        }
        if (!best) {
            throw std::logic_error("no piece starts at " + x.str() + " although the scan succeeded");
        }
        chain.push_back(*best);
        x = pieces[*best].interval.right();
    }
    return chain;
}

// delta_a - delta_b == sum_j w_j (delta_{x_j} - delta_{y_j}) as signed measures.
inline bool derivative_identity(const Interval& interval, const WeightedPieces& pieces)
{
    std::map<Rational, Rational> mass;
    mass[interval.left()] -= Rational(1);
    mass[interval.right()] += Rational(1);
    for (const auto& p : pieces.pieces()) {
        mass[p.interval.left()] += p.weight;
        mass[p.interval.right()] -= p.weight;
    }
    return std::all_of(mass.begin(), mass.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace weaktile

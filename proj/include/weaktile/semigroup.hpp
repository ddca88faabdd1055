#pragma once

// The additive semigroup generated by a finite set of positive rational
// lengths. Queries run on the integer lattice obtained by multiplying every
// generator by the lcm of their denominators.

#include "weaktile/interval.hpp"
#include "weaktile/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace weaktile {

// Largest scaled bound the coin-problem sieve will allocate.
inline constexpr std::int64_t kMaxSieveBound = 50'000'000;

struct FrobeniusResult {
    enum class Kind {
        AllRepresentable,  // every nonnegative multiple of 1/scale is in the semigroup
        Finite,            // gcd 1; value is the largest non-member
        Lattice,           // gcd g > 1; members are multiples of step only
    };
    Kind kind = Kind::AllRepresentable;
    std::optional<Rational> value;  // Finite, or Lattice with a finite reduced Frobenius number
    std::optional<Rational> step;   // Lattice only
};

class LengthSemigroup {
  public:
    using Representation = std::vector<std::int64_t>;

    explicit LengthSemigroup(std::vector<Rational> generators, const Rational& presieve_bound = Rational(0))
    {
        if (generators.empty()) {
            throw std::invalid_argument("semigroup needs at least one generator");
        }
        for (const auto& g : generators) {
            if (g.sign() <= 0) {
                throw std::invalid_argument("semigroup generators must be positive, got " + g.str());
            }
        }
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        generators_ = std::move(generators);

        mpz_class scale = 1;
        for (const auto& g : generators_) {
            scale = lcm(scale, g.denominator());
        }
        scale_ = Rational(scale);
        mpz_class g = 0;
        for (const auto& gen : generators_) {
            const mpz_class m = (gen * scale_).numerator();
            if (!m.fits_slong_p() || m > kMaxSieveBound) {
                throw std::length_error("scaled generator " + m.get_str() + " exceeds the sieve limit");
            }
            integer_generators_.push_back(m.get_si());
            g = gcd(g, m);
        }
        gcd_ = g.get_si();
        if (presieve_bound.sign() > 0) {
            sieve_ = std::make_shared<const Sieve>(build_sieve(scaled_bound(presieve_bound)));
        }
    }

    const std::vector<Rational>& generators() const { return generators_; }
    const std::vector<std::int64_t>& integer_generators() const { return integer_generators_; }
    const Rational& scale() const { return scale_; }
    std::int64_t gcd_value() const { return gcd_; }

    // Lexicographically smallest p with sum p_i * generators()[i] == x.
    std::optional<Representation> member(const Rational& x) const
    {
        if (x.sign() < 0) {
            throw std::domain_error("semigroup membership needs x >= 0, got " + x.str());
        }
        const Rational scaled = x * scale_;
        if (!scaled.is_integer()) {
            return std::nullopt;
        }
        const std::int64_t target = to_bound(scaled.numerator());
        if (target % gcd_ != 0) {
            return std::nullopt;
        }
        if (sieve_ && target <= sieve_->bound) {
            return extract(*sieve_, target);
        }
        return extract(build_sieve(target), target);
    }

    bool contains(const Rational& x) const { return x.sign() >= 0 && member(x).has_value(); }

    // All members in [0, bound], ascending.
    std::vector<Rational> enumerate(const Rational& bound) const
    {
        if (bound.sign() < 0) {
            throw std::domain_error("enumerate needs bound >= 0");
        }
        const std::int64_t top = scaled_bound(bound);
        std::shared_ptr<const Sieve> local = sieve_;
        if (!local || local->bound < top) {
            local = std::make_shared<const Sieve>(build_sieve(top));
        }
        std::vector<Rational> out;
        const auto& full = local->reach.front();
        for (std::int64_t x = 0; x <= top; ++x) {
            if (full[static_cast<std::size_t>(x)]) {
                out.push_back(Rational(static_cast<long>(x)) / scale_);
            }
        }
        return out;
    }

    FrobeniusResult frobenius() const
    {
        FrobeniusResult r;
        std::vector<std::int64_t> reduced;
        reduced.reserve(integer_generators_.size());
        for (auto m : integer_generators_) {
            reduced.push_back(m / gcd_);
        }
        const Rational unit = Rational(static_cast<long>(gcd_)) / scale_;
        std::optional<Rational> f;
        if (reduced.front() != 1) {
            f = Rational(static_cast<long>(apery_frobenius(reduced))) * unit;
        }
        if (gcd_ > 1) {
            r.kind = FrobeniusResult::Kind::Lattice;
            r.step = unit;
            r.value = f;
        } else if (f) {
            r.kind = FrobeniusResult::Kind::Finite;
            r.value = f;
        }
        return r;
    }

  private:
    // reach[i][x]: x is a sum of generators i..n-1 (reach[n] is {0}).
    struct Sieve {
        std::int64_t bound = -1;
        std::vector<std::vector<bool>> reach;
    };

    static std::int64_t to_bound(const mpz_class& v)
    {
        if (!v.fits_slong_p() || v > kMaxSieveBound) {
            throw std::length_error("scaled value " + v.get_str() + " exceeds the sieve limit");
        }
        return v.get_si();
    }

    std::int64_t scaled_bound(const Rational& bound) const { return to_bound(floor_int(bound * scale_)); }

    Sieve build_sieve(std::int64_t bound) const
    {
        const std::size_t n = integer_generators_.size();
        const auto len = static_cast<std::size_t>(bound + 1);
        Sieve s;
        s.bound = bound;
        s.reach.assign(n + 1, std::vector<bool>(len, false));
        s.reach[n][0] = true;
        for (std::size_t i = n; i-- > 0;) {
            const auto m = static_cast<std::size_t>(integer_generators_[i]);
            auto& row = s.reach[i];
            const auto& next = s.reach[i + 1];
            for (std::size_t x = 0; x < len; ++x) {
                row[x] = next[x] || (x >= m && row[x - m]);
            }
        }
        return s;
    }

    std::optional<Representation> extract(const Sieve& s, std::int64_t target) const
    {
        if (!s.reach.front()[static_cast<std::size_t>(target)]) {
            return std::nullopt;
        }
        Representation p(integer_generators_.size(), 0);
        std::int64_t rest = target;
        for (std::size_t i = 0; i < integer_generators_.size(); ++i) {
            const std::int64_t m = integer_generators_[i];
            while (!s.reach[i + 1][static_cast<std::size_t>(rest)]) {
                rest -= m;
                ++p[i];
            }
        }
        return p;
    }

    // Largest integer outside the numerical semigroup generated by coprime
    // gens (smallest first), via shortest paths on residues mod gens[0].
    static std::int64_t apery_frobenius(const std::vector<std::int64_t>& gens)
    {
        const std::int64_t m = gens.front();
        constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
        std::vector<std::int64_t> dist(static_cast<std::size_t>(m), inf);
        dist[0] = 0;
        using Item = std::pair<std::int64_t, std::int64_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.emplace(0, 0);
        while (!pq.empty()) {
            const auto [d, r] = pq.top();
            pq.pop();
            if (d != dist[static_cast<std::size_t>(r)]) {
                continue;
            }
            for (std::size_t i = 1; i < gens.size(); ++i) {
                const std::int64_t nr = (r + gens[i]) % m;
                const std::int64_t nd = d + gens[i];
                if (nd < dist[static_cast<std::size_t>(nr)]) {
                    dist[static_cast<std::size_t>(nr)] = nd;
                    pq.emplace(nd, nr);
                }
            }
        }
        return *std::max_element(dist.begin(), dist.end()) - m;
    }

    std::vector<Rational> generators_;
    std::vector<std::int64_t> integer_generators_;
    Rational scale_;
    std::int64_t gcd_ = 1;
    std::shared_ptr<const Sieve> sieve_;
};

// ((Theta u -Theta) \ {0}) intersected with the closed window [left, right],
// Theta generated by the component lengths of omega.
inline std::vector<Rational> candidate_support(const IntervalUnion& omega, const Window& w)
{
    const LengthSemigroup s(omega.lengths());
    const Rational reach = std::max(abs(w.left()), abs(w.right()));
    std::vector<Rational> out;
    for (const auto& t : s.enumerate(reach)) {
        if (t.is_zero()) {
            continue;
        }
        if (w.left() <= t && t <= w.right()) {
            out.push_back(t);
        }
        if (w.left() <= -t && -t <= w.right()) {
            out.push_back(-t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace weaktile

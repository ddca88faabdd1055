#pragma once

// Fourier transform of a polytope indicator,
//   1_A^(xi) = int_A exp(-2 pi i <xi, x>) dx,
// reduced to edges by the divergence theorem. All coefficients are exact
// rationals; the orthogonality branches (xi.d = 0 on an edge, xi parallel to
// a facet normal, xi = 0) are selected exactly. Only the final
// exponentials and sines are evaluated in MPFR.

#include "weaktile/bigfloat.hpp"
#include "weaktile/polytope.hpp"
#include "weaktile/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace weaktile {

namespace detail {

// int_0^1 exp(-2 pi i <xi, p + t d>) dt = e^{-2 pi i xi.p} e^{-i pi theta} sinc(pi theta), theta = xi.d
inline BigComplex edge_integral(const Rational& xi_p, const Rational& theta, mpfr_prec_t bits)
{
    const BigFloat pi = BigFloat::pi(bits);
    if (theta.is_zero()) {
        return BigComplex::expi(-(BigFloat(Rational(2) * xi_p, bits) * pi));
    }
    if (theta.is_integer()) {
        return BigComplex(bits);  // sin(pi theta) = 0
    }
    const BigFloat th(theta, bits);
    const BigFloat pth = pi * th;
    const BigFloat sinc = sin(pth) / pth;
    // combined phase: -pi (2 xi.p + theta)
    const BigFloat phase = -(BigFloat(Rational(2) * xi_p + theta, bits) * pi);
    return BigComplex::expi(phase).scaled(sinc);
}

}  // namespace detail

inline BigComplex ft_indicator(const Polytope& poly, const Vec& xi, long digits = 30)
{
    if (xi.size() != static_cast<std::size_t>(poly.dimension())) {
        throw std::invalid_argument("frequency has the wrong dimension");
    }
    const mpfr_prec_t bits = bits_for_digits(digits);
    if (vec::is_zero(xi)) {
        return BigComplex(BigFloat(poly.volume(), bits), BigFloat(bits));
    }
    const BigFloat two_pi = BigFloat::pi(bits) * BigFloat(Rational(2), bits);
    const Rational xi2 = vec::dot(xi, xi);
    BigComplex sum(bits);
    const auto& vs = poly.vertices();
    if (poly.dimension() == 2) {
        for (const auto& f : poly.facets()) {
            const Vec& p = vs[f[0]];
            const Vec d = vec::sub(vs[f[1]], p);
            const Rational coef = xi[0] * d[1] - xi[1] * d[0];
            if (coef.is_zero()) {
                continue;
            }
            sum += detail::edge_integral(vec::dot(xi, p), vec::dot(xi, d), bits).scaled(BigFloat(coef, bits));
        }
        // i / (2 pi |xi|^2) * sum
        return sum.times_i().scaled(BigFloat(Rational(1) / xi2, bits) / two_pi);
    }
    for (std::size_t fi = 0; fi < poly.facets().size(); ++fi) {
        const auto& cyc = poly.facets()[fi];
        const Vec& n = poly.facet_info()[fi].normal;
        const Rational xn = vec::dot(xi, n);
        if (xn.is_zero()) {
            continue;
        }
        const Vec xxn = vec::cross(xi, n);
        const Rational c2 = vec::dot(xxn, xxn);
        if (c2.is_zero()) {
            // xi normal to the facet: constant phase over it
            const Rational xp = vec::dot(xi, vs[cyc[0]]);
            sum += BigComplex::expi(-(BigFloat(xp, bits) * two_pi)).scaled(BigFloat(xn, bits));
            continue;
        }
        BigComplex inner(bits);
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const Vec& p = vs[cyc[k]];
            const Vec d = vec::sub(vs[cyc[(k + 1) % cyc.size()]], p);
            const Rational coef = vec::dot(xi, vec::cross(d, n));
            if (coef.is_zero()) {
                continue;
            }
            inner += detail::edge_integral(vec::dot(xi, p), vec::dot(xi, d), bits).scaled(BigFloat(coef, bits));
        }
        sum += inner.times_i().scaled(BigFloat(xn / c2, bits) / two_pi);
    }
    return sum.times_i().scaled(BigFloat(Rational(1) / xi2, bits) / two_pi);
}

// S(v, R, eps): eps-balls around n v with n = 0 or |n| >= R.
struct CylinderSet {
    Vec v;
    long R = 1;
    Rational eps;

    void validate(std::size_t dim) const
    {
        if (v.size() != dim) {
            throw std::invalid_argument("v has the wrong dimension");
        }
        if (vec::is_zero(v)) {
            throw std::invalid_argument("v must be nonzero");
        }
        if (R < 1) {
            throw std::invalid_argument("R must be a positive integer");
        }
        if (eps.sign() <= 0) {
            throw std::invalid_argument("eps must be positive");
        }
    }
};

namespace detail {

inline Rational radical_inverse(unsigned long i, unsigned long base)
{
    Rational r;
    Rational f(1, base);
    const Rational inv(1, base);
    while (i > 0) {
        r += Rational(static_cast<long>(i % base)) * f;
        f *= inv;
        i /= base;
    }
    return r;
}

// Deterministic points of the open unit ball: the centre, then Halton points
// of [-1, 1]^d (bases 2, 3, 5) that fall inside the ball.
inline std::vector<Vec> ball_pattern(std::size_t dim, std::size_t count)
{
    static constexpr unsigned long bases[] = {2, 3, 5};
    std::vector<Vec> out;
    if (count == 0) {
        return out;
    }
    out.emplace_back(dim, Rational(0));
    for (unsigned long i = 1; out.size() < count; ++i) {
        Vec h(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            h[k] = Rational(2) * radical_inverse(i, bases[k]) - Rational(1);
        }
        if (vec::dot(h, h) < Rational(1)) {
            out.push_back(std::move(h));
        }
    }
    return out;
}

}  // namespace detail

struct BallMinimum {
    long n = 0;
    double min_modulus = 0;
    Vec argmin;
};

struct ProbeReport {
    std::vector<BallMinimum> balls;
    double global_min = 0;
    long global_n = 0;
    std::size_t evaluations = 0;
    // |1_A^(xi)| >= m(A) (1 - 2 pi eps r_A) on the origin ball, r_A = max |x| over A
    double origin_lower_bound = 0;
    std::string note =
        "sampled minima only: a tiny value suggests a zero, a positive minimum does not prove zero-freeness";
};

inline ProbeReport zero_probe(const Polytope& poly, const CylinderSet& s, long n_max, std::size_t samples_per_ball,
                              long digits = 30)
{
    const std::size_t dim = static_cast<std::size_t>(poly.dimension());
    s.validate(dim);
    if (n_max < s.R) {
        throw std::invalid_argument("n_max must be at least R");
    }
    if (samples_per_ball == 0) {
        throw std::invalid_argument("need at least one sample per ball");
    }
    std::vector<long> ns{0};
    for (long n = s.R; n <= n_max; ++n) {
        ns.push_back(-n);
        ns.push_back(n);
    }
    std::sort(ns.begin(), ns.end());
    const auto pattern = detail::ball_pattern(dim, samples_per_ball);
    ProbeReport r;
    bool first = true;
    for (long n : ns) {
        BallMinimum bm;
        bm.n = n;
        bool first_in_ball = true;
        const Vec center = vec::scale(s.v, Rational(n));
        for (const auto& h : pattern) {
            const Vec xi = vec::add(center, vec::scale(h, s.eps));
            const double m = ft_indicator(poly, xi, digits).abs().to_double();
            ++r.evaluations;
            if (first_in_ball || m < bm.min_modulus) {
                bm.min_modulus = m;
                bm.argmin = xi;
                first_in_ball = false;
            }
        }
        if (first || bm.min_modulus < r.global_min) {
            r.global_min = bm.min_modulus;
            r.global_n = n;
            first = false;
        }
        r.balls.push_back(std::move(bm));
    }
    const double ra = std::sqrt(poly.max_radius_sq().to_double());
    r.origin_lower_bound = poly.volume().to_double() * (1.0 - 2.0 * M_PI * s.eps.to_double() * ra);
    return r;
}

}  // namespace weaktile

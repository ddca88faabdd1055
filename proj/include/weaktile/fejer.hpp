#pragma once

// Witness functions g_N(x) = sum_n c_N(n) phi(x - n v) supported in S(v, R, eps)
// with nonnegative Fourier transform. c_N are the Fourier coefficients of
// p_N(t) = K_N(R t), K_N the Fejer kernel: c_N(m R) = 1 - |m|/N for |m| < N,
// zero otherwise. phi = psi * psi~ for a radial bump psi of radius eps/2, so
// supp(phi) lies in the eps-ball and phi^ = psi^^2 >= 0.

#include "weaktile/fourier.hpp"
#include "weaktile/polytope.hpp"
#include "weaktile/rational.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace weaktile {

class RadialBump {
  public:
    // psi(x) = c exp(-1 / (1 - |x/a|^2)) on |x| < a, a = eps/2, with int psi = 1
    RadialBump(std::size_t dim, double eps) : dim_(dim), a_(eps / 2)
    {
        if (dim < 1 || dim > 3) {
            throw std::invalid_argument("bump dimension must be 1, 2 or 3");
        }
        const double raw = sphere_area() * radial([this](double r) { return profile(r); });
        c_ = 1.0 / raw;
        phi0_ = sphere_area() * radial([this](double r) { return c_ * c_ * profile(r) * profile(r); });
    }

    double radius() const { return a_; }
    double psi(double r) const { return c_ * profile(r); }
    // phi(0) = int psi^2
    double phi_at_origin() const { return phi0_; }

    // radial Fourier transform of psi at |xi| = k
    double psi_hat(double k) const
    {
        using boost::math::quadrature::gauss_kronrod;
        const double w = 2 * std::numbers::pi * k;
        auto integ = [&](auto f) { return gauss_kronrod<double, 61>::integrate(f, 0.0, a_, 4, 1e-12); };
        if (k == 0.0) {
            return 1.0;
        }
        switch (dim_) {
        case 1:
            return 2 * integ([&](double r) { return psi(r) * std::cos(w * r); });
        case 2:
            return 2 * std::numbers::pi * integ([&](double r) { return psi(r) * std::cyl_bessel_j(0.0, w * r) * r; });
        default:
            return 2 / k * integ([&](double r) { return psi(r) * std::sin(w * r) * r; });
        }
    }

    double phi_hat(double k) const
    {
        const double p = psi_hat(k);
        return p * p;
    }

  private:
    double profile(double r) const
    {
        const double t = r / a_;
        if (t >= 1.0) {
            return 0.0;
        }
        return std::exp(-1.0 / (1.0 - t * t));
    }

    double sphere_area() const
    {
        switch (dim_) {
        case 1:
            return 2.0;
        case 2:
            return 2 * std::numbers::pi;
        default:
            return 4 * std::numbers::pi;
        }
    }

    // int_0^a f(r) r^{d-1} dr
    template <class F>
    double radial(F f) const
    {
        boost::math::quadrature::tanh_sinh<double> ts;
        const int pw = static_cast<int>(dim_) - 1;
        return ts.integrate([&](double r) { return f(r) * std::pow(r, pw); }, 0.0, a_);
    }

    std::size_t dim_;
    double a_;
    double c_ = 0;
    double phi0_ = 0;
};

// p_N(t) = sum_{|m|<N} (1 - |m|/N) e^{2 pi i m R t}
inline long double fejer_poly(long N, long R, long double t)
{
    long double s = 1;
    for (long m = 1; m < N; ++m) {
        s += 2 * (1 - static_cast<long double>(m) / N) *
             std::cos(2 * std::numbers::pi_v<long double> * static_cast<long double>(m * R) * t);
    }
    return s;
}

struct WitnessTerm {
    long n;            // translate n v
    Rational coefficient;
};

struct WitnessReport {
    long N = 0;
    std::vector<WitnessTerm> terms;   // nonzero coefficients, n = 0 or |n| >= R
    Rational integral;                // sum of coefficients times int phi = 1
    double g_at_origin = 0;           // g_N(0)
    double phi_at_origin = 0;         // phi(0)
    Rational mass;                    // m(A)
    double rhs = 0;                   // phi(0) / m(A)
    bool violated = false;            // int g_N > m(A)^{-1} g_N(0)
    long threshold = 0;               // smallest N with violation
    double ghat_min = 0;
    std::size_t ghat_samples = 0;
    bool supports_disjoint = false;
};

// Builds g_N for S = S(v, R, eps) and compares int g_N with g_N(0) / m(A).
inline WitnessReport fejer_witness(const CylinderSet& s, long N, const Rational& mass, std::size_t samples = 512)
{
    if (N < 1) {
        throw std::invalid_argument("N must be a positive integer");
    }
    if (mass.sign() <= 0) {
        throw std::invalid_argument("m(A) must be positive");
    }
    const std::size_t dim = s.v.size();
    s.validate(dim);
    const Rational v2 = vec::dot(s.v, s.v);
    // eps < |v|/2, exactly
    if (!(Rational(4) * s.eps * s.eps < v2)) {
        throw std::invalid_argument("need eps < |v|/2 so that the translated bumps are disjoint");
    }
    WitnessReport r;
    r.N = N;
    r.mass = mass;
    r.supports_disjoint = true;
    for (long m = -(N - 1); m < N; ++m) {
        const Rational c = Rational(1) - Rational(m < 0 ? -m : m) / Rational(N);
        r.terms.push_back(WitnessTerm{m * s.R, c});
        r.integral += c;
    }
    const RadialBump bump(dim, s.eps.to_double());
    r.phi_at_origin = bump.phi_at_origin();
    // g_N(0) = sum_n c(n) phi(-n v); phi(-n v) = 0 once |n v| >= eps
    for (const auto& t : r.terms) {
        const Rational d2 = Rational(t.n) * Rational(t.n) * v2;
        if (d2 < s.eps * s.eps) {
            r.g_at_origin += t.coefficient.to_double() * (t.n == 0 ? r.phi_at_origin : 0.0);
        }
    }
    r.rhs = r.g_at_origin / mass.to_double();
    r.violated = Rational(N).to_double() > r.rhs;
    r.threshold = static_cast<long>(std::floor(r.rhs)) + 1;

    // g_N^(xi) = phi^(xi) p_N(-<v, xi>) on a deterministic pattern
    const double vn = std::sqrt(v2.to_double());
    const double box = 4.0 / s.eps.to_double() + 2.0 * s.R / vn;
    const auto pattern = detail::ball_pattern(dim, samples);
    bool first = true;
    for (const auto& h : pattern) {
        std::vector<double> xi(dim);
        double k2 = 0;
        double vx = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            xi[i] = h[i].to_double() * box;
            k2 += xi[i] * xi[i];
            vx += s.v[i].to_double() * xi[i];
        }
        const double val = bump.phi_hat(std::sqrt(k2)) * static_cast<double>(fejer_poly(N, s.R, -vx));
        if (first || val < r.ghat_min) {
            r.ghat_min = val;
            first = false;
        }
        ++r.ghat_samples;
    }
    // and along v, where p_N has its zeros: <v, xi> = t over two periods of p_N
    for (std::size_t j = 0; j <= samples; ++j) {
        const double t = 2.0 * static_cast<double>(j) / (static_cast<double>(samples) * static_cast<double>(s.R));
        const double val = bump.phi_hat(t / vn) * static_cast<double>(fejer_poly(N, s.R, -t));
        r.ghat_min = std::min(r.ghat_min, val);
        ++r.ghat_samples;
    }
    return r;
}

}  // namespace weaktile

#pragma once

// Small RAII wrapper over MPFR with per-object precision (no global
// default precision is touched, so concurrent use is fine).

#include "weaktile/rational.hpp"

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

namespace weaktile {

// Bits needed for the requested number of decimal digits, plus guard bits.
inline mpfr_prec_t bits_for_digits(long digits)
{
    if (digits < 1) {
        digits = 1;
    }
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 32;
}

class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

    BigFloat(const Rational& q, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static BigFloat pi(mpfr_prec_t bits)
    {
        BigFloat r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o)
    {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o)
    {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o)
    {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& o)
    {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    BigFloat operator-() const
    {
        BigFloat r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat sin(const BigFloat& x)
    {
        BigFloat r(x.precision());
        mpfr_sin(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cos(const BigFloat& x)
    {
        BigFloat r(x.precision());
        mpfr_cos(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& x)
    {
        BigFloat r(x.precision());
        mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y)
    {
        BigFloat r(x.precision());
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific notation with the given number of significant digits.
    std::string str(int digits) const
    {
        if (mpfr_zero_p(v_)) {
            return "0";
        }
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits > 1 ? digits - 1 : 0, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

  private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    // e^{i theta}
    static BigComplex expi(const BigFloat& theta)
    {
        BigFloat s(theta.precision());
        BigFloat c(theta.precision());
        mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
        return BigComplex(std::move(c), std::move(s));
    }

    BigComplex& operator+=(const BigComplex& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b)
    {
        return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    BigComplex scaled(const BigFloat& s) const { return BigComplex(re * s, im * s); }
    // multiply by i
    BigComplex times_i() const { return BigComplex(-im, re); }
    BigComplex conj() const { return BigComplex(re, -im); }

    BigFloat abs() const { return hypot(re, im); }
};

}  // namespace weaktile

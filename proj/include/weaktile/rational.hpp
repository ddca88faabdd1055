#pragma once

// Exact rational scalar backed by GMP. Every endpoint, length, weight and
// period in the library is a Rational; floating point only appears in the
// Fourier-analytic parts.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weaktile {

class Rational {
  public:
    Rational() = default;
    Rational(long v) : q_(v) {}                    // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(long long v) : q_(mpz_class(std::to_string(v))) {}  // NOLINT(google-explicit-constructor)
    Rational(unsigned long v) : q_(v) {}           // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& n) : q_(n) {}        // NOLINT(google-explicit-constructor)

    Rational(const mpz_class& num, const mpz_class& den)
    {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "p/q" and exact decimals such as "-1.25" or "3e-2".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }

    double to_double() const { return q_.get_d(); }

    // "p" for integers, "p/q" otherwise.
    std::string str() const
    {
        if (is_integer()) {
            return q_.get_num().get_str();
        }
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o)
    {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) {
            throw std::domain_error("rational division by zero");
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline mpz_class floor_int(const Rational& r)
{
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}

inline mpz_class ceil_int(const Rational& r)
{
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}

// Representative of x modulo period in [0, period).
inline Rational mod_period(const Rational& x, const Rational& period)
{
    if (period.sign() <= 0) {
        throw std::domain_error("period must be positive");
    }
    return x - Rational(floor_int(x / period)) * period;
}

inline Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto trim = [](std::string& t) {
        const auto b = t.find_first_not_of(" \t\n");
        const auto e = t.find_last_not_of(" \t\n");
        t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    auto parse_int = [&](const std::string& t) {
        if (t.empty()) {
            throw std::invalid_argument("malformed rational literal '" + s + "'");
        }
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) {
            throw std::invalid_argument("malformed rational literal '" + s + "'");
        }
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') {
                throw std::invalid_argument("malformed rational literal '" + s + "'");
            }
        }
        return mpz_class(t[0] == '+' ? t.substr(1) : t, 10);
    };

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        trim(num);
        trim(den);
        return Rational(parse_int(num), parse_int(den));
    }

    // exact decimal: mantissa[.fraction][e|E exponent]
    std::string mant = s;
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
        mant = s.substr(0, e);
        exponent = parse_int(s.substr(e + 1)).get_si();
        if (exponent > 10000 || exponent < -10000) {
            throw std::invalid_argument("exponent out of range in '" + s + "'");
        }
    }
    std::string digits = mant;
    if (const auto dot = mant.find('.'); dot != std::string::npos) {
        const std::string frac = mant.substr(dot + 1);
        digits = mant.substr(0, dot) + frac;
        exponent -= static_cast<long>(frac.size());
        if (digits == "-" || digits == "+" || digits.empty()) {
            throw std::invalid_argument("malformed rational literal '" + s + "'");
        }
    }
    mpz_class n = parse_int(digits);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent >= 0 ? Rational(mpz_class(n * scale)) : Rational(n, scale);
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b)
{
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline mpz_class gcd(const mpz_class& a, const mpz_class& b)
{
    mpz_class out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace weaktile

#include "support.hpp"

#include <gtest/gtest.h>

using namespace wt_test;
using weaktile::floor_int;
using weaktile::ceil_int;
using weaktile::mod_period;

TEST(Rational, ParsesFractionsAndDecimalsExactly)
{
    EXPECT_EQ(Q("3/6"), Rational(1, 2));
    EXPECT_EQ(Q("-4/-8"), Rational(1, 2));
    EXPECT_EQ(Q("0.1"), Rational(1, 10));
    EXPECT_EQ(Q("-1.25"), Rational(-5, 4));
    EXPECT_EQ(Q("3e-2"), Rational(3, 100));
    EXPECT_EQ(Q("2.5E1"), Rational(25));
    EXPECT_EQ(Q(" 7 "), Rational(7));
    EXPECT_EQ(Q("+5/3"), Rational(5, 3));
}

TEST(Rational, RejectsMalformedLiterals)
{
    for (const char* bad : {"", "1/", "/2", "a", "1.2.3", "0x10", "1/0", "--1", ".", "1e", "nan", "inf"}) {
        EXPECT_ANY_THROW(Q(bad)) << bad;
    }
}

TEST(Rational, DivisionByZeroThrows)
{
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), std::domain_error);
}

TEST(Rational, CanonicalFormAndPrinting)
{
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_EQ(Rational(-3, 9).denominator(), 3);
}

TEST(Rational, FloorCeilMod)
{
    EXPECT_EQ(floor_int(Q("-1/2")), -1);
    EXPECT_EQ(ceil_int(Q("-1/2")), 0);
    EXPECT_EQ(floor_int(Q("7/2")), 3);
    EXPECT_EQ(ceil_int(Q("3")), 3);
    EXPECT_EQ(mod_period(Q("-1/3"), Q("2")), Q("5/3"));
    EXPECT_EQ(mod_period(Q("4"), Q("2")), Q("0"));
    EXPECT_THROW(mod_period(Q("1"), Q("0")), std::domain_error);
}

TEST(Rational, OrderingIsTotal)
{
    std::vector<Rational> v{Q("1/3"), Q("-2"), Q("1/2"), Q("0.333")};
    std::sort(v.begin(), v.end());
    EXPECT_EQ(v, (std::vector<Rational>{Q("-2"), Q("0.333"), Q("1/3"), Q("1/2")}));
}

TEST(Rational, LargeValuesStayExact)
{
    Rational x(1);
    for (int i = 0; i < 200; ++i) {
        x *= Rational(3, 2);
    }
    for (int i = 0; i < 200; ++i) {
        x /= Rational(3, 2);
    }
    EXPECT_EQ(x, Rational(1));
}

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wt_test;
using weaktile::FrobeniusResult;
using weaktile::LengthSemigroup;
using weaktile::Window;
using weaktile::candidate_support;

namespace {

std::vector<Rational> rs(std::initializer_list<const char*> l)
{
    std::vector<Rational> out;
    for (auto s : l) {
        out.push_back(Q(s));
    }
    return out;
}

}  // namespace

TEST(Semigroup, MemberWithRepresentation)
{
    const LengthSemigroup s(rs({"3", "5"}));
    // exhaustive oracle over p1 <= 8/3, p2 <= 8/5
    std::vector<std::vector<std::int64_t>> reps;
    for (std::int64_t a = 0; a <= 2; ++a) {
        for (std::int64_t b = 0; b <= 1; ++b) {
            if (3 * a + 5 * b == 8) {
                reps.push_back({a, b});
            }
        }
    }
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_EQ(*s.member(Q("8")), reps[0]);
    EXPECT_FALSE(s.member(Q("7")).has_value());
    EXPECT_EQ(*s.member(Q("0")), (std::vector<std::int64_t>{0, 0}));
    EXPECT_THROW(s.member(Q("-3")), std::domain_error);
    EXPECT_FALSE(s.contains(Q("-3")));
    EXPECT_FALSE(s.member(Q("1/2")).has_value());
}

TEST(Semigroup, RepresentationsSumBack)
{
    const LengthSemigroup s(rs({"3/2", "5/3", "7"}));
    for (int k = 0; k <= 120; ++k) {
        const Rational x(k, 6);
        const auto p = s.member(x);
        if (!p) {
            continue;
        }
        Rational sum;
        for (std::size_t i = 0; i < p->size(); ++i) {
            ASSERT_GE((*p)[i], 0);
            sum += Rational(static_cast<long>((*p)[i])) * s.generators()[i];
        }
        EXPECT_EQ(sum, x);
    }
}

TEST(Semigroup, EnumerateMatchesDoubleLoop)
{
    const LengthSemigroup s(rs({"3", "5"}));
    std::set<Rational> oracle;
    for (long a = 0; 3 * a <= 12; ++a) {
        for (long b = 0; 3 * a + 5 * b <= 12; ++b) {
            oracle.insert(Rational(3 * a + 5 * b));
        }
    }
    EXPECT_EQ(s.enumerate(Q("12")), std::vector<Rational>(oracle.begin(), oracle.end()));
    EXPECT_EQ(s.enumerate(Q("12")), rs({"0", "3", "5", "6", "8", "9", "10", "11", "12"}));
}

TEST(Semigroup, EnumerateSmallCases)
{
    EXPECT_EQ(LengthSemigroup(rs({"1"})).enumerate(Q("4")), rs({"0", "1", "2", "3", "4"}));
    EXPECT_EQ(LengthSemigroup(rs({"1/2", "1/3"})).enumerate(Q("1")), rs({"0", "1/3", "1/2", "2/3", "5/6", "1"}));
}

TEST(Semigroup, Frobenius)
{
    const auto f35 = LengthSemigroup(rs({"3", "5"})).frobenius();
    ASSERT_EQ(f35.kind, FrobeniusResult::Kind::Finite);
    EXPECT_EQ(*f35.value, Q("7"));
    // oracle: largest gap below (3-1)(5-1)
    long largest = -1;
    for (long x = 0; x <= 8; ++x) {
        if (!brute_member({3, 5}, x)) {
            largest = x;
        }
    }
    EXPECT_EQ(*f35.value, Rational(largest));

    EXPECT_EQ(LengthSemigroup(rs({"1"})).frobenius().kind, FrobeniusResult::Kind::AllRepresentable);

    const auto f24 = LengthSemigroup(rs({"2", "4"})).frobenius();
    EXPECT_EQ(f24.kind, FrobeniusResult::Kind::Lattice);
    EXPECT_EQ(*f24.step, Q("2"));
    EXPECT_TRUE(LengthSemigroup(rs({"2", "4"})).contains(Q("10")));
    EXPECT_FALSE(LengthSemigroup(rs({"2", "4"})).contains(Q("11")));
}

TEST(Semigroup, RandomMembershipAgreesWithBruteForce)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> g(2, 17);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<long> gens{g(rng), g(rng), g(rng)};
        std::vector<Rational> rg;
        for (long x : gens) {
            rg.emplace_back(x);
        }
        const LengthSemigroup s(rg);
        for (long x = 0; x <= 150; ++x) {
            ASSERT_EQ(s.contains(Rational(x)), brute_member(gens, x)) << x;
        }
        const auto fr = s.frobenius();
        if (fr.kind == FrobeniusResult::Kind::Finite) {
            const long f = fr.value->numerator().get_si();
            EXPECT_FALSE(brute_member(gens, f));
            for (long x = f + 1; x <= f + 20; ++x) {
                EXPECT_TRUE(brute_member(gens, x));
            }
        }
    }
}

TEST(Semigroup, RejectsBadGenerators)
{
    EXPECT_ANY_THROW(LengthSemigroup({}));
    EXPECT_ANY_THROW(LengthSemigroup(rs({"0"})));
    EXPECT_ANY_THROW(LengthSemigroup(rs({"3", "-1"})));
}

TEST(CandidateSupport, Examples)
{
    EXPECT_EQ(candidate_support(omega("0,1;2,3"), Window(Q("-3"), Q("3"))), rs({"-3", "-2", "-1", "1", "2", "3"}));
    EXPECT_EQ(candidate_support(omega("0,1"), Window(Q("1/2"), Q("5/2"))), rs({"1", "2"}));
    EXPECT_EQ(candidate_support(omega("0,3;4,9"), Window(Q("0"), Q("7"))), rs({"3", "5", "6"}));
}

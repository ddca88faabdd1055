#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wt_test;
using weaktile::CoverDeficit;
using weaktile::CoverExcess;
using weaktile::LengthSemigroup;
using weaktile::Piece;
using weaktile::PieceEscapesInterval;
using weaktile::WeightedPieces;
using weaktile::Window;
using weaktile::derivative_identity;
using weaktile::gap_chain;
using weaktile::halfline_scan;
using weaktile::scan_cover;

namespace {

Piece P(const char* l, const char* r, const char* w) { return Piece{Interval(Q(l), Q(r)), Q(w)}; }

WeightedPieces wp(const std::vector<Piece>& ps)
{
    std::vector<Rational> lengths;
    for (const auto& p : ps) {
        lengths.push_back(p.interval.length());
    }
    return WeightedPieces(ps, lengths);
}

std::vector<Rational> ints(long lo, long hi)
{
    std::vector<Rational> out;
    for (long k = lo; k <= hi; ++k) {
        out.emplace_back(k);
    }
    return out;
}

// sum of weights of pieces open-containing x
Rational piece_sum(const WeightedPieces& ps, const Rational& x)
{
    Rational s;
    for (const auto& p : ps.pieces()) {
        if (p.interval.contains_open(x)) {
            s += p.weight;
        }
    }
    return s;
}

}  // namespace

TEST(ScanCover, SinglePiece)
{
    const auto c = scan_cover(Interval(Q("0"), Q("1")), wp({P("0", "1", "1")}));
    EXPECT_EQ(c.breakpoints, ints(0, 1));
    ASSERT_EQ(c.groups.size(), 1u);
    EXPECT_EQ(c.levels, std::vector<Rational>{Q("0")});
}

TEST(ScanCover, HalfWeights)
{
    const auto ps = wp({P("0", "1", "1/2"), P("0", "2", "1/2"), P("1", "2", "1/2")});
    const auto c = scan_cover(Interval(Q("0"), Q("2")), ps);
    EXPECT_EQ(c.breakpoints, ints(0, 2));
    ASSERT_EQ(c.groups.size(), 2u);
    Rational b0;
    for (auto j : c.groups[0]) {
        b0 += ps[j].weight;
    }
    EXPECT_EQ(b0, Q("1"));
    EXPECT_EQ(c.groups[1].size(), 1u);
    EXPECT_EQ(c.levels[1], Q("1/2"));
    for (const auto& x : {Q("1/2"), Q("3/2")}) {
        EXPECT_EQ(piece_sum(ps, x), Q("1"));
    }
}

TEST(ScanCover, Deficit)
{
    try {
        scan_cover(Interval(Q("0"), Q("2")), wp({P("0", "1", "1")}));
        FAIL() << "expected CoverDeficit";
    } catch (const CoverDeficit& e) {
        EXPECT_EQ(e.point, Q("1"));
    }
}

TEST(ScanCover, ExcessAndEscape)
{
    EXPECT_THROW(scan_cover(Interval(Q("0"), Q("1")), wp({P("0", "1", "1"), P("0", "1/2", "1")})), CoverExcess);
    EXPECT_THROW(scan_cover(Interval(Q("0"), Q("1")), wp({P("0", "2", "1")})), PieceEscapesInterval);
}

TEST(HalflineScan, UnitPieces)
{
    std::vector<Piece> ps;
    for (long k = 0; k < 10; ++k) {
        ps.push_back(Piece{Interval(Rational(k), Rational(k + 1)), Q("1")});
    }
    const auto c = halfline_scan(Q("0"), wp(ps), Window(Q("0"), Q("10")));
    EXPECT_EQ(c.breakpoints, ints(0, 10));
}

TEST(HalflineScan, MixedLengths)
{
    const auto ps = WeightedPieces({P("0", "2", "1"), P("2", "3", "1"), P("3", "5", "1"), P("5", "6", "1"),
                                    P("6", "8", "1")},
                                   {Q("1"), Q("2")});
    const auto c = halfline_scan(Q("0"), ps, Window(Q("0"), Q("5")));
    EXPECT_EQ(c.breakpoints, (std::vector<Rational>{Q("0"), Q("2"), Q("3"), Q("5")}));
    const LengthSemigroup s({Q("1"), Q("2")});
    for (const auto& b : c.breakpoints) {
        EXPECT_TRUE(s.contains(b));
    }
}

TEST(HalflineScan, UncoveredStart)
{
    const auto ps = wp({P("1/2", "3/2", "1"), P("3/2", "5/2", "1")});
    try {
        halfline_scan(Q("0"), ps, Window(Q("0"), Q("2")));
        FAIL() << "expected CoverDeficit";
    } catch (const CoverDeficit& e) {
        EXPECT_EQ(e.point, Q("0"));
    }
}

TEST(GapChain, Examples)
{
    const auto two = wp({P("0", "1", "1"), P("1", "2", "1")});
    EXPECT_EQ(gap_chain(Interval(Q("0"), Q("2")), two), (std::vector<std::size_t>{0, 1}));
    const auto half = wp({P("0", "1", "1/2"), P("0", "2", "1/2"), P("1", "2", "1/2")});
    Rational total;
    const auto ch = gap_chain(Interval(Q("0"), Q("2")), half);
    for (std::size_t k = 0; k < ch.size(); ++k) {
        total += half[ch[k]].interval.length();
        if (k > 0) {
            EXPECT_EQ(half[ch[k]].interval.left(), half[ch[k - 1]].interval.right());
        }
    }
    EXPECT_EQ(total, Q("2"));
    EXPECT_EQ(gap_chain(Interval(Q("0"), Q("3")), wp({P("0", "3", "1")})), std::vector<std::size_t>{0});
}

TEST(DerivativeIdentity, Examples)
{
    EXPECT_TRUE(derivative_identity(Interval(Q("0"), Q("2")), wp({P("0", "1", "1"), P("1", "2", "1")})));
    EXPECT_FALSE(derivative_identity(Interval(Q("0"), Q("2")), wp({P("0", "1", "1")})));
}

TEST(ScanCover, RandomLayeredCoversAgreeWithCellSums)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        // two chains of lengths {1, 3/2} with weights 1/2 each over a common interval
        const Rational len = Rational(6);
        std::vector<Piece> ps;
        for (int layer = 0; layer < 2; ++layer) {
            Rational x;
            while (x < len) {
                Rational l = (rng() % 2) ? Q("1") : Q("3/2");
                if (len < x + l) {
                    l = len - x;
                }
                ps.push_back(Piece{Interval(x, x + l), Q("1/2")});
                x += l;
            }
        }
        std::vector<Rational> lengths;
        for (const auto& p : ps) {
            lengths.push_back(p.interval.length());
        }
        const WeightedPieces w(ps, lengths);
        const auto cert = scan_cover(Interval(Q("0"), len), w);
        EXPECT_TRUE(derivative_identity(Interval(Q("0"), len), w));
        const LengthSemigroup s(w.lengths());
        for (const auto& b : cert.breakpoints) {
            EXPECT_TRUE(s.contains(b));
        }
        EXPECT_EQ(cert.breakpoints.back(), len);
    }
}

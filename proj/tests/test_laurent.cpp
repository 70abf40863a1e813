#include <gtest/gtest.h>

#include <random>

#include "knotpos/laurent.hpp"

using namespace knotpos;

namespace {

LaurentPoly1 random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> exp(-6, 6), coeff(-5, 5), len(0, 5);
    LaurentPoly1 p(Var::t, Grid::Half);
    int n = len(rng);
    for (int i = 0; i < n; ++i) p.add_term(2 * exp(rng), coeff(rng));
    return p;
}

LaurentPoly2 random_poly2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> exp(-4, 4), coeff(-3, 3), len(0, 4);
    LaurentPoly2 p;
    int n = len(rng);
    for (int i = 0; i < n; ++i) p.add_term(exp(rng), exp(rng), coeff(rng));
    return p;
}

LaurentPoly1 t(const std::string& s) { return parse_poly1(s, Var::t); }

} // namespace

TEST(Laurent, RingAxiomsOneVariable) {
    std::mt19937_64 rng(7);
    LaurentPoly1 zero(Var::t, Grid::Half);
    LaurentPoly1 one = LaurentPoly1::constant(Var::t, 1, Grid::Half);
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + zero, a);
        EXPECT_EQ(a * one, a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(-(-a), a);
        EXPECT_EQ(a.pow(3), a * a * a);
    }
}

TEST(Laurent, RingAxiomsTwoVariable) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly2(rng), b = random_poly2(rng), c = random_poly2(rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Laurent, ExactDivision) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        auto a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        EXPECT_EQ((a * b).divide_exact(b), a);
    }
    EXPECT_THROW(t("t + 1").divide_exact(t("t - 1")), std::domain_error);
}

TEST(Laurent, TextRoundTrip) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto a = random_poly(rng);
        EXPECT_EQ(parse_poly1(a.str(), Var::t), a) << a.str();
        auto b = random_poly2(rng);
        EXPECT_EQ(parse_poly2(b.str()), b) << b.str();
    }
    EXPECT_EQ(t("t^3 - t^4 + 2t^5").coeff(20), 2);
    EXPECT_EQ(t("t^(1/2) + t^(-1/2)").grid(), Grid::Half);
}

TEST(Laurent, ParseRejectsGarbage) {
    EXPECT_ANY_THROW(parse_poly1("t^", Var::t));
    EXPECT_ANY_THROW(parse_poly1("x + 1", Var::t));
    EXPECT_ANY_THROW(parse_poly2("a^(1/2)"));
}

TEST(Laurent, GridIsEnforced) {
    LaurentPoly1 p(Var::z, Grid::Whole);
    EXPECT_THROW(p.add_term(2, 1), GridError);
}

TEST(Laurent, DegreeInfo) {
    DegreeInfo d = t("t - 3t^2 + 5t^7").degree_info();
    EXPECT_EQ(d.min_deg, Rational::of(1, 1));
    EXPECT_EQ(d.max_deg, Rational::of(7, 1));
    EXPECT_EQ(d.min_coeff, 1);
    EXPECT_EQ(d.second_coeff, -3);
    EXPECT_EQ(d.lead_coeff, 5);
    DegreeInfo h = t("t^(1/2) + t^(5/2)").degree_info();
    EXPECT_EQ(h.min_deg, Rational::of(1, 2));
    EXPECT_EQ(h.second_coeff, 0);
    EXPECT_THROW(LaurentPoly1(Var::t).degree_info(), DegreeError);
}

TEST(Laurent, RationalArithmetic) {
    EXPECT_EQ(Rational::of(2, 4), Rational::of(1, 2));
    EXPECT_EQ(Rational::of(1, -2), Rational::of(-1, 2));
    EXPECT_EQ(Rational::of(1, 2) + Rational::of(3, 2), Rational::of(2, 1));
    EXPECT_EQ(Rational::of(3, 2) * 4, Rational::of(6, 1));
    EXPECT_LT(Rational::of(7, 2), Rational::of(4, 1));
    EXPECT_EQ(Rational::of(-3, 2).str(), "-3/2");
}

TEST(Laurent, SpecializeTrefoilHomfly) {
    LaurentPoly2 p = parse_poly2("2a^-2 - a^-4 + a^-2 z^2");
    EXPECT_EQ(specialize(p, Target::conway), parse_poly1("1 + z^2", Var::z));
    EXPECT_EQ(specialize(p, Target::jones), t("t + t^3 - t^4"));
}

TEST(Laurent, SpecializeUnlinkFactor) {
    // (a - a^-1)/z -> -(t^(1/2) + t^(-1/2))
    LaurentPoly2 delta = parse_poly2("a z^-1 - a^-1 z^-1");
    EXPECT_EQ(specialize(delta, Target::jones), t("-t^(1/2) - t^(-1/2)"));
    EXPECT_TRUE(specialize(delta, Target::conway).is_zero());
}

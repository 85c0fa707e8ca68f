#include <gtest/gtest.h>

#include "mahler/laurent.hpp"
#include "mahler/parse.hpp"
#include "mahler/rational.hpp"
#include "mahler/roots.hpp"

using namespace mahler;

TEST(Rational, NormalizesAndCompares) {
    Rational a(6, -4);
    EXPECT_EQ(a.num(), -3);
    EXPECT_EQ(a.den(), 2);
    EXPECT_EQ(a + Rational(3, 2), Rational(0));
    EXPECT_EQ(a.to_string(), "-3/2");
    EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, Binomial) {
    EXPECT_EQ(binomial(Rational(10), 5), Rational(252));
    EXPECT_EQ(binomial(Rational(1, 2), 2), Rational(-1, 8));
}

TEST(Parse, GrammarVariants) {
    auto p = parse_poly("x + 1/x + y + y^-1 + 5");
    EXPECT_EQ(p.nvars(), 2);
    EXPECT_EQ(p.size(), 5u);
    auto q = parse_poly("(1-x)^2");
    EXPECT_EQ(q.constant_term_power(1).re_exact(), Rational(1));
    auto c = parse_poly("0.3+0.4i*x");
    EXPECT_DOUBLE_EQ(c.coefficient({1}).value().imag(), 0.4);
    auto d = parse_poly("x/y");
    EXPECT_EQ(d.coefficient({1, -1}).re_exact(), Rational(1));
}

TEST(Parse, RejectsMalformed) {
    EXPECT_THROW(parse_poly("1+"), ParseError);
    EXPECT_THROW(parse_poly("x^"), ParseError);
    EXPECT_THROW(parse_poly("(1+x"), ParseError);
    EXPECT_THROW(parse_poly("1 $ x"), ParseError);
}

TEST(Laurent, ConstantTermPowerMatchesMoments) {
    // CT(|1-x|^{2k}) = C(2k,k)
    auto p = parse_poly("1-x");
    auto pp = p * p.conjugate_reciprocal();
    EXPECT_EQ(pp.constant_term_power(2).re_exact(), Rational(6));
    EXPECT_EQ(pp.constant_term_power(3).re_exact(), Rational(20));
    auto box = parse_poly("x+1/x+y+1/y+5");
    EXPECT_EQ(box.constant_term_power(2).re_exact(), Rational(29));
    EXPECT_EQ(box.constant_term_power(4).re_exact(), Rational(1261));
}

TEST(Laurent, ConjugateReciprocalOnTorus) {
    auto p = parse_poly("2+0.5i*x+y^2/x");
    auto q = p.conjugate_reciprocal();
    std::vector<cplx> pt{std::polar(1.0, 0.7), std::polar(1.0, -2.1)};
    EXPECT_NEAR(std::abs(q.eval(pt) - std::conj(p.eval(pt))), 0.0, 1e-14);
}

TEST(Roots, FactorsAndReconstructs) {
    auto p = parse_poly("2 - 3*x + x^3");
    auto f = factor_one_var(p);
    ASSERT_EQ(f.roots.size(), 3u);
    auto c = expand_factorization(f);
    EXPECT_NEAR(std::abs(c[0] - cplx(2.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(c[1] - cplx(-3.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(c[3] - cplx(1.0)), 0.0, 1e-12);
    // double root at x = 1 sits on the circle
    EXPECT_EQ(std::count(f.on_torus.begin(), f.on_torus.end(), true), 2);
}

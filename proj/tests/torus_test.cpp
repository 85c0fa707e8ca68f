#include <gtest/gtest.h>

#include <numbers>

#include "mahler/parse.hpp"
#include "mahler/quadrature.hpp"
#include "mahler/specfun.hpp"
#include "mahler/torus.hpp"

using namespace mahler;
using std::numbers::pi;

TEST(Adaptive, LogSingularityAtEndpoint) {
    auto r = integrate_adaptive<double>([](double x) { return std::log(x); }, 0.0, 1.0, {},
                                        AdaptiveOptions{1e-12, 1e-14, 2000, 2});
    EXPECT_NEAR(r.value, -1.0, 1e-11);
}

TEST(Adaptive, NegativeInterval) {
    auto r = integrate_adaptive<double>([](double x) { return std::log(std::abs(x)); }, -1.0, 0.0, {},
                                        AdaptiveOptions{1e-12, 1e-14, 2000, 2});
    EXPECT_NEAR(r.value, -1.0, 1e-11);
}

TEST(Torus, ClassicalMeasures) {
    EXPECT_NEAR(mm_numeric(parse_poly("1-x"), 1).value, 0.0, 1e-11);
    EXPECT_NEAR(mm_numeric(parse_poly("2+x"), 1).value, std::log(2.0), 1e-11);
    EXPECT_NEAR(mm_numeric(parse_poly("1+x+y"), 1).value,
                3.0 * std::sqrt(3.0) / (4.0 * pi) * dirichlet_L(Character::ChiMinus3, 2.0), 1e-8);
}

TEST(Torus, HigherMeasuresOfOneMinusX) {
    auto m2 = mm_numeric(parse_poly("1-x"), 2);
    EXPECT_TRUE(m2.converged);
    EXPECT_NEAR(m2.value, pi * pi / 12, 1e-9);
    auto m3 = mm_numeric(parse_poly("1-x"), 3);
    EXPECT_NEAR(m3.value, -1.5 * riemann_zeta(3), 1e-8);
}

TEST(Torus, ZetaMeasureMatchesGammaRatio) {
    auto z = zeta_mm_numeric(parse_poly("1-x"), 1.5);
    EXPECT_NEAR(z.value, 1.5737874653547949681, 1e-9);
    EXPECT_NEAR(zeta_mm_numeric(parse_poly("x+y+3"), 1.5).value, 5.8493044136098626141, 1e-6);
}

TEST(Torus, MultipleMeasure) {
    auto r = multiple_mm_numeric({parse_poly("1-x"), parse_poly("1+x")});
    EXPECT_NEAR(r.value, -pi * pi / 24, 1e-8);
}

TEST(Torus, DomainErrors) {
    EXPECT_THROW(mm_numeric(parse_poly("1-x"), -1), DomainError);
    EXPECT_THROW(zeta_mm_numeric(parse_poly("1-x"), -1.5), DomainError);
    EXPECT_THROW(mm_numeric(parse_poly("0"), 1), DomainError);
}

#include <gtest/gtest.h>

#include <numbers>

#include "mahler/hypergeometric.hpp"
#include "mahler/mpolylog.hpp"
#include "mahler/mzv.hpp"
#include "mahler/specfun.hpp"

using namespace mahler;
using std::numbers::pi;

// Reference values from mpmath at 30 digits.
TEST(Specfun, Zeta) {
    EXPECT_NEAR(riemann_zeta(3), 1.2020569031595942854, 1e-15);
    EXPECT_NEAR(riemann_zeta(5), 1.0369277551433699263, 1e-15);
    EXPECT_NEAR(riemann_zeta(2.0), pi * pi / 6, 1e-15);
    EXPECT_NEAR(hurwitz_zeta(2.0, 0.25), 17.197329154507110739, 1e-12);
}

TEST(Specfun, Polylog) {
    EXPECT_NEAR(dilog(0.5), 0.58224052646501250590, 1e-15);
    EXPECT_NEAR(polylog(3, -1.0), -0.90154267736969571405, 1e-15);
    cplx v = dilog(cplx(0.0, 1.0));
    EXPECT_NEAR(v.real(), -0.20561675835602830456, 1e-15);
    EXPECT_NEAR(v.imag(), 0.91596559417721901505, 1e-15);
}

TEST(Specfun, PolylogLogSeriesBranch) {
    EXPECT_NEAR(polylog(3, 0.9), 1.0496589501864399017, 1e-14);
    cplx a = polylog(4, std::polar(1.0, 1.0));
    EXPECT_NEAR(a.real(), 0.50082225475284107649, 1e-14);
    EXPECT_NEAR(a.imag(), 0.89580523867937996258, 1e-14);
    cplx b = polylog(5, cplx(-0.7, 0.6));
    EXPECT_NEAR(b.real(), -0.69475018350483042759, 1e-14);
    EXPECT_NEAR(b.imag(), 0.57624060622836737295, 1e-14);
}

TEST(Specfun, DirichletL) {
    EXPECT_NEAR(dirichlet_L(Character::ChiMinus4, 2.0), 0.91596559417721901505, 1e-14);
    EXPECT_NEAR(dirichlet_L(Character::ChiMinus3, 2.0), 0.78130241289648629687, 1e-14);
}

TEST(Specfun, GammaAndDigamma) {
    EXPECT_NEAR(std::exp(log_gamma(2.5)), 0.75 * std::sqrt(pi), 1e-14);
    EXPECT_NEAR(digamma(1.0), -0.57721566490153286061, 1e-14);
}

TEST(Mzv, DepthTwo) {
    EXPECT_NEAR(mzv({1, 2}), riemann_zeta(3), 1e-13);
    EXPECT_NEAR(mzv({2, 2}), std::pow(pi, 4) / 120, 1e-12);
    EXPECT_THROW(mzv({2, 1}), DomainError);
}

TEST(Mzv, TruncatedAgreesWithIntegral) {
    auto t = mzv_truncated_adaptive(MZVIndex({1, 3}), 1e-9);
    EXPECT_NEAR(t.value, mzv({1, 3}), 1e-8);
}

TEST(MultiplePolylog, ReducesToMzvAtOne) {
    cplx v = multiple_polylog({1, 2}, {1.0, 1.0});
    EXPECT_NEAR(v.real(), riemann_zeta(3), 1e-12);
    EXPECT_NEAR(v.imag(), 0.0, 1e-14);
}

TEST(MultiplePolylog, ConditionalNeedsFlag) {
    EXPECT_THROW(multiple_polylog({2, 1}, {1.0, -1.0}), DomainError);
    EXPECT_THROW(multiple_polylog({2, 1}, {1.0, 1.0}, true), DomainError);
    auto abel = multiple_polylog_abel(PolylogSpec{{2, 1}, {1.0, -1.0}, true});
    cplx direct = multiple_polylog({2, 1}, {1.0, -1.0}, true);
    EXPECT_NEAR(std::abs(abel.value - direct), 0.0, 1e-7);
}

TEST(Hypergeometric, ConvergentAndTerminating) {
    EXPECT_NEAR(hyp_pFq<double>({1, 1, 1}, {2, 2}, 0.5), 1.1644810529300250118, 1e-14);
    EXPECT_EQ(hyp_pFq<Rational>({Rational(-2), Rational(3)}, {Rational(1)}, Rational(1)), Rational(1 - 6 + 6));
    EXPECT_THROW(hyp_pFq<double>({1, 1, 1}, {2, 2}, 1.5), DomainError);
    EXPECT_THROW(hyp_pFq<double>({1}, {-2}, 0.5), DomainError);
}

TEST(Hypergeometric, CentralBinomialDilog) {
    EXPECT_NEAR(central_binom_dilog(0.2), central_binom_series(0.2, 400), 1e-13);
    EXPECT_THROW(central_binom_dilog(0.3), DomainError);
}

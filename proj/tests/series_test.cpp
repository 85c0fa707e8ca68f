#include <gtest/gtest.h>

#include <numbers>

#include "mahler/series.hpp"
#include "mahler/specfun.hpp"

using namespace mahler;

TEST(TruncatedSeries, ExpLogRoundTrip) {
    TruncatedSeries a(8, {0.0, 0.5, -0.25, 0.125, 0.3});
    auto b = log_series(exp_series(a));
    for (int k = 0; k <= 8; ++k) EXPECT_NEAR(b[k], a[k], 1e-14) << k;
}

TEST(TruncatedSeries, ExpOfLinearIsExponential) {
    TruncatedSeries a(10, {0.0, 1.0});
    auto e = exp_series(a);
    double f = 1.0;
    for (int k = 0; k <= 10; ++k) {
        if (k > 0) f *= k;
        EXPECT_NEAR(e[k], 1.0 / f, 1e-15);
    }
    auto m = mk_from_Z(e);
    for (double v : m) EXPECT_NEAR(v, 1.0, 1e-13);
}

TEST(BivariateSeries, ExpFactorizes) {
    BivariateSeries a(6);
    a.coeff(1, 0) = 1.0;
    a.coeff(0, 1) = 2.0;
    auto e = exp_series(a);
    // exp(s + 2t): coefficient of s^i t^j is 2^j / (i! j!)
    EXPECT_NEAR(e.coeff(2, 1), 2.0 / 2.0, 1e-14);
    EXPECT_NEAR(e.coeff(1, 3), 8.0 / 6.0, 1e-14);
    EXPECT_THROW(e.coeff(5, 5), DomainError);
}

TEST(BinomialBasis, SmallLambdaSeries) {
    // CT((1-x)^k) = 1 for every k
    std::vector<double> zk(61, 1.0);
    auto r = binomial_basis_to_mm(zk, 0.1, 60, 2, 2.0);
    // 1 + 0.1(1-x) = 1.1 (1 - x/11): measure log 1.1
    EXPECT_NEAR(r.m1, std::log(1.1), 1e-12);
    EXPECT_THROW(binomial_basis_to_mm(zk, 0.6, 60, 2, 2.0), DomainError);
}

TEST(BinomialBasis, SecondMeasureLeadingTerm) {
    // CT(P^k) = C(2k,k) for P = 2 - x/y - y/x, so m_2(1 + lambda P) = 6 lambda^2 + O(lambda^3)
    std::vector<double> zk(31, 1.0);
    for (int k = 1; k <= 30; ++k) zk[static_cast<std::size_t>(k)] = zk[static_cast<std::size_t>(k - 1)] * (4.0 - 2.0 / k);
    const double lambda = 1e-3;
    auto r = binomial_basis_to_mm(zk, lambda, 30, 2, 4.0);
    EXPECT_NEAR(r.m2 / (lambda * lambda), 6.0, 0.05);
}

TEST(Harmonic, Values) {
    EXPECT_DOUBLE_EQ(harmonic(0), 0.0);
    EXPECT_NEAR(harmonic(4), 25.0 / 12.0, 1e-15);
    EXPECT_THROW(harmonic(-1), DomainError);
}

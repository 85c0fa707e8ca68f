#include <gtest/gtest.h>

#include <numbers>

#include "mahler/closed_forms.hpp"
#include "mahler/parse.hpp"

using namespace mahler;
using std::numbers::pi;

TEST(MkOneMinusX, RoutesAgree) {
    EXPECT_NEAR(mk_one_minus_x(2, MkMethod::MzvSum), pi * pi / 12, 1e-13);
    for (int k = 2; k <= 8; ++k)
        EXPECT_NEAR(mk_one_minus_x(k, MkMethod::MzvSum), mk_one_minus_x(k, MkMethod::ExpSeries),
                    1e-10 * std::max(1.0, std::abs(mk_one_minus_x(k, MkMethod::ExpSeries))))
            << k;
    EXPECT_NEAR(mk_one_minus_x(6, MkMethod::ExpSeries), 229.22398659063, 1e-9);
}

TEST(SymmetrizedMzv, SmallCases) {
    // zeta(2,3) + zeta(3,2) = zeta(2) zeta(3) - zeta(5)
    EXPECT_NEAR(symmetrized_mzv({2, 3}), riemann_zeta(2) * riemann_zeta(3) - riemann_zeta(5), 1e-12);
    EXPECT_THROW(symmetrized_mzv({}), DomainError);
}

TEST(OneVariable, LinearPair) {
    EXPECT_NEAR(mm_pair_linear(0.0), pi * pi / 12, 1e-14);
    EXPECT_NEAR(mm_pair_linear(0.5), -pi * pi / 24, 1e-14);
    EXPECT_NEAR(m2_one_var(parse_poly("1-x")), pi * pi / 12, 1e-12);
    EXPECT_NEAR(dilog_pair(cplx(1.0), cplx(-1.0)), -pi * pi / 24, 1e-12);
}

TEST(OneVariable, TripleLinearConverges) {
    auto r = mm_triple_linear(0.0, 0.5, 200000);
    EXPECT_NEAR(r.value, riemann_zeta(3) / 4, 1e-4);
    EXPECT_GT(r.tail_bound, 0.0);
}

TEST(ZetaMeasures, XMinusOne) {
    EXPECT_NEAR(Z_x_minus_1(1.5), 1.5737874653547949681, 1e-13);
    EXPECT_EQ(Z_x_minus_1_exact(4), Rational(6));
    EXPECT_NEAR(Z_pair(2.0, 0.0), 2.0, 1e-14);
    EXPECT_NEAR(sin_cos_log_moments(1, 1), -pi * pi / 24, 1e-12);
}

TEST(ZetaMeasures, FourCycle) {
    EXPECT_NEAR(Z_4cycle(2.5, 6.0).value, 106.45301370042251878, 1e-9);
    EXPECT_NEAR(Z_4cycle(2.5, 6.0, SeriesForm::Hypergeometric).value, 106.45301370042251878, 1e-9);
    EXPECT_EQ(Z_4cycle_exact(2, Rational(5)), Rational(29));
    EXPECT_EQ(Z_4cycle_exact(4, Rational(5)), Rational(1261));
    EXPECT_EQ(Z_4cycle_exact(4, Rational(10)), Rational(12436));
    EXPECT_THROW(Z_4cycle(1.0, 3.0), DomainError);
}

TEST(ZetaMeasures, XPlusYPlusC) {
    EXPECT_NEAR(Z_x_y_c(1.5, 3.0).value, 5.8493044136098626141, 1e-10);
    EXPECT_EQ(Z_x_y_c_exact(2, Rational(2)), Rational(6));
    EXPECT_NEAR(m2_x_y_c(2.0).value, riemann_zeta(2) / 2, 1e-9);
    EXPECT_NEAR(m2_x_y_c(2.0, SumMethod::Series).value, riemann_zeta(2) / 2, 1e-9);
    const double l2 = std::log(2.0);
    EXPECT_NEAR(m3_x_y_c(2.0).value, 4.5 * l2 * riemann_zeta(2) - 3.75 * riemann_zeta(3), 1e-8);
}

TEST(ZetaMeasures, DoubleSeriesI) {
    EXPECT_NEAR(I_double_series(IMode::ClosedForm).value, 0.28074656729470755893, 1e-13);
    EXPECT_NEAR(I_double_series(IMode::DirectSum).value, 0.28074656729470755893, 1e-8);
    EXPECT_NEAR(I_from_multiple_polylogs(), 0.28074656729470755893, 1e-11);
}

TEST(Dyson, ExactMoments) {
    EXPECT_EQ(dyson_Z(2, 3), Rational(20));
    EXPECT_EQ(dyson_Z(3, 1), Rational(6));
    EXPECT_EQ(dyson_Z(3, 2), Rational(90));
    EXPECT_NEAR(dyson_hyp(2.0, 0.1, 2, 60).value, 1.0 + 2 * 2 * 0.1 + 6 * 0.01, 1e-14);
}

TEST(PublishedValues, Discrepancies) {
    // true m2(x+y+1) from a log-sine integral; the published 5 pi^2/54 differs
    EXPECT_NEAR(paper_constant("m2-x-plus-y-plus-1"), 5 * pi * pi / 54, 1e-15);
    EXPECT_NEAR(m2_x_plus_y_plus_1_polylog(), 5 * pi * pi / 54, 1e-10);
    EXPECT_NEAR(m2_x_plus_y_plus_1_s_form().value, 5 * pi * pi / 54, 1e-8);
    EXPECT_NEAR(m2_smyth2_corrected(), 0.51789472216669836, 1e-10);
    EXPECT_NEAR(m2_smyth2_reduced().value, 0.51789472216669836, 1e-8);
}

TEST(Named, Dispatch) {
    NamedArgs a;
    a.N = 2;
    a.k = 3;
    auto r = evaluate_named("dyson_z", a);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(*r.exact, "20");
    EXPECT_THROW(evaluate_named("nope", a), DomainError);
    EXPECT_THROW(evaluate_named("z-4cycle", a), DomainError);
    for (auto n : named_formulas()) EXPECT_NE(find_catalogue_entry(n), nullptr) << n;
}

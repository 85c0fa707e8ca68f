#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "closed_forms.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "mpolylog.hpp"
#include "mzv.hpp"
#include "parse.hpp"
#include "series.hpp"
#include "specfun.hpp"
#include "torus.hpp"

namespace mahler {

enum class CheckStatus { Pass, Fail, Skip };

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "fail";
}

struct IdentityCheck {
    std::string name;
    double lhs = std::numeric_limits<double>::quiet_NaN();
    double rhs = std::numeric_limits<double>::quiet_NaN();
    double abs_err = std::numeric_limits<double>::quiet_NaN();
    double tol = 0.0;
    CheckStatus status = CheckStatus::Fail;
    std::string paper_ref;
    long runtime_ms = 0;
    std::string note;
    int criterion = 0;  // acceptance criterion this check belongs to; 0 for supporting checks
};

struct VerifyConfig {
    QuadratureConfig quad;
    int order = 60;       // truncation order for the binomial-basis and hypergeometric series
    bool timing = false;  // record wall-clock runtime per check
};

struct Report {
    std::string suite;
    VerifyConfig config;
    std::vector<IdentityCheck> checks;
    int pass = 0;
    int fail = 0;
    int skip = 0;
};

enum Suite : unsigned {
    Quick = 1u << 0,
    Mzv = 1u << 1,
    OneVar = 1u << 2,
    TwoVar = 1u << 3,
    Zeta = 1u << 4,
    Dyson = 1u << 5,
    All = 0xffu,
};

inline const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names{"quick", "mzv", "one-var", "two-var", "zeta", "dyson", "all"};
    return names;
}

inline std::optional<unsigned> suite_mask(std::string_view name) {
    if (name == "quick") return Quick;
    if (name == "mzv") return Mzv;
    if (name == "one-var") return OneVar;
    if (name == "two-var") return TwoVar;
    if (name == "zeta") return Zeta;
    if (name == "dyson") return Dyson;
    if (name == "all") return All;
    return std::nullopt;
}

namespace detail {

// Per-class tolerances.
inline constexpr double tol_closed = 1e-10;
inline constexpr double tol_quad_1d = 1e-7;
inline constexpr double tol_reduced_2d = 1e-6;
inline constexpr double tol_raw_2d = 1e-3;
inline constexpr double tol_exact = 0.0;

struct Outcome {
    double lhs;
    double rhs;
    std::optional<double> tol;  // overrides the declared tolerance when the bound is data-dependent
    std::string note;
    bool skipped = false;
};

struct CheckSpec {
    std::string name;
    std::string paper_ref;
    unsigned suites;
    int criterion;
    double tol;
    std::function<Outcome()> run;
};

inline std::string fmt(double v, int digits = 17) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

inline std::string label(double v) { return fmt(v, 12); }

inline LaurentPolynomial linear_unit(double alpha) {
    // 1 - e^{2 pi i alpha} x
    return LaurentPolynomial::constant(1, Coefficient(1)) -
           LaurentPolynomial::monomial(1, {1}, Coefficient(LaurentPolynomial::unit(alpha)));
}

inline double rational_value(const Coefficient& c) {
    if (!c.is_exact() || !c.im_exact().is_zero()) throw DomainError("expected an exact rational constant term");
    return c.re_exact().to_double();
}

// CT(|P|^{2k}) as an exact rational.
inline Rational exact_even_moment(const LaurentPolynomial& P, unsigned k) {
    Coefficient c = (P * P.conjugate_reciprocal()).constant_term_power(k);
    if (!c.is_exact() || !c.im_exact().is_zero()) throw DomainError("constant term is not an exact rational");
    return c.re_exact();
}

inline Outcome exact_match(const Rational& a, const Rational& b) {
    return {a.to_double(), b.to_double(), std::nullopt, a == b ? "" : a.to_string() + " vs " + b.to_string()};
}

inline double log_sine_3(double theta) {
    auto f = [](double t) {
        double l = std::log(2.0 * std::sin(t / 2.0));
        return l * l;
    };
    AdaptiveOptions o;
    o.abs_tol = 1e-14;
    o.rel_tol = 1e-14;
    auto r = integrate_adaptive<double>(f, 0.0, theta, std::span<const double>{}, o);
    return -r.value;
}

struct TableIdentity {
    std::string label;
    std::vector<int> s;
    std::vector<cplx> z;
    double rhs;
    bool imaginary = false;  // compare the imaginary part of lhs (a difference of two polylogs)
    std::vector<int> s2{};
    std::vector<cplx> z2{};
};

inline std::vector<TableIdentity> mpolylog_table() {
    const double l1 = -std::log(2.0), l2 = riemann_zeta(2), l3 = riemann_zeta(3);
    const double pi = std::numbers::pi;
    const cplx w(0.5, std::sqrt(3.0) / 2.0), wb = std::conj(w);
    std::vector<TableIdentity> t{
        {"Li_{1,1}(-1,-1)", {1, 1}, {-1.0, -1.0}, 0.5 * (l1 * l1 - l2)},
        {"Li_{2,1}(1,-1)", {2, 1}, {1.0, -1.0}, -0.25 * (2 * l2 * l1 + l3)},
        {"Li_{1,2}(-1,1)", {1, 2}, {-1.0, 1.0}, 0.5 * (3 * l2 * l1 + 2 * l3)},
        {"Li_{1,1}(1,-1)", {1, 1}, {1.0, -1.0}, l1 * l1 / 2.0},
        {"Li_{2,1}(-1,-1)", {2, 1}, {-1.0, -1.0}, (8 * l2 * l1 + 5 * l3) / 8.0},
        {"Li_{1,2}(1,1)", {1, 2}, {1.0, 1.0}, l3},
        {"Li_{1,2}(-1,-1)", {1, 2}, {-1.0, -1.0}, (-12 * l2 * l1 - 13 * l3) / 8.0},
        {"Li_{1,2}(1,-1)", {1, 2}, {1.0, -1.0}, l3 / 8.0},
        {"Li_{1,1,1}(1,1,-1)", {1, 1, 1}, {1.0, 1.0, -1.0}, l1 * l1 * l1 / 6.0},
    };
    // Length-3 reductions whose right sides involve length-2 values; those are evaluated
    // from the classical forms above.
    const double L11mm = 0.5 * (l1 * l1 - l2), L21pm = -0.25 * (2 * l2 * l1 + l3), L12mp = 0.5 * (3 * l2 * l1 + 2 * l3);
    const double L11pm = l1 * l1 / 2.0, L21mm = (8 * l2 * l1 + 5 * l3) / 8.0;
    t.push_back({"Li_{1,1,1}(-1,-1,-1)", {1, 1, 1}, {-1.0, -1.0, -1.0}, (l1 * L11mm - L21pm - L12mp) / 3.0});
    t.push_back({"Li_{1,1,1}(1,-1,-1)", {1, 1, 1}, {1.0, -1.0, -1.0},
                 (6 * l1 * L11pm - 2 * l1 * L11mm - L21pm - L12mp - 6 * L21mm - 6 * l3) / 12.0});
    t.push_back({"Li_{1,1,1}(-1,1,-1)", {1, 1, 1}, {-1.0, 1.0, -1.0}, (2 * l1 * L11mm + L21pm + L12mp) / 6.0});
    t.push_back({"Li_{2,1}(wb,w) - Li_{2,1}(w,wb)", {2, 1}, {wb, w}, 7 * pi * pi * pi / 162.0, true, {2, 1}, {w, wb}});
    t.push_back({"Li_{1,1,1}(1,wb,w) - Li_{1,1,1}(1,w,wb)", {1, 1, 1}, {1.0, wb, w}, 5 * pi * pi * pi / 81.0, true,
                 {1, 1, 1}, {1.0, w, wb}});
    return t;
}

inline double table_lhs(const TableIdentity& t, PolylogConvention conv) {
    cplx v = multiple_polylog(t.s, t.z, true, conv);
    if (t.imaginary) return (v - multiple_polylog(t.s2, t.z2, true, conv)).imag();
    return v.real();
}

inline std::vector<CheckSpec> build_checks(const VerifyConfig& vc) {
    const QuadratureConfig& q = vc.quad;
    const double pi = std::numbers::pi;
    const double z2 = riemann_zeta(2), z3 = riemann_zeta(3), z4 = riemann_zeta(4), z6 = riemann_zeta(6);
    std::vector<CheckSpec> c;
    auto add = [&](std::string name, std::string ref, unsigned suites, int crit, double tol, std::function<Outcome()> f) {
        c.push_back({std::move(name), std::move(ref), suites, crit, tol, std::move(f)});
    };

    // m_k(1-x)
    add("m2(1-x) quadrature vs pi^2/12", "mk-one-minus-x", Quick | OneVar, 1, 1e-8, [q, pi] {
        auto r = mm_numeric(parse_poly("1-x"), 2, q);
        return Outcome{r.value, pi * pi / 12.0, std::nullopt, r.converged ? "" : "quadrature not converged"};
    });
    for (int k = 2; k <= 8; ++k)
        add("m" + std::to_string(k) + "(1-x) mzv-sum vs exp-series", "mk-one-minus-x", Quick | Mzv, 2, tol_closed, [k] {
            return Outcome{mk_one_minus_x(k, MkMethod::MzvSum), mk_one_minus_x(k, MkMethod::ExpSeries), {}, ""};
        });
    add("m6(1-x) vs (930z6+180z3^2+315z2z4+15z2^3)/8", "mk-one-minus-x", Quick | Mzv, 2, tol_closed, [=] {
        return Outcome{mk_one_minus_x(6, MkMethod::MzvSum), (930 * z6 + 180 * z3 * z3 + 315 * z2 * z4 + 15 * z2 * z2 * z2) / 8.0,
                       {}, ""};
    });
    for (int k : {3, 4})
        add("m" + std::to_string(k) + "(1-x) quadrature vs mzv-sum", "mk-one-minus-x", OneVar, 0, tol_quad_1d, [k, q] {
            return Outcome{mm_numeric(parse_poly("1-x"), k, q).value, mk_one_minus_x(k, MkMethod::MzvSum), {}, ""};
        });
    for (int k = 2; k <= 8; ++k)
        add("Ohno-Zagier coefficient x^" + std::to_string(k), "ohno-zagier-series", Mzv, 0, tol_closed, [k] {
            CompensatedSum<double> s;
            for (const auto& b : compositions_at_least_two(k)) s.add(std::ldexp(1.0, -2 * static_cast<int>(b.size())) * mzv(b));
            return Outcome{ohno_zagier_series(8)[k], s.value(), {}, ""};
        });

    // MZV engine
    add("zeta(2,2) vs pi^4/120", "symmetrized-mzv", Quick | Mzv, 11, tol_closed,
        [pi] { return Outcome{mzv({2, 2}), std::pow(pi, 4) / 120.0, {}, ""}; });
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b) {
            if (a + b > 8) continue;
            add("stuffle zeta(" + std::to_string(a) + ")zeta(" + std::to_string(b) + ")", "mzv-stuffle", Mzv, 11, 1e-9, [a, b] {
                return Outcome{mzv({a, b}) + mzv({b, a}) + mzv({a + b}), riemann_zeta(a) * riemann_zeta(b), {}, ""};
            });
        }
    for (int w = 6; w <= 9; ++w)
        for (const auto& b : compositions_at_least_two(w)) {
            if (b.size() != 3 || !std::is_sorted(b.begin(), b.end())) continue;
            std::string label = std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]);
            add("permutation sum zeta(" + label + ")", "symmetrized-mzv", Mzv, 11, 1e-9, [b] {
                std::vector<int> p = b;
                CompensatedSum<double> s;
                do s.add(mzv(p));
                while (std::next_permutation(p.begin(), p.end()));
                // repeated entries: every distinct ordering stands for (multiplicities)! permutations
                double mult = 1.0;
                for (std::size_t i = 0; i < p.size();) {
                    std::size_t j = i;
                    while (j < p.size() && p[j] == p[i]) ++j;
                    for (std::size_t f = 2; f <= j - i; ++f) mult *= static_cast<double>(f);
                    i = j;
                }
                return Outcome{symmetrized_mzv(b), mult * s.value(), {}, ""};
            });
        }

    // multiple polylog table
    for (const auto& t : mpolylog_table()) {
        add(t.label + " reduction", "mpolylog-table", Mzv | TwoVar, 0, tol_closed,
            [t] { return Outcome{table_lhs(t, PolylogConvention::Increasing), t.rhs, {}, ""}; });
        add(t.label + " reduction, decreasing index order", "mpolylog-table", Mzv, 0, tol_closed, [t] {
            Outcome o{std::numeric_limits<double>::quiet_NaN(), t.rhs, {}, "", true};
            try {
                o.lhs = table_lhs(t, PolylogConvention::Decreasing);
                o.note = std::abs(o.lhs - t.rhs) <= tol_closed ? "holds in both index orders"
                                                               : "fails with n_1 > ... > n_k; holds with n_1 < ... < n_k";
            } catch (const DomainError& e) {
                o.note = std::string("diverges with n_1 > ... > n_k (") + e.what() + "); holds with n_1 < ... < n_k";
            }
            return o;
        });
    }
    add("I multiple polylog assembly vs closed form", "i-double-series", Mzv | TwoVar, 0, tol_closed,
        [] { return Outcome{I_from_multiple_polylogs(), I_double_series(IMode::ClosedForm).value, {}, ""}; });

    // one variable
    for (double a : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5})
        add("m(1-x, 1-e(" + label(a) + ")x) quadrature vs closed form", "mm-pair-linear",
            (a == 0.5 ? Quick : 0u) | OneVar, 3, tol_quad_1d, [a, q] {
                auto r = multiple_mm_numeric({parse_poly("1-x"), linear_unit(a)}, q);
                return Outcome{r.value, mm_pair_linear(a), {}, ""};
            });
    add("mm-pair-linear zero by bisection vs (3-sqrt3)/6", "mm-pair-linear", OneVar, 3, 1e-6, [] {
        double lo = 0.0, hi = 0.5;
        while (hi - lo > 1e-12) {
            double mid = 0.5 * (lo + hi);
            (mm_pair_linear(lo) > 0) == (mm_pair_linear(mid) > 0) ? lo = mid : hi = mid;
        }
        return Outcome{0.5 * (lo + hi), (3.0 - std::sqrt(3.0)) / 6.0, {}, ""};
    });
    add("m(x-1, x+1) vs -pi^2/24", "mm-pair-linear", OneVar, 0, tol_closed,
        [pi] { return Outcome{mm_pair_linear(0.5), -pi * pi / 24.0, {}, ""}; });
    add("dilog-pair vs quadrature, complex arguments", "dilog-pair", OneVar, 0, tol_quad_1d, [q] {
        const cplx a(0.5, 0.5), b(-0.3, 2.0);
        auto pa = LaurentPolynomial::constant(1, Coefficient(1)) - LaurentPolynomial::monomial(1, {1}, Coefficient(a));
        auto pb = LaurentPolynomial::constant(1, Coefficient(1)) - LaurentPolynomial::monomial(1, {1}, Coefficient(b));
        return Outcome{dilog_pair(a, b), multiple_mm_numeric({pa, pb}, q).value, {}, ""};
    });
    for (const char* p : {"1+x+x^2", "3-2*x+5*x^2", "2+x-3*x^2+x^3"})
        add(std::string("m2(") + p + ") roots vs quadrature", "m2-one-var", OneVar, 0, tol_quad_1d, [p, q] {
            auto P = parse_poly(p);
            return Outcome{m2_one_var(P), mm_numeric(P, 2, q).value, {}, ""};
        });
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.2, 0.7}, {0.5, 0.5}})
        add("m(1-x, 1-e(" + label(a) + ")x, 1-e(" + label(b) + ")x) series vs quadrature", "mm-triple-linear", OneVar, 0, 1e-4,
            [a, b, q] {
                auto e = mm_triple_linear(a, b);
                auto r = multiple_mm_numeric({parse_poly("1-x"), linear_unit(a), linear_unit(b)}, q);
                return Outcome{e.value, r.value, {}, "series tail bound " + fmt(e.tail_bound, 3)};
            });
    add("m(1-x, 1+x, 1+x) series vs zeta(3)/4", "mm-triple-linear", OneVar, 0, 1e-4,
        [z3] { return Outcome{mm_triple_linear(0.5, 0.5).value, z3 / 4.0, {}, ""}; });

    // two variables
    add("m2(x+y+1) dilog-reduced oracle vs 5pi^2/54", "m2-x-plus-y-plus-1", TwoVar, 4, 1e-6, [] {
        return Outcome{m2_x_plus_y_plus_1_printed_reduction().value, paper_constant("m2-x-plus-y-plus-1"), {}, ""};
    });
    add("m2(x+y+1) s-substituted integral vs 5pi^2/54", "m2-x-plus-y-plus-1", TwoVar, 0, tol_quad_1d, [] {
        return Outcome{m2_x_plus_y_plus_1_s_form().value, paper_constant("m2-x-plus-y-plus-1"), {}, ""};
    });
    add("m2(x+y+1) polylog assembly vs 5pi^2/54", "m2-x-plus-y-plus-1", TwoVar, 0, tol_closed,
        [] { return Outcome{m2_x_plus_y_plus_1_polylog(), paper_constant("m2-x-plus-y-plus-1"), {}, ""}; });
    add("m2(x+y+1) quadrature vs (3/pi)Ls3(2pi/3)+pi^2/4", "m2-x-plus-y-plus-1", TwoVar, 0, tol_quad_1d, [q, pi] {
        return Outcome{mm_numeric(parse_poly("x+y+1"), 2, q).value, 3.0 / pi * log_sine_3(2.0 * pi / 3.0) + pi * pi / 4.0, {}, ""};
    });
    add("m2(x+y+1) quadrature vs 5pi^2/54", "m2-x-plus-y-plus-1", TwoVar, 0, tol_reduced_2d, [q] {
        return Outcome{mm_numeric(parse_poly("x+y+1"), 2, q).value, paper_constant("m2-x-plus-y-plus-1"), {}, ""};
    });
    add("m2(1-x+y(1+x)) published value vs reduced integral", "m2-smyth2", TwoVar, 5, 1e-5,
        [] { return Outcome{m2_smyth2_printed(), m2_smyth2_reduced().value, {}, ""}; });
    add("m2(1+x+y(1-x)) published value vs quadrature", "m2-smyth2", TwoVar, 5, 1e-5,
        [q] { return Outcome{m2_smyth2_printed(), mm_numeric(parse_poly("1+x+y*(1-x)"), 2, q).value, {}, ""}; });
    add("m2(1-x+y(1+x)) halved-integral assembly vs reduced integral", "m2-smyth2", TwoVar, 0, tol_quad_1d,
        [] { return Outcome{m2_smyth2_corrected(), m2_smyth2_reduced().value, {}, ""}; });
    add("m2(1-x+y(1+x)) reduced integral vs quadrature", "m2-smyth2", TwoVar, 0, tol_reduced_2d, [q] {
        return Outcome{m2_smyth2_reduced().value, mm_numeric(parse_poly("1-x+y*(1+x)"), 2, q).value, {}, ""};
    });
    add("m2(1+x+y(1-x)) vs m2(1-x+y(1+x)) quadrature", "m2-smyth2", TwoVar, 0, tol_quad_1d, [q] {
        return Outcome{mm_numeric(parse_poly("1+x+y*(1-x)"), 2, q).value, mm_numeric(parse_poly("1-x+y*(1+x)"), 2, q).value, {},
                       ""};
    });
    add("m(x+y+1) quadrature vs (3sqrt3/4pi)L(chi_-3,2)", "smyth-xy1", Quick | TwoVar, 12, 1e-7,
        [q] { return Outcome{mm_numeric(parse_poly("x+y+1"), 1, q).value, paper_constant("smyth-xy1"), {}, ""}; });
    add("m(1-x+y(1+x)) quadrature vs (2/pi)L(chi_-4,2)", "smyth-2", TwoVar, 12, 1e-7,
        [q] { return Outcome{mm_numeric(parse_poly("1-x+y*(1+x)"), 1, q).value, paper_constant("smyth-2"), {}, ""}; });

    // Z(s, x-1)
    for (double s : {0.5, 1.0, 2.0, 3.7})
        add("Z(" + label(s) + ", x-1) quadrature vs Gamma ratio", "z-x-minus-1", (s == 2.0 ? Quick : 0u) | Zeta, 6, 1e-9,
            [s, q] { return Outcome{zeta_mm_numeric(parse_poly("x-1"), s, q).value, Z_x_minus_1(s), {}, ""}; });
    for (unsigned s : {2u, 4u}) {
        add("Z(" + std::to_string(s) + ", x-1) exact vs constant term", "z-x-minus-1", Zeta, 6, tol_exact,
            [s] { return exact_match(Z_x_minus_1_exact(s), exact_even_moment(parse_poly("x-1"), s / 2)); });
        add("Z(" + std::to_string(s) + ", x-1) Gamma ratio vs constant term", "z-x-minus-1", Zeta, 6, tol_closed,
            [s] { return Outcome{Z_x_minus_1(s), exact_even_moment(parse_poly("x-1"), s / 2).to_double(), {}, ""}; });
    }

    // Z(s,t; x-1, x+1)
    for (double s : {0.0, 1.0, 2.0, 3.0})
        for (double t : {0.0, 1.0, 2.0, 3.0})
            add("Z(" + label(s) + "," + label(t) + "; x-1, x+1) Gamma ratio vs quadrature", "z-pair", Zeta, 7, 1e-8, [s, t, q] {
                return Outcome{Z_pair(s, t), higher_zeta_mm_numeric({parse_poly("x-1"), parse_poly("x+1")}, {s, t}, q).value, {},
                               ""};
            });
    add("m(x-1, x+1) from series vs -zeta(2)/4", "sin-cos-log-moments", Zeta, 7, tol_closed,
        [z2] { return Outcome{sin_cos_log_moments(1, 1), -z2 / 4.0, {}, ""}; });
    add("m(x-1, x-1, x+1) from series vs zeta(3)/4", "sin-cos-log-moments", Zeta, 7, tol_closed,
        [z3] { return Outcome{sin_cos_log_moments(2, 1), z3 / 4.0, {}, ""}; });

    // 4-cycle
    const auto four_cycle = [](int c) { return parse_poly("x+1/x+y+1/y+" + std::to_string(c)); };
    for (auto [s, cc] : std::vector<std::pair<unsigned, int>>{{2, 5}, {4, 5}, {4, 10}}) {
        const std::string tag = "Z(" + std::to_string(s) + ", x+1/x+y+1/y+" + std::to_string(cc) + ")";
        add(tag + " exact sum vs constant term", "z-4cycle", Zeta | TwoVar, 8, tol_exact, [s, cc, four_cycle] {
            return exact_match(Z_4cycle_exact(s, Rational(cc)), four_cycle(cc).constant_term_power(s).re_exact());
        });
        add(tag + " series vs constant term", "z-4cycle", Zeta | TwoVar, 8, tol_closed, [s, cc, four_cycle] {
            return Outcome{Z_4cycle(s, cc).value, rational_value(four_cycle(cc).constant_term_power(s)), {}, ""};
        });
        add(tag + " 3F2 vs constant term", "z-4cycle", Zeta | TwoVar, 8, tol_closed, [s, cc, four_cycle] {
            return Outcome{Z_4cycle(s, cc, SeriesForm::Hypergeometric).value,
                           rational_value(four_cycle(cc).constant_term_power(s)), {}, ""};
        });
    }
    add("Z(1, x+1/x+y+1/y+5) series vs quadrature", "z-4cycle", Zeta | TwoVar, 8, 1e-4,
        [q, four_cycle] { return Outcome{Z_4cycle(1, 5).value, zeta_mm_numeric(four_cycle(5), 1.0, q).value, {}, ""}; });

    // x+y+c
    for (int cc : {2, 3, 10})
        for (unsigned j = 1; j <= 3; ++j) {
            const std::string tag = "Z(" + std::to_string(2 * j) + ", x+y+" + std::to_string(cc) + ")";
            add(tag + " exact sum vs constant term", "z-x-y-c", Zeta | TwoVar, 9, tol_exact, [cc, j] {
                return exact_match(Z_x_y_c_exact(2 * j, Rational(cc)),
                                   exact_even_moment(parse_poly("x+y+" + std::to_string(cc)), j));
            });
        }
    add("Z(1.5, x+y+2) accelerated series vs quadrature", "z-x-y-c", Zeta | TwoVar, 0, tol_reduced_2d,
        [q] { return Outcome{Z_x_y_c(1.5, 2.0).value, zeta_mm_numeric(parse_poly("x+y+2"), 1.5, q).value, {}, ""}; });
    add("m2(x+y+2) series route vs zeta(2)/2", "m2-x-y-c", TwoVar, 9, 1e-9,
        [z2] { return Outcome{m2_x_y_c(2.0, SumMethod::Series).value, z2 / 2.0, {}, ""}; });
    add("m2(x+y+2) dilog route vs zeta(2)/2", "m2-x-y-c", TwoVar, 9, tol_closed,
        [z2] { return Outcome{m2_x_y_c(2.0, SumMethod::Dilog).value, z2 / 2.0, {}, ""}; });
    add("m2(x+y+2) quadrature vs zeta(2)/2", "m2-x-y-c", TwoVar, 0, tol_reduced_2d,
        [q, z2] { return Outcome{mm_numeric(parse_poly("x+y+2"), 2, q).value, z2 / 2.0, {}, ""}; });
    add("I accelerated double sum vs closed form", "i-double-series", TwoVar, 9, 1e-8, [] {
        auto d = I_double_series(IMode::DirectSum);
        return Outcome{d.value, I_double_series(IMode::ClosedForm).value, {}, "extrapolation bound " + fmt(d.tail_bound, 3)};
    });
    add("m3(x+y+2) series route vs (9/2)log2 zeta(2) - (15/4)zeta(3)", "m3-x-y-c", TwoVar, 9, 1e-8,
        [] { return Outcome{m3_x_y_c(2.0, SumMethod::Series).value, paper_constant("m3-x-y-2"), {}, ""}; });
    add("m2(x+y+3) dilog vs series", "m2-x-y-c", TwoVar, 0, tol_closed,
        [] { return Outcome{m2_x_y_c(3.0, SumMethod::Dilog).value, m2_x_y_c(3.0, SumMethod::Series).value, {}, ""}; });
    add("m2(x+y+3) dilog vs quadrature", "m2-x-y-c", TwoVar, 0, tol_reduced_2d,
        [q] { return Outcome{m2_x_y_c(3.0).value, mm_numeric(parse_poly("x+y+3"), 2, q).value, {}, ""}; });

    // scaling and squaring laws on seeded random polynomials
    {
        std::mt19937_64 rng(20260415);
        auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
        auto random_poly = [&] {
            const int deg = draw(2, 3);
            LaurentPolynomial p(1);
            for (int i = 0; i <= deg; ++i) {
                int a = draw(-3, 3);
                if ((i == 0 || i == deg) && a == 0) a = 1;
                p += LaurentPolynomial::monomial(1, {i}, Coefficient(a));
            }
            return p.to_string();
        };
        for (int i = 0; i < 5; ++i) {
            std::string p = random_poly();
            double lambda = draw(1, 12) / 4.0;
            double s = 0.5 + draw(0, 10) / 4.0;
            add("Z scaling law: Z(" + label(s) + ", " + label(lambda) + "(" + p + "))", "zeta-mm-properties", Zeta, 13, 0.0,
                [p, lambda, s, q] {
                    auto P = parse_poly(p);
                    auto a = zeta_mm_numeric(LaurentPolynomial::constant(1, Coefficient(lambda)) * P, s, q);
                    auto b = zeta_mm_numeric(P, s, q);
                    double f = std::pow(lambda, s);
                    double bound = 3.0 * (a.err_estimate + f * b.err_estimate);
                    return Outcome{a.value, f * b.value, bound, "bound is 3x the summed error estimates"};
                });
        }
        for (int i = 0; i < 5; ++i) {
            std::string p = random_poly();
            double s = 0.5 + draw(0, 10) / 4.0;
            add("Z squaring law: Z(" + label(s) + ", " + p + ")", "zeta-mm-properties", Zeta, 13, 0.0, [p, s, q] {
                auto P = parse_poly(p);
                auto a = zeta_mm_numeric(P, s, q);
                auto b = zeta_mm_numeric(P * P.conjugate_reciprocal(), s / 2.0, q);
                double bound = 3.0 * (a.err_estimate + b.err_estimate);
                return Outcome{a.value, b.value, bound, "bound is 3x the summed error estimates"};
            });
        }
    }

    // Dyson
    const std::string p2 = "(1-x/y)*(1-y/x)";
    const std::string p3 = "(1-x/y)*(1-y/x)*(1-x/z)*(1-z/x)*(1-y/z)*(1-z/y)";
    for (unsigned k = 1; k <= 3; ++k)
        add("Z(" + std::to_string(k) + ", P_2) quadrature vs (2k)!/(k!)^2", "dyson-z", Dyson, 10, 1e-6, [k, q, p2] {
            return Outcome{zeta_mm_numeric(parse_poly(p2), k, q).value, dyson_Z(2, k).to_double(), {}, ""};
        });
    add("Z(1, P_3) grid quadrature vs 6", "dyson-z", Dyson, 10, tol_raw_2d, [q, p3] {
        return Outcome{zeta_mm_numeric(parse_poly(p3), 1.0, q).value, dyson_Z(3, 1).to_double(), {}, "best effort"};
    });
    add("m(1+0.1 P_2) binomial series vs quadrature", "mm-binomial-basis", Dyson, 10, 1e-6, [vc, p2] {
        std::vector<double> zk;
        for (int k = 0; k <= vc.order; ++k) zk.push_back(dyson_Z_double(2, static_cast<unsigned>(k)));
        auto b = binomial_basis_to_mm(zk, 0.1, vc.order, 2, 4.0);
        auto r = mm_numeric(parse_poly("1+0.1*" + p2), 1, vc.quad);
        return Outcome{b.m1, r.value, {}, "series tail bound " + fmt(b.tail_bound, 3)};
    });
    add("m2(1+0.1 P_2) binomial series vs quadrature", "mm-binomial-basis", Dyson, 0, 1e-6, [vc, p2] {
        std::vector<double> zk;
        for (int k = 0; k <= vc.order; ++k) zk.push_back(dyson_Z_double(2, static_cast<unsigned>(k)));
        auto b = binomial_basis_to_mm(zk, 0.1, vc.order, 2, 4.0);
        return Outcome{b.m2, mm_numeric(parse_poly("1+0.1*" + p2), 2, vc.quad).value, {}, ""};
    });
    for (unsigned N : {2u, 3u})
        for (unsigned k = 1; k <= (N == 2 ? 4u : 2u); ++k)
            add("Z(" + std::to_string(k) + ", P_" + std::to_string(N) + ") exact vs constant term", "dyson-z", Dyson, 0,
                tol_exact, [N, k, p2, p3] {
                    return exact_match(dyson_Z(N, k), parse_poly(N == 2 ? p2 : p3).constant_term_power(k).re_exact());
                });
    add("Z(2.5, 1+0.1 P_2) binomial series vs 2F1, argument -4 lambda", "dyson-hyp", Dyson, 0, tol_closed, [vc] {
        return Outcome{dyson_hyp(2.5, 0.1, 2, vc.order).value, dyson_pFq(2.5, 0.1, 2, DysonArgument::Derived), {}, ""};
    });
    add("Z(2.5, 1+0.1 P_2) binomial series vs quadrature", "dyson-hyp", Dyson, 0, tol_reduced_2d, [vc, p2] {
        return Outcome{dyson_hyp(2.5, 0.1, 2, vc.order).value, zeta_mm_numeric(parse_poly("1+0.1*" + p2), 2.5, vc.quad).value,
                       {}, ""};
    });
    add("Z(2.5, 1+0.1 P_2) binomial series vs 2F1, argument lambda/4", "dyson-hyp", Dyson, 0, tol_closed, [vc] {
        Outcome o{dyson_hyp(2.5, 0.1, 2, vc.order).value, dyson_pFq(2.5, 0.1, 2, DysonArgument::Printed), {}, "", true};
        o.note = "printed argument lambda/N^N; the binomial series equals the argument -N^N lambda";
        return o;
    });
    return c;
}

inline IdentityCheck execute(const CheckSpec& spec, bool timing) {
    IdentityCheck ch;
    ch.name = spec.name;
    ch.paper_ref = spec.paper_ref;
    ch.criterion = spec.criterion;
    ch.tol = spec.tol;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Outcome o = spec.run();
        ch.lhs = o.lhs;
        ch.rhs = o.rhs;
        if (o.tol) ch.tol = *o.tol;
        ch.abs_err = std::abs(o.lhs - o.rhs);
        ch.note = std::move(o.note);
        if (o.skipped)
            ch.status = CheckStatus::Skip;
        else
            ch.status = std::isfinite(ch.abs_err) && ch.abs_err <= ch.tol ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const std::exception& e) {
        ch.status = CheckStatus::Fail;
        ch.note = std::string("error: ") + e.what();
    }
    if (timing)
        ch.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return ch;
}

} // namespace detail

// Runs the fixed, ordered check list of a suite; failures are recorded, never thrown.
inline Report run_suite(std::string_view suite, const VerifyConfig& cfg = {}) {
    auto mask = suite_mask(suite);
    if (!mask) throw DomainError("unknown suite: " + std::string(suite));
    cfg.quad.validate();
    if (cfg.order < 2) throw DomainError("order must be >= 2");
    Report r;
    r.suite = std::string(suite);
    r.config = cfg;
    for (const auto& spec : detail::build_checks(cfg)) {
        if ((spec.suites & *mask) == 0) continue;
        r.checks.push_back(detail::execute(spec, cfg.timing));
        switch (r.checks.back().status) {
            case CheckStatus::Pass: ++r.pass; break;
            case CheckStatus::Fail: ++r.fail; break;
            case CheckStatus::Skip: ++r.skip; break;
        }
    }
    return r;
}

namespace detail {

inline nlohmann::ordered_json number_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

} // namespace detail

inline nlohmann::ordered_json to_json(const IdentityCheck& c) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["lhs"] = detail::number_or_null(c.lhs);
    j["rhs"] = detail::number_or_null(c.rhs);
    j["abs_err"] = detail::number_or_null(c.abs_err);
    j["tol"] = c.tol;
    j["status"] = std::string(to_string(c.status));
    j["paper_ref"] = c.paper_ref;
    j["runtime_ms"] = c.runtime_ms;
    j["note"] = c.note;
    return j;
}

inline nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["config"] = {{"abs_tol", r.config.quad.abs_tol},
                   {"rel_tol", r.config.quad.rel_tol},
                   {"max_panels", r.config.quad.max_panels},
                   {"grid_2d", r.config.quad.grid_2d},
                   {"order", r.config.order}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
    j["summary"] = {{"pass", r.pass}, {"fail", r.fail}, {"skip", r.skip}};
    return j;
}

} // namespace mahler

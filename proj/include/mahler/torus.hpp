#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "quadrature.hpp"
#include "roots.hpp"
#include "specfun.hpp"
#include "summation.hpp"

namespace mahler {

struct QuadratureConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-13;
    int max_panels = 4000;
    std::vector<double> singular_angles;
    int grid_2d = 64;

    void validate() const {
        if (!(abs_tol > 0.0)) throw DomainError("abs_tol must be positive");
        if (rel_tol < 0.0) throw DomainError("rel_tol must be >= 0");
        if (max_panels < 4) throw DomainError("max_panels must be >= 4");
        if (grid_2d < 4) throw DomainError("grid_2d must be >= 4");
        for (double t : singular_angles)
            if (!(t >= 0.0 && t < 1.0)) throw DomainError("singular angles must lie in [0,1)");
    }
};

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evals = 0;
    bool converged = false;
};

// Integral over theta in [0,1] of f, split at cfg.singular_angles.
template <typename F>
QuadratureResult integrate_circle(F&& f, const QuadratureConfig& cfg) {
    cfg.validate();
    AdaptiveOptions opt{cfg.abs_tol, cfg.rel_tol, cfg.max_panels, 4};
    auto r = integrate_adaptive<double>(std::forward<F>(f), 0.0, 1.0, cfg.singular_angles, opt);
    return {r.value, r.err, r.evals, r.converged};
}

namespace detail {

// One factor of a torus integrand: log^k|P| or |P|^s.
struct MeasureFactor {
    LaurentPolynomial poly;
    bool is_log = true;
    int k = 1;
    double s = 0.0;

    double apply(double log_abs) const {
        if (is_log) {
            double v = 1.0;
            for (int i = 0; i < k; ++i) v *= log_abs;
            return v;
        }
        if (s == 0.0) return 1.0;
        return std::exp(s * log_abs);
    }
};

inline std::vector<double> near_torus_angles(const OneVarFactorization& f, double tol = 1e-3) {
    return f.torus_angles(tol);
}

inline std::vector<double> merged(std::vector<double> a, const std::vector<double>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end(), [](double u, double v) { return std::abs(u - v) < 1e-13; }), a.end());
    return a;
}

inline std::vector<double> torus_root_angles(const LaurentPolynomial& p, double tol = 1e-3) {
    if (p.is_zero() || p.active_variables().empty()) return {};
    return near_torus_angles(factor_one_var(p), tol);
}

// Refuse |P|^s with s <= -1/multiplicity at an on-torus zero.
inline void check_zeta_domain(const OneVarFactorization& f, double s) {
    if (s >= 0.0) return;
    auto angles = f.torus_angles(1e-6);
    for (std::size_t i = 0; i < angles.size();) {
        std::size_t j = i;
        while (j < angles.size() && std::abs(angles[j] - angles[i]) < 1e-5) ++j;
        double mult = static_cast<double>(j - i);
        if (s * mult <= -1.0) throw DomainError("zeta Mahler measure diverges for this s (on-torus zero)");
        i = j;
    }
}

inline QuadratureResult measure_1d(const std::vector<MeasureFactor>& factors, const QuadratureConfig& cfg) {
    std::vector<OneVarFactorization> facs;
    std::vector<double> breaks = cfg.singular_angles;
    for (const auto& f : factors) {
        facs.push_back(factor_one_var(f.poly));
        if (!f.is_log) check_zeta_domain(facs.back(), f.s);
        breaks = merged(breaks, near_torus_angles(facs.back()));
    }
    cfg.validate();
    if (breaks.empty()) breaks.push_back(0.0);
    // Each arc between consecutive breaks is integrated in two halves, each measured
    // from its break point, so the integrand can resolve offsets far below 1e-16.
    const std::size_t m = breaks.size();
    AdaptiveOptions opt{cfg.abs_tol / static_cast<double>(2 * m), cfg.rel_tol, std::max(4, cfg.max_panels / static_cast<int>(2 * m)), 2};
    QuadratureResult res;
    res.converged = true;
    CompensatedSum<double> total;
    for (std::size_t i = 0; i < m; ++i) {
        const double lo = breaks[i];
        const double hi = i + 1 < m ? breaks[i + 1] : breaks[0] + 1.0;
        const double half = 0.5 * (hi - lo);
        for (double sign : {1.0, -1.0}) {
            const double base = sign > 0 ? lo : hi;
            auto integrand = [&](double u) {
                double v = 1.0;
                for (std::size_t j = 0; j < factors.size(); ++j)
                    v *= factors[j].apply(facs[j].log_abs_on_torus(base, sign * u));
                return v;
            };
            auto r = integrate_adaptive<double>(integrand, 0.0, half, std::span<const double>{}, opt);
            total.add(r.value);
            res.err_estimate += r.err;
            res.evals += r.evals;
            res.converged = res.converged && r.converged;
        }
    }
    res.value = total.value();
    return res;
}

// P = y^p (a(x) + b(x) y^d) split along the inner variable.
struct LinearSplit {
    bool depends = false;
    LaurentPolynomial a{1}, b{1}, whole{1};
    int d = 0;
};

inline std::optional<LinearSplit> split_linear(const LaurentPolynomial& p, int inner) {
    auto ex = p.exponents_of(inner);
    LinearSplit s;
    if (ex.size() == 1) {
        s.whole = p.coefficient_in(inner, ex[0]);
        return s;
    }
    if (ex.size() != 2) return std::nullopt;
    s.depends = true;
    s.a = p.coefficient_in(inner, ex[0]);
    s.b = p.coefficient_in(inner, ex[1]);
    s.d = ex[1] - ex[0];
    return s;
}

// m(1 - alpha y, 1 - beta y) part without the log+ product: u = alpha or 1/conj(alpha).
inline cplx jensen_u(cplx A, cplx B) {
    // a + b y = a (1 - alpha y), alpha = -b/a
    if (std::abs(B) <= std::abs(A)) return -B / A;
    return -std::conj(A) / std::conj(B);
}

// Two-variable integrals of products of logs where at most two factors depend on the
// inner variable, each linearly; the inner integral is done in closed form.
inline std::optional<QuadratureResult> measure_2d_jensen(const std::vector<MeasureFactor>& factors,
                                                         const QuadratureConfig& cfg) {
    std::vector<LaurentPolynomial> logs;
    for (const auto& f : factors) {
        if (!f.is_log) return std::nullopt;
        for (int i = 0; i < f.k; ++i) logs.push_back(f.poly);
    }
    for (int inner : {1, 0}) {
        std::vector<LinearSplit> splits;
        int dep = 0, d = 0;
        bool ok = true;
        for (const auto& p : logs) {
            auto s = split_linear(p, inner);
            if (!s) {
                ok = false;
                break;
            }
            if (s->depends) {
                ++dep;
                if (d != 0 && s->d != d) ok = false;
                d = s->d;
            }
            splits.push_back(std::move(*s));
        }
        if (!ok || dep == 0 || dep > 2) continue;

        std::vector<double> breaks = cfg.singular_angles;
        for (const auto& s : splits) {
            if (s.depends) {
                breaks = merged(breaks, torus_root_angles(s.a));
                breaks = merged(breaks, torus_root_angles(s.b));
                LaurentPolynomial diff = s.a * s.a.conjugate_reciprocal() - s.b * s.b.conjugate_reciprocal();
                breaks = merged(breaks, torus_root_angles(diff, 1e-6));
            } else {
                breaks = merged(breaks, torus_root_angles(s.whole));
            }
        }
        auto integrand = [&](double t) {
            const cplx x = LaurentPolynomial::unit(t);
            const cplx xs[] = {x};
            double prod = 1.0;
            double L[2] = {0, 0};
            cplx U[2];
            int n = 0;
            for (const auto& s : splits) {
                if (!s.depends) {
                    prod *= std::log(std::abs(s.whole.eval(xs)));
                    continue;
                }
                cplx A = s.a.eval(xs), B = s.b.eval(xs);
                L[n] = std::log(std::max(std::abs(A), std::abs(B)));
                U[n] = jensen_u(A, B);
                ++n;
            }
            double inner_val = n == 1 ? L[0] : L[0] * L[1] + 0.5 * dilog(U[0] * std::conj(U[1])).real();
            return prod * inner_val;
        };
        QuadratureConfig c = cfg;
        c.singular_angles = breaks;
        return integrate_circle(integrand, c);
    }
    return std::nullopt;
}

inline QuadratureResult measure_2d_nested(const std::vector<MeasureFactor>& factors, const QuadratureConfig& cfg) {
    double worst_inner = 0.0;
    bool inner_ok = true;
    long evals = 0;
    AdaptiveOptions inner_opt{cfg.abs_tol * 0.1, cfg.rel_tol, std::max(16, cfg.grid_2d), 4};
    auto outer = [&](double t) {
        const cplx x = LaurentPolynomial::unit(t);
        std::vector<OneVarFactorization> facs;
        std::vector<double> breaks;
        for (const auto& f : factors) {
            LaurentPolynomial q = f.poly.substitute(0, x);
            if (q.is_zero()) return f.is_log ? -std::numeric_limits<double>::infinity() : 0.0;
            facs.push_back(factor_one_var(q));
            breaks = merged(breaks, near_torus_angles(facs.back()));
        }
        auto inner = [&](double u) {
            double v = 1.0;
            for (std::size_t i = 0; i < factors.size(); ++i) v *= factors[i].apply(facs[i].log_abs_on_torus(u));
            return v;
        };
        auto r = integrate_adaptive<double>(inner, 0.0, 1.0, breaks, inner_opt);
        worst_inner = std::max(worst_inner, r.err);
        inner_ok = inner_ok && r.converged;
        evals += r.evals;
        return r.value;
    };
    AdaptiveOptions outer_opt{cfg.abs_tol, cfg.rel_tol, std::max(16, cfg.grid_2d), 4};
    auto r = integrate_adaptive<double>(outer, 0.0, 1.0, cfg.singular_angles, outer_opt);
    QuadratureResult q;
    q.value = r.value;
    q.err_estimate = r.err + worst_inner;
    q.evals = evals;
    q.converged = r.converged && inner_ok &&
                  q.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(q.value));
    return q;
}

// Equispaced grids of G^n and (2G)^n points with per-axis offsets; not certified.
inline QuadratureResult measure_grid(const std::vector<MeasureFactor>& factors, int nvars, const QuadratureConfig& cfg) {
    const int G = std::max(8, cfg.grid_2d / 4);
    long evals = 0;
    auto average = [&](int g) {
        std::vector<double> offset(static_cast<std::size_t>(nvars));
        for (int j = 0; j < nvars; ++j) {
            double phi = std::fmod((j + 1) * 0.6180339887498949, 1.0);
            offset[static_cast<std::size_t>(j)] = 0.25 + 0.5 * phi;
        }
        std::vector<int> idx(static_cast<std::size_t>(nvars), 0);
        std::vector<cplx> x(static_cast<std::size_t>(nvars));
        CompensatedSum<double> sum;
        long count = 0;
        while (true) {
            for (int j = 0; j < nvars; ++j)
                x[static_cast<std::size_t>(j)] =
                    LaurentPolynomial::unit((idx[static_cast<std::size_t>(j)] + offset[static_cast<std::size_t>(j)]) / g);
            double v = 1.0;
            for (const auto& f : factors) v *= f.apply(std::log(std::abs(f.poly.eval(x))));
            sum.add(v);
            ++count;
            int j = 0;
            while (j < nvars && ++idx[static_cast<std::size_t>(j)] == g) idx[static_cast<std::size_t>(j++)] = 0;
            if (j == nvars) break;
        }
        evals += count;
        return sum.value() / static_cast<double>(count);
    };
    double coarse = average(G);
    double fine = average(2 * G);
    QuadratureResult q;
    q.value = fine;
    q.err_estimate = std::abs(fine - coarse);
    q.evals = evals;
    q.converged = q.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(fine));
    return q;
}

inline QuadratureResult measure_numeric(std::vector<MeasureFactor> factors, const QuadratureConfig& cfg) {
    cfg.validate();
    if (factors.empty()) return {1.0, 0.0, 0, true};
    int n = factors.front().poly.nvars();
    for (const auto& f : factors) {
        if (f.poly.is_zero()) throw DomainError("measure of the zero polynomial");
        if (f.poly.nvars() != n) throw DomainError("polynomials must share the same variable set");
        if (!f.is_log && !(f.s > -1.0)) throw DomainError("zeta Mahler measure requires s > -1");
        if (f.is_log && f.k < 0) throw DomainError("log power must be >= 0");
    }
    std::erase_if(factors, [](const MeasureFactor& f) { return (f.is_log && f.k == 0) || (!f.is_log && f.s == 0.0); });
    if (factors.empty()) return {1.0, 0.0, 0, true};
    std::vector<int> active;
    for (const auto& f : factors)
        for (int j : f.poly.active_variables()) active.push_back(j);
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
    for (auto& f : factors) f.poly = f.poly.restrict_to(active);

    if (active.empty()) {
        double v = 1.0;
        for (const auto& f : factors) v *= f.apply(std::log(std::abs(f.poly.constant_term().value())));
        return {v, 0.0, 0, true};
    }
    if (active.size() == 1) return measure_1d(factors, cfg);
    if (active.size() == 2) {
        if (auto r = measure_2d_jensen(factors, cfg)) return *r;
        return measure_2d_nested(factors, cfg);
    }
    return measure_grid(factors, static_cast<int>(active.size()), cfg);
}

inline std::vector<LaurentPolynomial> common_vars(std::vector<LaurentPolynomial> ps) {
    int n = 1;
    for (const auto& p : ps) n = std::max(n, p.nvars());
    for (auto& p : ps) p = p.with_nvars(n);
    return ps;
}

} // namespace detail

// m_k(P): integral of log^k|P| over the torus.
inline QuadratureResult mm_numeric(const LaurentPolynomial& P, int k, const QuadratureConfig& cfg = {}) {
    if (k < 0) throw DomainError("k must be >= 0");
    if (P.is_zero()) throw DomainError("measure of the zero polynomial");
    return detail::measure_numeric({{P, true, k, 0.0}}, cfg);
}

// m(P_1, ..., P_l): integral of prod log|P_i|.
inline QuadratureResult multiple_mm_numeric(const std::vector<LaurentPolynomial>& Ps, const QuadratureConfig& cfg = {}) {
    if (Ps.empty()) throw DomainError("need at least one polynomial");
    std::vector<detail::MeasureFactor> f;
    for (const auto& p : detail::common_vars(Ps)) f.push_back({p, true, 1, 0.0});
    return detail::measure_numeric(std::move(f), cfg);
}

// Z(s,P): integral of |P|^s, s > -1.
inline QuadratureResult zeta_mm_numeric(const LaurentPolynomial& P, double s, const QuadratureConfig& cfg = {}) {
    if (P.is_zero()) throw DomainError("measure of the zero polynomial");
    if (!(s > -1.0)) throw DomainError("zeta Mahler measure requires s > -1");
    return detail::measure_numeric({{P, false, 0, s}}, cfg);
}

// Z(s_1,...,s_l; P_1,...,P_l): integral of prod |P_i|^{s_i}.
inline QuadratureResult higher_zeta_mm_numeric(const std::vector<LaurentPolynomial>& Ps, const std::vector<double>& ss,
                                               const QuadratureConfig& cfg = {}) {
    if (Ps.empty() || Ps.size() != ss.size()) throw DomainError("need one exponent per polynomial");
    std::vector<detail::MeasureFactor> f;
    auto ps = detail::common_vars(Ps);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!(ss[i] > -1.0)) throw DomainError("zeta Mahler measure requires s > -1");
        f.push_back({ps[i], false, 0, ss[i]});
    }
    return detail::measure_numeric(std::move(f), cfg);
}

} // namespace mahler

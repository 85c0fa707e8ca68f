#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"

namespace mahler {

// P(x) = lead * x^shift * prod_j (1 - roots[j] x)
struct OneVarFactorization {
    cplx lead{1.0, 0.0};
    int shift = 0;
    std::vector<cplx> roots;
    std::vector<bool> on_torus;

    double log_abs_lead() const { return std::log(std::abs(lead)); }

    // log|P(e^{2 pi i theta})| from the factored form; stays accurate next to zeros.
    double log_abs_on_torus(double theta) const { return log_abs_on_torus(theta, 0.0); }

    // The same at theta = base + u, with u kept separate so that points within u of a
    // zero sitting at angle base keep full relative accuracy:
    //   |1 - r e(d)|^2 = (1 - r)^2 + 4 r sin^2(pi d).
    double log_abs_on_torus(double base, double u) const {
        double s = std::log(std::abs(lead));
        for (const cplx& a : roots) {
            const double r = std::abs(a);
            double k = base + std::arg(a) / (2.0 * std::numbers::pi);
            k -= std::round(k);
            const double sn = std::sin(std::numbers::pi * (k + u));
            s += 0.5 * std::log((1.0 - r) * (1.0 - r) + 4.0 * r * sn * sn);
        }
        return s;
    }

    // Angles in [0,1) where a root with ||alpha|-1| < tol sits on the circle.
    std::vector<double> torus_angles(double tol) const {
        std::vector<double> out;
        for (const cplx& a : roots) {
            if (std::abs(std::abs(a) - 1.0) >= tol) continue;
            // 1 - a x = 0  <=>  x = 1/a, angle -arg(a)
            double t = -std::arg(a) / (2.0 * std::numbers::pi);
            t -= std::floor(t);
            if (t >= 1.0) t = 0.0;
            out.push_back(t);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

// Horner value and derivative.
inline void horner(const std::vector<cplx>& c, cplx x, cplx& p, cplx& dp) {
    p = c.back();
    dp = 0.0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[i];
    }
}

// A multiple root of order m is only found to about eps^{1/m}; the cluster mean is a good
// start for Newton on the (m-1)-th derivative, where the root is simple.
inline void refine_clusters(const std::vector<cplx>& c, std::vector<cplx>& z) {
    const std::size_t n = z.size();
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> members{i};
        used[i] = true;
        for (std::size_t k = 0; k < members.size(); ++k)
            for (std::size_t j = 0; j < n; ++j)
                if (!used[j] && std::abs(z[j] - z[members[k]]) < 1e-6 * std::max(1.0, std::abs(z[j]))) {
                    used[j] = true;
                    members.push_back(j);
                }
        const std::size_t m = members.size();
        if (m < 2) continue;
        cplx mean{};
        double radius = 0.0;
        for (auto j : members) mean += z[j];
        mean /= static_cast<double>(m);
        for (auto j : members) radius = std::max(radius, std::abs(z[j] - mean));
        std::vector<cplx> d = c;
        for (std::size_t r = 0; r + 1 < m; ++r) {
            for (std::size_t q = 1; q < d.size(); ++q) d[q - 1] = d[q] * static_cast<double>(q);
            d.pop_back();
        }
        cplx x = mean;
        for (int it = 0; it < 8; ++it) {
            cplx p, dp;
            horner(d, x, p, dp);
            if (dp == cplx{}) break;
            cplx step = p / dp;
            x -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
        }
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) || std::abs(x - mean) > 4.0 * radius + 1e-15)
            continue;
        for (auto j : members) z[j] = x;
    }
}

// Roots of sum_i c[i] x^i (c.back() != 0) by Aberth-Ehrlich iteration.
inline std::vector<cplx> aberth_roots(const std::vector<cplx>& c) {
    const std::size_t n = c.size() - 1;
    std::vector<cplx> z(n);
    if (n == 0) return z;
    if (n == 1) {
        z[0] = -c[0] / c[1];
        return z;
    }
    // Fujiwara-type bound for the starting circle
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        r = std::max(r, std::pow(std::abs(c[i] / c[n]), 1.0 / static_cast<double>(n - i)));
    double rmin = std::abs(c[0]) > 0 ? std::pow(std::abs(c[0] / c[n]), 1.0 / static_cast<double>(n)) : r;

    std::mt19937_64 rng(0x4d61686c6572ULL);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    for (int attempt = 0; attempt < 12; ++attempt) {
        double rad = attempt == 0 ? std::max(rmin, 1e-3) : std::max(rmin, 1e-3) * (1.0 + 0.3 * attempt) ;
        for (std::size_t k = 0; k < n; ++k) {
            double a = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.4;
            if (attempt > 0) a += jitter(rng);
            z[k] = std::polar(rad * (attempt > 0 ? 1.0 + jitter(rng) : 1.0), a);
        }
        bool done = false;
        for (int it = 0; it < 800 && !done; ++it) {
            double maxstep = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                cplx p, dp;
                horner(c, z[k], p, dp);
                if (p == cplx{}) continue;
                cplx ratio = p / dp;
                cplx sum{};
                for (std::size_t j = 0; j < n; ++j)
                    if (j != k) sum += 1.0 / (z[k] - z[j]);
                cplx step = ratio / (1.0 - ratio * sum);
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
                z[k] -= step;
                maxstep = std::max(maxstep, std::abs(step) / std::max(1.0, std::abs(z[k])));
            }
            if (maxstep < 1e-15) done = true;
        }
        // Newton polish and relative residual test
        bool ok = true;
        for (std::size_t k = 0; k < n; ++k) {
            for (int it = 0; it < 3; ++it) {
                cplx p, dp;
                horner(c, z[k], p, dp);
                if (dp == cplx{} || p == cplx{}) break;
                cplx nz = z[k] - p / dp;
                if (!std::isfinite(nz.real()) || !std::isfinite(nz.imag())) break;
                cplx np, ndp;
                horner(c, nz, np, ndp);
                if (std::abs(np) < std::abs(p)) z[k] = nz;
                else break;
            }
            cplx p, dp;
            horner(c, z[k], p, dp);
            double scale = 0.0;
            double ax = std::abs(z[k]);
            for (std::size_t i = c.size(); i-- > 0;) scale = scale * ax + std::abs(c[i]);
            if (!(std::abs(p) <= 1e-12 * scale)) ok = false;
        }
        if (ok) {
            refine_clusters(c, z);
            return z;
        }
    }
    throw ConvergenceError("root finder did not converge");
}

} // namespace detail

inline OneVarFactorization factor_one_var(const LaurentPolynomial& P) {
    if (P.is_zero()) throw DomainError("cannot factor the zero polynomial");
    auto active = P.active_variables();
    if (active.size() > 1) throw DomainError("factor_one_var needs a polynomial in one variable");
    LaurentPolynomial Q = P.restrict_to(active.empty() ? std::vector<int>{} : active);
    auto [lo, hi] = Q.degree_range(0);
    OneVarFactorization f;
    f.shift = lo;
    f.lead = Q.coefficient({lo}).value();
    const int n = hi - lo;
    // reversed polynomial: its roots are the alpha_j directly
    std::vector<cplx> rev(static_cast<std::size_t>(n) + 1);
    for (const auto& [e, c] : Q.terms()) rev[static_cast<std::size_t>(hi - e[0])] = c.value();
    f.roots = detail::aberth_roots(rev);
    std::sort(f.roots.begin(), f.roots.end(), [](cplx a, cplx b) {
        double aa = std::arg(a), ab = std::arg(b);
        if (aa != ab) return aa < ab;
        return std::abs(a) < std::abs(b);
    });
    f.on_torus.reserve(f.roots.size());
    for (const cplx& a : f.roots) f.on_torus.push_back(std::abs(std::abs(a) - 1.0) < 1e-9);
    return f;
}

// Coefficients (lowest exponent first) of lead * prod (1 - alpha_j x).
inline std::vector<cplx> expand_factorization(const OneVarFactorization& f) {
    std::vector<cplx> c{f.lead};
    for (const cplx& a : f.roots) {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= a * c[i - 1];
    }
    return c;
}

} // namespace mahler

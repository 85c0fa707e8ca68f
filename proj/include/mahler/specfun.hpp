#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "summation.hpp"

namespace mahler {

using cplx = std::complex<double>;

inline double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma needs x > 0");
    return std::lgamma(x);
}

namespace detail {

// B_{2j} for j = 0..n via B_{2j} = (-1)^{j+1} 2 (2j)! zeta(2j) / (2 pi)^{2j}
inline const std::vector<double>& bernoulli_even() {
    static const std::vector<double> b = [] {
        std::vector<double> v{1.0};
        for (int j = 1; j <= 60; ++j) {
            // zeta(2j) by direct sum is fine for j >= 1 with acceleration below
            long double z = 0;
            for (int n = 200; n >= 1; --n) z += std::pow(static_cast<long double>(n), -2.0L * j);
            if (j == 1) z = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6;
            if (j == 2) z = std::pow(std::numbers::pi_v<long double>, 4) / 90;
            if (j == 3) z = std::pow(std::numbers::pi_v<long double>, 6) / 945;
            long double f = 2;
            for (int k = 1; k <= 2 * j; ++k) f *= k / (2 * std::numbers::pi_v<long double>);
            v.push_back(static_cast<double>((j % 2 ? 1 : -1) * f * z));
        }
        return v;
    }();
    return b;
}

} // namespace detail

// Hurwitz zeta zeta(s, a) = sum_{n>=0} (n+a)^{-s}, real s > 1, a > 0 (Euler-Maclaurin).
inline double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0)) throw DomainError("hurwitz_zeta needs s > 1");
    if (!(a > 0.0)) throw DomainError("hurwitz_zeta needs a > 0");
    const int N = 24;
    CompensatedSum<double> sum;
    for (int n = N - 1; n >= 0; --n) sum.add(std::pow(n + a, -s));
    const double x = N + a;
    sum.add(std::pow(x, 1.0 - s) / (s - 1.0));
    sum.add(0.5 * std::pow(x, -s));
    const auto& B = detail::bernoulli_even();
    double rising = s;  // s (s+1) ... (s+2j-2)
    double xp = std::pow(x, -s - 1.0);
    double fact = 2.0;  // (2j)!
    for (int j = 1; j <= 14; ++j) {
        double term = B[static_cast<std::size_t>(j)] / fact * rising * xp;
        sum.add(term);
        if (std::abs(term) < 1e-18 * std::abs(sum.value())) break;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        xp /= x * x;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum.value();
}

inline double riemann_zeta(double s) {
    if (s == 2.0) return std::numbers::pi * std::numbers::pi / 6.0;
    return hurwitz_zeta(s, 1.0);
}

inline double riemann_zeta(int k) {
    if (k < 2) throw DomainError("riemann_zeta needs k >= 2");
    return riemann_zeta(static_cast<double>(k));
}

// Riemann zeta at integers including k <= 0 (zeta(1) excluded), for the polylog log-series.
inline double zeta_any_integer(int k) {
    if (k == 1) throw DomainError("zeta has a pole at 1");
    if (k >= 2) return riemann_zeta(k);
    if (k == 0) return -0.5;
    int m = -k;  // zeta(-m) = -B_{m+1}/(m+1)
    if (m % 2 == 0) return 0.0;
    const auto& B = detail::bernoulli_even();
    std::size_t j = static_cast<std::size_t>((m + 1) / 2);
    if (j >= B.size()) throw DomainError("zeta argument too negative");
    return -B[j] / (m + 1);
}

inline double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma needs x > 0");
    double r = 0.0;
    while (x < 10.0) {
        r -= 1.0 / x;
        x += 1.0;
    }
    double x2 = 1.0 / (x * x);
    r += std::log(x) - 0.5 / x -
         x2 * (1.0 / 12 - x2 * (1.0 / 120 - x2 * (1.0 / 252 - x2 * (1.0 / 240 - x2 * (1.0 / 132 - x2 * (691.0 / 32760))))));
    return r;
}

enum class Character { ChiMinus3, ChiMinus4 };

inline int character_value(Character chi, int n) {
    if (chi == Character::ChiMinus3) {
        int r = ((n % 3) + 3) % 3;
        return r == 1 ? 1 : r == 2 ? -1 : 0;
    }
    int r = ((n % 4) + 4) % 4;
    return r == 1 ? 1 : r == 3 ? -1 : 0;
}

inline int character_modulus(Character chi) { return chi == Character::ChiMinus3 ? 3 : 4; }

// L(chi, s) = q^{-s} sum_a chi(a) zeta(s, a/q), real s >= 1.
inline double dirichlet_L(Character chi, double s) {
    if (!(s >= 1.0)) throw DomainError("dirichlet_L needs s >= 1");
    const int q = character_modulus(chi);
    CompensatedSum<double> sum;
    for (int a = 1; a < q; ++a) {
        int c = character_value(chi, a);
        if (c == 0) continue;
        if (s == 1.0) sum.add(-c * digamma(static_cast<double>(a) / q) / q);
        else sum.add(c * hurwitz_zeta(s, static_cast<double>(a) / q) * std::pow(q, -s));
    }
    return sum.value();
}

namespace detail {

// Li_2 for |z| <= 1, Re z <= 1/2 via the Bernoulli series in u = -log(1-z).
inline cplx li2_bernoulli(cplx z) {
    cplx u = -std::log(1.0 - z);
    const auto& B = bernoulli_even();
    // Li2 = u - u^2/4 + sum_{j>=1} B_{2j} u^{2j+1} / (2j+1)!
    cplx sum = u - u * u / 4.0;
    cplx p = u;
    double fact = 1.0;
    cplx u2 = u * u;
    for (int j = 1; j < 40; ++j) {
        p *= u2;
        fact *= (2.0 * j) * (2.0 * j + 1.0);
        cplx t = B[static_cast<std::size_t>(j)] / fact * p;
        sum += t;
        if (std::abs(t) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

} // namespace detail

// Principal-branch dilogarithm on the whole plane.
inline cplx dilog(cplx z) {
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    if (z == cplx(1.0, 0.0)) return pi2_6;
    if (z == cplx{}) return 0.0;
    if (std::abs(z) > 1.0) {
        // Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2; on the cut z > 1 take the limit from Im z >= 0
        cplx w = -z;
        if (z.imag() == 0.0 && z.real() > 1.0) w = cplx(-z.real(), -0.0);
        cplx l = std::log(w);
        cplx inv = 1.0 / z;
        if (z.imag() == 0.0) inv = cplx(inv.real(), -0.0);
        return -dilog(inv) - pi2_6 - 0.5 * l * l;
    }
    if (z.real() > 0.5) {
        // Li2(z) = -Li2(1-z) + pi^2/6 - log z log(1-z)
        cplx w = 1.0 - z;
        if (w == cplx{}) return pi2_6;
        return -detail::li2_bernoulli(w) + pi2_6 - std::log(z) * std::log(w);
    }
    return detail::li2_bernoulli(z);
}

inline double dilog(double x) {
    if (x <= 1.0) return dilog(cplx(x, 0.0)).real();
    return dilog(cplx(x, 0.0)).real();
}

// Li_n(z), n >= 1, |z| <= 1 (n = 1, 2 anywhere off their branch cuts).
inline cplx polylog(int n, cplx z) {
    if (n < 1) throw DomainError("polylog order must be >= 1");
    if (n == 1) {
        if (z == cplx(1.0, 0.0)) throw DomainError("Li_1(1) diverges");
        return -std::log(1.0 - z);
    }
    if (n == 2) return dilog(z);
    if (std::abs(z) > 1.0 + 1e-12) throw DomainError("polylog of order >= 3 needs |z| <= 1");
    if (z == cplx(1.0, 0.0)) return riemann_zeta(n);
    if (std::abs(z) <= 0.5) {
        CompensatedSum<cplx> s;
        cplx p = z;
        for (int k = 1; k < 200; ++k) {
            cplx t = p / std::pow(static_cast<double>(k), n);
            s.add(t);
            if (std::abs(t) < 1e-18 * std::abs(s.value())) break;
            p *= z;
        }
        return s.value();
    }
    // sum_{k != n-1} zeta(n-k) mu^k/k! + mu^{n-1}/(n-1)! (H_{n-1} - log(-mu)), mu = log z
    cplx mu = std::log(z);
    CompensatedSum<cplx> s;
    double harm = 0.0;
    for (int k = 1; k < n; ++k) harm += 1.0 / k;
    cplx p = 1.0;
    double fact = 1.0;
    for (int k = 0; k < 120; ++k) {
        if (k > 0) {
            p *= mu;
            fact *= k;
        }
        cplx t;
        if (k == n - 1) t = p / fact * (harm - std::log(-mu));
        else t = zeta_any_integer(n - k) / fact * p;
        s.add(t);
        // zeta vanishes at negative even integers, so a zero term says nothing about the tail
        if (k > n + 2 && t != cplx{} && std::abs(t) < 1e-18 * std::max(1.0, std::abs(s.value()))) break;
    }
    return s.value();
}

inline double polylog(int n, double x) { return polylog(n, cplx(x, 0.0)).real(); }

} // namespace mahler

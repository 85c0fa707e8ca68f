#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "specfun.hpp"
#include "summation.hpp"

namespace mahler {

template <typename T>
struct HypergeometricValue {
    T value{};
    double tail_bound = 0.0;
    long terms = 0;
};

namespace detail {

inline std::optional<long> terminating_at(double a) {
    double r = std::round(a);
    if (r <= 0.0 && std::abs(a - r) < 1e-12) return static_cast<long>(-r);
    return std::nullopt;
}
inline std::optional<long> terminating_at(const Rational& a) {
    if (a.is_integer() && a.num() <= 0) return -a.num();
    return std::nullopt;
}
inline double as_double(double x) { return x; }
inline double as_double(const Rational& x) { return x.to_double(); }

} // namespace detail

// pFq(a; b; z) = sum_j prod (a_i)_j / prod (b_i)_j z^j / j!, with (a)_j = a (a+1) ... (a+j-1).
template <typename T>
HypergeometricValue<T> hyp_pFq_detail(const std::vector<T>& upper, const std::vector<T>& lower, const T& z) {
    std::optional<long> stop;
    for (const T& a : upper) {
        auto t = detail::terminating_at(a);
        if (t && (!stop || *t < *stop)) stop = t;
    }
    for (const T& b : lower) {
        auto t = detail::terminating_at(b);
        if (t && (!stop || *stop > *t)) throw DomainError("lower hypergeometric parameter hits a pole");
    }
    const double zd = detail::as_double(z);
    if (!stop && zd != 0.0) {
        if constexpr (!std::is_floating_point_v<T>) throw DomainError("exact hypergeometric series must terminate");
        if (upper.size() > lower.size() + 1) throw DomainError("pFq with p > q+1 diverges");
        if (upper.size() == lower.size() + 1 && !(std::abs(zd) < 1.0))
            throw DomainError("pFq series needs |z| < 1");
    }
    HypergeometricValue<T> r;
    T term{1};
    if constexpr (std::is_floating_point_v<T>) {
        CompensatedSum<double> sum;
        sum.add(1.0);
        const long cap = stop ? *stop : 5000000;
        long j = 0;
        for (; j < cap; ++j) {
            double ratio = zd / (j + 1);
            for (const T& a : upper) ratio *= (a + j);
            for (const T& b : lower) ratio /= (b + j);
            term *= ratio;
            sum.add(term);
            if (!stop && j > 4) {
                // the term ratio tends to z (or 0); bound the geometric remainder
                double next = zd / (j + 2);
                for (const T& a : upper) next *= (a + j + 1);
                for (const T& b : lower) next /= (b + j + 1);
                double rho = std::abs(next);
                if (rho < 1.0) {
                    double tail = std::abs(term) * rho / (1.0 - rho);
                    if (tail <= 1e-17 * std::abs(sum.value()) || tail == 0.0) {
                        r.tail_bound = tail;
                        ++j;
                        break;
                    }
                }
            }
        }
        if (!stop && j >= cap) throw ConvergenceError("hypergeometric series did not converge");
        r.value = sum.value();
        r.terms = j + 1;
    } else {
        T sum{1};
        const long last = stop ? *stop : 0;
        for (long j = 0; j < last; ++j) {
            T ratio = z / T(j + 1);
            for (const T& a : upper) ratio *= (a + T(j));
            for (const T& b : lower) ratio /= (b + T(j));
            term *= ratio;
            sum += term;
        }
        r.value = sum;
        r.terms = last + 1;
    }
    return r;
}

template <typename T>
T hyp_pFq(const std::vector<T>& upper, const std::vector<T>& lower, const T& z) {
    return hyp_pFq_detail<T>(upper, lower, z).value;
}

// sum_{k>=1} C(2k,k) t^k / k^2 in closed form, |t| <= 1/4.
inline double central_binom_dilog(double t) {
    if (!(std::abs(t) <= 0.25)) throw DomainError("central_binom_dilog needs |t| <= 1/4");
    double r = std::sqrt(1.0 - 4.0 * t);
    double l = std::log((1.0 + r) / 2.0);
    // (1 - r)/2 written without cancellation
    double small = 2.0 * t / (1.0 + r);
    return 2.0 * dilog(small) - l * l;
}

// The same sum term by term; returns the partial sum over k <= n.
inline double central_binom_series(double t, long n) {
    CompensatedSum<double> s;
    double c = 1.0;  // C(2k,k) t^k
    for (long k = 1; k <= n; ++k) {
        c *= t * (2.0 * (2 * k - 1)) / static_cast<double>(k);
        s.add(c / (static_cast<double>(k) * static_cast<double>(k)));
    }
    return s.value();
}

} // namespace mahler

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "errors.hpp"
#include "specfun.hpp"
#include "summation.hpp"

namespace mahler {

// zeta(b_1,...,b_h) = sum_{l_1 < ... < l_h} prod l_i^{-b_i}; admissible when b_h >= 2.
struct MZVIndex {
    std::vector<int> parts;

    explicit MZVIndex(std::vector<int> p) : parts(std::move(p)) {
        if (parts.empty()) throw DomainError("MZV index must be nonempty");
        for (int b : parts)
            if (b < 1) throw DomainError("MZV parts must be >= 1");
        if (parts.back() < 2) throw DomainError("MZV index is not admissible (last part must be >= 2)");
    }
    int weight() const {
        int w = 0;
        for (int b : parts) w += b;
        return w;
    }
    int depth() const { return static_cast<int>(parts.size()); }
};

namespace detail {

// I(x; w) = integral over 0 < t_1 < ... < t_m < x of the forms w_1 ... w_m with
// w = 1 -> dt/(1-t), 0 -> dt/t. For w starting with 1 and blocks 1 0^{c_i - 1} this is
// sum_{n_1 < ... < n_k} x^{n_k} / prod n_i^{c_i}.
inline double iterated_at(double x, std::span<const int> word) {
    if (word.empty()) return 1.0;
    if (word.front() != 1) throw DomainError("iterated integral word must start with 1");
    std::vector<int> c;
    for (int w : word) {
        if (w == 1) c.push_back(1);
        else ++c.back();
    }
    const int N = 100;
    std::vector<double> prev(N + 1, 1.0);
    std::vector<double> cur(N + 1, 0.0);
    const std::size_t m = c.size();
    for (std::size_t d = 0; d < m; ++d) {
        CompensatedSum<double> acc;
        double xp = 1.0;
        cur[0] = 0.0;
        for (int n = 1; n <= N; ++n) {
            double inner = d == 0 ? 1.0 : prev[static_cast<std::size_t>(n - 1)];
            double t = inner / std::pow(static_cast<double>(n), c[d]);
            if (d + 1 == m) {
                xp *= x;
                t *= xp;
            }
            acc.add(t);
            cur[static_cast<std::size_t>(n)] = acc.value();
        }
        std::swap(prev, cur);
    }
    return prev[N];
}

} // namespace detail

// Multiple zeta value by splitting the iterated integral at 1/2; each piece is a
// geometrically convergent nested sum.
inline double mzv(const MZVIndex& idx) {
    if (idx.depth() == 1) return riemann_zeta(idx.parts[0]);
    std::vector<int> word;
    for (int b : idx.parts) {
        word.push_back(1);
        for (int i = 1; i < b; ++i) word.push_back(0);
    }
    const std::size_t n = word.size();
    CompensatedSum<double> total;
    std::vector<int> dual;
    for (std::size_t j = 0; j <= n; ++j) {
        dual.clear();
        for (std::size_t i = n; i-- > j;) dual.push_back(1 - word[i]);
        double left = detail::iterated_at(0.5, std::span<const int>(word.data(), j));
        double right = detail::iterated_at(0.5, dual);
        total.add(left * right);
    }
    return total.value();
}

inline double mzv(std::vector<int> parts) { return mzv(MZVIndex(std::move(parts))); }

struct TruncatedMZV {
    double value = 0.0;
    double tail_bound = 0.0;
    long cutoff = 0;
};

// Direct nested summation up to N with the bound depth (1+log N)^{depth-1} N^{1-b_h}.
inline TruncatedMZV mzv_truncated(const MZVIndex& idx, long N) {
    const std::size_t h = idx.parts.size();
    std::vector<double> prev(static_cast<std::size_t>(N) + 1, 1.0);
    std::vector<double> cur(static_cast<std::size_t>(N) + 1, 0.0);
    for (std::size_t d = 0; d < h; ++d) {
        CompensatedSum<double> acc;
        cur[0] = 0.0;
        for (long l = 1; l <= N; ++l) {
            double inner = d == 0 ? 1.0 : prev[static_cast<std::size_t>(l - 1)];
            acc.add(inner * std::pow(static_cast<double>(l), -idx.parts[d]));
            cur[static_cast<std::size_t>(l)] = acc.value();
        }
        std::swap(prev, cur);
    }
    TruncatedMZV r;
    r.value = prev[static_cast<std::size_t>(N)];
    r.cutoff = N;
    double dn = static_cast<double>(N);
    r.tail_bound = static_cast<double>(h) * std::pow(1.0 + std::log(dn), static_cast<double>(h) - 1.0) *
                   std::pow(dn, 1.0 - idx.parts.back());
    return r;
}

// Doubles N from 1000 until the bound meets tol or N reaches the cap.
inline TruncatedMZV mzv_truncated_adaptive(const MZVIndex& idx, double tol, long cap = 1000000) {
    long N = 1000;
    while (true) {
        double dn = static_cast<double>(N);
        double bound = static_cast<double>(idx.parts.size()) *
                       std::pow(1.0 + std::log(dn), static_cast<double>(idx.parts.size()) - 1.0) *
                       std::pow(dn, 1.0 - idx.parts.back());
        if (bound <= tol || N >= cap) return mzv_truncated(idx, std::min(N, cap));
        N *= 2;
    }
}

} // namespace mahler

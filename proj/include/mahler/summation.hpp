#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "errors.hpp"

namespace mahler {

// Neumaier compensated sum.
template <typename T>
class CompensatedSum {
public:
    void add(const T& x) {
        if constexpr (std::is_floating_point_v<T>) {
            T t = sum_ + x;
            if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
            else comp_ += (x - t) + sum_;
            sum_ = t;
        } else {
            re_.add(x.real());
            im_.add(x.imag());
        }
    }
    CompensatedSum& operator+=(const T& x) {
        add(x);
        return *this;
    }
    T value() const {
        if constexpr (std::is_floating_point_v<T>) return sum_ + comp_;
        else return T(re_.value(), im_.value());
    }

private:
    T sum_{};
    T comp_{};
    struct Empty {
        void add(double) {}
        double value() const { return 0; }
    };
    using Part = std::conditional_t<std::is_floating_point_v<T>, Empty, CompensatedSum<double>>;
    Part re_{};
    Part im_{};
};

namespace detail {

// Solve A x = b in place (Gaussian elimination with partial pivoting).
inline std::vector<long double> solve_linear(std::vector<std::vector<long double>> a,
                                             std::vector<long double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        if (a[col][col] == 0.0L) throw ConvergenceError("singular extrapolation system");
        for (std::size_t r = col + 1; r < n; ++r) {
            long double f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<long double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        long double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

} // namespace detail

// Limit of partial sums S_K whose error behaves like
//   sum_m K^{-(p0+m)} (b_m + a_m log K)
// (log terms only when with_log). Uses the last points of the data.
struct TailModel {
    double p0 = 1.0;
    int terms = 3;
    bool with_log = false;
};

inline double extrapolate_partial_sums(std::span<const double> K, std::span<const long double> S,
                                       const TailModel& model) {
    const std::size_t unknowns = 1 + static_cast<std::size_t>(model.terms) * (model.with_log ? 2 : 1);
    if (K.size() < unknowns || S.size() != K.size())
        throw DomainError("not enough partial sums for extrapolation");
    const std::size_t off = K.size() - unknowns;
    std::vector<std::vector<long double>> a(unknowns, std::vector<long double>(unknowns));
    std::vector<long double> b(unknowns);
    for (std::size_t r = 0; r < unknowns; ++r) {
        long double k = K[off + r];
        long double lk = std::log(k);
        std::size_t c = 0;
        a[r][c++] = 1.0L;
        for (int m = 0; m < model.terms; ++m) {
            long double base = std::pow(k, -(static_cast<long double>(model.p0) + m));
            a[r][c++] = base;
            if (model.with_log) a[r][c++] = base * lk;
        }
        b[r] = S[off + r];
    }
    return static_cast<double>(detail::solve_linear(std::move(a), std::move(b))[0]);
}

// Polynomial extrapolation to h = 0 (Neville).
template <typename T>
T neville_at_zero(std::span<const double> h, std::span<const T> y) {
    std::vector<T> p(y.begin(), y.end());
    const std::size_t n = p.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            p[i] = (h[i + m] * p[i] - h[i] * p[i + 1]) / (h[i + m] - h[i]);
    return p[0];
}

} // namespace mahler

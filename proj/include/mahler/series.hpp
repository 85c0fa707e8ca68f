#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "summation.hpp"

namespace mahler {

// Coefficients c_0..c_N of a power series truncated at order N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order = 12) : c_(static_cast<std::size_t>(checked(order)) + 1, 0.0) {}
    TruncatedSeries(int order, std::vector<double> coeffs) : TruncatedSeries(order) {
        for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    double operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    double& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    std::span<const double> coeffs() const noexcept { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
        return r;
    }
    friend TruncatedSeries operator*(double s, const TruncatedSeries& a) {
        TruncatedSeries r = a;
        for (double& v : r.c_) v *= s;
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) {
            CompensatedSum<double> s;
            for (int k = 0; k <= n; ++k) s.add(a[k] * b[n - k]);
            r[n] = s.value();
        }
        return r;
    }

    double evaluate(double x) const {
        double v = 0.0;
        for (int k = order(); k >= 0; --k) v = v * x + c_[static_cast<std::size_t>(k)];
        return v;
    }

private:
    static int checked(int order) {
        if (order < 0) throw DomainError("series order must be >= 0");
        return order;
    }
    std::vector<double> c_;
};

// exp(a) for a with a_0 = 0, via n b_n = sum_{k=1}^n k a_k b_{n-k}.
inline TruncatedSeries exp_series(const TruncatedSeries& a) {
    if (a[0] != 0.0) throw DomainError("exp_series needs a zero constant term");
    const int N = a.order();
    TruncatedSeries b(N);
    b[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        CompensatedSum<double> s;
        for (int k = 1; k <= n; ++k) s.add(k * a[k] * b[n - k]);
        b[n] = s.value() / n;
    }
    return b;
}

// log(a) for a_0 > 0, via n a_0 c_n = n a_n - sum_{k=1}^{n-1} k c_k a_{n-k}.
inline TruncatedSeries log_series(const TruncatedSeries& a) {
    if (!(a[0] > 0.0)) throw DomainError("log_series needs a positive constant term");
    const int N = a.order();
    TruncatedSeries c(N);
    c[0] = std::log(a[0]);
    for (int n = 1; n <= N; ++n) {
        CompensatedSum<double> s;
        s.add(n * a[n]);
        for (int k = 1; k < n; ++k) s.add(-k * c[k] * a[n - k]);
        c[n] = s.value() / (n * a[0]);
    }
    return c;
}

// m_k = k! c_k.
inline std::vector<double> mk_from_Z(const TruncatedSeries& z) {
    std::vector<double> m(static_cast<std::size_t>(z.order()) + 1);
    double f = 1.0;
    for (int k = 0; k <= z.order(); ++k) {
        if (k > 0) f *= k;
        m[static_cast<std::size_t>(k)] = f * z[k];
    }
    return m;
}

// Series in (s,t) with total degree <= N, stored triangularly.
class BivariateSeries {
public:
    explicit BivariateSeries(int order = 12) : order_(order) {
        if (order < 0) throw DomainError("series order must be >= 0");
        c_.assign(static_cast<std::size_t>((order + 1) * (order + 2) / 2), 0.0);
    }
    int order() const noexcept { return order_; }
    double coeff(int i, int j) const {
        if (i < 0 || j < 0 || i + j > order_) throw DomainError("coefficient beyond series order");
        return c_[index(i, j)];
    }
    double& coeff(int i, int j) {
        if (i < 0 || j < 0 || i + j > order_) throw DomainError("coefficient beyond series order");
        return c_[index(i, j)];
    }

private:
    static std::size_t index(int i, int j) {
        int d = i + j;
        return static_cast<std::size_t>(d * (d + 1) / 2 + j);
    }
    int order_;
    std::vector<double> c_;
};

// exp via homogeneous parts: d B_d = sum_{k=1}^d k A_k B_{d-k}.
inline BivariateSeries exp_series(const BivariateSeries& a) {
    if (a.coeff(0, 0) != 0.0) throw DomainError("exp_series needs a zero constant term");
    const int N = a.order();
    BivariateSeries b(N);
    b.coeff(0, 0) = 1.0;
    for (int d = 1; d <= N; ++d)
        for (int i = 0; i <= d; ++i) {
            const int j = d - i;
            CompensatedSum<double> s;
            for (int k = 1; k <= d; ++k)
                // A_k B_{d-k}, coefficient of s^i t^j
                for (int ai = std::max(0, i - (d - k)); ai <= std::min(i, k); ++ai) {
                    int aj = k - ai;
                    int bi = i - ai, bj = j - aj;
                    if (bj < 0 || bi < 0) continue;
                    s.add(k * a.coeff(ai, aj) * b.coeff(bi, bj));
                }
            b.coeff(i, j) = s.value() / d;
        }
    return b;
}

inline double harmonic(long n) {
    if (n < 0) throw DomainError("harmonic needs n >= 0");
    CompensatedSum<double> s;
    for (long k = n; k >= 1; --k) s.add(1.0 / static_cast<double>(k));
    return s.value();
}

struct BinomialBasisMeasures {
    double m1 = 0.0;               // m(1 + lambda P)
    double m2 = 0.0;               // m_2(1 + lambda P)
    std::vector<double> mj;        // m_j, j = 0..jmax
    double tail_bound = 0.0;
    int order = 0;
};

// From Z(k,P), k = 0..order, to the measures of 1 + lambda P:
//   m_j(1 + lambda P) = j! sum_K (-1)^{K-j} e_{j-1}(1, 1/2, ..., 1/(K-1)) / K * Z(K,P) lambda^K.
// p_max bounds |P| on the torus; |lambda| p_max must be < 1.
inline BinomialBasisMeasures binomial_basis_to_mm(std::span<const double> zk, double lambda, int order,
                                                   int jmax = 4, std::optional<double> p_max = std::nullopt) {
    if (order < 1 || static_cast<std::size_t>(order) >= zk.size())
        throw DomainError("binomial_basis_to_mm needs Z(k,P) for k = 0..order");
    if (p_max && !(std::abs(lambda) * *p_max < 1.0))
        throw DomainError("lambda outside the convergence disk");
    if (jmax < 2) jmax = 2;
    BinomialBasisMeasures r;
    r.order = order;
    r.mj.assign(static_cast<std::size_t>(jmax) + 1, 0.0);
    r.mj[0] = 1.0;
    // e[i] = e_i(1, 1/2, ..., 1/(K-1)) updated as K grows
    std::vector<double> e(static_cast<std::size_t>(jmax) + 1, 0.0);
    e[0] = 1.0;
    std::vector<CompensatedSum<double>> acc(static_cast<std::size_t>(jmax) + 1);
    double lp = 1.0;
    double last = 0.0, before = 0.0;
    for (int K = 1; K <= order; ++K) {
        if (K >= 2)
            for (int i = jmax; i >= 1; --i) e[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i - 1)] / (K - 1);
        lp *= lambda;
        double base = zk[static_cast<std::size_t>(K)] * lp / K;
        for (int j = 1; j <= jmax; ++j) {
            double sign = ((K - j) % 2 == 0) ? 1.0 : -1.0;
            acc[static_cast<std::size_t>(j)].add(sign * e[static_cast<std::size_t>(j - 1)] * base);
        }
        before = last;
        last = std::abs(base) * (1.0 + e[static_cast<std::size_t>(jmax - 1)]);
    }
    double f = 1.0;
    for (int j = 1; j <= jmax; ++j) {
        f *= j;
        r.mj[static_cast<std::size_t>(j)] = f * acc[static_cast<std::size_t>(j)].value();
    }
    r.m1 = r.mj[1];
    r.m2 = r.mj[2];
    // geometric estimate of the remainder from the last two terms
    double q = before > 0.0 ? last / before : 1.0;
    r.tail_bound = q < 1.0 ? f * last * q / (1.0 - q) : std::numeric_limits<double>::infinity();
    return r;
}

} // namespace mahler

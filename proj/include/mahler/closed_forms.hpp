#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "hypergeometric.hpp"
#include "laurent.hpp"
#include "mpolylog.hpp"
#include "mzv.hpp"
#include "parse.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "roots.hpp"
#include "series.hpp"
#include "specfun.hpp"
#include "summation.hpp"

namespace mahler {

// A catalogue value with the metadata needed for honest error budgets.
struct Evaluation {
    double value = 0.0;
    std::string method;
    double tail_bound = 0.0;
    long terms = 0;
    std::optional<Rational> exact;
};

struct CatalogueEntry {
    std::string_view id;
    std::string_view summary;
};

// Stable kebab-case identifiers; the verifier cites these as paper_ref.
inline constexpr std::array<CatalogueEntry, 27> catalogue{{
    {"mk-one-minus-x", "m_k(1-x) as a signed sum of multiple zeta values"},
    {"symmetrized-mzv", "sum of zeta(b_sigma) over all orderings via set partitions"},
    {"ohno-zagier-series", "generating series of 4^{-h} zeta(b_1..b_h) over compositions"},
    {"mm-pair-linear", "m(1-x, 1-e^{2 pi i a} x) = (pi^2/2)(a^2 - a + 1/6)"},
    {"dilog-pair", "m(1-ax, 1-bx) through Re Li_2"},
    {"m2-one-var", "m_2 of a one-variable polynomial from its roots"},
    {"mm-triple-linear", "m(1-x, 1-e^{2 pi i a} x, 1-e^{2 pi i b} x) as double cosine series"},
    {"z-x-minus-1", "Z(s, x-1) = Gamma(s+1)/Gamma(s/2+1)^2 and its exp series"},
    {"z-pair", "Z(s,t; x-1, x+1) as a Gamma ratio"},
    {"sin-cos-log-moments", "m(x-1 (k times), x+1 (l times)) from the two-variable exp series"},
    {"z-4cycle", "Z(s, x+1/x+y+1/y+c) for c > 4, series and 3F2 forms"},
    {"z-x-y-c", "Z(s, x+y+c) for c >= 2"},
    {"m2-x-y-c", "m_2(x+y+c) for c >= 2"},
    {"m3-x-y-c", "m_3(x+y+c) for c >= 2"},
    {"i-double-series", "sum_k C(2k,k) H_{k-1} / (k^2 4^k) in closed form"},
    {"central-binom-dilog", "sum_k C(2k,k) t^k / k^2 through Li_2"},
    {"m2-x-plus-y-plus-1", "published value 5 pi^2/54 for m_2(x+y+1) and its reductions"},
    {"m2-smyth2", "published polylog value of m_2(1+x+y(1-x))"},
    {"smyth-xy1", "m(x+y+1) = (3 sqrt 3 / 4 pi) L(chi_-3, 2)"},
    {"smyth-2", "m(1-x+y(1+x)) = (2/pi) L(chi_-4, 2)"},
    {"mpolylog-table", "length 2 and 3 multiple polylog reductions at +-1 and sixth roots of unity"},
    {"mzv-stuffle", "zeta(a) zeta(b) = zeta(a,b) + zeta(b,a) + zeta(a+b)"},
    {"zeta-mm-properties", "Z(s, lambda P) scaling, Z(s,P) = Z(s/2, P Pbar), binomial expansion of Z(s,1+lambda P)"},
    {"dyson-z", "Z(k, P_N) = (Nk)!/(k!)^N"},
    {"dyson-hyp", "Z(s, 1+lambda P_N) as a binomial series and as NF_{N-1}"},
    {"mm-numeric", "torus quadrature of m_k and Z"},
    {"mm-binomial-basis", "m_j(1+lambda P) from the values Z(k,P)"},
}};

inline const CatalogueEntry* find_catalogue_entry(std::string_view id) {
    for (const auto& e : catalogue)
        if (e.id == id) return &e;
    return nullptr;
}

namespace detail {

inline constexpr double pi = std::numbers::pi;

// Sum of t_k for k = 0, 1, ... from a generator; stops on an exact zero term or when
// the geometric remainder bound drops below the working precision.
template <typename Next>
Evaluation sum_geometric(Next&& next, std::string method, long cap = 2000000) {
    CompensatedSum<double> sum;
    double prev = 0.0;
    Evaluation e;
    e.method = std::move(method);
    for (long k = 0; k < cap; ++k) {
        double t = next(k);
        sum.add(t);
        e.terms = k + 1;
        if (t == 0.0 && k > 0) {
            e.tail_bound = 0.0;
            e.value = sum.value();
            return e;
        }
        if (k >= 4 && prev != 0.0) {
            double rho = std::abs(t / prev);
            if (rho < 0.999) {
                double tail = std::abs(t) * rho / (1.0 - rho);
                if (tail <= 1e-17 * std::abs(sum.value()) || tail < 1e-300) {
                    e.tail_bound = tail;
                    e.value = sum.value();
                    return e;
                }
            }
        }
        prev = t;
    }
    throw ConvergenceError("series did not converge within the term cap");
}

// Sum of an algebraically convergent series whose remainder follows `model`; the partial
// sums at K = 64 2^i are extrapolated and the spread of two model orders is the bound.
template <typename Next>
Evaluation sum_algebraic(Next&& next, TailModel model, std::string method, long kmax = 131072) {
    std::vector<double> K;
    std::vector<long double> S;
    long double s = 0.0L, c = 0.0L;
    long mark = 64;
    for (long k = 0; k <= kmax; ++k) {
        // Kahan in long double
        long double y = static_cast<long double>(next(k)) - c;
        long double t = s + y;
        c = (t - s) - y;
        s = t;
        if (k + 1 == mark) {
            K.push_back(static_cast<double>(mark));
            S.push_back(s);
            mark *= 2;
        }
    }
    Evaluation e;
    e.method = std::move(method);
    e.terms = kmax + 1;
    e.value = extrapolate_partial_sums(K, S, model);
    TailModel lower = model;
    lower.terms = std::max(1, model.terms - 1);
    double alt = extrapolate_partial_sums(K, S, lower);
    e.tail_bound = std::abs(e.value - alt) + 4e-16 * std::abs(e.value);
    return e;
}

// Generalized binomial coefficient binom(s, k) for real s.
inline double binom_real(double s, long k) {
    double r = 1.0;
    for (long i = 0; i < k; ++i) r *= (s - static_cast<double>(i)) / static_cast<double>(i + 1);
    return r;
}

inline const std::vector<std::vector<int>>& compositions_min2(int k) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<int>>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int b = 2; b <= left; ++b) {
            cur.push_back(b);
            rec(left - b);
            cur.pop_back();
        }
    };
    rec(k);
    return cache.emplace(k, std::move(out)).first->second;
}

} // namespace detail

// Compositions of k with parts >= 2, lexicographic.
inline std::vector<std::vector<int>> compositions_at_least_two(int k) {
    if (k < 0) throw DomainError("k must be >= 0");
    return detail::compositions_min2(k);
}

enum class MkMethod { MzvSum, ExpSeries };

// Z(s, x-1) = exp(sum_{k>=2} (-1)^k (1 - 2^{1-k}) zeta(k)/k s^k).
inline TruncatedSeries z_x_minus_1_series(int order) {
    TruncatedSeries a(order);
    for (int k = 2; k <= order; ++k)
        a[k] = ((k % 2 == 0) ? 1.0 : -1.0) * (1.0 - std::ldexp(1.0, 1 - k)) * riemann_zeta(k) / k;
    return exp_series(a);
}

inline double mk_one_minus_x(int k, MkMethod method) {
    if (k < 0) throw DomainError("k must be >= 0");
    if (method == MkMethod::MzvSum) {
        if (k > 10) throw DomainError("mzv-sum supports k <= 10");
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= i;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        CompensatedSum<double> s;
        for (const auto& b : detail::compositions_min2(k)) {
            if (b.empty()) {
                s.add(1.0);
                continue;
            }
            s.add(sign * fact * std::ldexp(1.0, -2 * static_cast<int>(b.size())) * mzv(b));
        }
        return s.value();
    }
    if (k > 12) throw DomainError("exp-series supports k <= 12");
    return mk_from_Z(z_x_minus_1_series(std::max(k, 1)))[static_cast<std::size_t>(k)];
}

// Sum over all h! orderings, computed from set partitions.
inline double symmetrized_mzv(const std::vector<int>& bs) {
    if (bs.empty()) throw DomainError("symmetrized_mzv needs a nonempty list");
    for (int b : bs)
        if (b < 2) throw DomainError("symmetrized_mzv entries must be >= 2");
    const std::size_t h = bs.size();
    // restricted growth strings enumerate set partitions
    std::vector<int> block(h, 0);
    CompensatedSum<double> total;
    while (true) {
        int l = *std::max_element(block.begin(), block.end()) + 1;
        std::vector<int> weight(static_cast<std::size_t>(l), 0), size(static_cast<std::size_t>(l), 0);
        for (std::size_t i = 0; i < h; ++i) {
            weight[static_cast<std::size_t>(block[i])] += bs[i];
            ++size[static_cast<std::size_t>(block[i])];
        }
        double term = ((h - static_cast<std::size_t>(l)) % 2 == 0) ? 1.0 : -1.0;
        for (int s = 0; s < l; ++s) {
            for (int f = 2; f < size[static_cast<std::size_t>(s)]; ++f) term *= f;
            term *= riemann_zeta(weight[static_cast<std::size_t>(s)]);
        }
        total.add(term);
        // next restricted growth string
        std::size_t i = h;
        while (i-- > 1) {
            int mx = *std::max_element(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(i));
            if (block[i] <= mx) {
                ++block[i];
                std::fill(block.begin() + static_cast<std::ptrdiff_t>(i) + 1, block.end(), 0);
                break;
            }
        }
        if (i == 0 || i > h) break;
    }
    return total.value();
}

// exp(sum_{t>=2} zeta(t)/t (1 - 2^{1-t}) x^t).
inline TruncatedSeries ohno_zagier_series(int order) {
    TruncatedSeries a(order);
    for (int t = 2; t <= order; ++t) a[t] = riemann_zeta(t) / t * (1.0 - std::ldexp(1.0, 1 - t));
    return exp_series(a);
}

inline double mm_pair_linear(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("mm_pair_linear needs alpha in [0,1]");
    return detail::pi * detail::pi / 2.0 * (alpha * alpha - alpha + 1.0 / 6.0);
}

// m(1 - a x, 1 - b x) = log+|a| log+|b| + 1/2 Re Li_2(u_a conj(u_b)), u = a or 1/conj(a).
inline double dilog_pair(cplx a, cplx b) {
    auto fold = [](cplx z) { return std::abs(z) <= 1.0 ? z : z / std::norm(z); };
    auto logp = [](cplx z) { return std::max(0.0, std::log(std::abs(z))); };
    return logp(a) * logp(b) + 0.5 * dilog(fold(a) * std::conj(fold(b))).real();
}

inline double m2_one_var(const LaurentPolynomial& P) {
    auto f = factor_one_var(P);
    const double lc = std::log(std::abs(f.lead));
    CompensatedSum<double> s;
    s.add(lc * lc);
    for (const cplx& a : f.roots) s.add(2.0 * lc * std::max(0.0, std::log(std::abs(a))));
    for (const cplx& a : f.roots)
        for (const cplx& b : f.roots) s.add(dilog_pair(a, b));
    return s.value();
}

namespace detail {

// T(a,b) = sum_{p,q>=1} cos 2pi(pa + qb) / (pq(p+q)) summed over p+q <= N using
// 1/(pq) = (1/n)(1/p + 1/q).
inline double double_cosine_sum(double a, double b, long N) {
    CompensatedSum<double> total;
    cplx A1{}, A2{};  // prefix sums of e(p(a-b))/p and e(p(b-a))/p
    for (long n = 2; n <= N; ++n) {
        const double m = static_cast<double>(n - 1);
        A1 += LaurentPolynomial::unit(std::fmod(m * (a - b), 1.0)) / m;
        A2 += LaurentPolynomial::unit(std::fmod(m * (b - a), 1.0)) / m;
        const double dn = static_cast<double>(n);
        cplx v = LaurentPolynomial::unit(std::fmod(dn * b, 1.0)) * A1 + LaurentPolynomial::unit(std::fmod(dn * a, 1.0)) * A2;
        total.add(v.real() / (dn * dn));
    }
    return total.value();
}

} // namespace detail

inline Evaluation mm_triple_linear(double alpha, double beta, long terms = 1000000) {
    if (terms < 2) throw DomainError("terms must be >= 2");
    Evaluation e;
    e.method = "double-cosine-series";
    e.terms = terms;
    e.value = -0.25 * (detail::double_cosine_sum(alpha, beta, terms) + detail::double_cosine_sum(beta, beta - alpha, terms) +
                       detail::double_cosine_sum(alpha, alpha - beta, terms));
    const double N = static_cast<double>(terms);
    e.tail_bound = 1.5 * (2.0 + std::log(N)) / N;
    return e;
}

inline double Z_x_minus_1(double s) {
    if (!(s > -1.0)) throw DomainError("Z(s, x-1) needs s > -1");
    return std::exp(log_gamma(s + 1.0) - 2.0 * log_gamma(s / 2.0 + 1.0));
}

// Z(2m, x-1) = C(2m, m).
inline Rational Z_x_minus_1_exact(unsigned two_m) {
    if (two_m % 2 != 0) throw DomainError("exact Z(s, x-1) needs an even integer s");
    return binomial(Rational(static_cast<std::int64_t>(two_m)), two_m / 2);
}

inline double Z_pair(double s, double t) {
    if (!(s > -1.0) || !(t > -1.0)) throw DomainError("Z_pair needs s, t > -1");
    return std::exp(log_gamma(s + 1.0) + log_gamma(t + 1.0) - log_gamma(s / 2.0 + 1.0) - log_gamma(t / 2.0 + 1.0) -
                    log_gamma((s + t) / 2.0 + 1.0));
}

// log Z(s,t) = sum_{n>=2} (-1)^n zeta(n)/n [(1 - 2^{-n})(s^n + t^n) - 2^{-n}(s+t)^n].
inline BivariateSeries z_pair_series(int order) {
    BivariateSeries a(order);
    for (int n = 2; n <= order; ++n) {
        const double c = ((n % 2 == 0) ? 1.0 : -1.0) * riemann_zeta(n) / n;
        const double h = std::ldexp(1.0, -n);
        a.coeff(n, 0) += c * (1.0 - h);
        a.coeff(0, n) += c * (1.0 - h);
        double binom = 1.0;
        for (int i = 0; i <= n; ++i) {
            a.coeff(i, n - i) -= c * h * binom;
            binom = binom * (n - i) / (i + 1);
        }
    }
    return exp_series(a);
}

inline double sin_cos_log_moments(int k, int l) {
    if (k < 0 || l < 0) throw DomainError("moments need k, l >= 0");
    const int order = std::max(2, k + l);
    auto z = z_pair_series(order);
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    for (int i = 2; i <= l; ++i) f *= i;
    return f * z.coeff(k, l);
}

enum class SeriesForm { Series, Hypergeometric };

inline Evaluation Z_4cycle(double s, double c, SeriesForm form = SeriesForm::Series) {
    if (!(c > 4.0)) throw DomainError("Z_4cycle needs c > 4");
    const double cs = std::pow(c, s);
    if (form == SeriesForm::Hypergeometric) {
        auto h = hyp_pFq_detail<double>({-s / 2.0, (1.0 - s) / 2.0, 0.5}, {1.0, 1.0}, 16.0 / (c * c));
        return {cs * h.value, "3F2", cs * h.tail_bound, h.terms, std::nullopt};
    }
    // c^s sum_j binom(s,2j) C(2j,j)^2 c^{-2j}
    double t = 1.0;
    auto next = [&](long j) {
        if (j > 0) {
            const double jj = static_cast<double>(j - 1);
            const double cj = (2 * jj + 1) * (2 * jj + 2) / ((jj + 1) * (jj + 1));
            t *= (s - 2 * jj) * (s - 2 * jj - 1) / ((2 * jj + 1) * (2 * jj + 2)) * cj * cj / (c * c);
        }
        return t;
    };
    auto e = detail::sum_geometric(next, "binomial-series");
    e.value *= cs;
    e.tail_bound *= cs;
    return e;
}

// Exact Z(k, x+1/x+y+1/y+c) = sum_j C(k,2j) C(2j,j)^2 c^{k-2j} for integer k >= 0.
inline Rational Z_4cycle_exact(unsigned k, const Rational& c) {
    Rational sum;
    for (unsigned j = 0; 2 * j <= k; ++j) {
        Rational cj = binomial(Rational(2 * static_cast<std::int64_t>(j)), j);
        sum += binomial(Rational(static_cast<std::int64_t>(k)), 2 * j) * cj * cj * pow(c, k - 2 * j);
    }
    return sum;
}

inline Evaluation Z_x_y_c(double s, double c) {
    if (!(c >= 2.0)) throw DomainError("Z_x_y_c needs c >= 2");
    if (!(s > -1.0)) throw DomainError("Z_x_y_c needs s > -1");
    const double h = s / 2.0;
    const double cs = std::pow(c, s);
    double t = 1.0;
    // binom(s/2, j)^2 C(2j,j) c^{-2j}
    auto next = [&](long j) {
        if (j > 0) {
            const double jj = static_cast<double>(j - 1);
            const double r = (h - jj) / (jj + 1);
            t *= r * r * (2 * jj + 1) * (2 * jj + 2) / ((jj + 1) * (jj + 1)) / (c * c);
        }
        return t;
    };
    const bool terminating = s >= 0.0 && std::abs(h - std::round(h)) < 1e-15;
    Evaluation e;
    if (terminating || c > 2.0 + 1e-3) {
        e = detail::sum_geometric(next, terminating ? "terminating-series" : "series");
    } else {
        if (!(s > -0.5)) throw DomainError("at c = 2 the series needs s > -1/2");
        double t2 = 1.0;
        auto next2 = [&](long j) {
            if (j > 0) {
                const double jj = static_cast<double>(j - 1);
                const double r = (h - jj) / (jj + 1);
                t2 *= r * r * (2 * jj + 1) * (2 * jj + 2) / ((jj + 1) * (jj + 1)) / (c * c);
            }
            return t2;
        };
        e = detail::sum_algebraic(next2, TailModel{s + 0.5, 3, false}, "accelerated-series");
    }
    e.value *= cs;
    e.tail_bound *= cs;
    return e;
}

// Exact Z(2m, x+y+c) = sum_j C(m,j)^2 C(2j,j) c^{2m-2j}.
inline Rational Z_x_y_c_exact(unsigned two_m, const Rational& c) {
    if (two_m % 2 != 0) throw DomainError("exact Z(s, x+y+c) needs an even integer s");
    const unsigned m = two_m / 2;
    Rational sum;
    for (unsigned j = 0; j <= m; ++j) {
        Rational b = binomial(Rational(static_cast<std::int64_t>(m)), j);
        sum += b * b * binomial(Rational(2 * static_cast<std::int64_t>(j)), j) * pow(c, 2 * (m - j));
    }
    return sum;
}

enum class SumMethod { Dilog, Series };

namespace detail {

// A(c) = sum_{k>=1} C(2k,k) / (k^2 c^{2k}).
inline Evaluation central_binom_sum(double c) {
    const double t = 1.0 / (c * c);
    double b = 1.0;
    auto next = [&](long j) {
        const double k = static_cast<double>(j + 1);
        b *= t * 2.0 * (2.0 * k - 1.0) / k;
        return b / (k * k);
    };
    if (c > 2.0 + 1e-3) return sum_geometric(next, "series");
    return sum_algebraic(next, TailModel{1.5, 3, false}, "accelerated-series");
}

// B(c) = sum_{k>=2} C(2k,k) H_{k-1} / (k^2 c^{2k}).
inline Evaluation harmonic_binom_sum(double c) {
    const double t = 1.0 / (c * c);
    double b = 1.0, H = 0.0;
    auto next = [&](long j) {
        const double k = static_cast<double>(j + 1);
        b *= t * 2.0 * (2.0 * k - 1.0) / k;
        double v = b * H / (k * k);
        H += 1.0 / k;
        return v;
    };
    if (c > 2.0 + 1e-3) {
        // the first term is zero (H_0 = 0), so skip the exact-zero stop
        CompensatedSum<double> s;
        double prev = 0.0;
        Evaluation e;
        e.method = "series";
        for (long j = 0; j < 2000000; ++j) {
            double v = next(j);
            s.add(v);
            e.terms = j + 1;
            if (j > 4 && prev != 0.0) {
                double rho = std::abs(v / prev);
                if (rho < 0.999) {
                    double tail = std::abs(v) * rho / (1.0 - rho) * 1.01;
                    if (tail <= 1e-17 * std::abs(s.value())) {
                        e.tail_bound = tail;
                        e.value = s.value();
                        return e;
                    }
                }
            }
            prev = v;
        }
        throw ConvergenceError("series did not converge");
    }
    return sum_algebraic(next, TailModel{1.5, 3, true}, "accelerated-series");
}

} // namespace detail

inline Evaluation m2_x_y_c(double c, SumMethod method = SumMethod::Dilog) {
    if (!(c >= 2.0)) throw DomainError("m2_x_y_c needs c >= 2");
    const double lc = std::log(c);
    if (method == SumMethod::Dilog)
        return {lc * lc + 0.5 * central_binom_dilog(1.0 / (c * c)), "dilog", 0.0, 0, std::nullopt};
    auto a = detail::central_binom_sum(c);
    return {lc * lc + 0.5 * a.value, a.method, 0.5 * a.tail_bound, a.terms, std::nullopt};
}

inline Evaluation m3_x_y_c(double c, SumMethod method = SumMethod::Dilog) {
    if (!(c >= 2.0)) throw DomainError("m3_x_y_c needs c >= 2");
    const double lc = std::log(c);
    Evaluation a = method == SumMethod::Dilog
                       ? Evaluation{central_binom_dilog(1.0 / (c * c)), "dilog", 0.0, 0, std::nullopt}
                       : detail::central_binom_sum(c);
    auto b = detail::harmonic_binom_sum(c);
    Evaluation e;
    e.value = lc * lc * lc + 1.5 * lc * a.value - 1.5 * b.value;
    e.method = a.method + "+" + b.method;
    e.tail_bound = 1.5 * std::abs(lc) * a.tail_bound + 1.5 * b.tail_bound;
    e.terms = b.terms;
    return e;
}

enum class IMode { DirectSum, ClosedForm };

inline Evaluation I_double_series(IMode mode) {
    if (mode == IMode::DirectSum) return detail::harmonic_binom_sum(2.0);
    // (4/3) Li_1(-1)^3 + 2 Li_2(1) Li_1(-1) + (5/2) Li_3(1), Li_1(-1) = -log 2
    const double l1 = polylog(1, -1.0), l2 = polylog(2, 1.0), l3 = polylog(3, 1.0);
    return {4.0 / 3.0 * l1 * l1 * l1 + 2.0 * l2 * l1 + 2.5 * l3, "polylog", 0.0, 0, std::nullopt};
}

// The length-2 assembly of I before reduction to classical polylogs (increasing convention).
inline double I_from_multiple_polylogs() {
    auto Li = [](std::vector<int> s, std::vector<cplx> z) { return multiple_polylog(std::move(s), std::move(z), true).real(); };
    const double l1 = polylog(1, -1.0);
    return l1 * Li({1, 1}, {-1.0, -1.0}) - 4.5 * Li({2, 1}, {1.0, -1.0}) - 0.5 * Li({1, 2}, {-1.0, 1.0}) +
           l1 * Li({1, 1}, {1.0, -1.0}) - 5.0 * Li({2, 1}, {-1.0, -1.0}) - Li({1, 2}, {1.0, 1.0}) + l1 * l1 * l1 / 3.0 -
           4.0 * Li({1, 2}, {-1.0, -1.0}) - 4.0 * Li({1, 2}, {1.0, -1.0});
}

inline Rational dyson_Z(unsigned N, unsigned k) {
    if (N < 1) throw DomainError("dyson_Z needs N >= 1");
    Rational r(1);
    for (unsigned i = 1; i <= N; ++i) r *= binomial(Rational(static_cast<std::int64_t>(i) * k), k);
    return r;
}

inline double dyson_Z_double(unsigned N, unsigned k) {
    double r = 1.0;
    for (unsigned i = 1; i <= N; ++i) r *= std::exp(log_gamma(i * k + 1.0) - log_gamma(k + 1.0) - log_gamma((i - 1) * k + 1.0));
    return r;
}

// sum_{k<=order} binom(s,k) (Nk)!/(k!)^N lambda^k.
inline Evaluation dyson_hyp(double s, double lambda, unsigned N, int order) {
    if (N < 1) throw DomainError("dyson_hyp needs N >= 1");
    if (order < 0) throw DomainError("order must be >= 0");
    CompensatedSum<double> sum;
    double last = 0.0, before = 0.0;
    for (int k = 0; k <= order; ++k) {
        double t = detail::binom_real(s, k) * dyson_Z_double(N, static_cast<unsigned>(k)) * std::pow(lambda, k);
        sum.add(t);
        before = last;
        last = std::abs(t);
    }
    Evaluation e;
    e.value = sum.value();
    e.method = "binomial-series";
    e.terms = order + 1;
    double q = before > 0.0 ? last / before : 0.0;
    e.tail_bound = last == 0.0 ? 0.0 : (q < 1.0 ? last * q / (1.0 - q) : std::numeric_limits<double>::infinity());
    return e;
}

enum class DysonArgument { Derived, Printed };

// NF_{N-1}(-s, 1/N, ..., (N-1)/N; 1, ..., 1 | z) with z = -N^N lambda (derived) or lambda/N^N (printed).
inline double dyson_pFq(double s, double lambda, unsigned N, DysonArgument arg) {
    if (N < 1) throw DomainError("dyson_pFq needs N >= 1");
    std::vector<double> upper{-s}, lower;
    for (unsigned i = 1; i < N; ++i) {
        upper.push_back(static_cast<double>(i) / N);
        lower.push_back(1.0);
    }
    const double nn = std::pow(static_cast<double>(N), static_cast<double>(N));
    const double z = arg == DysonArgument::Derived ? -nn * lambda : lambda / nn;
    return hyp_pFq<double>(upper, lower, z);
}

// Published right side of m_2(1+x+y(1-x)), eight terms.
inline double m2_smyth2_printed() {
    const cplx i(0.0, 1.0);
    auto L = [](cplx a, cplx b) { return multiple_polylog({2, 1}, {a, b}, true); };
    const double pi = detail::pi;
    cplx v = 4.0 * i / pi * (L(-i, -i) - L(i, i)) + 6.0 * i / pi * (-L(-i, i) + L(i, -i)) + i / pi * (-L(1.0, i) + L(1.0, -i));
    return v.real() - 7.0 * riemann_zeta(2) / 16.0 + std::log(2.0) / pi * dirichlet_L(Character::ChiMinus4, 2.0);
}

// The same assembly with the two doubled integral terms halved.
inline double m2_smyth2_corrected() { return m2_smyth2_printed() / 2.0 + riemann_zeta(2) / 4.0; }

// pi^2/9 + Re (i/pi)(Li_{2,1}(w, wb) - Li_{2,1}(wb, w) - Li_{1,1,1}(1, w, wb) + Li_{1,1,1}(1, wb, w)).
inline double m2_x_plus_y_plus_1_polylog() {
    const cplx i(0.0, 1.0);
    const cplx w(0.5, std::sqrt(3.0) / 2.0), wb = std::conj(w);
    auto L = [](std::vector<int> s, std::vector<cplx> z) { return multiple_polylog(std::move(s), std::move(z), true); };
    const double pi = detail::pi;
    cplx v = i / pi * (L({2, 1}, {w, wb}) - L({2, 1}, {wb, w}) - L({1, 1, 1}, {1.0, w, wb}) + L({1, 1, 1}, {1.0, wb, w}));
    return pi * pi / 9.0 + v.real();
}

namespace detail {

inline AdaptiveOptions reduced_options() {
    AdaptiveOptions o;
    o.abs_tol = 1e-13;
    o.rel_tol = 1e-13;
    o.max_panels = 4000;
    return o;
}

} // namespace detail

struct ReducedIntegral {
    double value;
    double err_estimate;
};

// (1/2pi) int_{2pi/3}^{4pi/3} Li_2(4 cos^2(theta/2)) dtheta + pi^2/9, as displayed in the proof.
inline ReducedIntegral m2_x_plus_y_plus_1_printed_reduction() {
    auto f = [](double t) { return dilog(4.0 * std::cos(detail::pi * t) * std::cos(detail::pi * t)); };
    const double br[] = {0.5};
    auto r = integrate_adaptive<double>(f, 1.0 / 3.0, 2.0 / 3.0, br, detail::reduced_options());
    return {r.value + detail::pi * detail::pi / 9.0, r.err};
}

// (sqrt 3 / 2pi) int_0^1 (2 Li_2(s) - log^2(1-s)) / (1 - s + s^2) ds + pi^2/9.
inline ReducedIntegral m2_x_plus_y_plus_1_s_form() {
    auto f = [](double s) {
        double l = std::log1p(-s);
        return (2.0 * dilog(s) - l * l) / (1.0 - s + s * s);
    };
    const double br[] = {0.5};
    auto r = integrate_adaptive<double>(f, 0.0, 1.0, br, detail::reduced_options());
    const double k = std::sqrt(3.0) / (2.0 * detail::pi);
    return {k * r.value + detail::pi * detail::pi / 9.0, k * r.err};
}

// m_2(1-x+y(1+x)) reduced to one variable before any polylog manipulation:
// int_{|1-x|<=|1+x|} Li_2(|(1-x)/(1+x)|^2) + int_{|1-x|>=|1+x|} (log^2|1-x| - log^2|1+x|) + zeta(2)/2.
inline ReducedIntegral m2_smyth2_reduced() {
    auto f1 = [](double t) {
        cplx x = LaurentPolynomial::unit(t);
        return dilog(std::norm((1.0 - x) / (1.0 + x)));
    };
    auto f2 = [](double t) {
        cplx x = LaurentPolynomial::unit(t);
        double a = std::log(std::abs(1.0 - x)), b = std::log(std::abs(1.0 + x));
        return a * a - b * b;
    };
    const double b1[] = {0.0};
    const double b2[] = {0.5};
    auto r1 = integrate_adaptive<double>(f1, -0.25, 0.25, b1, detail::reduced_options());
    auto r2 = integrate_adaptive<double>(f2, 0.25, 0.75, b2, detail::reduced_options());
    return {r1.value + r2.value + riemann_zeta(2) / 2.0, r1.err + r2.err};
}

inline std::vector<std::string_view> paper_constant_names() {
    return {"m2-x-plus-y-plus-1", "m2-x-plus-y-plus-1-polylog", "m2-smyth2", "m2-smyth2-corrected", "smyth-xy1",
            "smyth-2", "m2-x-y-2", "m3-x-y-2", "i-double-series"};
}

inline double paper_constant(std::string_view name) {
    const double pi = detail::pi;
    if (name == "m2-x-plus-y-plus-1") return 5.0 * pi * pi / 54.0;
    if (name == "m2-x-plus-y-plus-1-polylog") return m2_x_plus_y_plus_1_polylog();
    if (name == "m2-smyth2") return m2_smyth2_printed();
    if (name == "m2-smyth2-corrected") return m2_smyth2_corrected();
    if (name == "smyth-xy1") return 3.0 * std::sqrt(3.0) / (4.0 * pi) * dirichlet_L(Character::ChiMinus3, 2.0);
    if (name == "smyth-2") return 2.0 / pi * dirichlet_L(Character::ChiMinus4, 2.0);
    if (name == "m2-x-y-2") return riemann_zeta(2) / 2.0;
    if (name == "m3-x-y-2") return 4.5 * std::log(2.0) * riemann_zeta(2) - 3.75 * riemann_zeta(3);
    if (name == "i-double-series") {
        const double l = std::log(2.0);
        return -4.0 / 3.0 * l * l * l - 2.0 * riemann_zeta(2) * l + 2.5 * riemann_zeta(3);
    }
    throw DomainError("unknown constant: " + std::string(name));
}

// Arguments of a catalogue lookup by name; each entry reads the fields it needs.
struct NamedArgs {
    std::optional<std::string> alpha, beta;  // complex literals such as "0.3+0.4i"
    std::optional<int> k, l, N, order;
    std::optional<long> terms;
    std::optional<double> s, t, c, lambda;
    std::optional<std::string> poly, method, mode;
    std::vector<int> bs;
};

struct NamedResult {
    std::string name;
    std::optional<double> value;
    std::vector<double> coefficients;  // series entries
    std::string method;
    double tail_bound = 0.0;
    long terms = 0;
    std::optional<std::string> exact;
};

inline std::vector<std::string_view> named_formulas() {
    return {"mk-one-minus-x", "symmetrized-mzv", "ohno-zagier-series", "mm-pair-linear", "dilog-pair", "m2-one-var",
            "mm-triple-linear", "z-x-minus-1", "z-pair", "sin-cos-log-moments", "z-4cycle", "z-x-y-c", "m2-x-y-c",
            "m3-x-y-c", "i-double-series", "central-binom-dilog", "m2-x-plus-y-plus-1", "m2-smyth2", "smyth-xy1",
            "smyth-2", "dyson-z", "dyson-hyp"};
}

namespace detail {

template <typename T>
T need(const std::optional<T>& v, const char* flag, std::string_view name) {
    if (!v) throw DomainError(std::string(name) + " needs --" + flag);
    return *v;
}

inline cplx complex_literal(const std::string& text) {
    auto p = parse_poly(text);
    if (!p.active_variables().empty()) throw DomainError("expected a number, got '" + text + "'");
    return p.constant_term().value();
}

inline std::string method_or(const NamedArgs& a, std::string fallback) { return a.method.value_or(std::move(fallback)); }

inline NamedResult from(std::string name, const Evaluation& e) {
    NamedResult r{std::move(name), e.value, {}, e.method, e.tail_bound, e.terms, std::nullopt};
    if (e.exact) r.exact = e.exact->to_string();
    return r;
}

inline NamedResult plain(std::string name, double v, std::string method) {
    return NamedResult{std::move(name), v, {}, std::move(method), 0.0, 0, std::nullopt};
}

} // namespace detail

// Evaluates a catalogue entry by its kebab-case name; underscores are accepted for dashes.
inline NamedResult evaluate_named(std::string name, const NamedArgs& a) {
    std::replace(name.begin(), name.end(), '_', '-');
    using detail::need;
    if (name == "mk-one-minus-x") {
        int k = need(a.k, "k", name);
        std::string m = detail::method_or(a, "mzv-sum");
        if (m != "mzv-sum" && m != "exp-series") throw DomainError("method must be mzv-sum or exp-series");
        return detail::plain(name, mk_one_minus_x(k, m == "mzv-sum" ? MkMethod::MzvSum : MkMethod::ExpSeries), m);
    }
    if (name == "symmetrized-mzv") return detail::plain(name, symmetrized_mzv(a.bs), "set-partitions");
    if (name == "ohno-zagier-series") {
        auto z = ohno_zagier_series(a.order.value_or(8));
        NamedResult r{name, std::nullopt, {z.coeffs().begin(), z.coeffs().end()}, "exp-series", 0.0, 0, std::nullopt};
        return r;
    }
    if (name == "mm-pair-linear") {
        const double al = detail::complex_literal(need(a.alpha, "alpha", name)).real();
        return detail::plain(name, mm_pair_linear(al), "closed-form");
    }
    if (name == "dilog-pair")
        return detail::plain(name,
                             dilog_pair(detail::complex_literal(need(a.alpha, "alpha", name)),
                                        detail::complex_literal(need(a.beta, "beta", name))),
                             "dilog");
    if (name == "m2-one-var") return detail::plain(name, m2_one_var(parse_poly(need(a.poly, "poly", name))), "roots+dilog");
    if (name == "mm-triple-linear")
        return detail::from(name, mm_triple_linear(detail::complex_literal(need(a.alpha, "alpha", name)).real(),
                                                   detail::complex_literal(need(a.beta, "beta", name)).real(),
                                                   a.terms.value_or(1000000)));
    if (name == "z-x-minus-1") {
        const double s = need(a.s, "s", name);
        NamedResult r = detail::plain(name, Z_x_minus_1(s), "gamma-ratio");
        if (s >= 0 && s == std::floor(s) && static_cast<long>(s) % 2 == 0)
            r.exact = Z_x_minus_1_exact(static_cast<unsigned>(s)).to_string();
        return r;
    }
    if (name == "z-pair") return detail::plain(name, Z_pair(need(a.s, "s", name), need(a.t, "t", name)), "gamma-ratio");
    if (name == "sin-cos-log-moments")
        return detail::plain(name, sin_cos_log_moments(need(a.k, "k", name), need(a.l, "l", name)), "exp-series");
    if (name == "z-4cycle") {
        const double s = need(a.s, "s", name), c = need(a.c, "c", name);
        std::string m = detail::method_or(a, "series");
        if (m != "series" && m != "3f2") throw DomainError("method must be series or 3f2");
        NamedResult r = detail::from(name, Z_4cycle(s, c, m == "series" ? SeriesForm::Series : SeriesForm::Hypergeometric));
        if (s >= 0 && s == std::floor(s) && c == std::floor(c))
            r.exact = Z_4cycle_exact(static_cast<unsigned>(s), Rational(static_cast<std::int64_t>(c))).to_string();
        return r;
    }
    if (name == "z-x-y-c") {
        const double s = need(a.s, "s", name), c = need(a.c, "c", name);
        NamedResult r = detail::from(name, Z_x_y_c(s, c));
        if (s >= 0 && s == std::floor(s) && static_cast<long>(s) % 2 == 0 && c == std::floor(c))
            r.exact = Z_x_y_c_exact(static_cast<unsigned>(s), Rational(static_cast<std::int64_t>(c))).to_string();
        return r;
    }
    if (name == "m2-x-y-c" || name == "m3-x-y-c") {
        std::string m = detail::method_or(a, "dilog");
        if (m != "dilog" && m != "series") throw DomainError("method must be dilog or series");
        const double c = need(a.c, "c", name);
        const SumMethod sm = m == "dilog" ? SumMethod::Dilog : SumMethod::Series;
        return detail::from(name, name == "m2-x-y-c" ? m2_x_y_c(c, sm) : m3_x_y_c(c, sm));
    }
    if (name == "i-double-series") {
        std::string m = a.mode.value_or("closed-form");
        if (m != "closed-form" && m != "direct-sum") throw DomainError("mode must be closed-form or direct-sum");
        return detail::from(name, I_double_series(m == "closed-form" ? IMode::ClosedForm : IMode::DirectSum));
    }
    if (name == "central-binom-dilog") return detail::plain(name, central_binom_dilog(need(a.t, "t", name)), "dilog");
    if (name == "m2-x-plus-y-plus-1") {
        std::string m = detail::method_or(a, "published");
        if (m == "published") return detail::plain(name, paper_constant(name), m);
        if (m == "polylog") return detail::plain(name, m2_x_plus_y_plus_1_polylog(), m);
        if (m == "reduced") {
            auto r = m2_x_plus_y_plus_1_printed_reduction();
            return NamedResult{name, r.value, {}, m, r.err_estimate, 0, std::nullopt};
        }
        if (m == "s-form") {
            auto r = m2_x_plus_y_plus_1_s_form();
            return NamedResult{name, r.value, {}, m, r.err_estimate, 0, std::nullopt};
        }
        throw DomainError("method must be published, polylog, reduced or s-form");
    }
    if (name == "m2-smyth2") {
        std::string m = detail::method_or(a, "published");
        if (m == "published") return detail::plain(name, m2_smyth2_printed(), m);
        if (m == "corrected") return detail::plain(name, m2_smyth2_corrected(), m);
        if (m == "reduced") {
            auto r = m2_smyth2_reduced();
            return NamedResult{name, r.value, {}, m, r.err_estimate, 0, std::nullopt};
        }
        throw DomainError("method must be published, corrected or reduced");
    }
    if (name == "smyth-xy1" || name == "smyth-2") return detail::plain(name, paper_constant(name), "dirichlet-L");
    if (name == "dyson-z") {
        const int N = need(a.N, "N", name), k = need(a.k, "k", name);
        if (N < 1 || k < 0) throw DomainError("dyson-z needs N >= 1 and k >= 0");
        Rational r = dyson_Z(static_cast<unsigned>(N), static_cast<unsigned>(k));
        NamedResult out = detail::plain(name, r.to_double(), "exact");
        out.exact = r.to_string();
        return out;
    }
    if (name == "dyson-hyp") {
        const int N = need(a.N, "N", name);
        if (N < 1) throw DomainError("dyson-hyp needs N >= 1");
        return detail::from(name, dyson_hyp(need(a.s, "s", name), need(a.lambda, "lambda", name), static_cast<unsigned>(N),
                                            a.order.value_or(60)));
    }
    throw DomainError("unknown formula: " + name);
}

} // namespace mahler

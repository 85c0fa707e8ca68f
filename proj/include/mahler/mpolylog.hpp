#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "summation.hpp"

namespace mahler {

// Increasing:  sum_{n_1 < ... < n_k} z_1^{n_1} ... z_k^{n_k} / (n_1^{s_1} ... n_k^{s_k})
// Decreasing:  sum_{n_1 > ... > n_k} (same summand)
enum class PolylogConvention { Increasing, Decreasing };

struct PolylogSpec {
    std::vector<int> exponents;
    std::vector<cplx> args;
    bool regularized = false;
    PolylogConvention convention = PolylogConvention::Increasing;
};

enum class PolylogConvergence { Absolute, Conditional, Divergent };

namespace detail {

// Exponents and arguments ordered so that the first entry carries the largest index.
inline void to_outer_first(const PolylogSpec& spec, std::vector<int>& s, std::vector<cplx>& z) {
    s = spec.exponents;
    z = spec.args;
    if (spec.convention == PolylogConvention::Increasing) {
        std::reverse(s.begin(), s.end());
        std::reverse(z.begin(), z.end());
    }
}

inline void validate(const PolylogSpec& spec) {
    if (spec.exponents.empty()) throw DomainError("polylog spec needs at least one exponent");
    if (spec.exponents.size() != spec.args.size()) throw DomainError("exponent/argument count mismatch");
    for (int s : spec.exponents)
        if (s < 1) throw DomainError("polylog exponents must be >= 1");
    for (const cplx& z : spec.args)
        if (std::abs(z) > 1.0 + 1e-12) throw DomainError("polylog arguments must lie in the closed unit disk");
}

inline bool on_circle(cplx z) { return std::abs(std::abs(z) - 1.0) < 1e-14; }
inline bool is_one(cplx z) { return std::abs(z - 1.0) < 1e-14; }

} // namespace detail

inline PolylogConvergence classify(const PolylogSpec& spec) {
    detail::validate(spec);
    std::vector<int> s;
    std::vector<cplx> z;
    detail::to_outer_first(spec, s, z);
    if (s[0] == 1 && detail::is_one(z[0])) return PolylogConvergence::Divergent;
    if (s[0] == 1 && detail::on_circle(z[0])) return PolylogConvergence::Conditional;
    return PolylogConvergence::Absolute;
}

namespace detail {

struct GradedNode {
    double u, one_minus_u, w;
};

// Composite Gauss-Legendre rule on [0,1], geometrically graded toward both ends so that
// logarithmic endpoint singularities are integrated to near machine precision.
template <int N>
const std::vector<GradedNode>& graded_rule() {
    static const std::vector<GradedNode> nodes = [] {
        const auto& gl = GaussLegendre<N>::get();
        constexpr double sigma = 0.1;
        constexpr int levels = 17;
        std::vector<std::pair<double, double>> pieces;  // [lo, hi] measured from the end point
        double hi = 0.5;
        for (int k = 0; k < levels; ++k) {
            pieces.emplace_back(hi * sigma, hi);
            hi *= sigma;
        }
        pieces.emplace_back(0.0, hi);
        std::vector<GradedNode> out;
        for (const auto& [lo, h] : pieces)
            for (int i = 0; i < N; ++i) {
                double t = 0.5 * (lo + h) + 0.5 * (h - lo) * gl.x[static_cast<std::size_t>(i)];
                double w = 0.5 * (h - lo) * gl.w[static_cast<std::size_t>(i)];
                out.push_back({t, 1.0 - t, w});
                out.push_back({1.0 - t, t, w});
            }
        return out;
    }();
    return nodes;
}

// Li_{s_1,...}(z_1,...) with the first index largest, as
// int_0^1 (-log u)^{s_1-1}/(s_1-1)! * z_1/(1 - z_1 u) * Li_{s_2,...}(u z_1 z_2, z_3, ...) du.
template <int N>
cplx li_outer_first(std::span<const int> s, std::span<const cplx> z) {
    if (s.size() == 1) return polylog(s[0], z[0]);
    std::vector<cplx> w(z.begin() + 1, z.end());
    const cplx z1 = z[0];
    const cplx w0 = w[0];
    double fact = 1.0;
    for (int i = 2; i < s[0]; ++i) fact *= i;
    const int p = s[0] - 1;
    CompensatedSum<cplx> acc;
    for (const auto& nd : graded_rule<N>()) {
        w[0] = w0 * (nd.u * z1);
        // Li_1(u) near u = 1 loses 1 - u to rounding; use the stored complement
        cplx inner = (s.size() == 2 && s[1] == 1 && w0 * z1 == cplx(1.0)) ? cplx(-std::log(nd.one_minus_u))
                                                                           : li_outer_first<N>(s.subspan(1), w);
        double lp = p == 0 ? 1.0 : std::pow(-std::log(nd.u), p) / fact;
        // 1 - z_1 u written so that z_1 = 1 keeps full relative accuracy near u = 1
        cplx den = (z1 == cplx(1.0)) ? cplx(nd.one_minus_u) : 1.0 - z1 * nd.u;
        acc.add(nd.w * lp * z1 / den * inner);
    }
    return acc.value();
}

} // namespace detail

struct PolylogValue {
    cplx value;
    double err_estimate;
};

// Iterated-integral evaluation; equals the Abel limit in the conditional case. The error
// estimate is the difference between two rule orders.
inline PolylogValue multiple_polylog_with_error(const PolylogSpec& spec) {
    auto kind = classify(spec);
    if (kind == PolylogConvergence::Divergent) throw DomainError("multiple polylog diverges");
    if (kind == PolylogConvergence::Conditional && !spec.regularized)
        throw DomainError("conditionally convergent multiple polylog needs the regularized flag");
    std::vector<int> s;
    std::vector<cplx> z;
    detail::to_outer_first(spec, s, z);
    cplx v = detail::li_outer_first<20>(s, z);
    cplx check = detail::li_outer_first<14>(s, z);
    return {v, std::abs(v - check) + 1e-15 * std::abs(v)};
}

inline cplx multiple_polylog(const PolylogSpec& spec) { return multiple_polylog_with_error(spec).value; }

inline cplx multiple_polylog(std::vector<int> s, std::vector<cplx> z, bool regularized = false,
                             PolylogConvention conv = PolylogConvention::Increasing) {
    return multiple_polylog(PolylogSpec{std::move(s), std::move(z), regularized, conv});
}

// Nested truncated series sum_{outer index <= N} with the outer term scaled by r^n.
inline cplx multiple_polylog_series(const PolylogSpec& spec, long N, double r = 1.0) {
    detail::validate(spec);
    std::vector<int> s;
    std::vector<cplx> z;
    detail::to_outer_first(spec, s, z);
    // innermost first
    std::reverse(s.begin(), s.end());
    std::reverse(z.begin(), z.end());
    const std::size_t k = s.size();
    std::vector<cplx> prev(static_cast<std::size_t>(N) + 1, cplx(1.0));
    std::vector<cplx> cur(static_cast<std::size_t>(N) + 1);
    for (std::size_t d = 0; d < k; ++d) {
        CompensatedSum<cplx> acc;
        cplx zp = 1.0;
        double rp = 1.0;
        cur[0] = 0.0;
        for (long n = 1; n <= N; ++n) {
            zp *= z[d];
            if (d + 1 == k) rp *= r;
            cplx inner = d == 0 ? cplx(1.0) : prev[static_cast<std::size_t>(n - 1)];
            acc.add(inner * zp * (rp / std::pow(static_cast<double>(n), s[d])));
            cur[static_cast<std::size_t>(n)] = acc.value();
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(N)];
}

// Abel ladder: radii r = 1 - 2^{-m}, m = 4..14, degree-4 polynomial extrapolation in 1-r.
inline PolylogValue multiple_polylog_abel(const PolylogSpec& spec) {
    std::vector<double> h;
    std::vector<cplx> v;
    for (int m = 4; m <= 14; ++m) {
        double hh = std::ldexp(1.0, -m);
        long N = static_cast<long>(std::ceil(42.0 / hh));
        h.push_back(hh);
        v.push_back(multiple_polylog_series(spec, N, 1.0 - hh));
    }
    const std::size_t n = h.size();
    cplx best = neville_at_zero<cplx>(std::span<const double>(h).subspan(n - 5),
                                      std::span<const cplx>(v).subspan(n - 5));
    cplx prev = neville_at_zero<cplx>(std::span<const double>(h).subspan(n - 6, 5),
                                      std::span<const cplx>(v).subspan(n - 6, 5));
    return {best, std::abs(best - prev)};
}

} // namespace mahler

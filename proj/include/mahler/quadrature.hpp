#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <vector>

#include "errors.hpp"
#include "summation.hpp"

namespace mahler {

template <int N>
struct GaussLegendre {
    std::array<double, N> x{};
    std::array<double, N> w{};

    GaussLegendre() {
        for (int i = 0; i < (N + 1) / 2; ++i) {
            long double z = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (N + 0.5L));
            long double dp = 0;
            for (int it = 0; it < 100; ++it) {
                long double p0 = 1, p1 = z;
                for (int k = 2; k <= N; ++k) {
                    long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (z * p1 - p0) / (z * z - 1);
                long double dz = p1 / dp;
                z -= dz;
                if (std::fabs(dz) < 1e-19L) break;
            }
            {
                long double p0 = 1, p1 = z;
                for (int k = 2; k <= N; ++k) {
                    long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (z * p1 - p0) / (z * z - 1);
            }
            long double wt = 2 / ((1 - z * z) * dp * dp);
            x[static_cast<std::size_t>(i)] = static_cast<double>(-z);
            x[static_cast<std::size_t>(N - 1 - i)] = static_cast<double>(z);
            w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(N - 1 - i)] = static_cast<double>(wt);
        }
    }

    static const GaussLegendre& get() {
        static const GaussLegendre rule;
        return rule;
    }
};

template <typename T>
struct AdaptiveResult {
    T value{};
    double err = 0.0;
    long evals = 0;
    bool converged = false;
    int panels = 0;
};

struct AdaptiveOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_panels = 4000;
    int initial_per_unit = 4;
};

namespace detail {

template <typename T>
struct Panel {
    double a, b;
    T left, right;      // order-16 rule on each half
    double err;         // |whole - (left+right)|
    double absint;      // sum |w f| over the half rules
    bool retired = false;
};

template <typename T, typename F>
std::pair<T, double> gl_apply(F& f, double a, double b, long& evals) {
    const auto& rule = GaussLegendre<16>::get();
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    CompensatedSum<T> s;
    double absint = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        T v = f(c + h * rule.x[i]);
        s.add(v * (rule.w[i] * h));
        absint += std::abs(v) * rule.w[i] * std::abs(h);
    }
    evals += static_cast<long>(rule.x.size());
    return {s.value(), absint};
}

} // namespace detail

// Adaptive Gauss-Legendre on [a,b]: panels start at the break points and the
// worst panel is bisected until the summed panel error meets the tolerance.
template <typename T, typename F>
AdaptiveResult<T> integrate_adaptive(F&& f, double a, double b, std::span<const double> breaks,
                                     const AdaptiveOptions& opt) {
    AdaptiveResult<T> res;
    if (!(b > a)) return res;
    std::vector<double> cuts{a};
    {
        std::vector<double> br;
        for (double t : breaks)
            if (t > a && t < b) br.push_back(t);
        std::sort(br.begin(), br.end());
        br.erase(std::unique(br.begin(), br.end(), [](double u, double v) { return std::abs(u - v) < 1e-15; }),
                 br.end());
        for (double t : br) cuts.push_back(t);
        cuts.push_back(b);
    }
    std::vector<detail::Panel<T>> panels;
    auto make = [&](double lo, double hi, const T& whole) {
        double mid = 0.5 * (lo + hi);
        auto [l, al] = detail::gl_apply<T>(f, lo, mid, res.evals);
        auto [r, ar] = detail::gl_apply<T>(f, mid, hi, res.evals);
        detail::Panel<T> p{lo, hi, l, r, std::abs(whole - (l + r)), al + ar, false};
        return p;
    };
    auto make_fresh = [&](double lo, double hi) {
        long dummy = 0;
        auto [whole, aw] = detail::gl_apply<T>(f, lo, hi, dummy);
        (void)aw;
        res.evals += dummy;
        return make(lo, hi, whole);
    };
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double len = cuts[i + 1] - cuts[i];
        int pieces = std::max(1, static_cast<int>(std::ceil(len / (b - a) * opt.initial_per_unit - 1e-9)));
        for (int k = 0; k < pieces; ++k) {
            double lo = cuts[i] + len * k / pieces;
            double hi = k + 1 == pieces ? cuts[i + 1] : cuts[i] + len * (k + 1) / pieces;
            panels.push_back(make_fresh(lo, hi));
        }
    }
    auto worse = [&](std::size_t i, std::size_t j) {
        if (panels[i].err != panels[j].err) return panels[i].err < panels[j].err;
        return panels[i].a > panels[j].a;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> queue(worse);
    for (std::size_t i = 0; i < panels.size(); ++i) queue.push(i);

    auto totals = [&](T& value, double& err, double& absint) {
        std::vector<std::size_t> order(panels.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return panels[i].a < panels[j].a; });
        CompensatedSum<T> v;
        CompensatedSum<double> e;
        absint = 0.0;
        for (std::size_t i : order) {
            if (panels[i].retired) continue;
            v.add(panels[i].left + panels[i].right);
            e.add(panels[i].err);
            absint += panels[i].absint;
        }
        value = v.value();
        err = e.value();
    };

    int live = static_cast<int>(panels.size());
    double running_err = 0.0;
    T running_value{};
    for (const auto& p : panels) {
        running_err += p.err;
        running_value += p.left + p.right;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    while (true) {
        T value;
        double err, absint;
        bool check = running_err <= 2.0 * std::max(opt.abs_tol, opt.rel_tol * std::abs(running_value)) ||
                     queue.empty() || live >= opt.max_panels;
        if (check) {
            totals(value, err, absint);
            double floor_err = 64.0 * eps * absint;
            double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
            res.value = value;
            res.err = err + floor_err;
            res.panels = live;
            if (res.err <= tol) {
                res.converged = true;
                return res;
            }
            if (queue.empty() || live >= opt.max_panels) {
                res.converged = false;
                return res;
            }
            running_err = err;
            running_value = value;
        }
        std::size_t idx = queue.top();
        queue.pop();
        detail::Panel<T> p = panels[idx];
        double mid = 0.5 * (p.a + p.b);
        if (mid - p.a <= 8 * eps * std::max(std::abs(mid), 1e-280)) {
            continue;  // cannot split further; its error stays in the total
        }
        panels[idx].retired = true;
        running_err -= p.err;
        running_value -= p.left + p.right;
        panels.push_back(make(p.a, mid, p.left));
        panels.push_back(make(mid, p.b, p.right));
        running_err += panels[panels.size() - 2].err + panels.back().err;
        running_value += panels[panels.size() - 2].left + panels[panels.size() - 2].right +
                         panels.back().left + panels.back().right;
        queue.push(panels.size() - 2);
        queue.push(panels.size() - 1);
        ++live;
    }
}

} // namespace mahler

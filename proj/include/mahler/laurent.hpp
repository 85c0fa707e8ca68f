#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace mahler {

using cplx = std::complex<double>;

// A coefficient is either an exact Gaussian rational or a complex double.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(Rational re) : re_(re) {}  // NOLINT
    Coefficient(std::int64_t n) : re_(n) {}  // NOLINT
    Coefficient(int n) : re_(static_cast<std::int64_t>(n)) {}  // NOLINT
    Coefficient(Rational re, Rational im) : re_(re), im_(im) {}
    Coefficient(cplx z) : exact_(false), z_(z) {}  // NOLINT
    Coefficient(double x) : exact_(false), z_(x) {}  // NOLINT

    bool is_exact() const noexcept { return exact_; }
    bool is_real() const noexcept { return exact_ ? im_.is_zero() : z_.imag() == 0.0; }
    bool is_zero() const noexcept {
        return exact_ ? re_.is_zero() && im_.is_zero() : z_ == cplx{};
    }
    const Rational& re_exact() const { return re_; }
    const Rational& im_exact() const { return im_; }
    cplx value() const {
        return exact_ ? cplx{re_.to_double(), im_.to_double()} : z_;
    }

    Coefficient conj() const {
        return exact_ ? Coefficient(re_, -im_) : Coefficient(std::conj(z_));
    }

    // Exact results throw OverflowError; the operators below degrade instead.
    static Coefficient add_exact(const Coefficient& a, const Coefficient& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    static Coefficient mul_exact(const Coefficient& a, const Coefficient& b) {
        if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_};
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
        if (a.exact_ && b.exact_) {
            try {
                return add_exact(a, b);
            } catch (const OverflowError&) {
            }
        }
        return Coefficient(a.value() + b.value());
    }
    friend Coefficient operator-(const Coefficient& a) {
        return a.exact_ ? Coefficient(-a.re_, -a.im_) : Coefficient(-a.z_);
    }
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
        if (a.exact_ && b.exact_) {
            try {
                return mul_exact(a, b);
            } catch (const OverflowError&) {
            }
        }
        return Coefficient(a.value() * b.value());
    }
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b) {
        if (b.is_zero()) throw DomainError("division by zero coefficient");
        if (a.exact_ && b.exact_) {
            try {
                Rational n = b.re_ * b.re_ + b.im_ * b.im_;
                Coefficient inv(b.re_ / n, -b.im_ / n);
                return mul_exact(a, inv);
            } catch (const OverflowError&) {
            }
        }
        return Coefficient(a.value() / b.value());
    }

    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        if (a.exact_ && b.exact_) return a.re_ == b.re_ && a.im_ == b.im_;
        return a.value() == b.value();
    }

    std::string to_string() const;

private:
    bool exact_ = true;
    Rational re_{};
    Rational im_{};
    cplx z_{};
};

namespace detail {

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s = buf;
    // keep it a decimal literal the parser accepts
    if (s.find_first_of("eE.") == std::string::npos && s.find("inf") == std::string::npos &&
        s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

} // namespace detail

inline std::string Coefficient::to_string() const {
    if (exact_) {
        if (im_.is_zero()) return re_.to_string();
        if (re_.is_zero()) return im_.to_string() + "i";
        std::string s = "(" + re_.to_string();
        Rational a = im_;
        s += a < Rational{} ? " - " + (-a).to_string() : " + " + a.to_string();
        return s + "i)";
    }
    if (z_.imag() == 0.0) return detail::format_double(z_.real());
    if (z_.real() == 0.0) return detail::format_double(z_.imag()) + "i";
    std::string s = "(" + detail::format_double(z_.real());
    s += std::signbit(z_.imag()) ? " - " + detail::format_double(-z_.imag())
                                  : " + " + detail::format_double(z_.imag());
    return s + "i)";
}

struct TorusPoint {
    std::vector<double> angles;

    explicit TorusPoint(std::vector<double> a) : angles(std::move(a)) {
        for (double t : angles)
            if (!(t >= 0.0 && t < 1.0)) throw DomainError("torus angle outside [0,1)");
    }
};

using Exponent = std::vector<int>;

class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, Coefficient>;

    explicit LaurentPolynomial(int nvars = 1) : nvars_(nvars) {
        if (nvars < 1) throw DomainError("polynomial needs at least one variable");
    }

    static LaurentPolynomial constant(int nvars, const Coefficient& c) {
        return monomial(nvars, Exponent(static_cast<std::size_t>(nvars), 0), c);
    }
    static LaurentPolynomial monomial(int nvars, Exponent e, const Coefficient& c) {
        LaurentPolynomial p(nvars);
        if (static_cast<int>(e.size()) != nvars) throw DomainError("exponent length mismatch");
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }
    static LaurentPolynomial variable(int nvars, int j, int power = 1) {
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(j)) = power;
        return monomial(nvars, std::move(e), Coefficient(1));
    }

    int nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_exact() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.second.is_exact(); });
    }
    bool is_real_coefficient() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.second.is_real(); });
    }

    Coefficient coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coefficient{} : it->second;
    }

    void add_term(const Exponent& e, const Coefficient& c) {
        if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Same polynomial viewed in more variables (new variables unused).
    LaurentPolynomial with_nvars(int n) const {
        if (n < nvars_) {
            for (const auto& [e, c] : terms_)
                for (int j = n; j < nvars_; ++j)
                    if (e[static_cast<std::size_t>(j)] != 0)
                        throw DomainError("cannot drop a variable that is used");
        }
        LaurentPolynomial r(n);
        for (const auto& [e, c] : terms_) {
            Exponent f(static_cast<std::size_t>(n), 0);
            for (int j = 0; j < std::min(n, nvars_); ++j) f[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j)];
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.require_same(b);
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
        LaurentPolynomial r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a + (-b);
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.require_same(b);
        LaurentPolynomial r(a.nvars_);
        Exponent e(static_cast<std::size_t>(a.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    LaurentPolynomial power(unsigned k) const {
        LaurentPolynomial r = constant(nvars_, Coefficient(1));
        LaurentPolynomial base = *this;
        while (k) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return r;
    }

    cplx eval(std::span<const cplx> x) const {
        if (static_cast<int>(x.size()) != nvars_) throw DomainError("wrong number of variables");
        cplx s{};
        for (const auto& [e, c] : terms_) {
            cplx m = c.value();
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] != 0) m *= std::pow(x[j], e[j]);
            s += m;
        }
        return s;
    }

    cplx eval_on_torus(const TorusPoint& t) const {
        if (static_cast<int>(t.angles.size()) != nvars_) throw DomainError("wrong number of angles");
        // exponents are applied to the angle before taking exp, so roots of unity stay accurate
        cplx s{};
        for (const auto& [e, c] : terms_) {
            double phase = 0.0;
            for (std::size_t j = 0; j < e.size(); ++j) {
                double th = e[j] * t.angles[j];
                phase += th - std::floor(th);
            }
            phase -= std::floor(phase);
            s += c.value() * unit(phase);
        }
        return s;
    }

    // P̄: conjugated coefficients, negated exponents.
    LaurentPolynomial conjugate_reciprocal() const {
        LaurentPolynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            for (int& v : f) v = -v;
            r.terms_.emplace(std::move(f), c.conj());
        }
        return r;
    }

    LaurentPolynomial scale(const Coefficient& lambda) const {
        if (lambda.is_zero()) throw DomainError("scale factor must be nonzero");
        LaurentPolynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * lambda);
        return r;
    }

    Coefficient constant_term() const {
        return coefficient(Exponent(static_cast<std::size_t>(nvars_), 0));
    }

    // Constant coefficient of P^k. Exact inputs give an exact result or OverflowError.
    Coefficient constant_term_power(unsigned k) const;

    // Smallest and largest exponent of variable j.
    std::pair<int, int> degree_range(int j) const {
        if (terms_.empty()) return {0, 0};
        int lo = terms_.begin()->first[static_cast<std::size_t>(j)];
        int hi = lo;
        for (const auto& [e, c] : terms_) {
            lo = std::min(lo, e[static_cast<std::size_t>(j)]);
            hi = std::max(hi, e[static_cast<std::size_t>(j)]);
        }
        return {lo, hi};
    }

    std::vector<int> active_variables() const {
        std::vector<int> v;
        for (int j = 0; j < nvars_; ++j) {
            auto [lo, hi] = degree_range(j);
            if (lo != 0 || hi != 0) v.push_back(j);
        }
        return v;
    }

    // Keep only the listed variables, in the given order.
    LaurentPolynomial restrict_to(const std::vector<int>& vars) const {
        LaurentPolynomial r(std::max<int>(1, static_cast<int>(vars.size())));
        for (const auto& [e, c] : terms_) {
            Exponent f(static_cast<std::size_t>(r.nvars_), 0);
            for (std::size_t i = 0; i < vars.size(); ++i) f[i] = e[static_cast<std::size_t>(vars[i])];
            r.add_term(f, c);
        }
        return r;
    }

    // Distinct exponents of variable j.
    std::vector<int> exponents_of(int j) const {
        std::vector<int> v;
        for (const auto& [e, c] : terms_) v.push_back(e[static_cast<std::size_t>(j)]);
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    // Coefficient of x_j^p as a polynomial in the remaining variables (nvars-1, at least 1).
    LaurentPolynomial coefficient_in(int j, int p) const {
        int n = std::max(1, nvars_ - 1);
        LaurentPolynomial r(n);
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<std::size_t>(j)] != p) continue;
            Exponent f;
            for (int i = 0; i < nvars_; ++i)
                if (i != j) f.push_back(e[static_cast<std::size_t>(i)]);
            if (f.empty()) f.push_back(0);
            r.add_term(f, c);
        }
        return r;
    }

    // Substitute x_j = value (any nonzero complex), giving a polynomial in the other variables.
    LaurentPolynomial substitute(int j, cplx value) const {
        int n = std::max(1, nvars_ - 1);
        LaurentPolynomial r(n);
        for (const auto& [e, c] : terms_) {
            Exponent f;
            for (int i = 0; i < nvars_; ++i)
                if (i != j) f.push_back(e[static_cast<std::size_t>(i)]);
            if (f.empty()) f.push_back(0);
            r.add_term(f, Coefficient(c.value() * std::pow(value, e[static_cast<std::size_t>(j)])));
        }
        return r;
    }

    std::string to_string() const;

    static std::string variable_name(int nvars, int j) {
        if (nvars <= 3) return std::string(1, "xyz"[j]);
        return "x" + std::to_string(j + 1);
    }

    static cplx unit(double turns) {
        // exact values at multiples of 1/4 keep trig-polynomial averages clean
        double t = turns - std::floor(turns);
        if (t == 0.0) return {1.0, 0.0};
        if (t == 0.25) return {0.0, 1.0};
        if (t == 0.5) return {-1.0, 0.0};
        if (t == 0.75) return {0.0, -1.0};
        double a = 2.0 * std::numbers::pi * t;
        return {std::cos(a), std::sin(a)};
    }

private:
    void require_same(const LaurentPolynomial& o) const {
        if (nvars_ != o.nvars_) throw DomainError("polynomials live in different variable sets");
    }

    int nvars_;
    TermMap terms_;
};

inline std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // highest exponents first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool is_const = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
        std::string mono;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variable_name(nvars_, static_cast<int>(j));
            if (e[j] != 1) mono += "^" + std::to_string(e[j]);
        }
        Coefficient cc = c;
        bool negative = false;
        if (c.is_exact() && c.im_exact().is_zero() && c.re_exact() < Rational{}) negative = true;
        if (!c.is_exact() && c.value().imag() == 0.0 && std::signbit(c.value().real())) negative = true;
        if (negative) cc = -c;
        std::string cs = cc.to_string();
        bool unit_coeff = cc.is_exact() && cc == Coefficient(1);
        std::string term;
        if (is_const) term = cs;
        else if (unit_coeff) term = mono;
        else term = cs + "*" + mono;
        if (first) out += negative ? "-" + term : term;
        else out += negative ? " - " + term : " + " + term;
        first = false;
    }
    return out;
}

inline Coefficient LaurentPolynomial::constant_term_power(unsigned k) const {
    if (k == 0) return Coefficient(1);
    if (terms_.empty()) return Coefficient{};
    const std::size_t n = static_cast<std::size_t>(nvars_);
    std::vector<int> lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) std::tie(lo[j], hi[j]) = degree_range(static_cast<int>(j));
    const bool exact = is_exact();

    // a partial product term survives only if the remaining factors can bring it back to 0
    auto reachable = [&](const Exponent& e, long remaining) {
        for (std::size_t j = 0; j < n; ++j) {
            long need = -static_cast<long>(e[j]);
            if (need < remaining * lo[j] || need > remaining * hi[j]) return false;
        }
        return true;
    };

    std::map<Exponent, Coefficient> cur;
    cur.emplace(Exponent(n, 0), Coefficient(1));
    Exponent f(n);
    for (unsigned step = 0; step < k; ++step) {
        const long remaining = static_cast<long>(k - step - 1);
        std::map<Exponent, Coefficient> next;
        for (const auto& [e, c] : cur)
            for (const auto& [g, d] : terms_) {
                for (std::size_t j = 0; j < n; ++j) f[j] = e[j] + g[j];
                if (!reachable(f, remaining)) continue;
                Coefficient prod = exact ? Coefficient::mul_exact(c, d) : Coefficient(c.value() * d.value());
                auto [it, inserted] = next.try_emplace(f, prod);
                if (!inserted)
                    it->second = exact ? Coefficient::add_exact(it->second, prod)
                                       : Coefficient(it->second.value() + prod.value());
            }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        cur = std::move(next);
    }
    auto it = cur.find(Exponent(n, 0));
    return it == cur.end() ? Coefficient{} : it->second;
}

} // namespace mahler

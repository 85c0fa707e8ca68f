#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace mahler {

// Checked int64 rational, always normalized (den > 0, gcd 1).
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t g = std::gcd(a.den_, b.den_);
        std::int64_t da = a.den_ / g;
        std::int64_t db = b.den_ / g;
        Rational r;
        r.num_ = add(mul(a.num_, db), mul(b.num_, da));
        r.den_ = mul(a.den_, db);
        r.normalize();
        return r;
    }
    friend Rational operator-(const Rational& a) {
        if (a.num_ == INT64_MIN) throw OverflowError("rational negation overflow");
        Rational r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.num_ == 0 || b.num_ == 0) return Rational{};
        std::int64_t g1 = std::gcd(a.num_, b.den_);
        std::int64_t g2 = std::gcd(b.num_, a.den_);
        Rational r;
        r.num_ = mul(a.num_ / g1, b.num_ / g2);
        r.den_ = mul(a.den_ / g2, b.den_ / g1);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return a * b.reciprocal();
    }
    Rational reciprocal() const {
        if (num_ == 0) throw DomainError("reciprocal of zero");
        return Rational(den_, num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

    // Exact value of a decimal literal such as "2.5", "1e-3" or "17".
    // Throws OverflowError when the value does not fit.
    static Rational from_decimal(std::string_view text);

    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in exact arithmetic");
        return r;
    }
    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in exact arithmetic");
        return r;
    }

private:
    void normalize() {
        if (den_ < 0) {
            if (num_ == INT64_MIN || den_ == INT64_MIN) throw OverflowError("rational sign overflow");
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational pow(Rational base, unsigned e) {
    Rational r{1};
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

// Generalized binomial coefficient binom(a, k) for rational a.
inline Rational binomial(const Rational& a, unsigned k) {
    Rational r{1};
    for (unsigned i = 0; i < k; ++i) {
        r *= (a - Rational(static_cast<std::int64_t>(i)));
        r /= Rational(static_cast<std::int64_t>(i) + 1);
    }
    return r;
}

inline Rational Rational::from_decimal(std::string_view text) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) neg = text[pos++] == '-';
    std::int64_t mant = 0;
    int scale = 0;
    bool any = false;
    bool dot = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.') {
            if (dot) throw DomainError("malformed decimal");
            dot = true;
            continue;
        }
        if (c < '0' || c > '9') break;
        any = true;
        mant = add(mul(mant, 10), c - '0');
        if (dot) --scale;
    }
    if (!any) throw DomainError("malformed decimal");
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) eneg = text[pos++] == '-';
        int e = 0;
        bool edig = false;
        for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
            e = e * 10 + (text[pos] - '0');
            edig = true;
            if (e > 400) throw OverflowError("decimal exponent too large");
        }
        if (!edig) throw DomainError("malformed decimal exponent");
        scale += eneg ? -e : e;
    }
    if (pos != text.size()) throw DomainError("malformed decimal");
    Rational r(neg ? -mant : mant);
    if (mant == 0) return Rational{};
    Rational ten{10};
    if (scale > 0) r *= pow(ten, static_cast<unsigned>(scale));
    if (scale < 0) r /= pow(ten, static_cast<unsigned>(-scale));
    return r;
}

} // namespace mahler

#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"

namespace mahler {

namespace detail {

struct Token {
    enum Kind { Number, Imag, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::size_t offset;
    std::string text;
    int var = -1;
};

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : src_(text) { lex(); }

    LaurentPolynomial parse(int min_nvars) {
        nvars_ = std::max({1, min_nvars, max_var_ + 1});
        LaurentPolynomial p = expr();
        if (peek().kind != Token::End) {
            if (peek().kind == Token::RParen) throw ParseError("unmatched ')'", peek().offset);
            throw ParseError("unexpected '" + peek().text + "'", peek().offset);
        }
        return p;
    }

private:
    void lex() {
        std::size_t i = 0;
        int style = 0;  // 1: x,y,z   2: x1,x2,...
        while (i < src_.size()) {
            char c = src_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                while (i < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[i])) || src_[i] == '.')) ++i;
                if (i < src_.size() && (src_[i] == 'e' || src_[i] == 'E')) {
                    std::size_t j = i + 1;
                    if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
                    if (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
                        i = j;
                        while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
                    }
                }
                std::string num(src_.substr(start, i - start));
                if (i < src_.size() && src_[i] == 'i' &&
                    (i + 1 == src_.size() || !std::isalnum(static_cast<unsigned char>(src_[i + 1])))) {
                    ++i;
                    toks_.push_back({Token::Imag, start, num});
                } else {
                    toks_.push_back({Token::Number, start, num});
                }
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                while (i < src_.size() && std::isalpha(static_cast<unsigned char>(src_[i]))) ++i;
                std::size_t letters_end = i;
                while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
                std::string name(src_.substr(start, i - start));
                std::string letters(src_.substr(start, letters_end - start));
                if (name == "i") {
                    toks_.push_back({Token::Imag, start, "1"});
                    continue;
                }
                int idx = -1;
                int this_style = 0;
                if (letters_end == i && (name == "x" || name == "y" || name == "z")) {
                    idx = name[0] == 'x' ? 0 : name[0] == 'y' ? 1 : 2;
                    this_style = 1;
                } else if (letters == "x" && letters_end < i) {
                    long n = std::strtol(name.c_str() + 1, nullptr, 10);
                    if (n >= 1 && n <= 64) {
                        idx = static_cast<int>(n) - 1;
                        this_style = 2;
                    }
                }
                if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
                if (style != 0 && style != this_style)
                    throw ParseError("unknown variable '" + name + "' (cannot mix x,y,z with x1,x2,...)", start);
                style = this_style;
                max_var_ = std::max(max_var_, idx);
                Token t{Token::Var, start, name};
                t.var = idx;
                toks_.push_back(t);
                continue;
            }
            Token::Kind k;
            switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
            }
            toks_.push_back({k, start, std::string(1, c)});
            ++i;
        }
        toks_.push_back({Token::End, src_.size(), "end of input"});
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail_at(const Token& t, const std::string& what) const {
        if (t.kind == Token::End && !open_.empty())
            throw ParseError("unclosed '('", open_.back());
        if (t.kind == Token::End) throw ParseError("unexpected end of input", t.offset);
        throw ParseError(what + ", found '" + t.text + "'", t.offset);
    }

    LaurentPolynomial expr() {
        LaurentPolynomial acc(nvars_);
        bool neg = false;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus) neg = next().kind == Token::Minus;
        LaurentPolynomial t = term();
        acc = neg ? -t : t;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = next().kind == Token::Minus;
            LaurentPolynomial u = term();
            acc = minus ? acc - u : acc + u;
        }
        return acc;
    }

    LaurentPolynomial term() {
        LaurentPolynomial acc = factor();
        while (peek().kind == Token::Star || peek().kind == Token::Slash) {
            const Token& op = next();
            std::size_t at = peek().offset;
            LaurentPolynomial f = factor();
            if (op.kind == Token::Star) {
                acc *= f;
            } else {
                acc *= invert_monomial(f, at);
            }
        }
        return acc;
    }

    LaurentPolynomial invert_monomial(const LaurentPolynomial& f, std::size_t at) const {
        if (f.size() != 1) throw ParseError("can only divide by a single nonzero term", at);
        const auto& [e, c] = *f.terms().begin();
        Exponent g = e;
        for (int& v : g) v = -v;
        return LaurentPolynomial::monomial(nvars_, g, Coefficient(1) / c);
    }

    LaurentPolynomial factor() {
        std::size_t at = peek().offset;
        LaurentPolynomial base = primary();
        if (peek().kind != Token::Caret) return base;
        next();
        bool neg = false;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus) neg = next().kind == Token::Minus;
        const Token& t = peek();
        if (t.kind != Token::Number) fail_at(t, "expected an integer exponent");
        next();
        if (t.text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("non-integer exponent '" + t.text + "'", t.offset);
        if (t.text.size() > 5) throw ParseError("exponent too large", t.offset);
        int e = std::stoi(t.text);
        if (e > 10000) throw ParseError("exponent too large", t.offset);
        if (neg) {
            base = invert_monomial(base, at);
        } else if (base.size() > 1 && e > 64) {
            throw ParseError("power of a sum is limited to 64", t.offset);
        }
        return base.power(static_cast<unsigned>(e));
    }

    LaurentPolynomial primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Number: {
            next();
            return LaurentPolynomial::constant(nvars_, number(t));
        }
        case Token::Imag: {
            next();
            Coefficient v = number(t);
            Coefficient z = v.is_exact() ? Coefficient(Rational{}, v.re_exact()) : Coefficient(cplx(0.0, v.value().real()));
            return LaurentPolynomial::constant(nvars_, z);
        }
        case Token::Var:
            next();
            return LaurentPolynomial::variable(nvars_, t.var);
        case Token::LParen: {
            open_.push_back(t.offset);
            next();
            LaurentPolynomial inner = expr();
            if (peek().kind != Token::RParen) fail_at(peek(), "expected ')'");
            next();
            open_.pop_back();
            return inner;
        }
        default:
            fail_at(t, "expected a number, variable or '('");
        }
    }

    static Coefficient number(const Token& t) {
        if (t.text == "." || std::count(t.text.begin(), t.text.end(), '.') > 1)
            throw ParseError("malformed number '" + t.text + "'", t.offset);
        try {
            return Coefficient(Rational::from_decimal(t.text));
        } catch (const OverflowError&) {
            return Coefficient(std::strtod(t.text.c_str(), nullptr));
        } catch (const DomainError&) {
            throw ParseError("malformed number '" + t.text + "'", t.offset);
        }
    }

    std::string_view src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int max_var_ = -1;
    int nvars_ = 1;
    std::vector<std::size_t> open_;
};

} // namespace detail

// Parses e.g. "x + x^-1 + y + y^-1 + 5" or "(1+2i)*x - 1/3".
// The result has max(min_nvars, highest variable index + 1) variables.
inline LaurentPolynomial parse_poly(std::string_view text, int min_nvars = 1) {
    return detail::PolyParser(text).parse(min_nvars);
}

// Parses several polynomials into one common variable set.
inline std::vector<LaurentPolynomial> parse_polys(const std::vector<std::string>& texts) {
    std::vector<LaurentPolynomial> out;
    int n = 1;
    for (const auto& t : texts) {
        out.push_back(parse_poly(t));
        n = std::max(n, out.back().nvars());
    }
    for (auto& p : out) p = p.with_nvars(n);
    return out;
}

} // namespace mahler

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ellram/rational_function.hpp"

namespace ellram {

// Expression grammar for polynomial and rational-function input, whitespace
// insignificant:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-')* power
//   power   := primary ('^' unary)*      exponent: nonnegative integer constant
//   primary := integer | 't' | '(' expr ')'
//
// Everything evaluates exactly in Q(t). Implicit multiplication ("3t",
// "3(t+1)") is rejected rather than guessed.
namespace detail {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view src) : src_(src) {}

    RationalFunction parse() {
        RationalFunction value = parse_expr();
        skip_space();
        if (pos_ != src_.size()) error(pos_, "unexpected trailing input");
        return value;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(std::size_t at, const std::string& message) const {
        fail(ErrorCode::ParseError,
             "parse error at position " + std::to_string(at + 1) + ": " + message);
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool starts_primary(char c) const {
        return c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
    }

    RationalFunction parse_expr() {
        RationalFunction value = parse_term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            RationalFunction rhs = parse_term();
            value = c == '+' ? value + rhs : value - rhs;
        }
        return value;
    }

    RationalFunction parse_term() {
        RationalFunction value = parse_unary();
        while (true) {
            const char c = peek();
            if (c == '*' || c == '/') {
                const std::size_t at = pos_++;
                RationalFunction rhs = parse_unary();
                if (c == '/' && rhs.is_zero()) error(at, "division by zero");
                value = c == '*' ? value * rhs : value / rhs;
            } else if (starts_primary(c)) {
                error(pos_, "missing operator (implicit multiplication is not allowed)");
            } else {
                return value;
            }
        }
    }

    RationalFunction parse_unary() {
        bool negate = false;
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            if (c == '-') negate = !negate;
            ++pos_;
        }
        RationalFunction value = parse_power();
        return negate ? -value : value;
    }

    RationalFunction parse_power() {
        RationalFunction base = parse_primary();
        while (peek() == '^') {
            const std::size_t at = pos_++;
            RationalFunction exponent = parse_unary();
            base = base.pow(exponent_value(at, exponent));
        }
        return base;
    }

    int exponent_value(std::size_t at, const RationalFunction& exponent) const {
        if (!exponent.is_constant()) error(at, "exponent must be a constant");
        const Rational value = exponent.numerator().constant_term();
        if (denominator(value) != 1) error(at, "fractional exponent is not allowed");
        if (value < 0) error(at, "negative exponent is not allowed");
        if (value > 4096) error(at, "exponent is unreasonably large");
        return static_cast<int>(numerator(value));
    }

    RationalFunction parse_primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction value = parse_expr();
            if (peek() != ')') error(pos_, "expected ')'");
            ++pos_;
            return value;
        }
        if (c == 't') {
            ++pos_;
            if (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
                error(pos_, "unknown identifier; the only variable is t");
            return RationalFunction::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
                error(pos_, "missing operator (implicit multiplication is not allowed)");
            return RationalFunction(Rational(Integer(std::string(src_.substr(start, pos_ - start)))));
        }
        if (c == '\0') error(pos_, "unexpected end of input");
        if (std::isalpha(static_cast<unsigned char>(c)))
            error(pos_, "unknown identifier; the only variable is t");
        error(pos_, std::string("unexpected character '") + c + "'");
    }
};

} // namespace detail

inline RationalFunction parse_rational_function(std::string_view src) {
    return detail::ExpressionParser(src).parse();
}

inline Polynomial parse_polynomial(std::string_view src) {
    RationalFunction value = parse_rational_function(src);
    if (!value.denominator().is_one())
        fail(ErrorCode::ParseError, "expression is not a polynomial: denominator " +
                                        value.denominator().to_string() + " survives");
    return value.numerator();
}

} // namespace ellram

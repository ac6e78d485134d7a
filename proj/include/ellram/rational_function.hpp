#pragma once

#include <string>
#include <utility>

#include "ellram/place.hpp"

namespace ellram {

// Element of Q(t) in lowest terms: numerator and denominator coprime, the
// denominator monic and nonzero. The zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() = default; // zero
    RationalFunction(Polynomial numerator) // NOLINT(google-explicit-constructor)
        : num_(std::move(numerator)) {}
    RationalFunction(Rational constant) : num_(std::move(constant)) {} // NOLINT
    RationalFunction(int constant) : num_(Rational(constant)) {}       // NOLINT

    RationalFunction(Polynomial numerator, Polynomial denominator) {
        if (denominator.is_zero())
            fail(ErrorCode::DegenerateInput, "rational function with zero denominator");
        if (numerator.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = poly_gcd(numerator, denominator);
        if (!g.is_one()) {
            numerator = *exact_divide(numerator, g);
            denominator = *exact_divide(denominator, g);
        }
        const Rational lead = denominator.leading_coefficient();
        num_ = (Rational(1) / lead) * numerator;
        den_ = (Rational(1) / lead) * denominator;
    }

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    RationalFunction operator-() const {
        RationalFunction out = *this;
        out.num_ = -out.num_;
        return out;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) fail(ErrorCode::DegenerateInput, "division by the zero function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    RationalFunction inverse() const {
        if (is_zero()) fail(ErrorCode::DegenerateInput, "inverse of the zero function");
        return {den_, num_};
    }

    RationalFunction pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        return {num_.pow(k), den_.pow(k)};
    }

    bool operator==(const RationalFunction& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    Polynomial num_;
    Polynomial den_ = Polynomial(Rational(1));
};

// Order of vanishing of f at a place of P^1; negative at poles. At infinity
// this is deg(denominator) - deg(numerator).
inline int valuation(const RationalFunction& f, const Place& v) {
    if (f.is_zero()) fail(ErrorCode::DegenerateInput, "valuation of the zero function");
    if (v.is_infinity()) return f.denominator().degree() - f.numerator().degree();
    const Polynomial& pi = v.poly();
    return multiplicity_in(f.numerator(), pi) - multiplicity_in(f.denominator(), pi);
}

} // namespace ellram

#pragma once

#include <utility>
#include <vector>

#include "ellram/square_class.hpp"

namespace ellram {

// Residue of a valuation-zero function at a place: a nonzero polynomial of
// degree < deg(place) for a finite place, the limit value for infinity.
class ResidueElement {
public:
    static ResidueElement at_finite(Place place, Polynomial value) {
        if (place.is_infinity() || value.is_zero() || value.degree() >= place.degree())
            fail(ErrorCode::InvariantViolation, "malformed finite residue");
        ResidueElement out;
        out.place_ = std::move(place);
        out.finite_value_ = std::move(value);
        return out;
    }

    static ResidueElement at_infinity(Rational value) {
        if (value == 0) fail(ErrorCode::InvariantViolation, "zero residue at infinity");
        ResidueElement out;
        out.infinity_value_ = std::move(value);
        return out;
    }

    const Place& place() const { return place_; }

    const Polynomial& polynomial_value() const {
        if (place_.is_infinity())
            fail(ErrorCode::PreconditionViolation, "residue at infinity is a rational value");
        return finite_value_;
    }

    const Rational& rational_value() const {
        if (place_.is_finite())
            fail(ErrorCode::PreconditionViolation, "finite residue is a polynomial value");
        return infinity_value_;
    }

private:
    ResidueElement() : place_(Place::infinity()) {}

    Place place_;
    Polynomial finite_value_;
    Rational infinity_value_;
};

// Inverse of a modulo the place polynomial, via the extended gcd.
inline Polynomial inverse_mod(const Polynomial& a, const Polynomial& modulus) {
    Polynomial u, v;
    Polynomial g = extended_gcd(a, modulus, u, v);
    if (!g.is_constant())
        fail(ErrorCode::InvariantViolation,
             "residue is not invertible modulo " + modulus.to_string());
    return divmod(u, modulus).remainder;
}

// Tame symbol c = (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)} reduced at the place v.
// c has valuation 0 there by construction; at infinity the residue is taken
// after the substitution s = 1/t, i.e. it is the leading-coefficient ratio.
inline ResidueElement tame(const RationalFunction& a, const RationalFunction& b, const Place& v) {
    if (a.is_zero() || b.is_zero())
        fail(ErrorCode::DegenerateInput, "tame symbol of the zero function");
    const int va = valuation(a, v);
    const int vb = valuation(b, v);
    RationalFunction c = a.pow(vb) * b.pow(-va);
    if ((va % 2 != 0) && (vb % 2 != 0)) c = -c;

    if (v.is_infinity()) {
        if (c.numerator().degree() != c.denominator().degree())
            fail(ErrorCode::InvariantViolation, "tame residue has nonzero valuation at infinity");
        return ResidueElement::at_infinity(c.numerator().leading_coefficient() /
                                           c.denominator().leading_coefficient());
    }

    const Polynomial& pi = v.poly();
    if (!poly_gcd(c.numerator(), pi).is_constant() || !poly_gcd(c.denominator(), pi).is_constant())
        fail(ErrorCode::InvariantViolation,
             "tame residue has nonzero valuation at a factor of " + pi.to_string() +
                 " (the inputs are not uniform on this bundled place)");
    Polynomial value = divmod(c.numerator() * inverse_mod(c.denominator(), pi), pi).remainder;
    return ResidueElement::at_finite(v, std::move(value));
}

// Field norm of a finite residue down to Q: Res(pi, value) / lc(pi)^deg(value)
// (the place polynomial is monic, so the scale is 1).
inline Rational residue_norm(const ResidueElement& r) {
    if (r.place().is_infinity())
        fail(ErrorCode::PreconditionViolation, "residue_norm needs a finite place");
    const Polynomial& pi = r.place().poly();
    const Polynomial& value = r.polynomial_value();
    if (value.is_constant())
        return rational_pow(value.leading_coefficient(), pi.degree());
    Rational scale = rational_pow(pi.leading_coefficient(), value.degree());
    return resultant(pi, value) / scale;
}

// Product over the joint support (plus infinity) of the norms of the tame
// symbols. Weil reciprocity: equals 1 for every pair of nonzero functions.
inline Rational reciprocity_product(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero())
        fail(ErrorCode::DegenerateInput, "reciprocity product of the zero function");
    std::vector<Polynomial> inputs;
    for (const Polynomial* part : {&a.numerator(), &a.denominator(), &b.numerator(),
                                   &b.denominator()})
        if (!part->is_constant()) inputs.push_back(*part);

    Rational product(1);
    if (!inputs.empty()) {
        // a joint gcd-free basis keeps the valuations uniform on every place
        for (const Polynomial& h : coprime_basis(std::span<const Polynomial>(inputs)).basis)
            product *= residue_norm(tame(a, b, Place::finite(h)));
    }
    product *= tame(a, b, Place::infinity()).rational_value();
    return product;
}

enum class SquareStatus { Square, NotSquare, Undecided };

// Squareness of a residue is decided for rational values (degree-1 places and
// infinity) and in Complex mode; higher-degree residues stay symbolic.
inline SquareStatus residue_square_status(const ResidueElement& r, BaseFieldMode mode) {
    if (mode == BaseFieldMode::Complex) return SquareStatus::Square;
    if (r.place().is_infinity())
        return is_square(r.rational_value()) ? SquareStatus::Square : SquareStatus::NotSquare;
    if (r.place().degree() == 1) {
        const Rational value = r.polynomial_value().constant_term();
        return is_square(value) ? SquareStatus::Square : SquareStatus::NotSquare;
    }
    return SquareStatus::Undecided;
}

} // namespace ellram

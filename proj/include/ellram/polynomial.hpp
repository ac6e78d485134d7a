#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellram/rational.hpp"

namespace ellram {

// Univariate polynomial over Q in the variable t, dense coefficient list
// indexed by degree. Invariant: no trailing zero coefficient; the zero
// polynomial is the empty list and reports degree() == -1, the stand-in for
// "minus infinity".
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational constant) { // NOLINT(google-explicit-constructor)
        if (constant != 0) coefficients_.push_back(std::move(constant));
    }
    Polynomial(int constant) : Polynomial(Rational(constant)) {} // NOLINT

    static Polynomial from_coefficients(std::vector<Rational> ascending) {
        Polynomial a;
        a.coefficients_ = std::move(ascending);
        a.trim();
        return a;
    }

    static Polynomial variable() { return from_coefficients({Rational(0), Rational(1)}); }

    static Polynomial monomial(Rational c, int degree) {
        if (c == 0) return {};
        std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
        coeffs.back() = std::move(c);
        return from_coefficients(std::move(coeffs));
    }

    // t - r
    static Polynomial linear_root(const Rational& r) {
        return from_coefficients({-r, Rational(1)});
    }

    bool is_zero() const { return coefficients_.empty(); }
    bool is_constant() const { return coefficients_.size() <= 1; }
    bool is_one() const { return coefficients_.size() == 1 && coefficients_[0] == 1; }
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

    const Rational& coefficient(int k) const {
        static const Rational zero(0);
        if (k < 0 || k >= static_cast<int>(coefficients_.size())) return zero;
        return coefficients_[static_cast<std::size_t>(k)];
    }

    const Rational& leading_coefficient() const { return coefficient(degree()); }
    const Rational& constant_term() const { return coefficient(0); }
    bool is_monic() const { return !is_zero() && leading_coefficient() == 1; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> coeffs(std::max(a.coefficients_.size(), b.coefficients_.size()),
                                     Rational(0));
        for (std::size_t i = 0; i < a.coefficients_.size(); ++i) coeffs[i] += a.coefficients_[i];
        for (std::size_t i = 0; i < b.coefficients_.size(); ++i) coeffs[i] += b.coefficients_[i];
        return from_coefficients(std::move(coeffs));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& c : out.coefficients_) c = -c;
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> coeffs(a.coefficients_.size() + b.coefficients_.size() - 1,
                                     Rational(0));
        for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
            for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
                coeffs[i + j] += a.coefficients_[i] * b.coefficients_[j];
        return from_coefficients(std::move(coeffs));
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& a) {
        if (c == 0) return {};
        Polynomial out = a;
        for (auto& x : out.coefficients_) x *= c;
        return out;
    }

    bool operator==(const Polynomial& other) const { return coefficients_ == other.coefficients_; }

    Polynomial derivative() const {
        if (is_constant()) return {};
        std::vector<Rational> coeffs(coefficients_.size() - 1);
        for (std::size_t i = 1; i < coefficients_.size(); ++i)
            coeffs[i - 1] = Rational(static_cast<int>(i)) * coefficients_[i];
        return from_coefficients(std::move(coeffs));
    }

    // Horner evaluation; exact.
    Rational operator()(const Rational& x) const {
        Rational value(0);
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
            value = value * x + *it;
        return value;
    }

    Polynomial monic() const {
        if (is_zero()) fail(ErrorCode::DegenerateInput, "the zero polynomial has no monic form");
        return (Rational(1) / leading_coefficient()) * *this;
    }

    Polynomial pow(int k) const {
        if (k < 0) fail(ErrorCode::PreconditionViolation, "polynomial power needs k >= 0");
        Polynomial out(Rational(1));
        Polynomial base = *this;
        for (; k > 0; k /= 2) {
            if (k % 2 != 0) out = out * base;
            base = base * base;
        }
        return out;
    }

    // Canonical rendering, descending degree, re-parsable by the expression
    // grammar (so an explicit '*' separates coefficient and variable).
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coefficient(k);
            if (c == 0) continue;
            if (!out.empty()) out += c > 0 ? "+" : "-";
            else if (c < 0) out += "-";
            const Rational mag = boost::multiprecision::abs(c);
            if (k == 0) {
                out += mag.str();
            } else {
                if (mag != 1) out += mag.str() + "*";
                out += "t";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    std::vector<Rational> coefficients_;

    void trim() {
        while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
    }
};

struct PolyDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

inline PolyDivMod divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) fail(ErrorCode::DegenerateInput, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem(static_cast<std::size_t>(a.degree()) + 1);
    for (int i = 0; i <= a.degree(); ++i) rem[static_cast<std::size_t>(i)] = a.coefficient(i);
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lead = b.leading_coefficient();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational factor = rem[static_cast<std::size_t>(k + b.degree())] / lead;
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor == 0) continue;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= factor * b.coefficient(i);
    }
    return {Polynomial::from_coefficients(std::move(quot)),
            Polynomial::from_coefficients(std::move(rem))};
}

inline std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

inline bool divides(const Polynomial& d, const Polynomial& a) {
    return divmod(a, d).remainder.is_zero();
}

// Monic greatest common divisor. Remainders are normalized each step to keep
// the rational coefficients small.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        fail(ErrorCode::DegenerateInput, "gcd(0, 0) is undefined");
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r = divmod(r0, r1).remainder;
        r0 = std::move(r1);
        r1 = r.is_zero() ? std::move(r) : r.monic();
    }
    return r0.monic();
}

// g = u*a + v*b with g the monic gcd.
inline Polynomial extended_gcd(const Polynomial& a, const Polynomial& b, Polynomial& u,
                               Polynomial& v) {
    if (a.is_zero() && b.is_zero())
        fail(ErrorCode::DegenerateInput, "gcd(0, 0) is undefined");
    Polynomial r0 = a, r1 = b;
    Polynomial u0(Rational(1)), u1, v0, v1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        u0 = std::exchange(u1, u0 - q * u1);
        v0 = std::exchange(v1, v0 - q * v1);
    }
    const Rational scale = Rational(1) / r0.leading_coefficient();
    u = scale * u0;
    v = scale * v0;
    return scale * r0;
}

inline bool is_squarefree(const Polynomial& a) {
    if (a.is_zero()) return false;
    if (a.is_constant()) return true;
    return poly_gcd(a, a.derivative()).is_constant();
}

// Largest k with pi^k dividing a; pi nonconstant, a nonzero.
inline int multiplicity_in(const Polynomial& a, const Polynomial& pi) {
    if (a.is_zero())
        fail(ErrorCode::DegenerateInput, "multiplicity in the zero polynomial is undefined");
    if (pi.is_constant())
        fail(ErrorCode::PreconditionViolation, "multiplicity needs a nonconstant divisor");
    int k = 0;
    Polynomial rest = a;
    while (true) {
        auto q = exact_divide(rest, pi);
        if (!q) return k;
        rest = std::move(*q);
        ++k;
    }
}

// Degree-m reversal s^m * a(1/s); needs deg(a) <= m. The value at 0 is the
// coefficient of t^m in a. An involution when deg(a) == m.
inline Polynomial reverse_at_infinity(const Polynomial& a, int m) {
    if (m < 0 || a.degree() > m)
        fail(ErrorCode::PreconditionViolation,
             "reversal degree must be at least deg(a) = " + std::to_string(a.degree()));
    std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) coeffs[static_cast<std::size_t>(k)] = a.coefficient(m - k);
    return Polynomial::from_coefficients(std::move(coeffs));
}

// Res(a, b) over Q via the Euclidean recurrence
//   Res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r),  r = a mod b.
inline Rational resultant(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        fail(ErrorCode::DegenerateInput, "resultant with a zero polynomial");
    if (a.degree() == 0) return rational_pow(a.leading_coefficient(), b.degree());
    if (b.degree() == 0) return rational_pow(b.leading_coefficient(), a.degree());
    Polynomial r = divmod(a, b).remainder;
    if (r.is_zero()) return Rational(0);
    Rational sign = (a.degree() % 2 != 0 && b.degree() % 2 != 0) ? Rational(-1) : Rational(1);
    Rational scale = rational_pow(b.leading_coefficient(), a.degree() - r.degree());
    return sign * scale * resultant(b, r);
}

// Total order used to keep factor lists and reports deterministic: degree
// first, then coefficients from the top down.
inline bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        if (a.coefficient(k) != b.coefficient(k)) return a.coefficient(k) < b.coefficient(k);
    }
    return false;
}

} // namespace ellram

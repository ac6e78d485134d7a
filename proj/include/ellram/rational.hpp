#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "ellram/errors.hpp"

namespace ellram {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always normalized: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1. boost keeps these invariants on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rational_pow(const Rational& base, int k) {
    if (k < 0) {
        if (base == 0) fail(ErrorCode::DegenerateInput, "negative power of zero");
        return rational_pow(Rational(1) / base, -k);
    }
    Rational out(1), b = base;
    for (; k > 0; k /= 2) {
        if (k % 2 != 0) out *= b;
        b *= b;
    }
    return out;
}

inline bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    Integer root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

// Exact square test in Q.
inline bool is_square(const Rational& r) {
    return r >= 0 && is_perfect_square(numerator(r)) && is_perfect_square(denominator(r));
}

// Prime factorization by trial division. Inputs are desk scale throughout.
inline std::vector<std::pair<Integer, int>> trial_factor(Integer n) {
    if (n <= 0) fail(ErrorCode::PreconditionViolation, "trial_factor needs a positive integer");
    std::vector<std::pair<Integer, int>> factors;
    auto strip = [&](const Integer& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    };
    strip(Integer(2));
    for (Integer p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

// Product of the primes dividing n to an odd power, with the sign of n.
// squarefree_part(Integer(-12)) == -3.
inline Integer squarefree_part(const Integer& n) {
    if (n == 0) fail(ErrorCode::DegenerateInput, "squarefree part of zero is undefined");
    Integer out = n < 0 ? -1 : 1;
    for (const auto& [p, e] : trial_factor(boost::multiprecision::abs(n)))
        if (e % 2 != 0) out *= p;
    return out;
}

// Squarefree integer representative of r modulo nonzero rational squares.
inline Integer squarefree_part(const Rational& r) {
    if (r == 0) fail(ErrorCode::DegenerateInput, "squarefree part of zero is undefined");
    return squarefree_part(numerator(r) * denominator(r));
}

inline std::vector<Integer> positive_divisors(const Integer& n) {
    if (n == 0) fail(ErrorCode::DegenerateInput, "divisors of zero are undefined");
    std::vector<Integer> divisors{1};
    for (const auto& [p, e] : trial_factor(boost::multiprecision::abs(n))) {
        const std::size_t count = divisors.size();
        Integer power = 1;
        for (int i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * power);
        }
    }
    return divisors;
}

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace ellram

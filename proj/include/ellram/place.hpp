#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ellram/polynomial.hpp"

namespace ellram {

// A closed point of P^1 over Q: a monic squarefree nonconstant polynomial
// (a degree-d place bundles d conjugate geometric points) or the point at
// infinity.
class Place {
public:
    static Place infinity() { return Place{}; }

    static Place finite(const Polynomial& pi) {
        if (pi.is_zero() || pi.is_constant())
            fail(ErrorCode::PreconditionViolation, "a finite place needs a nonconstant polynomial");
        Polynomial monic = pi.monic();
        if (!is_squarefree(monic))
            fail(ErrorCode::PreconditionViolation,
                 "a finite place needs a squarefree polynomial, got " + monic.to_string());
        Place out;
        out.finite_ = std::move(monic);
        return out;
    }

    bool is_infinity() const { return !finite_.has_value(); }
    bool is_finite() const { return finite_.has_value(); }

    const Polynomial& poly() const {
        if (is_infinity())
            fail(ErrorCode::PreconditionViolation, "the place at infinity has no polynomial");
        return *finite_;
    }

    int degree() const { return is_infinity() ? 1 : finite_->degree(); }

    // Root r of a degree-1 place t - r.
    std::optional<Rational> rational_root() const {
        if (is_infinity() || finite_->degree() != 1) return std::nullopt;
        return -finite_->constant_term();
    }

    std::string to_string() const { return is_infinity() ? "infinity" : finite_->to_string(); }

    bool operator==(const Place& other) const {
        if (is_infinity() || other.is_infinity()) return is_infinity() == other.is_infinity();
        return *finite_ == *other.finite_;
    }

    // Report order: rational places by root, then bundled places by text,
    // infinity last.
    static bool report_less(const Place& a, const Place& b) {
        auto rank = [](const Place& v) { return v.is_infinity() ? 2 : (v.degree() == 1 ? 0 : 1); };
        if (rank(a) != rank(b)) return rank(a) < rank(b);
        if (rank(a) == 0) return *a.rational_root() < *b.rational_root();
        if (rank(a) == 1) return a.to_string() < b.to_string();
        return false;
    }

private:
    std::optional<Polynomial> finite_;
};

} // namespace ellram

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellram/factorization.hpp"
#include "ellram/rational_function.hpp"

namespace ellram {

// Which constants count as squares: over C every nonzero constant is one,
// over Q they are tested exactly.
enum class BaseFieldMode { Complex, Rational };

constexpr std::string_view mode_name(BaseFieldMode m) {
    return m == BaseFieldMode::Complex ? "complex" : "rational";
}

// Canonical representative of a class in K*/(K*)^2 for K = C(t) or Q(t): a
// squarefree integer constant times a monic squarefree polynomial. In Complex
// mode the constant class is always +1.
class SquareClass {
public:
    static SquareClass trivial(BaseFieldMode mode) {
        return SquareClass(Rational(1), Polynomial(Rational(1)), mode);
    }

    SquareClass(Rational constant_class, Polynomial odd_part, BaseFieldMode mode)
        : constant_(std::move(constant_class)), odd_part_(std::move(odd_part)), mode_(mode) {
        if (mode_ == BaseFieldMode::Complex && constant_ != 1)
            fail(ErrorCode::InvariantViolation, "complex-mode square class with a constant part");
    }

    const Rational& constant_class() const { return constant_; }
    const Polynomial& odd_part() const { return odd_part_; }
    BaseFieldMode mode() const { return mode_; }

    bool is_trivial() const { return constant_ == 1 && odd_part_.is_one(); }

    RationalFunction representative() const {
        return RationalFunction(constant_ * odd_part_);
    }

    bool operator==(const SquareClass& other) const {
        return mode_ == other.mode_ && constant_ == other.constant_ &&
               odd_part_ == other.odd_part_;
    }

    std::string to_string() const {
        if (odd_part_.is_one()) return constant_.str();
        if (constant_ == 1) return odd_part_.to_string();
        return constant_.str() + "*(" + odd_part_.to_string() + ")";
    }

    static bool canonical_less(const SquareClass& a, const SquareClass& b) {
        if (a.odd_part_ == b.odd_part_) return a.constant_ < b.constant_;
        return canonical_less(a.odd_part_, b.odd_part_);
    }

private:
    static bool canonical_less(const Polynomial& a, const Polynomial& b) {
        return ellram::canonical_less(a, b);
    }

    Rational constant_;
    Polynomial odd_part_;
    BaseFieldMode mode_;
};

// Class of f modulo squares: f ~ num*den, so the odd part collects the
// squarefree-decomposition parts of odd multiplicity and the constant class
// is the squarefree part of the leading coefficient (+1 over C).
inline SquareClass square_class(const RationalFunction& f, BaseFieldMode mode) {
    if (f.is_zero()) fail(ErrorCode::DegenerateInput, "square class of the zero function");
    const SquarefreeDecomposition dec = squarefree_decompose(f.numerator() * f.denominator());
    Polynomial odd{Rational(1)};
    for (const auto& part : dec.parts)
        if (part.multiplicity % 2 != 0) odd = odd * part.poly;
    Rational constant(1);
    if (mode == BaseFieldMode::Rational) constant = Rational(squarefree_part(dec.content));
    return SquareClass(std::move(constant), std::move(odd), mode);
}

inline SquareClass operator*(const SquareClass& a, const SquareClass& b) {
    if (a.mode() != b.mode())
        fail(ErrorCode::PreconditionViolation, "square classes from different modes");
    return square_class(a.representative() * b.representative(), a.mode());
}

inline bool is_square(const RationalFunction& f, BaseFieldMode mode) {
    if (f.is_zero()) fail(ErrorCode::DegenerateInput, "square test of the zero function");
    return square_class(f, mode).is_trivial();
}

// Places where any representative of the class has odd valuation: the
// rational-root factors of the odd part, its leftover bundle, and infinity
// exactly when deg(odd part) is odd.
inline std::vector<Place> class_support(const SquareClass& c) {
    std::vector<Place> places;
    const Polynomial& odd = c.odd_part();
    if (!odd.is_constant()) {
        RationalSplit split = split_rational_roots(odd);
        for (const Rational& r : split.roots)
            places.push_back(Place::finite(Polynomial::linear_root(r)));
        if (!split.bundle.is_constant()) places.push_back(Place::finite(split.bundle));
    }
    if (odd.degree() > 0 && odd.degree() % 2 != 0) places.push_back(Place::infinity());
    return places;
}

} // namespace ellram

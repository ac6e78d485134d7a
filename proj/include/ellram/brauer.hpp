#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellram/elliptic_surface.hpp"
#include "ellram/square_class.hpp"

namespace ellram {

// Quaternion symbol (slot, f) over the surface's function field, with the
// first slot one of x, x-p, x-q.
struct QuaternionSymbol {
    SymbolSlot slot;
    RationalFunction f;

    QuaternionSymbol(SymbolSlot slot_, RationalFunction f_) : slot(slot_), f(std::move(f_)) {
        if (f.is_zero())
            fail(ErrorCode::DegenerateInput, "quaternion symbol with zero second slot");
    }
};

// The 2-torsion sections: O, R = (0,0), P = (p,0), Q = (q,0), a Klein four
// group with R + P = Q.
enum class TorsionPoint { O, R, P, Q };

constexpr TorsionPoint torsion_add(TorsionPoint a, TorsionPoint b) {
    if (a == b) return TorsionPoint::O;
    if (a == TorsionPoint::O) return b;
    if (b == TorsionPoint::O) return a;
    // distinct nonzero points sum to the third one
    const bool r = a == TorsionPoint::R || b == TorsionPoint::R;
    const bool p = a == TorsionPoint::P || b == TorsionPoint::P;
    return r ? (p ? TorsionPoint::Q : TorsionPoint::P) : TorsionPoint::R;
}

// Connecting map of the 2-descent sequence, as a pair of square classes:
//   delta(O) = (1, 1)          delta(R) = (q/p, -p)
//   delta(P) = (p, (p-q)/p)    delta(M) = (x(M), x(M)-p) otherwise.
inline std::pair<SquareClass, SquareClass> delta(TorsionPoint M, const WeierstrassData& w,
                                                 BaseFieldMode mode) {
    const RationalFunction p{w.p()};
    const RationalFunction q{w.q()};
    switch (M) {
        case TorsionPoint::O:
            return {SquareClass::trivial(mode), SquareClass::trivial(mode)};
        case TorsionPoint::R:
            return {square_class(q / p, mode), square_class(-p, mode)};
        case TorsionPoint::P:
            return {square_class(p, mode), square_class((p - q) / p, mode)};
        case TorsionPoint::Q:
            return {square_class(q, mode), square_class(q - p, mode)};
    }
    fail(ErrorCode::PreconditionViolation, "unknown torsion point");
}

// Generic-point form of delta for a section with x-coordinate x0 not in
// {0, p}; the y-coordinate never enters the formula.
inline std::pair<SquareClass, SquareClass> delta_general(const RationalFunction& x0,
                                                         const WeierstrassData& w,
                                                         BaseFieldMode mode) {
    if (x0.is_zero())
        fail(ErrorCode::PreconditionViolation, "x0 = 0 is the point R; use delta(TorsionPoint::R)");
    if (x0 == RationalFunction(w.p()))
        fail(ErrorCode::PreconditionViolation, "x0 = p is the point P; use delta(TorsionPoint::P)");
    return {square_class(x0, mode), square_class(x0 - RationalFunction(w.p()), mode)};
}

// gamma(f, g) = (x, f) tensor (x-p, g) as a formal list of symbols; trivial
// classes drop out, so gamma(1, f) is the single symbol (x-p, f).
inline std::vector<QuaternionSymbol> gamma(const SquareClass& fclass, const SquareClass& gclass) {
    std::vector<QuaternionSymbol> out;
    if (!fclass.is_trivial()) out.emplace_back(SymbolSlot::X0, fclass.representative());
    if (!gclass.is_trivial()) out.emplace_back(SymbolSlot::XminusP, gclass.representative());
    return out;
}

// Rewrite (a, b) by square-class representatives and the symmetry (a,b) =
// (b,a); nullopt marks a symbol that these rules already make trivial, such
// as (1, a) or (a, bc^2) with b a square. Equal canonical forms certify
// Brauer equality; distinct forms certify nothing.
inline std::optional<std::pair<SquareClass, SquareClass>> normalize_symbol(
    const RationalFunction& a, const RationalFunction& b, BaseFieldMode mode) {
    if (a.is_zero() || b.is_zero())
        fail(ErrorCode::DegenerateInput, "quaternion symbol with a zero slot");
    SquareClass ca = square_class(a, mode);
    SquareClass cb = square_class(b, mode);
    if (ca.is_trivial() || cb.is_trivial()) return std::nullopt;
    if (SquareClass::canonical_less(cb, ca)) std::swap(ca, cb);
    return std::make_pair(std::move(ca), std::move(cb));
}

enum class PlaceVerdict { Unramified, Ramified };

enum class RamificationReason {
    Ok,           // place passes the criterion
    ZeroOfPQ,     // p' or q' vanishes at the place (leading coefficient at infinity)
    NodeMismatch, // p' and q' differ at the place, so the fiber node is missing
};

constexpr std::string_view reason_name(RamificationReason r) {
    switch (r) {
        case RamificationReason::Ok: return "ok";
        case RamificationReason::ZeroOfPQ: return "zero_of_pq";
        case RamificationReason::NodeMismatch: return "node_mismatch";
    }
    return "?";
}

struct CheckedPlace {
    Place place;
    PlaceVerdict verdict = PlaceVerdict::Unramified;
    RamificationReason reason = RamificationReason::Ok;
};

struct RamificationReport {
    std::vector<CheckedPlace> checked_places;
    bool overall_extends = true;
    // Rational mode: values that must be squares in the base field for the
    // extension to exist there, one per unramified rational place.
    std::vector<Rational> required_squares;
    // Rational mode, degree >= 2 places: the residue of p' that would have to
    // be a square in Q[t]/(place); left symbolic.
    std::vector<std::pair<Place, Polynomial>> symbolic_conditions;
};

// Ramification criterion for (slot, f) on a stable surface with even m: after
// shifting the slot to plain x, the class extends across the fiber over a
// zero or pole of the square class of f iff p' and q' are nonzero and agree
// there; at infinity iff both keep full degree m and share the leading
// coefficient. Even-order zeros and poles of f never enter: the symbol only
// sees f modulo squares.
inline RamificationReport ramification_verdict(const WeierstrassData& w,
                                               const QuaternionSymbol& sym, BaseFieldMode mode) {
    fiber_table(w); // gates: stability everywhere, then even m at infinity

    const WeierstrassData shifted = shift_coordinates(w, sym.slot);
    const Polynomial& p = shifted.p();
    const Polynomial& q = shifted.q();
    const int m = shifted.infinity_model_degree();
    const Polynomial pq = p * q;

    RamificationReport report;
    for (const Place& v : class_support(square_class(sym.f, mode))) {
        CheckedPlace checked{v};
        if (v.is_finite()) {
            const Polynomial& h = v.poly();
            if (!poly_gcd(h, pq).is_constant()) {
                checked.verdict = PlaceVerdict::Ramified;
                checked.reason = RamificationReason::ZeroOfPQ;
            } else if (!divides(h, shifted.difference())) {
                checked.verdict = PlaceVerdict::Ramified;
                checked.reason = RamificationReason::NodeMismatch;
            } else if (mode == BaseFieldMode::Rational) {
                if (auto r = v.rational_root())
                    report.required_squares.push_back(p(*r));
                else
                    report.symbolic_conditions.emplace_back(v, divmod(p, h).remainder);
            }
        } else {
            if (p.degree() < m || q.degree() < m) {
                checked.verdict = PlaceVerdict::Ramified;
                checked.reason = RamificationReason::ZeroOfPQ;
            } else if (p.leading_coefficient() != q.leading_coefficient()) {
                checked.verdict = PlaceVerdict::Ramified;
                checked.reason = RamificationReason::NodeMismatch;
            } else if (mode == BaseFieldMode::Rational) {
                // value of the reversed p at s = 0
                report.required_squares.push_back(p.leading_coefficient());
            }
        }
        report.overall_extends &= checked.verdict == PlaceVerdict::Unramified;
        report.checked_places.push_back(std::move(checked));
    }
    return report;
}

struct TrivialityVerdict {
    enum class Kind { Trivial, Nontrivial, Inconclusive };
    enum class InconclusiveReason { None, RamifiedInput, RankBoundPositive, SymbolicSquareUndecided };

    Kind kind = Kind::Inconclusive;
    int trivial_case = 0; // 1..3 when kind == Trivial
    InconclusiveReason reason = InconclusiveReason::None;

    static TrivialityVerdict trivial(int c) { return {Kind::Trivial, c, InconclusiveReason::None}; }
    static TrivialityVerdict nontrivial() { return {Kind::Nontrivial, 0, InconclusiveReason::None}; }
    static TrivialityVerdict inconclusive(InconclusiveReason r) {
        return {Kind::Inconclusive, 0, r};
    }

    bool operator==(const TrivialityVerdict&) const = default;
};

constexpr std::string_view inconclusive_reason_name(TrivialityVerdict::InconclusiveReason r) {
    switch (r) {
        case TrivialityVerdict::InconclusiveReason::None: return "none";
        case TrivialityVerdict::InconclusiveReason::RamifiedInput: return "ramified_input";
        case TrivialityVerdict::InconclusiveReason::RankBoundPositive: return "rank_bound_positive";
        case TrivialityVerdict::InconclusiveReason::SymbolicSquareUndecided:
            return "symbolic_square_undecided";
    }
    return "?";
}

// Case enumeration behind the triviality criterion, on shifted data (p', q'):
// a trivial (x, f) forces f into the image of the 2-descent map, which with a
// torsion Mordell-Weil group leaves (with lambda, mu squares in the base
// function field)
//   1. f a square,
//   2. q' = lambda f and p' = mu (f - 1),
//   3. q' = -lambda f and p' = -mu,
//   4. p' = lambda f and q' = mu f (f - 1)  -- excluded by stability.
// A case-4 match on a stable surface is therefore reported as an anomaly.
inline TrivialityVerdict classify_trivial_cases(const WeierstrassData& shifted,
                                                const RationalFunction& f, BaseFieldMode mode) {
    if (f.is_zero()) fail(ErrorCode::DegenerateInput, "triviality of a symbol with zero slot");
    const RationalFunction p{shifted.p()};
    const RationalFunction q{shifted.q()};
    if (is_square(f, mode)) return TrivialityVerdict::trivial(1);

    const RationalFunction f_minus_1 = f - RationalFunction(1);
    // f == 1 lands in case 1, so f - 1 is nonzero from here on
    if (is_square(q / f, mode) && is_square(p / f_minus_1, mode))
        return TrivialityVerdict::trivial(2);
    if (is_square(-(q / f), mode) && is_square(-p, mode)) return TrivialityVerdict::trivial(3);
    if (is_square(p / f, mode) && is_square(q / (f * f_minus_1), mode))
        fail(ErrorCode::InvariantViolation,
             "triviality case 4 matched on a stable surface; stability is supposed to exclude "
             "p' = lambda*f, q' = mu*f*(f-1)");
    return TrivialityVerdict::nontrivial();
}

// Full triviality verdict for (slot, f): needs the class unramified and the
// rank bound zero (which pins the Mordell-Weil group to torsion); then the
// case enumeration decides.
inline TrivialityVerdict triviality_verdict(const WeierstrassData& w, const QuaternionSymbol& sym,
                                            const SurfaceInvariants& inv, BaseFieldMode mode) {
    const RamificationReport ram = ramification_verdict(w, sym, mode);
    if (!ram.overall_extends)
        return TrivialityVerdict::inconclusive(TrivialityVerdict::InconclusiveReason::RamifiedInput);
    if (inv.mw_rank_bound > 0)
        return TrivialityVerdict::inconclusive(
            TrivialityVerdict::InconclusiveReason::RankBoundPositive);
    return classify_trivial_cases(shift_coordinates(w, sym.slot), sym.f, mode);
}

} // namespace ellram

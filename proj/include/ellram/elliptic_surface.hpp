#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellram/factorization.hpp"
#include "ellram/place.hpp"

namespace ellram {

// First slot of the quaternion symbols under study: x, x-p or x-q.
enum class SymbolSlot { X0, XminusP, XminusQ };

constexpr std::string_view slot_name(SymbolSlot s) {
    switch (s) {
        case SymbolSlot::X0: return "x";
        case SymbolSlot::XminusP: return "x-p";
        case SymbolSlot::XminusQ: return "x-q";
    }
    return "?";
}

// The Weierstrass surface y^2 = x(x-p)(x-q) over P^1. The 2-torsion
// x-coordinates 0, p, q must be distinct functions, so p, q and p-q are all
// nonzero; the difference is cached because every fiber question uses it.
class WeierstrassData {
public:
    WeierstrassData(Polynomial p, Polynomial q)
        : p_(std::move(p)), q_(std::move(q)), diff_(p_ - q_) {
        if (p_.is_zero())
            fail(ErrorCode::ValidationError, "invalid Weierstrass data: p is zero");
        if (q_.is_zero())
            fail(ErrorCode::ValidationError, "invalid Weierstrass data: q is zero");
        if (diff_.is_zero())
            fail(ErrorCode::ValidationError,
                 "invalid Weierstrass data: p = q collapses two 2-torsion sections");
    }

    const Polynomial& p() const { return p_; }
    const Polynomial& q() const { return q_; }
    const Polynomial& difference() const { return diff_; }

    // m = max(deg p, deg q); the reversal model at infinity exists iff m is even.
    int infinity_model_degree() const { return std::max(p_.degree(), q_.degree()); }

private:
    Polynomial p_, q_, diff_;
};

// Multiplicities of p, q and p-q at one place. When exactly one of a, b is
// positive the other two numbers are forced to zero by the algebra; the
// constructor asserts that.
struct FiberSignature {
    int a = 0, b = 0, n = 0;

    FiberSignature() = default;
    FiberSignature(int a_, int b_, int n_) : a(a_), b(b_), n(n_) {
        if (((a > 0 && b == 0) || (b > 0 && a == 0)) && n != 0)
            fail(ErrorCode::InvariantViolation,
                 "fiber signature violates the forced-zero rule (a,b,n) = (" +
                     std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) + ")");
    }

    bool stable() const { return a == 0 || b == 0; }
    int singular_index() const { return 2 * (a + b + n); } // I_k index when stable
};

struct FiberReport {
    Place place;
    FiberSignature signature;
    bool stable = true;
    std::optional<int> kodaira; // I_k with k = 2(a+b+n); nullopt when unstable

    std::string kodaira_name() const {
        return kodaira ? "I_" + std::to_string(*kodaira) : "unstable";
    }
};

// Fiber over a finite place: multiplicities of p, q, p-q there; stable iff
// p and q do not vanish simultaneously, and then of type I_{2(a+b+n)}.
inline FiberReport classify_fiber(const WeierstrassData& w, const Place& v) {
    if (v.is_infinity())
        fail(ErrorCode::PreconditionViolation,
             "classify_fiber handles finite places; use classify_fiber_at_infinity");
    const Polynomial& pi = v.poly();
    FiberReport out;
    out.place = v;
    out.signature = FiberSignature(multiplicity_in(w.p(), pi), multiplicity_in(w.q(), pi),
                                   multiplicity_in(w.difference(), pi));
    out.stable = out.signature.stable();
    if (out.stable) out.kodaira = out.signature.singular_index();
    return out;
}

// Model at infinity: substitute s = 1/t and clear s^m with m = max(deg p,
// deg q). For even m the coordinate change Y = s^{3m/2} y, X = s^m x turns
// this into Weierstrass form with the degree-m reversals of p and q.
inline WeierstrassData infinity_model(const WeierstrassData& w) {
    const int m = w.infinity_model_degree();
    if (m % 2 != 0)
        fail(ErrorCode::InapplicableModel,
             "max(deg p, deg q) = " + std::to_string(m) +
                 " is odd; the model at infinity needs an even degree for the substitution"
                 " Y = s^(3m/2) y, X = s^m x");
    return {reverse_at_infinity(w.p(), m), reverse_at_infinity(w.q(), m)};
}

inline FiberReport classify_fiber_at_infinity(const WeierstrassData& w) {
    const WeierstrassData reversed = infinity_model(w);
    FiberReport out = classify_fiber(reversed, Place::finite(Polynomial::variable()));
    out.place = Place::infinity();
    return out;
}

// All singular fibers plus the fiber at infinity, in report order. Rejects
// unstable surfaces (naming the offending place) before touching the model
// at infinity, so the stability error wins over the parity error.
inline std::vector<FiberReport> fiber_table(const WeierstrassData& w) {
    const CoprimeBasis cb = coprime_basis({w.p(), w.q(), w.difference()});
    std::vector<FiberReport> table;
    for (const Polynomial& h : cb.basis) {
        RationalSplit split = split_rational_roots(h);
        for (const Rational& r : split.roots)
            table.push_back(classify_fiber(w, Place::finite(Polynomial::linear_root(r))));
        if (!split.bundle.is_constant())
            table.push_back(classify_fiber(w, Place::finite(split.bundle)));
    }
    std::sort(table.begin(), table.end(), [](const FiberReport& a, const FiberReport& b) {
        return Place::report_less(a.place, b.place);
    });
    for (const FiberReport& report : table)
        if (!report.stable)
            fail(ErrorCode::UnsupportedSurface,
                 "unstable (additive) fiber at place " + report.place.to_string() +
                     ": p and q vanish there simultaneously");
    table.push_back(classify_fiber_at_infinity(w));
    return table;
}

struct SurfaceInvariants {
    long long euler = 0;          // sum of deg(place) * 2(a+b+n), infinity included
    long long chi = 0;            // euler / 12
    long long h11 = 0;            // 10 * chi
    long long sum_m_minus_1 = 0;  // sum of deg(place) * (fiber components - 1)
    long long mw_rank_bound = 0;  // h11 - 2 - sum_m_minus_1; upper bound for rk MW,
                                  // exact iff the Picard number is maximal
};

inline SurfaceInvariants surface_invariants_of_table(const std::vector<FiberReport>& table) {
    SurfaceInvariants inv;
    for (const FiberReport& report : table) {
        if (!report.stable)
            fail(ErrorCode::UnsupportedSurface,
                 "unstable (additive) fiber at place " + report.place.to_string());
        const int k = *report.kodaira;
        inv.euler += static_cast<long long>(report.place.degree()) * k;
        if (k >= 1) inv.sum_m_minus_1 += static_cast<long long>(report.place.degree()) * (k - 1);
    }
    if (inv.euler == 0)
        fail(ErrorCode::UnsupportedSurface,
             "no singular fibers (isotrivial product surface): the invariants need chi >= 1");
    if (inv.euler % 12 != 0)
        fail(ErrorCode::InvariantViolation,
             "euler number " + std::to_string(inv.euler) + " is not divisible by 12");
    inv.chi = inv.euler / 12;
    inv.h11 = 10 * inv.chi;
    inv.mw_rank_bound = inv.h11 - 2 - inv.sum_m_minus_1;
    if (inv.mw_rank_bound < 0)
        fail(ErrorCode::InvariantViolation, "negative Mordell-Weil rank bound");
    return inv;
}

inline SurfaceInvariants surface_invariants(const WeierstrassData& w) {
    return surface_invariants_of_table(fiber_table(w));
}

// Coordinate change presenting the symbol slot as plain x on an isomorphic
// model: X = x - p turns y^2 = x(x-p)(x-q) into y^2 = X(X+p)(X+p-q), so the
// shifted data is (-p, q-p); likewise (-q, p-q) for X = x - q. The surface,
// hence every invariant, is unchanged.
inline WeierstrassData shift_coordinates(const WeierstrassData& w, SymbolSlot slot) {
    switch (slot) {
        case SymbolSlot::X0: return w;
        case SymbolSlot::XminusP: return {-w.p(), w.q() - w.p()};
        case SymbolSlot::XminusQ: return {-w.q(), w.p() - w.q()};
    }
    fail(ErrorCode::PreconditionViolation, "unknown symbol slot");
}

} // namespace ellram

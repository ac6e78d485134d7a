#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ellram/polynomial.hpp"

namespace ellram {

// a = content * prod parts[i].poly ^ parts[i].multiplicity with the parts
// monic, squarefree, nonconstant and pairwise coprime; each multiplicity
// appears at most once. Computed with Yun's algorithm (characteristic zero).
struct SquarefreeDecomposition {
    struct Part {
        Polynomial poly;
        int multiplicity;
    };
    std::vector<Part> parts;
    Rational content;

    Polynomial reassemble() const {
        Polynomial out{content};
        for (const auto& part : parts) out = out * part.poly.pow(part.multiplicity);
        return out;
    }
};

inline SquarefreeDecomposition squarefree_decompose(const Polynomial& a) {
    if (a.is_zero())
        fail(ErrorCode::DegenerateInput, "squarefree decomposition of the zero polynomial");
    SquarefreeDecomposition out;
    out.content = a.leading_coefficient();
    if (a.is_constant()) return out;

    Polynomial c = a.monic();
    Polynomial g = poly_gcd(c, c.derivative());
    Polynomial d;
    if (!g.is_constant()) {
        Polynomial next = *exact_divide(c, g);
        d = *exact_divide(c.derivative(), g) - next.derivative();
        c = std::move(next);
    } else {
        d = Polynomial(); // c already squarefree: first gcd(c, 0) picks up all of it
    }
    for (int multiplicity = 1; !c.is_constant(); ++multiplicity) {
        Polynomial part = poly_gcd(c, d);
        if (!part.is_constant()) out.parts.push_back({part, multiplicity});
        Polynomial next = *exact_divide(c, part);
        d = *exact_divide(d, part) - next.derivative();
        c = std::move(next);
    }
    return out;
}

// Product of the distinct monic irreducible factors (the radical), monic.
inline Polynomial squarefree_part(const Polynomial& a) {
    Polynomial out{Rational(1)};
    for (const auto& part : squarefree_decompose(a).parts) out = out * part.poly;
    return out;
}

// gcd-free basis: monic squarefree pairwise coprime polynomials such that
// every input is a unit times a product of basis powers. Stands in for
// irreducible factorization; a degree-d element bundles d conjugate points.
struct CoprimeBasis {
    std::vector<Polynomial> basis;            // canonically sorted
    std::vector<std::vector<int>> exponents;  // exponents[i][j]: basis[j] in inputs[i]
    std::vector<Rational> units;              // inputs[i] == units[i] * prod basis[j]^exponents[i][j]
};

inline CoprimeBasis coprime_basis(std::span<const Polynomial> inputs) {
    std::vector<Polynomial> basis;
    auto insert = [&basis](Polynomial h) {
        // h monic squarefree; split against the existing elements by gcd
        for (std::size_t i = 0; i < basis.size() && !h.is_constant(); ++i) {
            Polynomial g = poly_gcd(h, basis[i]);
            if (g.is_constant()) continue;
            if (g.degree() < basis[i].degree()) {
                Polynomial rest = *exact_divide(basis[i], g);
                basis[i] = std::move(g);
                basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(rest));
            }
            h = *exact_divide(h, basis[i]);
        }
        if (!h.is_constant()) basis.push_back(std::move(h));
    };

    for (const Polynomial& input : inputs) {
        if (input.is_zero())
            fail(ErrorCode::DegenerateInput, "coprime basis of a zero polynomial");
        for (const auto& part : squarefree_decompose(input).parts) insert(part.poly);
    }
    std::sort(basis.begin(), basis.end(), canonical_less);

    CoprimeBasis out;
    out.basis = std::move(basis);
    for (const Polynomial& input : inputs) {
        std::vector<int> row;
        row.reserve(out.basis.size());
        Polynomial rest = input;
        for (const Polynomial& element : out.basis) {
            int e = rest.is_constant() ? 0 : multiplicity_in(rest, element);
            if (e > 0) rest = *exact_divide(rest, element.pow(e));
            row.push_back(e);
        }
        if (!rest.is_constant())
            fail(ErrorCode::InvariantViolation, "coprime basis does not exhaust an input");
        out.exponents.push_back(std::move(row));
        out.units.push_back(rest.leading_coefficient());
    }
    return out;
}

inline CoprimeBasis coprime_basis(std::initializer_list<Polynomial> inputs) {
    std::vector<Polynomial> v(inputs);
    return coprime_basis(std::span<const Polynomial>(v));
}

// Distinct rational roots, found by trial over u/v with u | constant term and
// v | leading coefficient of the denominator-cleared polynomial.
inline std::vector<Rational> rational_roots(const Polynomial& a) {
    if (a.is_zero()) fail(ErrorCode::DegenerateInput, "roots of the zero polynomial");
    std::vector<Rational> roots;
    if (a.is_constant()) return roots;

    Polynomial rest = a;
    if (rest.constant_term() == 0) {
        roots.emplace_back(0);
        const Polynomial t = Polynomial::variable();
        while (rest.constant_term() == 0 && !rest.is_constant())
            rest = *exact_divide(rest, t);
    }
    if (rest.is_constant()) return roots;

    Integer clear(1);
    for (int k = 0; k <= rest.degree(); ++k)
        clear = boost::multiprecision::lcm(clear, denominator(rest.coefficient(k)));
    Integer c0 = numerator(Rational(clear) * rest.constant_term());
    Integer cn = numerator(Rational(clear) * rest.leading_coefficient());

    for (const Integer& u : positive_divisors(c0)) {
        for (const Integer& v : positive_divisors(cn)) {
            if (boost::multiprecision::gcd(u, v) != 1) continue;
            for (int sign : {1, -1}) {
                Rational r(sign * u, v);
                if (rest(r) != 0) continue;
                roots.push_back(r);
                Polynomial factor = Polynomial::linear_root(r);
                while (auto q = exact_divide(rest, factor)) rest = std::move(*q);
                if (rest.is_constant()) {
                    std::sort(roots.begin(), roots.end());
                    return roots;
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// h (monic squarefree) = prod (t - roots[i]) * bundle, with the bundle monic
// squarefree and free of rational roots. Degree >= 2 bundles stay unsplit:
// their conjugate points share every divisibility property we test.
struct RationalSplit {
    std::vector<Rational> roots; // ascending
    Polynomial bundle;           // monic; 1 when h splits completely
};

inline RationalSplit split_rational_roots(const Polynomial& h) {
    RationalSplit out;
    out.roots = rational_roots(h);
    out.bundle = h.monic();
    for (const Rational& r : out.roots)
        out.bundle = *exact_divide(out.bundle, Polynomial::linear_root(r));
    return out;
}

} // namespace ellram

#pragma once

/*
 * Real algebraic numbers as (squarefree defining polynomial, isolating
 * interval). Equality and ordering are decided exactly: equality through a
 * gcd of the defining polynomials plus Sturm counts on the overlap window,
 * ordering by interval refinement until disjoint.
 */

#include "fieldzero/sturm.hpp"

#include <stdexcept>
#include <string>

namespace fieldzero {

struct AlgebraicNumber {
    UniPoly poly;           // squarefree, nonzero
    IsolatingInterval iv;   // isolates exactly one root of poly

    bool is_rational_point() const { return iv.is_point(); }

    Rational approx() const { return iv.mid(); }

    AlgebraicNumber refined(const Rational& width) const {
        return AlgebraicNumber{poly, refine_interval(iv, width)};
    }

    // 1/alpha for alpha != 0; defining polynomial is the reversal.
    AlgebraicNumber reciprocal() const {
        AlgebraicNumber a = *this;
        if (a.iv.is_point()) {
            if (a.iv.lo == 0) throw std::domain_error("reciprocal of zero");
            UniPoly rp = squarefree_part(a.poly.reversed(a.poly.degree()));
            Rational r = 1 / a.iv.lo;
            return AlgebraicNumber{rp, IsolatingInterval{r, r, rp}};
        }
        while (a.iv.lo <= 0 && 0 <= a.iv.hi) {
            a.iv = refine_interval(a.iv, a.iv.width() / 4);
            if (a.iv.is_point()) return a.reciprocal();
        }
        UniPoly rp = squarefree_part(a.poly.reversed(a.poly.degree()));
        Rational lo = 1 / a.iv.hi, hi = 1 / a.iv.lo;
        return AlgebraicNumber{rp, IsolatingInterval{lo, hi, rp}};
    }
};

inline AlgebraicNumber make_algebraic(const Rational& r) {
    UniPoly p(std::vector<Rational>{-r, Rational(1)});
    return AlgebraicNumber{p, IsolatingInterval{r, r, p}};
}

namespace detail {

// Does the (possibly degenerate) isolated root of `a` equal the rational r?
inline bool root_equals_rational(const AlgebraicNumber& a, const Rational& r) {
    if (a.iv.is_point()) return a.iv.lo == r;
    // the root is strictly inside the bracket and is the only root there
    return a.poly.eval(r) == 0 && a.iv.lo < r && r < a.iv.hi;
}

}  // namespace detail

// Exact equality test.
inline bool algebraic_equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.iv.is_point()) return detail::root_equals_rational(b, a.iv.lo);
    if (b.iv.is_point()) return detail::root_equals_rational(a, b.iv.lo);

    UniPoly g = uni_gcd(a.poly, b.poly);
    if (g.degree() <= 0) return false;

    AlgebraicNumber x = a, y = b;
    SturmChain cg(g), cx(x.poly), cy(y.poly);
    for (;;) {
        // decisive rational hits at the window corners
        for (const Rational& e : {x.iv.lo, x.iv.hi, y.iv.lo, y.iv.hi}) {
            if (detail::root_equals_rational(x, e)) return detail::root_equals_rational(y, e);
            if (detail::root_equals_rational(y, e)) return detail::root_equals_rational(x, e);
        }
        if (x.iv.hi <= y.iv.lo || y.iv.hi <= x.iv.lo) return false;
        Rational lo = x.iv.lo > y.iv.lo ? x.iv.lo : y.iv.lo;
        Rational hi = x.iv.hi < y.iv.hi ? x.iv.hi : y.iv.hi;
        bool endpoint_root = x.poly.eval(lo) == 0 || x.poly.eval(hi) == 0 ||
                             y.poly.eval(lo) == 0 || y.poly.eval(hi) == 0;
        if (!endpoint_root && cx.count_in(lo, hi) == 1 && cy.count_in(lo, hi) == 1 &&
            cg.count_in(lo, hi) >= 1)
            return true;  // a common root inside a window holding one root of each

        x.iv = refine_interval(x.iv, x.iv.width() / 4);
        y.iv = refine_interval(y.iv, y.iv.width() / 4);
        if (x.iv.is_point()) return detail::root_equals_rational(y, x.iv.lo);
        if (y.iv.is_point()) return detail::root_equals_rational(x, y.iv.lo);
    }
}

// Strict ordering; refines until the intervals separate (equal -> false).
inline bool algebraic_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (algebraic_equal(a, b)) return false;
    AlgebraicNumber x = a, y = b;
    for (;;) {
        if (x.iv.is_point() && y.iv.is_point()) return x.iv.lo < y.iv.lo;
        if (x.iv.hi <= y.iv.lo) return true;
        if (y.iv.hi <= x.iv.lo) return false;
        x.iv = refine_interval(x.iv, x.iv.width() / 4);
        y.iv = refine_interval(y.iv, y.iv.width() / 4);
    }
}

inline std::string algebraic_decimal(const AlgebraicNumber& a, int digits = 12) {
    Rational w = pow2(-4 * digits);
    AlgebraicNumber r = a.refined(w);
    return decimal_string(r.approx(), digits);
}

}  // namespace fieldzero

#pragma once

/*
 * Polynomial families governing the asymptotic directions of the component
 * zero sets.
 *
 * P_L and Q_L are the numerators of the L-th derivatives of x/(1+x^2)^{3/2}
 * and 1/(1+x^2)^{3/2} over (1+x^2)^{(2L+3)/2}; they satisfy the recursion
 * R_L = (1+x^2) R'_{L-1} - (2L+1) x R_{L-1} from P_0 = x, Q_0 = 1. Their
 * real roots in (-1, 1) are the steep ("x = beta y") direction candidates.
 *
 * numC_L and numD_L are the numerators of the L-th derivatives of
 * x^{L+2}/(1+x^2)^{3/2} and x^{L+1}/(1+x^2)^{3/2}; their nonzero real roots
 * in (-1, 1) are the shallow ("y = alpha x") direction candidates. They are
 * computed by exact quotient-rule differentiation with the half-integer
 * denominator exponent tracked symbolically, so no radical is ever formed.
 */

#include "fieldzero/unipoly.hpp"

#include <stdexcept>
#include <vector>

namespace fieldzero {

// num / (1+x^2)^(half_exp/2) with half_exp odd.
struct HalfIntegerQuotient {
    UniPoly num;
    long half_exp = 3;

    HalfIntegerQuotient derivative() const {
        UniPoly one_plus_x2(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
        UniPoly x = UniPoly::variable();
        return HalfIntegerQuotient{num.derivative() * one_plus_x2 - Rational(half_exp) * (x * num),
                                   half_exp + 2};
    }

    HalfIntegerQuotient nth_derivative(long n) const {
        HalfIntegerQuotient q = *this;
        for (long i = 0; i < n; ++i) q = q.derivative();
        return q;
    }
};

struct AsymptotePolynomials {
    long L = 0;
    UniPoly P;     // degree L+1
    UniPoly Q;     // degree L
    UniPoly numC;  // numerator of C_L over (1+x^2)^{(2L+3)/2}
    UniPoly numD;  // numerator of D_L over (1+x^2)^{(2L+3)/2}
};

inline UniPoly asymptote_recursion_step(const UniPoly& prev, long L) {
    UniPoly one_plus_x2(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    UniPoly x = UniPoly::variable();
    return one_plus_x2 * prev.derivative() - Rational(2 * L + 1) * (x * prev);
}

// All four families at index L.
inline AsymptotePolynomials build_asymptote_polys(long L) {
    if (L < 0) throw std::invalid_argument("negative asymptote index");
    AsymptotePolynomials out;
    out.L = L;
    out.P = UniPoly::variable();
    out.Q = UniPoly(Rational(1));
    for (long k = 1; k <= L; ++k) {
        out.P = asymptote_recursion_step(out.P, k);
        out.Q = asymptote_recursion_step(out.Q, k);
    }
    out.numC = HalfIntegerQuotient{UniPoly::monomial(static_cast<int>(L) + 2, Rational(1)), 3}
                   .nth_derivative(L)
                   .num;
    out.numD = HalfIntegerQuotient{UniPoly::monomial(static_cast<int>(L) + 1, Rational(1)), 3}
                   .nth_derivative(L)
                   .num;
    return out;
}

}  // namespace fieldzero

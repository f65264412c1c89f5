#pragma once

/*
 * Elimination for bivariate polynomial pairs.
 *
 * The candidate search needs a univariate polynomial whose roots provably
 * contain every coordinate value at which the two inputs can share a root
 * in the other variable. The determinant of the fixed-size Sylvester matrix
 * (at the nominal degrees) does exactly that: a common root at t makes the
 * evaluated matrix singular, including the cases where leading coefficients
 * drop at t. The determinant polynomial is recovered exactly from point
 * samples by Newton interpolation; the sample count exceeds its degree
 * bound, so an all-zero sample set proves the determinant vanishes
 * identically, which happens precisely when the inputs share a factor of
 * positive degree in the eliminated variable.
 */

#include "fieldzero/unipoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace fieldzero {

struct CommonFactorError : std::runtime_error {
    CommonFactorError()
        : std::runtime_error("inputs share a factor of positive degree in the eliminated variable") {}
};

// Polynomials in one "main" variable with UniPoly coefficients in the other.
namespace coeffpoly {

using Poly = std::vector<UniPoly>;  // index = main-variable power; back() nonzero

inline void normalize(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline int coefficient_degree(const Poly& p) {
    int d = 0;
    for (const auto& c : p) d = std::max(d, c.degree());
    return d;
}

// gcd of the coefficients (monic); pure factors in the coefficient variable
// live here
inline UniPoly content(const Poly& p) {
    UniPoly g;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : uni_gcd(g, c);
        if (g.degree() == 0) return g;
    }
    return g;
}

inline Poly divide_content(const Poly& p, const UniPoly& c) {
    Poly out;
    out.reserve(p.size());
    for (const auto& a : p) {
        if (a.is_zero()) {
            out.emplace_back();
            continue;
        }
        auto [q, rem] = a.divrem(c);
        if (!rem.is_zero()) throw std::logic_error("content division not exact");
        out.push_back(std::move(q));
    }
    normalize(out);
    return out;
}

}  // namespace coeffpoly

namespace detail {

inline Rational determinant(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

inline Rational sylvester_det_at(const coeffpoly::Poly& A, const coeffpoly::Poly& B, const Rational& t) {
    const int d1 = coeffpoly::degree(A), d2 = coeffpoly::degree(B);
    const size_t n = static_cast<size_t>(d1 + d2);
    std::vector<Rational> a(A.size()), b(B.size());
    for (size_t i = 0; i < A.size(); ++i) a[i] = A[i].eval(t);
    for (size_t i = 0; i < B.size(); ++i) b[i] = B[i].eval(t);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (int row = 0; row < d2; ++row)
        for (int k = 0; k <= d1; ++k) m[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = a[static_cast<size_t>(d1 - k)];
    for (int row = 0; row < d1; ++row)
        for (int k = 0; k <= d2; ++k) m[static_cast<size_t>(d2 + row)][static_cast<size_t>(row + k)] = b[static_cast<size_t>(d2 - k)];
    return determinant(std::move(m));
}

// Newton interpolation through (points[i], values[i]) with distinct nodes.
inline UniPoly newton_interpolate(const std::vector<Rational>& points, const std::vector<Rational>& values) {
    const size_t n = points.size();
    std::vector<Rational> dd = values;  // divided differences, updated in place
    UniPoly result;
    UniPoly basis(Rational(1));
    for (size_t k = 0; k < n; ++k) {
        if (k > 0) {
            for (size_t i = n - 1; i >= k; --i)
                dd[i] = (dd[i] - dd[i - 1]) / (points[i] - points[i - k]);
            basis = basis * UniPoly(std::vector<Rational>{-points[k - 1], Rational(1)});
        }
        if (dd[k] != 0) result += dd[k] * basis;
    }
    return result;
}

}  // namespace detail

// Product-free root superset: a nonzero univariate polynomial in the
// coefficient variable whose roots contain all values where the two inputs
// have a common root in the main variable. Throws CommonFactorError when
// no such polynomial exists because the inputs share a positive-degree
// factor.
inline UniPoly resultant_root_superset(coeffpoly::Poly A, coeffpoly::Poly B) {
    using namespace coeffpoly;
    normalize(A);
    normalize(B);
    if (A.empty() || B.empty()) throw std::invalid_argument("elimination of a zero polynomial");

    // Pure factors in the coefficient variable vanish wherever a common root
    // exists through them; stripping keeps the Sylvester step nondegenerate
    // when the inputs share such a factor (symmetric charge systems do).
    UniPoly collected(Rational(1));
    {
        UniPoly ca = content(A), cb = content(B);
        if (ca.degree() >= 1) {
            collected = collected * ca;
            A = divide_content(A, ca);
        }
        if (cb.degree() >= 1) {
            collected = collected * cb;
            B = divide_content(B, cb);
        }
    }
    if (degree(A) == 0) return (collected * A[0]).primitive();
    if (degree(B) == 0) return (collected * B[0]).primitive();

    const long bound = static_cast<long>(degree(A)) * coefficient_degree(B) +
                       static_cast<long>(degree(B)) * coefficient_degree(A);
    std::vector<Rational> points, values;
    points.reserve(static_cast<size_t>(bound) + 1);
    bool any_nonzero = false;
    for (long i = 0; i <= bound; ++i) {
        long t = (i % 2 == 0) ? i / 2 : -(i / 2 + 1);  // 0, -1, 1, -2, 2, ...
        points.emplace_back(t);
        values.push_back(detail::sylvester_det_at(A, B, points.back()));
        any_nonzero |= values.back() != 0;
    }
    if (!any_nonzero) throw CommonFactorError();
    UniPoly D = detail::newton_interpolate(points, values);
    if (D.is_zero()) throw CommonFactorError();
    return (collected * D).primitive();
}

}  // namespace fieldzero

#pragma once

/*
 * Square-root elimination by sign products.
 *
 * Writing chi_j for the half-integer-power products prod_{k != j} r_k^3
 * (r_k^2 = (x-x_k)^2 + y^2), the field components over the common
 * denominator are signed combinations sum_j sigma(j) a_j A_j chi_j. The
 * product over all 2^M sign patterns sigma is even in every chi_j, hence a
 * true polynomial once chi_j^2 is replaced by its polynomial value. The
 * computation happens in a formal radical ring: elements are maps from
 * squarefree chi-monomials (subset masks) to bivariate polynomials, with
 * the reduction chi_j^2 -> prod_{k != j} r_k^6 applied eagerly.
 *
 * Joint mode multiplies |X_sigma D|^2 + |Y_sigma D|^2 over all sigma and
 * also produces the structurally reduced polynomial with the known common
 * factor prod_k (r_k^2)^{2^M} removed; the reduced polynomial has the same
 * zero containment away from the charges and much smaller degree.
 * Single-component mode multiplies the signed component sums themselves.
 */

#include "fieldzero/bipoly.hpp"
#include "fieldzero/box.hpp"
#include "fieldzero/charge_system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fieldzero {

enum class PolyMode { joint, single_component };
enum class FieldComponent { X, Y };

struct PolynomializationResult {
    BiPoly P;        // the exact sign-product polynomial
    BiPoly reduced;  // joint mode: P / prod_k (r_k^2)^{2^M}; single mode: equal to P
    int common_factor_exponent = 0;  // exponent of each r_k^2 in the removed factor
    long degree = 0;                 // total degree of P
    int M = 0;
    PolyMode mode = PolyMode::joint;
    std::optional<FieldComponent> component;
};

namespace radical {

using Mask = std::uint32_t;

// element of the radical ring: mask bit j marks one factor of chi_j
struct Expr {
    std::map<Mask, BiPoly> parts;

    static Expr term(Mask m, BiPoly c) {
        Expr e;
        if (!c.is_zero()) e.parts.emplace(m, std::move(c));
        return e;
    }

    Expr& operator+=(const Expr& o) {
        for (const auto& [m, c] : o.parts) {
            auto it = parts.find(m);
            if (it == parts.end()) {
                parts.emplace(m, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) parts.erase(it);
            }
        }
        return *this;
    }

    Expr mul(const Expr& o, const std::vector<BiPoly>& gen_sq) const {
        Expr r;
        for (const auto& [ma, ca] : parts) {
            for (const auto& [mb, cb] : o.parts) {
                Mask common = ma & mb;
                Mask m = ma ^ mb;
                BiPoly c = ca * cb;
                for (int j = 0; common; ++j, common >>= 1)
                    if (common & 1u) c = c * gen_sq[static_cast<size_t>(j)];
                auto it = r.parts.find(m);
                if (it == r.parts.end()) {
                    r.parts.emplace(m, std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.parts.erase(it);
                }
            }
        }
        return r;
    }

    // The pure polynomial part; throws if any chi survives the expansion.
    BiPoly polynomial_part() const {
        BiPoly out;
        for (const auto& [m, c] : parts) {
            if (m != 0) throw std::logic_error("sign product left an odd radical monomial");
            out = c;
        }
        return out;
    }
};

}  // namespace radical

namespace detail {

inline void check_expansion_limit(size_t M, size_t limit) {
    if (M > limit)
        throw std::length_error("system size " + std::to_string(M) +
                                " exceeds the sign-product expansion limit " + std::to_string(limit));
}

inline std::vector<BiPoly> charge_r2(const ChargeSystem& sys) {
    std::vector<BiPoly> r2;
    for (size_t k = 0; k < sys.count(); ++k) {
        BiPoly dx = BiPoly::var_x() - BiPoly(sys.position(k));
        r2.push_back(dx * dx + BiPoly::var_y() * BiPoly::var_y());
    }
    return r2;
}

inline BiPoly product_skipping(const std::vector<BiPoly>& f, unsigned e, size_t skip1, size_t skip2) {
    BiPoly out(Rational(1));
    for (size_t k = 0; k < f.size(); ++k) {
        if (k == skip1 || k == skip2) continue;
        for (unsigned i = 0; i < e; ++i) out = out * f[k];
    }
    return out;
}

// signs for sigma index s in 0..2^{M-1}-1 with sigma(0) = +1
inline int sigma_sign(std::uint32_t s, size_t j) {
    if (j == 0) return 1;
    return (s >> (j - 1)) & 1u ? -1 : 1;
}

}  // namespace detail

// Joint-mode polynomialization: every zero of F = (X, Y) away from the
// charges lies in the zero set of both `P` and `reduced`.
inline PolynomializationResult build_joint_polynomial(const ChargeSystem& sys, size_t expansion_limit = 4) {
    const size_t M = sys.count();
    detail::check_expansion_limit(M, expansion_limit);
    const auto r2 = detail::charge_r2(sys);

    // chi_j^2 = prod_{k != j} r_k^6
    std::vector<BiPoly> chi_sq;
    for (size_t j = 0; j < M; ++j) chi_sq.push_back(detail::product_skipping(r2, 3, j, j));

    const std::uint32_t half = 1u << (M - 1);
    radical::Expr acc = radical::Expr::term(0, BiPoly(Rational(1)));
    radical::Expr acc_reduced = radical::Expr::term(0, BiPoly(Rational(1)));

    // phi_j^2 = r_j^2 for the structurally reduced product
    std::vector<BiPoly> phi_sq = r2;

    for (std::uint32_t s = 0; s < half; ++s) {
        radical::Expr sx, sy;
        for (size_t j = 0; j < M; ++j) {
            Rational aj = Rational(detail::sigma_sign(s, j)) * sys.amplitude(j);
            BiPoly ax = BiPoly(aj) * (BiPoly::var_x() - BiPoly(sys.position(j)));
            sx += radical::Expr::term(radical::Mask(1) << j, ax);
            sy += radical::Expr::term(radical::Mask(1) << j, BiPoly(aj) * BiPoly::var_y());
        }
        radical::Expr bracket = sx.mul(sx, chi_sq);
        bracket += sy.mul(sy, chi_sq);
        // sigma and its global negation contribute the same bracket
        acc = acc.mul(bracket, chi_sq).mul(bracket, chi_sq);

        // bracket / prod_k r_k^2, written in the phi ring
        radical::Expr part;
        for (size_t j = 0; j < M; ++j) {
            Rational ajj = sys.amplitude(j) * sys.amplitude(j);
            part += radical::Expr::term(0, BiPoly(ajj) * detail::product_skipping(r2, 2, j, j));
            for (size_t l = j + 1; l < M; ++l) {
                Rational c = Rational(2 * detail::sigma_sign(s, j) * detail::sigma_sign(s, l)) *
                             sys.amplitude(j) * sys.amplitude(l);
                BiPoly cross = (BiPoly::var_x() - BiPoly(sys.position(j))) *
                                   (BiPoly::var_x() - BiPoly(sys.position(l))) +
                               BiPoly::var_y() * BiPoly::var_y();
                BiPoly coeff = BiPoly(c) * cross * detail::product_skipping(r2, 2, j, l);
                part += radical::Expr::term((radical::Mask(1) << j) | (radical::Mask(1) << l), coeff);
            }
        }
        acc_reduced = acc_reduced.mul(part, phi_sq).mul(part, phi_sq);
    }

    PolynomializationResult out;
    out.P = acc.polynomial_part();
    out.reduced = acc_reduced.polynomial_part();
    out.common_factor_exponent = static_cast<int>(std::uint64_t(1) << M);
    out.degree = out.P.total_degree();
    out.M = static_cast<int>(M);
    out.mode = PolyMode::joint;

    // exact consistency of the two constructions
    BiPoly factor(Rational(1));
    for (size_t k = 0; k < M; ++k)
        for (int e = 0; e < out.common_factor_exponent; ++e) factor = factor * r2[k];
    if (out.reduced * factor != out.P)
        throw std::logic_error("reduced joint polynomial does not recompose the full product");
    return out;
}

namespace detail {

// Polynomialization of the scalar combination X + lambda * Y (lambda = 0
// gives X; numer_y alone gives Y): the combination's zero set is contained
// in the zero set of the product polynomial.
inline BiPoly signed_sum_product(const ChargeSystem& sys, const std::vector<BiPoly>& numerators,
                                 const std::vector<BiPoly>& chi_sq) {
    const size_t M = sys.count();
    const std::uint32_t half = 1u << (M - 1);
    radical::Expr acc = radical::Expr::term(0, BiPoly(Rational(1)));
    for (std::uint32_t s = 0; s < half; ++s) {
        radical::Expr sum;
        for (size_t j = 0; j < M; ++j) {
            Rational sgn_a = Rational(detail::sigma_sign(s, j));
            sum += radical::Expr::term(radical::Mask(1) << j, BiPoly(sgn_a) * numerators[j]);
        }
        // the factor for -sigma is the negation: each pair contributes -sum^2
        radical::Expr sq = sum.mul(sum, chi_sq);
        radical::Expr neg;
        for (const auto& [m, c] : sq.parts) neg += radical::Expr::term(m, Rational(-1) * c);
        acc = acc.mul(neg, chi_sq);
    }
    return acc.polynomial_part();
}

}  // namespace detail

// Single-component polynomialization: the zero set of the chosen component
// is contained in the zero set of P.
inline PolynomializationResult build_component_polynomial(const ChargeSystem& sys, FieldComponent comp,
                                                          size_t expansion_limit = 4) {
    const size_t M = sys.count();
    detail::check_expansion_limit(M, expansion_limit);
    const auto r2 = detail::charge_r2(sys);
    std::vector<BiPoly> chi_sq;
    for (size_t j = 0; j < M; ++j) chi_sq.push_back(detail::product_skipping(r2, 3, j, j));

    std::vector<BiPoly> numerators;
    for (size_t j = 0; j < M; ++j)
        numerators.push_back(comp == FieldComponent::X
                                 ? BiPoly(sys.amplitude(j)) * (BiPoly::var_x() - BiPoly(sys.position(j)))
                                 : BiPoly(sys.amplitude(j)) * BiPoly::var_y());

    PolynomializationResult out;
    out.P = detail::signed_sum_product(sys, numerators, chi_sq);
    out.reduced = out.P;
    out.common_factor_exponent = 0;
    out.degree = out.P.total_degree();
    out.M = static_cast<int>(M);
    out.mode = PolyMode::single_component;
    out.component = comp;
    return out;
}

// Polynomialization of X + lambda Y; zeros of F always zero it, so it can
// replace either component in an elimination pair when the plain pair
// degenerates (symmetric systems share factors between the components).
inline BiPoly build_mixed_component_polynomial(const ChargeSystem& sys, const Rational& lambda,
                                               size_t expansion_limit = 4) {
    const size_t M = sys.count();
    detail::check_expansion_limit(M, expansion_limit);
    const auto r2 = detail::charge_r2(sys);
    std::vector<BiPoly> chi_sq;
    for (size_t j = 0; j < M; ++j) chi_sq.push_back(detail::product_skipping(r2, 3, j, j));
    std::vector<BiPoly> numerators;
    for (size_t j = 0; j < M; ++j)
        numerators.push_back(BiPoly(sys.amplitude(j)) *
                             (BiPoly::var_x() - BiPoly(sys.position(j)) +
                              BiPoly(lambda) * BiPoly::var_y()));
    return detail::signed_sum_product(sys, numerators, chi_sq);
}

struct ContainmentEntry {
    Box box;
    QInterval enclosure;  // range of P over the box
    bool contains_zero = false;
};

struct ContainmentReport {
    bool ok = true;
    std::vector<ContainmentEntry> entries;
};

// Every certified zero box must map to a polynomial range containing 0.
inline ContainmentReport containment_check(const PolynomializationResult& result,
                                           const std::vector<Box>& zero_boxes) {
    ContainmentReport rep;
    for (const auto& b : zero_boxes) {
        ContainmentEntry e;
        e.box = b;
        e.enclosure = result.P.eval_box(b.x, b.y);
        e.contains_zero = e.enclosure.contains_zero();
        rep.ok = rep.ok && e.contains_zero;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace fieldzero

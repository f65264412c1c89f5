#pragma once

/*
 * Asymptotic directions of the component zero sets {X = 0} and {Y = 0}.
 *
 * Directions are reported as exact algebraic numbers: a defining polynomial
 * together with an isolating interval, tagged by the domain the condition
 * came from. Steep directions come from roots beta of P_L (for X) or Q_L
 * (for Y) with |beta| < 1 and describe the line x = beta * y; shallow
 * directions come from nonzero roots alpha of numD_L (for X) or numC_L
 * (for Y) with |alpha| < 1 and describe the line y = alpha * x. The x-axis
 * always belongs to {Y = 0}. Values with |value| = 1 are the open diagonal
 * boundary and are flagged rather than classified.
 *
 * The disjointness verdict is decided by exact polynomial arithmetic:
 * gcd(P_L, Q_L) must be constant and gcd(numC_L, numD_L) must have no
 * nonzero root; slope-space comparisons between the remaining sets reduce
 * to algebraic-number equality.
 */

#include "fieldzero/algebraic.hpp"
#include "fieldzero/asymptote_polys.hpp"
#include "fieldzero/moments.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fieldzero {

enum class DirectionDomain { type1, type2, axis };

struct AlgebraicDirection {
    UniPoly defining_poly;
    IsolatingInterval root_interval;
    DirectionDomain domain = DirectionDomain::axis;

    bool is_axis() const { return domain == DirectionDomain::axis; }

    // Steep directions with beta = 0 are the vertical (y-axis) direction.
    bool is_vertical() const {
        return domain == DirectionDomain::type1 && root_interval.is_point() && root_interval.lo == 0;
    }

    AlgebraicNumber value() const { return AlgebraicNumber{defining_poly, root_interval}; }

    // Slope of the direction line; nullopt for the vertical direction.
    std::optional<AlgebraicNumber> slope() const {
        switch (domain) {
            case DirectionDomain::axis: return make_algebraic(Rational(0));
            case DirectionDomain::type2: return value();
            case DirectionDomain::type1:
                if (is_vertical()) return std::nullopt;
                return value().reciprocal();
        }
        return std::nullopt;
    }

    std::string slope_decimal(int digits = 6) const {
        auto s = slope();
        if (!s) return "vertical";
        return algebraic_decimal(*s, digits);
    }
};

enum class DirectionVerdict { disjoint, disjoint_except_diagonals, overlap_found };

struct DirectionReport {
    long L = 0;
    AsymptotePolynomials polys;
    std::vector<AlgebraicDirection> directions_X;
    std::vector<AlgebraicDirection> directions_Y;
    DirectionVerdict verdict = DirectionVerdict::disjoint;
    bool diagonal_boundary_hit = false;  // some candidate value sits exactly at |value| = 1
};

namespace detail {

// Roots of p in the open unit interval (-1, 1); |root| = 1 raises the
// boundary flag. `exclude_zero` drops the root at 0 (after stripping the
// x^v factor so the remaining polynomial is nonzero at 0).
inline std::vector<AlgebraicDirection> unit_interval_directions(const UniPoly& p, DirectionDomain domain,
                                                                bool exclude_zero, bool& boundary_hit) {
    std::vector<AlgebraicDirection> out;
    if (p.is_zero()) return out;
    UniPoly f = squarefree_part(p);
    if (f.eval(Rational(1)) == 0 || f.eval(Rational(-1)) == 0) boundary_hit = true;
    if (exclude_zero) {
        int v = f.valuation();
        if (v > 0) f = f.shifted_down(v);
    }
    if (f.degree() < 1) return out;
    for (const auto& iv : sturm_isolate(f, Rational(-1), Rational(1))) {
        if (exclude_zero && iv.is_point() && iv.lo == 0) continue;
        out.push_back(AlgebraicDirection{f, iv, domain});
    }
    return out;
}

inline bool same_direction(const AlgebraicDirection& a, const AlgebraicDirection& b) {
    if (a.is_axis() || b.is_axis()) return a.is_axis() && b.is_axis();
    if (a.is_vertical() || b.is_vertical()) return a.is_vertical() && b.is_vertical();
    auto sa = a.slope(), sb = b.slope();
    return sa && sb && algebraic_equal(*sa, *sb);
}

}  // namespace detail

inline const char* to_string(DirectionVerdict v) {
    switch (v) {
        case DirectionVerdict::disjoint: return "disjoint";
        case DirectionVerdict::disjoint_except_diagonals: return "disjoint-except-diagonals";
        case DirectionVerdict::overlap_found: return "overlap-found";
    }
    return "?";
}

inline DirectionReport asymptote_directions(const ChargeSystem& sys) {
    DirectionReport rep;
    rep.L = static_cast<long>(critical_index(sys).L);
    rep.polys = build_asymptote_polys(rep.L);

    rep.directions_X = detail::unit_interval_directions(rep.polys.P, DirectionDomain::type1,
                                                        /*exclude_zero=*/false, rep.diagonal_boundary_hit);
    {
        auto t2 = detail::unit_interval_directions(rep.polys.numD, DirectionDomain::type2,
                                                   /*exclude_zero=*/true, rep.diagonal_boundary_hit);
        rep.directions_X.insert(rep.directions_X.end(), t2.begin(), t2.end());
    }
    rep.directions_Y = detail::unit_interval_directions(rep.polys.Q, DirectionDomain::type1,
                                                        /*exclude_zero=*/false, rep.diagonal_boundary_hit);
    {
        auto t2 = detail::unit_interval_directions(rep.polys.numC, DirectionDomain::type2,
                                                   /*exclude_zero=*/true, rep.diagonal_boundary_hit);
        rep.directions_Y.insert(rep.directions_Y.end(), t2.begin(), t2.end());
    }
    rep.directions_Y.push_back(AlgebraicDirection{UniPoly::variable(),
                                                  IsolatingInterval{Rational(0), Rational(0), UniPoly::variable()},
                                                  DirectionDomain::axis});

    // Exact disjointness: the steep candidate sets cannot meet when
    // gcd(P_L, Q_L) is constant, the shallow ones cannot meet away from 0
    // when gcd(numC_L, numD_L) is a power of x, and steep-vs-shallow
    // coincidence is possible only on the diagonals.
    bool overlap = false;
    if (uni_gcd(rep.polys.P, rep.polys.Q).degree() > 0) overlap = true;
    {
        UniPoly g = uni_gcd(rep.polys.numC, rep.polys.numD);
        if (g.shifted_down(g.valuation()).degree() > 0) overlap = true;
    }
    // belt-and-braces pairwise check on the finitely many admissible values
    if (!overlap) {
        for (const auto& dx : rep.directions_X)
            for (const auto& dy : rep.directions_Y)
                if (detail::same_direction(dx, dy)) overlap = true;
    }
    rep.verdict = overlap ? DirectionVerdict::overlap_found
                          : (rep.diagonal_boundary_hit ? DirectionVerdict::disjoint_except_diagonals
                                                       : DirectionVerdict::disjoint);
    return rep;
}

}  // namespace fieldzero

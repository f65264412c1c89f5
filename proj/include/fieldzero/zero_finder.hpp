#pragma once

/*
 * Finding and certifying every zero of F = (X, Y).
 *
 * Axis zeros are exact: on each open interval between consecutive charges
 * the sign of every x-x_k is constant, so X(x, 0) clears to a polynomial
 * whose roots are isolated by Sturm sequences. Off-axis zeros come from
 * adaptive interval subdivision: rectangles whose enclosure of X or Y
 * excludes zero are discarded, small surviving rectangles are handed to an
 * interval Newton step with the analytic Jacobian, and contraction into the
 * interior certifies existence and uniqueness. A strip around the axis is
 * excluded from the search (the axis is handled exactly); rectangles that
 * reach the minimum width undecided are reported, never dropped.
 *
 * For small systems the single-component sign-product polynomials feed a
 * resultant-based candidate grid that provably contains every zero, which
 * also yields a certified search box.
 */

#include "fieldzero/box.hpp"
#include "fieldzero/field_eval.hpp"
#include "fieldzero/moments.hpp"
#include "fieldzero/resultant.hpp"
#include "fieldzero/sign_product.hpp"
#include "fieldzero/sturm.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fieldzero {

enum class ZeroKind { axis, off_axis };

struct CertifiedZero {
    Box box;
    ZeroKind kind = ZeroKind::axis;
    bool unique = true;
};

struct AxisInterval {
    int index = 0;                      // 0..M, interval between charges index-1 and index
    std::optional<Rational> lo, hi;     // absent = unbounded side
    std::vector<int> signs;             // sign of x - x_k on the interval
    UniPoly cleared;                    // sum_k a_k s_k prod_{l != k} (x - x_l)^2
};

inline std::vector<AxisInterval> axis_intervals(const ChargeSystem& sys) {
    const size_t M = sys.count();
    std::vector<AxisInterval> out;
    for (size_t j = 0; j <= M; ++j) {
        AxisInterval ai;
        ai.index = static_cast<int>(j);
        if (j > 0) ai.lo = sys.position(j - 1);
        if (j < M) ai.hi = sys.position(j);
        UniPoly acc;
        for (size_t k = 0; k < M; ++k) {
            int s = k < j ? 1 : -1;
            ai.signs.push_back(s);
            UniPoly prod(Rational(s) * sys.amplitude(k));
            for (size_t l = 0; l < M; ++l) {
                if (l == k) continue;
                UniPoly lin(std::vector<Rational>{-sys.position(l), Rational(1)});
                prod = prod * lin * lin;
            }
            acc += prod;
        }
        ai.cleared = acc;
        out.push_back(std::move(ai));
    }
    return out;
}

// All zeros of F on the charge line, isolated exactly per axis interval and
// refined below the requested width. Rational roots come out as exact
// points.
inline std::vector<CertifiedZero> axis_zeros(const ChargeSystem& sys, const Rational& tol = pow2(-40)) {
    std::vector<CertifiedZero> out;
    for (const auto& ai : axis_intervals(sys)) {
        if (ai.cleared.is_zero())
            throw std::logic_error("cleared axis polynomial vanished identically");
        if (ai.cleared.degree() < 1) continue;
        UniPoly sf = squarefree_part(ai.cleared);
        Rational span = sf.cauchy_root_bound() + 1;
        Rational lo = ai.lo ? *ai.lo : -span;
        Rational hi = ai.hi ? *ai.hi : span;
        if (ai.lo && !ai.hi && hi <= lo) hi = lo + 1;
        if (!ai.lo && ai.hi && lo >= hi) lo = hi - 1;
        if (!(lo < hi)) continue;
        for (const auto& iv : sturm_isolate(sf, lo, hi)) {
            auto refined = collapse_rational_root(refine_interval(iv, tol));
            out.push_back(CertifiedZero{Box(refined.lo, refined.hi, Rational(0), Rational(0)),
                                        ZeroKind::axis, true});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CertifiedZero& a, const CertifiedZero& b) { return box_less(a.box, b.box); });
    return out;
}

struct ObstructionNote {
    size_t moment_index = 0;
    Rational value;
    std::string text;
};

// A nonzero ground or first moment rules out zeros arbitrarily far from the
// origin; report which one fires.
inline std::optional<ObstructionNote> unboundedness_obstruction(const ChargeSystem& sys) {
    auto mv = moments(sys);
    for (size_t u = 0; u <= 1 && u < mv.values.size(); ++u) {
        if (mv.values[u] != 0) {
            ObstructionNote n;
            n.moment_index = u;
            n.value = mv.values[u];
            n.text = "mu_" + std::to_string(u) + " = " + mv.values[u].get_str() +
                     " != 0: far-out zeros are impossible";
            return n;
        }
    }
    return std::nullopt;
}

struct OffAxisOptions {
    Rational axis_strip = pow2(-20);  // |y| below this is handled by the axis solver
    Rational min_width = pow2(-40);   // undecided below this width
    Rational newton_width = Rational(1, 2);
    mpfr_prec_t precision = 128;
    unsigned long max_boxes = 4000000;
};

struct OffAxisResult {
    std::vector<CertifiedZero> zeros;
    std::vector<Box> undecided;
    unsigned long boxes_processed = 0;
};

namespace detail {

enum class NewtonStatus { certified, no_zero, inconclusive };

struct NewtonOutcome {
    NewtonStatus status = NewtonStatus::inconclusive;
    Box box;
};

inline Box box_from_intervals(const Interval& x, const Interval& y) {
    return Box(x.lower_rational(), x.upper_rational(), y.lower_rational(), y.upper_rational());
}

inline NewtonOutcome interval_newton(const ChargeSystem& sys, const Box& start, const Rational& tol,
                                     mpfr_prec_t prec) {
    Interval ix(start.x.lo, start.x.hi, prec), iy(start.y.lo, start.y.hi, prec);
    bool certified = false;
    for (int iter = 0; iter < 80; ++iter) {
        Interval mx = Interval::exact(ix.mid()).at_precision(prec);
        Interval my = Interval::exact(iy.mid()).at_precision(prec);
        FieldEnclosure fm = eval_kernel_enclosure(sys, mx, my, 1, prec);
        JacobianEnclosure J = eval_kernel_partials_enclosure(sys, ix, iy, 1, prec);
        Interval det = J.dXdx * J.dYdy - J.dXdy * J.dYdx;
        if (det.contains_zero()) {
            Box cur = box_from_intervals(ix, iy);
            if (certified && cur.max_width() <= tol) return NewtonOutcome{NewtonStatus::certified, cur};
            return NewtonOutcome{NewtonStatus::inconclusive, cur};
        }
        Interval dx = (J.dYdy * fm.X - J.dXdy * fm.Y) / det;
        Interval dy = (J.dXdx * fm.Y - J.dYdx * fm.X) / det;
        Interval Nx = mx - dx, Ny = my - dy;
        if (Nx.disjoint_from(ix) || Ny.disjoint_from(iy))
            return NewtonOutcome{NewtonStatus::no_zero, start};
        if (ix.contains_in_interior(Nx) && iy.contains_in_interior(Ny)) certified = true;
        try {
            Interval nix = Nx.intersect(ix), niy = Ny.intersect(iy);
            ix = nix;
            iy = niy;
        } catch (const std::domain_error&) {
            return NewtonOutcome{NewtonStatus::no_zero, start};
        }
        Box cur = box_from_intervals(ix, iy);
        if (certified && cur.max_width() <= tol) return NewtonOutcome{NewtonStatus::certified, cur};
    }
    if (certified) {
        Box cur = box_from_intervals(ix, iy);
        if (cur.max_width() <= tol) return NewtonOutcome{NewtonStatus::certified, cur};
    }
    return NewtonOutcome{NewtonStatus::inconclusive, box_from_intervals(ix, iy)};
}

inline bool component_excludes_zero(const ChargeSystem& sys, const Box& b, mpfr_prec_t prec) {
    Interval ix(b.x.lo, b.x.hi, prec), iy(b.y.lo, b.y.hi, prec);
    try {
        FieldEnclosure enc = eval_kernel_enclosure(sys, ix, iy, 1, prec);
        return !enc.X.contains_zero() || !enc.Y.contains_zero();
    } catch (const std::domain_error&) {
        return false;  // could not separate from a charge at this precision
    }
}

}  // namespace detail

// Certified off-axis zeros of F within `search` (minus the axis strip).
inline OffAxisResult offaxis_zeros(const ChargeSystem& sys, const Box& search, const Rational& tol,
                                   const OffAxisOptions& opts = {}) {
    if (tol >= search.max_width())
        throw std::invalid_argument("tolerance must be finer than the search box");
    OffAxisResult res;

    std::vector<Box> work;
    Rational neg_strip = Rational(0) - opts.axis_strip;
    if (search.y.lo < neg_strip)
        work.emplace_back(search.x.lo, search.x.hi, search.y.lo, std::min(search.y.hi, neg_strip));
    if (search.y.hi > opts.axis_strip)
        work.emplace_back(search.x.lo, search.x.hi, std::max(search.y.lo, opts.axis_strip),
                          search.y.hi);

    std::vector<CertifiedZero> found;
    while (!work.empty()) {
        if (++res.boxes_processed > opts.max_boxes)
            throw std::runtime_error("subdivision budget exhausted");
        Box b = work.back();
        work.pop_back();
        if (detail::component_excludes_zero(sys, b, opts.precision)) continue;
        if (b.max_width() <= opts.newton_width) {
            // inflate so zeros sitting exactly on cell boundaries land in the
            // interior; stay clear of the axis so certified boxes remain
            // off-axis (duplicates across neighbors are merged below)
            Rational d = b.max_width() / 8;
            Box nb = b;
            nb.x.lo -= d;
            nb.x.hi += d;
            if (b.y.lo > 0) {
                nb.y.lo = std::max<Rational>(Rational(b.y.lo - d), Rational(opts.axis_strip / 2));
                nb.y.hi += d;
            } else {
                nb.y.hi = std::min<Rational>(Rational(b.y.hi + d), Rational(-(opts.axis_strip / 2)));
                nb.y.lo -= d;
            }
            auto outcome = detail::interval_newton(sys, nb, tol, opts.precision);
            if (outcome.status == detail::NewtonStatus::no_zero) continue;
            if (outcome.status == detail::NewtonStatus::certified) {
                found.push_back(CertifiedZero{outcome.box, ZeroKind::off_axis, true});
                continue;
            }
        }
        if (b.max_width() <= opts.min_width) {
            res.undecided.push_back(b);
            continue;
        }
        // split the wider side
        if (b.x.width() >= b.y.width()) {
            Rational m = b.x.mid();
            work.emplace_back(b.x.lo, m, b.y.lo, b.y.hi);
            work.emplace_back(m, b.x.hi, b.y.lo, b.y.hi);
        } else {
            Rational m = b.y.mid();
            work.emplace_back(b.x.lo, b.x.hi, b.y.lo, m);
            work.emplace_back(b.x.lo, b.x.hi, m, b.y.hi);
        }
    }

    // Neighboring certifications of the same zero: re-certify jointly at
    // higher precision instead of merging heuristically.
    std::sort(found.begin(), found.end(),
              [](const CertifiedZero& a, const CertifiedZero& b) { return box_less(a.box, b.box); });
    std::vector<CertifiedZero> merged;
    for (const auto& z : found) {
        bool joined = false;
        for (auto& m : merged) {
            Box hull(std::min(m.box.x.lo, z.box.x.lo), std::max(m.box.x.hi, z.box.x.hi),
                     std::min(m.box.y.lo, z.box.y.lo), std::max(m.box.y.hi, z.box.y.hi));
            if (hull.max_width() > 4 * tol) continue;
            auto joint = detail::interval_newton(sys, hull, tol, 2 * opts.precision);
            if (joint.status == detail::NewtonStatus::certified) {
                m.box = joint.box;
                joined = true;
                break;
            }
        }
        if (!joined) merged.push_back(z);
    }
    res.zeros = std::move(merged);
    std::sort(res.zeros.begin(), res.zeros.end(),
              [](const CertifiedZero& a, const CertifiedZero& b) { return box_less(a.box, b.box); });
    std::sort(res.undecided.begin(), res.undecided.end(), box_less);
    return res;
}

struct ZeroDiagnostic {
    CertifiedZero zero;
    std::string classification;  // "orthogonal-crossing", "orthogonal (axis/vertical)", ...
    std::optional<std::string> slope_X, slope_Y, slope_product;
    std::optional<std::string> inverse_cube_sum;  // sum_j a_j / r_j^3 at the center (off-axis)
    bool product_near_minus_one = false;
    std::optional<std::string> error;
};

// Tangent-slope diagnostics at certified zeros. Off-axis crossings are
// expected orthogonal; axis zeros report the axis branch and the vertical
// crossing of {X = 0} without an orthogonality claim from slopes.
inline std::vector<ZeroDiagnostic> orthogonality_diagnostics(const ChargeSystem& sys,
                                                             const std::vector<CertifiedZero>& zeros,
                                                             mpfr_prec_t prec = 128) {
    std::vector<ZeroDiagnostic> out;
    for (const auto& z : zeros) {
        ZeroDiagnostic d;
        d.zero = z;
        Rational cx = z.box.x.mid(), cy = z.box.y.mid();
        try {
            EvalPoint pt(cx, cy, prec);
            // the box center misses the true zero by up to the box width;
            // scale the is-a-zero tolerance accordingly
            Rational tol_q = pow2(-static_cast<long>(prec / 2));
            Rational width_slack = z.box.max_width() * pow2(16);
            if (width_slack > tol_q) tol_q = width_slack;
            Real tol(tol_q, prec);
            if (z.kind == ZeroKind::off_axis) {
                Interval ix(cx, prec), iy(cy, prec);
                Interval s(prec);
                Interval ysq = iy.square();
                for (size_t j = 0; j < sys.count(); ++j) {
                    Interval dx = ix - Interval(sys.position(j), prec);
                    Interval d2 = dx.square() + ysq;
                    s = s + Interval(sys.amplitude(j), prec) / detail::half_odd_power(d2, 1);
                }
                d.inverse_cube_sum = s.mid().str(6);
            }
            auto slopes = implicit_tangent_slopes(sys, pt, tol);
            if (slopes.slope_X) d.slope_X = slopes.slope_X->str(12);
            if (slopes.slope_Y) d.slope_Y = slopes.slope_Y->str(12);
            if (slopes.vertical_X) d.slope_X = "vertical";
            if (slopes.vertical_Y) d.slope_Y = "vertical";
            if (slopes.slope_X && slopes.slope_Y) {
                Real prod = *slopes.slope_X * *slopes.slope_Y;
                d.slope_product = prod.str(12);
                Real err = (prod + Real(Rational(1), prec)).abs();
                d.product_near_minus_one = err < Real(Rational(1, 1000000), prec);
                d.classification = d.product_near_minus_one ? "orthogonal-crossing" : "non-orthogonal";
            } else if ((slopes.vertical_X && slopes.slope_Y && slopes.slope_Y->is_zero()) ||
                       (slopes.vertical_Y && slopes.slope_X && slopes.slope_X->is_zero())) {
                d.classification = "orthogonal (axis/vertical)";
            } else {
                d.classification = "vertical-branch";
            }
        } catch (const std::exception& e) {
            d.error = e.what();
            d.classification = "degenerate";
        }
        out.push_back(std::move(d));
    }
    return out;
}

struct CandidateGrid {
    std::vector<Box> boxes;      // provably contains every zero of F
    UniPoly x_superset;          // roots cover all zero x-coordinates
    UniPoly y_superset;          // roots cover all zero y-coordinates
    Box bounding_box;            // hull of the candidate boxes (when nonempty)
};

namespace detail {

// both sign-product polynomials are even in y; coefficients w.r.t. u = y^2
inline coeffpoly::Poly coeffs_wrt_u(const BiPoly& p) {
    auto rows = p.coeffs_wrt_y();
    coeffpoly::Poly out;
    for (size_t j = 0; j < rows.size(); ++j) {
        if (j % 2 == 1 && !rows[j].is_zero())
            throw std::logic_error("sign-product polynomial not even in y");
        if (j % 2 == 0) out.push_back(rows[j]);
    }
    coeffpoly::normalize(out);
    return out;
}

// refine a y-root interval so it is a point at 0 or excludes 0
inline IsolatingInterval refine_off_zero(IsolatingInterval iv) {
    while (!iv.is_point() && iv.lo < 0 && 0 < iv.hi) iv = refine_interval(iv, iv.width() / 4);
    return iv;
}

}  // namespace detail

// Exhaustive candidate grid from the two single-component sign-product
// polynomials, eliminated in each variable. When the plain component pair
// shares a factor (symmetric systems), the mixed combination X + lambda Y
// replaces one side; zeros of F zero every such polynomial, so any pair is
// a valid elimination source. Throws CommonFactorError when every pairing
// degenerates (fall back to a heuristic search box in that case).
inline CandidateGrid exhaustive_resultant_candidates(const ChargeSystem& sys, size_t expansion_limit = 4) {
    auto px = build_component_polynomial(sys, FieldComponent::X, expansion_limit);
    auto py = build_component_polynomial(sys, FieldComponent::Y, expansion_limit);

    std::vector<const BiPoly*> pool{&px.P, &py.P};
    BiPoly mixed1, mixed2;
    auto eliminate = [&](bool main_is_y) -> UniPoly {
        for (size_t a = 0; a < pool.size(); ++a) {
            for (size_t b = a + 1; b < pool.size(); ++b) {
                try {
                    if (main_is_y) {
                        if (pool[a]->even_in_y() && pool[b]->even_in_y())
                            return resultant_root_superset(detail::coeffs_wrt_u(*pool[a]),
                                                           detail::coeffs_wrt_u(*pool[b]));
                        return resultant_root_superset(pool[a]->coeffs_wrt_y(), pool[b]->coeffs_wrt_y());
                    }
                    return resultant_root_superset(pool[a]->coeffs_wrt_x(), pool[b]->coeffs_wrt_x());
                } catch (const CommonFactorError&) {
                    if (pool.size() == 2) {
                        mixed1 = build_mixed_component_polynomial(sys, Rational(1), expansion_limit);
                        pool.push_back(&mixed1);
                        mixed2 = build_mixed_component_polynomial(sys, Rational(2), expansion_limit);
                        pool.push_back(&mixed2);
                    }
                }
            }
        }
        throw CommonFactorError();
    };

    CandidateGrid grid;
    grid.x_superset = eliminate(/*main_is_y=*/true);
    grid.y_superset = eliminate(/*main_is_y=*/false);

    UniPoly sx = squarefree_part(grid.x_superset);
    UniPoly sy = squarefree_part(grid.y_superset);

    std::vector<IsolatingInterval> xr =
        sx.degree() >= 1 ? isolate_all_roots(sx) : std::vector<IsolatingInterval>{};
    std::vector<IsolatingInterval> yr =
        sy.degree() >= 1 ? isolate_all_roots(sy) : std::vector<IsolatingInterval>{};

    for (auto& ix : xr) ix = refine_interval(ix, pow2(-12));
    for (auto& iy : yr) iy = detail::refine_off_zero(refine_interval(iy, pow2(-12)));

    for (const auto& ix : xr) {
        for (const auto& iy : yr) {
            Box b(ix.lo, ix.hi, iy.lo, iy.hi);
            if (px.P.eval_box(b.x, b.y).contains_zero() && py.P.eval_box(b.x, b.y).contains_zero())
                grid.boxes.push_back(b);
        }
    }
    std::sort(grid.boxes.begin(), grid.boxes.end(), box_less);
    if (!grid.boxes.empty()) {
        Rational xlo = grid.boxes.front().x.lo, xhi = grid.boxes.front().x.hi;
        Rational ylo = grid.boxes.front().y.lo, yhi = grid.boxes.front().y.hi;
        for (const auto& b : grid.boxes) {
            xlo = std::min(xlo, b.x.lo);
            xhi = std::max(xhi, b.x.hi);
            ylo = std::min(ylo, b.y.lo);
            yhi = std::max(yhi, b.y.hi);
        }
        grid.bounding_box = Box(xlo - 1, xhi + 1, ylo - 1, yhi + 1);
    }
    return grid;
}

inline Integer zero_count_bound(size_t M) {
    Integer four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(M));
    return Integer(9) * Integer(static_cast<unsigned long>(M * M)) * four_m;
}

enum class Completeness { certified_within_box, heuristic_box };

struct ZeroSetReport {
    std::vector<CertifiedZero> zeros;
    Box search_box;
    Completeness completeness = Completeness::heuristic_box;
    Integer count_bound;
    std::optional<ObstructionNote> obstruction;
    std::vector<Box> undecided;
    std::optional<std::string> search_note;
};

inline bool count_bound_check(const ZeroSetReport& rep) {
    return Integer(static_cast<unsigned long>(rep.zeros.size())) <= rep.count_bound;
}

struct FindZerosOptions {
    std::optional<Box> search_box;          // overrides the default
    Rational tolerance = pow2(-40);
    size_t expansion_limit = 4;             // sign-product cap
    size_t resultant_limit = 2;             // resultant elimination cap (cost grows steeply)
    OffAxisOptions off_axis;
};

// Full zero-set analysis: exact axis zeros plus certified off-axis search.
inline ZeroSetReport find_zeros(const ChargeSystem& sys, const FindZerosOptions& opts = {}) {
    ZeroSetReport rep;
    rep.count_bound = zero_count_bound(sys.count());
    rep.obstruction = unboundedness_obstruction(sys);

    Rational heuristic_r = 10 * (1 + sys.max_position());
    Box heuristic(-heuristic_r, heuristic_r, -heuristic_r, heuristic_r);

    std::optional<CandidateGrid> grid;
    if (sys.count() <= opts.resultant_limit) {
        try {
            grid = exhaustive_resultant_candidates(sys, opts.expansion_limit);
        } catch (const CommonFactorError& e) {
            rep.search_note = std::string("candidate grid unavailable: ") + e.what();
        }
    }

    bool search_off_axis = true;
    if (opts.search_box) {
        rep.search_box = *opts.search_box;
        rep.completeness = Completeness::heuristic_box;
        if (grid) {
            // the user's box certifies completeness when it covers every
            // candidate (all zeros live in candidate boxes)
            bool covered = true;
            for (const auto& b : grid->boxes)
                covered = covered && opts.search_box->x.lo <= b.x.lo && b.x.hi <= opts.search_box->x.hi &&
                          opts.search_box->y.lo <= b.y.lo && b.y.hi <= opts.search_box->y.hi;
            if (covered) rep.completeness = Completeness::certified_within_box;
        }
    } else if (grid) {
        rep.completeness = Completeness::certified_within_box;
        if (grid->boxes.empty()) {
            rep.search_box = heuristic;
            rep.search_note = "candidate grid is empty: no zeros exist";
            search_off_axis = false;
        } else {
            rep.search_box = grid->bounding_box;
        }
    } else {
        rep.search_box = heuristic;
        rep.completeness = Completeness::heuristic_box;
    }

    if (grid) {
        // candidates hidden inside the excluded axis strip would escape the
        // off-axis search; surface them instead of dropping them
        for (const auto& b : grid->boxes) {
            bool on_axis = b.y.lo == 0 && b.y.hi == 0;
            if (on_axis) continue;
            Rational ay_lo = rational_abs(b.y.lo), ay_hi = rational_abs(b.y.hi);
            if (std::max(ay_lo, ay_hi) <= opts.off_axis.axis_strip) {
                rep.undecided.push_back(b);
                rep.search_note = "candidate inside the axis strip reported as undecided";
            }
        }
    }

    rep.zeros = axis_zeros(sys, opts.tolerance);
    if (search_off_axis) {
        auto off = offaxis_zeros(sys, rep.search_box, opts.tolerance, opts.off_axis);
        for (auto& z : off.zeros) rep.zeros.push_back(z);
        for (auto& u : off.undecided) rep.undecided.push_back(u);
    }
    std::sort(rep.zeros.begin(), rep.zeros.end(),
              [](const CertifiedZero& a, const CertifiedZero& b) { return box_less(a.box, b.box); });
    std::sort(rep.undecided.begin(), rep.undecided.end(), box_less);
    if (!count_bound_check(rep))
        throw std::logic_error("certified zero count exceeds the theoretical bound");
    return rep;
}

}  // namespace fieldzero

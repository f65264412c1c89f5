#pragma once

/*
 * Evaluation of the planar field F = (X, Y) of a charge system and of the
 * generalized kernels with denominator exponent (2m+1)/2, together with
 * their closed-form partial derivatives:
 *
 *   X_m = sum_j a_j (x-x_j) / ((x-x_j)^2 + y^2)^{(2m+1)/2}
 *   Y_m = sum_j a_j    y    / ((x-x_j)^2 + y^2)^{(2m+1)/2}
 *
 *   dX_m/dx = sum_j a_j (d2 - (2m+1) dx^2) / d2^{(2m+3)/2}
 *   dX_m/dy = dY_m/dx = -(2m+1) y X_{m+1}
 *   dY_m/dy = sum_j a_j (d2 - (2m+1) y^2) / d2^{(2m+3)/2}
 *
 * Point evaluations carry a precision contract: the result is computed with
 * interval arithmetic at increasing internal precision until the enclosure
 * is tighter than one unit in the last place of the requested precision
 * (absolute cutoff 2^(-2 prec) for values at or near zero).
 */

#include "fieldzero/charge_system.hpp"
#include "fieldzero/interval.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace fieldzero {

struct EvalPoint {
    Real x, y;
    mpfr_prec_t precision;

    EvalPoint(const Rational& px, const Rational& py, mpfr_prec_t prec = 128)
        : x(px, prec), y(py, prec), precision(prec) {
        check();
    }
    EvalPoint(Real px, Real py, mpfr_prec_t prec) : x(std::move(px)), y(std::move(py)), precision(prec) {
        check();
    }

private:
    void check() const {
        if (precision < 64) throw std::invalid_argument("working precision must be at least 64 bits");
    }
};

struct FieldValue {
    Real X, Y;
};

struct FieldEnclosure {
    Interval X, Y;
};

struct JacobianEnclosure {
    Interval dXdx, dXdy, dYdx, dYdy;
};

struct KernelPartials {
    Real dXdx, dXdy, dYdx, dYdy;
};

namespace detail {

// d2^{(2k+1)/2} = d2^k * sqrt(d2)
inline Interval half_odd_power(const Interval& d2, unsigned k) {
    Interval r = d2.sqrt();
    for (unsigned i = 0; i < k; ++i) r = r * d2;
    return r;
}

}  // namespace detail

// Kernel enclosure over a rectangle; throws std::domain_error if the
// rectangle cannot be separated from a charge point at this precision.
inline FieldEnclosure eval_kernel_enclosure(const ChargeSystem& sys, const Interval& x_in,
                                            const Interval& y_in, unsigned m, mpfr_prec_t prec) {
    Interval x = x_in.at_precision(prec), y = y_in.at_precision(prec);
    Interval X(prec), Y(prec);
    Interval ysq = y.square();
    for (size_t j = 0; j < sys.count(); ++j) {
        Interval dx = x - Interval(sys.position(j), prec);
        Interval d2 = dx.square() + ysq;
        Interval den = detail::half_odd_power(d2, m);  // throws when 0 in den
        Interval a(sys.amplitude(j), prec);
        X = X + a * dx / den;
        Y = Y + a * y / den;
    }
    return FieldEnclosure{X, Y};
}

inline JacobianEnclosure eval_kernel_partials_enclosure(const ChargeSystem& sys, const Interval& x_in,
                                                        const Interval& y_in, unsigned m, mpfr_prec_t prec) {
    Interval x = x_in.at_precision(prec), y = y_in.at_precision(prec);
    Interval dXdx(prec), dXdy(prec), dYdy(prec);
    Interval ysq = y.square();
    Rational k(2 * static_cast<long>(m) + 1);
    for (size_t j = 0; j < sys.count(); ++j) {
        Interval dx = x - Interval(sys.position(j), prec);
        Interval dx2 = dx.square();
        Interval d2 = dx2 + ysq;
        Interval den = detail::half_odd_power(d2, m + 1);
        Interval a(sys.amplitude(j), prec);
        Interval kk(k, prec);
        dXdx = dXdx + a * (d2 - kk * dx2) / den;
        dXdy = dXdy + a * (-(kk * y * dx)) / den;
        dYdy = dYdy + a * (d2 - kk * ysq) / den;
    }
    return JacobianEnclosure{dXdx, dXdy, dXdy, dYdy};
}

namespace detail {

inline bool tight_enough(const Interval& iv, mpfr_prec_t prec) {
    Real w = iv.width();
    if (w.is_zero()) return true;
    Real m = iv.mid();
    mpfr_exp_t target;
    if (m.is_zero()) {
        target = -2 * static_cast<mpfr_exp_t>(prec);
    } else {
        mpfr_exp_t e = mpfr_get_exp(m.raw());
        target = std::max(e - static_cast<mpfr_exp_t>(prec), -2 * static_cast<mpfr_exp_t>(prec));
    }
    return mpfr_get_exp(w.raw()) <= target;
}

template <typename EnclosureFn>
auto with_ulp_guarantee(mpfr_prec_t prec, EnclosureFn&& fn) {
    mpfr_prec_t work = prec + 32;
    for (int attempt = 0; attempt < 16; ++attempt, work *= 2) {
        try {
            auto enc = fn(work);
            if (enc) return *enc;
        } catch (const std::domain_error&) {
            // point not yet separable from a charge at this precision
        }
    }
    throw std::runtime_error("requested evaluation precision not reachable");
}

}  // namespace detail

inline void require_off_charges(const ChargeSystem& sys, const EvalPoint& pt) {
    if (!pt.y.is_zero()) return;
    for (size_t j = 0; j < sys.count(); ++j)
        if (pt.x.equals_rational(sys.position(j)))
            throw std::domain_error("field is singular at a charge position");
}

inline FieldValue eval_kernel(const ChargeSystem& sys, const EvalPoint& pt, unsigned m) {
    if (m < 1) throw std::invalid_argument("kernel index must be at least 1");
    require_off_charges(sys, pt);
    return detail::with_ulp_guarantee(pt.precision, [&](mpfr_prec_t work) -> std::optional<FieldValue> {
        auto enc = eval_kernel_enclosure(sys, Interval::exact(pt.x), Interval::exact(pt.y), m, work);
        if (!detail::tight_enough(enc.X, pt.precision) || !detail::tight_enough(enc.Y, pt.precision))
            return std::nullopt;
        return FieldValue{enc.X.mid(), enc.Y.mid()};
    });
}

inline FieldValue eval_field(const ChargeSystem& sys, const EvalPoint& pt) {
    return eval_kernel(sys, pt, 1);
}

inline KernelPartials eval_kernel_partials(const ChargeSystem& sys, const EvalPoint& pt, unsigned m) {
    if (m < 1) throw std::invalid_argument("kernel index must be at least 1");
    require_off_charges(sys, pt);
    return detail::with_ulp_guarantee(pt.precision, [&](mpfr_prec_t work) -> std::optional<KernelPartials> {
        auto enc =
            eval_kernel_partials_enclosure(sys, Interval::exact(pt.x), Interval::exact(pt.y), m, work);
        if (!detail::tight_enough(enc.dXdx, pt.precision) || !detail::tight_enough(enc.dXdy, pt.precision) ||
            !detail::tight_enough(enc.dYdy, pt.precision))
            return std::nullopt;
        return KernelPartials{enc.dXdx.mid(), enc.dXdy.mid(), enc.dYdx.mid(), enc.dYdy.mid()};
    });
}

// Tangent-line slopes of the two level sets through a joint zero, from the
// implicit function theorem. `vertical` marks a branch that is locally a
// graph x = g(y) with g'= 0 (the slope dy/dx is infinite).
struct TangentSlopes {
    std::optional<Real> slope_X;  // nullopt iff vertical_X
    std::optional<Real> slope_Y;
    bool vertical_X = false;
    bool vertical_Y = false;
    bool next_kernel_X_nonzero = false;  // |dX/dy| above tolerance (X_{m+1} != 0 route)
    bool next_kernel_Y_nonzero = false;  // |dX/dx| above tolerance (Y_{m+1} != 0 route)
};

inline TangentSlopes implicit_tangent_slopes(const ChargeSystem& sys, const EvalPoint& pt,
                                             std::optional<Real> tolerance = std::nullopt) {
    Real tol = tolerance ? *tolerance : Real(pow2(-static_cast<long>(pt.precision / 2)), pt.precision);
    FieldValue f = eval_field(sys, pt);
    if (tol < f.X.abs() || tol < f.Y.abs())
        throw std::invalid_argument("point is not a zero of the field within tolerance");
    KernelPartials d = eval_kernel_partials(sys, pt, 1);

    TangentSlopes out;
    out.next_kernel_X_nonzero = tol < d.dXdy.abs();
    out.next_kernel_Y_nonzero = tol < d.dXdx.abs();

    if (tol < d.dXdy.abs()) {
        out.slope_X = -d.dXdx / d.dXdy;
    } else if (tol < d.dXdx.abs()) {
        out.vertical_X = true;
    } else {
        throw std::domain_error("degenerate Jacobian: both partials of X vanish within tolerance");
    }
    if (tol < d.dYdy.abs()) {
        out.slope_Y = -d.dYdx / d.dYdy;
    } else if (tol < d.dYdx.abs()) {
        out.vertical_Y = true;
    } else {
        throw std::domain_error("degenerate Jacobian: both partials of Y vanish within tolerance");
    }
    return out;
}

// Plain double evaluation for plotting-grade consumers.
inline std::pair<double, double> eval_field_double(const ChargeSystem& sys, double x, double y) {
    double X = 0, Y = 0;
    for (size_t j = 0; j < sys.count(); ++j) {
        double dx = x - sys.position(j).get_d();
        double d2 = dx * dx + y * y;
        double den = d2 * std::sqrt(d2);
        X += sys.amplitude(j).get_d() * dx / den;
        Y += sys.amplitude(j).get_d() * y / den;
    }
    return {X, Y};
}

}  // namespace fieldzero

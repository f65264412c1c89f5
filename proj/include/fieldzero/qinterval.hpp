#pragma once

/*
 * Closed intervals with exact rational endpoints. Used where enclosures must
 * be exact (polynomial range bounds over boxes); the adaptive search uses
 * MPFR intervals instead.
 */

#include "fieldzero/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace fieldzero {

struct QInterval {
    Rational lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
        if (lo > hi) throw std::invalid_argument("inverted interval");
    }
    static QInterval point(const Rational& r) { return QInterval(r, r); }

    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    QInterval operator+(const QInterval& o) const { return QInterval(lo + o.lo, hi + o.hi); }
    QInterval operator-(const QInterval& o) const { return QInterval(lo - o.hi, hi - o.lo); }

    QInterval operator*(const QInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return QInterval(std::min(std::min(a, b), std::min(c, d)),
                         std::max(std::max(a, b), std::max(c, d)));
    }

    QInterval scaled(const Rational& s) const {
        return s >= 0 ? QInterval(s * lo, s * hi) : QInterval(s * hi, s * lo);
    }

    QInterval pow(unsigned e) const {
        if (e == 0) return point(Rational(1));
        if (e % 2 == 1 || lo >= 0)
            return QInterval(rational_pow(lo, e), rational_pow(hi, e));
        if (hi <= 0) return QInterval(rational_pow(hi, e), rational_pow(lo, e));
        Rational m = std::max(rational_pow(lo, e), rational_pow(hi, e));
        return QInterval(Rational(0), m);
    }
};

}  // namespace fieldzero

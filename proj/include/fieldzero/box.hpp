#pragma once

/*
 * Axis-aligned rational rectangles shared by the zero search and the
 * polynomial containment checks.
 */

#include "fieldzero/qinterval.hpp"

#include <string>

namespace fieldzero {

struct Box {
    QInterval x, y;

    Box() = default;
    Box(QInterval bx, QInterval by) : x(std::move(bx)), y(std::move(by)) {}
    Box(Rational xlo, Rational xhi, Rational ylo, Rational yhi)
        : x(std::move(xlo), std::move(xhi)), y(std::move(ylo), std::move(yhi)) {}

    Rational max_width() const {
        Rational wx = x.width(), wy = y.width();
        return wx > wy ? wx : wy;
    }

    bool contains_point(const Rational& px, const Rational& py) const {
        return x.contains(px) && y.contains(py);
    }

    bool intersects(const Box& o) const {
        return !(x.hi < o.x.lo || o.x.hi < x.lo || y.hi < o.y.lo || o.y.hi < y.lo);
    }

    std::string str() const {
        return "[" + x.lo.get_str() + ", " + x.hi.get_str() + "] x [" + y.lo.get_str() + ", " +
               y.hi.get_str() + "]";
    }
};

// Deterministic ordering by lower-left corner, then upper-right.
inline bool box_less(const Box& a, const Box& b) {
    if (a.x.lo != b.x.lo) return a.x.lo < b.x.lo;
    if (a.y.lo != b.y.lo) return a.y.lo < b.y.lo;
    if (a.x.hi != b.x.hi) return a.x.hi < b.x.hi;
    return a.y.hi < b.y.hi;
}

}  // namespace fieldzero

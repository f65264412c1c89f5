#pragma once

/*
 * Dense univariate polynomials over the rationals. Coefficient index equals
 * the degree of the term; the representation is normalized so the leading
 * coefficient is nonzero (the zero polynomial has an empty coefficient
 * vector and degree -1).
 */

#include "fieldzero/rational.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fieldzero {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static UniPoly variable() { return monomial(1, Rational(1)); }
    static UniPoly monomial(int deg, const Rational& c) {
        UniPoly p;
        if (c == 0) return p;
        p.coeffs_.assign(static_cast<size_t>(deg) + 1, Rational(0));
        p.coeffs_.back() = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int i) const {
        static const Rational zero(0);
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<size_t>(i)];
    }
    const Rational& leading() const {
        if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        UniPoly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        r.normalize();
        return r;
    }

    friend UniPoly operator*(const Rational& s, const UniPoly& p) {
        if (s == 0) return UniPoly();
        UniPoly r(p);
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    friend UniPoly operator*(const UniPoly& p, const Rational& s) { return s * p; }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return UniPoly();
        UniPoly r;
        r.coeffs_.resize(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i)
            r.coeffs_[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
        r.normalize();
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // x^k * p(1/x); requires k >= degree.
    UniPoly reversed(int k) const {
        if (degree() > k) throw std::invalid_argument("reversal exponent below degree");
        std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
        for (int i = 0; i <= degree(); ++i) c[static_cast<size_t>(k - i)] = coeff(i);
        return UniPoly(std::move(c));
    }

    UniPoly pow(unsigned e) const {
        UniPoly r(Rational(1));
        UniPoly base(*this);
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    // Quotient and remainder over Q; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        UniPoly q, r(*this);
        if (r.degree() < d.degree()) return {q, r};
        q.coeffs_.assign(static_cast<size_t>(r.degree() - d.degree()) + 1, Rational(0));
        const Rational& lead = d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            Rational f = r.leading() / lead;
            q.coeffs_[static_cast<size_t>(shift)] = f;
            for (int i = 0; i <= d.degree(); ++i)
                r.coeffs_[static_cast<size_t>(i + shift)] -= f * d.coeff(i);
            r.normalize();
        }
        q.normalize();
        return {q, r};
    }

    // Largest power of x dividing the polynomial (0 for the zero polynomial).
    int valuation() const {
        if (is_zero()) return 0;
        int v = 0;
        while (coeffs_[static_cast<size_t>(v)] == 0) ++v;
        return v;
    }

    UniPoly shifted_down(int k) const {  // divide by x^k, exact
        if (is_zero()) return UniPoly();
        if (valuation() < k) throw std::invalid_argument("inexact power-of-x division");
        std::vector<Rational> c(coeffs_.begin() + k, coeffs_.end());
        return UniPoly(std::move(c));
    }

    // Scale by a positive rational to integer coefficients with content 1;
    // signs are preserved, so Sturm chains may use this normalization.
    UniPoly primitive_positive_scale() const {
        if (is_zero()) return UniPoly();
        Integer den(1);
        for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        Integer g(0);
        for (const auto& c : coeffs_) {
            Integer n = c.get_num() * (den / c.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
        Rational s(den, g);
        s.canonicalize();
        return s * (*this);
    }

    // As above but additionally sign-normalized to a positive leading
    // coefficient (canonical associate for gcd work).
    UniPoly primitive() const {
        if (is_zero()) return UniPoly();
        UniPoly r = primitive_positive_scale();
        if (r.leading() < 0) r = Rational(-1) * r;
        return r;
    }

    UniPoly monic() const {
        if (is_zero()) return UniPoly();
        return Rational(1) / leading() * (*this);
    }

    // Cauchy bound: every real root lies in [-B, B].
    Rational cauchy_root_bound() const {
        if (degree() <= 0) return Rational(1);
        Rational m(0);
        for (int i = 0; i < degree(); ++i) {
            Rational a = rational_abs(coeff(i) / leading());
            if (a > m) m = a;
        }
        return Rational(1) + m;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeff(i);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rational a = rational_abs(c);
            if (i == 0 || a != 1) os << a.get_str();
            if (i > 0) {
                if (a != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

enum class UniOp { add, sub, mul };

inline UniPoly uni_arith(const UniPoly& a, const UniPoly& b, UniOp op) {
    switch (op) {
        case UniOp::add: return a + b;
        case UniOp::sub: return a - b;
        case UniOp::mul: return a * b;
    }
    throw std::logic_error("unreachable");
}

inline UniPoly uni_differentiate(const UniPoly& p) { return p.derivative(); }

// Monic gcd over Q. gcd(p, 0) = monic p by convention; both zero is rejected.
inline UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) undefined");
    UniPoly f = a.primitive(), g = b.primitive();
    while (!g.is_zero()) {
        UniPoly r = f.divrem(g).second;
        f = std::move(g);
        g = r.is_zero() ? UniPoly() : r.primitive();
    }
    return f.monic();
}

inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    UniPoly g = uni_gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return p.divrem(g).first.monic();
}

inline bool divides_exactly(const UniPoly& d, const UniPoly& p) {
    if (p.is_zero()) return true;
    if (d.is_zero()) return false;
    return p.divrem(d).second.is_zero();
}

}  // namespace fieldzero

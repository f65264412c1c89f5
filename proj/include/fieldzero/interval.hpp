#pragma once

/*
 * High-precision reals (MPFR) and rigorous interval arithmetic with directed
 * rounding. Every Interval operation rounds the lower endpoint down and the
 * upper endpoint up, so computed enclosures are valid regardless of the
 * working precision.
 */

#include "fieldzero/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace fieldzero {

class Real {
public:
    explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(double d, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    Rational to_rational() const {  // exact: stored values are dyadic
        if (!mpfr_number_p(v_)) throw std::domain_error("non-finite value");
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, v_);
        Rational r(q);
        mpq_clear(q);
        return r;
    }

    bool equals_rational(const Rational& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()) == 0; }

    std::string str(int digits = 17) const {
        char* out = nullptr;
        mpfr_asprintf(&out, "%.*Rg", digits, v_);
        std::string s(out);
        mpfr_free_str(out);
        return s;
    }

    friend Real operator-(const Real& a) {
        Real r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

#define FIELDZERO_REAL_BINOP(op, fn)                                        \
    friend Real operator op(const Real& a, const Real& b) {                 \
        Real r(std::max(a.precision(), b.precision()));                     \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                    \
        return r;                                                           \
    }
    FIELDZERO_REAL_BINOP(+, mpfr_add)
    FIELDZERO_REAL_BINOP(-, mpfr_sub)
    FIELDZERO_REAL_BINOP(*, mpfr_mul)
    FIELDZERO_REAL_BINOP(/, mpfr_div)
#undef FIELDZERO_REAL_BINOP

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    Real abs() const {
        Real r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 128) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Rational& q, mpfr_prec_t prec) : Interval(prec) {
        mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
    }
    Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) : Interval(prec) {
        if (lo > hi) throw std::invalid_argument("inverted interval");
        mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
    }
    Interval(const Interval& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval(Interval&& o) noexcept {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    Interval& operator=(Interval o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval exact(const Real& r) {
        Interval iv(r.precision());
        mpfr_set(iv.lo_, r.raw(), MPFR_RNDD);
        mpfr_set(iv.hi_, r.raw(), MPFR_RNDU);
        return iv;
    }

    // Same enclosure re-rounded outward at precision p. Unary operations
    // work at the operand's precision, so widen inputs before a computation
    // that needs more working precision than they carry.
    Interval at_precision(mpfr_prec_t p) const {
        Interval r(p);
        mpfr_set(r.lo_, lo_, MPFR_RNDD);
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

    Real lower() const {
        Real r(precision());
        mpfr_set(r.raw(), lo_, MPFR_RNDD);
        return r;
    }
    Real upper() const {
        Real r(precision());
        mpfr_set(r.raw(), hi_, MPFR_RNDU);
        return r;
    }
    Rational lower_rational() const { return lower().to_rational(); }
    Rational upper_rational() const { return upper().to_rational(); }

    Real mid() const {
        Real r(precision());
        mpfr_add(r.raw(), lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(r.raw(), r.raw(), 1, MPFR_RNDN);
        return r;
    }

    Real width() const {
        Real r(precision());
        mpfr_sub(r.raw(), hi_, lo_, MPFR_RNDU);
        return r;
    }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool is_positive() const { return mpfr_sgn(lo_) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_) < 0; }
    bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

    bool contains(const Interval& o) const {
        return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(o.hi_, hi_) <= 0;
    }
    bool contains_in_interior(const Interval& o) const {
        return mpfr_cmp(lo_, o.lo_) < 0 && mpfr_cmp(o.hi_, hi_) < 0;
    }
    bool disjoint_from(const Interval& o) const {
        return mpfr_cmp(hi_, o.lo_) < 0 || mpfr_cmp(o.hi_, lo_) < 0;
    }

    Interval intersect(const Interval& o) const {
        Interval r(std::max(precision(), o.precision()));
        mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
        if (mpfr_cmp(r.lo_, r.hi_) > 0) throw std::domain_error("empty intersection");
        return r;
    }

    Interval hull(const Interval& o) const {
        Interval r(std::max(precision(), o.precision()));
        mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }

    friend Interval operator-(const Interval& a) {
        Interval r(a.precision());
        mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
        return r;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(std::max(a.precision(), b.precision()));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }

    friend Interval operator*(const Interval& a, const Interval& b) {
        Interval r(std::max(a.precision(), b.precision()));
        mpfr_t t;
        mpfr_init2(t, r.precision());
        // lower bound: min over endpoint products rounded down
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        // upper bound: max over endpoint products rounded up
        mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    // Division; the denominator must have definite sign.
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw std::domain_error("interval division by zero-containing interval");
        Interval r(std::max(a.precision(), b.precision()));
        mpfr_t t;
        mpfr_init2(t, r.precision());
        mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    Interval square() const {
        Interval r(precision());
        if (mpfr_sgn(lo_) >= 0) {
            mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
            mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
        } else if (mpfr_sgn(hi_) <= 0) {
            mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
            mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
        } else {
            mpfr_set_zero(r.lo_, 1);
            mpfr_t t;
            mpfr_init2(t, precision());
            mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
            mpfr_sqr(t, hi_, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
            mpfr_clear(t);
        }
        return r;
    }

    Interval sqrt() const {
        if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of negative range");
        Interval r(precision());
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    Interval inflated_by_ulps(unsigned long n = 4) const {
        Interval r(*this);
        for (unsigned long i = 0; i < n; ++i) {
            mpfr_nextbelow(r.lo_);
            mpfr_nextabove(r.hi_);
        }
        return r;
    }

    std::string str(int digits = 17) const {
        return "[" + lower().str(digits) + ", " + upper().str(digits) + "]";
    }

private:
    mpfr_t lo_, hi_;
};

}  // namespace fieldzero

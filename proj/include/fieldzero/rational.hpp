#pragma once

/*
 * Exact rational scalars. Thin helpers around GMP's mpq_class: parsing of
 * "p/q", integer and decimal literals, integer powers, and deterministic
 * string formatting. All values are kept canonical (lowest terms, positive
 * denominator) by GMP itself.
 */

#include <gmpxx.h>
#include <mpfr.h>

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace fieldzero {

using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Accepts "p/q", integers, and plain decimals with optional exponent
// ("-4", "3/8", "0.25", "1.5e-3"). Exact in all cases.
inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    if (s.find('/') != std::string::npos) {
        Rational q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        q.canonicalize();
        return q;
    }

    // decimal form: [sign] digits [. digits] [e exp]
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        const std::string es = s.substr(epos + 1);
        if (es.empty()) throw std::invalid_argument("bad exponent: " + text);
        errno = 0;
        char* end = nullptr;
        exp10 = std::strtol(es.c_str(), &end, 10);
        if (errno != 0 || end == nullptr || *end != '\0')
            throw std::invalid_argument("bad exponent: " + text);
        s = s.substr(0, epos);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(s.size() - dot - 1);
        s.erase(dot, 1);
    }
    if (s.empty() || s == "-" || s == "+") throw std::invalid_argument("bad rational literal: " + text);
    Integer mant;
    if (mant.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    Rational q(mant);
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 >= 0)
        q *= Rational(p10);
    else
        q /= Rational(p10);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

// 2^e as a rational, e may be negative.
inline Rational pow2(long e) {
    Rational r(1);
    if (e >= 0) {
        mpz_ui_pow_ui(r.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
    } else {
        mpz_ui_pow_ui(r.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
    }
    r.canonicalize();
    return r;
}

// Canonicalized n/d (the raw two-argument mpq_class constructor does not
// reduce to lowest terms).
inline Rational ratio(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Deterministic decimal rendering (17 significant digits, round to nearest).
inline std::string decimal_string(const Rational& q, int digits = 17) {
    mpfr_t v;
    mpfr_init2(v, 256);
    mpfr_set_q(v, q.get_mpq_t(), MPFR_RNDN);
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Rg", digits, v);
    std::string s(out);
    mpfr_free_str(out);
    mpfr_clear(v);
    return s;
}

// Directed rational bounds on sqrt(q), q >= 0. The returned pair (lo, hi)
// satisfies lo^2 <= q <= hi^2 and hi - lo <= 2^-extra_bits * max(1, hi).
inline std::pair<Rational, Rational> rational_sqrt_bounds(const Rational& q, unsigned extra_bits = 64) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    if (q == 0) return {Rational(0), Rational(0)};
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^k for precision.
    Integer nd = q.get_num() * q.get_den();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 4, extra_bits);
    nd *= scale;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), nd.get_mpz_t());  // floor sqrt
    Integer den2;
    mpz_ui_pow_ui(den2.get_mpz_t(), 2, extra_bits);
    den2 *= q.get_den();
    Rational lo(root, den2), hi(root + 1, den2);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

}  // namespace fieldzero

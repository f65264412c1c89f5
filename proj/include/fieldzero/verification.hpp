#pragma once

/*
 * Mechanical verification suites for the asymptote polynomial families:
 * root counts and strict interlacing, the cross-family identity
 * P_L = L Q_{L-1} (1+x^2) + x Q_L, the inversion identity connecting Q_L at
 * x with numC_L at 1/x, and the absence of common nonzero roots of numC_L
 * and numD_L. Everything is decided in exact rational arithmetic; a failure
 * anywhere indicates an implementation bug, not a numerical artifact.
 */

#include "fieldzero/asymptote_polys.hpp"
#include "fieldzero/sturm.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace fieldzero {

struct CheckResult {
    long L = 0;
    bool ok = true;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    bool ok = true;
    std::vector<CheckResult> checks;

    void add(long L, bool pass, const std::string& detail) {
        checks.push_back(CheckResult{L, pass, detail});
        ok = ok && pass;
    }
};

namespace detail {

// Isolating intervals for all real roots; requires all roots simple.
inline bool distinct_real_roots(const UniPoly& p, std::vector<IsolatingInterval>& out) {
    UniPoly sf = squarefree_part(p);
    if (sf.degree() != p.degree()) return false;  // repeated root somewhere
    out = isolate_all_roots(sf);
    return true;
}

// Strictly interlacing: outer has exactly one more root than inner and the
// merged order alternates starting and ending with outer. Assumes no shared
// roots (checked by the caller via gcd).
inline bool strictly_interlace(std::vector<IsolatingInterval> outer, std::vector<IsolatingInterval> inner) {
    if (outer.size() != inner.size() + 1) return false;
    auto separated = [](const IsolatingInterval& a, const IsolatingInterval& b) {
        return a.hi <= b.lo || b.hi <= a.lo;
    };
    for (bool again = true; again;) {
        again = false;
        for (auto& a : outer)
            for (auto& b : inner)
                if (!separated(a, b)) {
                    a = refine_interval(a, a.width() / 4);
                    b = refine_interval(b, b.width() / 4);
                    again = true;
                }
    }
    // Touching endpoints still order the roots strictly: a bracketed root is
    // strictly interior, and equal point intervals would be a shared root,
    // which the caller has excluded via gcd.
    for (size_t i = 0; i < inner.size(); ++i)
        if (!(outer[i].hi <= inner[i].lo && inner[i].hi <= outer[i + 1].lo)) return false;
    return true;
}

}  // namespace detail

// Root counts and the five strict interlacing relations for L = 1..L_max.
inline SuiteReport verify_interlacing(long L_max) {
    SuiteReport rep;
    rep.name = "interlacing";
    AsymptotePolynomials prev = build_asymptote_polys(0);
    for (long L = 1; L <= L_max; ++L) {
        AsymptotePolynomials cur = build_asymptote_polys(L);
        std::ostringstream detail;
        bool ok = true;

        std::vector<IsolatingInterval> rP, rQ, rPprev, rQprev, rPd, rQd;
        ok &= detail::distinct_real_roots(cur.P, rP) && static_cast<long>(rP.size()) == L + 1;
        if (!ok) detail << "P roots not " << (L + 1) << " distinct real; ";
        bool okq = detail::distinct_real_roots(cur.Q, rQ) && static_cast<long>(rQ.size()) == L;
        if (!okq) detail << "Q roots not " << L << " distinct real; ";
        ok &= okq;

        if (ok) {
            detail::distinct_real_roots(prev.P, rPprev);
            detail::distinct_real_roots(prev.Q, rQprev);
            struct Pair {
                const char* label;
                const UniPoly *a, *b;
                std::vector<IsolatingInterval>*ra, *rb;
            };
            UniPoly Pd = cur.P.derivative(), Qd = cur.Q.derivative();
            bool okd = detail::distinct_real_roots(Pd, rPd);
            bool okqd = L >= 1 && detail::distinct_real_roots(Qd, rQd);
            if (!okd || !okqd) {
                ok = false;
                detail << "derivative roots not all simple; ";
            } else {
                const Pair pairs[] = {
                    {"P_L/P_{L-1}", &cur.P, &prev.P, &rP, &rPprev},
                    {"Q_L/Q_{L-1}", &cur.Q, &prev.Q, &rQ, &rQprev},
                    {"P_L/P_L'", &cur.P, &Pd, &rP, &rPd},
                    {"Q_L/Q_L'", &cur.Q, &Qd, &rQ, &rQd},
                    {"P_L/Q_L", &cur.P, &cur.Q, &rP, &rQ},
                };
                for (const auto& pr : pairs) {
                    if (pr.b->degree() < 0) continue;  // Q_0' etc. have no roots to interlace
                    if (uni_gcd(*pr.a, *pr.b).degree() > 0) {
                        ok = false;
                        detail << pr.label << " share a root; ";
                        continue;
                    }
                    if (!detail::strictly_interlace(*pr.ra, *pr.rb)) {
                        ok = false;
                        detail << pr.label << " fail to interlace; ";
                    }
                }
            }
        }
        rep.add(L, ok, detail.str());
        prev = cur;
    }
    return rep;
}

// P_L(x) = L Q_{L-1}(x) (1 + x^2) + x Q_L(x), exactly, for L = 1..L_max.
inline SuiteReport verify_identity_f17(long L_max) {
    SuiteReport rep;
    rep.name = "derivative-shift identity";
    UniPoly one_plus_x2(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    AsymptotePolynomials prev = build_asymptote_polys(0);
    for (long L = 1; L <= L_max; ++L) {
        AsymptotePolynomials cur = build_asymptote_polys(L);
        UniPoly rhs = Rational(L) * (prev.Q * one_plus_x2) + UniPoly::variable() * cur.Q;
        bool ok = (cur.P == rhs);
        rep.add(L, ok, ok ? "" : "polynomial identity mismatch");
        prev = cur;
    }
    return rep;
}

// sgn(x) x^{L+1} B_L(x) = (-1)^L C_L(1/x): after clearing the shared
// denominator on x > 0 this is the polynomial identity
// x^{L+1} Q_L(x) == (-1)^L x rev_{2L+2}(numC_L)(x).
inline SuiteReport verify_inversion(long L_max) {
    SuiteReport rep;
    rep.name = "inversion identity";
    for (long L = 0; L <= L_max; ++L) {
        AsymptotePolynomials cur = build_asymptote_polys(L);
        UniPoly lhs = UniPoly::monomial(static_cast<int>(L) + 1, Rational(1)) * cur.Q;
        UniPoly rhs = UniPoly::variable() * cur.numC.reversed(2 * static_cast<int>(L) + 2);
        if (L % 2 == 1) rhs = Rational(-1) * rhs;
        bool ok = (lhs == rhs);
        rep.add(L, ok, ok ? "" : "identity mismatch after denominator clearing");
    }
    return rep;
}

// gcd(numC_L, numD_L) may vanish only at 0, for L = 1..L_max.
inline SuiteReport verify_no_common_cd_root(long L_max) {
    SuiteReport rep;
    rep.name = "C/D common roots";
    for (long L = 1; L <= L_max; ++L) {
        AsymptotePolynomials cur = build_asymptote_polys(L);
        UniPoly g = uni_gcd(cur.numC, cur.numD);
        UniPoly reduced = g.shifted_down(g.valuation());
        bool ok = reduced.degree() == 0;
        rep.add(L, ok, ok ? "" : "common zero away from the origin: gcd = " + g.to_string());
    }
    return rep;
}

}  // namespace fieldzero

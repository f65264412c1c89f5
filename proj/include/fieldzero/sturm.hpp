#pragma once

/*
 * Real root isolation for squarefree rational polynomials via Sturm chains.
 *
 * An IsolatingInterval either brackets exactly one simple root with a sign
 * change at the endpoints, or is a degenerate point interval (lo == hi) when
 * a root is hit exactly during bisection. All arithmetic is exact.
 */

#include "fieldzero/unipoly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fieldzero {

struct IsolatingInterval {
    Rational lo, hi;
    UniPoly poly;

    bool is_point() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

class SturmChain {
public:
    explicit SturmChain(const UniPoly& p) {
        // positive scaling only: sign patterns along the chain are what the
        // variation counts measure
        UniPoly f = p.primitive_positive_scale();
        if (f.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
        chain_.push_back(f);
        if (f.degree() >= 1) {
            UniPoly g = f.derivative().primitive_positive_scale();
            while (!g.is_zero()) {
                chain_.push_back(g);
                UniPoly r = chain_[chain_.size() - 2].divrem(g).second;
                g = r.is_zero() ? UniPoly() : (Rational(-1) * r).primitive_positive_scale();
            }
        }
    }

    const UniPoly& poly() const { return chain_.front(); }

    bool squarefree() const { return chain_.back().degree() == 0; }

    int variations_at(const Rational& t) const {
        int v = 0, prev = 0;
        for (const auto& f : chain_) {
            int s = sign(f.eval(t));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    int variations_at_neg_inf() const { return variations_limit(-1); }
    int variations_at_pos_inf() const { return variations_limit(+1); }

    // Number of distinct roots in (a, b); requires p(a) != 0 and p(b) != 0.
    int count_in(const Rational& a, const Rational& b) const {
        return variations_at(a) - variations_at(b);
    }

private:
    int variations_limit(int dir) const {
        int v = 0, prev = 0;
        for (const auto& f : chain_) {
            int s = sign(f.leading());
            if (dir < 0 && (f.degree() % 2) == 1) s = -s;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    std::vector<UniPoly> chain_;
};

namespace detail {

inline void isolate_rec(const SturmChain& chain, const UniPoly& p, const Rational& a, const Rational& b,
                        int count, std::vector<IsolatingInterval>& out, std::optional<Rational>& hit) {
    if (count <= 0 || hit) return;
    Rational m = (a + b) / 2;
    if (p.eval(m) == 0) {
        hit = m;  // exact rational root: caller deflates and restarts
        return;
    }
    if (count == 1) {
        out.push_back(IsolatingInterval{a, b, p});
        return;
    }
    int left = chain.count_in(a, m);
    isolate_rec(chain, p, a, m, left, out, hit);
    isolate_rec(chain, p, m, b, count - left, out, hit);
}

}  // namespace detail

// Isolate all real roots of squarefree p in the open interval (lo, hi).
// Roots hit exactly during bisection (and roots at the given endpoints,
// which are excluded from the open interval) come out as point intervals
// or are dropped, respectively.
inline std::vector<IsolatingInterval> sturm_isolate(const UniPoly& p, Rational lo, Rational hi) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("empty isolation interval");
    if (p.degree() >= 1 && uni_gcd(p, p.derivative()).degree() > 0)
        throw std::logic_error("sturm_isolate requires a squarefree polynomial");

    UniPoly f = p;
    // roots at the endpoints are not part of the open interval
    while (!f.is_zero() && f.eval(lo) == 0)
        f = f.divrem(UniPoly(std::vector<Rational>{-lo, Rational(1)})).first;
    while (!f.is_zero() && f.eval(hi) == 0)
        f = f.divrem(UniPoly(std::vector<Rational>{-hi, Rational(1)})).first;
    if (f.degree() <= 0) return {};

    std::vector<Rational> exact_roots;
    std::vector<IsolatingInterval> open;
    for (;;) {
        SturmChain chain(f);
        int count = chain.count_in(lo, hi);
        open.clear();
        std::optional<Rational> hit;
        detail::isolate_rec(chain, f, lo, hi, count, open, hit);
        if (!hit) break;
        exact_roots.push_back(*hit);
        f = f.divrem(UniPoly(std::vector<Rational>{-*hit, Rational(1)})).first;
        if (f.degree() <= 0) {
            open.clear();
            break;
        }
    }

    // Shrink bracketing intervals until they exclude the exact roots found
    // above, so the output intervals are pairwise disjoint. Brackets keep
    // the deflated polynomial: it has the same single root inside and, being
    // nonzero at the deflated-out rational roots, it keeps the endpoint
    // sign-change invariant that later refinement relies on.
    std::vector<IsolatingInterval> result;
    for (auto& iv : open) {
        for (const auto& r : exact_roots) {
            while (iv.lo < r && r < iv.hi) {
                Rational m = iv.mid();
                int sm = sign(iv.poly.eval(m));
                if (sm == sign(iv.poly.eval(iv.lo)))
                    iv.lo = m;
                else
                    iv.hi = m;
            }
        }
        result.push_back(iv);
    }
    for (const auto& r : exact_roots)
        if (lo < r && r < hi) result.push_back(IsolatingInterval{r, r, p});

    std::sort(result.begin(), result.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo + a.hi < b.lo + b.hi; });
    return result;
}

// Smallest-denominator rational in [lo, hi] (Stern-Brocot descent).
inline Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("empty interval");
    if (lo <= 0 && 0 <= hi) return Rational(0);
    if (lo < 0) return -simplest_rational_in(-hi, -lo);
    Integer ceil_lo;
    mpz_cdiv_q(ceil_lo.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    if (Rational(ceil_lo) <= hi) return Rational(ceil_lo);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    Rational n(fl);
    return n + 1 / simplest_rational_in(1 / (hi - n), 1 / (lo - n));
}

// Collapse a bracket to a point when the simplest rational inside is a root
// (cheap exact detection of rational roots after refinement).
inline IsolatingInterval collapse_rational_root(IsolatingInterval iv) {
    if (iv.is_point()) return iv;
    Rational cand = simplest_rational_in(iv.lo, iv.hi);
    if (iv.poly.eval(cand) == 0) return IsolatingInterval{cand, cand, iv.poly};
    return iv;
}

// Isolate all real roots of squarefree p (bracket from the Cauchy bound).
inline std::vector<IsolatingInterval> isolate_all_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    if (p.degree() == 0) return {};
    Rational b = p.cauchy_root_bound() + 1;
    return sturm_isolate(p, -b, b);
}

// Bisect until width <= target (point intervals are returned unchanged).
inline IsolatingInterval refine_interval(IsolatingInterval iv, const Rational& target_width) {
    if (iv.is_point()) return iv;
    int slo = sign(iv.poly.eval(iv.lo));
    if (slo == 0 || slo == sign(iv.poly.eval(iv.hi)))
        throw std::logic_error("isolating interval lost its sign change");
    while (iv.width() > target_width) {
        Rational m = iv.mid();
        int sm = sign(iv.poly.eval(m));
        if (sm == 0) return IsolatingInterval{m, m, iv.poly};
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

}  // namespace fieldzero

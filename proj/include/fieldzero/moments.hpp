#pragma once

/*
 * Signed power-sum moments of a charge system and the critical index: the
 * smallest L with mu_L != 0. A Vandermonde argument shows L <= M-1 for any
 * valid system (all moments through M-1 vanishing would force every
 * amplitude to zero).
 */

#include "fieldzero/charge_system.hpp"

#include <stdexcept>
#include <vector>

namespace fieldzero {

struct MomentVector {
    std::vector<Rational> values;  // mu_0 .. mu_M

    const Rational& mu(size_t u) const { return values.at(u); }
};

struct CriticalIndex {
    size_t L;
    Rational mu_L;
};

// mu_u = (-1)^u sum_j a_j x_j^u for u = 0..M.
inline MomentVector moments(const ChargeSystem& sys) {
    const size_t M = sys.count();
    MomentVector mv;
    mv.values.reserve(M + 1);
    std::vector<Rational> xpow(M, Rational(1));
    for (size_t u = 0; u <= M; ++u) {
        Rational s(0);
        for (size_t j = 0; j < M; ++j) s += sys.amplitude(j) * xpow[j];
        if (u % 2 == 1) s = -s;
        mv.values.push_back(s);
        for (size_t j = 0; j < M; ++j) xpow[j] *= sys.position(j);
    }
    return mv;
}

inline CriticalIndex critical_index(const ChargeSystem& sys) {
    MomentVector mv = moments(sys);
    for (size_t u = 0; u + 1 < mv.values.size(); ++u)
        if (mv.values[u] != 0) return CriticalIndex{u, mv.values[u]};
    // mu_0..mu_{M-1} all zero contradicts the nonzero-amplitude invariant
    throw std::logic_error("moment vector vanishes through M-1: invariant violation");
}

}  // namespace fieldzero

#pragma once

/*
 * A finite system of point charges on the x-axis in canonical form:
 * strictly increasing, strictly positive positions and nonzero amplitudes.
 * Inputs in an arbitrary frame are brought to canonical form by the
 * normalizing constructor, which translates all positions by the same shift.
 */

#include "fieldzero/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace fieldzero {

struct Charge {
    Rational position;   // x_j on the charge line
    Rational amplitude;  // a_j, signed and nonzero
};

class ChargeSystem {
public:
    explicit ChargeSystem(std::vector<Charge> charges) : charges_(std::move(charges)) {
        if (charges_.empty()) throw std::invalid_argument("charge system must contain at least one charge");
        for (size_t j = 0; j < charges_.size(); ++j) {
            if (charges_[j].amplitude == 0)
                throw std::invalid_argument("charge amplitude must be nonzero (index " + std::to_string(j) + ")");
            if (charges_[j].position <= 0)
                throw std::invalid_argument("charge positions must be strictly positive; normalize first");
            if (j > 0 && !(charges_[j - 1].position < charges_[j].position))
                throw std::invalid_argument("charge positions must be strictly increasing and distinct");
        }
    }

    // Sorts by position, rejects duplicates / zero amplitudes, and translates
    // so that the smallest position is 1 whenever it is not already positive.
    // Returns the system together with the applied shift.
    static std::pair<ChargeSystem, Rational> normalized(std::vector<Charge> charges) {
        if (charges.empty()) throw std::invalid_argument("charge system must contain at least one charge");
        std::sort(charges.begin(), charges.end(),
                  [](const Charge& a, const Charge& b) { return a.position < b.position; });
        for (size_t j = 1; j < charges.size(); ++j)
            if (charges[j - 1].position == charges[j].position)
                throw std::invalid_argument("duplicate charge positions");
        Rational shift(0);
        if (charges.front().position <= 0) shift = 1 - charges.front().position;
        for (auto& c : charges) c.position += shift;
        return {ChargeSystem(std::move(charges)), shift};
    }

    size_t count() const { return charges_.size(); }
    const std::vector<Charge>& charges() const { return charges_; }
    const Rational& position(size_t j) const { return charges_[j].position; }
    const Rational& amplitude(size_t j) const { return charges_[j].amplitude; }
    const Rational& max_position() const { return charges_.back().position; }

    bool all_same_sign() const {
        int s = sign(charges_.front().amplitude);
        for (const auto& c : charges_)
            if (sign(c.amplitude) != s) return false;
        return true;
    }

private:
    std::vector<Charge> charges_;
};

}  // namespace fieldzero

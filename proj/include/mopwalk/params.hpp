#pragma once

#include <string>

#include "mopwalk/rational.hpp"

namespace mopwalk {

// The Jacobi-Pineiro parameter triple, exact. Weights are x^alpha and x^beta
// against (1-x)^gamma dx on [0,1].
struct JPParams {
    Rational alpha;
    Rational beta;
    Rational gamma;

    // alpha, beta, gamma > -1 and alpha - beta not an integer.
    // Throws InvalidParams / ResonantParams otherwise.
    void validate() const;

    bool is_perfect() const;  // alpha - beta not an integer (given the > -1 bounds)
};

struct PositivityVerdict {
    bool ok;
    std::string reason;  // empty when ok
};

// true iff alpha, beta, gamma > -1, |alpha - beta| < 1 and alpha != beta:
// the region where the Jacobi band is nonnegative.
PositivityVerdict positivity_region(const JPParams& p);

}  // namespace mopwalk

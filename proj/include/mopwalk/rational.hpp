#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mopwalk {

// Exact rational scalar. All oracle and type-II paths stay in this type;
// nothing in those paths may round.
using Rational = mpq_class;

// Parses "num/den", "num", or "-num/den". Throws InvalidParams on anything else.
Rational rational_from_string(const std::string& s);

// Canonical "num/den" (or "num" when the denominator is 1).
std::string rational_to_string(const Rational& q);

// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
Rational rising(const Rational& x, std::uint64_t n);

Rational factorial_q(std::uint64_t n);

// C(n, k) over the integers, exact.
Rational binomial_q(std::uint64_t n, std::uint64_t k);

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace mopwalk

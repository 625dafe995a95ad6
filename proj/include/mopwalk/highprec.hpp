#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>

#include "mopwalk/rational.hpp"

namespace mopwalk {

// Arbitrary-precision float on MPFR. Precision is configured process-wide in
// bits (default 256); each value carries at least that many mantissa bits.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 256;

unsigned precision_bits();
void set_precision_bits(unsigned bits);

// Temporarily raises working precision; restores on scope exit.
class PrecisionScope {
  public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned saved_;
};

// Exact conversion of a rational into the current working precision.
Real to_real(const Rational& q);

Real log_gamma(const Real& x);  // requires x > 0
Real gamma_fn(const Real& x);   // requires x > 0 here (all uses have positive args)

// Rising factorial as an explicit product; the base may be negative.
Real rising(const Real& x, std::uint64_t n);

// 2^(-p/2) for the current working precision p: the float-mode row-sum tolerance.
Real half_precision_eps();

}  // namespace mopwalk

#include "mopwalk/highprec.hpp"

#include <cmath>

namespace mopwalk {

namespace {
thread_local unsigned g_bits = kDefaultPrecisionBits;

unsigned digits10_for_bits(unsigned bits) {
    // ceil(bits * log10(2)) + small guard so mpfr grants >= bits mantissa bits
    return static_cast<unsigned>(bits * 0.30103) + 2;
}
}  // namespace

unsigned precision_bits() { return g_bits; }

void set_precision_bits(unsigned bits) {
    if (bits < 24) bits = 24;
    g_bits = bits;
    Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_(g_bits) { set_precision_bits(bits); }
PrecisionScope::~PrecisionScope() { set_precision_bits(saved_); }

Real to_real(const Rational& q) {
    Real x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

Real log_gamma(const Real& x) { return lgamma(x); }

Real gamma_fn(const Real& x) { return tgamma(x); }

Real rising(const Real& x, std::uint64_t n) {
    Real p(1);
    Real t = x;
    for (std::uint64_t i = 0; i < n; ++i) {
        p *= t;
        t += 1;
    }
    return p;
}

Real half_precision_eps() {
    Real e(1);
    return ldexp(e, -static_cast<int>(g_bits / 2));
}

}  // namespace mopwalk

#pragma once

#include <stdexcept>
#include <string>

namespace mopwalk {

// Error taxonomy. The C API maps these onto exit-code style integers:
//   invalid/resonant params -> 2, precision loss -> 3, invariant violation -> 4.

struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResonantParams : InvalidParams {
    ResonantParams() : InvalidParams("resonant parameters: alpha - beta is an integer") {}
    explicit ResonantParams(const std::string& m) : InvalidParams(m) {}
};

struct SingularMinor : std::runtime_error {
    int index;
    explicit SingularMinor(int l)
        : std::runtime_error("leading principal minor " + std::to_string(l) +
                             " vanishes (non-perfect parameters)"),
          index(l) {}
};

struct PrecisionLoss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonTerminating : std::runtime_error {
    NonTerminating() : std::runtime_error("3F2 series does not terminate: no nonpositive-integer upper parameter") {}
};

struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature of a non-polynomial kernel stalled; carries the best value and a bound.
struct SlowConvergence : std::runtime_error {
    double partial_value;
    double error_bound;
    SlowConvergence(const std::string& m, double v, double b)
        : std::runtime_error(m), partial_value(v), error_bound(b) {}
};

struct NonpositiveValue : std::runtime_error {
    int index;
    explicit NonpositiveValue(int n)
        : std::runtime_error("scaling value at index " + std::to_string(n) + " is not positive"),
          index(n) {}
};

struct NegativeEntry : std::runtime_error {
    int row, col;
    NegativeEntry(int n, int m)
        : std::runtime_error("negative matrix entry at (" + std::to_string(n) + "," + std::to_string(m) + ")"),
          row(n), col(m) {}
};

struct ZeroDenominator : std::runtime_error {
    int index;
    explicit ZeroDenominator(int n)
        : std::runtime_error("scaling recursion denominator vanished at row " + std::to_string(n)),
          index(n) {}
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MixedMode : std::logic_error {
    MixedMode() : std::logic_error("mixing exact and float mode operands") {}
};

}  // namespace mopwalk

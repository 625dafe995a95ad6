#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mopwalk {

// Composition (n_1,...,n_p) of positive integers; the ladder geometry of the
// multi-index sequence.
struct Composition {
    std::vector<std::uint32_t> parts;

    std::uint64_t total() const;
    std::size_t weight_count() const { return parts.size(); }
    bool valid() const;
};

// Result of the generalized Euclidean division of a sequence index:
//   i = q*|n| + n_1 + ... + n_{a-1} + r,  0 <= r < n_a,   k = q*n_a + r.
struct SteplineIndex {
    std::uint64_t i = 0;
    std::uint64_t q = 0;
    std::uint32_t a = 1;  // weight label, 1-based
    std::uint64_t r = 0;
    std::uint64_t k = 0;  // local degree for weight a
    std::vector<std::uint64_t> nu;  // degree multi-index, |nu| == i, nu[a-1] == k
};

// Total function for any valid composition and i in [0, 2^63).
SteplineIndex decompose(std::uint64_t i, const Composition& comp);

// Left inverse: index_of(k(i), a(i), comp) == i.
std::uint64_t index_of(std::uint64_t k, std::uint32_t a, const Composition& comp);

// Multi-index on the step line n = (1,1), table convention:
//   nu(2n) = (n, n),  nu(2n+1) = (n+1, n).
// This matches decompose(l, {1,1}).nu; B^(l) has multi-index nu(l) and the
// l-th linear form Q^(l) has multi-index nu(l+1).
std::pair<std::uint64_t, std::uint64_t> stepline_multiindex(std::uint64_t l);

// The shifted convention used by the closed-form Jacobi-Pineiro sections:
//   nu(2n) = (n+1, n),  nu(2n+1) = (n+1, n+1);
// equal to stepline_multiindex(l + 1).
std::pair<std::uint64_t, std::uint64_t> jp_multiindex(std::uint64_t l);

}  // namespace mopwalk

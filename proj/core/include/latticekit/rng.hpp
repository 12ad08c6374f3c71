#pragma once

#include <cstdint>

#include "latticekit/matrix.hpp"

namespace latk {

// Deterministic seeded generator. Only the raw 64-bit stream of
// std::mt19937_64 is used (the standard pins its output exactly);
// range reduction is done by hand so results are identical everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64();
    // Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi);
    bool coin() { return (next_u64() & 1) != 0; }

  private:
    std::uint64_t state_;
};

// Entries uniform in [lo, hi], resampled until the determinant is nonzero.
Matrix random_nonsingular(Rng& rng, std::size_t n, long lo = -3, long hi = 3);

// Product of `steps` random elementary matrices (shears, swaps, sign flips).
Matrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps);

// Entries uniform in [lo, hi].
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -3, long hi = 3);

} // namespace latk

#pragma once

#include "reuse.hpp"

namespace eocas {

// Exact brute-force interpretation of a mapped loop nest. One live tile per
// operand per level; every boundary-crossing transfer is counted.
struct SimTally {
  double ops = 0;   // loop-space visits (mux for FP/WG, mul for BP)
  double adds = 0;  // accumulations (spike-gated when sparse)
  AccessTally tally;
  std::array<double, kNumOperands> distinct{};  // elements touched per operand
};

inline constexpr std::uint64_t kDefaultOracleCap = 100'000'000;

// Walks the nest in innermost-complete order. Throws ResourceError when the
// loop space exceeds the cap. Deterministic.
SimTally simulate(const MappedDataflow& m, std::uint64_t cap = kDefaultOracleCap,
                  const ArchConfig* arch = nullptr);

// As simulate, but draws a Bernoulli(spar) spike mask from a seeded
// generator and counts adds only where the spike fires.
SimTally simulate_sparse(const MappedDataflow& m, std::uint64_t seed, double spar,
                         std::uint64_t cap = kDefaultOracleCap,
                         const ArchConfig* arch = nullptr);

}  // namespace eocas

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "barriers/classical.hpp"
#include "barriers/f2.hpp"

namespace barriers {

// Exact searches walk all 2^n error configurations; refuse beyond this.
inline constexpr unsigned kDefaultExactCapBits = 22;

using EnergyFunction = std::function<std::size_t(const BitVec&)>;

inline EnergyFunction energy_of_matrix(const BitMat& H) {
  return [&H](const BitVec& x) { return mat_vec(H, x).weight(); };
}

// A sequence of configurations starting at zero, consecutive entries
// differing in at most one coordinate.
struct PauliPath {
  std::size_t n = 0;
  std::vector<BitVec> steps;

  static PauliPath from_flips(std::size_t n, const std::vector<std::size_t>& flips);
  std::vector<std::size_t> flip_sequence() const;
  std::size_t max_energy(const EnergyFunction& energy) const;
};

bool verify_path(const PauliPath& p, const BitVec& target);

struct BarrierResult {
  std::size_t value = 0;
  PauliPath witness;
  bool exact = false;
  std::string target;
};

// ---- exact bottleneck search ----
//
// The barrier is a bottleneck-shortest-path problem on the n-cube: the
// label of a state is the minimum over arrival orders of the maximum
// energy en route, and states are expanded best-bottleneck-first so
// labels are final when popped.  Works on a precomputed energy table
// indexed by the state's bit mask.

struct ExactSweep {
  std::size_t n = 0;
  std::vector<uint16_t> energy;  // 2^n entries
  std::vector<uint16_t> label;   // final bottleneck labels
  std::vector<uint8_t> parent;   // flip index toward the start

  PauliPath witness_to(uint64_t state) const;
};

// Energy table for wt(Hx) over all 2^n states, filled by a Gray-code
// sweep with one column-syndrome update per state.
std::vector<uint16_t> energy_table(const BitMat& H, unsigned cap_bits = kDefaultExactCapBits);
std::vector<uint16_t> energy_table(const EnergyFunction& energy, std::size_t n,
                                   unsigned cap_bits = kDefaultExactCapBits);

ExactSweep exact_sweep(std::vector<uint16_t> energies, std::size_t n);

BarrierResult barrier_exact(const BitMat& H, const BitVec& target,
                            unsigned cap_bits = kDefaultExactCapBits);
BarrierResult barrier_exact(const EnergyFunction& energy, std::size_t n,
                            const BitVec& target,
                            unsigned cap_bits = kDefaultExactCapBits);

// Minimum label over all states accepted by `target_pred` (evaluated on
// every state), with a witness to the argmin.
BarrierResult barrier_exact_over(const BitMat& H, std::size_t n,
                                 const std::function<bool(uint64_t)>& target_pred,
                                 unsigned cap_bits = kDefaultExactCapBits);

// Code-level barrier: min over all nontrivial codewords of H.
BarrierResult code_barrier_exact(const ClassicalCode& code,
                                 unsigned cap_bits = kDefaultExactCapBits);

// ---- best-first heuristic (upper estimate, any n) ----

struct BestFirstConfig {
  std::size_t frontier_cap = 1'000'000;  // max expanded states
  uint64_t seed = 0;                     // recorded in reports; search is deterministic
  double heuristic_weight = 0.0;  // priority = max energy + weight * distance-to-target
};

BarrierResult barrier_best_first(const EnergyFunction& energy, std::size_t n,
                                 const BitVec& target,
                                 const BestFirstConfig& config = {});

}  // namespace barriers

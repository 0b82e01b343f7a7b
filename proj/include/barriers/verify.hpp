#pragma once

#include <string>
#include <vector>

#include "barriers/barrier.hpp"
#include "barriers/report.hpp"

namespace barriers {

struct VerifyConfig {
  uint64_t seed = 7;
  unsigned cap_exact = kDefaultExactCapBits;
  double budget_secs = 0.0;  // 0 = unlimited; exceeded claims are skipped
};

const std::vector<std::string>& verify_suites();

// Seeded random single-flip path from zero to target: the target flips in
// shuffled order with `detours` canceling flip pairs mixed in.
PauliPath random_path_to(const BitVec& target, uint64_t seed,
                         std::size_t detours);

// Runs the named claim suite; throws std::invalid_argument for an unknown
// suite name (the message lists the valid ones).
VerificationReport run_verify(const std::string& suite,
                              const VerifyConfig& config = {});

}  // namespace barriers

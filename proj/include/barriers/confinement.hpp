#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "barriers/css.hpp"
#include "barriers/f2.hpp"

namespace barriers {

// Coset enumeration cap for reduced weights: refuse past 2^20 kernel
// combinations per error.
inline constexpr unsigned kDefaultCosetCapBits = 20;

// Increasing integer function f(x) = num * x^power / den with f(0) = 0,
// compared exactly through the integer cross-multiplication.
struct MonotoneF {
  uint64_t num = 1;
  uint64_t den = 1;
  unsigned power = 1;

  // f(x) >= y
  bool at_least(uint64_t x, uint64_t y) const;
  double value(uint64_t x) const;
  std::string to_string() const;

  // Accepts "x", "x^3", "x^3/4", "2*x", "3*x^2/5".
  static MonotoneF parse(const std::string& text);
};

// Minimum weight over all errors with the same syndrome as e, i.e. the
// coset e + ker(checks).  Throws when the kernel dimension exceeds the cap.
std::size_t reduced_weight(const CssCode& css, const BitVec& e, Kind kind,
                           unsigned cap_bits = kDefaultCosetCapBits);
std::size_t reduced_weight(const BitMat& H, const BitVec& e,
                           unsigned cap_bits = kDefaultCosetCapBits);

struct ConfinementPoint {
  std::size_t syndrome_weight;
  std::size_t max_reduced_weight;  // max over scanned errors at this syndrome weight
};

struct ConfinementViolation {
  BitVec error;
  std::size_t syndrome_weight;
  std::size_t reduced_weight;
};

struct ConfinementReport {
  Kind kind = Kind::Z;
  std::size_t w_max = 0;
  bool exhaustive = true;
  std::vector<ConfinementPoint> points;          // ascending syndrome weight
  std::vector<ConfinementViolation> violations;  // f(|s(e)|) < |e|^red <= t
};

// Exhaustive over all errors of weight <= w_max; a violation is an error
// whose reduced weight is at most t yet exceeds f of its syndrome weight.
ConfinementReport confinement_scan(const CssCode& css, Kind kind,
                                   std::size_t w_max, const MonotoneF& f,
                                   std::size_t t,
                                   unsigned cap_bits = kDefaultCosetCapBits);
ConfinementReport confinement_scan_serial(const CssCode& css, Kind kind,
                                          std::size_t w_max, const MonotoneF& f,
                                          std::size_t t,
                                          unsigned cap_bits = kDefaultCosetCapBits);

struct SoundnessViolation {
  BitVec syndrome;
  std::size_t syndrome_weight;
  std::size_t min_error_weight;
};

struct SoundnessReport {
  Kind kind = Kind::Z;
  std::size_t t = 0;
  std::size_t w_max = 0;  // error sweep depth used to collect syndromes
  bool exhaustive = true;
  std::size_t syndromes_checked = 0;
  std::vector<SoundnessViolation> violations;  // min error weight > f(|s|), |s| < t
};

// Collects syndromes from all errors of weight <= w_max; each syndrome of
// weight below t must be producible by an error of weight <= f(weight).
SoundnessReport soundness_scan(const CssCode& css, Kind kind, std::size_t t,
                               const MonotoneF& f, std::size_t w_max,
                               unsigned cap_bits = kDefaultCosetCapBits);

// Least x with f(x) >= (d-1)/2; requires t <= d so the confinement
// hypothesis covers the pivotal path step.
std::size_t barrier_bound_from_confinement(std::size_t t, const MonotoneF& f,
                                           std::size_t d);

}  // namespace barriers

#pragma once

#include <optional>

#include "barriers/barrier.hpp"
#include "barriers/classical.hpp"
#include "barriers/f2.hpp"

namespace barriers {

// Tensor product of two classical codes: bits on an n_a x n_b grid, each
// column a copy of code a, each row a copy of code b.  Parameters
// [n_a n_b, k_a k_b, d_a d_b].
class TensorProductCode {
  public:
    TensorProductCode(ClassicalCode a, ClassicalCode b);

    const ClassicalCode& factor_a() const { return a_; }
    const ClassicalCode& factor_b() const { return b_; }
    const ClassicalCode& product() const { return product_; }

    std::size_t grid_bit(std::size_t i, std::size_t j) const {
      return i * b_.n() + j;
    }

    // la (x) lb; throws naming the factor whose input is not a codeword.
    BitVec product_logical(const BitVec& la, const BitVec& lb) const;

    enum class Orientation { RowWise, ColumnWise };

    // Strip path to outer_target (x) inner_target: replay the outer path
    // one flip at a time, filling the touched row (RowWise: outer walks
    // code a, inner fills a copy of code b) or column with the inner
    // path's flips.  Max energy is at most
    // wt(inner_target) * max_energy(outer) + max_energy(inner).
    PauliPath strip_path(const PauliPath& outer, const PauliPath& inner,
                         Orientation orientation) const;

  private:
    ClassicalCode a_, b_;
    ClassicalCode product_;
};

struct BoundLedger {
  std::size_t e_a = 0, e_b = 0;  // factor energy barriers
  std::size_t d_a = 0, d_b = 0;  // factor distances
  std::size_t lower_energy = 0;      // min(E_a, E_b)
  std::size_t lower_distance = 0;    // min(d_a, d_b)
  std::size_t upper_strip = 0;       // min(d_b E_a + E_b, d_a E_b + E_a)
  std::size_t conjectured_lower = 0; // min(d_a E_b, d_b E_a); unproven
  std::optional<std::size_t> measured;  // exact product barrier when in reach
};

// Factor quantities are computed exactly; `measure` additionally runs the
// exact search on the product when n_a n_b fits under `exact_cap_bits`.
BoundLedger bound_ledger(const TensorProductCode& code, bool measure = true,
                         unsigned enum_cap_bits = kDefaultEnumCapBits,
                         unsigned exact_cap_bits = kDefaultExactCapBits);

}  // namespace barriers

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "barriers/f2.hpp"

namespace barriers {

// Default enumeration cap: kernel-combination scans refuse to run past
// 2^kDefaultEnumCapBits states.
inline constexpr unsigned kDefaultEnumCapBits = 24;

class ClassicalCode {
  public:
    explicit ClassicalCode(BitMat H);

    const BitMat& H() const { return h_; }
    std::size_t n() const { return h_.cols(); }
    std::size_t m() const { return h_.rows(); }
    std::size_t k() const { return k_; }

    // Basis of the codeword space ker(H).
    const std::vector<BitVec>& codeword_basis() const { return kernel_; }

    // wt(H x).
    std::size_t syndrome_energy(const BitVec& x) const;

    // Minimum weight of a nonzero codeword, by enumerating the 2^k - 1
    // kernel combinations.  Throws when k = 0 or 2^k exceeds the cap.
    std::size_t distance(unsigned cap_bits = kDefaultEnumCapBits) const;
    std::size_t distance_serial(unsigned cap_bits = kDefaultEnumCapBits) const;

    ClassicalCode transpose_code() const { return ClassicalCode(h_.transpose()); }

  private:
    BitMat h_;
    std::size_t k_;
    std::vector<BitVec> kernel_;
};

// Minimum weight over nonzero GF(2) combinations of `basis`, Gray-code
// enumeration.  Shared by classical distance and quantum coset scans
// (`reject` filters combinations out of consideration, e.g. stabilizers).
// The OpenMP variant partitions the Gray sequence; both return identical
// values.
std::size_t min_weight_combination(const std::vector<BitVec>& basis,
                                   unsigned cap_bits,
                                   const std::function<bool(const BitVec&)>& reject = {});
std::size_t min_weight_combination_serial(
    const std::vector<BitVec>& basis, unsigned cap_bits,
    const std::function<bool(const BitVec&)>& reject = {});

// ---- generators ----

// periodic: L x L circulant with rows 1@{i, i+1 mod L}; open: (L-1) x L chain.
ClassicalCode repetition_code(std::size_t L, bool periodic);

// The two-region counterexample code: an L x L grid with a check on every
// grid edge, joined by a single bridging check to a length-L^2 snake chain.
// n = 2 L^2, k = 1, the only codeword is all-ones.
ClassicalCode composite_repetition(std::size_t L);

// Bit index helpers for composite_repetition supports.
std::size_t composite_grid_bit(std::size_t L, std::size_t row, std::size_t col);
std::size_t composite_snake_bit(std::size_t L, std::size_t pos);

// ---- expansion diagnostics ----

struct ExpansionSizeRecord {
  std::size_t size;            // |S|
  std::size_t min_neighbors;   // min over |S|=size of |N(S)|
  std::size_t min_unique;      // min over |S|=size of |U(S)|
};

struct ExpansionReport {
  std::size_t max_degree;      // w: max Tanner degree over variables/checks
  std::size_t scanned_max_size;
  std::vector<ExpansionSizeRecord> per_size;
};

// Exact per-size minima of |N(S)| and |U(S)| over all variable subsets S
// with |S| <= max_size (neighborhoods read from columns of H).
ExpansionReport expansion_scan(const ClassicalCode& code, std::size_t max_size,
                               unsigned cap_bits = kDefaultEnumCapBits);
ExpansionReport expansion_scan_serial(const ClassicalCode& code,
                                      std::size_t max_size,
                                      unsigned cap_bits = kDefaultEnumCapBits);

// Seeded random (col_deg, row_deg)-biregular parity-check matrix on n
// variables; used for expansion spot checks.
BitMat random_biregular(std::size_t n, std::size_t col_deg, std::size_t row_deg,
                        uint64_t seed);

}  // namespace barriers

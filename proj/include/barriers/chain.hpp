#pragma once

#include <cstddef>
#include <vector>

#include "barriers/classical.hpp"
#include "barriers/f2.hpp"

namespace barriers {

// Length-(m+1) chain complex over GF(2): spaces of dimension n_0..n_m and
// boundary maps A_1..A_m with A_j of shape n_{j-1} x n_j, satisfying
// A_{j-1} A_j = 0.  Maps past either end act as zero.
struct ChainComplex {
  std::vector<std::size_t> dims;      // n_0..n_m
  std::vector<BitMat> boundaries;     // A_1..A_m

  std::size_t length() const { return dims.size(); }
};

ChainComplex complex_from_parity(const BitMat& H);

struct ChainValidation {
  bool ok = true;
  struct Failure {
    std::size_t j;        // the product A_j * A_{j+1}
    std::size_t row, col; // a nonzero witness entry
  };
  std::vector<Failure> failures;
};

ChainValidation validate(const ChainComplex& c);

// Tensor product of complexes: level l is the direct sum over i+j=l of
// A_i (x) B_j, summands ordered by increasing i, left factor outermost.
// Signs vanish over GF(2).
ChainComplex tensor(const ChainComplex& a, const ChainComplex& b);

// n_j - rank(A_j) - rank(A_{j+1}).
std::size_t homology_rank(const ChainComplex& c, std::size_t j);

// Minimum weight over cycles in ker(A_j) not lying in Im(A_{j+1});
// coset enumeration over 2^(dim ker).
std::size_t homology_distance(const ChainComplex& c, std::size_t j,
                              unsigned cap_bits = kDefaultEnumCapBits);

}  // namespace barriers

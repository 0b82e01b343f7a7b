#include "barriers/chain.hpp"

#include <sstream>
#include <stdexcept>

namespace barriers {

ChainComplex complex_from_parity(const BitMat& H) {
  ChainComplex c;
  c.dims = {H.rows(), H.cols()};
  c.boundaries = {H};
  return c;
}

ChainValidation validate(const ChainComplex& c) {
  ChainValidation v;
  for (std::size_t j = 0; j + 1 < c.boundaries.size(); ++j) {
    BitMat prod = mat_mul(c.boundaries[j], c.boundaries[j + 1]);
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t col = 0; col < prod.cols(); ++col)
        if (prod.get(r, col)) {
          v.ok = false;
          v.failures.push_back({j + 1, r, col});
        }
  }
  return v;
}

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  const std::size_t ma = a.dims.size() - 1, mb = b.dims.size() - 1;
  const std::size_t mc = ma + mb;
  ChainComplex c;
  c.dims.assign(mc + 1, 0);
  for (std::size_t l = 0; l <= mc; ++l)
    for (std::size_t i = 0; i <= ma; ++i) {
      if (l < i || l - i > mb) continue;
      c.dims[l] += a.dims[i] * b.dims[l - i];
    }

  // Summand (i, l-i) occupies one column block at level l; its boundary
  // image splits into summands (i-1, l-i) and (i, l-i-1) at level l-1.
  for (std::size_t l = 1; l <= mc; ++l) {
    std::vector<std::pair<std::size_t, std::size_t>> src, dst;
    for (std::size_t i = 0; i <= ma; ++i) {
      if (l >= i && l - i <= mb) src.push_back({i, l - i});
      if (l - 1 >= i && l - 1 - i <= mb) dst.push_back({i, l - 1 - i});
    }
    std::vector<std::vector<std::optional<BitMat>>> blocks(
        dst.size(), std::vector<std::optional<BitMat>>(src.size()));
    for (std::size_t sc = 0; sc < src.size(); ++sc) {
      auto [i, j] = src[sc];
      if (i >= 1) {
        // partial on the left factor: A_i (x) I.
        std::size_t dr = 0;
        while (dst[dr] != std::make_pair(i - 1, j)) ++dr;
        blocks[dr][sc] = kron(a.boundaries[i - 1], BitMat::identity(b.dims[j]));
      }
      if (j >= 1) {
        std::size_t dr = 0;
        while (dst[dr] != std::make_pair(i, j - 1)) ++dr;
        blocks[dr][sc] = kron(BitMat::identity(a.dims[i]), b.boundaries[j - 1]);
      }
    }
    c.boundaries.push_back(block_matrix(blocks));
  }
  return c;
}

std::size_t homology_rank(const ChainComplex& c, std::size_t j) {
  if (j >= c.dims.size())
    throw std::out_of_range("homology_rank: index out of range");
  std::size_t r_in = (j + 1 < c.dims.size()) ? rank(c.boundaries[j]) : 0;
  std::size_t r_out = (j >= 1) ? rank(c.boundaries[j - 1]) : 0;
  // boundaries[j-1] is A_j : n_{j-1} x n_j.
  return c.dims[j] - r_out - r_in;
}

std::size_t homology_distance(const ChainComplex& c, std::size_t j,
                              unsigned cap_bits) {
  if (j >= c.dims.size())
    throw std::out_of_range("homology_distance: index out of range");
  if (homology_rank(c, j) == 0)
    throw std::runtime_error("homology_distance: trivial homology");

  std::vector<BitVec> cycles;
  if (j >= 1) {
    cycles = kernel_basis(c.boundaries[j - 1]);  // A_j x = 0
  } else {
    for (std::size_t i = 0; i < c.dims[0]; ++i)
      cycles.push_back(BitVec::unit(c.dims[0], i));
  }
  RowBasis boundaries_space;
  if (j + 1 < c.dims.size()) {
    // Im(A_{j+1}) = row space of A_{j+1}^T.
    BitMat t = c.boundaries[j].transpose();
    boundaries_space = RowBasis(t);
  }
  auto reject = [&boundaries_space](const BitVec& x) {
    return boundaries_space.contains(x);
  };
  return min_weight_combination(cycles, cap_bits, reject);
}

}  // namespace barriers

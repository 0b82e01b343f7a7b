#include "barriers/classical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace barriers {

ClassicalCode::ClassicalCode(BitMat H) : h_(std::move(H)) {
  if (h_.cols() == 0) throw std::invalid_argument("ClassicalCode: no columns");
  kernel_ = kernel_basis(h_);
  k_ = kernel_.size();
}

std::size_t ClassicalCode::syndrome_energy(const BitVec& x) const {
  return mat_vec(h_, x).weight();
}

namespace {

void check_cap(std::size_t kbits, unsigned cap_bits, const char* what) {
  if (kbits > cap_bits) {
    std::ostringstream msg;
    msg << what << ": instance too large, 2^" << kbits
        << " combinations exceed the 2^" << cap_bits << " cap";
    throw std::runtime_error(msg.str());
  }
}

// Minimum weight over the Gray-code walk of combination indices in
// [begin, end); `state` must equal the combination at index begin.
std::size_t gray_scan_min(const std::vector<BitVec>& basis, uint64_t begin,
                          uint64_t end, BitVec state,
                          const std::function<bool(const BitVec&)>& reject) {
  std::size_t best = SIZE_MAX;
  for (uint64_t i = begin; i < end; ++i) {
    if (i != begin) state ^= basis[std::countr_zero(i)];
    uint64_t g = i ^ (i >> 1);
    if (g == 0) continue;
    if (reject && reject(state)) continue;
    best = std::min(best, state.weight());
  }
  return best;
}

BitVec combination_at(const std::vector<BitVec>& basis, uint64_t index,
                      std::size_t n) {
  BitVec v(n);
  uint64_t g = index ^ (index >> 1);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if ((g >> j) & 1) v ^= basis[j];
  return v;
}

}  // namespace

std::size_t min_weight_combination_serial(
    const std::vector<BitVec>& basis, unsigned cap_bits,
    const std::function<bool(const BitVec&)>& reject) {
  if (basis.empty()) throw std::runtime_error("min_weight_combination: no codewords");
  check_cap(basis.size(), cap_bits, "min_weight_combination");
  const std::size_t n = basis[0].size();
  const uint64_t total = uint64_t(1) << basis.size();
  // Index 0 is the zero combination; the walk starts there so that the
  // Gray increments line up, and g == 0 skips it.
  return gray_scan_min(basis, 0, total, BitVec(n), reject);
}

std::size_t min_weight_combination(
    const std::vector<BitVec>& basis, unsigned cap_bits,
    const std::function<bool(const BitVec&)>& reject) {
  if (basis.empty()) throw std::runtime_error("min_weight_combination: no codewords");
  check_cap(basis.size(), cap_bits, "min_weight_combination");
  const std::size_t n = basis[0].size();
  const uint64_t total = uint64_t(1) << basis.size();
  if (total < (uint64_t(1) << 14))
    return gray_scan_min(basis, 0, total, BitVec(n), reject);

  std::size_t best = SIZE_MAX;
#pragma omp parallel
  {
#ifdef _OPENMP
    const int nt = omp_get_num_threads();
    const int tid = omp_get_thread_num();
#else
    const int nt = 1, tid = 0;
#endif
    const uint64_t chunk = (total + nt - 1) / nt;
    const uint64_t begin = std::min<uint64_t>(total, chunk * tid);
    const uint64_t end = std::min<uint64_t>(total, begin + chunk);
    std::size_t local = SIZE_MAX;
    if (begin < end)
      local = gray_scan_min(basis, begin, end, combination_at(basis, begin, n),
                            reject);
#pragma omp critical
    best = std::min(best, local);
  }
  return best;
}

std::size_t ClassicalCode::distance(unsigned cap_bits) const {
  if (k_ == 0) throw std::runtime_error("distance: code has no codewords");
  return min_weight_combination(kernel_, cap_bits);
}

std::size_t ClassicalCode::distance_serial(unsigned cap_bits) const {
  if (k_ == 0) throw std::runtime_error("distance: code has no codewords");
  return min_weight_combination_serial(kernel_, cap_bits);
}

ClassicalCode repetition_code(std::size_t L, bool periodic) {
  if (L < 2) throw std::invalid_argument("repetition_code: L must be >= 2");
  std::size_t rows = periodic ? L : L - 1;
  BitMat H(rows, L);
  for (std::size_t i = 0; i < rows; ++i) {
    H.set(i, i, true);
    H.set(i, (i + 1) % L, true);
  }
  return ClassicalCode(std::move(H));
}

std::size_t composite_grid_bit(std::size_t L, std::size_t row, std::size_t col) {
  return row * L + col;
}

std::size_t composite_snake_bit(std::size_t L, std::size_t pos) {
  return L * L + pos;
}

ClassicalCode composite_repetition(std::size_t L) {
  if (L < 2) throw std::invalid_argument("composite_repetition: L must be >= 2");
  const std::size_t n = 2 * L * L;
  const std::size_t grid_checks = 2 * L * (L - 1);
  const std::size_t snake_checks = L * L - 1;
  BitMat H(grid_checks + snake_checks + 1, n);
  std::size_t r = 0;
  // Grid region: one check per lattice edge.
  for (std::size_t row = 0; row < L; ++row)
    for (std::size_t col = 0; col + 1 < L; ++col) {
      H.set(r, composite_grid_bit(L, row, col), true);
      H.set(r, composite_grid_bit(L, row, col + 1), true);
      ++r;
    }
  for (std::size_t row = 0; row + 1 < L; ++row)
    for (std::size_t col = 0; col < L; ++col) {
      H.set(r, composite_grid_bit(L, row, col), true);
      H.set(r, composite_grid_bit(L, row + 1, col), true);
      ++r;
    }
  // Snake region: a 1D chain.
  for (std::size_t pos = 0; pos + 1 < L * L; ++pos) {
    H.set(r, composite_snake_bit(L, pos), true);
    H.set(r, composite_snake_bit(L, pos + 1), true);
    ++r;
  }
  // Single bridging check between grid cell (L-1, 0) and snake cell 0.
  H.set(r, composite_grid_bit(L, L - 1, 0), true);
  H.set(r, composite_snake_bit(L, 0), true);
  return ClassicalCode(std::move(H));
}

namespace {

struct SubsetMinima {
  std::size_t min_neighbors = SIZE_MAX;
  std::size_t min_unique = SIZE_MAX;
};

void subset_scan(const std::vector<BitVec>& col_masks, std::size_t next,
                 std::size_t remaining, BitVec once, BitVec twice,
                 SubsetMinima& acc) {
  if (remaining == 0) {
    std::size_t nb = once.weight();
    BitVec uniq = once;
    for (std::size_t w = 0; w < uniq.words().size(); ++w)
      uniq.words()[w] &= ~twice.words()[w];
    acc.min_neighbors = std::min(acc.min_neighbors, nb);
    acc.min_unique = std::min(acc.min_unique, uniq.weight());
    return;
  }
  for (std::size_t c = next; c + remaining <= col_masks.size(); ++c) {
    BitVec once2 = once, twice2 = twice;
    for (std::size_t w = 0; w < once2.words().size(); ++w) {
      twice2.words()[w] |= once2.words()[w] & col_masks[c].words()[w];
      once2.words()[w] |= col_masks[c].words()[w];
    }
    subset_scan(col_masks, c + 1, remaining - 1, std::move(once2),
                std::move(twice2), acc);
  }
}

long double binomial(std::size_t n, std::size_t s) {
  long double b = 1;
  for (std::size_t i = 0; i < s; ++i) b = b * (n - i) / (i + 1);
  return b;
}

ExpansionReport expansion_scan_impl(const ClassicalCode& code,
                                    std::size_t max_size, unsigned cap_bits,
                                    bool parallel) {
  const BitMat& H = code.H();
  const std::size_t n = code.n(), m = code.m();
  std::vector<BitVec> col_masks;
  col_masks.reserve(n);
  std::size_t w = 0;
  for (std::size_t c = 0; c < n; ++c) {
    col_masks.push_back(H.col(c));
    w = std::max(w, col_masks.back().weight());
  }
  for (std::size_t r = 0; r < m; ++r) w = std::max(w, H.row(r).weight());

  ExpansionReport report;
  report.max_degree = w;
  report.scanned_max_size = std::min(max_size, n);
  for (std::size_t s = 1; s <= report.scanned_max_size; ++s) {
    if (binomial(n, s) > (long double)(uint64_t(1) << std::min(cap_bits, 62u))) {
      std::ostringstream msg;
      msg << "expansion_scan: C(" << n << "," << s << ") exceeds the 2^"
          << cap_bits << " cap (first infeasible size " << s << ")";
      throw std::runtime_error(msg.str());
    }
    SubsetMinima overall;
    if (parallel && s >= 2) {
      std::vector<SubsetMinima> per_first(n);
#pragma omp parallel for schedule(dynamic)
      for (std::size_t f = 0; f < n; ++f) {
        if (f + s > n) continue;
        BitVec once(m), twice(m);
        once = col_masks[f];
        subset_scan(col_masks, f + 1, s - 1, once, twice, per_first[f]);
      }
      for (const auto& pm : per_first) {
        overall.min_neighbors = std::min(overall.min_neighbors, pm.min_neighbors);
        overall.min_unique = std::min(overall.min_unique, pm.min_unique);
      }
    } else {
      subset_scan(col_masks, 0, s, BitVec(m), BitVec(m), overall);
    }
    report.per_size.push_back({s, overall.min_neighbors, overall.min_unique});
  }
  return report;
}

}  // namespace

ExpansionReport expansion_scan(const ClassicalCode& code, std::size_t max_size,
                               unsigned cap_bits) {
  return expansion_scan_impl(code, max_size, cap_bits, true);
}

ExpansionReport expansion_scan_serial(const ClassicalCode& code,
                                      std::size_t max_size, unsigned cap_bits) {
  return expansion_scan_impl(code, max_size, cap_bits, false);
}

BitMat random_biregular(std::size_t n, std::size_t col_deg, std::size_t row_deg,
                        uint64_t seed) {
  if ((n * col_deg) % row_deg != 0)
    throw std::invalid_argument("random_biregular: n*col_deg not divisible by row_deg");
  const std::size_t m = n * col_deg / row_deg;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> var_sockets;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t d = 0; d < col_deg; ++d) var_sockets.push_back(v);

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::size_t> perm = var_sockets;
    std::shuffle(perm.begin(), perm.end(), rng);
    BitMat H(m, n);
    bool dup = false;
    for (std::size_t i = 0; i < perm.size() && !dup; ++i) {
      std::size_t check = i / row_deg;
      if (H.get(check, perm[i])) dup = true;
      else H.set(check, perm[i], true);
    }
    if (!dup) return H;
  }
  throw std::runtime_error("random_biregular: could not avoid parallel edges");
}

}  // namespace barriers

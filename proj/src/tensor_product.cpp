#include "barriers/tensor_product.hpp"

#include <stdexcept>

namespace barriers {

namespace {

BitMat product_parity(const BitMat& Ha, const BitMat& Hb) {
  return vstack({kron(Ha, BitMat::identity(Hb.cols())),
                 kron(BitMat::identity(Ha.cols()), Hb)});
}

}  // namespace

TensorProductCode::TensorProductCode(ClassicalCode a, ClassicalCode b)
    : a_(std::move(a)), b_(std::move(b)),
      product_(ClassicalCode(product_parity(a_.H(), b_.H()))) {}

BitVec TensorProductCode::product_logical(const BitVec& la, const BitVec& lb) const {
  if (la.size() != a_.n() || !mat_vec(a_.H(), la).is_zero())
    throw std::invalid_argument("product_logical: first input is not a codeword of factor a");
  if (lb.size() != b_.n() || !mat_vec(b_.H(), lb).is_zero())
    throw std::invalid_argument("product_logical: second input is not a codeword of factor b");
  return kron_vec(la, lb);
}

PauliPath TensorProductCode::strip_path(const PauliPath& outer,
                                        const PauliPath& inner,
                                        Orientation orientation) const {
  const bool row_wise = orientation == Orientation::RowWise;
  if (outer.n != (row_wise ? a_.n() : b_.n()))
    throw std::invalid_argument("strip_path: outer path length mismatch");
  if (inner.n != (row_wise ? b_.n() : a_.n()))
    throw std::invalid_argument("strip_path: inner path length mismatch");

  std::vector<std::size_t> flips;
  for (std::size_t line : outer.flip_sequence())
    for (std::size_t pos : inner.flip_sequence())
      flips.push_back(row_wise ? grid_bit(line, pos) : grid_bit(pos, line));
  return PauliPath::from_flips(product_.n(), flips);
}

BoundLedger bound_ledger(const TensorProductCode& code, bool measure,
                         unsigned enum_cap_bits, unsigned exact_cap_bits) {
  BoundLedger ledger;
  ledger.d_a = code.factor_a().distance(enum_cap_bits);
  ledger.d_b = code.factor_b().distance(enum_cap_bits);
  ledger.e_a = code_barrier_exact(code.factor_a(), exact_cap_bits).value;
  ledger.e_b = code_barrier_exact(code.factor_b(), exact_cap_bits).value;
  ledger.lower_energy = std::min(ledger.e_a, ledger.e_b);
  ledger.lower_distance = std::min(ledger.d_a, ledger.d_b);
  ledger.upper_strip = std::min(ledger.d_b * ledger.e_a + ledger.e_b,
                                ledger.d_a * ledger.e_b + ledger.e_a);
  ledger.conjectured_lower = std::min(ledger.d_a * ledger.e_b,
                                      ledger.d_b * ledger.e_a);
  if (measure && code.product().n() <= exact_cap_bits)
    ledger.measured = code_barrier_exact(code.product(), exact_cap_bits).value;
  return ledger;
}

}  // namespace barriers

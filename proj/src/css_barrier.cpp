#include "barriers/css_barrier.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace barriers {

EnergyFunction css_energy(const CssCode& css, Kind kind) {
  const BitMat& checks = css.checks_for(kind);
  return [checks](const BitVec& e) { return mat_vec(checks, e).weight(); };
}

namespace {

BitVec state_to_vec(uint64_t state, std::size_t n) {
  BitVec v(n);
  while (state) {
    v.set(std::countr_zero(state), true);
    state &= state - 1;
  }
  return v;
}

}  // namespace

BarrierResult code_barrier_exact(const CssCode& css, Kind kind,
                                 unsigned cap_bits) {
  if (css.k() == 0)
    throw std::runtime_error("code_barrier_exact: no nontrivial targets");
  const std::size_t n = css.n();
  ExactSweep sw = exact_sweep(energy_table(css.checks_for(kind), cap_bits), n);
  RowBasis stab(css.stabilizers_for(kind));
  const uint64_t total = uint64_t(1) << n;
  uint64_t best_state = 0;
  uint16_t best = UINT16_MAX;
  for (uint64_t s = 1; s < total; ++s) {
    if (sw.energy[s] != 0 || sw.label[s] >= best) continue;
    if (stab.contains(state_to_vec(s, n))) continue;
    best = sw.label[s];
    best_state = s;
  }
  if (best == UINT16_MAX)
    throw std::runtime_error("code_barrier_exact: no logical target found");
  BarrierResult r;
  r.value = best;
  r.witness = sw.witness_to(best_state);
  r.exact = true;
  r.target = "code-level minimum";
  return r;
}

BarrierResult operator_barrier_exact(const CssCode& css, Kind kind,
                                     const BitVec& target, unsigned cap_bits) {
  return barrier_exact(css.checks_for(kind), target, cap_bits);
}

namespace {

struct BlockDims {
  std::size_t ra, nb, nc;  // block 1 reshapes to ra x nb x nc
  std::size_t n1, n;       // block 1 length, total length
};

BlockDims axis_a_dims(const Hgp3Code& code) {
  BlockDims d;
  d.ra = code.ra;
  d.nb = code.nb;
  d.nc = code.nc;
  d.n1 = d.ra * d.nb * d.nc;
  d.n = code.css.n();
  return d;
}

// Fold the a-slices of the block-1 part of v selected by La into one
// nb x nc bit pattern.
BitVec fold_block1(const BitVec& v, const BitVec& La, const BlockDims& d) {
  BitVec sum(d.nb * d.nc);
  for (std::size_t i : La.support())
    for (std::size_t jk = 0; jk < d.nb * d.nc; ++jk)
      if (v.get(i * d.nb * d.nc + jk)) sum.flip(jk);
  return sum;
}

PauliPath slice_deform_axis_a(const Hgp3Code& code, const PauliPath& path,
                              const BitVec& La, std::size_t alpha) {
  const BlockDims d = axis_a_dims(code);
  if (path.n != d.n)
    throw std::invalid_argument("slice_deform_3d: path length mismatch");
  if (La.size() != d.ra || !mat_vec(code.da.transpose(), La).is_zero())
    throw std::invalid_argument(
        "slice_deform_3d: La is not a codeword of the transposed factor");
  if (alpha >= d.ra || !La.get(alpha))
    throw std::invalid_argument("slice_deform_3d: alpha outside support(La)");

  EnergyFunction energy = css_energy(code.css, Kind::Z);
  PauliPath out;
  out.n = d.n;
  for (const BitVec& step : path.steps) {
    BitVec folded = fold_block1(step, La, d);
    BitVec deformed(d.n);
    for (std::size_t jk : folded.support())
      deformed.set(alpha * d.nb * d.nc + jk, true);
    if (energy(deformed) > energy(step))
      throw std::logic_error("slice_deform_3d: per-step energy increased");
    if (!out.steps.empty() &&
        (deformed ^ out.steps.back()).weight() > 1)
      throw std::logic_error("slice_deform_3d: deformed step is not a single flip");
    out.steps.push_back(std::move(deformed));
  }
  return out;
}

// Qubit permutation carrying the original code onto the 3D product of
// the factors reordered so the requested axis comes first.
std::vector<std::size_t> axis_permutation(const Hgp3Code& code, SliceAxis axis) {
  const std::size_t na = code.na, nb = code.nb, nc = code.nc;
  const std::size_t ra = code.ra, rb = code.rb, rc = code.rc;
  std::vector<std::size_t> perm(code.css.n());
  std::size_t o1 = 0, o2 = ra * nb * nc, o3 = o2 + na * rb * nc;
  if (axis == SliceAxis::B) {
    // new factor order (b, a, c); new blocks: C_b V_a V_c | V_b C_a V_c | V_b V_a C_c
    std::size_t p2 = rb * na * nc, p3 = p2 + nb * ra * nc;
    for (std::size_t a = 0; a < ra; ++a)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t k = 0; k < nc; ++k)
          perm[o1 + (a * nb + j) * nc + k] = p2 + (j * ra + a) * nc + k;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t b = 0; b < rb; ++b)
        for (std::size_t k = 0; k < nc; ++k)
          perm[o2 + (i * rb + b) * nc + k] = (b * na + i) * nc + k;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t c = 0; c < rc; ++c)
          perm[o3 + (i * nb + j) * rc + c] = p3 + (j * na + i) * rc + c;
  } else {
    // new factor order (c, a, b); new blocks: C_c V_a V_b | V_c C_a V_b | V_c V_a C_b
    std::size_t p2 = rc * na * nb, p3 = p2 + nc * ra * nb;
    for (std::size_t a = 0; a < ra; ++a)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t k = 0; k < nc; ++k)
          perm[o1 + (a * nb + j) * nc + k] = p2 + (k * ra + a) * nb + j;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t b = 0; b < rb; ++b)
        for (std::size_t k = 0; k < nc; ++k)
          perm[o2 + (i * rb + b) * nc + k] = p3 + (k * na + i) * rb + b;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t c = 0; c < rc; ++c)
          perm[o3 + (i * nb + j) * rc + c] = (c * na + i) * nb + j;
  }
  return perm;
}

Hgp3Code permuted_code(const Hgp3Code& code, SliceAxis axis) {
  if (axis == SliceAxis::B)
    return hgp3(ClassicalCode(code.db), ClassicalCode(code.da),
                ClassicalCode(code.dc));
  return hgp3(ClassicalCode(code.dc), ClassicalCode(code.da),
              ClassicalCode(code.db));
}

BitVec apply_perm(const BitVec& v, const std::vector<std::size_t>& perm) {
  BitVec out(v.size());
  for (std::size_t i : v.support()) out.set(perm[i], true);
  return out;
}

}  // namespace

PauliPath slice_deform_3d(const Hgp3Code& code, const PauliPath& path,
                          const BitVec& La, std::size_t alpha, SliceAxis axis) {
  if (axis == SliceAxis::A) return slice_deform_axis_a(code, path, La, alpha);

  Hgp3Code perm_code = permuted_code(code, axis);
  std::vector<std::size_t> perm = axis_permutation(code, axis);
  PauliPath perm_path;
  perm_path.n = path.n;
  for (const BitVec& s : path.steps) perm_path.steps.push_back(apply_perm(s, perm));

  PauliPath deformed = slice_deform_axis_a(perm_code, perm_path, La, alpha);

  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  PauliPath out;
  out.n = path.n;
  for (const BitVec& s : deformed.steps) out.steps.push_back(apply_perm(s, inv));
  return out;
}

SliceChoice choose_slice_codeword(const Hgp3Code& code, const BitVec& target,
                                  SliceAxis axis) {
  if (axis != SliceAxis::A) {
    Hgp3Code perm_code = permuted_code(code, axis);
    return choose_slice_codeword(perm_code,
                                 apply_perm(target, axis_permutation(code, axis)),
                                 SliceAxis::A);
  }
  const BlockDims d = axis_a_dims(code);
  if (target.size() != d.n)
    throw std::invalid_argument("choose_slice_codeword: target length mismatch");
  std::vector<BitVec> basis = kernel_basis(code.da.transpose());
  if (basis.size() > 20)
    throw std::runtime_error("choose_slice_codeword: transpose kernel too large");
  BitVec La(d.ra);
  const uint64_t total = uint64_t(1) << basis.size();
  for (uint64_t i = 1; i < total; ++i) {
    La ^= basis[std::countr_zero(i)];
    if (!fold_block1(target, La, d).is_zero())
      return {La, La.support().front()};
  }
  throw std::runtime_error(
      "choose_slice_codeword: every codeword folds the target to zero");
}

}  // namespace barriers

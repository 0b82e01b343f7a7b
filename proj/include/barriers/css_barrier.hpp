#pragma once

#include "barriers/barrier.hpp"
#include "barriers/css.hpp"

namespace barriers {

// wt(checks * e) for errors of the given kind.
EnergyFunction css_energy(const CssCode& css, Kind kind);

// Code-level barrier: min bottleneck over all errors in
// ker(checks) \ rowspace(stabilizers), one exact sweep.
BarrierResult code_barrier_exact(const CssCode& css, Kind kind,
                                 unsigned cap_bits = kDefaultExactCapBits);

// Exact barrier of one specific operator of the given kind.
BarrierResult operator_barrier_exact(const CssCode& css, Kind kind,
                                     const BitVec& target,
                                     unsigned cap_bits = kDefaultExactCapBits);

// ---- slice deformation for Z errors on a triple product ----
//
// A Z error splits into three blocks; block 1 reshapes to an
// r_a x n_b x n_c array whose a-slice j lives on the qubits pairing
// check j of factor a with all (b, c) variable pairs.  Given a codeword
// La of the transpose of factor a with La[alpha] = 1, the deformation
// zeroes blocks 2 and 3, folds the a-slices selected by La into slice
// alpha, and zeroes the rest.  Per-step energy never increases and
// single flips stay single flips, so a path keeps being a path.

enum class SliceAxis { A, B, C };

PauliPath slice_deform_3d(const Hgp3Code& code, const PauliPath& path,
                          const BitVec& La, std::size_t alpha,
                          SliceAxis axis = SliceAxis::A);

struct SliceChoice {
  BitVec codeword;    // transpose-code codeword of the chosen factor
  std::size_t alpha;  // slice index inside its support
};

// A (codeword, alpha) pair along the given axis for which the deformed
// endpoint of a path to `target` is nonzero; such a pair always exists
// when target has a nontrivial part on the axis block.
SliceChoice choose_slice_codeword(const Hgp3Code& code, const BitVec& target,
                                  SliceAxis axis = SliceAxis::A);

}  // namespace barriers

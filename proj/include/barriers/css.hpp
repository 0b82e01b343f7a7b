#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barriers/classical.hpp"
#include "barriers/f2.hpp"

namespace barriers {

enum class Kind { Z, X };

struct QubitBlock {
  std::string name;
  std::size_t offset;
  std::size_t length;
};

struct Sparsity {
  std::size_t w_c;  // max check weight
  std::size_t w_q;  // max qubit degree
};

class CssCode {
  public:
    CssCode(BitMat hx, BitMat hz, std::optional<BitMat> meta_x = std::nullopt,
            std::optional<BitMat> meta_z = std::nullopt,
            std::vector<QubitBlock> blocks = {});

    std::size_t n() const { return hx_.cols(); }
    const BitMat& hx() const { return hx_; }
    const BitMat& hz() const { return hz_; }
    const std::optional<BitMat>& meta_x() const { return meta_x_; }
    const std::optional<BitMat>& meta_z() const { return meta_z_; }
    const std::vector<QubitBlock>& blocks() const { return blocks_; }
    Sparsity sparsity() const { return sparsity_; }

    std::size_t k() const;

    // Check matrix measuring errors of this kind (H_X for Z errors).
    const BitMat& checks_for(Kind kind) const {
      return kind == Kind::Z ? hx_ : hz_;
    }
    // Stabilizers of the same Pauli type (rows span the trivial class).
    const BitMat& stabilizers_for(Kind kind) const {
      return kind == Kind::Z ? hz_ : hx_;
    }

  private:
    BitMat hx_, hz_;
    std::optional<BitMat> meta_x_, meta_z_;
    std::vector<QubitBlock> blocks_;
    Sparsity sparsity_;
};

// Coset representatives spanning ker(checks) / rowspace(stabilizers).
std::vector<BitVec> logical_space(const CssCode& css, Kind kind);

// Min weight over ker(checks) \ rowspace(stabilizers), coset enumeration.
std::size_t quantum_distance(const CssCode& css, Kind kind,
                             unsigned cap_bits = kDefaultEnumCapBits);
std::size_t quantum_distance_serial(const CssCode& css, Kind kind,
                                    unsigned cap_bits = kDefaultEnumCapBits);

// `count` unit vectors (greedy lowest index) no nonzero combination of
// which lies in the column span of `delta`.
std::vector<BitVec> select_unit_vectors(const BitMat& delta, std::size_t count);

// ---- hypergraph products ----

struct HgpPrediction {
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> d_x, d_z;
};

CssCode hgp2(const ClassicalCode& a, const ClassicalCode& b);

struct Hgp3Code {
  CssCode css;
  BitMat da, db, dc;
  std::size_t na, nb, nc;  // factor lengths
  std::size_t ra, rb, rc;  // factor check counts
};

Hgp3Code hgp3(const ClassicalCode& a, const ClassicalCode& b,
              const ClassicalCode& c);

struct Hgp4Code {
  CssCode css;
  BitMat da, db, dc, dd;
  std::size_t na, nb, nc, nd;
  std::size_t ra, rb, rc, rd;
};

Hgp4Code hgp4(const ClassicalCode& a, const ClassicalCode& b,
              const ClassicalCode& c, const ClassicalCode& d);

// Predicted parameters from factor data; distance entries absent when a
// factor distance is not supplied.
HgpPrediction predict_params3(const ClassicalCode& a, const ClassicalCode& b,
                              const ClassicalCode& c,
                              const std::vector<std::optional<std::size_t>>& dists = {},
                              const std::vector<std::optional<std::size_t>>& dists_t = {});
HgpPrediction predict_params4(const ClassicalCode& a, const ClassicalCode& b,
                              const ClassicalCode& c, const ClassicalCode& d,
                              const std::vector<std::optional<std::size_t>>& dists = {},
                              const std::vector<std::optional<std::size_t>>& dists_t = {});

// ---- canonical logical operators ----

struct CanonicalOperator {
  std::size_t family;               // 1-based family index
  std::vector<std::size_t> labels;  // (i, j, k[, l])
  BitVec op;
};

struct CanonicalLogicalSet {
  Kind kind;
  int dim;  // 3 or 4
  std::vector<CanonicalOperator> operators;
};

CanonicalLogicalSet canonical_z_3d(const Hgp3Code& code);
CanonicalLogicalSet canonical_x_3d(const Hgp3Code& code);
CanonicalLogicalSet canonical_z_4d(const Hgp4Code& code);
CanonicalLogicalSet canonical_x_4d(const Hgp4Code& code);

}  // namespace barriers

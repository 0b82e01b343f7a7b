#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "barriers/chain.hpp"
#include "barriers/css.hpp"

using namespace barriers;

namespace {

bool is_zero(const BitMat& M) {
  for (std::size_t r = 0; r < M.rows(); ++r)
    if (!M.row(r).is_zero()) return false;
  return true;
}

ClassicalCode random_code(std::mt19937_64& rng, std::size_t max_dim) {
  std::size_t r = 1 + rng() % max_dim, c = 2 + rng() % (max_dim - 1);
  BitMat H(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      H.set(i, j, rng() & 1);
  return ClassicalCode(H);
}

}  // namespace

TEST_CASE("css constructor rejects anticommuting checks") {
  BitMat hx = BitMat::from_rows({"11"});
  BitMat hz = BitMat::from_rows({"10"});
  CHECK_THROWS(CssCode(hx, hz));
  CHECK_NOTHROW(CssCode(hx, BitMat::from_rows({"11"})));
}

TEST_CASE("toric code from hgp2 of cyclic repetition") {
  for (std::size_t L : {2, 3}) {
    ClassicalCode rep = repetition_code(L, true);
    CssCode toric = hgp2(rep, rep);
    CHECK(toric.n() == 2 * L * L);
    CHECK(toric.k() == 2);
    CHECK(quantum_distance(toric, Kind::Z) == L);
    CHECK(quantum_distance(toric, Kind::X) == L);
    CHECK(quantum_distance_serial(toric, Kind::Z) == L);
    REQUIRE(toric.blocks().size() == 2);
    CHECK(toric.blocks()[0].name == "VV");
    CHECK(toric.blocks()[0].length == L * L);
    CHECK(logical_space(toric, Kind::Z).size() == 2);
  }
}

TEST_CASE("surface code 5 1 2 from open repetition") {
  ClassicalCode rep = repetition_code(2, false);
  CssCode code = hgp2(rep, rep);
  CHECK(code.n() == 5);
  CHECK(code.k() == 1);
  CHECK(quantum_distance(code, Kind::Z) == 2);
  CHECK(quantum_distance(code, Kind::X) == 2);
}

TEST_CASE("select unit vectors avoids the column span") {
  // columns span {e0+e1}: greedy must take units 0 and 2, skipping 1
  BitMat delta = BitMat::from_rows({"1", "1", "0"});  // one column (1,1,0)
  auto units = select_unit_vectors(delta, 2);
  REQUIRE(units.size() == 2);
  CHECK(units[0] == BitVec::unit(3, 0));
  CHECK(units[1] == BitVec::unit(3, 2));
  RowBasis combined(delta.transpose());
  for (const auto& u : units) CHECK(combined.add(u));
  CHECK_THROWS(select_unit_vectors(BitMat::identity(3), 1));
}

TEST_CASE("3d product of cyclic L=2 matches predictions") {
  ClassicalCode rep = repetition_code(2, true);
  Hgp3Code code = hgp3(rep, rep, rep);
  CHECK(code.css.n() == 24);
  CHECK(code.css.k() == 3);
  REQUIRE(code.css.meta_x().has_value());
  CHECK(is_zero(mat_mul(*code.css.meta_x(), code.css.hx())));
  CHECK(is_zero(mat_mul(code.css.hx(), code.css.hz().transpose())));

  HgpPrediction p = predict_params3(rep, rep, rep, {2, 2, 2}, {2, 2, 2});
  CHECK(p.n == 24);
  CHECK(p.k == 3);
  REQUIRE(p.d_z.has_value());
  REQUIRE(p.d_x.has_value());
  CHECK(*p.d_z == 4);
  CHECK(*p.d_x == 2);
  CHECK(quantum_distance(code.css, Kind::Z) == 4);
  CHECK(quantum_distance(code.css, Kind::X) == 2);

  REQUIRE(code.css.blocks().size() == 3);
  CHECK(code.css.blocks()[0].name == "CVV");
  CHECK(code.css.blocks()[2].offset == 16);
}

TEST_CASE("4d product of cyclic L=2 matches predictions") {
  ClassicalCode rep = repetition_code(2, true);
  Hgp4Code code = hgp4(rep, rep, rep, rep);
  CHECK(code.css.n() == 96);
  CHECK(code.css.k() == 6);
  REQUIRE(code.css.meta_x().has_value());
  REQUIRE(code.css.meta_z().has_value());
  CHECK(is_zero(mat_mul(*code.css.meta_x(), code.css.hx())));
  CHECK(is_zero(mat_mul(*code.css.meta_z(), code.css.hz())));

  HgpPrediction p = predict_params4(rep, rep, rep, rep, {2, 2, 2, 2},
                                    {2, 2, 2, 2});
  CHECK(p.n == 96);
  CHECK(p.k == 6);
  CHECK(*p.d_z == 4);
  CHECK(*p.d_x == 4);
  CHECK(code.css.blocks().size() == 6);
}

TEST_CASE("product identities on random factors") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    ClassicalCode a = random_code(rng, 4), b = random_code(rng, 4),
                  c = random_code(rng, 3), d = random_code(rng, 3);
    CssCode two = hgp2(a, b);
    CHECK(is_zero(mat_mul(two.hx(), two.hz().transpose())));
    Hgp3Code three = hgp3(a, b, c);
    CHECK(is_zero(mat_mul(three.css.hx(), three.css.hz().transpose())));
    CHECK(is_zero(mat_mul(*three.css.meta_x(), three.css.hx())));
    Hgp4Code four = hgp4(a, b, c, d);
    CHECK(is_zero(mat_mul(four.css.hx(), four.css.hz().transpose())));
    CHECK(is_zero(mat_mul(*four.css.meta_x(), four.css.hx())));
    CHECK(is_zero(mat_mul(*four.css.meta_z(), four.css.hz())));
    // parameter predictions agree with the built codes
    CHECK(predict_params3(a, b, c).n == three.css.n());
    CHECK(predict_params3(a, b, c).k == three.css.k());
    CHECK(predict_params4(a, b, c, d).n == four.css.n());
    CHECK(predict_params4(a, b, c, d).k == four.css.k());
  }
}

TEST_CASE("canonical logical sets for the 3d product") {
  ClassicalCode rep = repetition_code(2, true);
  Hgp3Code code = hgp3(rep, rep, rep);
  CanonicalLogicalSet zs = canonical_z_3d(code);
  CanonicalLogicalSet xs = canonical_x_3d(code);
  REQUIRE(zs.operators.size() == 3);
  REQUIRE(xs.operators.size() == 3);

  RowBasis zspan(code.css.hz());
  for (const auto& op : zs.operators) {
    CHECK(mat_vec(code.css.hx(), op.op).is_zero());
    CHECK(zspan.add(op.op));  // independent beyond stabilizers
    CHECK(op.op.weight() == 4);
  }
  RowBasis xspan(code.css.hx());
  for (const auto& op : xs.operators) {
    CHECK(mat_vec(code.css.hz(), op.op).is_zero());
    CHECK(xspan.add(op.op));
    CHECK(op.op.weight() == 2);
  }
  // pairing matrix between the sets is full rank, so they hit all classes
  BitMat pairing(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      pairing.set(i, j, zs.operators[i].op.dot(xs.operators[j].op));
  CHECK(rank(pairing) == 3);
}

TEST_CASE("canonical logical sets for the 4d product") {
  ClassicalCode rep = repetition_code(2, true);
  Hgp4Code code = hgp4(rep, rep, rep, rep);
  CanonicalLogicalSet zs = canonical_z_4d(code);
  CanonicalLogicalSet xs = canonical_x_4d(code);
  REQUIRE(zs.operators.size() == 6);
  REQUIRE(xs.operators.size() == 6);
  for (const auto& op : zs.operators) {
    CHECK(mat_vec(code.css.hx(), op.op).is_zero());
    CHECK(op.op.weight() == 4);
  }
  for (const auto& op : xs.operators)
    CHECK(mat_vec(code.css.hz(), op.op).is_zero());
}

TEST_CASE("sparsity summary") {
  ClassicalCode rep = repetition_code(2, true);
  Hgp3Code code = hgp3(rep, rep, rep);
  Sparsity s = code.css.sparsity();
  CHECK(s.w_c >= 3);
  CHECK(s.w_q >= 3);
  CHECK(s.w_c <= 8);
  CHECK(s.w_q <= 8);
}

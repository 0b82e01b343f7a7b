#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "barriers/chain.hpp"
#include "barriers/classical.hpp"

using namespace barriers;

namespace {

BitMat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  BitMat M(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      M.set(i, j, rng() & 1);
  return M;
}

}  // namespace

TEST_CASE("complex from parity matrix") {
  BitMat H = repetition_code(3, true).H();
  ChainComplex c = complex_from_parity(H);
  REQUIRE(c.length() == 2);
  CHECK(c.dims[0] == 3);
  CHECK(c.dims[1] == 3);
  CHECK(validate(c).ok);
  CHECK(homology_rank(c, 0) == 1);  // k of the transpose code
  CHECK(homology_rank(c, 1) == 1);  // k of the code
  ChainComplex open = complex_from_parity(repetition_code(3, false).H());
  CHECK(homology_rank(open, 0) == 0);
}

TEST_CASE("validate reports a witness entry") {
  ChainComplex bad;
  bad.dims = {1, 1, 1};
  bad.boundaries = {BitMat::from_rows({"1"}), BitMat::from_rows({"1"})};
  ChainValidation v = validate(bad);
  CHECK_FALSE(v.ok);
  REQUIRE(v.failures.size() == 1);
  CHECK(v.failures[0].j == 1);  // the offending product is A_1 * A_2
}

TEST_CASE("tensor of complexes is a complex with kunneth ranks") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    ChainComplex a = complex_from_parity(
        random_mat(rng, 1 + rng() % 3, 1 + rng() % 4));
    ChainComplex b = complex_from_parity(
        random_mat(rng, 1 + rng() % 3, 1 + rng() % 4));
    ChainComplex t = tensor(a, b);
    CHECK(validate(t).ok);
    REQUIRE(t.length() == 3);
    // dims: level l = sum over i+j=l of n_i m_j
    CHECK(t.dims[0] == a.dims[0] * b.dims[0]);
    CHECK(t.dims[1] == a.dims[0] * b.dims[1] + a.dims[1] * b.dims[0]);
    CHECK(t.dims[2] == a.dims[1] * b.dims[1]);
    for (std::size_t l = 0; l < 3; ++l) {
      std::size_t conv = 0;
      for (std::size_t i = 0; i <= l && i < 2; ++i)
        if (l - i < 2)
          conv += homology_rank(a, i) * homology_rank(b, l - i);
      CHECK(homology_rank(t, l) == conv);
    }
  }
}

TEST_CASE("toric code distance from a product complex") {
  for (std::size_t L : {2, 3}) {
    ChainComplex rep = complex_from_parity(repetition_code(L, true).H());
    ChainComplex t = tensor(rep, rep);
    CHECK(homology_rank(t, 1) == 2);
    CHECK(homology_distance(t, 1) == L);
  }
}

TEST_CASE("iterated products stay complexes") {
  ChainComplex rep = complex_from_parity(repetition_code(2, true).H());
  ChainComplex t4 = tensor(tensor(rep, rep), tensor(rep, rep));
  REQUIRE(t4.length() == 5);
  CHECK(validate(t4).ok);
  CHECK(t4.dims[2] == 96);  // middle level of the 4-fold L=2 product
  CHECK(homology_rank(t4, 2) == 6);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "barriers/f2.hpp"

using namespace barriers;

namespace {

BitMat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  BitMat M(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      M.set(i, j, rng() & 1);
  return M;
}

// Row-span size by enumerating all 2^rows combinations; rank = log2.
std::size_t rank_oracle(const BitMat& M) {
  std::set<std::vector<uint64_t>> span;
  for (uint64_t mask = 0; mask < (uint64_t(1) << M.rows()); ++mask) {
    BitVec v(M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
      if ((mask >> i) & 1) v ^= M.row(i);
    span.insert(v.words());
  }
  std::size_t r = 0;
  while ((std::size_t(1) << r) < span.size()) ++r;
  REQUIRE((std::size_t(1) << r) == span.size());
  return r;
}

}  // namespace

TEST_CASE("bitvec basics") {
  BitVec v(70);
  v.flip(0);
  v.flip(69);
  CHECK(v.weight() == 2);
  CHECK(v.get(69));
  CHECK(v.support() == std::vector<std::size_t>{0, 69});
  v ^= BitVec::unit(70, 0);
  CHECK(v.weight() == 1);
  CHECK_FALSE(v.is_zero());
  CHECK(BitVec(70).is_zero());

  BitVec w = BitVec::from_string("0110");
  CHECK(w.size() == 4);
  CHECK(w.to_string() == "0110");
  CHECK(BitVec::ones(5).weight() == 5);
  CHECK(BitVec(4, {0, 1, 0, 1}) == BitVec::from_string("0101"));
}

TEST_CASE("dot and ordering") {
  BitVec a = BitVec::from_string("1101");
  BitVec b = BitVec::from_string("1011");
  CHECK(a.dot(b) == ((1 + 0 + 0 + 1) % 2 == 1));
  CHECK(BitVec::from_string("0001") < BitVec::from_string("1000"));
}

TEST_CASE("rank, kernel, solve against brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 8;
    BitMat M = random_mat(rng, r, c);
    std::size_t rk = rank(M);
    CHECK(rk == rank_oracle(M));

    auto ker = kernel_basis(M);
    CHECK(ker.size() == c - rk);
    for (const auto& v : ker) CHECK(mat_vec(M, v).is_zero());
    // kernel vectors are independent
    RowBasis basis;
    for (const auto& v : ker) CHECK(basis.add(v));

    // solve on a vector known to be consistent
    BitVec x = random_mat(rng, 1, c).row(0);
    BitVec b = mat_vec(M, x);
    auto sol = solve(M, b);
    REQUIRE(sol.has_value());
    CHECK(mat_vec(M, *sol) == b);
  }
}

TEST_CASE("solve detects inconsistency") {
  BitMat M = BitMat::from_rows({"10", "10"});
  CHECK_FALSE(solve(M, BitVec::from_string("10")).has_value());
  CHECK(solve(M, BitVec::from_string("11")).has_value());
}

TEST_CASE("mat_mul and transpose") {
  std::mt19937_64 rng(5);
  BitMat A = random_mat(rng, 4, 6), B = random_mat(rng, 6, 3);
  BitMat C = mat_mul(A, B);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      bool sum = false;
      for (std::size_t k = 0; k < 6; ++k) sum ^= A.get(i, k) && B.get(k, j);
      CHECK(C.get(i, j) == sum);
    }
  CHECK(A.transpose().transpose() == A);
}

TEST_CASE("kron entry convention") {
  std::mt19937_64 rng(7);
  BitMat A = random_mat(rng, 2, 3), B = random_mat(rng, 3, 2);
  BitMat K = kron(A, B);
  REQUIRE(K.rows() == 6);
  REQUIRE(K.cols() == 6);
  for (std::size_t r1 = 0; r1 < 2; ++r1)
    for (std::size_t r2 = 0; r2 < 3; ++r2)
      for (std::size_t c1 = 0; c1 < 3; ++c1)
        for (std::size_t c2 = 0; c2 < 2; ++c2)
          CHECK(K.get(r1 * 3 + r2, c1 * 2 + c2) ==
                (A.get(r1, c1) && B.get(r2, c2)));

  BitVec a = BitVec::from_string("101"), b = BitVec::from_string("01");
  BitVec kv = kron_vec(a, b);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(kv.get(i * 2 + j) == (a.get(i) && b.get(j)));
}

TEST_CASE("stacking and block assembly") {
  BitMat A = BitMat::from_rows({"11"});
  BitMat B = BitMat::from_rows({"10", "01"});
  BitMat V = vstack({A, B});
  CHECK(V.rows() == 3);
  CHECK(V.row(0) == A.row(0));
  CHECK(V.row(2) == B.row(1));
  BitMat H = hstack({B, B});
  CHECK(H.cols() == 4);
  CHECK(H.row(0) == BitVec::from_string("1010"));

  // zero blocks get their shape from neighbours
  BitMat blockm = block_matrix({{A, std::nullopt}, {std::nullopt, B}});
  CHECK(blockm.rows() == 3);
  CHECK(blockm.cols() == 4);
  CHECK(blockm.row(0) == BitVec::from_string("1100"));
  CHECK(blockm.row(1) == BitVec::from_string("0010"));
}

TEST_CASE("row basis membership") {
  BitMat M = BitMat::from_rows({"110", "011"});
  RowBasis basis(M);
  CHECK(basis.rank() == 2);
  CHECK(basis.contains(BitVec::from_string("101")));
  CHECK_FALSE(basis.contains(BitVec::from_string("100")));
  CHECK_FALSE(basis.add(BitVec::from_string("101")));
  CHECK(basis.add(BitVec::from_string("100")));
  CHECK(basis.rank() == 3);
}

TEST_CASE("tensor3 reshape and mode product") {
  std::mt19937_64 rng(11);
  BitMat A = random_mat(rng, 2, 2), B = random_mat(rng, 3, 3),
         C = random_mat(rng, 2, 2);
  BitVec v = random_mat(rng, 1, 12).row(0);
  Tensor3 t = reshape3(v, 2, 3, 2);
  CHECK(flatten(t) == v);
  CHECK(t.get(1, 2, 1) == v.get((1 * 3 + 2) * 2 + 1));
  BitVec lhs = flatten(mode_product(A, B, C, t));
  BitVec rhs = mat_vec(kron(kron(A, B), C), v);
  CHECK(lhs == rhs);
}

TEST_CASE("pcm text round trip") {
  BitMat M = BitMat::from_rows({"1010", "0111"});
  std::stringstream ss;
  write_pcm(ss, M);
  std::stringstream in("# comment\n\n" + ss.str());
  CHECK(read_pcm(in) == M);
}

TEST_CASE("zero dimension edge cases") {
  BitMat empty(0, 3);
  CHECK(rank(empty) == 0);
  CHECK(kernel_basis(empty).size() == 3);
  BitMat K = kron(empty, BitMat::identity(2));
  CHECK(K.rows() == 0);
  CHECK(K.cols() == 6);
}

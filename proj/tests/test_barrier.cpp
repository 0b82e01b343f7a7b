#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <queue>
#include <random>

#include "barriers/barrier.hpp"
#include "barriers/verify.hpp"

using namespace barriers;

namespace {

// Independent oracle: the barrier to `target` is the least threshold T
// such that target is reachable from 0 through states of energy <= T.
std::size_t barrier_oracle(const std::vector<uint16_t>& energy, std::size_t n,
                           uint64_t target) {
  std::size_t lo = std::max<std::size_t>(energy[0], energy[target]);
  for (std::size_t T = lo;; ++T) {
    std::vector<char> seen(energy.size(), 0);
    std::queue<uint64_t> q;
    if (energy[0] > T) continue;
    seen[0] = 1;
    q.push(0);
    while (!q.empty()) {
      uint64_t s = q.front();
      q.pop();
      if (s == target) return T;
      for (std::size_t i = 0; i < n; ++i) {
        uint64_t t = s ^ (uint64_t(1) << i);
        if (!seen[t] && energy[t] <= T) {
          seen[t] = 1;
          q.push(t);
        }
      }
    }
  }
}

BitMat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  BitMat M(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      M.set(i, j, rng() & 1);
  return M;
}

}  // namespace

TEST_CASE("paths and flip sequences") {
  PauliPath p = PauliPath::from_flips(4, {0, 2, 0});
  REQUIRE(p.steps.size() == 4);
  CHECK(p.steps.back() == BitVec::from_string("0010"));
  CHECK(p.flip_sequence() == std::vector<std::size_t>{0, 2, 0});
  CHECK(verify_path(p, BitVec::from_string("0010")));
  CHECK_FALSE(verify_path(p, BitVec::from_string("1000")));
}

TEST_CASE("energy table matches direct evaluation") {
  std::mt19937_64 rng(41);
  BitMat H = random_mat(rng, 5, 8);
  auto table = energy_table(H);
  REQUIRE(table.size() == 256u);
  for (uint64_t mask = 0; mask < 256; ++mask) {
    BitVec x(8);
    for (std::size_t i = 0; i < 8; ++i)
      if ((mask >> i) & 1) x.flip(i);
    CHECK(table[mask] == mat_vec(H, x).weight());
  }
}

TEST_CASE("exact sweep labels match the threshold oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    std::size_t n = 6 + rng() % 4;
    BitMat H = random_mat(rng, 3 + rng() % 4, n);
    auto table = energy_table(H);
    ExactSweep sweep = exact_sweep(table, n);
    for (uint64_t target = 0; target < table.size(); target += 1 + rng() % 7) {
      CHECK(sweep.label[target] == barrier_oracle(table, n, target));
      PauliPath w = sweep.witness_to(target);
      BitVec tv(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((target >> i) & 1) tv.flip(i);
      CHECK(verify_path(w, tv));
      CHECK(w.max_energy(energy_of_matrix(H)) == sweep.label[target]);
    }
  }
}

TEST_CASE("barrier exact refuses oversized instances") {
  BitMat H = BitMat::zero(1, 30);
  CHECK_THROWS(barrier_exact(H, BitVec(30), 8));
}

TEST_CASE("cyclic repetition code barrier is 2") {
  for (std::size_t L : {3, 4, 5}) {
    BarrierResult r = code_barrier_exact(repetition_code(L, true));
    CHECK(r.value == 2);
    CHECK(r.exact);
    CHECK(verify_path(r.witness, BitVec::ones(L)));
  }
  // open chain: one end flip costs a single violated check
  CHECK(code_barrier_exact(repetition_code(4, false)).value == 1);
}

TEST_CASE("best first never undercuts the exact barrier") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    std::size_t n = 8 + rng() % 4;
    BitMat H = random_mat(rng, 4, n);
    BitVec target = random_mat(rng, 1, n).row(0);
    BarrierResult exact = barrier_exact(H, target);
    BestFirstConfig cfg;
    cfg.seed = rng();
    cfg.heuristic_weight = 1.0;
    BarrierResult est = barrier_best_first(energy_of_matrix(H), n, target, cfg);
    CHECK(est.value >= exact.value);
    CHECK_FALSE(est.exact);
    CHECK(verify_path(est.witness, target));
    CHECK(est.witness.max_energy(energy_of_matrix(H)) == est.value);
  }
}

TEST_CASE("best first with full frontier finds the optimum on small cubes") {
  std::mt19937_64 rng(53);
  BitMat H = random_mat(rng, 4, 9);
  BitVec target = random_mat(rng, 1, 9).row(0);
  BestFirstConfig cfg;
  cfg.frontier_cap = 1 << 12;
  BarrierResult est = barrier_best_first(energy_of_matrix(H), 9, target, cfg);
  CHECK(est.value == barrier_exact(H, target).value);
}

TEST_CASE("random path generator yields valid paths") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    BitVec target = random_mat(rng, 1, 12).row(0);
    PauliPath p = random_path_to(target, rng(), 4);
    CHECK(verify_path(p, target));
    CHECK(p.steps.size() == target.weight() + 2 * 4 + 1);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "barriers/confinement.hpp"
#include "barriers/css.hpp"

using namespace barriers;

namespace {

// Reduced weight by scanning every candidate error with the same syndrome.
std::size_t reduced_oracle(const BitMat& H, const BitVec& e) {
  BitVec syn = mat_vec(H, e);
  std::size_t n = H.cols(), best = e.weight();
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    BitVec x(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) x.flip(i);
    if (mat_vec(H, x) == syn) best = std::min(best, x.weight());
  }
  return best;
}

}  // namespace

TEST_CASE("monotone f parsing and exact comparison") {
  MonotoneF f = MonotoneF::parse("x^3/4");
  CHECK(f.num == 1);
  CHECK(f.power == 3);
  CHECK(f.den == 4);
  CHECK(f.at_least(2, 2));        // 8/4 = 2
  CHECK_FALSE(f.at_least(2, 3));  // 8/4 < 3
  CHECK(f.value(2) == doctest::Approx(2.0));

  CHECK(MonotoneF::parse("x").at_least(3, 3));
  CHECK(MonotoneF::parse("2*x").at_least(3, 6));
  CHECK_FALSE(MonotoneF::parse("3*x^2/5").at_least(2, 3));  // 12/5 < 3
  CHECK(MonotoneF::parse("3*x^2/5").at_least(2, 2));
  CHECK(MonotoneF::parse(" x^2 ").power == 2);
  CHECK_THROWS(MonotoneF::parse("y^2"));
  CHECK_THROWS(MonotoneF::parse("x^"));
  CHECK(MonotoneF::parse("x^3/4").to_string() == "x^3/4");
}

TEST_CASE("reduced weight matches the brute force coset minimum") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t r = 2 + rng() % 3, n = 5 + rng() % 5;
    BitMat H(r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j)
        H.set(i, j, rng() & 1);
    BitVec e(n);
    for (std::size_t j = 0; j < n; ++j)
      if (rng() & 1) e.flip(j);
    CHECK(reduced_weight(H, e) == reduced_oracle(H, e));
  }
}

TEST_CASE("reduced weight for css codes uses the kind's checks") {
  ClassicalCode rep = repetition_code(2, true);
  CssCode toric = hgp2(rep, rep);
  // a full Z logical has zero syndrome, so its reduced weight is 0
  BitVec logical = logical_space(toric, Kind::Z).front();
  CHECK(reduced_weight(toric, logical, Kind::Z) == 0);
  BitVec single = BitVec::unit(toric.n(), 0);
  CHECK(reduced_weight(toric, single, Kind::Z) == 1);
}

TEST_CASE("confinement scan on the 3d product, serial and parallel") {
  ClassicalCode rep = repetition_code(2, true);
  Hgp3Code code = hgp3(rep, rep, rep);
  MonotoneF f = MonotoneF::parse("x^3/4");
  ConfinementReport par = confinement_scan(code.css, Kind::Z, 3, f, 2);
  ConfinementReport ser = confinement_scan_serial(code.css, Kind::Z, 3, f, 2);
  CHECK(par.violations.empty());
  CHECK(ser.violations.empty());
  REQUIRE(par.points.size() == ser.points.size());
  for (std::size_t i = 0; i < par.points.size(); ++i) {
    CHECK(par.points[i].syndrome_weight == ser.points[i].syndrome_weight);
    CHECK(par.points[i].max_reduced_weight == ser.points[i].max_reduced_weight);
  }
}

TEST_CASE("composite code violates linear confinement") {
  CssCode quantum =
      hgp2(composite_repetition(2), ClassicalCode(BitMat(0, 1)));
  // half the snake: long error, single violated check
  BitVec e(quantum.n());
  for (std::size_t pos = 0; pos < 4; ++pos)
    e.flip(composite_snake_bit(2, pos));
  BitVec syn = mat_vec(quantum.checks_for(Kind::Z), e);
  CHECK(syn.weight() <= 2);
  CHECK(reduced_weight(quantum, e, Kind::Z) >= 4);

  ConfinementReport rep =
      confinement_scan(quantum, Kind::Z, 4, MonotoneF::parse("x"), 4);
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("soundness scan finds no gaps on the repetition code") {
  ClassicalCode rep = repetition_code(5, true);
  CssCode wrapped(rep.H(), BitMat(0, rep.n()));
  SoundnessReport sr =
      soundness_scan(wrapped, Kind::Z, 4, MonotoneF::parse("x"), 3);
  CHECK(sr.violations.empty());
  CHECK(sr.syndromes_checked > 0);
}

TEST_CASE("barrier bound arithmetic") {
  CHECK(barrier_bound_from_confinement(3, MonotoneF::parse("x^3/4"), 9) == 3);
  CHECK(barrier_bound_from_confinement(4, MonotoneF::parse("x^2/4"), 9) == 4);
  CHECK(barrier_bound_from_confinement(5, MonotoneF::parse("x"), 11) == 5);
  CHECK_THROWS(barrier_bound_from_confinement(10, MonotoneF::parse("x"), 9));
}

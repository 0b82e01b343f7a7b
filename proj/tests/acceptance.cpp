// End-to-end acceptance checks, one line of output per criterion.
// Exits nonzero when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "barriers/chain.hpp"
#include "barriers/confinement.hpp"
#include "barriers/css.hpp"
#include "barriers/css_barrier.hpp"
#include "barriers/tensor_product.hpp"
#include "barriers/verify.hpp"

using namespace barriers;

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<std::string()>& body) {
  try {
    std::string detail = body();
    std::printf("criterion %2d  pass  %-24s %s\n", number, name.c_str(),
                detail.c_str());
  } catch (const std::exception& ex) {
    ++failures;
    std::printf("criterion %2d  FAIL  %-24s %s\n", number, name.c_str(),
                ex.what());
  }
  std::fflush(stdout);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("check failed: " + what);
}

bool is_zero(const BitMat& M) {
  for (std::size_t r = 0; r < M.rows(); ++r)
    if (!M.row(r).is_zero()) return false;
  return true;
}

ClassicalCode random_code(std::mt19937_64& rng, std::size_t max_dim) {
  std::size_t r = 1 + rng() % max_dim;
  std::size_t c = 2 + rng() % (max_dim - 1);
  BitMat H(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      H.set(i, j, rng() & 1);
  return ClassicalCode(H);
}

// 1. product constructions satisfy every orthogonality identity exactly
std::string check_identities() {
  std::mt19937_64 rng(7);
  for (int tuple = 0; tuple < 20; ++tuple) {
    ClassicalCode a = random_code(rng, 4), b = random_code(rng, 4),
                  c = random_code(rng, 3), d = random_code(rng, 3);
    CssCode two = hgp2(a, b);
    require(is_zero(mat_mul(two.hx(), two.hz().transpose())), "hgp2 identity");
    Hgp3Code three = hgp3(a, b, c);
    require(is_zero(mat_mul(three.css.hx(), three.css.hz().transpose())),
            "hgp3 commuting checks");
    require(is_zero(mat_mul(*three.css.meta_x(), three.css.hx())),
            "hgp3 meta annihilates checks");
    Hgp4Code four = hgp4(a, b, c, d);
    require(is_zero(mat_mul(four.css.hx(), four.css.hz().transpose())),
            "hgp4 commuting checks");
    require(is_zero(mat_mul(*four.css.meta_x(), four.css.hx())),
            "hgp4 X meta");
    require(is_zero(mat_mul(*four.css.meta_z(), four.css.hz())),
            "hgp4 Z meta");
    // the full differential chains compose to zero
    ChainComplex ca = complex_from_parity(a.H()), cb = complex_from_parity(b.H()),
                 cc = complex_from_parity(c.H()), cd = complex_from_parity(d.H());
    require(validate(tensor(tensor(ca, cb), cc)).ok, "3-fold chain");
    require(validate(tensor(tensor(ca, cb), tensor(cc, cd))).ok,
            "4-fold chain");
  }
  return "20 random factor tuples";
}

// 2. parameter formulas at L = 2
std::string check_parameters() {
  ClassicalCode rep = repetition_code(2, true);
  Hgp3Code three = hgp3(rep, rep, rep);
  require(three.css.n() == 24, "3d n = 24");
  require(three.css.k() == 3, "3d k = 3");
  require(quantum_distance(three.css, Kind::Z) == 4, "3d d_Z = 4");
  require(quantum_distance(three.css, Kind::X) == 2, "3d d_X = 2");
  HgpPrediction p3 = predict_params3(rep, rep, rep, {2, 2, 2}, {2, 2, 2});
  require(p3.n == 24 && p3.k == 3 && *p3.d_z == 4 && *p3.d_x == 2,
          "3d prediction");

  Hgp4Code four = hgp4(rep, rep, rep, rep);
  require(four.css.n() == 96, "4d n = 96");
  require(four.css.k() == 6, "4d k = 6 by rank");
  ChainComplex c2 = complex_from_parity(rep.H());
  ChainComplex t4 = tensor(tensor(c2, c2), tensor(c2, c2));
  require(homology_rank(t4, 2) == 6, "4d k = 6 by homology");
  HgpPrediction p4 = predict_params4(rep, rep, rep, rep, {2, 2, 2, 2},
                                     {2, 2, 2, 2});
  require(p4.n == 96 && p4.k == 6, "4d prediction");
  return "[[24,3,(4,2)]] and n=96,k=6 confirmed";
}

// 3. homology of products is the convolution of factor homologies
std::string check_kunneth() {
  std::mt19937_64 rng(11);
  for (int pair = 0; pair < 20; ++pair) {
    std::size_t ra = 1 + rng() % 3, na = 1 + rng() % 4;
    std::size_t rb = 1 + rng() % 3, nb = 1 + rng() % 4;
    BitMat A(ra, na), B(rb, nb);
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < na; ++j) A.set(i, j, rng() & 1);
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < nb; ++j) B.set(i, j, rng() & 1);
    ChainComplex ca = complex_from_parity(A), cb = complex_from_parity(B);
    ChainComplex t = tensor(ca, cb);
    for (std::size_t l = 0; l < t.length(); ++l) {
      std::size_t conv = 0;
      for (std::size_t i = 0; i <= l && i < ca.length(); ++i)
        if (l - i < cb.length())
          conv += homology_rank(ca, i) * homology_rank(cb, l - i);
      require(homology_rank(t, l) == conv, "rank convolution");
    }
  }
  return "20 random pairs, all levels";
}

// 4. sandwich bounds on classical tensor products
std::string check_tensor_bounds() {
  std::vector<ClassicalCode> factors = {
      repetition_code(2, true), repetition_code(3, true),
      repetition_code(2, false), repetition_code(3, false)};
  int measured = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j) {
      if (factors[i].n() * factors[j].n() > 16) continue;
      BoundLedger led = bound_ledger(TensorProductCode(factors[i], factors[j]));
      require(led.measured.has_value(), "exact product barrier in reach");
      require(led.lower_energy <= *led.measured, "min factor barrier bound");
      require(led.lower_distance <= *led.measured, "min factor distance bound");
      require(*led.measured <= led.upper_strip, "strip upper bound");
      ++measured;  // conjectured_lower is carried in reports only
    }
  return std::to_string(measured) + " factor pairs, exact sandwich";
}

// 5. barrier scaling of repetition products
std::string check_rep_scaling() {
  for (std::size_t L : {3, 4, 5})
    require(code_barrier_exact(repetition_code(L, true)).value == 2,
            "1d cyclic barrier = 2");
  std::size_t v3 = *bound_ledger(TensorProductCode(repetition_code(3, true),
                                                   repetition_code(3, true)))
                        .measured;
  std::size_t v4 = *bound_ledger(TensorProductCode(repetition_code(4, true),
                                                   repetition_code(4, true)))
                        .measured;
  require(v3 >= 3, "2d L=3 barrier >= 3");
  require(v4 >= 4, "2d L=4 barrier >= 4");
  require(v4 > v3, "2d barrier grows with L");
  return "1d flat at 2, 2d grows: " + std::to_string(v3) + " -> " +
         std::to_string(v4);
}

// 6. canonical logical operators generate all classes
std::string check_canonical_sets() {
  ClassicalCode rep = repetition_code(2, true);
  Hgp3Code three = hgp3(rep, rep, rep);
  auto check_set = [](const CssCode& css, const CanonicalLogicalSet& set,
                      Kind kind, std::size_t expect) {
    require(set.operators.size() == expect, "operator count = k");
    RowBasis span(css.stabilizers_for(kind));
    for (const auto& op : set.operators) {
      require(mat_vec(css.checks_for(kind), op.op).is_zero(), "commutes");
      require(span.add(op.op), "independent beyond stabilizers");
    }
  };
  check_set(three.css, canonical_z_3d(three), Kind::Z, 3);
  check_set(three.css, canonical_x_3d(three), Kind::X, 3);
  // elementary Z operators live inside one slice of one block
  for (const auto& op : canonical_z_3d(three).operators) {
    auto sup = op.op.support();
    const auto& blocks = three.css.blocks();
    const QubitBlock& blk = blocks[op.family - 1];
    std::size_t stride = op.family == 1   ? three.nb * three.nc
                         : op.family == 2 ? three.nc
                                          : 1;
    std::size_t slice0 = SIZE_MAX;
    for (std::size_t bit : sup) {
      require(bit >= blk.offset && bit < blk.offset + blk.length,
              "support inside its own block");
      std::size_t local = bit - blk.offset;
      std::size_t slice = op.family == 1 ? local / stride
                          : op.family == 2
                              ? (local / stride) % three.rb
                              : local % three.rc;
      if (slice0 == SIZE_MAX) slice0 = slice;
      require(slice == slice0, "single slice support");
    }
  }
  Hgp4Code four = hgp4(rep, rep, rep, rep);
  check_set(four.css, canonical_z_4d(four), Kind::Z, 6);
  check_set(four.css, canonical_x_4d(four), Kind::X, 6);
  return "3d and 4d sets complete and independent";
}

// 7. slice deformation is monotone and lands on a nontrivial operator
std::string check_slice_deformation() {
  ClassicalCode rep = repetition_code(2, true);
  Hgp3Code code = hgp3(rep, rep, rep);
  EnergyFunction energy = css_energy(code.css, Kind::Z);
  CanonicalLogicalSet zs = canonical_z_3d(code);
  RowBasis stab(code.css.hz());
  uint64_t seed = 7000;
  int paths = 0;
  for (int round = 0; round < 34 && paths < 100; ++round) {
    for (const auto& op : zs.operators) {
      if (paths >= 100) break;
      SliceAxis axis = op.family == 1   ? SliceAxis::A
                       : op.family == 2 ? SliceAxis::B
                                        : SliceAxis::C;
      SliceChoice choice = choose_slice_codeword(code, op.op, axis);
      PauliPath path = random_path_to(op.op, seed++, 6);
      PauliPath def =
          slice_deform_3d(code, path, choice.codeword, choice.alpha, axis);
      require(def.steps.size() == path.steps.size(), "same length");
      for (std::size_t i = 0; i < path.steps.size(); ++i)
        require(energy(def.steps[i]) <= energy(path.steps[i]),
                "stepwise energy drop");
      BitVec end = def.steps.back();
      require(!end.is_zero(), "nontrivial endpoint");
      require(mat_vec(code.css.hx(), end).is_zero(), "endpoint is a cycle");
      require(!stab.contains(end), "endpoint outside stabilizers");
      ++paths;
    }
  }
  return std::to_string(paths) + " random paths deformed";
}

// 8. desk-scale barriers respect the analytic bounds
std::string check_barrier_consistency() {
  // 2d: first flip of any distance-2 logical violates a check
  ClassicalCode open2 = repetition_code(2, false);
  CssCode surf = hgp2(open2, open2);
  BarrierResult small = code_barrier_exact(surf, Kind::Z);
  require(small.value >= 1, "surface code barrier >= 1");
  require(small.value == 1, "surface code barrier pinned at 1");

  // 3d: best-first estimates upper-bound the true barrier, which the
  // bound says is >= min factor distance = 2
  ClassicalCode rep = repetition_code(2, true);
  Hgp3Code code = hgp3(rep, rep, rep);
  CanonicalLogicalSet zs = canonical_z_3d(code);
  EnergyFunction energy = css_energy(code.css, Kind::Z);
  std::size_t best = SIZE_MAX;
  for (const auto& op : zs.operators) {
    BestFirstConfig cfg;
    cfg.seed = 7;
    cfg.heuristic_weight = 1.0;
    BarrierResult est = barrier_best_first(energy, code.css.n(), op.op, cfg);
    require(verify_path(est.witness, op.op), "witness path valid");
    require(est.value >= 2, "estimate above the lower bound");
    best = std::min(best, est.value);
  }
  return "surface barrier 1; 3d best-first min estimate " +
         std::to_string(best) + " (upper side reported-only)";
}

// 9. confinement of the 3d product and the bound arithmetic
std::string check_confinement() {
  ClassicalCode rep = repetition_code(2, true);
  Hgp3Code code = hgp3(rep, rep, rep);
  MonotoneF cubic = MonotoneF::parse("x^3/4");
  ConfinementReport scan = confinement_scan(code.css, Kind::Z, 4, cubic, 2);
  require(scan.exhaustive, "scan exhaustive to weight 4");
  require(scan.violations.empty(), "no confinement violations");
  require(barrier_bound_from_confinement(3, cubic, 9) == 3, "cubic bound");
  require(barrier_bound_from_confinement(4, MonotoneF::parse("x^2/4"), 9) == 4,
          "quadratic bound");
  return "weight-4 scan clean; bounds 3 and 4";
}

// 10. the composite construction breaks linear confinement
std::string check_counterexample() {
  ClassicalCode composite = composite_repetition(2);
  CssCode quantum = hgp2(composite, ClassicalCode(BitMat(0, 1)));
  BitVec e(quantum.n());
  for (std::size_t pos = 0; pos < 4; ++pos)
    e.flip(composite_snake_bit(2, pos));
  std::size_t syn = mat_vec(quantum.checks_for(Kind::Z), e).weight();
  std::size_t red = reduced_weight(quantum, e, Kind::Z);
  require(syn <= 2, "syndrome weight <= 2");
  require(red >= 4, "reduced weight >= 4");
  ConfinementReport scan =
      confinement_scan(quantum, Kind::Z, 4, MonotoneF::parse("x"), 4);
  require(!scan.violations.empty(), "violation recorded");
  require(code_barrier_exact(composite).value >= 2, "code barrier >= 2");
  return "syndrome " + std::to_string(syn) + ", reduced " +
         std::to_string(red) + ", barrier >= 2";
}

// 11. expansion minima, exact and bounded
std::string check_expansion() {
  ClassicalCode cyc5 = repetition_code(5, true);
  ExpansionReport rep = expansion_scan(cyc5, 2);
  require(rep.per_size.size() == 2, "sizes 1 and 2 scanned");
  require(rep.per_size[0].min_neighbors == 2 && rep.per_size[0].min_unique == 2,
          "size-1 minima");
  require(rep.per_size[1].min_neighbors == 3 && rep.per_size[1].min_unique == 2,
          "size-2 minima");
  ClassicalCode bireg(random_biregular(12, 3, 4, 7));
  ExpansionReport rnd = expansion_scan(bireg, 4);
  for (const auto& rec : rnd.per_size) {
    require(rec.min_unique <= rec.min_neighbors, "U <= N");
    require(rec.min_neighbors <= 3 * rec.size, "N <= w s");
  }
  return "cyclic minima exact; biregular bounds hold";
}

// 12. byte-identical verification reports for a fixed seed
std::string check_determinism() {
#ifndef BARRIERS_LAB_CLI
  throw std::runtime_error("cli path not configured");
#else
  std::string cli = BARRIERS_LAB_CLI;
  auto run = [&cli](const std::string& out) {
    std::string cmd = cli + " --seed 7 --out " + out +
                      " verify --suite all-desk 2> /dev/null";
    int rc = std::system(cmd.c_str());
    if (rc != 0) throw std::runtime_error("verify run failed");
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  std::string a = run("/tmp/barriers_acc_a.json");
  std::string b = run("/tmp/barriers_acc_b.json");
  require(!a.empty(), "report written");
  require(a == b, "byte-identical reports");
  return "two all-desk runs, " + std::to_string(a.size()) +
         " bytes, identical";
#endif
}

}  // namespace

int main() {
  criterion(1, "algebraic-identities", check_identities);
  criterion(2, "parameter-formulas", check_parameters);
  criterion(3, "kunneth-ranks", check_kunneth);
  criterion(4, "tensor-bounds", check_tensor_bounds);
  criterion(5, "repetition-scaling", check_rep_scaling);
  criterion(6, "canonical-logicals", check_canonical_sets);
  criterion(7, "slice-deformation", check_slice_deformation);
  criterion(8, "barrier-consistency", check_barrier_consistency);
  criterion(9, "confinement-scan", check_confinement);
  criterion(10, "counterexample", check_counterexample);
  criterion(11, "expansion-minima", check_expansion);
  criterion(12, "report-determinism", check_determinism);
  return failures == 0 ? 0 : 1;
}

// Timing comparison of the OpenMP kernels against their serial references.
// Each pair must agree on the result; timings go to stdout.

#include <chrono>
#include <cstdio>

#include "barriers/classical.hpp"
#include "barriers/confinement.hpp"
#include "barriers/css.hpp"

using namespace barriers;

namespace {

template <typename F>
double timed(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  x%.2f  %s\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              agree ? "agree" : "MISMATCH");
}

}  // namespace

int main() {
  // distance via kernel combinations: k = 20 random code
  {
    BitMat H = random_biregular(40, 3, 6, 11);
    ClassicalCode code(H);
    std::size_t ds = 0, dp = 0;
    double ts = timed([&] { ds = code.distance_serial(26); });
    double tp = timed([&] { dp = code.distance(26); });
    report("min_weight_combination", ts, tp, ds == dp);
  }

  // expansion scan on a biregular graph
  {
    ClassicalCode code{ClassicalCode(random_biregular(24, 3, 4, 5))};
    ExpansionReport rs, rp;
    double ts = timed([&] { rs = expansion_scan_serial(code, 6); });
    double tp = timed([&] { rp = expansion_scan(code, 6); });
    bool agree = rs.per_size.size() == rp.per_size.size();
    for (std::size_t i = 0; agree && i < rs.per_size.size(); ++i)
      agree = rs.per_size[i].min_neighbors == rp.per_size[i].min_neighbors &&
              rs.per_size[i].min_unique == rp.per_size[i].min_unique;
    report("expansion_scan", ts, tp, agree);
  }

  // confinement scan on the 3D product of cyclic length-2 repetition codes
  {
    ClassicalCode rep = repetition_code(2, true);
    Hgp3Code code = hgp3(rep, rep, rep);
    MonotoneF f = MonotoneF::parse("x^3/4");
    ConfinementReport rs, rp;
    double ts = timed(
        [&] { rs = confinement_scan_serial(code.css, Kind::Z, 4, f, 2); });
    double tp =
        timed([&] { rp = confinement_scan(code.css, Kind::Z, 4, f, 2); });
    bool agree = rs.violations.size() == rp.violations.size() &&
                 rs.points.size() == rp.points.size();
    for (std::size_t i = 0; agree && i < rs.points.size(); ++i)
      agree = rs.points[i].max_reduced_weight == rp.points[i].max_reduced_weight;
    report("confinement_scan", ts, tp, agree);
  }

  // quantum distance with stabilizer rejection
  {
    ClassicalCode rep = repetition_code(2, true);
    Hgp3Code code = hgp3(rep, rep, rep);
    std::size_t ds = 0, dp = 0;
    double ts = timed([&] { ds = quantum_distance_serial(code.css, Kind::Z); });
    double tp = timed([&] { dp = quantum_distance(code.css, Kind::Z); });
    report("quantum_distance", ts, tp, ds == dp);
  }

  return 0;
}

#include "barriers/confinement.hpp"

#include <bit>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace barriers {

bool MonotoneF::at_least(uint64_t x, uint64_t y) const {
  unsigned __int128 lhs = num;
  for (unsigned p = 0; p < power; ++p) lhs *= x;
  return lhs >= static_cast<unsigned __int128>(den) * y;
}

double MonotoneF::value(uint64_t x) const {
  double v = static_cast<double>(num);
  for (unsigned p = 0; p < power; ++p) v *= static_cast<double>(x);
  return v / static_cast<double>(den);
}

std::string MonotoneF::to_string() const {
  std::ostringstream out;
  if (num != 1) out << num << "*";
  out << "x";
  if (power != 1) out << "^" << power;
  if (den != 1) out << "/" << den;
  return out.str();
}

MonotoneF MonotoneF::parse(const std::string& text) {
  static const std::regex pattern(R"(^\s*(?:(\d+)\*)?x(?:\^(\d+))?(?:/(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw std::invalid_argument("cannot parse monotone function: " + text);
  MonotoneF f;
  if (m[1].matched) f.num = std::stoull(m[1]);
  if (m[2].matched) f.power = static_cast<unsigned>(std::stoul(m[2]));
  if (m[3].matched) f.den = std::stoull(m[3]);
  if (f.num == 0 || f.den == 0 || f.power == 0)
    throw std::invalid_argument("monotone function must be increasing: " + text);
  return f;
}

namespace {

std::vector<BitVec> coset_basis(const BitMat& H, unsigned cap_bits) {
  std::vector<BitVec> basis = kernel_basis(H);
  if (basis.size() > cap_bits) {
    std::ostringstream msg;
    msg << "reduced weight: kernel dimension " << basis.size()
        << " exceeds the 2^" << cap_bits << " coset cap";
    throw std::runtime_error(msg.str());
  }
  return basis;
}

std::size_t coset_min_weight(const std::vector<BitVec>& basis, const BitVec& e) {
  BitVec cur = e;
  std::size_t best = cur.weight();
  const uint64_t total = uint64_t(1) << basis.size();
  for (uint64_t i = 1; i < total; ++i) {
    cur ^= basis[std::countr_zero(i)];
    best = std::min(best, cur.weight());
  }
  return best;
}

// All errors of weight <= w_max on n bits, weight-major, lexicographic
// support order within each weight.
std::vector<BitVec> errors_up_to(std::size_t n, std::size_t w_max) {
  std::vector<BitVec> out;
  out.push_back(BitVec(n));
  for (std::size_t w = 1; w <= std::min(w_max, n); ++w) {
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      BitVec e(n);
      for (std::size_t i : idx) e.set(i, true);
      out.push_back(std::move(e));
      std::size_t p = w;
      bool movable = false;
      while (p > 0) {
        --p;
        if (idx[p] + (w - p) < n) {
          movable = true;
          break;
        }
      }
      if (!movable) break;
      ++idx[p];
      for (std::size_t q = p + 1; q < w; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return out;
}

ConfinementReport confinement_scan_impl(const CssCode& css, Kind kind,
                                        std::size_t w_max, const MonotoneF& f,
                                        std::size_t t, unsigned cap_bits,
                                        bool parallel) {
  const BitMat& checks = css.checks_for(kind);
  std::vector<BitVec> basis = coset_basis(checks, cap_bits);
  std::vector<BitVec> errors = errors_up_to(css.n(), w_max);

  struct Sample {
    std::size_t syndrome_weight;
    std::size_t reduced_weight;
  };
  std::vector<Sample> samples(errors.size());

  const std::size_t w_q = css.sparsity().w_q;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(errors.size()); ++i) {
    std::size_t sw = mat_vec(checks, errors[i]).weight();
    samples[i] = {sw, coset_min_weight(basis, errors[i])};
  }
  (void)parallel;

  ConfinementReport report;
  report.kind = kind;
  report.w_max = w_max;
  std::map<std::size_t, std::size_t> points;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const Sample& s = samples[i];
    if (s.syndrome_weight > w_q * errors[i].weight())
      throw std::logic_error("syndrome weight exceeds the sparsity bound");
    if (s.reduced_weight > errors[i].weight())
      throw std::logic_error("reduced weight exceeds the error weight");
    auto [it, fresh] = points.emplace(s.syndrome_weight, s.reduced_weight);
    if (!fresh) it->second = std::max(it->second, s.reduced_weight);
    if (s.reduced_weight <= t && !f.at_least(s.syndrome_weight, s.reduced_weight))
      report.violations.push_back({errors[i], s.syndrome_weight, s.reduced_weight});
  }
  for (auto [sw, red] : points) report.points.push_back({sw, red});
  return report;
}

}  // namespace

std::size_t reduced_weight(const BitMat& H, const BitVec& e, unsigned cap_bits) {
  if (e.size() != H.cols())
    throw std::invalid_argument("reduced_weight: error length mismatch");
  return coset_min_weight(coset_basis(H, cap_bits), e);
}

std::size_t reduced_weight(const CssCode& css, const BitVec& e, Kind kind,
                           unsigned cap_bits) {
  return reduced_weight(css.checks_for(kind), e, cap_bits);
}

ConfinementReport confinement_scan(const CssCode& css, Kind kind,
                                   std::size_t w_max, const MonotoneF& f,
                                   std::size_t t, unsigned cap_bits) {
  return confinement_scan_impl(css, kind, w_max, f, t, cap_bits, true);
}

ConfinementReport confinement_scan_serial(const CssCode& css, Kind kind,
                                          std::size_t w_max, const MonotoneF& f,
                                          std::size_t t, unsigned cap_bits) {
  return confinement_scan_impl(css, kind, w_max, f, t, cap_bits, false);
}

SoundnessReport soundness_scan(const CssCode& css, Kind kind, std::size_t t,
                               const MonotoneF& f, std::size_t w_max,
                               unsigned cap_bits) {
  const BitMat& checks = css.checks_for(kind);
  std::vector<BitVec> basis = coset_basis(checks, cap_bits);

  // One representative error per distinct syndrome seen in the sweep.
  std::map<std::pair<std::size_t, BitVec>, BitVec> reps;
  for (const BitVec& e : errors_up_to(css.n(), w_max)) {
    BitVec syn = mat_vec(checks, e);
    std::size_t sw = syn.weight();
    if (sw >= t) continue;
    reps.emplace(std::make_pair(sw, std::move(syn)), e);
  }

  SoundnessReport report;
  report.kind = kind;
  report.t = t;
  report.w_max = w_max;
  report.syndromes_checked = reps.size();
  for (const auto& [key, e] : reps) {
    std::size_t red = coset_min_weight(basis, e);
    if (!f.at_least(key.first, red))
      report.violations.push_back({key.second, key.first, red});
  }
  return report;
}

std::size_t barrier_bound_from_confinement(std::size_t t, const MonotoneF& f,
                                           std::size_t d) {
  if (t > d)
    throw std::invalid_argument(
        "barrier_bound_from_confinement: requires t <= d");
  const std::size_t w = (d - 1) / 2;
  std::size_t x = 0;
  while (!f.at_least(x, w)) ++x;
  return x;
}

}  // namespace barriers

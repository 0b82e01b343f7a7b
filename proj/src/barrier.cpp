#include "barriers/barrier.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace barriers {

PauliPath PauliPath::from_flips(std::size_t n, const std::vector<std::size_t>& flips) {
  PauliPath p;
  p.n = n;
  BitVec cur(n);
  p.steps.push_back(cur);
  for (std::size_t f : flips) {
    cur.flip(f);
    p.steps.push_back(cur);
  }
  return p;
}

std::vector<std::size_t> PauliPath::flip_sequence() const {
  std::vector<std::size_t> flips;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    BitVec diff = steps[i] ^ steps[i - 1];
    auto s = diff.support();
    if (s.size() == 1) flips.push_back(s[0]);
  }
  return flips;
}

std::size_t PauliPath::max_energy(const EnergyFunction& energy) const {
  std::size_t best = 0;
  for (const auto& s : steps) best = std::max(best, energy(s));
  return best;
}

bool verify_path(const PauliPath& p, const BitVec& target) {
  if (p.steps.empty()) return false;
  if (!p.steps.front().is_zero()) return false;
  for (const auto& s : p.steps)
    if (s.size() != p.n) return false;
  for (std::size_t i = 1; i < p.steps.size(); ++i)
    if ((p.steps[i] ^ p.steps[i - 1]).weight() > 1) return false;
  return p.steps.back() == target;
}

namespace {

void check_exact_cap(std::size_t n, unsigned cap_bits) {
  if (n > cap_bits) {
    std::ostringstream msg;
    msg << "exact barrier search: n = " << n << " exceeds the 2^" << cap_bits
        << "-state cap";
    throw std::runtime_error(msg.str());
  }
}

BitVec state_to_vec(uint64_t state, std::size_t n) {
  BitVec v(n);
  while (state) {
    v.set(std::countr_zero(state), true);
    state &= state - 1;
  }
  return v;
}

}  // namespace

std::vector<uint16_t> energy_table(const BitMat& H, unsigned cap_bits) {
  const std::size_t n = H.cols();
  check_exact_cap(n, cap_bits);
  std::vector<BitVec> cols;
  cols.reserve(n);
  for (std::size_t c = 0; c < n; ++c) cols.push_back(H.col(c));
  const uint64_t total = uint64_t(1) << n;
  std::vector<uint16_t> table(total);
  BitVec syndrome(H.rows());
  table[0] = 0;
  // Gray-code walk: state index i corresponds to the mask i ^ (i >> 1).
  std::vector<uint16_t> by_gray(total);
  for (uint64_t i = 1; i < total; ++i) {
    syndrome ^= cols[std::countr_zero(i)];
    by_gray[i ^ (i >> 1)] = static_cast<uint16_t>(syndrome.weight());
  }
  by_gray[0] = 0;
  return by_gray;
}

std::vector<uint16_t> energy_table(const EnergyFunction& energy, std::size_t n,
                                   unsigned cap_bits) {
  check_exact_cap(n, cap_bits);
  const uint64_t total = uint64_t(1) << n;
  std::vector<uint16_t> table(total);
  for (uint64_t s = 0; s < total; ++s)
    table[s] = static_cast<uint16_t>(energy(state_to_vec(s, n)));
  return table;
}

ExactSweep exact_sweep(std::vector<uint16_t> energies, std::size_t n) {
  const uint64_t total = uint64_t(1) << n;
  if (energies.size() != total)
    throw std::invalid_argument("exact_sweep: energy table size mismatch");
  ExactSweep sw;
  sw.n = n;
  sw.energy = std::move(energies);
  sw.label.assign(total, UINT16_MAX);
  sw.parent.assign(total, UINT8_MAX);

  uint16_t max_e = 0;
  for (uint16_t e : sw.energy) max_e = std::max(max_e, e);
  std::vector<std::vector<uint64_t>> buckets(max_e + 1);
  sw.label[0] = 0;
  buckets[0].push_back(0);

  for (uint16_t lv = 0; lv <= max_e; ++lv) {
    // FIFO within a bucket, flip indices ascending: deterministic labels
    // and parents.
    for (std::size_t qi = 0; qi < buckets[lv].size(); ++qi) {
      uint64_t s = buckets[lv][qi];
      if (sw.label[s] != lv) continue;  // stale entry
      for (std::size_t f = 0; f < n; ++f) {
        uint64_t t = s ^ (uint64_t(1) << f);
        uint16_t nl = std::max<uint16_t>(lv, sw.energy[t]);
        if (nl < sw.label[t]) {
          sw.label[t] = nl;
          sw.parent[t] = static_cast<uint8_t>(f);
          buckets[nl].push_back(t);
        }
      }
    }
  }
  return sw;
}

PauliPath ExactSweep::witness_to(uint64_t state) const {
  std::vector<std::size_t> flips;
  uint64_t s = state;
  while (s != 0) {
    uint8_t f = parent[s];
    flips.push_back(f);
    s ^= uint64_t(1) << f;
  }
  std::reverse(flips.begin(), flips.end());
  return PauliPath::from_flips(n, flips);
}

namespace {

BarrierResult result_from_sweep(const ExactSweep& sw, uint64_t state,
                                std::string target_desc) {
  BarrierResult r;
  r.value = sw.label[state];
  r.witness = sw.witness_to(state);
  r.exact = true;
  r.target = std::move(target_desc);
  return r;
}

uint64_t vec_to_state(const BitVec& v) {
  if (v.size() > 64) throw std::invalid_argument("state does not fit in 64 bits");
  uint64_t s = 0;
  for (std::size_t i : v.support()) s |= uint64_t(1) << i;
  return s;
}

}  // namespace

BarrierResult barrier_exact(const BitMat& H, const BitVec& target,
                            unsigned cap_bits) {
  if (H.cols() != target.size())
    throw std::invalid_argument("barrier_exact: target length mismatch");
  ExactSweep sw = exact_sweep(energy_table(H, cap_bits), H.cols());
  return result_from_sweep(sw, vec_to_state(target), "vector " + target.to_string());
}

BarrierResult barrier_exact(const EnergyFunction& energy, std::size_t n,
                            const BitVec& target, unsigned cap_bits) {
  ExactSweep sw = exact_sweep(energy_table(energy, n, cap_bits), n);
  return result_from_sweep(sw, vec_to_state(target), "vector " + target.to_string());
}

BarrierResult barrier_exact_over(const BitMat& H, std::size_t n,
                                 const std::function<bool(uint64_t)>& target_pred,
                                 unsigned cap_bits) {
  ExactSweep sw = exact_sweep(energy_table(H, cap_bits), n);
  const uint64_t total = uint64_t(1) << n;
  uint64_t best_state = 0;
  uint16_t best = UINT16_MAX;
  for (uint64_t s = 1; s < total; ++s) {
    if (sw.label[s] >= best) continue;
    if (!target_pred(s)) continue;
    best = sw.label[s];
    best_state = s;
  }
  if (best == UINT16_MAX)
    throw std::runtime_error("barrier_exact_over: no state satisfies the target");
  return result_from_sweep(sw, best_state, "predicate minimum");
}

BarrierResult code_barrier_exact(const ClassicalCode& code, unsigned cap_bits) {
  if (code.k() == 0)
    throw std::runtime_error("code_barrier_exact: no nontrivial targets");
  ExactSweep sw = exact_sweep(energy_table(code.H(), cap_bits), code.n());
  const uint64_t total = uint64_t(1) << code.n();
  uint64_t best_state = 0;
  uint16_t best = UINT16_MAX;
  for (uint64_t s = 1; s < total; ++s)
    if (sw.energy[s] == 0 && sw.label[s] < best) {
      best = sw.label[s];
      best_state = s;
    }
  BarrierResult r = result_from_sweep(sw, best_state, "code-level minimum");
  return r;
}

BarrierResult barrier_best_first(const EnergyFunction& energy, std::size_t n,
                                 const BitVec& target,
                                 const BestFirstConfig& config) {
  if (target.size() != n)
    throw std::invalid_argument("barrier_best_first: target length mismatch");

  struct Node {
    BitVec state;
    std::size_t max_energy;
    std::size_t parent;  // index into arena, SIZE_MAX for the root
    std::size_t flip;
  };
  std::vector<Node> arena;
  arena.push_back({BitVec(n), 0, SIZE_MAX, SIZE_MAX});

  auto hamming_to_target = [&](const BitVec& s) { return (s ^ target).weight(); };
  auto priority = [&](const Node& nd) {
    return static_cast<double>(nd.max_energy) +
           config.heuristic_weight * static_cast<double>(hamming_to_target(nd.state));
  };

  using Entry = std::pair<std::pair<double, std::size_t>, std::size_t>;  // ((prio, order), arena idx)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> frontier;
  std::unordered_map<BitVec, std::size_t, BitVecHash> best_seen;  // state -> best max_energy
  frontier.push({{priority(arena[0]), 0}, 0});
  best_seen.emplace(arena[0].state, 0);

  std::size_t expanded = 0, order = 1;
  while (!frontier.empty()) {
    auto [prio, idx] = frontier.top();
    frontier.pop();
    Node nd = arena[idx];
    auto it = best_seen.find(nd.state);
    if (it != best_seen.end() && it->second < nd.max_energy) continue;  // stale

    if (nd.state == target) {
      std::vector<std::size_t> flips;
      for (std::size_t i = idx; arena[i].parent != SIZE_MAX; i = arena[i].parent)
        flips.push_back(arena[i].flip);
      std::reverse(flips.begin(), flips.end());
      BarrierResult r;
      r.witness = PauliPath::from_flips(n, flips);
      r.value = nd.max_energy;
      r.exact = false;
      r.target = "vector " + target.to_string();
      return r;
    }

    if (++expanded > config.frontier_cap) {
      std::ostringstream msg;
      msg << "barrier_best_first: frontier cap " << config.frontier_cap
          << " exhausted before reaching the target; increase the cap";
      throw std::runtime_error(msg.str());
    }

    for (std::size_t f = 0; f < n; ++f) {
      BitVec next = nd.state;
      next.flip(f);
      std::size_t me = std::max(nd.max_energy, energy(next));
      auto [nit, inserted] = best_seen.emplace(next, me);
      if (!inserted) {
        if (nit->second <= me) continue;
        nit->second = me;
      }
      arena.push_back({std::move(next), me, idx, f});
      frontier.push({{priority(arena.back()), order++}, arena.size() - 1});
    }
  }
  throw std::runtime_error(
      "barrier_best_first: frontier exhausted without reaching the target");
}

}  // namespace barriers

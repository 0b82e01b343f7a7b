#include "barriers/css.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace barriers {

namespace {

bool is_zero_mat(const BitMat& M) {
  for (std::size_t r = 0; r < M.rows(); ++r)
    if (!M.row(r).is_zero()) return false;
  return true;
}

}  // namespace

CssCode::CssCode(BitMat hx, BitMat hz, std::optional<BitMat> meta_x,
                 std::optional<BitMat> meta_z, std::vector<QubitBlock> blocks)
    : hx_(std::move(hx)), hz_(std::move(hz)), meta_x_(std::move(meta_x)),
      meta_z_(std::move(meta_z)), blocks_(std::move(blocks)) {
  if (hx_.cols() != hz_.cols())
    throw std::invalid_argument("CssCode: check matrices disagree on qubit count");
  if (!is_zero_mat(mat_mul(hx_, hz_.transpose())))
    throw std::invalid_argument("CssCode: H_X H_Z^T != 0");
  if (meta_x_ && !is_zero_mat(mat_mul(*meta_x_, hx_)))
    throw std::invalid_argument("CssCode: meta_X H_X != 0");
  if (meta_z_ && !is_zero_mat(mat_mul(*meta_z_, hz_)))
    throw std::invalid_argument("CssCode: meta_Z H_Z != 0");
  if (!blocks_.empty()) {
    std::size_t covered = 0;
    for (const auto& b : blocks_) {
      if (b.offset != covered)
        throw std::invalid_argument("CssCode: qubit blocks not contiguous");
      covered += b.length;
    }
    if (covered != n())
      throw std::invalid_argument("CssCode: qubit blocks do not cover all qubits");
  }

  sparsity_.w_c = 0;
  for (std::size_t r = 0; r < hx_.rows(); ++r)
    sparsity_.w_c = std::max(sparsity_.w_c, hx_.row(r).weight());
  for (std::size_t r = 0; r < hz_.rows(); ++r)
    sparsity_.w_c = std::max(sparsity_.w_c, hz_.row(r).weight());
  sparsity_.w_q = 0;
  for (std::size_t c = 0; c < n(); ++c)
    sparsity_.w_q = std::max(sparsity_.w_q,
                             hx_.col(c).weight() + hz_.col(c).weight());
}

std::size_t CssCode::k() const {
  return n() - rank(hx_) - rank(hz_);
}

std::vector<BitVec> logical_space(const CssCode& css, Kind kind) {
  std::vector<BitVec> reps;
  RowBasis span(css.stabilizers_for(kind));
  for (const BitVec& v : kernel_basis(css.checks_for(kind)))
    if (span.add(v)) reps.push_back(v);
  return reps;
}

namespace {

std::size_t quantum_distance_impl(const CssCode& css, Kind kind,
                                  unsigned cap_bits, bool parallel) {
  if (css.k() == 0)
    throw std::runtime_error("quantum_distance: code has no logical qubits");
  std::vector<BitVec> cycles = kernel_basis(css.checks_for(kind));
  RowBasis stab(css.stabilizers_for(kind));
  auto reject = [&stab](const BitVec& x) { return stab.contains(x); };
  return parallel ? min_weight_combination(cycles, cap_bits, reject)
                  : min_weight_combination_serial(cycles, cap_bits, reject);
}

}  // namespace

std::size_t quantum_distance(const CssCode& css, Kind kind, unsigned cap_bits) {
  return quantum_distance_impl(css, kind, cap_bits, true);
}

std::size_t quantum_distance_serial(const CssCode& css, Kind kind,
                                    unsigned cap_bits) {
  return quantum_distance_impl(css, kind, cap_bits, false);
}

std::vector<BitVec> select_unit_vectors(const BitMat& delta, std::size_t count) {
  // Column span of delta = row space of delta^T.
  RowBasis span(delta.transpose());
  std::vector<BitVec> picked;
  for (std::size_t i = 0; i < delta.rows() && picked.size() < count; ++i) {
    BitVec u = BitVec::unit(delta.rows(), i);
    if (span.add(u)) picked.push_back(std::move(u));
  }
  if (picked.size() < count) {
    std::ostringstream msg;
    msg << "select_unit_vectors: only " << picked.size()
        << " independent unit vectors available, " << count << " requested";
    throw std::runtime_error(msg.str());
  }
  return picked;
}

// ---- hypergraph products ----

CssCode hgp2(const ClassicalCode& a, const ClassicalCode& b) {
  const BitMat& Ha = a.H();
  const BitMat& Hb = b.H();
  const std::size_t na = Ha.cols(), ra = Ha.rows();
  const std::size_t nb = Hb.cols(), rb = Hb.rows();
  BitMat hx = hstack({kron(Ha, BitMat::identity(nb)),
                      kron(BitMat::identity(ra), Hb.transpose())});
  BitMat hz = hstack({kron(BitMat::identity(na), Hb),
                      kron(Ha.transpose(), BitMat::identity(rb))});
  std::vector<QubitBlock> blocks = {{"VV", 0, na * nb}, {"CC", na * nb, ra * rb}};
  return CssCode(std::move(hx), std::move(hz), std::nullopt, std::nullopt,
                 std::move(blocks));
}

namespace {

void subsets_rec(std::size_t m, std::size_t k, std::size_t start,
                 std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < m; ++i) {
    cur.push_back(i);
    subsets_rec(m, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets_rec(m, k, 0, cur, out);
  return out;
}

bool contains_idx(const std::vector<std::size_t>& s, std::size_t x) {
  return std::find(s.begin(), s.end(), x) != s.end();
}

// One factor per position: checks space for positions in `checks_at`,
// variable space elsewhere; the map applies H at position `apply_at`.
BitMat level_block(const std::vector<const BitMat*>& H,
                   const std::vector<std::size_t>& checks_at,
                   std::size_t apply_at) {
  BitMat out;
  bool first = true;
  for (std::size_t p = 0; p < H.size(); ++p) {
    BitMat piece;
    if (p == apply_at)
      piece = *H[p];
    else if (contains_idx(checks_at, p))
      piece = BitMat::identity(H[p]->rows());
    else
      piece = BitMat::identity(H[p]->cols());
    out = first ? std::move(piece) : kron(out, piece);
    first = false;
  }
  return out;
}

// Map from check-position subsets of size k to those of size k+1; block
// (dst, src) applies H at the added position when src is contained in dst.
BitMat cochain_differential(const std::vector<const BitMat*>& H, std::size_t k) {
  const std::size_t m = H.size();
  auto srcs = subsets_lex(m, k);
  auto dsts = subsets_lex(m, k + 1);
  std::vector<std::vector<std::optional<BitMat>>> blocks(
      dsts.size(), std::vector<std::optional<BitMat>>(srcs.size()));
  for (std::size_t d = 0; d < dsts.size(); ++d)
    for (std::size_t s = 0; s < srcs.size(); ++s) {
      std::vector<std::size_t> extra;
      for (std::size_t x : dsts[d])
        if (!contains_idx(srcs[s], x)) extra.push_back(x);
      if (extra.size() != 1) continue;
      blocks[d][s] = level_block(H, srcs[s], extra[0]);
    }
  return block_matrix(blocks);
}

std::vector<QubitBlock> product_blocks(const std::vector<const BitMat*>& H,
                                       std::size_t level) {
  std::vector<QubitBlock> out;
  std::size_t offset = 0;
  for (const auto& s : subsets_lex(H.size(), level)) {
    std::string name;
    std::size_t len = 1;
    for (std::size_t p = 0; p < H.size(); ++p) {
      bool chk = contains_idx(s, p);
      name += chk ? 'C' : 'V';
      len *= chk ? H[p]->rows() : H[p]->cols();
    }
    out.push_back({name, offset, len});
    offset += len;
  }
  return out;
}

}  // namespace

Hgp3Code hgp3(const ClassicalCode& a, const ClassicalCode& b,
              const ClassicalCode& c) {
  std::vector<const BitMat*> H = {&a.H(), &b.H(), &c.H()};
  // Qubits sit one level up from the Z checks: Z checks index variable
  // triples, X checks the two-check level, X metachecks the top level.
  BitMat hz = cochain_differential(H, 0).transpose();
  BitMat hx = cochain_differential(H, 1);
  BitMat meta_x = cochain_differential(H, 2);
  CssCode css(std::move(hx), std::move(hz), std::move(meta_x), std::nullopt,
              product_blocks(H, 1));
  return Hgp3Code{std::move(css), a.H(), b.H(), c.H(),
                  a.n(), b.n(), c.n(), a.m(), b.m(), c.m()};
}

Hgp4Code hgp4(const ClassicalCode& a, const ClassicalCode& b,
              const ClassicalCode& c, const ClassicalCode& d) {
  std::vector<const BitMat*> H = {&a.H(), &b.H(), &c.H(), &d.H()};
  // Qubits at the middle (two-check) level; both syndromes carry
  // metachecks one level further out.
  BitMat hz = cochain_differential(H, 1).transpose();
  BitMat hx = cochain_differential(H, 2);
  BitMat meta_x = cochain_differential(H, 3);
  BitMat meta_z = cochain_differential(H, 0).transpose();
  CssCode css(std::move(hx), std::move(hz), std::move(meta_x), std::move(meta_z),
              product_blocks(H, 2));
  return Hgp4Code{std::move(css), a.H(), b.H(), c.H(), d.H(),
                  a.n(), b.n(), c.n(), d.n(), a.m(), b.m(), c.m(), d.m()};
}

namespace {

std::size_t k_transpose(const ClassicalCode& code) {
  return code.m() - (code.n() - code.k());  // rows minus rank
}

std::optional<std::size_t> opt_at(const std::vector<std::optional<std::size_t>>& v,
                                  std::size_t i) {
  return i < v.size() ? v[i] : std::nullopt;
}

}  // namespace

HgpPrediction predict_params3(const ClassicalCode& a, const ClassicalCode& b,
                              const ClassicalCode& c,
                              const std::vector<std::optional<std::size_t>>& dists,
                              const std::vector<std::optional<std::size_t>>& dists_t) {
  HgpPrediction p;
  p.n = a.m() * b.n() * c.n() + a.n() * b.m() * c.n() + a.n() * b.n() * c.m();
  std::size_t kat = k_transpose(a), kbt = k_transpose(b), kct = k_transpose(c);
  p.k = kat * b.k() * c.k() + a.k() * kbt * c.k() + a.k() * b.k() * kct;
  auto da = opt_at(dists, 0), db = opt_at(dists, 1), dc = opt_at(dists, 2);
  if (da && db && dc)
    p.d_z = std::min({*da * *db, *da * *dc, *db * *dc});
  auto dat = opt_at(dists_t, 0), dbt = opt_at(dists_t, 1), dct = opt_at(dists_t, 2);
  if (dat && dbt && dct) p.d_x = std::min({*dat, *dbt, *dct});
  return p;
}

HgpPrediction predict_params4(const ClassicalCode& a, const ClassicalCode& b,
                              const ClassicalCode& c, const ClassicalCode& d,
                              const std::vector<std::optional<std::size_t>>& dists,
                              const std::vector<std::optional<std::size_t>>& dists_t) {
  HgpPrediction p;
  const ClassicalCode* f[4] = {&a, &b, &c, &d};
  p.n = 0;
  p.k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::size_t n_term = 1, k_term = 1;
      for (std::size_t l = 0; l < 4; ++l) {
        bool chk = (l == i || l == j);
        n_term *= chk ? f[l]->m() : f[l]->n();
        k_term *= chk ? k_transpose(*f[l]) : f[l]->k();
      }
      p.n += n_term;
      p.k += k_term;
    }
  bool have_d = true, have_dt = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!opt_at(dists, i)) have_d = false;
    if (!opt_at(dists_t, i)) have_dt = false;
  }
  if (have_d) {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        best = std::min(best, *dists[i] * *dists[j]);
    p.d_z = best;
  }
  if (have_dt) {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        best = std::min(best, *dists_t[i] * *dists_t[j]);
    p.d_x = best;
  }
  return p;
}

// ---- canonical logical operators ----

namespace {

struct FactorData {
  std::vector<BitVec> words;  // codewords (Z role) or check-space units (X role)
};

// Per-factor building blocks for one family: on check positions a unit
// vector outside the column span of H (Z role) or a transpose codeword
// (X role); on variable positions a codeword (Z) or a unit vector
// outside the column span of H^T (X).
std::vector<BitVec> factor_words(const BitMat& H, bool check_position, Kind kind) {
  std::size_t rk = rank(H);
  if (kind == Kind::Z) {
    if (check_position) return select_unit_vectors(H, H.rows() - rk);
    return kernel_basis(H);
  }
  if (check_position) return kernel_basis(H.transpose());
  BitMat ht = H.transpose();
  return select_unit_vectors(ht, H.cols() - rk);
}

CanonicalLogicalSet canonical_set(const CssCode& css,
                                  const std::vector<const BitMat*>& H,
                                  std::size_t level, Kind kind) {
  CanonicalLogicalSet out;
  out.kind = kind;
  out.dim = static_cast<int>(H.size());

  auto families = subsets_lex(H.size(), level);
  const auto& blocks = css.blocks();
  const BitMat& checks = css.checks_for(kind);
  RowBasis span(css.stabilizers_for(kind));
  const std::size_t expected = css.k();

  for (std::size_t fam = 0; fam < families.size(); ++fam) {
    std::vector<std::vector<BitVec>> parts;
    for (std::size_t p = 0; p < H.size(); ++p)
      parts.push_back(factor_words(*H[p], contains_idx(families[fam], p), kind));

    std::vector<std::size_t> label(parts.size(), 0);
    bool done = parts.empty();
    while (!done) {
      bool skip = false;
      for (std::size_t p = 0; p < parts.size(); ++p)
        if (parts[p].empty()) skip = true;
      if (skip) break;

      BitVec word = parts[0][label[0]];
      for (std::size_t p = 1; p < parts.size(); ++p)
        word = kron_vec(word, parts[p][label[p]]);
      BitVec op(css.n());
      for (std::size_t i : word.support())
        op.set(blocks[fam].offset + i, true);

      if (!mat_vec(checks, op).is_zero())
        throw std::runtime_error("canonical logical violates the check condition");
      if (!span.add(op))
        throw std::runtime_error("canonical logical lies in the stabilizer span");
      out.operators.push_back({fam + 1, label, std::move(op)});

      // odometer over per-factor indices, last factor fastest
      std::size_t p = parts.size();
      while (p > 0) {
        --p;
        if (++label[p] < parts[p].size()) break;
        label[p] = 0;
        if (p == 0) done = true;
      }
    }
  }
  if (out.operators.size() != expected) {
    std::ostringstream msg;
    msg << "canonical logical count " << out.operators.size()
        << " does not match k = " << expected;
    throw std::runtime_error(msg.str());
  }
  return out;
}

}  // namespace

CanonicalLogicalSet canonical_z_3d(const Hgp3Code& code) {
  return canonical_set(code.css, {&code.da, &code.db, &code.dc}, 1, Kind::Z);
}

CanonicalLogicalSet canonical_x_3d(const Hgp3Code& code) {
  return canonical_set(code.css, {&code.da, &code.db, &code.dc}, 1, Kind::X);
}

CanonicalLogicalSet canonical_z_4d(const Hgp4Code& code) {
  return canonical_set(code.css, {&code.da, &code.db, &code.dc, &code.dd}, 2,
                       Kind::Z);
}

CanonicalLogicalSet canonical_x_4d(const Hgp4Code& code) {
  return canonical_set(code.css, {&code.da, &code.db, &code.dc, &code.dd}, 2,
                       Kind::X);
}

}  // namespace barriers

#include "barriers/f2.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace barriers {

BitVec::BitVec(std::size_t n, std::initializer_list<int> bits) : BitVec(n) {
  std::size_t i = 0;
  for (int b : bits) {
    if (i >= n) throw std::invalid_argument("BitVec: too many initializers");
    if (b) set(i, true);
    ++i;
  }
}

BitVec BitVec::unit(std::size_t n, std::size_t i) {
  BitVec v(n);
  v.set(i, true);
  return v;
}

BitVec BitVec::ones(std::size_t n) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, true);
  return v;
}

BitVec BitVec::from_string(const std::string& s) {
  BitVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') v.set(i, true);
    else if (s[i] != '0') throw std::invalid_argument("BitVec: bad character");
  }
  return v;
}

std::size_t BitVec::weight() const {
  std::size_t w = 0;
  for (uint64_t x : w_) w += std::popcount(x);
  return w;
}

bool BitVec::is_zero() const {
  for (uint64_t x : w_) if (x) return false;
  return true;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s.push_back(i);
  return s;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (n_ != o.n_) throw std::invalid_argument("BitVec xor: length mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool BitVec::operator<(const BitVec& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t i = 0; i < n_; ++i) {
    bool a = get(i), b = o.get(i);
    if (a != b) return b;  // 0 < 1
  }
  return false;
}

bool BitVec::dot(const BitVec& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BitVec dot: length mismatch");
  uint64_t acc = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
  return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::size_t BitVecHash::operator()(const BitVec& v) const {
  std::size_t h = v.size() * 0x9e3779b97f4a7c15ull;
  for (uint64_t x : v.words()) h = (h ^ x) * 0x100000001b3ull;
  return h;
}

BitMat BitMat::identity(std::size_t n) {
  BitMat M(n, n);
  for (std::size_t i = 0; i < n; ++i) M.set(i, i, true);
  return M;
}

BitMat BitMat::zero(std::size_t rows, std::size_t cols) { return BitMat(rows, cols); }

BitMat BitMat::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) return BitMat();
  BitMat M(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != M.cols())
      throw std::invalid_argument("BitMat: ragged rows");
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (rows[r][c] == '1') M.set(r, c, true);
  }
  return M;
}

BitVec BitMat::row(std::size_t r) const {
  BitVec v(cols_);
  for (std::size_t w = 0; w < wpr_; ++w) v.words()[w] = data_[r * wpr_ + w];
  return v;
}

BitVec BitMat::col(std::size_t c) const {
  BitVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r, true);
  return v;
}

void BitMat::set_row(std::size_t r, const BitVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
  for (std::size_t w = 0; w < wpr_; ++w) data_[r * wpr_ + w] = v.words()[w];
}

void BitMat::xor_row(std::size_t r, const BitVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("xor_row: length mismatch");
  for (std::size_t w = 0; w < wpr_; ++w) data_[r * wpr_ + w] ^= v.words()[w];
}

BitMat BitMat::transpose() const {
  BitMat T(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t w = 0; w < wpr_; ++w) {
      uint64_t word = data_[r * wpr_ + w];
      while (word) {
        std::size_t c = w * 64 + std::countr_zero(word);
        T.set(c, r, true);
        word &= word - 1;
      }
    }
  return T;
}

bool BitMat::operator==(const BitMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

BitVec mat_vec(const BitMat& A, const BitVec& v) {
  if (A.cols() != v.size()) {
    std::ostringstream msg;
    msg << "mat_vec: shape mismatch, matrix is " << A.rows() << "x" << A.cols()
        << " but vector has length " << v.size();
    throw std::invalid_argument(msg.str());
  }
  BitVec out(A.rows());
  const std::size_t wpr = A.words_per_row();
  for (std::size_t r = 0; r < A.rows(); ++r) {
    const uint64_t* rw = A.row_words(r);
    uint64_t acc = 0;
    for (std::size_t w = 0; w < wpr; ++w) acc ^= rw[w] & v.words()[w];
    if (std::popcount(acc) & 1) out.set(r, true);
  }
  return out;
}

BitMat mat_mul(const BitMat& A, const BitMat& B) {
  if (A.cols() != B.rows())
    throw std::invalid_argument("mat_mul: inner dimensions differ");
  BitMat C(A.rows(), B.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    BitVec acc(B.cols());
    for (std::size_t k = 0; k < A.cols(); ++k)
      if (A.get(r, k)) acc ^= B.row(k);
    C.set_row(r, acc);
  }
  return C;
}

namespace {

// Row echelon form in place; returns pivot column per echelon row.
std::vector<std::size_t> echelonize(std::vector<BitVec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  std::size_t cols = rows[0].size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    std::size_t sel = top;
    while (sel < rows.size() && !rows[sel].get(c)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[top], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != top && rows[r].get(c)) rows[r] ^= rows[top];
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  return pivots;
}

std::vector<BitVec> matrix_rows(const BitMat& A) {
  std::vector<BitVec> rows;
  rows.reserve(A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r) rows.push_back(A.row(r));
  return rows;
}

}  // namespace

std::size_t rank(const BitMat& A) {
  auto rows = matrix_rows(A);
  return echelonize(rows).size();
}

std::vector<BitVec> kernel_basis(const BitMat& A) {
  auto rows = matrix_rows(A);
  auto pivots = echelonize(rows);
  std::vector<bool> is_pivot(A.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<BitVec> basis;
  for (std::size_t free_c = 0; free_c < A.cols(); ++free_c) {
    if (is_pivot[free_c]) continue;
    BitVec x(A.cols());
    x.set(free_c, true);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (rows[r].get(free_c)) x.set(pivots[r], true);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<BitVec> solve(const BitMat& A, const BitVec& b) {
  if (A.rows() != b.size())
    throw std::invalid_argument("solve: rhs length differs from row count");
  // Eliminate on the augmented rows [A | b].
  std::vector<BitVec> aug;
  aug.reserve(A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    BitVec row(A.cols() + 1);
    BitVec ar = A.row(r);
    for (std::size_t c = 0; c < A.cols(); ++c)
      if (ar.get(c)) row.set(c, true);
    if (b.get(r)) row.set(A.cols(), true);
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < A.cols() && top < aug.size(); ++c) {
    std::size_t sel = top;
    while (sel < aug.size() && !aug[sel].get(c)) ++sel;
    if (sel == aug.size()) continue;
    std::swap(aug[top], aug[sel]);
    for (std::size_t r = 0; r < aug.size(); ++r)
      if (r != top && aug[r].get(c)) aug[r] ^= aug[top];
    pivots.push_back(c);
    ++top;
  }
  for (std::size_t r = top; r < aug.size(); ++r)
    if (aug[r].get(A.cols())) return std::nullopt;
  BitVec x(A.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (aug[r].get(A.cols())) x.set(pivots[r], true);
  return x;
}

BitMat kron(const BitMat& A, const BitMat& B) {
  BitMat C(A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t r1 = 0; r1 < A.rows(); ++r1)
    for (std::size_t c1 = 0; c1 < A.cols(); ++c1) {
      if (!A.get(r1, c1)) continue;
      for (std::size_t r2 = 0; r2 < B.rows(); ++r2)
        for (std::size_t c2 = 0; c2 < B.cols(); ++c2)
          if (B.get(r2, c2))
            C.set(r1 * B.rows() + r2, c1 * B.cols() + c2, true);
    }
  return C;
}

BitVec kron_vec(const BitVec& a, const BitVec& b) {
  BitVec c(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.get(i)) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b.get(j)) c.set(i * b.size() + j, true);
  }
  return c;
}

BitMat vstack(const std::vector<BitMat>& blocks) {
  if (blocks.empty()) return BitMat();
  std::size_t cols = blocks[0].cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  BitMat M(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) M.set_row(off + r, b.row(r));
    off += b.rows();
  }
  return M;
}

BitMat hstack(const std::vector<BitMat>& blocks) {
  if (blocks.empty()) return BitMat();
  std::size_t rows = blocks[0].rows(), cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += b.cols();
  }
  BitMat M(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (b.get(r, c)) M.set(r, off + c, true);
    off += b.cols();
  }
  return M;
}

BitMat block_matrix(const std::vector<std::vector<std::optional<BitMat>>>& blocks) {
  std::size_t br = blocks.size();
  if (br == 0) return BitMat();
  std::size_t bc = blocks[0].size();
  std::vector<std::size_t> rh(br, SIZE_MAX), cw(bc, SIZE_MAX);
  for (std::size_t i = 0; i < br; ++i)
    for (std::size_t j = 0; j < bc; ++j)
      if (blocks[i][j]) {
        const BitMat& m = *blocks[i][j];
        if (rh[i] != SIZE_MAX && rh[i] != m.rows())
          throw std::invalid_argument("block_matrix: row-height conflict");
        if (cw[j] != SIZE_MAX && cw[j] != m.cols())
          throw std::invalid_argument("block_matrix: column-width conflict");
        rh[i] = m.rows();
        cw[j] = m.cols();
      }
  for (std::size_t i = 0; i < br; ++i)
    if (rh[i] == SIZE_MAX)
      throw std::invalid_argument("block_matrix: row height undetermined");
  for (std::size_t j = 0; j < bc; ++j)
    if (cw[j] == SIZE_MAX)
      throw std::invalid_argument("block_matrix: column width undetermined");

  std::size_t rows = 0, cols = 0;
  for (auto h : rh) rows += h;
  for (auto w : cw) cols += w;
  BitMat M(rows, cols);
  std::size_t roff = 0;
  for (std::size_t i = 0; i < br; ++i) {
    std::size_t coff = 0;
    for (std::size_t j = 0; j < bc; ++j) {
      if (blocks[i][j]) {
        const BitMat& m = *blocks[i][j];
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) M.set(roff + r, coff + c, true);
      }
      coff += cw[j];
    }
    roff += rh[i];
  }
  return M;
}

RowBasis::RowBasis(const BitMat& M) {
  for (std::size_t r = 0; r < M.rows(); ++r) add(M.row(r));
}

bool RowBasis::add(BitVec v) {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.get(pivots_[i])) v ^= basis_[i];
  if (v.is_zero()) return false;
  std::size_t p = 0;
  while (!v.get(p)) ++p;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].get(p)) basis_[i] ^= v;
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowBasis::contains(BitVec v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.get(pivots_[i])) v ^= basis_[i];
  return v.is_zero();
}

Tensor3 reshape3(const BitVec& v, std::size_t n1, std::size_t n2, std::size_t n3) {
  if (v.size() != n1 * n2 * n3)
    throw std::invalid_argument("reshape3: length does not match dims");
  Tensor3 t(n1, n2, n3);
  for (std::size_t i : v.support()) {
    std::size_t k = i % n3, j = (i / n3) % n2, a = i / (n2 * n3);
    t.set(a, j, k, true);
  }
  return t;
}

BitVec flatten(const Tensor3& t) { return t.flat(); }

Tensor3 mode_product(const BitMat& A, const BitMat& B, const BitMat& C,
                     const Tensor3& V) {
  if (A.cols() != V.dim1() || B.cols() != V.dim2() || C.cols() != V.dim3())
    throw std::invalid_argument("mode_product: factor shape mismatch");
  // Mode 1.
  Tensor3 t1(A.rows(), V.dim2(), V.dim3());
  for (std::size_t a = 0; a < A.rows(); ++a)
    for (std::size_t i = 0; i < V.dim1(); ++i)
      if (A.get(a, i))
        for (std::size_t j = 0; j < V.dim2(); ++j)
          for (std::size_t k = 0; k < V.dim3(); ++k)
            if (V.get(i, j, k)) t1.set(a, j, k, t1.get(a, j, k) ^ 1);
  // Mode 2.
  Tensor3 t2(A.rows(), B.rows(), V.dim3());
  for (std::size_t b = 0; b < B.rows(); ++b)
    for (std::size_t j = 0; j < V.dim2(); ++j)
      if (B.get(b, j))
        for (std::size_t a = 0; a < A.rows(); ++a)
          for (std::size_t k = 0; k < V.dim3(); ++k)
            if (t1.get(a, j, k)) t2.set(a, b, k, t2.get(a, b, k) ^ 1);
  // Mode 3.
  Tensor3 t3(A.rows(), B.rows(), C.rows());
  for (std::size_t c = 0; c < C.rows(); ++c)
    for (std::size_t k = 0; k < V.dim3(); ++k)
      if (C.get(c, k))
        for (std::size_t a = 0; a < A.rows(); ++a)
          for (std::size_t b = 0; b < B.rows(); ++b)
            if (t2.get(a, b, k)) t3.set(a, b, c, t3.get(a, b, c) ^ 1);
  return t3;
}

BitMat read_pcm(std::istream& in) {
  std::string line;
  std::size_t rows = 0, cols = 0;
  bool have_header = false;
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      std::istringstream hs(line);
      if (!(hs >> rows >> cols)) throw std::runtime_error("pcm: bad header line");
      have_header = true;
      continue;
    }
    if (line.size() != cols) throw std::runtime_error("pcm: row length mismatch");
    body.push_back(line);
    if (body.size() == rows) break;
  }
  if (!have_header || body.size() != rows)
    throw std::runtime_error("pcm: truncated matrix");
  BitMat M(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      char ch = body[r][c];
      if (ch == '1') M.set(r, c, true);
      else if (ch != '0') throw std::runtime_error("pcm: bad character");
    }
  return M;
}

BitMat read_pcm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_pcm(in);
}

void write_pcm(std::ostream& out, const BitMat& M) {
  out << M.rows() << " " << M.cols() << "\n";
  for (std::size_t r = 0; r < M.rows(); ++r) out << M.row(r).to_string() << "\n";
}

void write_pcm_file(const std::string& path, const BitMat& M) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_pcm(out, M);
}

}  // namespace barriers

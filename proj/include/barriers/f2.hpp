#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// Dense GF(2) vectors and matrices, bit-packed into 64-bit words.
// Semantics are entrywise mod-2; packing is an implementation detail.
//
// Index convention for Kronecker products and reshaping: row-major with
// the LEFT factor outermost, i.e. kron(A,B) entry ((r1,r2),(c1,c2)) sits
// at row r1*B.rows+r2, column c1*B.cols+c2.  Every block formula in this
// project relies on this one convention.

namespace barriers {

class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
    BitVec(std::size_t n, std::initializer_list<int> bits);

    static BitVec unit(std::size_t n, std::size_t i);
    static BitVec ones(std::size_t n);
    static BitVec from_string(const std::string& s);  // "0110..."

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
      uint64_t m = uint64_t(1) << (i & 63);
      if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    std::size_t weight() const;
    bool is_zero() const;
    std::vector<std::size_t> support() const;

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }
    bool operator<(const BitVec& o) const;  // lexicographic on bit 0..n-1

    // Inner product mod 2.
    bool dot(const BitVec& o) const;

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }
    std::string to_string() const;

  private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const;
};

class BitMat {
  public:
    BitMat() = default;
    BitMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
          data_(rows * wpr_, 0) {}

    static BitMat identity(std::size_t n);
    static BitMat zero(std::size_t rows, std::size_t cols);
    static BitMat from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
      return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
      uint64_t m = uint64_t(1) << (c & 63);
      uint64_t& word = data_[r * wpr_ + (c >> 6)];
      if (v) word |= m; else word &= ~m;
    }

    BitVec row(std::size_t r) const;
    BitVec col(std::size_t c) const;
    void set_row(std::size_t r, const BitVec& v);
    void xor_row(std::size_t r, const BitVec& v);

    BitMat transpose() const;
    bool operator==(const BitMat& o) const;

    const uint64_t* row_words(std::size_t r) const { return data_.data() + r * wpr_; }
    std::size_t words_per_row() const { return wpr_; }

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

// ---- core operations ----

// A*v over GF(2); throws std::invalid_argument on shape mismatch.
BitVec mat_vec(const BitMat& A, const BitVec& v);

// A*B over GF(2).
BitMat mat_mul(const BitMat& A, const BitMat& B);

std::size_t rank(const BitMat& A);

// Linearly independent spanning set of {x : Ax = 0}; size = cols - rank.
std::vector<BitVec> kernel_basis(const BitMat& A);

// Some x with Ax = b when b is in the column span of A (pivot solution
// with free variables zero), std::nullopt otherwise.
std::optional<BitVec> solve(const BitMat& A, const BitVec& b);

BitMat kron(const BitMat& A, const BitMat& B);
BitVec kron_vec(const BitVec& a, const BitVec& b);

BitMat vstack(const std::vector<BitMat>& blocks);
BitMat hstack(const std::vector<BitMat>& blocks);
// General block assembly; empty optional means a zero block whose shape
// is inferred from its row/column neighbours.
BitMat block_matrix(const std::vector<std::vector<std::optional<BitMat>>>& blocks);

// Incremental echelon basis of a row space.  add() returns true when the
// vector enlarged the span; contains() tests membership.
class RowBasis {
  public:
    RowBasis() = default;
    explicit RowBasis(const BitMat& M);
    bool add(BitVec v);
    bool contains(BitVec v) const;
    std::size_t rank() const { return basis_.size(); }

  private:
    std::vector<BitVec> basis_;
    std::vector<std::size_t> pivots_;
};

// ---- 3-way tensor reshaping ----

class Tensor3 {
  public:
    Tensor3() = default;
    Tensor3(std::size_t n1, std::size_t n2, std::size_t n3)
        : n1_(n1), n2_(n2), n3_(n3), v_(n1 * n2 * n3) {}

    std::size_t dim1() const { return n1_; }
    std::size_t dim2() const { return n2_; }
    std::size_t dim3() const { return n3_; }

    bool get(std::size_t i, std::size_t j, std::size_t k) const {
      return v_.get((i * n2_ + j) * n3_ + k);
    }
    void set(std::size_t i, std::size_t j, std::size_t k, bool b) {
      v_.set((i * n2_ + j) * n3_ + k, b);
    }

    const BitVec& flat() const { return v_; }

  private:
    std::size_t n1_ = 0, n2_ = 0, n3_ = 0;
    BitVec v_;
};

Tensor3 reshape3(const BitVec& v, std::size_t n1, std::size_t n2, std::size_t n3);
BitVec flatten(const Tensor3& t);

// Applies A, B, C along modes 1, 2, 3; flatten(mode_product(A,B,C,reshape3(v)))
// equals kron(kron(A,B),C)*v.
Tensor3 mode_product(const BitMat& A, const BitMat& B, const BitMat& C,
                     const Tensor3& V);

// ---- "pcm v1" text format ----
// First line "<rows> <cols>", then rows lines of 0/1 characters.  Blank
// lines and lines starting with '#' are skipped.
BitMat read_pcm(std::istream& in);
BitMat read_pcm_file(const std::string& path);
void write_pcm(std::ostream& out, const BitMat& M);
void write_pcm_file(const std::string& path, const BitMat& M);

}  // namespace barriers

#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace widthkit {
namespace gf2 {

// Dense GF(2) vector, bit-packed into 64-bit words.
class BitVec {
public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }

  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::size_t(__builtin_popcountll(w));
    return c;
  }

  // Dot product over GF(2).
  bool dot(const BitVec& o) const {
    if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return __builtin_popcountll(acc) & 1;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Dense GF(2) matrix with bit-packed rows.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { r_[i].set(j, v); }
  void flip(std::size_t i, std::size_t j) { r_[i].flip(j); }

  BitVec& row(std::size_t i) { return r_[i]; }
  const BitVec& row(std::size_t i) const { return r_[i]; }

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && r_ == o.r_;
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) t.set(j, i, true);
    return t;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("BitMatrix shape mismatch");
    BitMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (a.get(i, k)) c.r_[i] ^= b.r_[k];
    return c;
  }

  BitVec apply(const BitVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix apply size mismatch");
    BitVec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y.set(i, r_[i].dot(x));
    return y;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BitVec> r_;
};

// Rank by Gaussian elimination, scanning pivot columns left to right.
inline std::size_t rank_forward(BitMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && !m.get(piv, col)) ++piv;
    if (piv == m.rows()) continue;
    std::swap(m.row(piv), m.row(rank));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != rank && m.get(i, col)) m.row(i) ^= m.row(rank);
    ++rank;
  }
  return rank;
}

// Independent elimination route: pivot columns scanned right to left and rows
// bottom-up.  Kept separate from rank_forward on purpose so the two can be
// cross-checked against each other.
inline std::size_t rank_reverse(BitMatrix m) {
  std::size_t rank = 0;
  std::size_t nrows = m.rows();
  for (std::size_t c = m.cols(); c-- > 0 && rank < nrows;) {
    std::size_t piv = nrows;
    for (std::size_t i = nrows - rank; i-- > 0;) {
      if (m.get(i, c)) {
        piv = i;
        break;
      }
    }
    if (piv == nrows) continue;
    std::size_t dst = nrows - rank - 1;
    std::swap(m.row(piv), m.row(dst));
    for (std::size_t i = 0; i < nrows; ++i)
      if (i != dst && m.get(i, c)) m.row(i) ^= m.row(dst);
    ++rank;
  }
  return rank;
}

// Solves A x = b over GF(2); returns false when inconsistent.  On success x
// is the solution whose free variables are all zero (deterministic).
inline bool solve(const BitMatrix& a, const BitVec& b, BitVec& x) {
  std::size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("gf2::solve size mismatch");
  // Augmented elimination.
  BitMatrix m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      if (a.get(i, j)) m.set(i, j, true);
    if (b.get(i)) m.set(i, cols, true);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && !m.get(piv, col)) ++piv;
    if (piv == rows) continue;
    std::swap(m.row(piv), m.row(rank));
    for (std::size_t i = 0; i < rows; ++i)
      if (i != rank && m.get(i, col)) m.row(i) ^= m.row(rank);
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (m.get(i, cols)) return false;
  x = BitVec(cols);
  for (std::size_t i = 0; i < rank; ++i)
    if (m.get(i, cols)) x.set(pivot_col[i], true);
  return true;
}

// Inverse of a square matrix; returns false when singular.
inline bool invert(const BitMatrix& a, BitMatrix& inv) {
  if (a.rows() != a.cols()) throw std::invalid_argument("gf2::invert expects square");
  std::size_t n = a.rows();
  BitMatrix m = a;
  inv = BitMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !m.get(piv, col)) ++piv;
    if (piv == n) return false;
    std::swap(m.row(piv), m.row(col));
    std::swap(inv.row(piv), inv.row(col));
    for (std::size_t i = 0; i < n; ++i) {
      if (i != col && m.get(i, col)) {
        m.row(i) ^= m.row(col);
        inv.row(i) ^= inv.row(col);
      }
    }
  }
  return true;
}

}  // namespace gf2
}  // namespace widthkit

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mcg/errors.hpp"

namespace mcg::gf2 {

using word_t = std::uint64_t;

inline constexpr int kWordBits = 64;

inline int words_for(int bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Bit-packed vector over GF(2). Dimension fixed at construction,
/// padding bits kept zero.
class Vector {
 public:
  explicit Vector(int dim) : dim_(dim), w_(words_for(dim), 0) {
    if (dim <= 0) throw ShapeError("Vector: dimension must be positive");
  }

  static Vector unit(int dim, int i) {
    Vector v(dim);
    v.set(i, true);
    return v;
  }

  int dim() const { return dim_; }

  bool get(int i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1u; }

  void set(int i, bool b) {
    if (i < 0 || i >= dim_) throw ShapeError("Vector::set: index out of range");
    word_t mask = word_t(1) << (i % kWordBits);
    if (b)
      w_[i / kWordBits] |= mask;
    else
      w_[i / kWordBits] &= ~mask;
  }

  void flip(int i) { set(i, !get(i)); }

  bool is_zero() const {
    for (word_t w : w_)
      if (w) return false;
    return true;
  }

  int weight() const {
    int n = 0;
    for (word_t w : w_) n += std::popcount(w);
    return n;
  }

  Vector& operator^=(const Vector& o) {
    require_same_dim(o);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  friend Vector operator^(Vector a, const Vector& b) { return a ^= b; }

  /// <x,y> with identity Gram matrix: parity of the AND.
  int dot(const Vector& o) const {
    require_same_dim(o);
    int n = 0;
    for (size_t k = 0; k < w_.size(); ++k) n += std::popcount(w_[k] & o.w_[k]);
    return n & 1;
  }

  bool operator==(const Vector& o) const { return dim_ == o.dim_ && w_ == o.w_; }

  std::span<const word_t> words() const { return w_; }
  std::span<word_t> words() { return w_; }

  /// Low-dim vectors (dim <= 64) as an integer code; bit i = coordinate i.
  std::uint64_t code() const {
    if (dim_ > kWordBits) throw ShapeError("Vector::code: dim > 64");
    return w_[0];
  }

  static Vector from_code(int dim, std::uint64_t code) {
    Vector v(dim);
    if (dim < kWordBits && (code >> dim) != 0)
      throw ShapeError("Vector::from_code: code out of range");
    v.w_[0] = code;
    return v;
  }

  std::string str() const;  // e.g. "{1,3,4}" with 1-based indices

 private:
  void require_same_dim(const Vector& o) const {
    if (dim_ != o.dim_) throw ShapeError("Vector: dimension mismatch");
  }

  int dim_;
  std::vector<word_t> w_;
};

/// Row-major bit-packed matrix over GF(2). Dimensions fixed at construction.
class Matrix {
 public:
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_(words_for(cols)), w_(size_t(rows) * wpr_, 0) {
    if (rows <= 0 || cols <= 0) throw ShapeError("Matrix: dimensions must be positive");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int i, int j) const {
    return (w_[size_t(i) * wpr_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }

  void set(int i, int j, bool b) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw ShapeError("Matrix::set: index out of range");
    word_t mask = word_t(1) << (j % kWordBits);
    word_t& w = w_[size_t(i) * wpr_ + j / kWordBits];
    if (b)
      w |= mask;
    else
      w &= ~mask;
  }

  std::span<const word_t> row(int i) const { return {w_.data() + size_t(i) * wpr_, size_t(wpr_)}; }
  std::span<word_t> row(int i) { return {w_.data() + size_t(i) * wpr_, size_t(wpr_)}; }

  void xor_row(int dst, int src) {
    word_t* d = w_.data() + size_t(dst) * wpr_;
    const word_t* s = w_.data() + size_t(src) * wpr_;
    for (int k = 0; k < wpr_; ++k) d[k] ^= s[k];
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    word_t* a = w_.data() + size_t(i) * wpr_;
    word_t* b = w_.data() + size_t(j) * wpr_;
    for (int k = 0; k < wpr_; ++k) std::swap(a[k], b[k]);
  }

  Vector row_vector(int i) const {
    Vector v(cols_);
    auto r = row(i);
    for (size_t k = 0; k < r.size(); ++k) v.words()[k] = r[k];
    return v;
  }

  void set_row(int i, const Vector& v) {
    if (v.dim() != cols_) throw ShapeError("Matrix::set_row: dimension mismatch");
    auto r = row(i);
    for (size_t k = 0; k < r.size(); ++k) r[k] = v.words()[k];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
  }

  bool is_identity() const;
  Matrix transpose() const;

  std::span<const word_t> raw() const { return w_; }

  /// 64-bit content hash (dimensions mixed in).
  std::uint64_t hash() const;

  std::string str() const;  // row-per-line 0/1 dump

 private:
  int rows_, cols_, wpr_;
  std::vector<word_t> w_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& m, const Vector& x);
Matrix mat_inverse(const Matrix& m);
Matrix mat_pow(const Matrix& m, long long e);
int rank(const Matrix& m);

/// x |-> x + <x,v> v  with <,> given by the symmetric matrix gram.
Matrix transvection(const Vector& v, const Matrix& gram);

/// Transvection with identity Gram.
Matrix transvection(const Vector& v);

/// If m equals a transvection I + v v^T (identity Gram), writes v to out and
/// returns true.
bool transvection_support(const Matrix& m, Vector& out);

}  // namespace mcg::gf2

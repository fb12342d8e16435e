#include "mcg/gf2.hpp"

#include <sstream>

namespace mcg::gf2 {

std::string Vector::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < dim_; ++i) {
    if (get(i)) {
      if (!first) os << ',';
      os << (i + 1);
      first = false;
    }
  }
  os << '}';
  return os.str();
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

std::uint64_t Matrix::hash() const {
  // splitmix64 over the packed words
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (std::uint64_t(rows_) << 32 | std::uint64_t(cols_));
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (word_t w : w_) h = mix(h ^ w) + 0x9e3779b97f4a7c15ull;
  return h;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (get(i, j) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("mat_mul: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  // row_i(ab) = XOR of row_k(b) over k with a_{ik} = 1
  for (int i = 0; i < a.rows(); ++i) {
    auto ra = a.row(i);
    auto ro = out.row(i);
    for (size_t wk = 0; wk < ra.size(); ++wk) {
      word_t bits = ra[wk];
      while (bits) {
        int k = int(wk) * kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        auto rb = b.row(k);
        for (size_t q = 0; q < ro.size(); ++q) ro[q] ^= rb[q];
      }
    }
  }
  return out;
}

Vector apply(const Matrix& m, const Vector& x) {
  if (m.cols() != x.dim()) throw ShapeError("apply: dimension mismatch");
  Vector y(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    auto xw = x.words();
    int n = 0;
    for (size_t k = 0; k < r.size(); ++k) n += std::popcount(r[k] & xw[k]);
    if (n & 1) y.set(i, true);
  }
  return y;
}

namespace {

// Gauss-Jordan over GF(2), first-set-bit pivoting. Returns rank; if inv is
// non-null and the matrix is square nonsingular, *inv receives the inverse.
int eliminate(Matrix a, Matrix* inv) {
  const int n = a.rows(), m = a.cols();
  Matrix b = inv ? Matrix::identity(n) : Matrix(1, 1);
  int rk = 0;
  for (int col = 0; col < m && rk < n; ++col) {
    int piv = -1;
    for (int r = rk; r < n; ++r)
      if (a.get(r, col)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.swap_rows(rk, piv);
    if (inv) b.swap_rows(rk, piv);
    for (int r = 0; r < n; ++r)
      if (r != rk && a.get(r, col)) {
        a.xor_row(r, rk);
        if (inv) b.xor_row(r, rk);
      }
    ++rk;
  }
  if (inv) {
    if (rk < n) throw SingularMatrixError("mat_inverse: matrix is singular");
    *inv = std::move(b);
  }
  return rk;
}

}  // namespace

Matrix mat_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("mat_inverse: matrix not square");
  Matrix inv(m.rows(), m.cols());
  eliminate(m, &inv);
  return inv;
}

Matrix mat_pow(const Matrix& m, long long e) {
  if (m.rows() != m.cols()) throw ShapeError("mat_pow: matrix not square");
  Matrix base = e >= 0 ? m : mat_inverse(m);
  unsigned long long k = e >= 0 ? (unsigned long long)e : (unsigned long long)(-e);
  Matrix acc = Matrix::identity(m.rows());
  while (k) {
    if (k & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    k >>= 1;
  }
  return acc;
}

int rank(const Matrix& m) { return eliminate(m, nullptr); }

Matrix transvection(const Vector& v, const Matrix& gram) {
  if (v.is_zero()) throw DegenerateClassError("transvection: zero class");
  if (gram.rows() != v.dim() || gram.cols() != v.dim())
    throw ShapeError("transvection: gram dimension mismatch");
  const int n = v.dim();
  // (t_v)_{ij} = delta_{ij} + v_i (G v)_j ; row_i = e_i + v_i * (G v)
  Vector gv = apply(gram, v);
  Matrix t = Matrix::identity(n);
  for (int i = 0; i < n; ++i) {
    if (!v.get(i)) continue;
    Vector r = t.row_vector(i);
    r ^= gv;
    t.set_row(i, r);
  }
  return t;
}

Matrix transvection(const Vector& v) { return transvection(v, Matrix::identity(v.dim())); }

bool transvection_support(const Matrix& m, Vector& out) {
  if (m.rows() != m.cols()) return false;
  const int n = m.rows();
  // m - I must have all nonzero columns equal to some v with v_j = 1 exactly
  // at the nonzero columns.
  Vector v(n);
  bool found = false;
  Matrix diff = m;
  for (int i = 0; i < n; ++i) diff.set(i, i, !diff.get(i, i));
  for (int j = 0; j < n; ++j) {
    Vector col(n);
    for (int i = 0; i < n; ++i)
      if (diff.get(i, j)) col.set(i, true);
    if (col.is_zero()) continue;
    if (!found) {
      v = col;
      found = true;
    } else if (!(v == col)) {
      return false;
    }
  }
  if (!found) return false;
  // columns j with nonzero entries must be exactly supp(v) (identity Gram)
  for (int j = 0; j < n; ++j) {
    bool nz = false;
    for (int i = 0; i < n; ++i) nz |= diff.get(i, j);
    if (nz != v.get(j)) return false;
  }
  out = v;
  return true;
}

}  // namespace mcg::gf2

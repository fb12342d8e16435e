#include <doctest.h>

#include <random>

#include "mcg/gf2.hpp"

using namespace mcg;
using gf2::Matrix;
using gf2::Vector;

namespace {

// random even-weight nonzero vector; the transvection about it is an
// involution (odd-weight classes give idempotent maps instead)
Vector random_even(int n, std::mt19937_64& rng) {
  Vector v(n);
  for (int i = 0; i < n; ++i)
    if (rng() & 1) v.set(i, true);
  if (v.weight() % 2 == 1) v.flip(0);
  if (v.is_zero()) {
    v.set(0, true);
    v.set(1, true);
  }
  return v;
}

// random invertible matrix: product of involutive transvections
Matrix random_invertible(int n, std::mt19937_64& rng) {
  Matrix m = Matrix::identity(n);
  for (int k = 0; k < 3 * n; ++k) m = mat_mul(m, gf2::transvection(random_even(n, rng)));
  return m;
}

}  // namespace

TEST_CASE("vector basics") {
  Vector v(10);
  v.set(0, true);
  v.set(2, true);
  v.set(3, true);
  CHECK(v.weight() == 3);
  CHECK(v.str() == "{1,3,4}");
  CHECK(v.code() == 0b1101);
  CHECK(Vector::from_code(10, 0b1101) == v);
  Vector u = Vector::unit(10, 2);
  CHECK(v.dot(u) == 1);
  CHECK(v.dot(v) == 1);  // odd weight
  CHECK_THROWS_AS(Vector(0), ShapeError);
  CHECK_THROWS_AS(v.set(10, true), ShapeError);
}

TEST_CASE("matrix multiply and apply agree") {
  std::mt19937_64 rng(1);
  for (int n : {3, 7, 19, 36, 70}) {
    Matrix a = random_invertible(n, rng), b = random_invertible(n, rng);
    Matrix ab = mat_mul(a, b);
    Vector x(n);
    for (int i = 0; i < n; ++i)
      if (rng() & 1) x.set(i, true);
    CHECK(gf2::apply(ab, x) == gf2::apply(a, gf2::apply(b, x)));
  }
}

TEST_CASE("inverse round trip") {
  std::mt19937_64 rng(2);
  for (int n : {2, 5, 21, 36}) {
    Matrix m = random_invertible(n, rng);
    CHECK(mat_mul(m, gf2::mat_inverse(m)).is_identity());
    CHECK(mat_mul(gf2::mat_inverse(m), m).is_identity());
    CHECK(gf2::rank(m) == n);
  }
  Matrix z(4, 4);
  CHECK(gf2::rank(z) == 0);
  CHECK_THROWS_AS(gf2::mat_inverse(z), SingularMatrixError);
}

TEST_CASE("mat_pow") {
  std::mt19937_64 rng(3);
  Matrix m = random_invertible(9, rng);
  CHECK(gf2::mat_pow(m, 0).is_identity());
  CHECK(gf2::mat_pow(m, 5) == mat_mul(m, gf2::mat_pow(m, 4)));
  CHECK(mat_mul(gf2::mat_pow(m, 3), gf2::mat_pow(m, -3)).is_identity());
}

TEST_CASE("transvection is a pairing-preserving involution") {
  std::mt19937_64 rng(4);
  for (int n : {5, 8, 27}) {
    Vector v = random_even(n, rng);
    Matrix t = gf2::transvection(v);
    CHECK(mat_mul(t, t).is_identity());
    CHECK(mat_mul(t.transpose(), t).is_identity());
    // x -> x + <x,v> v
    Vector x(n);
    x.set(n / 2, true);
    Vector expect = x;
    if (x.dot(v)) expect ^= v;
    CHECK(gf2::apply(t, x) == expect);
    Vector got(n);
    CHECK(gf2::transvection_support(t, got));
    CHECK(got == v);
  }
  CHECK_THROWS_AS(gf2::transvection(Vector(5)), DegenerateClassError);
}

TEST_CASE("hash distinguishes dimension and content") {
  Matrix a = Matrix::identity(4), b = Matrix::identity(5);
  CHECK(a.hash() != b.hash());
  Matrix c = a;
  c.set(0, 1, true);
  CHECK(a.hash() != c.hash());
}

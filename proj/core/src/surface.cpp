#include "mcg/surface.hpp"

#include <sstream>

namespace mcg::surface {

using gf2::Matrix;
using gf2::Vector;

GenusConfig::GenusConfig(int genus) : g(genus) {
  if (genus < 5) throw UnsupportedGenusError("genus must be >= 5");
  r = (g % 2 == 0) ? (g - 2) / 2 : (g - 1) / 2;
  h = (g - 1) / 2;
  cmax = (g % 2 == 0) ? r : r - 1;
}

std::string CurveName::str() const {
  const char* fam = nullptr;
  switch (family) {
    case CurveFamily::A: fam = "a"; break;
    case CurveFamily::B: fam = "b"; break;
    case CurveFamily::C: fam = "c"; break;
    case CurveFamily::Gamma: fam = "gamma"; break;
    case CurveFamily::Alpha: fam = "alpha"; break;
    case CurveFamily::Beta: fam = "beta"; break;
    case CurveFamily::D: fam = "d"; break;
  }
  return std::string(fam) + "_" + std::to_string(index);
}

std::string GeneratorName::str() const {
  switch (kind) {
    case GeneratorKind::T: return "T";
    case GeneratorKind::Rho1: return "rho1";
    case GeneratorKind::Rho2: return "rho2";
    case GeneratorKind::U: return "u_" + std::to_string(index);
    case GeneratorKind::V: return "v_" + std::to_string(index);
    case GeneratorKind::Y: return "y_" + std::to_string(index);
    case GeneratorKind::Twist: return "t[" + curve.str() + "]";
  }
  return "?";
}

Model::Model(const GenusConfig& cfg) : cfg_(cfg), qbasis_(cfg.g - 1, cfg.g) {
  for (int i = 1; i <= cfg_.g - 1; ++i) {
    qbasis_.set(i - 1, i - 1, true);
    qbasis_.set(i - 1, i, true);
  }
}

int Model::pairing(const HomologyClass& x, const HomologyClass& y) const {
  if (x.dim() != cfg_.g || y.dim() != cfg_.g)
    throw ShapeError("pairing: dimension mismatch");
  return x.dot(y);
}

HomologyClass Model::mu(int i) const {
  if (i < 1 || i > cfg_.g) throw UndefinedCurveError("mu index out of range");
  return Vector::unit(cfg_.g, i - 1);
}

HomologyClass Model::run(int start, int len) const {
  Vector v(cfg_.g);
  for (int k = 0; k < len; ++k) v.flip(((start - 1 + k) % cfg_.g + cfg_.g) % cfg_.g);
  return v;
}

HomologyClass Model::curve_class(const CurveName& name) const {
  const int i = name.index;
  switch (name.family) {
    case CurveFamily::A:
      if (i == 1 || i == 2) return run(1, 2 * i);
      if (i == 3) return lantern_class_a3();
      throw UndefinedCurveError("a_" + std::to_string(i) + " undefined");
    case CurveFamily::B:
      if (i < 1 || i > cfg_.r)
        throw UndefinedCurveError("b_" + std::to_string(i) + " undefined at g=" +
                                  std::to_string(cfg_.g));
      return run(2 * i, 2);
    case CurveFamily::C:
      if (i < 1 || i > cfg_.cmax)
        throw UndefinedCurveError("c_" + std::to_string(i) + " undefined at g=" +
                                  std::to_string(cfg_.g));
      return run(2 * i + 1, 2);
    case CurveFamily::Gamma:
      return run(i, 4);
    case CurveFamily::Alpha:
    case CurveFamily::Beta:
      return Vector(cfg_.g);  // null-homologous mod 2
    case CurveFamily::D:
      if (i == 1 || i == 2) return derived_class(i);
      throw UndefinedCurveError("d_" + std::to_string(i) + " undefined");
  }
  throw UndefinedCurveError("unknown curve family");
}

Matrix Model::perm_matrix(const std::vector<int>& sigma0) const {
  const int g = cfg_.g;
  Matrix m(g, g);
  // mu_i -> mu_sigma(i): column i has its 1 in row sigma(i), so row sigma(i)
  // is e_i.
  for (int i = 0; i < g; ++i) m.set(sigma0[size_t(i)], i, true);
  return m;
}

Matrix Model::swap_matrix(int a1, int b1) const {
  const int g = cfg_.g;
  int a = wrap1(a1) - 1, b = wrap1(b1) - 1;
  std::vector<int> sigma(static_cast<size_t>(g));
  for (int i = 0; i < g; ++i) sigma[size_t(i)] = i;
  std::swap(sigma[size_t(a)], sigma[size_t(b)]);
  return perm_matrix(sigma);
}

Matrix Model::rotation() const {
  const int g = cfg_.g;
  std::vector<int> sigma(static_cast<size_t>(g));
  for (int i = 0; i < g; ++i) sigma[size_t(i)] = (i + 1) % g;
  return perm_matrix(sigma);
}

Matrix Model::reflection1() const {
  const int g = cfg_.g;
  std::vector<int> sigma(static_cast<size_t>(g));
  for (int i = 0; i < g; ++i) sigma[size_t(i)] = ((2 - i) % g + g) % g;  // 1-based i -> 4-i
  return perm_matrix(sigma);
}

Matrix Model::reflection2() const {
  const int g = cfg_.g;
  std::vector<int> sigma(static_cast<size_t>(g));
  for (int i = 0; i < g; ++i) sigma[size_t(i)] = ((3 - i) % g + g) % g;  // 1-based i -> 5-i
  return perm_matrix(sigma);
}

Matrix Model::transposition_u(int i) const {
  if (i < 1 || i > cfg_.g - 1)
    throw UndefinedCurveError("u_" + std::to_string(i) + " undefined at g=" +
                              std::to_string(cfg_.g));
  return swap_matrix(i, i + 1);
}

Matrix Model::transposition_v(int i) const {
  if (i < 1 || i > cfg_.g)
    throw UndefinedCurveError("v_" + std::to_string(i) + " undefined at g=" +
                              std::to_string(cfg_.g));
  return swap_matrix(i, i + 2);
}

Matrix Model::crosscap_slide(int i) const {
  Vector v = mu(wrap1(i)) ^ mu(wrap1(i + 1));
  return mat_mul(gf2::transvection(v), transposition_u(i));
}

Matrix Model::twist(const CurveName& c) const {
  HomologyClass cls = curve_class(c);
  if (cls.is_zero())
    throw DegenerateClassError("twist about null-homologous curve " + c.str());
  return gf2::transvection(cls);
}

IsometryMatrix Model::generator_image(const GeneratorName& name) const {
  switch (name.kind) {
    case GeneratorKind::T: return {rotation(), name.str()};
    case GeneratorKind::Rho1: return {reflection1(), name.str()};
    case GeneratorKind::Rho2: return {reflection2(), name.str()};
    case GeneratorKind::U: return {transposition_u(name.index), name.str()};
    case GeneratorKind::V: return {transposition_v(name.index), name.str()};
    case GeneratorKind::Y: return {crosscap_slide(name.index), name.str()};
    case GeneratorKind::Twist: return {twist(name.curve), name.str()};
  }
  throw UndefinedWordError("unknown generator");
}

HomologyClass Model::canonical_class_w() const {
  return run(1, cfg_.g);
}

bool Model::preserves_pairing(const Matrix& m) const {
  if (m.rows() != cfg_.g || m.cols() != cfg_.g) return false;
  // M^T G M = G with G = I
  return mat_mul(m.transpose(), m).is_identity();
}

namespace {

// Coordinates of an even-weight x in the basis f_i = mu_i + mu_{i+1}:
// c_j = x_1 + ... + x_j (prefix parity).
Vector wperp_coords(const Vector& x) {
  const int g = x.dim();
  Vector c(g - 1);
  int acc = 0;
  for (int j = 0; j < g - 1; ++j) {
    acc ^= x.get(j) ? 1 : 0;
    if (acc) c.set(j, true);
  }
  return c;
}

}  // namespace

Matrix Model::quotient_action(const Matrix& m) const {
  if (!preserves_pairing(m))
    throw Error("quotient_action: input is not an isometry");
  const int g = cfg_.g;
  const int q = 2 * cfg_.h;
  Matrix out(q, q);
  for (int j = 0; j < q; ++j) {
    Vector fj = qbasis_.row_vector(j);
    Vector y = gf2::apply(m, fj);
    Vector c = wperp_coords(y);
    if (cfg_.even()) {
      // kill the c_{g-1} coordinate by adding w = f_1 + f_3 + ... + f_{g-1}
      if (c.get(g - 2)) {
        for (int k = 0; k < g - 1; k += 2) c.flip(k);
      }
    }
    for (int i = 0; i < q; ++i)
      if (c.get(i)) out.set(i, j, true);
  }
  return out;
}

Matrix Model::quotient_form() const {
  const int q = 2 * cfg_.h;
  Matrix j(q, q);
  for (int i = 0; i + 1 < q; ++i) {
    j.set(i, i + 1, true);
    j.set(i + 1, i, true);
  }
  return j;
}

HomologyClass Model::derived_class(int which) const {
  if (which != 1 && which != 2) throw UndefinedCurveError("d index must be 1 or 2");
  if (cfg_.g < 7) throw UnsupportedGenusError("derived classes need g >= 7");
  if (derived_.empty()) {
    auto tw = [&](CurveFamily f, int i) { return twist({f, i}); };
    Matrix A1 = tw(CurveFamily::A, 1), B1 = tw(CurveFamily::B, 1),
           B2 = tw(CurveFamily::B, 2), C1 = tw(CurveFamily::C, 1),
           C2 = tw(CurveFamily::C, 2);
    Matrix w2 = mat_mul(mat_mul(mat_mul(A1, B2), mat_mul(A1, C1)),
                        mat_mul(mat_mul(A1, C2), mat_mul(A1, B2)));
    HomologyClass d2 = gf2::apply(w2, curve_class({CurveFamily::A, 2}));
    Matrix w3 = mat_mul(mat_mul(mat_mul(C2, B1), mat_mul(C2, A1)),
                        mat_mul(mat_mul(C2, C1), mat_mul(C2, B1)));
    HomologyClass d1 = gf2::apply(w3, d2);
    derived_.push_back(d1);
    derived_.push_back(d2);
  }
  return derived_[size_t(which - 1)];
}

HomologyClass Model::lantern_class_a3() const {
  if (cfg_.g < 7) throw UnsupportedGenusError("a_3 needs g >= 7");
  return run(1, 6);
}

std::string Model::dump() const {
  std::ostringstream os;
  os << "genus " << cfg_.g << " r=" << cfg_.r << " h=" << cfg_.h << "\n";
  os << "curve classes:\n";
  auto line = [&](const CurveName& c) {
    os << "  " << c.str() << " = " << curve_class(c).str() << "\n";
  };
  line({CurveFamily::A, 1});
  line({CurveFamily::A, 2});
  for (int i = 1; i <= cfg_.r; ++i) line({CurveFamily::B, i});
  for (int i = 1; i <= cfg_.cmax; ++i) line({CurveFamily::C, i});
  for (int i = 1; i <= cfg_.g; ++i) line({CurveFamily::Gamma, i});
  if (cfg_.g >= 7) {
    line({CurveFamily::D, 1});
    line({CurveFamily::D, 2});
    os << "  a_3 = " << lantern_class_a3().str() << "\n";
  }
  os << "generators:\n";
  os << "  T: permutation i -> i+1\n";
  os << "  rho1: permutation i -> 4-i\n";
  os << "  rho2: permutation i -> 5-i\n";
  for (int i = 1; i <= cfg_.g - 1; ++i)
    os << "  u_" << i << ": swap {" << i << "," << i + 1 << "}\n";
  for (int i = 1; i <= cfg_.g; ++i)
    os << "  v_" << i << ": swap {" << wrap1(i) << "," << wrap1(i + 2) << "}\n";
  return os.str();
}

}  // namespace mcg::surface

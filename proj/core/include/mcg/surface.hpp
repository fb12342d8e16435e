#pragma once

#include <string>
#include <vector>

#include "mcg/gf2.hpp"

namespace mcg::surface {

/// Genus and the derived quantities used throughout the scripts.
struct GenusConfig {
  int g;     // >= 5
  int r;     // g = 2r+2 (even) or g = 2r+1 (odd)
  int h;     // floor((g-1)/2), symplectic half-dimension
  int cmax;  // largest valid c-index: r for even g, r-1 for odd g

  explicit GenusConfig(int genus);

  bool even() const { return g % 2 == 0; }
};

enum class CurveFamily { A, B, C, Gamma, Alpha, Beta, D };

struct CurveName {
  CurveFamily family;
  int index;  // 1-based

  std::string str() const;
};

using HomologyClass = gf2::Vector;

/// A pairing-preserving matrix together with where it came from.
struct IsometryMatrix {
  gf2::Matrix mat;
  std::string provenance;
};

enum class GeneratorKind { T, Rho1, Rho2, U, V, Y, Twist };

struct GeneratorName {
  GeneratorKind kind;
  int index = 0;        // for U, V, Y
  CurveName curve{CurveFamily::A, 1};  // for Twist

  std::string str() const;
};

/// Crosscap model of N_g: curve classes, generator images, the mod-2
/// intersection pairing (identity Gram in the crosscap basis) and the
/// symplectic quotient.
class Model {
 public:
  explicit Model(const GenusConfig& cfg);
  explicit Model(int genus) : Model(GenusConfig(genus)) {}

  const GenusConfig& cfg() const { return cfg_; }
  int dim() const { return cfg_.g; }

  gf2::Matrix gram() const { return gf2::Matrix::identity(cfg_.g); }

  int pairing(const HomologyClass& x, const HomologyClass& y) const;

  /// Basis class of crosscap i (1-based).
  HomologyClass mu(int i) const;

  /// The class spanned by crosscaps start..start+len-1 (1-based, wrap mod g).
  HomologyClass run(int start, int len) const;

  HomologyClass curve_class(const CurveName& name) const;

  IsometryMatrix generator_image(const GeneratorName& name) const;

  // Convenience accessors used by the ledger and tests.
  gf2::Matrix rotation() const;               // T
  gf2::Matrix reflection1() const;            // rho1: i -> 4-i (mod g)
  gf2::Matrix reflection2() const;            // rho2: i -> 5-i (mod g)
  gf2::Matrix transposition_u(int i) const;   // swap crosscaps i, i+1
  gf2::Matrix transposition_v(int i) const;   // swap crosscaps i, i+2
  gf2::Matrix crosscap_slide(int i) const;    // y_i = t_{mu_i+mu_{i+1}} u_i
  gf2::Matrix twist(const CurveName& c) const;

  /// All-ones class w; fixed by every isometry.
  HomologyClass canonical_class_w() const;

  bool preserves_pairing(const gf2::Matrix& m) const;

  /// Restriction of an isometry to w-perp (odd g) or its action on
  /// w-perp / <w> (even g); dimension 2h either way.
  gf2::Matrix quotient_action(const gf2::Matrix& m) const;

  /// The alternating Gram matrix of the quotient in the fixed basis.
  gf2::Matrix quotient_form() const;

  /// Rows: the w-perp basis f_i = mu_i + mu_{i+1}; exposed for tests.
  const gf2::Matrix& quotient_basis() const { return qbasis_; }

  /// Derived classes d_1, d_2 (defined for g >= 7), cached.
  HomologyClass derived_class(int which) const;

  /// Lantern-derived class a_3 = mu_1+...+mu_6 (needs g >= 7).
  HomologyClass lantern_class_a3() const;

  /// One line per generator: name and permutation/transvection support.
  std::string dump() const;

 private:
  gf2::Matrix perm_matrix(const std::vector<int>& sigma0) const;  // 0-based images
  gf2::Matrix swap_matrix(int a1, int b1) const;                  // 1-based crosscaps
  int wrap1(int i) const { return (i - 1) % cfg_.g + (((i - 1) % cfg_.g) < 0 ? cfg_.g : 0) + 1; }

  GenusConfig cfg_;
  gf2::Matrix qbasis_;
  mutable std::vector<HomologyClass> derived_;  // [d1, d2] lazily filled
};

}  // namespace mcg::surface

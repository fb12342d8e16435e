#include <doctest.h>

#include <random>

#include "mcg/surface.hpp"

using namespace mcg;
using surface::CurveFamily;
using surface::CurveName;
using surface::GenusConfig;
using surface::Model;

TEST_CASE("genus configuration") {
  GenusConfig c7(7);
  CHECK(c7.r == 3);
  CHECK(c7.h == 3);
  CHECK(c7.cmax == 2);
  CHECK_FALSE(c7.even());
  GenusConfig c8(8);
  CHECK(c8.r == 3);
  CHECK(c8.h == 3);
  CHECK(c8.cmax == 3);
  CHECK(c8.even());
  GenusConfig c26(26);
  CHECK(c26.r == 12);
  CHECK(c26.h == 12);
  CHECK(c26.cmax == 12);
  GenusConfig c27(27);
  CHECK(c27.r == 13);
  CHECK(c27.h == 13);
  CHECK(c27.cmax == 12);
  CHECK_THROWS_AS(GenusConfig(4), UnsupportedGenusError);
}

TEST_CASE("curve classes in the crosscap basis") {
  Model m(9);
  CHECK(m.curve_class({CurveFamily::A, 1}).str() == "{1,2}");
  CHECK(m.curve_class({CurveFamily::A, 2}).str() == "{1,2,3,4}");
  CHECK(m.curve_class({CurveFamily::A, 3}).str() == "{1,2,3,4,5,6}");
  CHECK(m.curve_class({CurveFamily::B, 1}).str() == "{2,3}");
  CHECK(m.curve_class({CurveFamily::B, 4}).str() == "{8,9}");
  CHECK(m.curve_class({CurveFamily::C, 1}).str() == "{3,4}");
  CHECK(m.curve_class({CurveFamily::C, 3}).str() == "{7,8}");
  CHECK(m.curve_class({CurveFamily::Gamma, 1}).str() == "{1,2,3,4}");
  CHECK(m.curve_class({CurveFamily::Gamma, 7}).str() == "{1,7,8,9}");
  CHECK(m.curve_class({CurveFamily::Alpha, 2}).is_zero());
  CHECK(m.curve_class({CurveFamily::Beta, 1}).is_zero());
  // c_4 does not exist at odd genus 9; b_5 is out of range
  CHECK_THROWS_AS(m.curve_class({CurveFamily::C, 4}), UndefinedCurveError);
  CHECK_THROWS_AS(m.curve_class({CurveFamily::B, 5}), UndefinedCurveError);
}

TEST_CASE("derived classes from the twist-word normal forms") {
  Model m(9);
  CHECK(m.derived_class(2).str() == "{1,2,5,6}");
  CHECK(m.derived_class(1).str() == "{3,4,5,6}");
}

TEST_CASE("rotation, reflections, transpositions") {
  for (int g : {5, 8, 9, 12}) {
    Model m(g);
    auto T = m.rotation();
    CHECK(gf2::mat_pow(T, g).is_identity());
    CHECK_FALSE(gf2::mat_pow(T, 1).is_identity());
    auto r1 = m.reflection1(), r2 = m.reflection2();
    CHECK(gf2::mat_mul(r1, r1).is_identity());
    CHECK(gf2::mat_mul(r2, r2).is_identity());
    CHECK(gf2::mat_mul(r2, r1) == T);
    // T u_i T^-1 = u_{i+1}
    for (int i = 1; i + 1 <= g - 1; ++i) {
      auto lhs = gf2::mat_mul(gf2::mat_mul(T, m.transposition_u(i)), gf2::mat_inverse(T));
      CHECK(lhs == m.transposition_u(i + 1));
    }
    // v_i = u_{i+1} u_i u_{i+1}
    auto v1 = gf2::mat_mul(gf2::mat_mul(m.transposition_u(2), m.transposition_u(1)),
                           m.transposition_u(2));
    CHECK(v1 == m.transposition_v(1));
    // y_i is an involution on homology
    for (int i = 1; i < g; ++i) {
      auto y = m.crosscap_slide(i);
      CHECK(gf2::mat_mul(y, y).is_identity());
    }
  }
}

TEST_CASE("every generator preserves the pairing and fixes w") {
  std::mt19937_64 rng(7);
  for (int g : {5, 7, 8, 19, 26, 27}) {
    Model m(g);
    auto w = m.canonical_class_w();
    std::vector<gf2::Matrix> gens = {m.rotation(), m.reflection1(), m.reflection2(),
                                     m.transposition_u(1), m.transposition_v(2),
                                     m.crosscap_slide(1),
                                     m.twist({CurveFamily::A, 1}),
                                     m.twist({CurveFamily::B, 1})};
    if (m.cfg().cmax >= 1) gens.push_back(m.twist({CurveFamily::C, 1}));
    for (const auto& f : gens) {
      CHECK(m.preserves_pairing(f));
      CHECK(gf2::apply(f, w) == w);
    }
    // random words also preserve the pairing and fix w
    gf2::Matrix acc = gf2::Matrix::identity(g);
    for (int k = 0; k < 40; ++k) {
      acc = gf2::mat_mul(acc, gens[rng() % gens.size()]);
      CHECK(m.preserves_pairing(acc));
      CHECK(gf2::apply(acc, w) == w);
    }
  }
}

TEST_CASE("conjugation moves twists along the induced map") {
  std::mt19937_64 rng(11);
  for (int g : {7, 9, 26}) {
    Model m(g);
    std::vector<gf2::Matrix> gens = {m.rotation(), m.reflection1(), m.transposition_u(3),
                                     m.twist({CurveFamily::B, 2})};
    gf2::Matrix f = gf2::Matrix::identity(g);
    for (int k = 0; k < 25; ++k) f = gf2::mat_mul(f, gens[rng() % gens.size()]);
    for (auto fam : {CurveFamily::A, CurveFamily::B, CurveFamily::C}) {
      CurveName c{fam, fam == CurveFamily::A ? 2 : 1};
      auto cls = m.curve_class(c);
      auto conj = gf2::mat_mul(gf2::mat_mul(f, m.twist(c)), gf2::mat_inverse(f));
      CHECK(conj == gf2::transvection(gf2::apply(f, cls)));
    }
  }
}

TEST_CASE("symplectic quotient") {
  for (int g : {7, 8, 9, 20}) {
    Model m(g);
    auto J = m.quotient_form();
    int d = 2 * m.cfg().h;
    CHECK(J.rows() == d);
    CHECK(gf2::rank(J) == d);
    std::vector<gf2::Matrix> gens = {m.rotation(), m.reflection2(), m.transposition_u(2),
                                     m.crosscap_slide(1), m.twist({CurveFamily::A, 2})};
    for (const auto& f : gens) {
      auto q = m.quotient_action(f);
      CHECK(gf2::mat_mul(gf2::mat_mul(q.transpose(), J), q) == J);
    }
    // quotient is a homomorphism
    auto qa = m.quotient_action(gens[0]);
    auto qb = m.quotient_action(gens[3]);
    CHECK(gf2::mat_mul(qa, qb) == m.quotient_action(gf2::mat_mul(gens[0], gens[3])));
  }
}

TEST_CASE("model dump lists the classes") {
  Model m8(8);
  auto d8 = m8.dump();
  CHECK(d8.find("genus 8 r=3 h=3") != std::string::npos);
  CHECK(d8.find("a_2 = {1,2,3,4}") != std::string::npos);
  CHECK(d8.find("c_3 = ") != std::string::npos);
  Model m9(9);
  auto d9 = m9.dump();
  CHECK(d9.find("c_3 = ") != std::string::npos);
  CHECK(d9.find("c_4 = ") == std::string::npos);
}

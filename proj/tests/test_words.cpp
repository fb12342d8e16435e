#include <doctest.h>

#include "mcg/word.hpp"

using namespace mcg;
using surface::Model;
using words::Bindings;

TEST_CASE("index expressions") {
  Bindings b{9, 4, 4, 3, 2};
  CHECK(words::eval_index_expr("g-1", b) == 8);
  CHECK(words::eval_index_expr("2*i-6", b) == -2);
  CHECK(words::eval_index_expr("r+2-i", b) == 4);
  CHECK(words::eval_index_expr("-(h-cmax)", b) == -1);
  CHECK(words::eval_index_expr("3*(i+1)", b) == 9);
  Bindings noi{9, 4, 4, 3, std::nullopt};
  CHECK_THROWS_AS(words::eval_index_expr("i+1", noi), UndefinedWordError);
  CHECK_THROWS_AS(words::eval_index_expr("q", b), UndefinedWordError);
  CHECK_THROWS_AS(words::eval_index_expr("2+", b), UndefinedWordError);
}

TEST_CASE("word parsing classifies factors") {
  Model m(9);
  Bindings b = Bindings::from(m.cfg());
  auto w = words::parse_word("T^-2 A_1 B_(r) u_(g-1)^-1 r2 W1 BiBi1_2^-1", b);
  REQUIRE(w.factors.size() == 7);
  using K = words::Factor::Kind;
  CHECK(w.factors[0].kind == K::Generator);
  CHECK(w.factors[0].exponent == -2);
  CHECK(w.factors[1].kind == K::Generator);
  CHECK(w.factors[2].kind == K::Generator);
  CHECK(w.factors[2].gen.curve.index == 4);
  CHECK(w.factors[3].gen.index == 8);
  CHECK(w.factors[3].exponent == -1);
  CHECK(w.factors[4].kind == K::Generator);
  CHECK(w.factors[5].kind == K::NameRef);
  CHECK(w.factors[5].name == "W1");
  CHECK(w.factors[6].kind == K::NameRef);
  CHECK(w.factors[6].name == "BiBi1_2");
  CHECK(w.factors[6].exponent == -1);
  CHECK_FALSE(words::all_name_refs(w));
  CHECK(words::all_name_refs(words::parse_word("W1 BiBi1_2^-1", b)));
  CHECK_THROWS_AS(words::parse_word("u_(g-1", b), UndefinedWordError);
  CHECK_THROWS_AS(words::parse_word("T^", b), UndefinedWordError);
}

TEST_CASE("evaluation is the expected homomorphism") {
  Model m(9);
  Bindings b = Bindings::from(m.cfg());
  auto ev = [&](const char* s) { return words::evaluate(words::parse_word(s, b), m); };
  // leftmost factor applied last: (r2 r1)(x) = r2(r1(x)) = T(x)
  CHECK(ev("r2 r1") == m.rotation());
  CHECK(ev("T^9").is_identity());
  CHECK(ev("T^-2") == gf2::mat_pow(m.rotation(), 7));
  CHECK(ev("A_1") == m.twist({surface::CurveFamily::A, 1}));
  CHECK(ev("G_3") == m.twist({surface::CurveFamily::Gamma, 3}));
  CHECK(ev("y_2 y_2").is_identity());
  CHECK(ev("T u_1 T^-1") == m.transposition_u(2));
  CHECK(ev("u_2 u_1 u_2") == m.transposition_v(1));
  // name references resolve through the provided table
  auto w = words::parse_word("X^-1 u_3", b);
  gf2::Matrix x = m.rotation();
  auto resolver = [&](const std::string& n) -> const gf2::Matrix* {
    return n == "X" ? &x : nullptr;
  };
  CHECK(words::evaluate(w, m, resolver) ==
        gf2::mat_mul(gf2::mat_inverse(x), m.transposition_u(3)));
  CHECK_THROWS_AS(words::evaluate(words::parse_word("Nope", b), m), UndefinedWordError);
  CHECK_THROWS_AS(ev("B_7"), UndefinedCurveError);  // r = 4 at g = 9
}

TEST_CASE("curve lists") {
  Model m(9);
  Bindings b = Bindings::from(m.cfg());
  b.i = 2;
  auto cs = words::parse_curves("a_1,b_(i+1),c_(cmax)", b);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].family == surface::CurveFamily::A);
  CHECK(cs[0].index == 1);
  CHECK(cs[1].family == surface::CurveFamily::B);
  CHECK(cs[1].index == 3);
  CHECK(cs[2].family == surface::CurveFamily::C);
  CHECK(cs[2].index == 3);
  auto ds = words::parse_curves("d_2,gamma_7", b);
  CHECK(ds[0].family == surface::CurveFamily::D);
  CHECK(ds[1].family == surface::CurveFamily::Gamma);
  CHECK_THROWS_AS(words::parse_curves("z_1", b), UndefinedCurveError);
}

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/surface.hpp"

namespace mcg::words {

/// Variables available in index expressions.
struct Bindings {
  int g = 0;
  int r = 0;
  int h = 0;
  int cmax = 0;
  std::optional<int> i;  // foreach loop variable

  static Bindings from(const surface::GenusConfig& cfg) {
    return {cfg.g, cfg.r, cfg.h, cfg.cmax, std::nullopt};
  }
};

/// Evaluates arithmetic over +, -, *, parentheses and the variables above.
int eval_index_expr(std::string_view expr, const Bindings& b);

struct Factor {
  enum class Kind { Generator, NameRef };
  Kind kind;
  surface::GeneratorName gen;  // Generator: index already resolved
  std::string name;            // NameRef: resolved name, e.g. "BiBi1_4"
  long long exponent = 1;
};

/// A parsed word: ordered product, leftmost factor applied last.
struct Word {
  std::vector<Factor> factors;
  std::string text;  // source text, kept for reports
};

/// Parses a whitespace-separated word. Single-letter bases u,v,y (crosscap
/// moves) and A,B,C,G,D (twists; G is the gamma twist) plus T, r1, r2 are
/// generators; anything else is a name reference.
Word parse_word(std::string_view text, const Bindings& b);

/// Curve list "a_2,b_(r)" -> CurveNames. Families: a,b,c,gamma,alpha,beta,d.
std::vector<surface::CurveName> parse_curves(std::string_view text, const Bindings& b);

using NameResolver = std::function<const gf2::Matrix*(const std::string&)>;

/// Word-to-matrix homomorphism. Name references are resolved through the
/// resolver; generator factors through the model. Throws UndefinedWordError
/// on an unresolvable name.
gf2::Matrix evaluate(const Word& w, const surface::Model& model, const NameResolver& resolve);

/// Evaluate a word containing only raw generator factors.
gf2::Matrix evaluate(const Word& w, const surface::Model& model);

/// True if every factor is a name reference (the membership discipline for
/// derivation words).
bool all_name_refs(const Word& w);

std::string render(const Word& w);

}  // namespace mcg::words

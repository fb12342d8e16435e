#include "mcg/gensets.hpp"

#include "mcg/word.hpp"

namespace mcg::gensets {

using gf2::Matrix;
using surface::Model;

namespace {

std::vector<Matrix> from_words(const Model& m, const std::vector<std::string>& texts) {
  words::Bindings b = words::Bindings::from(m.cfg());
  std::vector<Matrix> out;
  for (const auto& t : texts) out.push_back(words::evaluate(words::parse_word(t, b), m));
  return out;
}

}  // namespace

std::vector<Matrix> twist_pair_set(const Model& m) {
  return from_words(m, {"T", "A_1 A_2^-1", "B_1 B_2^-1", "u_1"});
}

std::vector<Matrix> two_element_set(const Model& m) {
  return from_words(m, {"T", "u_(g-1) G_10 C_2^-1"});
}

std::vector<Matrix> involution_set(const Model& m) {
  if (m.cfg().even()) return from_words(m, {"r1", "r2", "r2 A_2 B_(r) B_3 u_(r+3)"});
  return from_words(m, {"r1", "r2", "r2 A_2 C_(r-1) B_3 v_(r+2)"});
}

std::vector<Matrix> twist_slide_set(const Model& m) {
  std::vector<std::string> texts{"A_1", "A_2"};
  for (int i = 1; i <= m.cfg().r; ++i) texts.push_back("B_" + std::to_string(i));
  for (int i = 1; i <= m.cfg().cmax; ++i) texts.push_back("C_" + std::to_string(i));
  texts.push_back("y_1");
  return from_words(m, texts);
}

std::vector<Matrix> dihedral_set(const Model& m) { return from_words(m, {"r1", "r2"}); }

std::vector<Matrix> quotient_images(const Model& m, const std::vector<Matrix>& gens) {
  std::vector<Matrix> out;
  for (const auto& g : gens) out.push_back(m.quotient_action(g));
  return out;
}

std::vector<Matrix> named_set(const Model& m, const std::string& name) {
  if (name == "thm21") return twist_pair_set(m);
  if (name == "thmA") return two_element_set(m);
  if (name == "thmB") return involution_set(m);
  if (name == "twistslide") return twist_slide_set(m);
  if (name == "dihedral") return dihedral_set(m);
  throw Error("unknown generator set '" + name + "'");
}

}  // namespace mcg::gensets

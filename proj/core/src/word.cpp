#include "mcg/word.hpp"

#include <cctype>
#include <sstream>

namespace mcg::words {

using surface::CurveFamily;
using surface::CurveName;
using surface::GeneratorKind;
using surface::GeneratorName;

namespace {

struct ExprParser {
  std::string_view s;
  size_t pos = 0;
  const Bindings& b;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw UndefinedWordError("index expression '" + std::string(s) + "': " + msg);
  }

  int parse_expr() {
    int v = parse_term();
    for (;;) {
      skip_ws();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        char op = s[pos++];
        int t = parse_term();
        v = op == '+' ? v + t : v - t;
      } else {
        return v;
      }
    }
  }

  int parse_term() {
    int v = parse_atom();
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        v *= parse_atom();
      } else {
        return v;
      }
    }
  }

  int parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '-') {
      ++pos;
      return -parse_atom();
    }
    if (c == '(') {
      ++pos;
      int v = parse_expr();
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') fail("missing ')'");
      ++pos;
      return v;
    }
    if (std::isdigit((unsigned char)c)) {
      int v = 0;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
        v = v * 10 + (s[pos++] - '0');
      return v;
    }
    if (std::isalpha((unsigned char)c)) {
      std::string var;
      while (pos < s.size() && std::isalnum((unsigned char)s[pos])) var += s[pos++];
      if (var == "g") return b.g;
      if (var == "r") return b.r;
      if (var == "h") return b.h;
      if (var == "cmax") return b.cmax;
      if (var == "i") {
        if (!b.i) fail("loop variable i unbound");
        return *b.i;
      }
      fail("unknown variable '" + var + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

int eval_index_expr(std::string_view expr, const Bindings& b) {
  ExprParser p{expr, 0, b};
  int v = p.parse_expr();
  p.skip_ws();
  if (p.pos != expr.size()) p.fail("trailing input");
  return v;
}

namespace {

// Splits a factor token into base, optional index expression, optional
// exponent expression: "u_(g-1)^-1" -> ("u", "g-1", "-1").
void split_factor(std::string_view tok, std::string& base, std::string& idx, std::string& exp) {
  size_t p = 0;
  while (p < tok.size() && tok[p] != '_' && tok[p] != '^') ++p;
  base = std::string(tok.substr(0, p));
  idx.clear();
  exp.clear();
  if (p < tok.size() && tok[p] == '_') {
    ++p;
    if (p < tok.size() && tok[p] == '(') {
      int depth = 0;
      size_t start = ++p;
      while (p < tok.size()) {
        if (tok[p] == '(') ++depth;
        if (tok[p] == ')') {
          if (depth == 0) break;
          --depth;
        }
        ++p;
      }
      if (p >= tok.size()) throw UndefinedWordError("unbalanced index in '" + std::string(tok) + "'");
      idx = std::string(tok.substr(start, p - start));
      ++p;
    } else {
      size_t start = p;
      while (p < tok.size() && tok[p] != '^') ++p;
      idx = std::string(tok.substr(start, p - start));
    }
  }
  if (p < tok.size() && tok[p] == '^') {
    exp = std::string(tok.substr(p + 1));
    if (exp.empty()) throw UndefinedWordError("empty exponent in '" + std::string(tok) + "'");
    if (exp.front() == '(') {
      if (exp.back() != ')') throw UndefinedWordError("unbalanced exponent in '" + std::string(tok) + "'");
      exp = exp.substr(1, exp.size() - 2);
    }
  } else if (p < tok.size()) {
    throw UndefinedWordError("malformed factor '" + std::string(tok) + "'");
  }
}

bool is_twist_letter(char c) { return c == 'A' || c == 'B' || c == 'C' || c == 'G' || c == 'D'; }
bool is_perm_letter(char c) { return c == 'u' || c == 'v' || c == 'y'; }

CurveFamily twist_family(char c) {
  switch (c) {
    case 'A': return CurveFamily::A;
    case 'B': return CurveFamily::B;
    case 'C': return CurveFamily::C;
    case 'G': return CurveFamily::Gamma;
    case 'D': return CurveFamily::D;
  }
  throw UndefinedWordError("bad twist letter");
}

}  // namespace

Word parse_word(std::string_view text, const Bindings& b) {
  Word w;
  w.text = std::string(text);
  std::istringstream in{w.text};
  std::string tok;
  while (in >> tok) {
    std::string base, idx, exp;
    split_factor(tok, base, idx, exp);
    Factor f;
    f.exponent = exp.empty() ? 1 : eval_index_expr(exp, b);
    if (base == "T" && idx.empty()) {
      f.kind = Factor::Kind::Generator;
      f.gen = {GeneratorKind::T};
    } else if (base == "r1" && idx.empty()) {
      f.kind = Factor::Kind::Generator;
      f.gen = {GeneratorKind::Rho1};
    } else if (base == "r2" && idx.empty()) {
      f.kind = Factor::Kind::Generator;
      f.gen = {GeneratorKind::Rho2};
    } else if (base.size() == 1 && !idx.empty() &&
               (is_perm_letter(base[0]) || is_twist_letter(base[0]))) {
      int index = eval_index_expr(idx, b);
      f.kind = Factor::Kind::Generator;
      if (is_perm_letter(base[0])) {
        GeneratorKind k = base[0] == 'u'   ? GeneratorKind::U
                          : base[0] == 'v' ? GeneratorKind::V
                                           : GeneratorKind::Y;
        f.gen = {k, index};
      } else {
        f.gen = {GeneratorKind::Twist, 0, CurveName{twist_family(base[0]), index}};
      }
    } else {
      f.kind = Factor::Kind::NameRef;
      f.name = base;
      if (!idx.empty()) f.name += "_" + std::to_string(eval_index_expr(idx, b));
    }
    w.factors.push_back(std::move(f));
  }
  return w;
}

std::vector<CurveName> parse_curves(std::string_view text, const Bindings& b) {
  std::vector<CurveName> out;
  std::string item;
  std::string src(text);
  std::istringstream in(src);
  while (std::getline(in, item, ',')) {
    size_t us = item.find('_');
    if (us == std::string::npos)
      throw UndefinedCurveError("curve token '" + item + "' missing index");
    std::string fam = item.substr(0, us);
    std::string idx = item.substr(us + 1);
    if (!idx.empty() && idx.front() == '(' && idx.back() == ')')
      idx = idx.substr(1, idx.size() - 2);
    CurveFamily f;
    if (fam == "a") f = CurveFamily::A;
    else if (fam == "b") f = CurveFamily::B;
    else if (fam == "c") f = CurveFamily::C;
    else if (fam == "gamma") f = CurveFamily::Gamma;
    else if (fam == "alpha") f = CurveFamily::Alpha;
    else if (fam == "beta") f = CurveFamily::Beta;
    else if (fam == "d") f = CurveFamily::D;
    else throw UndefinedCurveError("unknown curve family '" + fam + "'");
    out.push_back({f, eval_index_expr(idx, b)});
  }
  return out;
}

gf2::Matrix evaluate(const Word& w, const surface::Model& model, const NameResolver& resolve) {
  gf2::Matrix acc = gf2::Matrix::identity(model.dim());
  for (const Factor& f : w.factors) {
    gf2::Matrix m(1, 1);
    if (f.kind == Factor::Kind::NameRef) {
      const gf2::Matrix* found = resolve ? resolve(f.name) : nullptr;
      if (!found)
        throw UndefinedWordError("unresolved name '" + f.name + "' in word '" + w.text + "'");
      m = *found;
    } else {
      m = model.generator_image(f.gen).mat;
    }
    acc = mat_mul(acc, mat_pow(m, f.exponent));
  }
  return acc;
}

gf2::Matrix evaluate(const Word& w, const surface::Model& model) {
  return evaluate(w, model, nullptr);
}

bool all_name_refs(const Word& w) {
  for (const Factor& f : w.factors)
    if (f.kind != Factor::Kind::NameRef) return false;
  return true;
}

std::string render(const Word& w) { return w.text; }

}  // namespace mcg::words

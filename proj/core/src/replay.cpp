#include "mcg/replay.hpp"

#include <sstream>

namespace mcg::replay {

using gf2::Matrix;
using scripts::DerivationStep;
using scripts::ProofScript;
using scripts::StepKind;
using surface::CurveFamily;
using surface::GeneratorKind;
using words::Bindings;
using words::Factor;
using words::Word;

std::pair<std::uint64_t, std::string> MembershipLedger::key_of(const Matrix& m) {
  auto raw = m.raw();
  std::string bytes(reinterpret_cast<const char*>(raw.data()), raw.size() * sizeof(gf2::word_t));
  return {m.hash(), std::move(bytes)};
}

bool MembershipLedger::establish(const std::string& name, const Matrix& m,
                                 const std::string& origin) {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) return it->second == m;
  by_name_.emplace(name, m);
  origin_.emplace(name, origin);
  matrix_keys_.insert(key_of(m));
  order_.push_back(name);
  return true;
}

const Matrix* MembershipLedger::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &it->second;
}

bool MembershipLedger::contains_matrix(const Matrix& m) const {
  return matrix_keys_.count(key_of(m)) > 0;
}

std::string MembershipLedger::origin_of(const std::string& name) const {
  auto it = origin_.find(name);
  return it == origin_.end() ? std::string() : it->second;
}

namespace {

bool valid_generator_index(const surface::GenusConfig& cfg, const Factor& f, int idx) {
  switch (f.gen.kind) {
    case GeneratorKind::U: return idx >= 1 && idx <= cfg.g - 1;
    case GeneratorKind::V: return idx >= 1 && idx <= cfg.g;
    case GeneratorKind::Y: return idx >= 1 && idx <= cfg.g - 1;
    case GeneratorKind::Twist:
      switch (f.gen.curve.family) {
        case CurveFamily::A: return idx >= 1 && idx <= (cfg.g >= 7 ? 3 : 2);
        case CurveFamily::B: return idx >= 1 && idx <= cfg.r;
        case CurveFamily::C: return idx >= 1 && idx <= cfg.cmax;
        case CurveFamily::Gamma: return true;
        case CurveFamily::D: return idx >= 1 && idx <= 2;
        default: return false;
      }
    default: return false;
  }
}

// Shifts the first indexed generator atom of w by one (prefers +1, falls
// back to -1 when out of range). Returns false when nothing is mutable.
bool mutate_word(const surface::GenusConfig& cfg, Word& w) {
  for (Factor& f : w.factors) {
    if (f.kind != Factor::Kind::Generator) continue;
    int* idx = nullptr;
    if (f.gen.kind == GeneratorKind::U || f.gen.kind == GeneratorKind::V ||
        f.gen.kind == GeneratorKind::Y)
      idx = &f.gen.index;
    else if (f.gen.kind == GeneratorKind::Twist)
      idx = &f.gen.curve.index;
    if (!idx) continue;
    if (valid_generator_index(cfg, f, *idx + 1)) {
      ++*idx;
      return true;
    }
    if (valid_generator_index(cfg, f, *idx - 1)) {
      --*idx;
      return true;
    }
  }
  return false;
}

bool valid_curve_index(const surface::GenusConfig& cfg, CurveFamily fam, int idx) {
  switch (fam) {
    case CurveFamily::A: return idx >= 1 && idx <= (cfg.g >= 7 ? 3 : 2);
    case CurveFamily::B: return idx >= 1 && idx <= cfg.r;
    case CurveFamily::C: return idx >= 1 && idx <= cfg.cmax;
    case CurveFamily::Gamma: return true;
    case CurveFamily::D: return idx >= 1 && idx <= 2;
    default: return false;  // alpha/beta carry the zero class; not mutable
  }
}

bool mutate_curves(const surface::GenusConfig& cfg, std::vector<surface::CurveName>& cs) {
  for (auto& c : cs) {
    if (c.family == CurveFamily::Alpha || c.family == CurveFamily::Beta) continue;
    if (valid_curve_index(cfg, c.family, c.index + 1)) {
      ++c.index;
      return true;
    }
    if (valid_curve_index(cfg, c.family, c.index - 1)) {
      --c.index;
      return true;
    }
  }
  return false;
}

struct ReplayContext {
  const scripts::ScriptLibrary& lib;
  const surface::Model& model;
  MembershipLedger ledger;
  ProofReport report;
  const Perturbation* perturb = nullptr;
  std::vector<std::string>* perturbable = nullptr;

  words::NameResolver resolver() {
    return [this](const std::string& n) { return ledger.find(n); };
  }

  // Branch guard "r=16,17,18" / "r!=16,17,18".
  bool guard_selects(const std::string& when) const {
    if (when.empty()) return true;
    bool negate = false;
    size_t eq = when.find("!=");
    size_t valpos;
    if (eq != std::string::npos) {
      negate = true;
      valpos = eq + 2;
    } else {
      eq = when.find('=');
      if (eq == std::string::npos) throw ScriptParseError("bad guard '" + when + "'");
      valpos = eq + 1;
    }
    std::string var = when.substr(0, eq);
    int actual;
    const auto& cfg = model.cfg();
    if (var == "r") actual = cfg.r;
    else if (var == "g") actual = cfg.g;
    else throw ScriptParseError("bad guard variable '" + var + "'");
    bool in_list = false;
    std::istringstream vs(when.substr(valpos));
    std::string item;
    while (std::getline(vs, item, ',')) in_list |= std::stoi(item) == actual;
    return negate ? !in_list : in_list;
  }

  void run_step(const DerivationStep& st, const std::string& expanded_id, const Bindings& b) {
    StepRecord rec;
    rec.id = expanded_id;
    rec.kind = st.kind;
    rec.anchor = st.anchor;
    const auto& cfg = model.cfg();
    const bool mutate = perturb && perturb->target_id == expanded_id;
    try {
      Word def = words::parse_word(st.def, b);
      switch (st.kind) {
        case StepKind::Membership:
        case StepKind::Identity: {
          bool factors_ok = true;
          if (!st.name.empty()) {
            // membership discipline: every def factor must already be
            // established, by name or as a hypothesis generator matrix
            for (const Factor& f : def.factors) {
              if (f.kind == Factor::Kind::NameRef) {
                if (!ledger.find(f.name)) {
                  factors_ok = false;
                  rec.detail = "unestablished name " + f.name;
                }
              } else if (!ledger.contains_matrix(model.generator_image(f.gen).mat)) {
                factors_ok = false;
                rec.detail = "factor " + f.gen.str() + " not established";
              }
            }
          }
          if (!factors_ok) {
            rec.pass = false;
            break;
          }
          Matrix lhs = words::evaluate(def, model, resolver());
          bool equal = true;
          if (!st.claim.empty()) {
            Word claim = words::parse_word(st.claim, b);
            bool mutable_claim = false;
            if (mutate || perturbable) {
              Word probe = claim;
              mutable_claim = mutate_word(cfg, probe);
              if (mutate) claim = probe;
            }
            if (perturbable && mutable_claim) perturbable->push_back(expanded_id);
            Matrix rhs = words::evaluate(claim, model, resolver());
            equal = lhs == rhs;
            if (!equal) {
              std::ostringstream d;
              d << "lhs hash " << std::hex << lhs.hash() << " != rhs hash " << rhs.hash();
              rec.detail = d.str();
            }
          }
          rec.pass = equal;
          if (rec.pass && !st.name.empty()) {
            std::string nm = st.name;
            size_t us = nm.find('_');
            if (us != std::string::npos) {
              std::string idx = nm.substr(us + 1);
              nm = nm.substr(0, us) + "_" + std::to_string(words::eval_index_expr(idx, b));
            }
            if (!ledger.establish(nm, lhs, expanded_id)) {
              rec.pass = false;
              rec.detail = "name " + nm + " already bound to a different matrix";
            }
          }
          break;
        }
        case StepKind::Mapsto: {
          Matrix m = words::evaluate(def, model, resolver());
          auto from = words::parse_curves(st.from, b);
          auto to = words::parse_curves(st.to, b);
          if (from.size() != to.size())
            throw UndefinedCurveError("mapsto lists differ in length");
          bool mutable_to = false;
          if (mutate || perturbable) {
            auto probe = to;
            mutable_to = mutate_curves(cfg, probe);
            if (mutate) to = probe;
          }
          if (perturbable && mutable_to) perturbable->push_back(expanded_id);
          rec.pass = true;
          for (size_t k = 0; k < from.size(); ++k) {
            auto img = gf2::apply(m, model.curve_class(from[k]));
            if (!(img == model.curve_class(to[k]))) {
              rec.pass = false;
              rec.detail = from[k].str() + " maps to " + img.str() + ", expected class of " +
                           to[k].str();
              break;
            }
          }
          break;
        }
        case StepKind::Involution: {
          bool mutable_def = false;
          if (mutate || perturbable) {
            Word probe = def;
            mutable_def = mutate_word(cfg, probe);
            if (mutate) def = probe;
          }
          if (perturbable && mutable_def) perturbable->push_back(expanded_id);
          Matrix m = words::evaluate(def, model, resolver());
          rec.pass = mat_mul(m, m).is_identity();
          if (!rec.pass) rec.detail = "square is not the identity";
          break;
        }
      }
    } catch (const Error& e) {
      rec.pass = false;
      rec.detail = e.what();
    }
    report.steps.push_back(std::move(rec));
  }

  void run_items(const ProofScript& sc, const std::string& prefix) {
    Bindings base = Bindings::from(model.cfg());
    for (const auto& item : sc.items) {
      if (item.type == ProofScript::Item::Type::Include) {
        const ProofScript& inc = lib.get(item.include_id);
        inc.check_genus(model.cfg());
        bool hyps_ok = true;
        for (const auto& h : inc.hyps) {
          if (h.aux) continue;
          if (!ledger.find(h.name)) {
            StepRecord rec;
            rec.id = prefix + item.include_prefix + ":include";
            rec.kind = scripts::StepKind::Membership;
            rec.pass = false;
            rec.detail = "include " + item.include_id + ": hypothesis " + h.name +
                         " not established in including script";
            report.steps.push_back(std::move(rec));
            hyps_ok = false;
          }
        }
        if (hyps_ok) run_items(inc, prefix + item.include_prefix + ":");
        continue;
      }
      const DerivationStep& st = item.step;
      if (!guard_selects(st.when)) continue;
      if (st.foreach_.empty()) {
        run_step(st, prefix + st.id, base);
      } else {
        // "i=lo..hi" with expression bounds
        size_t eq = st.foreach_.find('=');
        size_t dots = st.foreach_.find("..");
        if (eq == std::string::npos || dots == std::string::npos)
          throw ScriptParseError("bad foreach '" + st.foreach_ + "'");
        int lo = words::eval_index_expr(st.foreach_.substr(eq + 1, dots - eq - 1), base);
        int hi = words::eval_index_expr(st.foreach_.substr(dots + 2), base);
        for (int i = lo; i <= hi; ++i) {
          Bindings b = base;
          b.i = i;
          run_step(st, prefix + st.id + "[i=" + std::to_string(i) + "]", b);
        }
      }
    }
  }
};

}  // namespace

static ProofReport replay_with(const scripts::ScriptLibrary& lib, const std::string& script_id,
                        const surface::Model& model, const Perturbation* perturb,
                        std::vector<std::string>* collect) {
  const ProofScript& sc = lib.get(script_id);
  sc.check_genus(model.cfg());
  ReplayContext ctx{lib, model};
  ctx.perturb = perturb;
  ctx.perturbable = collect;
  ctx.report.script_id = script_id;
  ctx.report.genus = model.cfg().g;
  Bindings b = Bindings::from(model.cfg());
  for (const auto& h : sc.hyps) {
    Word w = words::parse_word(h.word, b);
    ctx.ledger.establish(h.name, words::evaluate(w, model, ctx.resolver()), "hypothesis");
  }
  ctx.run_items(sc, "");
  // requirements
  bool all_steps = true;
  for (const auto& s : ctx.report.steps) all_steps &= s.pass;
  for (const auto& req : sc.requires_) {
    auto check_one = [&](const std::string& nm) {
      if (!ctx.ledger.find(nm)) ctx.report.missing_requirements.push_back(nm);
    };
    if (req.foreach_.empty()) {
      std::string nm = req.name;
      size_t us = nm.find('_');
      if (us != std::string::npos) {
        // allow expression suffixes like Ci_(r-1)
        std::string idx = nm.substr(us + 1);
        if (!idx.empty() && idx.front() == '(')
          nm = nm.substr(0, us) + "_" +
               std::to_string(words::eval_index_expr(idx.substr(1, idx.size() - 2), b));
      }
      check_one(nm);
    } else {
      size_t eq = req.foreach_.find('=');
      size_t dots = req.foreach_.find("..");
      int lo = words::eval_index_expr(req.foreach_.substr(eq + 1, dots - eq - 1), b);
      int hi = words::eval_index_expr(req.foreach_.substr(dots + 2), b);
      size_t us = req.name.find('_');
      for (int i = lo; i <= hi; ++i)
        check_one(req.name.substr(0, us) + "_" + std::to_string(i));
    }
  }
  ctx.report.established = ctx.ledger.names_in_order();
  ctx.report.pass = all_steps && ctx.report.missing_requirements.empty();
  return ctx.report;
}

ProofReport replay_proof(const scripts::ScriptLibrary& lib, const std::string& script_id,
                         const surface::Model& model, const Perturbation* perturb) {
  return replay_with(lib, script_id, model, perturb, nullptr);
}

std::vector<std::string> perturbable_steps(const scripts::ScriptLibrary& lib,
                                           const std::string& script_id,
                                           const surface::Model& model) {
  std::vector<std::string> out;
  replay_with(lib, script_id, model, nullptr, &out);
  return out;
}

}  // namespace mcg::replay

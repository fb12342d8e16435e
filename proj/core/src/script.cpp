#include "mcg/script.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#ifndef MCG_DATA_DIR
#define MCG_DATA_DIR "."
#endif

namespace mcg::scripts {

std::string kind_str(StepKind k) {
  switch (k) {
    case StepKind::Identity: return "identity";
    case StepKind::Mapsto: return "mapsto";
    case StepKind::Membership: return "membership";
    case StepKind::Involution: return "involution";
  }
  return "?";
}

int ProofScript::step_count() const {
  int n = 0;
  for (const auto& it : items)
    if (it.type == Item::Type::Step) ++n;
  return n;
}

std::uint64_t ProofScript::anchors_hash() const {
  // FNV-1a over the concatenated anchors in file order
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& it : items) {
    if (it.type != Item::Type::Step) continue;
    for (char c : it.step.anchor) {
      h ^= (unsigned char)c;
      h *= 1099511628211ull;
    }
    h ^= '\n';
    h *= 1099511628211ull;
  }
  return h;
}

void ProofScript::check_genus(const surface::GenusConfig& cfg) const {
  if (cfg.g < min_genus)
    throw UnsupportedGenusError(id + " requires genus >= " + std::to_string(min_genus) +
                                ", got " + std::to_string(cfg.g));
  if (parity == 'e' && cfg.g % 2 != 0)
    throw UnsupportedGenusError(id + " requires even genus, got " + std::to_string(cfg.g));
  if (parity == 'o' && cfg.g % 2 == 0)
    throw UnsupportedGenusError(id + " requires odd genus, got " + std::to_string(cfg.g));
}

namespace {

// key=value fields; values either bare or double-quoted (no escapes needed).
std::map<std::string, std::string> parse_fields(std::istringstream& in, const std::string& ctx) {
  std::map<std::string, std::string> out;
  std::string rest;
  std::getline(in, rest);
  size_t p = 0;
  auto skip_ws = [&] {
    while (p < rest.size() && std::isspace((unsigned char)rest[p])) ++p;
  };
  for (;;) {
    skip_ws();
    if (p >= rest.size()) break;
    size_t eq = rest.find('=', p);
    if (eq == std::string::npos)
      throw ScriptParseError(ctx + ": expected key=value near '" + rest.substr(p) + "'");
    std::string key = rest.substr(p, eq - p);
    p = eq + 1;
    std::string val;
    if (p < rest.size() && rest[p] == '"') {
      size_t close = rest.find('"', p + 1);
      if (close == std::string::npos) throw ScriptParseError(ctx + ": unterminated string");
      val = rest.substr(p + 1, close - p - 1);
      p = close + 1;
    } else {
      size_t end = p;
      while (end < rest.size() && !std::isspace((unsigned char)rest[end])) ++end;
      val = rest.substr(p, end - p);
      p = end;
    }
    out[key] = val;
  }
  return out;
}

}  // namespace

ProofScript parse_script(const std::string& text, const std::string& source_name) {
  ProofScript sc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string ctx = source_name + ":" + std::to_string(lineno);
    // strip comments outside quotes
    bool quoted = false;
    for (size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '"') quoted = !quoted;
      if (line[k] == '#' && !quoted) {
        line.resize(k);
        break;
      }
    }
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "script") {
      ls >> sc.id;
    } else if (kw == "genus") {
      std::string par, ge;
      ls >> par >> ge >> sc.min_genus;
      if (ge != ">=") throw ScriptParseError(ctx + ": expected 'genus <parity> >= N'");
      if (par == "any") sc.parity = 'a';
      else if (par == "even") sc.parity = 'e';
      else if (par == "odd") sc.parity = 'o';
      else throw ScriptParseError(ctx + ": bad parity '" + par + "'");
    } else if (kw == "hyp") {
      Hypothesis h;
      ls >> h.name;
      auto fields = parse_fields(ls, ctx);
      auto it = fields.find("word");
      if (it == fields.end()) throw ScriptParseError(ctx + ": hyp missing word=");
      h.word = it->second;
      h.aux = fields.count("aux") > 0;
      sc.hyps.push_back(std::move(h));
    } else if (kw == "step") {
      ProofScript::Item item;
      item.type = ProofScript::Item::Type::Step;
      DerivationStep& st = item.step;
      ls >> st.id;
      auto f = parse_fields(ls, ctx);
      auto get = [&](const char* k) { return f.count(k) ? f[k] : std::string(); };
      std::string kind = get("kind");
      if (kind == "identity") st.kind = StepKind::Identity;
      else if (kind == "mapsto") st.kind = StepKind::Mapsto;
      else if (kind == "member") st.kind = StepKind::Membership;
      else if (kind == "involution") st.kind = StepKind::Involution;
      else throw ScriptParseError(ctx + ": bad kind '" + kind + "'");
      st.name = get("name");
      st.def = get("def");
      st.claim = get("claim");
      st.from = get("from");
      st.to = get("to");
      st.when = get("when");
      st.foreach_ = get("foreach");
      st.just = get("just");
      st.anchor = get("anchor");
      if (st.kind == StepKind::Mapsto && (st.from.empty() || st.to.empty()))
        throw ScriptParseError(ctx + ": mapsto needs from= and to=");
      if (st.kind == StepKind::Membership && (st.name.empty() || st.def.empty()))
        throw ScriptParseError(ctx + ": member needs name= and def=");
      sc.items.push_back(std::move(item));
    } else if (kw == "include") {
      ProofScript::Item item;
      item.type = ProofScript::Item::Type::Include;
      ls >> item.include_id;
      auto f = parse_fields(ls, ctx);
      item.include_prefix = f.count("prefix") ? f["prefix"] : item.include_id;
      sc.items.push_back(std::move(item));
    } else if (kw == "require") {
      std::string n;
      while (ls >> n) sc.requires_.push_back({n, ""});
    } else if (kw == "require_each") {
      RequireSpec r;
      ls >> r.name >> r.foreach_;
      sc.requires_.push_back(std::move(r));
    } else {
      throw ScriptParseError(ctx + ": unknown keyword '" + kw + "'");
    }
  }
  if (sc.id.empty()) throw ScriptParseError(source_name + ": missing 'script' header");
  return sc;
}

ProofScript load_script_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ScriptParseError("cannot open script file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_script(ss.str(), path);
}

ScriptLibrary::ScriptLibrary(const std::string& dir) {
  std::ifstream mf(dir + "/manifest.json");
  if (!mf) throw ScriptParseError("cannot open manifest " + dir + "/manifest.json");
  nlohmann::json j;
  mf >> j;
  for (auto& [id, entry] : j.at("scripts").items()) {
    std::string file = entry.at("file").get<std::string>();
    ProofScript sc = load_script_file(dir + "/" + file);
    if (sc.id != id)
      throw ScriptParseError("manifest id " + id + " does not match script id " + sc.id);
    manifest_[id] = {entry.at("steps").get<int>(),
                     std::stoull(entry.at("anchors_hash").get<std::string>(), nullptr, 16)};
    scripts_.emplace(id, std::move(sc));
  }
  audit();
}

const ProofScript& ScriptLibrary::get(const std::string& id) const {
  auto it = scripts_.find(id);
  if (it == scripts_.end()) throw Error("unknown proof script " + id);
  return it->second;
}

std::vector<std::string> ScriptLibrary::ids() const {
  std::vector<std::string> out;
  for (auto& [id, _] : scripts_) out.push_back(id);
  return out;
}

void ScriptLibrary::audit() const {
  for (auto& [id, sc] : scripts_) {
    auto [steps, ahash] = manifest_.at(id);
    if (sc.step_count() != steps)
      throw ScriptParseError(id + ": step count " + std::to_string(sc.step_count()) +
                             " does not match manifest " + std::to_string(steps));
    if (sc.anchors_hash() != ahash)
      throw ScriptParseError(id + ": anchor hash mismatch against manifest");
  }
}

std::string default_script_dir() {
  if (const char* env = std::getenv("MCG_DATA_DIR")) return std::string(env) + "/scripts";
  return std::string(MCG_DATA_DIR) + "/scripts";
}

}  // namespace mcg::scripts

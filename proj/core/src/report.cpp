#include "mcg/report.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef MCG_DATA_DIR
#define MCG_DATA_DIR "."
#endif

namespace mcg::report {

using nlohmann::json;

json to_json(const RunReport& r) {
  json j;
  j["tool_version"] = kToolVersion;
  j["command"] = r.command;
  j["genus"] = r.genus;
  j["seed"] = r.seed;
  j["proofs"] = json::array();
  for (const auto& p : r.proofs) {
    json jp;
    jp["script"] = p.script_id;
    jp["genus"] = p.genus;
    jp["verdict"] = p.pass ? "pass" : "fail";
    jp["steps"] = json::array();
    for (const auto& s : p.steps) {
      json js;
      js["id"] = s.id;
      js["kind"] = scripts::kind_str(s.kind);
      js["anchor"] = s.anchor;
      js["verdict"] = s.pass ? "pass" : "fail";
      if (!s.detail.empty()) js["detail"] = s.detail;
      jp["steps"].push_back(std::move(js));
    }
    jp["established"] = p.established;
    jp["missing_requirements"] = p.missing_requirements;
    j["proofs"].push_back(std::move(jp));
  }
  j["orders"] = json::array();
  for (const auto& o : r.orders) {
    json jo;
    jo["set"] = o.set_name;
    jo["mode"] = o.mode;
    jo["computed"] = o.computed;
    jo["expected"] = o.expected;
    jo["certificate"] = o.certificate;
    j["orders"].push_back(std::move(jo));
  }
  j["timings"] = json::array();
  for (const auto& t : r.timings) j["timings"].push_back({{"phase", t.phase}, {"ms", t.ms}});
  return j;
}

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << "  genus: " << r.genus << "  seed: " << r.seed << "\n";
  for (const auto& p : r.proofs) {
    os << "proof " << p.script_id << " @ g=" << p.genus << ": " << (p.pass ? "pass" : "FAIL")
       << " (" << p.steps.size() << " steps)\n";
    for (const auto& s : p.steps) {
      os << "  [" << (s.pass ? "ok" : "XX") << "] " << s.id << " (" << scripts::kind_str(s.kind)
         << ")";
      if (!s.anchor.empty()) os << "  | " << s.anchor;
      if (!s.detail.empty()) os << "  -- " << s.detail;
      os << "\n";
    }
    if (!p.missing_requirements.empty()) {
      os << "  missing requirements:";
      for (const auto& m : p.missing_requirements) os << " " << m;
      os << "\n";
    }
    os << "  established " << p.established.size() << " elements\n";
  }
  for (const auto& o : r.orders) {
    os << "order[" << o.set_name << ", " << o.mode << "]: computed " << o.computed
       << ", expected " << o.expected << ", certificate " << o.certificate << "\n";
  }
  for (const auto& t : r.timings) os << "timing " << t.phase << ": " << t.ms << " ms\n";
  return os.str();
}

namespace {

bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  return false;
}

std::string validate_at(const json& doc, const json& schema, const std::string& path) {
  if (schema.contains("type")) {
    std::string t = schema["type"].get<std::string>();
    if (!type_matches(doc, t)) return path + ": expected " + t;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found |= e == doc;
    if (!found) return path + ": value not in enum";
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!doc.contains(k.get<std::string>()))
          return path + ": missing required key " + k.get<std::string>();
    if (schema.contains("properties"))
      for (auto& [k, sub] : schema["properties"].items())
        if (doc.contains(k)) {
          std::string err = validate_at(doc[k], sub, path + "/" + k);
          if (!err.empty()) return err;
        }
  }
  if (doc.is_array() && schema.contains("items")) {
    int i = 0;
    for (const auto& el : doc) {
      std::string err = validate_at(el, schema["items"], path + "/" + std::to_string(i++));
      if (!err.empty()) return err;
    }
  }
  return "";
}

}  // namespace

std::string validate_schema(const json& doc, const json& schema) {
  return validate_at(doc, schema, "$");
}

json load_schema() {
  std::string dir = MCG_DATA_DIR;
  if (const char* env = std::getenv("MCG_DATA_DIR")) dir = env;
  std::ifstream f(dir + "/report.schema.json");
  if (!f) throw Error("cannot open report schema in " + dir);
  json j;
  f >> j;
  return j;
}

}  // namespace mcg::report

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcg/replay.hpp"

namespace mcg::report {

inline constexpr const char* kToolVersion = "1.0.0";

struct OrderRecord {
  std::string set_name;
  std::string mode;  // "full" | "quotient"
  std::string computed;
  std::string expected;
  std::string certificate;
};

struct PhaseTiming {
  std::string phase;
  double ms = 0.0;
};

/// One CLI run. Timings are kept in a separate array so that reports are
/// byte-identical across runs modulo that array.
struct RunReport {
  std::string command;
  int genus = 0;
  std::uint64_t seed = 0;
  std::vector<replay::ProofReport> proofs;
  std::vector<OrderRecord> orders;
  std::vector<PhaseTiming> timings;
};

nlohmann::json to_json(const RunReport& r);
std::string render_text(const RunReport& r);

/// Minimal structural validator for the shipped schema subset: type,
/// required, properties, items, enum. Returns an empty string when valid,
/// otherwise the first violation.
std::string validate_schema(const nlohmann::json& doc, const nlohmann::json& schema);

/// Loads the shipped schema ($MCG_DATA_DIR or the compiled-in data dir).
nlohmann::json load_schema();

}  // namespace mcg::report

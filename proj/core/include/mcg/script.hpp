#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcg/word.hpp"

namespace mcg::scripts {

enum class StepKind { Identity, Mapsto, Membership, Involution };

std::string kind_str(StepKind k);

/// One checkable claim, parsed from one `step` record of a script file.
struct DerivationStep {
  std::string id;
  StepKind kind = StepKind::Identity;
  std::string name;      // binds the def matrix in the ledger when non-empty
  std::string def;       // derivation word (names and hypothesis generators)
  std::string claim;     // generator word the def must equal
  std::string from, to;  // curve lists (mapsto)
  std::string when;      // branch guard, e.g. "r=16,17,18" or "r!=16,17,18"
  std::string foreach_;  // loop spec, e.g. "i=1..r-1"
  std::string just;      // prior step ids or "hyp"
  std::string anchor;    // verbatim source equation text
};

struct Hypothesis {
  std::string name;
  std::string word;
  bool aux = false;  // seeded standalone, skipped when the script is included
};

struct RequireSpec {
  std::string name;      // may carry an index expression, e.g. "Bi_i"
  std::string foreach_;  // optional loop spec
};

struct ProofScript {
  struct Item {
    enum class Type { Step, Include } type = Type::Step;
    DerivationStep step;
    std::string include_id;
    std::string include_prefix;
  };

  std::string id;
  char parity = 'a';  // 'a' any, 'e' even, 'o' odd
  int min_genus = 0;
  std::vector<Hypothesis> hyps;
  std::vector<Item> items;
  std::vector<RequireSpec> requires_;

  int step_count() const;
  std::uint64_t anchors_hash() const;

  void check_genus(const surface::GenusConfig& cfg) const;
};

ProofScript parse_script(const std::string& text, const std::string& source_name);
ProofScript load_script_file(const std::string& path);

/// Loads every script named in the manifest and audits step counts and
/// anchor hashes against it.
class ScriptLibrary {
 public:
  /// dir: directory holding the .steps files and manifest.json.
  explicit ScriptLibrary(const std::string& dir);

  const ProofScript& get(const std::string& id) const;
  std::vector<std::string> ids() const;

  /// Re-audits the loaded scripts against the manifest; throws on mismatch.
  void audit() const;

 private:
  std::map<std::string, ProofScript> scripts_;
  std::map<std::string, std::pair<int, std::uint64_t>> manifest_;  // id -> (steps, anchors hash)
};

/// Default script directory: $MCG_DATA_DIR/scripts if set, else the
/// compile-time data directory.
std::string default_script_dir();

}  // namespace mcg::scripts

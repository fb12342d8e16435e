#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mcg/script.hpp"

namespace mcg::replay {

/// Established matrices with their originating step ids, plus name bindings.
/// Closed under exactly the moves the scripts use: products and inverses of
/// established elements (conjugation is a product).
class MembershipLedger {
 public:
  /// Binds name -> matrix. Re-binding an existing name requires the same
  /// matrix; returns false otherwise.
  bool establish(const std::string& name, const gf2::Matrix& m, const std::string& origin);

  const gf2::Matrix* find(const std::string& name) const;

  bool contains_matrix(const gf2::Matrix& m) const;

  const std::vector<std::string>& names_in_order() const { return order_; }

  std::string origin_of(const std::string& name) const;

 private:
  std::map<std::string, gf2::Matrix> by_name_;
  std::map<std::string, std::string> origin_;
  std::set<std::pair<std::uint64_t, std::string>> matrix_keys_;  // (hash, packed rows)
  std::vector<std::string> order_;

  static std::pair<std::uint64_t, std::string> key_of(const gf2::Matrix& m);
};

struct StepRecord {
  std::string id;  // expanded id, e.g. "t3[i=2]" or "THM21:t7"
  scripts::StepKind kind;
  std::string anchor;
  bool pass = false;
  std::string detail;  // failure diagnostics (matrix hashes, missing names)
};

struct ProofReport {
  std::string script_id;
  int genus = 0;
  bool pass = false;
  std::vector<StepRecord> steps;
  std::vector<std::string> established;  // ledger names in establishment order
  std::vector<std::string> missing_requirements;
};

/// Optional single-index mutation used by the perturbation harness: before
/// checking, the step whose expanded id equals target_id gets the index of
/// its first indexed atom shifted by one (claim word for identity/member,
/// `to` list for mapsto, word for involution).
struct Perturbation {
  std::string target_id;
};

ProofReport replay_proof(const scripts::ScriptLibrary& lib, const std::string& script_id,
                         const surface::Model& model, const Perturbation* perturb = nullptr);

/// Expanded step ids of a script at the given genus that carry at least one
/// mutable index (the perturbation harness domain).
std::vector<std::string> perturbable_steps(const scripts::ScriptLibrary& lib,
                                           const std::string& script_id,
                                           const surface::Model& model);

}  // namespace mcg::replay

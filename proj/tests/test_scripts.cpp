#include <doctest.h>

#include <algorithm>

#include "mcg/replay.hpp"

using namespace mcg;
using scripts::ScriptLibrary;
using surface::Model;

namespace {

const ScriptLibrary& library() {
  static ScriptLibrary lib(scripts::default_script_dir());
  return lib;
}

}  // namespace

TEST_CASE("library loads and audits against the manifest") {
  const auto& lib = library();
  auto ids = lib.ids();
  for (const char* id : {"THM21CORE", "THM21", "THMA", "THMB_EVEN", "THMB_ODD"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK_NOTHROW(lib.audit());
  CHECK(lib.get("THM21CORE").step_count() == 33);
  CHECK(lib.get("THM21CORE").anchors_hash() == 0x07887a82f8635ecdull);
  CHECK_THROWS_AS(lib.get("NOPE"), Error);
}

TEST_CASE("parse errors are reported") {
  CHECK_THROWS_AS(scripts::parse_script("step t1 kind=identity\n", "inline"),
                  ScriptParseError);  // step before script header
  CHECK_THROWS_AS(scripts::parse_script("script X\nstep t1 kind=bogus def=\"T\"\n", "inline"),
                  ScriptParseError);
}

TEST_CASE("core derivation replays at several genera") {
  const auto& lib = library();
  for (int g : {7, 9, 12, 19}) {
    Model m(g);
    auto rep = replay::replay_proof(lib, "THM21", m);
    INFO("genus ", g);
    CHECK(rep.pass);
    CHECK(rep.missing_requirements.empty());
    for (const auto& s : rep.steps) {
      INFO(s.id, ": ", s.detail);
      CHECK(s.pass);
    }
    auto has = [&](const char* n) {
      return std::find(rep.established.begin(), rep.established.end(), n) !=
             rep.established.end();
    };
    CHECK(has("A1"));
    CHECK(has("A3"));
    CHECK(has("Y1"));
    CHECK(has("Bi_1"));
  }
}

TEST_CASE("genus bounds are enforced") {
  const auto& lib = library();
  CHECK_THROWS_AS(replay::replay_proof(lib, "THM21", Model(5)), UnsupportedGenusError);
  CHECK_THROWS_AS(replay::replay_proof(lib, "THMA", Model(18)), UnsupportedGenusError);
  CHECK_THROWS_AS(replay::replay_proof(lib, "THMB_EVEN", Model(27)), UnsupportedGenusError);
  CHECK_THROWS_AS(replay::replay_proof(lib, "THMB_ODD", Model(26)), UnsupportedGenusError);
}

TEST_CASE("single-index perturbations break the replay") {
  const auto& lib = library();
  Model m(9);
  auto targets = replay::perturbable_steps(lib, "THM21", m);
  REQUIRE(!targets.empty());
  // sample a handful across the script
  for (size_t k = 0; k < targets.size(); k += std::max<size_t>(1, targets.size() / 5)) {
    replay::Perturbation p{targets[k]};
    auto rep = replay::replay_proof(lib, "THM21", m, &p);
    INFO("perturbed ", targets[k]);
    CHECK_FALSE(rep.pass);
  }
}

TEST_CASE("replay is deterministic") {
  const auto& lib = library();
  Model m(7);
  auto r1 = replay::replay_proof(lib, "THM21", m);
  auto r2 = replay::replay_proof(lib, "THM21", m);
  REQUIRE(r1.steps.size() == r2.steps.size());
  for (size_t k = 0; k < r1.steps.size(); ++k) {
    CHECK(r1.steps[k].id == r2.steps[k].id);
    CHECK(r1.steps[k].pass == r2.steps[k].pass);
  }
  CHECK(r1.established == r2.established);
}

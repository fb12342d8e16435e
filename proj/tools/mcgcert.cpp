#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcg/bsgs.hpp"
#include "mcg/gensets.hpp"
#include "mcg/order.hpp"
#include "mcg/replay.hpp"
#include "mcg/report.hpp"

namespace {

using mcg::cert::Certificate;
using mcg::cert::OrderOptions;
using mcg::cert::OrderResult;
using mcg::report::RunReport;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct CommonOpts {
  int genus = 0;
  bool json = false;
  std::uint64_t seed = mcg::cert::kDefaultSeed;
  std::string mode = "full";
  std::string cache_dir;
  bool force = false;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string cache_path(const CommonOpts& o, std::uint64_t genhash) {
  std::ostringstream os;
  os << o.cache_dir << "/bsgs-g" << o.genus << "-" << o.mode << "-" << std::hex << genhash
     << ".bin";
  return os.str();
}

mcg::report::OrderRecord certify_gens(const mcg::surface::Model& model,
                                      std::vector<mcg::gf2::Matrix> gens,
                                      const std::string& set_name, const CommonOpts& o,
                                      RunReport& rep) {
  auto t0 = std::chrono::steady_clock::now();
  mpz_class target;
  if (o.mode == "quotient") {
    gens = mcg::gensets::quotient_images(model, gens);
    target = mcg::cert::sp_order(2 * model.cfg().h);
  } else {
    target = mcg::cert::expected_order(model.cfg());
  }
  OrderOptions opts;
  opts.seed = o.seed;
  opts.force = o.force;
  opts.target = target;

  OrderResult res;
  bool from_cache = false;
  if (!o.cache_dir.empty()) {
    mcg::cert::CacheMeta meta;
    meta.genus = o.genus;
    meta.mode = o.mode == "quotient" ? 1 : 0;
    meta.genhash = mcg::cert::generator_set_hash(gens);
    meta.seed = o.seed;
    std::string path = cache_path(o, meta.genhash);
    if (auto chain = mcg::cert::load_bsgs_cache(path, meta)) {
      res = mcg::cert::group_order_from(gens, std::move(*chain), opts);
      from_cache = true;
    } else {
      res = mcg::cert::group_order(gens, opts);
      mcg::cert::save_bsgs_cache(path, meta, res.data);
    }
  } else {
    res = mcg::cert::group_order(gens, opts);
  }

  mcg::report::OrderRecord rec;
  rec.set_name = set_name;
  rec.mode = o.mode;
  rec.computed = res.order.get_str();
  rec.expected = target.get_str();
  rec.certificate = mcg::cert::certificate_str(res.certificate);
  rep.timings.push_back(
      {"order:" + set_name + (from_cache ? " (cached)" : ""), ms_since(t0)});
  return rec;
}

void emit(const RunReport& rep, bool json) {
  if (json)
    std::cout << mcg::report::to_json(rep).dump(2) << "\n";
  else
    std::cout << mcg::report::render_text(rep);
}

int run_theorem(const std::string& id, const CommonOpts& o, bool certify_order) {
  static const std::map<std::string, std::string> kScriptOf = {
      {"2.1", "THM21"}, {"A", "THMA"}, {"B-even", "THMB_EVEN"}, {"B-odd", "THMB_ODD"}};
  auto it = kScriptOf.find(id);
  if (it == kScriptOf.end()) {
    std::cerr << "unknown theorem id '" << id << "' (expected 2.1, A, B-even, B-odd)\n";
    return kExitUsage;
  }
  mcg::surface::Model model(o.genus);
  mcg::scripts::ScriptLibrary lib(mcg::scripts::default_script_dir());

  RunReport rep;
  rep.command = "theorem " + id;
  rep.genus = o.genus;
  rep.seed = o.seed;

  auto t0 = std::chrono::steady_clock::now();
  rep.proofs.push_back(mcg::replay::replay_proof(lib, it->second, model));
  rep.timings.push_back({"replay", ms_since(t0)});

  bool ok = rep.proofs.back().pass;
  if (certify_order && ok) {
    std::string set = id == "2.1" ? "thm21" : (id == "A" ? "thmA" : "thmB");
    rep.orders.push_back(certify_gens(model, mcg::gensets::named_set(model, set), set, o, rep));
    const std::string& c = rep.orders.back().certificate;
    ok = c == "proved" || c == "reached-target";
  }
  emit(rep, o.json);
  return ok ? kExitPass : kExitFail;
}

int run_certify(const std::string& set, const std::string& words_file, const CommonOpts& o) {
  mcg::surface::Model model(o.genus);
  RunReport rep;
  rep.command = "certify " + set;
  rep.genus = o.genus;
  rep.seed = o.seed;

  std::vector<mcg::gf2::Matrix> gens;
  if (set == "custom") {
    std::ifstream f(words_file);
    if (!f) {
      std::cerr << "cannot open word file " << words_file << "\n";
      return kExitUsage;
    }
    mcg::words::Bindings b = mcg::words::Bindings::from(model.cfg());
    std::string line;
    while (std::getline(f, line)) {
      if (line.empty() || line[0] == '#') continue;
      gens.push_back(mcg::words::evaluate(mcg::words::parse_word(line, b), model));
    }
    if (gens.empty()) gens.push_back(mcg::gf2::Matrix::identity(model.dim()));
  } else {
    gens = mcg::gensets::named_set(model, set);
  }

  rep.orders.push_back(certify_gens(model, std::move(gens), set, o, rep));
  emit(rep, o.json);
  const std::string& c = rep.orders.back().certificate;
  return (c == "proved" || c == "reached-target") ? kExitPass : kExitFail;
}

int run_dump(int genus) {
  mcg::surface::Model model(genus);
  std::cout << model.dump();
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mod-2 homology verification for mapping class group generating sets"};
  app.require_subcommand(0, 1);

  CommonOpts o;
  bool dump_flag = false;
  app.add_flag("--dump-model", dump_flag, "print the curve/generator table and exit");
  app.add_option("--genus", o.genus, "surface genus (top level: used with --dump-model)");

  std::string thm_id;
  bool certify_order = false;
  CLI::App* thm = app.add_subcommand("theorem", "replay a generation proof");
  thm->add_option("id", thm_id, "theorem id: 2.1, A, B-even, B-odd")->required();
  thm->add_option("--genus", o.genus, "surface genus")->required();
  thm->add_flag("--json", o.json, "machine-readable report");
  thm->add_flag("--certify-order", certify_order, "also certify the hypothesis generators");
  thm->add_option("--seed", o.seed, "Schreier-Sims seed");
  thm->add_option("--mode", o.mode, "full|quotient")->check(CLI::IsMember({"full", "quotient"}));
  thm->add_option("--cache-dir", o.cache_dir, "BSGS cache directory");
  thm->add_flag("--force", o.force, "override the degree memory guard");

  std::string set_name = "thm21", words_file;
  CLI::App* cert = app.add_subcommand("certify", "certify a generating set by group order");
  cert->add_option("--set", set_name, "thm21|thmA|thmB|twistslide|custom")
      ->check(CLI::IsMember({"thm21", "thmA", "thmB", "twistslide", "custom"}));
  cert->add_option("--words", words_file, "word file for --set custom (one word per line)");
  cert->add_option("--genus", o.genus, "surface genus")->required();
  cert->add_flag("--json", o.json, "machine-readable report");
  cert->add_option("--seed", o.seed, "Schreier-Sims seed");
  cert->add_option("--mode", o.mode, "full|quotient")->check(CLI::IsMember({"full", "quotient"}));
  cert->add_option("--cache-dir", o.cache_dir, "BSGS cache directory");
  cert->add_flag("--force", o.force, "override the degree memory guard");

  int dump_genus = 0;
  CLI::App* dump = app.add_subcommand("dump-model", "print the curve/generator table");
  dump->add_option("--genus", dump_genus, "surface genus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (thm->parsed()) return run_theorem(thm_id, o, certify_order);
    if (cert->parsed()) return run_certify(set_name, words_file, o);
    if (dump->parsed()) return run_dump(dump_genus);
    if (dump_flag) return run_dump(o.genus);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const mcg::ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const mcg::UnsupportedGenusError& e) {
    std::cerr << "genus bound: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mcg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

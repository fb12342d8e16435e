#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <string>

#include "mcg/bsgs.hpp"
#include "mcg/closure.hpp"
#include "mcg/gensets.hpp"
#include "mcg/order.hpp"

using namespace mcg;
using surface::GenusConfig;
using surface::Model;

TEST_CASE("symplectic group orders over GF(2)") {
  CHECK(cert::sp_order(2) == 6);
  CHECK(cert::sp_order(4) == 720);
  CHECK(cert::sp_order(6) == 1451520);
  CHECK(cert::sp_order(18) == mpz_class("2060902435720151186326095525680721766346957783040000"));
}

TEST_CASE("full isometry group orders") {
  CHECK(cert::expected_order(GenusConfig(5)) == 720);
  CHECK(cert::expected_order(GenusConfig(7)) == 1451520);
  CHECK(cert::expected_order(GenusConfig(8)) == mpz_class(1451520) * 128);
  CHECK(cert::expected_order(GenusConfig(8)) == 185794560);
  CHECK(cert::expected_order(GenusConfig(9)) == cert::sp_order(8));
}

TEST_CASE("brute-force closure agrees with the expected order at small genus") {
  for (int g : {5, 7}) {
    Model m(g);
    auto closure = cert::brute_force_closure(gensets::twist_slide_set(m), 2'000'000);
    CHECK(mpz_class((unsigned long)closure.size()) == cert::expected_order(m.cfg()));
  }
  Model m9(9);
  CHECK_THROWS_AS(cert::brute_force_closure(gensets::twist_slide_set(m9), 10'000),
                  OracleOverflowError);
}

TEST_CASE("dihedral control generates only 2g elements") {
  for (int g : {7, 9, 11}) {
    Model m(g);
    auto closure = cert::brute_force_closure(gensets::dihedral_set(m), 10'000);
    CHECK(closure.size() == size_t(2 * g));
  }
}

TEST_CASE("orbit partition of the nonzero classes at genus 7") {
  Model m(7);
  auto gens = gensets::twist_pair_set(m);
  auto w = m.canonical_class_w();
  auto [fixed, sv1] = cert::orbit(gens, std::uint32_t(w.code()));
  CHECK(fixed.size() == 1);
  auto [odd, sv2] = cert::orbit(gens, 0b1u);      // mu_1, odd weight
  auto [even, sv3] = cert::orbit(gens, 0b11u);    // mu_1+mu_2, even weight
  CHECK(odd.size() == 63);
  CHECK(even.size() == 63);
  CHECK(sv2[0b1u] == -2);  // root marker
}

TEST_CASE("randomized order computation with deterministic proof") {
  for (int g : {5, 7, 8}) {
    Model m(g);
    cert::OrderOptions opts;
    opts.prove = true;
    opts.target = cert::expected_order(m.cfg());
    auto res = cert::group_order(gensets::twist_slide_set(m), opts);
    CHECK(res.order == *opts.target);
    CHECK(res.certificate == cert::Certificate::Proved);
    CHECK(res.data.order() == res.order);
  }
}

TEST_CASE("order computation without a target still proves small groups") {
  Model m(7);
  cert::OrderOptions opts;
  opts.prove = true;
  auto res = cert::group_order(gensets::dihedral_set(m), opts);
  CHECK(res.order == 14);
  CHECK(res.certificate == cert::Certificate::Proved);
}

TEST_CASE("below-target certificate for a proper subgroup") {
  Model m(7);
  cert::OrderOptions opts;
  opts.prove = true;
  opts.target = cert::expected_order(m.cfg());
  auto res = cert::group_order(gensets::dihedral_set(m), opts);
  CHECK(res.order == 14);
  CHECK(res.certificate == cert::Certificate::BelowTarget);
}

TEST_CASE("generator set hash ignores order") {
  Model m(7);
  auto gens = gensets::twist_pair_set(m);
  auto rev = gens;
  std::reverse(rev.begin(), rev.end());
  CHECK(cert::generator_set_hash(gens) == cert::generator_set_hash(rev));
  CHECK(cert::generator_set_hash(gens) != cert::generator_set_hash(gensets::dihedral_set(m)));
}

TEST_CASE("cache round trip") {
  Model m(7);
  auto gens = gensets::twist_slide_set(m);
  cert::OrderOptions opts;
  opts.target = cert::expected_order(m.cfg());
  auto res = cert::group_order(gens, opts);

  cert::CacheMeta meta;
  meta.genus = 7;
  meta.mode = 0;
  meta.genhash = cert::generator_set_hash(gens);
  meta.seed = opts.seed;
  std::string path = "bsgs-test-cache.bin";
  cert::save_bsgs_cache(path, meta, res.data);

  auto loaded = cert::load_bsgs_cache(path, meta);
  REQUIRE(loaded.has_value());
  CHECK(loaded->order() == res.order);
  auto res2 = cert::group_order_from(gens, std::move(*loaded), opts);
  CHECK(res2.order == res.order);

  cert::CacheMeta other = meta;
  other.genhash ^= 1;
  CHECK_FALSE(cert::load_bsgs_cache(path, other).has_value());
  CHECK_FALSE(cert::load_bsgs_cache("no-such-file.bin", meta).has_value());
  std::remove(path.c_str());
}

TEST_CASE("degree guard refuses oversized domains") {
  Model m(30);
  cert::OrderOptions opts;  // guard_log2 = 27 < 30
  CHECK_THROWS_AS(cert::group_order(gensets::twist_pair_set(m), opts), ResourceGuardError);
  Model m34(34);
  CHECK_THROWS_AS(cert::group_order(gensets::twist_pair_set(m34), opts), ResourceGuardError);
}

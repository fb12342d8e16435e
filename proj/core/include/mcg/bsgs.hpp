#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcg/gf2.hpp"

namespace mcg::cert {

/// Nonzero vectors of F_2^n as integer codes 1..2^n-1 (bit i = coordinate i).
struct PermDomain {
  int n;
  std::uint64_t degree() const { return (std::uint64_t(1) << n) - 1; }
};

/// XOR-of-columns action of an n x n matrix on point codes, n <= 32.
struct PermAction {
  int n = 0;
  std::vector<std::uint32_t> col;

  static PermAction from(const gf2::Matrix& m);

  std::uint32_t act(std::uint32_t x) const {
    std::uint32_t y = 0;
    while (x) {
      int j = std::countr_zero(x);
      x &= x - 1;
      y ^= col[size_t(j)];
    }
    return y;
  }
};

/// One stabilizer-chain level: base point, the strong generators moving it,
/// and the orbit table with its Schreier vector (per point code: -1 not in
/// orbit, -2 root, otherwise index of the generator whose inverse steps
/// toward the root).
struct Level {
  std::uint32_t base = 0;
  std::vector<gf2::Matrix> gens;
  std::vector<gf2::Matrix> gen_inv;
  std::vector<PermAction> act;
  std::vector<PermAction> act_inv;
  std::vector<std::int16_t> sv;
  std::vector<std::uint32_t> orbit_points;
};

struct BSGSData {
  int dim = 0;
  std::uint64_t seed = 0;
  std::vector<Level> levels;

  mpz_class order() const;
  std::vector<std::uint32_t> base() const;
};

enum class Certificate { Proved, ReachedTarget, BelowTarget };
const char* certificate_str(Certificate c);

inline constexpr std::uint64_t kDefaultSeed = 0x6d63672d63657274ull;  // published constant

struct OrderOptions {
  std::uint64_t seed = kDefaultSeed;
  bool prove = false;      // run deterministic verification (degree <= 2^20)
  bool force = false;      // override the degree memory guard
  int guard_log2 = 27;
  std::optional<mpz_class> target;
  int stable_rounds = 24;  // consecutive clean sifts before settling
};

struct OrderResult {
  mpz_class order;
  Certificate certificate = Certificate::BelowTarget;
  BSGSData data;
};

/// BFS orbit of a start point under generator matrices. Returns the orbit in
/// BFS order and the full Schreier vector (degree-sized).
std::pair<std::vector<std::uint32_t>, std::vector<std::int32_t>> orbit(
    const std::vector<gf2::Matrix>& gens, std::uint32_t start);

/// Randomized Schreier-Sims with deterministic seeding; terminates early with
/// ReachedTarget when the computed order hits the supplied target.
OrderResult group_order(const std::vector<gf2::Matrix>& gens, const OrderOptions& opts = {});

/// Order-independent content hash of a generator set.
std::uint64_t generator_set_hash(const std::vector<gf2::Matrix>& gens);

struct CacheMeta {
  std::uint32_t version = 1;
  std::int32_t genus = 0;
  std::uint8_t mode = 0;  // 0 full, 1 quotient
  std::uint64_t genhash = 0;
  std::uint64_t seed = 0;
};

void save_bsgs_cache(const std::string& path, const CacheMeta& meta, const BSGSData& data);

/// Loads base and strong generators, re-verifies the generator hash and
/// recomputes orbits; returns nullopt when absent or mismatched.
std::optional<BSGSData> load_bsgs_cache(const std::string& path, const CacheMeta& expect);

/// group_order continuing from a cached chain (orbits already rebuilt).
OrderResult group_order_from(const std::vector<gf2::Matrix>& gens, BSGSData chain,
                             const OrderOptions& opts);

}  // namespace mcg::cert

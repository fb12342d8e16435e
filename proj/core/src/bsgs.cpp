#include "mcg/bsgs.hpp"

#include <cstring>
#include <fstream>
#include <random>

namespace mcg::cert {

using gf2::Matrix;

PermAction PermAction::from(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() > 32) throw ShapeError("PermAction: need square dim <= 32");
  PermAction a;
  a.n = m.rows();
  a.col.assign(size_t(a.n), 0);
  for (int j = 0; j < a.n; ++j)
    for (int i = 0; i < a.n; ++i)
      if (m.get(i, j)) a.col[size_t(j)] |= std::uint32_t(1) << i;
  return a;
}

namespace {

std::uint32_t point_image(const Matrix& m, std::uint32_t x) {
  std::uint32_t y = 0;
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    if (std::popcount(std::uint64_t(m.row(i)[0]) & x) & 1) y |= std::uint32_t(1) << i;
  return y;
}

constexpr std::int16_t kUnvisited = -1;
constexpr std::int16_t kRoot = -2;

}  // namespace

mpz_class BSGSData::order() const {
  mpz_class o = 1;
  for (const auto& l : levels) o *= (unsigned long)l.orbit_points.size();
  return o;
}

std::vector<std::uint32_t> BSGSData::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& l : levels) b.push_back(l.base);
  return b;
}

const char* certificate_str(Certificate c) {
  switch (c) {
    case Certificate::Proved: return "proved";
    case Certificate::ReachedTarget: return "reached-target";
    case Certificate::BelowTarget: return "below-target";
  }
  return "?";
}

std::pair<std::vector<std::uint32_t>, std::vector<std::int32_t>> orbit(
    const std::vector<Matrix>& gens, std::uint32_t start) {
  if (gens.empty()) throw Error("orbit: no generators");
  const int n = gens[0].rows();
  std::vector<PermAction> act;
  for (const auto& g : gens) act.push_back(PermAction::from(g));
  std::vector<std::int32_t> sv(std::uint64_t(1) << n, -1);
  std::vector<std::uint32_t> pts{start};
  sv[start] = -2;
  for (size_t head = 0; head < pts.size(); ++head) {
    std::uint32_t p = pts[head];
    for (size_t k = 0; k < act.size(); ++k) {
      std::uint32_t y = act[k].act(p);
      if (sv[y] == -1) {
        sv[y] = std::int32_t(k);
        pts.push_back(y);
      }
    }
  }
  return {std::move(pts), std::move(sv)};
}

namespace {

/// Stabilizer-chain operations over BSGSData.
struct Chain {
  BSGSData& d;
  int n;
  std::uint64_t space;  // 2^n

  explicit Chain(BSGSData& data) : d(data), n(data.dim), space(std::uint64_t(1) << data.dim) {}

  void new_level(std::uint32_t base) {
    Level l;
    l.base = base;
    l.sv.assign(space, kUnvisited);
    l.sv[base] = kRoot;
    l.orbit_points.push_back(base);
    d.levels.push_back(std::move(l));
  }

  // Appends m as a strong generator to levels 0..deepest and extends orbits.
  void attach(const Matrix& m, size_t deepest) {
    Matrix inv = mat_inverse(m);
    for (size_t j = 0; j <= deepest && j < d.levels.size(); ++j) {
      Level& L = d.levels[j];
      size_t k = L.gens.size();
      if (k >= 32000) throw Error("strong generator list overflow at level " + std::to_string(j));
      L.gens.push_back(m);
      L.gen_inv.push_back(inv);
      L.act.push_back(PermAction::from(m));
      L.act_inv.push_back(PermAction::from(inv));
      // reach new points with the new generator, then close under all
      std::vector<std::uint32_t> frontier;
      for (std::uint32_t p : L.orbit_points) {
        std::uint32_t y = L.act[k].act(p);
        if (L.sv[y] == kUnvisited) {
          L.sv[y] = std::int16_t(k);
          frontier.push_back(y);
        }
      }
      for (size_t head = 0; head < frontier.size(); ++head) {
        std::uint32_t p = frontier[head];
        for (size_t q = 0; q < L.act.size(); ++q) {
          std::uint32_t y = L.act[q].act(p);
          if (L.sv[y] == kUnvisited) {
            L.sv[y] = std::int16_t(q);
            frontier.push_back(y);
          }
        }
      }
      L.orbit_points.insert(L.orbit_points.end(), frontier.begin(), frontier.end());
    }
  }

  Matrix transversal(const Level& L, std::uint32_t p) const {
    Matrix u = Matrix::identity(n);
    while (p != L.base) {
      std::int16_t k = L.sv[p];
      u = mat_mul(u, L.gens[size_t(k)]);
      p = L.act_inv[size_t(k)].act(p);
    }
    return u;
  }

  // Returns the first level whose orbit cannot absorb m, with the partially
  // sifted residue; level == levels.size() with identity residue means clean.
  std::pair<size_t, Matrix> sift(Matrix m) const {
    for (size_t l = 0; l < d.levels.size(); ++l) {
      const Level& L = d.levels[l];
      std::uint32_t p = point_image(m, L.base);
      if (p == L.base) continue;
      if (L.sv[p] == kUnvisited) return {l, std::move(m)};
      m = mat_mul(mat_inverse(transversal(L, p)), m);
    }
    return {d.levels.size(), std::move(m)};
  }

  std::uint32_t choose_base(const Matrix& m) const {
    for (int i = 0; i < n; ++i) {
      std::uint32_t p = std::uint32_t(1) << i;
      if (point_image(m, p) != p) return p;
    }
    throw Error("choose_base: matrix is the identity");
  }

  // Sifts m and installs the residue as a strong generator when nontrivial.
  bool add(const Matrix& m) {
    auto [l, r] = sift(m);
    if (l == d.levels.size()) {
      if (r.is_identity()) return false;
      new_level(choose_base(r));
    }
    attach(r, l);
    return true;
  }

  // One pass of the deterministic (Sims) verification: finds the first
  // Schreier generator that fails to sift to the identity, installs its
  // residue, and returns false; returns true when every one sifts clean.
  bool verify_pass() {
    for (size_t l = 0; l < d.levels.size(); ++l) {
      Level& L = d.levels[l];
      for (std::uint32_t p : L.orbit_points) {
        Matrix up = transversal(L, p);
        for (size_t k = 0; k < L.gens.size(); ++k) {
          std::uint32_t sp = L.act[k].act(p);
          Matrix usp_inv = mat_inverse(transversal(L, sp));
          Matrix schreier = mat_mul(usp_inv, mat_mul(L.gens[k], up));
          auto [lev, r] = sift(schreier);
          if (lev < d.levels.size() || !r.is_identity()) {
            if (lev == d.levels.size()) new_level(choose_base(r));
            attach(r, lev);
            return false;
          }
        }
      }
    }
    return true;
  }
};

struct Rattle {
  std::mt19937_64 rng;
  std::vector<Matrix> slots;
  Matrix acc;

  Rattle(const std::vector<Matrix>& gens, std::uint64_t seed, int n)
      : rng(seed), acc(Matrix::identity(n)) {
    while (slots.size() < 8) slots.push_back(gens[slots.size() % gens.size()]);
    for (int k = 0; k < 60; ++k) step();
  }

  void step() {
    size_t i = rng() % slots.size();
    size_t j = rng() % (slots.size() - 1);
    if (j >= i) ++j;
    if (rng() & 1)
      slots[i] = mat_mul(slots[i], slots[j]);
    else
      slots[i] = mat_mul(slots[j], slots[i]);
    acc = mat_mul(acc, slots[i]);
  }

  const Matrix& next() {
    step();
    return acc;
  }
};

OrderResult run_order(const std::vector<Matrix>& gens, BSGSData data, const OrderOptions& opts) {
  const int n = data.dim;
  const std::uint64_t degree = (std::uint64_t(1) << n) - 1;
  const bool verifiable = degree <= (std::uint64_t(1) << 20);

  OrderResult res;
  res.data = std::move(data);
  Chain chain(res.data);

  std::vector<Matrix> nontrivial;
  for (const auto& g : gens)
    if (!g.is_identity()) nontrivial.push_back(g);

  for (const auto& g : nontrivial) chain.add(g);

  mpz_class ord = res.data.order();
  auto settle = [&](bool proved) {
    res.order = ord;
    if (opts.target) {
      if (ord == *opts.target)
        res.certificate = proved ? Certificate::Proved : Certificate::ReachedTarget;
      else
        res.certificate = Certificate::BelowTarget;
    } else {
      res.certificate = proved ? Certificate::Proved : Certificate::BelowTarget;
    }
  };

  if (nontrivial.empty()) {
    settle(true);
    return res;
  }

  Rattle rat(nontrivial, opts.seed, n);
  int clean = 0;
  for (;;) {
    if (opts.target) {
      if (ord > *opts.target)
        throw Error("computed order exceeds the target: generator set is inconsistent");
      if (ord == *opts.target) {
        bool proved = false;
        if (opts.prove && verifiable) {
          while (!chain.verify_pass()) {
          }
          ord = res.data.order();
          proved = true;
        }
        settle(proved);
        return res;
      }
    }
    if (clean >= opts.stable_rounds) {
      if (opts.prove && verifiable) {
        if (chain.verify_pass()) {
          settle(true);
          return res;
        }
        ord = res.data.order();
        clean = 0;
        continue;
      }
      settle(false);
      return res;
    }
    if (chain.add(rat.next())) {
      clean = 0;
      ord = res.data.order();
    } else {
      ++clean;
    }
  }
}

}  // namespace

OrderResult group_order(const std::vector<Matrix>& gens, const OrderOptions& opts) {
  if (gens.empty()) throw Error("group_order: no generators");
  const int n = gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw ShapeError("group_order: mixed dimensions");
  if (n > 32)
    throw ResourceGuardError("permutation degree 2^" + std::to_string(n) +
                             " is beyond the 32-bit point encoding");
  if (n > opts.guard_log2 && !opts.force)
    throw ResourceGuardError("permutation degree 2^" + std::to_string(n) +
                             " exceeds the memory guard; pass force to override");
  BSGSData data;
  data.dim = n;
  data.seed = opts.seed;
  return run_order(gens, std::move(data), opts);
}

OrderResult group_order_from(const std::vector<Matrix>& gens, BSGSData chain,
                             const OrderOptions& opts) {
  return run_order(gens, std::move(chain), opts);
}

std::uint64_t generator_set_hash(const std::vector<Matrix>& gens) {
  std::uint64_t h = 0;
  for (const auto& g : gens) h ^= g.hash();  // order-independent
  return h;
}

namespace {

template <typename T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
bool get(std::istream& is, T& v) {
  is.read(reinterpret_cast<char*>(&v), sizeof(v));
  return bool(is);
}

constexpr char kMagic[8] = {'M', 'C', 'G', 'B', 'S', 'G', 'S', '\1'};

void write_matrix(std::ostream& os, const Matrix& m) {
  put(os, std::int32_t(m.rows()));
  put(os, std::int32_t(m.cols()));
  for (gf2::word_t w : m.raw()) put(os, w);
}

bool read_matrix(std::istream& is, Matrix& m) {
  std::int32_t r, c;
  if (!get(is, r) || !get(is, c)) return false;
  if (r <= 0 || c <= 0 || r > 4096 || c > 4096) return false;
  Matrix out(r, c);
  for (int i = 0; i < r; ++i) {
    auto row = out.row(i);
    for (auto& w : row)
      if (!get(is, w)) return false;
  }
  m = std::move(out);
  return true;
}

}  // namespace

void save_bsgs_cache(const std::string& path, const CacheMeta& meta, const BSGSData& data) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write cache file " + path);
  f.write(kMagic, sizeof(kMagic));
  put(f, meta.version);
  put(f, meta.genus);
  put(f, meta.mode);
  put(f, meta.genhash);
  put(f, meta.seed);
  put(f, std::int32_t(data.dim));
  put(f, std::uint32_t(data.levels.size()));
  for (const auto& l : data.levels) {
    put(f, l.base);
    put(f, std::uint32_t(l.gens.size()));
    for (const auto& g : l.gens) write_matrix(f, g);
    put(f, std::uint64_t(l.orbit_points.size()));
  }
}

std::optional<BSGSData> load_bsgs_cache(const std::string& path, const CacheMeta& expect) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  char magic[8];
  f.read(magic, sizeof(magic));
  if (!f || std::memcmp(magic, kMagic, sizeof(magic)) != 0) return std::nullopt;
  CacheMeta meta;
  if (!get(f, meta.version) || !get(f, meta.genus) || !get(f, meta.mode) ||
      !get(f, meta.genhash) || !get(f, meta.seed))
    return std::nullopt;
  if (meta.version != expect.version || meta.genus != expect.genus || meta.mode != expect.mode ||
      meta.genhash != expect.genhash || meta.seed != expect.seed)
    return std::nullopt;
  std::int32_t dim;
  std::uint32_t nlevels;
  if (!get(f, dim) || !get(f, nlevels)) return std::nullopt;
  if (dim <= 0 || dim > 32 || nlevels > 4096) return std::nullopt;

  BSGSData data;
  data.dim = dim;
  data.seed = meta.seed;
  Chain chain(data);
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<std::vector<Matrix>> level_gens;
  std::vector<std::uint32_t> bases;
  for (std::uint32_t l = 0; l < nlevels; ++l) {
    std::uint32_t base, ngens;
    if (!get(f, base) || !get(f, ngens)) return std::nullopt;
    std::vector<Matrix> gens;
    for (std::uint32_t k = 0; k < ngens; ++k) {
      Matrix m(1, 1);
      if (!read_matrix(f, m)) return std::nullopt;
      if (m.rows() != dim || m.cols() != dim) return std::nullopt;
      gens.push_back(std::move(m));
    }
    std::uint64_t osz;
    if (!get(f, osz)) return std::nullopt;
    bases.push_back(base);
    level_gens.push_back(std::move(gens));
    orbit_sizes.push_back(osz);
  }
  // rebuild orbits from the stored strong generators, deepest level first so
  // attach() extends every prefix level
  for (std::uint32_t l = 0; l < nlevels; ++l) chain.new_level(bases[l]);
  for (std::uint32_t l = nlevels; l-- > 0;)
    for (const auto& g : level_gens[l]) chain.attach(g, l);
  for (std::uint32_t l = 0; l < nlevels; ++l)
    if (data.levels[l].orbit_points.size() != orbit_sizes[l]) return std::nullopt;
  return data;
}

}  // namespace mcg::cert

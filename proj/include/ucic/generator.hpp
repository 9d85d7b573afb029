#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ucic/errors.hpp"
#include "ucic/graphs.hpp"
#include "ucic/instance.hpp"

namespace ucic {

/// SplitMix64: the fixed-algorithm PRNG behind every generator, so instances
/// reproduce bit-for-bit across platforms and implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) using the top 53 bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) by rejection over a power-of-two mask.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~0ULL >> std::countl_zero(bound - 1);
    std::uint64_t v;
    do {
      v = next() & mask;
    } while (v >= bound);
    return v;
  }

 private:
  std::uint64_t state_;
};

/// Random single-unicast instance: client i wants p_i; every other symbol
/// independently enters its has set with probability p_has. Per-client
/// streams are decoupled by xoring the client index into the seed.
inline Instance gen_random(int n, double p_has, std::uint64_t seed) {
  if (n < 1 || p_has < 0.0 || p_has > 1.0)
    raise(Errc::bad_family_params, "gen_random needs n >= 1 and p_has in [0,1]");
  Instance inst;
  inst.n = inst.k = n;
  inst.has.resize(n);
  inst.want.resize(n);
  for (int i = 0; i < n; ++i) {
    inst.want[i] = {i};
    SplitMix64 rng(seed ^ static_cast<std::uint64_t>(i));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (rng.next_double() < p_has) inst.has[i].push_back(j);
    }
  }
  return inst;
}

struct SingleUniprior {
  Instance instance;
  std::vector<int> prior;  // prior[i] = the one symbol client i caches
  int cycle_count = 0;     // xi
};

/// Single-uniprior instance from a uniform fixed-point-free permutation:
/// H_i = {p_prior(i)}, W_i = {p_i}. Returns the permutation's cycle count.
inline SingleUniprior gen_single_uniprior(int n, std::uint64_t seed) {
  if (n < 2)
    raise(Errc::bad_family_params, "gen_single_uniprior needs n >= 2");
  SplitMix64 rng(seed);
  std::vector<int> perm(n);
  for (;;) {  // rejection-sample a derangement (acceptance ~ 1/e)
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(perm[i], perm[j]);
    }
    bool derangement = true;
    for (int i = 0; i < n; ++i)
      if (perm[i] == i) {
        derangement = false;
        break;
      }
    if (derangement) break;
  }

  SingleUniprior out;
  out.prior = perm;
  out.instance.n = out.instance.k = n;
  out.instance.has.resize(n);
  out.instance.want.resize(n);
  for (int i = 0; i < n; ++i) {
    out.instance.want[i] = {i};
    out.instance.has[i] = {perm[i]};
  }
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++out.cycle_count;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return out;
}

enum class ExtremeFamily { complete, star, edgeless, matching2_no_f };

inline std::optional<ExtremeFamily> extreme_family_by_name(const std::string& s) {
  if (s == "complete") return ExtremeFamily::complete;
  if (s == "star") return ExtremeFamily::star;
  if (s == "edgeless") return ExtremeFamily::edgeless;
  if (s == "matching2-noF") return ExtremeFamily::matching2_no_f;
  return std::nullopt;
}

/// Structured families whose optimal code length is known exactly:
/// complete (1), star (n-1), edgeless (n), and the two-disjoint-edge
/// matching family without the forbidden subgraph (n-2).
inline Instance gen_near_extreme(ExtremeFamily family, int n) {
  Instance inst;
  auto init = [&](int size) {
    inst.n = inst.k = size;
    inst.has.assign(size, {});
    inst.want.resize(size);
    for (int i = 0; i < size; ++i) inst.want[i] = {i};
  };
  switch (family) {
    case ExtremeFamily::complete:
      if (n < 2) raise(Errc::bad_family_params, "complete family needs n >= 2");
      init(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) inst.has[i].push_back(j);
      return inst;
    case ExtremeFamily::star:
      if (n < 3) raise(Errc::bad_family_params, "star family needs n >= 3");
      init(n);
      for (int j = 1; j < n; ++j) {
        inst.has[0].push_back(j);  // the center caches every leaf symbol
        inst.has[j] = {0};         // leaves cache only the center's symbol
      }
      return inst;
    case ExtremeFamily::edgeless:
      if (n < 1) raise(Errc::bad_family_params, "edgeless family needs n >= 1");
      init(n);
      return inst;
    case ExtremeFamily::matching2_no_f:
      if (n < 6)
        raise(Errc::bad_family_params, "matching2-noF family needs n >= 6");
      init(n);
      inst.has[0] = {1};
      inst.has[1] = {0};
      inst.has[2] = {3};
      inst.has[3] = {2};
      return inst;
  }
  raise(Errc::bad_family_params, "unknown near-extreme family");
}

/// The forbidden 4-vertex pattern excluded by the matching-size-two family:
/// a triangle plus one isolated vertex. Returned as an adjacency matrix.
inline std::vector<std::vector<bool>> forbidden_subgraph_f() {
  std::vector<std::vector<bool>> adj(4, std::vector<bool>(4, false));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) adj[a][b] = true;
  return adj;
}

/// True when some 4-vertex subgraph of K contains the pattern F, i.e. the
/// edges of F embed into K (subgraph containment, extra edges allowed).
inline bool contains_forbidden_f(const IdcGraph& k) {
  auto f = forbidden_subgraph_f();
  std::vector<int> verts = k.live().to_vector();
  const int n = static_cast<int>(verts.size());
  if (n < 4) return false;
  std::vector<int> pick(4);
  // enumerate ordered 4-tuples of distinct vertices
  std::vector<int> idx(4, 0);
  auto try_map = [&](auto&& self, int depth, std::vector<int>& used) -> bool {
    if (depth == 4) {
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (f[a][b] && !k.edge(pick[a], pick[b])) return false;
      return true;
    }
    for (int v : verts) {
      if (std::find(used.begin(), used.end(), v) != used.end()) continue;
      pick[depth] = v;
      used.push_back(v);
      if (self(self, depth + 1, used)) return true;
      used.pop_back();
    }
    return false;
  };
  std::vector<int> used;
  return try_map(try_map, 0, used);
}

/// Worked instances used throughout the tests and the CLI.
inline Instance fixture(const std::string& name) {
  auto build = [](int n, std::vector<std::vector<int>> has) {
    Instance inst;
    inst.n = inst.k = n;
    inst.has = std::move(has);
    inst.want.resize(n);
    for (int i = 0; i < n; ++i) inst.want[i] = {i};
    return inst;
  };
  if (name == "motivating")
    return build(5, {{1}, {2, 3}, {0, 3}, {0, 4}, {1, 2}});
  if (name == "alice-bob") return build(2, {{1}, {0}});
  if (name == "future-work")
    return build(4, {{3}, {0, 2}, {0, 1}, {1, 2}});
  raise(Errc::unknown_fixture, "no fixture named '" + name + "'");
}

inline std::vector<std::string> fixture_names() {
  return {"motivating", "alice-bob", "future-work"};
}

struct GenSpec {
  std::string family = "random";  // random | single-uniprior | complete |
                                  // star | edgeless | matching2-noF | fixture
  int n = 0;
  double p_has = 0.0;
  std::uint64_t seed = 0;
  std::string fixture_name;
};

inline Instance generate(const GenSpec& spec) {
  if (spec.family == "random") return gen_random(spec.n, spec.p_has, spec.seed);
  if (spec.family == "single-uniprior")
    return gen_single_uniprior(spec.n, spec.seed).instance;
  if (spec.family == "fixture") return fixture(spec.fixture_name);
  if (auto fam = extreme_family_by_name(spec.family))
    return gen_near_extreme(*fam, spec.n);
  raise(Errc::bad_family_params, "unknown family '" + spec.family + "'");
}

}  // namespace ucic

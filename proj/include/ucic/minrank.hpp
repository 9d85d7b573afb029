#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ucic/graphs.hpp"

namespace ucic {

/// Square bit matrix over GF(2), one 64-bit word per row (n <= 64).
struct BitMatrix {
  int n = 0;
  std::vector<std::uint64_t> rows;

  explicit BitMatrix(int size = 0) : n(size), rows(size, 0) {}

  bool get(int i, int j) const { return (rows[i] >> j) & 1ULL; }
  void set(int i, int j, bool v) {
    if (v)
      rows[i] |= 1ULL << j;
    else
      rows[i] &= ~(1ULL << j);
  }
};

/// Rank over GF(2) by word-parallel elimination.
inline int gf2_rank(BitMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.n && rank < m.n; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.n; ++r)
      if ((m.rows[r] >> col) & 1ULL) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(m.rows[pivot], m.rows[rank]);
    for (int r = 0; r < m.n; ++r)
      if (r != rank && ((m.rows[r] >> col) & 1ULL)) m.rows[r] ^= m.rows[rank];
    ++rank;
  }
  return rank;
}

/// GF(2) matrix pattern fitting a side-information graph: ones on the
/// diagonal, zeros off-diagonal except at arcs, which are free entries.
struct FitMatrix {
  int n = 0;
  std::vector<std::pair<int, int>> free_positions;  // arcs, row-major order

  /// Matrix with the given bits substituted for the free entries.
  BitMatrix completed(const std::vector<bool>& assignment) const {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    for (std::size_t f = 0; f < free_positions.size(); ++f)
      if (assignment[f])
        m.set(free_positions[f].first, free_positions[f].second, true);
    return m;
  }
};

/// Builds the fitting pattern of G on its live vertices, compacted to
/// [0, live_count). `ids` maps compacted indices back to original ids.
inline FitMatrix fit_matrix_of(const SideInfoGraph& g, std::vector<int>* ids = nullptr) {
  std::vector<int> live = g.live().to_vector();
  std::vector<int> rank(g.universe_size(), -1);
  for (std::size_t i = 0; i < live.size(); ++i) rank[live[i]] = static_cast<int>(i);
  FitMatrix fit;
  fit.n = static_cast<int>(live.size());
  for (int i : live)
    g.out(i).for_each([&](int j) {
      if (rank[j] != -1) fit.free_positions.emplace_back(rank[i], rank[j]);
    });
  if (ids) *ids = std::move(live);
  return fit;
}

struct MinrkResult {
  int value = 0;
  FitMatrix fit;
  std::vector<bool> assignment;  // witnessing free-entry bits
};

struct MinrkOptions {
  int max_free = 24;  // enumeration cap on the number of free entries
  int stop_at = 1;    // provably minimal rank; stop early when reached
};

/// Exact minrk2(G): minimum GF(2) rank over every completion of the fitting
/// pattern. Enumerates the 2^|E| assignments in Gray-code order so each step
/// flips a single free entry.
inline MinrkResult minrk2(const SideInfoGraph& g, MinrkOptions opts = {}) {
  FitMatrix fit = fit_matrix_of(g);
  const int f = static_cast<int>(fit.free_positions.size());
  if (f > opts.max_free)
    raise(Errc::too_large, "graph has " + std::to_string(f) +
                               " arcs, enumeration cap is " +
                               std::to_string(opts.max_free));

  MinrkResult best;
  best.fit = fit;
  best.assignment.assign(f, false);

  BitMatrix m = fit.completed(best.assignment);
  std::vector<bool> current(f, false);
  best.value = gf2_rank(m);

  const std::uint64_t total = 1ULL << f;
  for (std::uint64_t step = 1; step < total && best.value > opts.stop_at;
       ++step) {
    int flip = std::countr_zero(step);  // Gray-code neighbor
    auto [r, c] = fit.free_positions[flip];
    current[flip] = !current[flip];
    m.set(r, c, current[flip]);
    int rank = gf2_rank(m);
    if (rank < best.value) {
      best.value = rank;
      best.assignment = current;
    }
  }
  return best;
}

struct PhiResult {
  int value = 0;
  std::vector<std::vector<int>> partition;  // witnessing cliques, original ids
};

/// Exact minimum clique partition of K via dynamic programming over vertex
/// subsets (equivalently the chromatic number of the complement).
inline PhiResult exact_clique_partition(const IdcGraph& k, int max_n = 15) {
  std::vector<int> ids = k.live().to_vector();
  const int n = static_cast<int>(ids.size());
  if (n > max_n)
    raise(Errc::too_large, "exact partition supports up to " +
                               std::to_string(max_n) + " vertices, got " +
                               std::to_string(n));
  if (n == 0) return {};

  std::vector<std::uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && k.edge(ids[i], ids[j])) adj[i] |= 1u << j;

  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<bool> is_clique(full + 1, false);
  is_clique[0] = true;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    is_clique[s] = is_clique[rest] && (rest & ~adj[v]) == 0;
  }

  std::vector<int> dp(full + 1, n + 1);
  std::vector<std::uint32_t> choice(full + 1, 0);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1u << v);
    // all submasks of `rest`, plus v itself, that form a clique
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::uint32_t cand = sub | (1u << v);
      if (is_clique[cand] && dp[mask & ~cand] + 1 < dp[mask]) {
        dp[mask] = dp[mask & ~cand] + 1;
        choice[mask] = cand;
      }
      if (sub == 0) break;
    }
  }

  PhiResult out;
  out.value = dp[full];
  for (std::uint32_t mask = full; mask;) {
    std::uint32_t c = choice[mask];
    std::vector<int> clique;
    for (int i = 0; i < n; ++i)
      if ((c >> i) & 1u) clique.push_back(ids[i]);
    out.partition.push_back(std::move(clique));
    mask &= ~c;
  }
  std::sort(out.partition.begin(), out.partition.end());
  return out;
}

struct OmegaResult {
  int value = 0;
  std::vector<int> clique;  // witnessing maximum clique, original ids
};

/// Exact clique number by branch and bound with the |current|+|candidates|
/// cardinality bound.
inline OmegaResult clique_number(const IdcGraph& k, int max_n = 20) {
  std::vector<int> ids = k.live().to_vector();
  const int n = static_cast<int>(ids.size());
  if (n > max_n)
    raise(Errc::too_large, "clique number supports up to " +
                               std::to_string(max_n) + " vertices, got " +
                               std::to_string(n));
  if (n == 0) return {};

  std::vector<std::uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && k.edge(ids[i], ids[j])) adj[i] |= 1u << j;

  std::uint32_t best_mask = 0;
  int best = 0;
  auto expand = [&](auto&& self, std::uint32_t cur, int cur_size,
                    std::uint32_t cand) -> void {
    if (cur_size > best) {
      best = cur_size;
      best_mask = cur;
    }
    while (cand) {
      if (cur_size + std::popcount(cand) <= best) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      self(self, cur | (1u << v), cur_size + 1, cand & adj[v]);
    }
  };
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  expand(expand, 0, 0, full);

  OmegaResult out;
  out.value = best;
  for (int i = 0; i < n; ++i)
    if ((best_mask >> i) & 1u) out.clique.push_back(ids[i]);
  return out;
}

}  // namespace ucic

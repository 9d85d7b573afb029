#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ucic/graphs.hpp"

namespace ucic {

/// Disjoint cliques covering the live vertices of the generating IdcGraph.
struct CliquePartition {
  std::vector<std::vector<int>> cliques;  // members sorted ascending

  int r() const { return static_cast<int>(cliques.size()); }

  std::size_t min_size() const {
    std::size_t m = cliques.empty() ? 0 : cliques[0].size();
    for (const auto& c : cliques) m = std::min(m, c.size());
    return m;
  }
};

using Partitioner = std::function<CliquePartition(const IdcGraph&)>;

inline std::vector<std::string> verify_partition(const IdcGraph& k,
                                                 const CliquePartition& p) {
  std::vector<std::string> out;
  Bitset seen(k.universe_size());
  for (std::size_t ci = 0; ci < p.cliques.size(); ++ci) {
    const auto& c = p.cliques[ci];
    if (c.empty()) out.push_back("clique " + std::to_string(ci) + " is empty");
    for (int v : c) {
      if (v < 0 || v >= k.universe_size() || !k.is_live(v)) {
        out.push_back("clique " + std::to_string(ci) + " uses non-live vertex " +
                      std::to_string(v + 1));
        continue;
      }
      if (seen.test(v))
        out.push_back("vertex " + symbol_name(v) + " appears in two cliques");
      seen.set(v);
    }
    if (!k.is_clique(c))
      out.push_back("clique " + std::to_string(ci) + " is not a clique in K");
  }
  k.live().for_each([&](int v) {
    if (!seen.test(v))
      out.push_back("vertex " + symbol_name(v) + " is not covered");
  });
  return out;
}

namespace detail {

/// Exact maximum matching on a general graph (Edmonds' blossom algorithm,
/// O(V^3)). `adj` is indexed over the compacted vertex range [0, m).
/// Returns match[v] = partner or -1.
inline std::vector<int> blossom_matching(const std::vector<Bitset>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> match(n, -1), parent(n), base(n);
  std::vector<bool> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<bool> mark(n, false);
    for (;;) {
      a = base[a];
      mark[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    std::vector<int> queue{root};
    used[root] = true;
    std::size_t qi = 0;
    while (qi < queue.size()) {
      int v = queue[qi++];
      for (int to = 0; to < n; ++to) {
        if (!adj[v].test(to)) continue;
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur_base = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = true;
                queue.push_back(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            // Augment along the found alternating path.
            int u = to;
            while (u != -1) {
              int pv = parent[u], ppv = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = ppv;
            }
            return 1;
          }
          used[match[to]] = true;
          queue.push_back(match[to]);
        }
      }
    }
    return 0;
  };

  for (int v = 0; v < n; ++v)
    if (match[v] == -1) find_path(v);
  return match;
}

/// Maximum matching restricted to `verts` of k, as sorted vertex pairs
/// ordered by lower endpoint.
inline std::vector<std::pair<int, int>> maximum_matching(const IdcGraph& k,
                                                         const Bitset& verts) {
  std::vector<int> ids = verts.to_vector();
  const int m = static_cast<int>(ids.size());
  std::vector<int> rank(k.universe_size(), -1);
  for (int i = 0; i < m; ++i) rank[ids[i]] = i;
  std::vector<Bitset> adj(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    k.neighbors(ids[i]).for_each([&](int u) {
      if (rank[u] != -1) adj[i].set(rank[u]);
    });
  std::vector<int> match = blossom_matching(adj);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i)
    if (match[i] > i) out.emplace_back(ids[i], ids[match[i]]);
  return out;
}

}  // namespace detail

/// Least-difference greedy: scan vertices ascending; join the open clique
/// whose common neighborhood the vertex matches best (largest overlap with
/// its own neighborhood), ties to the oldest clique; otherwise open a new
/// singleton.
inline CliquePartition ldg_partition(const IdcGraph& k) {
  struct Open {
    std::vector<int> members;
    Bitset member_mask;
    Bitset common;  // intersection of members' neighborhoods
  };
  std::vector<Open> open;
  k.live().for_each([&](int v) {
    const Bitset& nv = k.neighbors(v);
    int best = -1;
    std::size_t best_score = 0;
    for (std::size_t ci = 0; ci < open.size(); ++ci) {
      if (!open[ci].member_mask.is_subset_of(nv)) continue;
      std::size_t score = (nv & open[ci].common).count();
      if (best == -1 || score > best_score) {
        best = static_cast<int>(ci);
        best_score = score;
      }
    }
    if (best == -1) {
      Open o;
      o.members = {v};
      o.member_mask = Bitset(k.universe_size());
      o.member_mask.set(v);
      o.common = nv;
      open.push_back(std::move(o));
    } else {
      open[best].members.push_back(v);
      open[best].member_mask.set(v);
      open[best].common &= nv;
    }
  });
  CliquePartition p;
  for (auto& o : open) p.cliques.push_back(std::move(o.members));
  return p;
}

/// Lowest-index seeding with greedy growth.
inline CliquePartition greedy_partition(const IdcGraph& k) {
  CliquePartition p;
  Bitset remaining = k.live();
  while (remaining.any()) {
    int seed = remaining.lowest();
    remaining.reset(seed);
    std::vector<int> clique{seed};
    Bitset cand = k.neighbors(seed) & remaining;
    while (cand.any()) {
      int u = cand.lowest();
      clique.push_back(u);
      remaining.reset(u);
      cand &= k.neighbors(u);
    }
    p.cliques.push_back(std::move(clique));
  }
  return p;
}

namespace detail {

// Greedy growth to a maximal clique inside `pool`, then (1,2)-swap local
// search: trade one member for two outside vertices while the result stays
// a clique. Each swap grows the clique, so the loop terminates.
inline std::vector<int> swap_improved_clique(const IdcGraph& k, int seed,
                                             const Bitset& pool) {
  Bitset members(k.universe_size());
  members.set(seed);
  auto grow = [&]() {
    for (;;) {
      Bitset cand = pool;
      cand -= members;
      bool grew = false;
      // lowest vertex adjacent to every member
      for (int u = cand.lowest(); u != -1;) {
        if (members.is_subset_of(k.neighbors(u))) {
          members.set(u);
          grew = true;
          break;
        }
        cand.reset(u);
        u = cand.lowest();
      }
      if (!grew) return;
    }
  };
  grow();
  for (bool improved = true; improved;) {
    improved = false;
    std::vector<int> mem = members.to_vector();
    for (int u : mem) {
      Bitset rest = members;
      rest.reset(u);
      Bitset outside = pool;
      outside -= members;
      // candidates adjacent to all remaining members
      std::vector<int> cands;
      outside.for_each([&](int w) {
        if (rest.is_subset_of(k.neighbors(w))) cands.push_back(w);
      });
      for (std::size_t a = 0; a < cands.size() && !improved; ++a)
        for (std::size_t b = a + 1; b < cands.size() && !improved; ++b)
          if (k.edge(cands[a], cands[b])) {
            members = rest;
            members.set(cands[a]);
            members.set(cands[b]);
            improved = true;
          }
      if (improved) break;
    }
    if (improved) grow();
  }
  return members.to_vector();
}

}  // namespace detail

/// Color-saving style partition: extract size>=3 cliques first, pair the
/// remainder with an exact maximum matching, leave the rest as singletons.
inline CliquePartition color_saving_partition(const IdcGraph& k) {
  CliquePartition p;
  Bitset pool = k.live();
  // Phase 1: pull out size >= 3 cliques; restart the seed scan after each
  // extraction since the pool changed.
  for (bool extracted = true; extracted;) {
    extracted = false;
    for (int seed : pool.to_vector()) {
      std::vector<int> clique = detail::swap_improved_clique(k, seed, pool);
      if (clique.size() >= 3) {
        for (int v : clique) pool.reset(v);
        p.cliques.push_back(std::move(clique));
        extracted = true;
        break;
      }
    }
  }
  // Phase 2: pair what remains via exact maximum matching.
  for (auto m : detail::maximum_matching(k, pool)) {
    pool.reset(m.first);
    pool.reset(m.second);
    p.cliques.push_back({m.first, m.second});
  }
  // Phase 3: singletons.
  pool.for_each([&](int v) { p.cliques.push_back({v}); });
  return p;
}

inline Partitioner partitioner_by_name(const std::string& name) {
  if (name == "ldg") return [](const IdcGraph& k) { return ldg_partition(k); };
  if (name == "color-saving")
    return [](const IdcGraph& k) { return color_saving_partition(k); };
  if (name == "greedy")
    return [](const IdcGraph& k) { return greedy_partition(k); };
  raise(Errc::bad_family_params, "unknown partition algorithm '" + name + "'");
}

}  // namespace ucic

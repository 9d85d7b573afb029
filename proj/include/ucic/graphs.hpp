#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ucic/bitset.hpp"
#include "ucic/errors.hpp"
#include "ucic/instance.hpp"

namespace ucic {

// Graph views share one convention: vertex ids live in a fixed universe
// [0, universe_size) and are never renumbered; pruning only shrinks the
// live set. Symbol identity therefore survives across solver iterations.

/// Side-information digraph G: arc (i, j) iff the client wanting symbol i
/// caches symbol j.
class SideInfoGraph {
 public:
  SideInfoGraph() = default;
  explicit SideInfoGraph(int universe)
      : live_(Bitset::full(universe)), out_(universe, Bitset(universe)) {}

  int universe_size() const { return static_cast<int>(out_.size()); }
  const Bitset& live() const { return live_; }
  int live_count() const { return static_cast<int>(live_.count()); }
  bool is_live(int v) const { return live_.test(v); }

  bool arc(int i, int j) const { return out_[i].test(j); }
  const Bitset& out(int i) const { return out_[i]; }

  void add_arc(int i, int j) {
    if (i != j) out_[i].set(j);
  }

  int arc_count() const {
    int c = 0;
    live_.for_each([&](int v) { c += static_cast<int>(out_[v].count()); });
    return c;
  }

  /// Removes satisfied vertices (with all incident arcs) and records cache
  /// gains as new arcs (m -> i). Returns the updated copy.
  SideInfoGraph after_step4b(
      const std::vector<int>& satisfied,
      const std::vector<std::pair<int, int>>& cache_updates) const {
    SideInfoGraph g = *this;
    for (int v : satisfied) {
      if (v < 0 || v >= g.universe_size() || !g.live_.test(v))
        raise(Errc::unknown_vertex,
              "satisfied vertex " + symbol_name(v) + " is not live");
      g.live_.reset(v);
    }
    for (auto [m, i] : cache_updates) {
      if (m < 0 || m >= g.universe_size() || !g.live_.test(m))
        raise(Errc::unknown_vertex,
              "cache update for non-live client " + client_name(m));
      if (i < 0 || i >= g.universe_size() || !g.live_.test(i))
        raise(Errc::unknown_vertex,
              "cache update gains non-live symbol " + symbol_name(i));
      g.add_arc(m, i);
    }
    // Mask every row down to the surviving vertex set.
    for (int v = 0; v < g.universe_size(); ++v) {
      if (!g.live_.test(v)) {
        g.out_[v] = Bitset(g.universe_size());
      } else {
        g.out_[v] &= g.live_;
      }
    }
    return g;
  }

 private:
  Bitset live_;
  std::vector<Bitset> out_;
};

/// Instantly-decodable-coding graph K: edge (i, j) iff both arcs (i, j) and
/// (j, i) exist in the generating G, so p_i xor p_j serves both requesters.
class IdcGraph {
 public:
  IdcGraph() = default;
  explicit IdcGraph(int universe)
      : live_(Bitset::full(universe)), nbr_(universe, Bitset(universe)) {}

  IdcGraph(int universe, const Bitset& live)
      : live_(live), nbr_(universe, Bitset(universe)) {}

  int universe_size() const { return static_cast<int>(nbr_.size()); }
  const Bitset& live() const { return live_; }
  int live_count() const { return static_cast<int>(live_.count()); }
  bool is_live(int v) const { return live_.test(v); }

  bool edge(int i, int j) const { return nbr_[i].test(j); }
  const Bitset& neighbors(int i) const { return nbr_[i]; }

  void add_edge(int i, int j) {
    if (i == j) return;
    nbr_[i].set(j);
    nbr_[j].set(i);
  }

  int edge_count() const {
    int twice = 0;
    live_.for_each([&](int v) { twice += static_cast<int>(nbr_[v].count()); });
    return twice / 2;
  }

  /// True when `members` (vertex ids) form a clique.
  bool is_clique(const std::vector<int>& members) const {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (!edge(members[a], members[b])) return false;
    return true;
  }

 private:
  Bitset live_;
  std::vector<Bitset> nbr_;
};

/// Information-flow digraph I for single-uniprior instances. Vertices are
/// symbols; the arc (i, j) says that the unique owner of symbol j requests
/// symbol i (so cached data flows from i's transmission toward j's owner).
class InfoFlowGraph {
 public:
  InfoFlowGraph() = default;
  explicit InfoFlowGraph(int universe)
      : live_(Bitset::full(universe)), out_(universe, Bitset(universe)) {}

  int universe_size() const { return static_cast<int>(out_.size()); }
  const Bitset& live() const { return live_; }
  bool is_live(int v) const { return live_.test(v); }
  bool arc(int i, int j) const { return out_[i].test(j); }
  const Bitset& out(int i) const { return out_[i]; }
  void add_arc(int i, int j) { out_[i].set(j); }

  int out_degree(int v) const { return static_cast<int>(out_[v].count()); }
  int in_degree(int v) const {
    int c = 0;
    live_.for_each([&](int u) { c += out_[u].test(v) ? 1 : 0; });
    return c;
  }

 private:
  Bitset live_;
  std::vector<Bitset> out_;
};

inline SideInfoGraph build_side_info_graph(const Instance& inst) {
  if (!is_single_unicast(inst))
    raise(Errc::not_single_unicast,
          "side-information graph needs a single-unicast instance "
          "(apply reduce_to_single_unicast first)");
  SideInfoGraph g(inst.n);
  for (int i = 0; i < inst.n; ++i)
    for (int j : inst.has[i]) g.add_arc(i, j);
  return g;
}

inline IdcGraph build_idc_graph(const SideInfoGraph& g) {
  IdcGraph k(g.universe_size(), g.live());
  g.live().for_each([&](int i) {
    g.out(i).for_each([&](int j) {
      if (j > i && g.arc(j, i)) k.add_edge(i, j);
    });
  });
  return k;
}

/// Exact edge complement on the live vertex set; no self-edges.
inline IdcGraph complement(const IdcGraph& k) {
  IdcGraph c(k.universe_size(), k.live());
  k.live().for_each([&](int i) {
    k.live().for_each([&](int j) {
      if (j > i && !k.edge(i, j)) c.add_edge(i, j);
    });
  });
  return c;
}

inline InfoFlowGraph build_info_flow_graph(const Instance& inst) {
  if (!is_valid(inst))
    raise(Errc::invalid_instance, "info-flow graph needs a valid instance");
  std::vector<int> owner(inst.k, -1);
  for (int m = 0; m < inst.n; ++m) {
    if (inst.has[m].size() != 1)
      raise(Errc::not_single_uniprior,
            client_name(m) + " must cache exactly one symbol");
    int s = inst.has[m][0];
    if (owner[s] != -1)
      raise(Errc::not_single_uniprior,
            symbol_name(s) + " is cached by two clients");
    owner[s] = m;
  }
  InfoFlowGraph flow(inst.k);
  for (int m = 0; m < inst.n; ++m)
    for (int w : inst.want[m]) flow.add_arc(w, inst.has[m][0]);
  return flow;
}

/// Maximal strongly connected components; components are ordered by their
/// smallest vertex id and listed ascending inside.
struct SccDecomposition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;  // -1 for non-live vertices

  int count() const { return static_cast<int>(components.size()); }
};

namespace detail {

// Iterative Tarjan over whichever digraph type exposes live()/out().
template <typename Digraph>
SccDecomposition tarjan_scc(const Digraph& g) {
  const int n = g.universe_size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  struct Frame {
    int v;
    std::vector<int> succ;
    std::size_t next;
  };
  std::vector<Frame> frames;

  auto successors = [&](int v) {
    std::vector<int> out;
    g.out(v).for_each([&](int u) {
      if (g.is_live(u)) out.push_back(u);
    });
    return out;
  };

  g.live().for_each([&](int root) {
    if (index[root] != -1) return;
    frames.push_back({root, successors(root), 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < f.succ.size()) {
        int u = f.succ[f.next++];
        if (index[u] == -1) {
          index[u] = low[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = true;
          frames.push_back({u, successors(u), 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], index[u]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<int> members;
          while (true) {
            int u = stack.back();
            stack.pop_back();
            on_stack[u] = false;
            members.push_back(u);
            if (u == v) break;
          }
          std::sort(members.begin(), members.end());
          comps.push_back(std::move(members));
        }
      }
    }
  });

  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SccDecomposition out;
  out.component_of.assign(n, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) out.component_of[v] = static_cast<int>(c);
  out.components = std::move(comps);
  return out;
}

}  // namespace detail

inline SccDecomposition scc_decompose(const SideInfoGraph& g) {
  return detail::tarjan_scc(g);
}
inline SccDecomposition scc_decompose(const InfoFlowGraph& g) {
  return detail::tarjan_scc(g);
}

inline SideInfoGraph apply_step4b(
    const SideInfoGraph& g, const std::vector<int>& satisfied,
    const std::vector<std::pair<int, int>>& cache_updates) {
  return g.after_step4b(satisfied, cache_updates);
}

inline std::string to_dot(const SideInfoGraph& g, const std::string& name = "G") {
  std::string s = "digraph " + name + " {\n";
  g.live().for_each([&](int v) {
    s += "  " + std::to_string(v + 1) + " [label=\"" + symbol_name(v) + "\"];\n";
  });
  g.live().for_each([&](int v) {
    g.out(v).for_each([&](int u) {
      s += "  " + std::to_string(v + 1) + " -> " + std::to_string(u + 1) + ";\n";
    });
  });
  s += "}\n";
  return s;
}

inline std::string to_dot(const IdcGraph& k, const std::string& name = "K") {
  std::string s = "graph " + name + " {\n";
  k.live().for_each([&](int v) {
    s += "  " + std::to_string(v + 1) + " [label=\"" + symbol_name(v) + "\"];\n";
  });
  k.live().for_each([&](int v) {
    k.neighbors(v).for_each([&](int u) {
      if (u > v)
        s += "  " + std::to_string(v + 1) + " -- " + std::to_string(u + 1) + ";\n";
    });
  });
  s += "}\n";
  return s;
}

}  // namespace ucic

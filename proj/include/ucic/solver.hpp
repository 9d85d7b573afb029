#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucic/clique_partition.hpp"
#include "ucic/code.hpp"
#include "ucic/graphs.hpp"

namespace ucic {

// The solver keeps the whole algorithm state inside the side-information
// graph: live vertices are the unsatisfied clients (identified with their
// wanted symbols) and the arc set encodes the current has sets among live
// symbols. Cache gains become arcs, satisfied clients leave the graph.

struct PiggybackCandidate {
  int symbol = -1;                  // piggyback symbol id
  int gain = 0;                     // clients that would grow their cache
  std::vector<int> gaining_clients; // sorted
};

/// Searches for the piggyback symbol of one clique: a live symbol outside
/// the clique cached by every clique member, scored by how many other live
/// clients hold the whole clique but not the symbol (those decode it and
/// grow their caches). Ties go to the lowest symbol id. Absent when no
/// symbol passes the containment test.
inline std::optional<PiggybackCandidate> greedy_search(
    const SideInfoGraph& g, const std::vector<int>& clique) {
  Bitset clique_mask(g.universe_size());
  for (int v : clique) clique_mask.set(v);

  std::optional<PiggybackCandidate> best;
  g.live().for_each([&](int i) {
    if (clique_mask.test(i)) return;
    for (int j : clique)
      if (!g.arc(j, i)) return;  // some member lacks the candidate
    PiggybackCandidate cand;
    cand.symbol = i;
    g.live().for_each([&](int m) {
      if (clique_mask.test(m) || m == i) return;
      if (clique_mask.is_subset_of(g.out(m)) && !g.arc(m, i)) {
        cand.gaining_clients.push_back(m);
      }
    });
    cand.gain = static_cast<int>(cand.gaining_clients.size());
    if (!best || cand.gain > best->gain) best = std::move(cand);
  });
  return best;
}

struct PairCandidate {
  std::vector<int> clique;  // sorted
  PiggybackCandidate piggyback;
};

/// Global choice among per-clique search results: maximum gain, ties broken
/// by the lexicographically smallest clique, then the lowest piggyback id.
inline const PairCandidate& select_best_pair(
    const std::vector<PairCandidate>& candidates) {
  const PairCandidate* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.piggyback.gain != best->piggyback.gain) {
      if (c.piggyback.gain > best->piggyback.gain) best = &c;
    } else if (c.clique != best->clique) {
      if (c.clique < best->clique) best = &c;
    } else if (c.piggyback.symbol < best->piggyback.symbol) {
      best = &c;
    }
  }
  return *best;
}

/// Step 5: one transmission per clique, XOR of its members.
inline std::vector<CodedSymbol> fallback_emit(const CliquePartition& partition) {
  std::vector<CodedSymbol> out;
  out.reserve(partition.cliques.size());
  for (const auto& c : partition.cliques) out.push_back(coded(c));
  return out;
}

struct SolveIteration {
  std::vector<int> chosen_clique;  // empty on the full-partition fallback
  std::optional<int> piggyback;
  std::vector<int> satisfied;
  std::vector<std::pair<int, int>> cache_gains;  // (client, gained symbol)
  int partition_size_r = 0;
};

struct SolveTrace {
  std::vector<SolveIteration> iterations;
  bool fallback_used = false;

  /// Line-delimited export, one record per iteration.
  std::string to_lines() const {
    std::string out;
    for (std::size_t t = 0; t < iterations.size(); ++t) {
      const auto& it = iterations[t];
      out += "iteration=" + std::to_string(t + 1);
      out += " Y_b={";
      for (std::size_t i = 0; i < it.chosen_clique.size(); ++i)
        out += (i ? "," : "") + symbol_name(it.chosen_clique[i]);
      out += "} pbs=";
      out += it.piggyback ? symbol_name(*it.piggyback) : "-";
      out += " satisfied={";
      for (std::size_t i = 0; i < it.satisfied.size(); ++i)
        out += (i ? "," : "") + client_name(it.satisfied[i]);
      out += "} gains={";
      for (std::size_t i = 0; i < it.cache_gains.size(); ++i)
        out += (i ? "," : "") + client_name(it.cache_gains[i].first) + ":" +
               symbol_name(it.cache_gains[i].second);
      out += "} r=" + std::to_string(it.partition_size_r) + "\n";
    }
    return out;
  }
};

struct SolveOptions {
  /// When no clique admits a piggyback the paper transmits the whole
  /// partition and stops. Setting this keeps looping instead, sending only
  /// the smallest minimum clique plain each time.
  bool continue_after_fallback = false;
};

struct SolveResult {
  IndexCode code;
  SolveTrace trace;
};

/// The UCIC main loop: re-partition K, search every minimum clique for the
/// best piggyback (accepted only when at least one client gains a cache
/// entry), transmit, prune the graph, repeat; fall back to the plain clique
/// partition when no piggyback exists anywhere.
inline SolveResult ucic_solve(const Instance& inst,
                              const Partitioner& partitioner,
                              SolveOptions opts = {}) {
  if (!is_valid(inst) || !is_single_unicast(inst))
    raise(Errc::invalid_instance,
          "ucic_solve needs a valid single-unicast instance");

  SolveResult result;
  SideInfoGraph g = build_side_info_graph(inst);

  while (g.live().any()) {
    IdcGraph k = build_idc_graph(g);
    CliquePartition q = partitioner(k);
    const std::size_t min_size = q.min_size();

    std::vector<PairCandidate> candidates;
    for (const auto& clique : q.cliques) {
      if (clique.size() != min_size) continue;
      auto found = greedy_search(g, clique);
      if (found && found->gain >= 1)
        candidates.push_back({clique, std::move(*found)});
    }

    if (!candidates.empty()) {
      const PairCandidate& pick = select_best_pair(candidates);
      std::vector<int> support = pick.clique;
      support.push_back(pick.piggyback.symbol);
      result.code.transmissions.push_back(coded(std::move(support)));

      SolveIteration it;
      it.chosen_clique = pick.clique;
      it.piggyback = pick.piggyback.symbol;
      it.satisfied = pick.clique;  // the piggyback's requester stays unsatisfied
      for (int m : pick.piggyback.gaining_clients)
        it.cache_gains.emplace_back(m, pick.piggyback.symbol);
      it.partition_size_r = q.r();
      g = apply_step4b(g, it.satisfied, it.cache_gains);
      result.trace.iterations.push_back(std::move(it));
      continue;
    }

    if (opts.continue_after_fallback) {
      // Most aggressive variant: send one minimum clique uncoded and keep
      // looking for piggybacks on the rest.
      std::vector<int> pick;
      for (const auto& clique : q.cliques)
        if (clique.size() == min_size && (pick.empty() || clique < pick))
          pick = clique;
      result.code.transmissions.push_back(coded(pick));
      SolveIteration it;
      it.chosen_clique = pick;
      it.satisfied = pick;
      it.partition_size_r = q.r();
      g = apply_step4b(g, it.satisfied, {});
      result.trace.iterations.push_back(std::move(it));
      continue;
    }

    // Step 5: transmit the whole partition and stop.
    for (auto& t : fallback_emit(q)) result.code.transmissions.push_back(std::move(t));
    SolveIteration it;
    it.satisfied = g.live().to_vector();
    it.partition_size_r = q.r();
    result.trace.iterations.push_back(std::move(it));
    result.trace.fallback_used = true;
    break;
  }
  return result;
}

/// The traditional baseline: partition the initial K once and send every
/// clique as one XOR transmission.
inline SolveResult plain_partition_solve(const Instance& inst,
                                         const Partitioner& partitioner) {
  if (!is_valid(inst) || !is_single_unicast(inst))
    raise(Errc::invalid_instance,
          "plain_partition_solve needs a valid single-unicast instance");
  SideInfoGraph g = build_side_info_graph(inst);
  IdcGraph k = build_idc_graph(g);
  CliquePartition q = partitioner(k);
  SolveResult result;
  for (auto& t : fallback_emit(q)) result.code.transmissions.push_back(std::move(t));
  SolveIteration it;
  it.satisfied = g.live().to_vector();
  it.partition_size_r = q.r();
  result.trace.iterations.push_back(std::move(it));
  result.trace.fallback_used = true;
  return result;
}

}  // namespace ucic

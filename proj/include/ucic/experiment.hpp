#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "ucic/codec.hpp"
#include "ucic/generator.hpp"
#include "ucic/minrank.hpp"
#include "ucic/solver.hpp"

namespace ucic {

// Algorithm registry: the three stand-alone clique-partition baselines and
// their UCIC-driven counterparts.

enum class Algorithm {
  ldg,
  color_saving,
  greedy,
  ucic_ldg,
  ucic_color_saving,
  ucic_greedy,
};

inline const std::vector<std::pair<Algorithm, const char*>>& algorithm_names() {
  static const std::vector<std::pair<Algorithm, const char*>> names = {
      {Algorithm::ldg, "ldg"},
      {Algorithm::color_saving, "color-saving"},
      {Algorithm::greedy, "greedy"},
      {Algorithm::ucic_ldg, "ucic-ldg"},
      {Algorithm::ucic_color_saving, "ucic-color-saving"},
      {Algorithm::ucic_greedy, "ucic-greedy"},
  };
  return names;
}

inline std::string algorithm_name(Algorithm a) {
  for (const auto& [alg, name] : algorithm_names())
    if (alg == a) return name;
  return "?";
}

inline std::optional<Algorithm> algorithm_by_name(const std::string& s) {
  for (const auto& [alg, name] : algorithm_names())
    if (s == name) return alg;
  return std::nullopt;
}

inline bool is_ucic(Algorithm a) {
  return a == Algorithm::ucic_ldg || a == Algorithm::ucic_color_saving ||
         a == Algorithm::ucic_greedy;
}

inline Partitioner algorithm_partitioner(Algorithm a) {
  switch (a) {
    case Algorithm::ldg:
    case Algorithm::ucic_ldg:
      return partitioner_by_name("ldg");
    case Algorithm::color_saving:
    case Algorithm::ucic_color_saving:
      return partitioner_by_name("color-saving");
    case Algorithm::greedy:
    case Algorithm::ucic_greedy:
      return partitioner_by_name("greedy");
  }
  raise(Errc::bad_family_params, "unknown algorithm");
}

inline SolveResult solve_with(const Instance& inst, Algorithm a,
                              SolveOptions opts = {}) {
  if (is_ucic(a)) return ucic_solve(inst, algorithm_partitioner(a), opts);
  return plain_partition_solve(inst, algorithm_partitioner(a));
}

struct ExperimentSpec {
  std::vector<int> n_values;
  std::vector<double> p_has_values;
  int trials = 1;
  std::vector<Algorithm> algorithms;
  std::uint64_t base_seed = 1;
};

struct ExperimentRow {
  int n = 0;
  double p_has = 0.0;
  Algorithm algorithm = Algorithm::ldg;
  int trial = 0;
  std::uint64_t seed = 0;
  int ell = 0;
  CodingGain coding_gain;
  bool fallback_used = false;
};

namespace detail {
inline std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", p);
  return buf;
}
}  // namespace detail

/// Runs every (n, p_has, trial, algorithm) combination on one shared
/// instance per trial, verifies every produced code, and returns rows in a
/// fixed deterministic order. An invalid code aborts with the solver trace.
inline std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.trials < 1)
    raise(Errc::bad_family_params, "experiment needs trials >= 1");
  if (spec.algorithms.empty())
    raise(Errc::bad_family_params, "experiment needs at least one algorithm");
  std::vector<ExperimentRow> rows;
  for (int n : spec.n_values) {
    for (double p : spec.p_has_values) {
      for (int trial = 0; trial < spec.trials; ++trial) {
        std::uint64_t seed = spec.base_seed + static_cast<std::uint64_t>(trial);
        Instance inst = gen_random(n, p, seed);
        for (Algorithm a : spec.algorithms) {
          SolveResult res = solve_with(inst, a);
          VerifyReport rep = verify_code_valid(inst, res.code);
          if (!rep.valid)
            raise(Errc::invalid_code_produced,
                  algorithm_name(a) + " produced an invalid code on n=" +
                      std::to_string(n) + " p_has=" + detail::format_p(p) +
                      " seed=" + std::to_string(seed) + "\ntrace:\n" +
                      res.trace.to_lines());
          ExperimentRow row;
          row.n = n;
          row.p_has = p;
          row.algorithm = a;
          row.trial = trial;
          row.seed = seed;
          row.ell = res.code.length();
          row.coding_gain = {n, row.ell};
          row.fallback_used = res.trace.fallback_used;
          rows.push_back(row);
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.p_has != b.p_has) return a.p_has < b.p_has;
    if (a.trial != b.trial) return a.trial < b.trial;
    return algorithm_name(a.algorithm) < algorithm_name(b.algorithm);
  });
  return rows;
}

inline std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = "n,p_has,algorithm,trial,seed,ell,coding_gain,fallback_used\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + detail::format_p(r.p_has) + "," +
           algorithm_name(r.algorithm) + "," + std::to_string(r.trial) + "," +
           std::to_string(r.seed) + "," + std::to_string(r.ell) + "," +
           r.coding_gain.to_decimal() + "," + (r.fallback_used ? "1" : "0") +
           "\n";
  }
  return out;
}

struct BoundsReport {
  int omega = 0;   // clique number of the complement of K (lower bound)
  int minrk = 0;   // exact optimum
  int phi = 0;     // exact minimum clique partition of K (upper bound)
  std::vector<std::pair<Algorithm, int>> lengths;
  bool ok = false; // sandwich held for every algorithm

  std::string to_string() const {
    std::string s = "omega=" + std::to_string(omega) +
                    " minrk2=" + std::to_string(minrk) +
                    " phi=" + std::to_string(phi) + "\n";
    for (const auto& [a, ell] : lengths)
      s += algorithm_name(a) + ": ell=" + std::to_string(ell) + "\n";
    s += ok ? "sandwich: ok\n" : "sandwich: VIOLATED\n";
    return s;
  }
};

struct BoundsOptions {
  int max_free = 24;
  int max_partition_n = 15;
  int max_clique_n = 20;
};

/// Exercises the exact oracles against every algorithm on one instance and
/// checks the bound chain omega <= minrk2 <= ell(ucic-X) <= ell(X) <= n.
inline BoundsReport check_bounds(const Instance& inst,
                                 BoundsOptions opts = {}) {
  SideInfoGraph g = build_side_info_graph(inst);
  IdcGraph k = build_idc_graph(g);
  BoundsReport rep;
  rep.omega = clique_number(complement(k), opts.max_clique_n).value;
  rep.minrk = minrk2(g, {opts.max_free, rep.omega}).value;
  rep.phi = exact_clique_partition(k, opts.max_partition_n).value;
  rep.ok = rep.omega <= rep.minrk && rep.minrk <= rep.phi;
  for (const auto& [alg, name] : algorithm_names()) {
    (void)name;
    SolveResult res = solve_with(inst, alg);
    if (!verify_code_valid(inst, res.code).valid) rep.ok = false;
    rep.lengths.emplace_back(alg, res.code.length());
    if (res.code.length() < rep.minrk || res.code.length() > inst.n)
      rep.ok = false;
  }
  auto ell_of = [&](Algorithm a) {
    for (const auto& [alg, ell] : rep.lengths)
      if (alg == a) return ell;
    return -1;
  };
  if (ell_of(Algorithm::ucic_ldg) > ell_of(Algorithm::ldg)) rep.ok = false;
  if (ell_of(Algorithm::ucic_color_saving) > ell_of(Algorithm::color_saving))
    rep.ok = false;
  if (ell_of(Algorithm::ucic_greedy) > ell_of(Algorithm::greedy)) rep.ok = false;
  return rep;
}

}  // namespace ucic

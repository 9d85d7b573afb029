#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "ucic/clique_partition.hpp"
#include "ucic/generator.hpp"
#include "ucic/minrank.hpp"

using namespace ucic;

namespace {

IdcGraph complete_graph(int n) {
  IdcGraph k(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) k.add_edge(i, j);
  return k;
}

IdcGraph star_graph(int n) {
  IdcGraph k(n);
  for (int j = 1; j < n; ++j) k.add_edge(0, j);
  return k;
}

void check_valid(const IdcGraph& k, const CliquePartition& p) {
  auto violations = verify_partition(k, p);
  for (const auto& v : violations) UNSCOPED_INFO(v);
  REQUIRE(violations.empty());
}

}  // namespace

TEST_CASE("edgeless graph partitions into singletons under all heuristics") {
  IdcGraph k(5);
  for (const char* name : {"ldg", "color-saving", "greedy"}) {
    CliquePartition p = partitioner_by_name(name)(k);
    INFO(name);
    CHECK(p.r() == 5);
    check_valid(k, p);
  }
}

TEST_CASE("complete graph collapses to one clique") {
  IdcGraph k4 = complete_graph(4);
  CHECK(ldg_partition(k4).r() == 1);
  CHECK(color_saving_partition(k4).r() == 1);
  IdcGraph k3 = complete_graph(3);
  CHECK(greedy_partition(k3).r() == 1);
}

TEST_CASE("ldg on a star yields one pair and singletons") {
  IdcGraph k = star_graph(6);
  CliquePartition p = ldg_partition(k);
  CHECK(p.r() == 5);
  int pairs = 0;
  for (const auto& c : p.cliques) pairs += c.size() == 2 ? 1 : 0;
  CHECK(pairs == 1);
  check_valid(k, p);
}

TEST_CASE("greedy splits a path into an edge and a singleton") {
  IdcGraph k = oracles::idc_graph(3, {{0, 1}, {1, 2}});
  CliquePartition p = greedy_partition(k);
  CHECK(p.r() == 2);
  check_valid(k, p);
}

TEST_CASE("color saving keeps a triangle whole") {
  IdcGraph k = oracles::idc_graph(4, {{0, 1}, {0, 2}, {1, 2}});
  CliquePartition p = color_saving_partition(k);
  REQUIRE(p.r() == 2);
  CHECK(p.cliques[0] == std::vector<int>{0, 1, 2});
  CHECK(p.cliques[1] == std::vector<int>{3});
}

TEST_CASE("color saving pairs a matching exactly") {
  IdcGraph k = oracles::idc_graph(6, {{0, 3}, {1, 4}});
  CliquePartition p = color_saving_partition(k);
  CHECK(p.r() == 4);  // two pairs + two singletons
  check_valid(k, p);
}

TEST_CASE("verify_partition reports overlap, non-clique and coverage") {
  IdcGraph k = oracles::idc_graph(3, {{0, 1}, {1, 2}});
  CliquePartition overlapping{{{0, 1}, {1, 2}}};
  CHECK(verify_partition(k, overlapping).size() == 1);
  CliquePartition non_clique{{{0, 2}, {1}}};
  CHECK(verify_partition(k, non_clique).size() == 1);
  CliquePartition missing{{{0, 1}}};
  CHECK(verify_partition(k, missing).size() == 1);
}

TEST_CASE("heuristics are deterministic and never beat the exact oracle") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    IdcGraph k = oracles::random_idc_graph(10, 0.35, seed);
    int phi = exact_clique_partition(k).value;
    for (const char* name : {"ldg", "color-saving", "greedy"}) {
      INFO("seed " << seed << " algorithm " << name);
      auto partitioner = partitioner_by_name(name);
      CliquePartition p = partitioner(k);
      check_valid(k, p);
      CHECK(p.r() >= phi);
      CHECK(p.r() <= 10);
      // identical run -> identical partition
      CHECK(partitioner(k).cliques == p.cliques);
    }
  }
}

TEST_CASE("r equals n exactly when K is edgeless") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    IdcGraph k = oracles::random_idc_graph(8, 0.2, seed);
    bool edgeless = k.edge_count() == 0;
    for (const char* name : {"ldg", "color-saving", "greedy"}) {
      CliquePartition p = partitioner_by_name(name)(k);
      CHECK((p.r() == 8) == edgeless);
    }
  }
}

TEST_CASE("blossom matching is maximum on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 4 + static_cast<int>(seed % 6);
    IdcGraph k = oracles::random_idc_graph(n, 0.4, seed * 77);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && k.edge(i, j)) adj[i][j] = true;
    auto matching = detail::maximum_matching(k, k.live());
    for (auto [a, b] : matching) CHECK(k.edge(a, b));
    CHECK(static_cast<int>(matching.size()) ==
          oracles::brute_matching_size(n, adj));
  }
}

TEST_CASE("blossom handles odd cycles") {
  // 5-cycle plus a chord: maximum matching 2
  IdcGraph k = oracles::idc_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto matching = detail::maximum_matching(k, k.live());
  CHECK(matching.size() == 2);
}

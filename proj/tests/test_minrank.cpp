#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "ucic/generator.hpp"
#include "ucic/minrank.hpp"

using namespace ucic;

namespace {

BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  BitMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) m.set(i, j, rows[i][j] != 0);
  return m;
}

SideInfoGraph directed_cycle(int n) {
  SideInfoGraph g(n);
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("rank of identity and all-ones") {
  BitMatrix id(5);
  for (int i = 0; i < 5; ++i) id.set(i, i, true);
  CHECK(gf2_rank(id) == 5);

  BitMatrix ones(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ones.set(i, j, true);
  CHECK(gf2_rank(ones) == 1);
}

TEST_CASE("rank of the worked completed fitting matrix is three") {
  BitMatrix m = from_rows({{1, 1, 0, 0, 0},
                           {0, 1, 0, 1, 0},
                           {0, 0, 1, 0, 1},
                           {1, 0, 0, 1, 0},
                           {0, 0, 1, 0, 1}});
  CHECK(gf2_rank(m) == 3);
}

TEST_CASE("rank agrees with naive elimination on random matrices") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 500; ++rep) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
    BitMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool bit = rng() & 1;
        rows[i][j] = bit;
        m.set(i, j, bit);
      }
    REQUIRE(gf2_rank(m) == oracles::naive_gf2_rank(rows));
  }
}

TEST_CASE("fitting pattern has ones on the diagonal and frees at arcs") {
  SideInfoGraph g = build_side_info_graph(fixture("motivating"));
  FitMatrix fit = fit_matrix_of(g);
  CHECK(fit.n == 5);
  CHECK(fit.free_positions.size() == 9);
  BitMatrix zeroed = fit.completed(std::vector<bool>(9, false));
  CHECK(gf2_rank(zeroed) == 5);  // identity when all frees are zero
}

TEST_CASE("minrk2 of the motivating example is three") {
  SideInfoGraph g = build_side_info_graph(fixture("motivating"));
  MinrkResult res = minrk2(g);
  CHECK(res.value == 3);
  CHECK(gf2_rank(res.fit.completed(res.assignment)) == 3);
}

TEST_CASE("minrk2 extremes: complete digraph and arcless graph") {
  Instance complete = gen_near_extreme(ExtremeFamily::complete, 4);
  CHECK(minrk2(build_side_info_graph(complete)).value == 1);
  Instance edgeless = gen_near_extreme(ExtremeFamily::edgeless, 6);
  CHECK(minrk2(build_side_info_graph(edgeless)).value == 6);
}

TEST_CASE("minrk2 of directed cycles is n-1") {
  for (int n : {3, 4, 5}) CHECK(minrk2(directed_cycle(n)).value == n - 1);
}

TEST_CASE("minrk2 refuses oversized enumerations") {
  SideInfoGraph g = build_side_info_graph(gen_random(12, 0.5, 1));
  REQUIRE(g.arc_count() > 24);
  REQUIRE_THROWS_AS(minrk2(g), Error);
}

TEST_CASE("minrk2 is monotone non-increasing under arc addition") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    Instance inst = gen_random(6, 0.2, rng());
    SideInfoGraph g = build_side_info_graph(inst);
    int before = minrk2(g).value;
    // add a random missing arc
    std::vector<std::pair<int, int>> missing;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (i != j && !g.arc(i, j)) missing.emplace_back(i, j);
    if (missing.empty()) continue;
    auto [a, b] = missing[rng() % missing.size()];
    SideInfoGraph denser = g;
    denser.add_arc(a, b);
    CHECK(minrk2(denser).value <= before);
  }
}

TEST_CASE("sandwich holds on random small instances") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Instance inst = gen_random(7, 0.25, seed);
    SideInfoGraph g = build_side_info_graph(inst);
    if (g.arc_count() > 24) continue;
    IdcGraph k = build_idc_graph(g);
    int omega = clique_number(complement(k)).value;
    int mr = minrk2(g).value;
    int phi = exact_clique_partition(k).value;
    INFO("seed " << seed);
    CHECK(omega <= mr);
    CHECK(mr <= phi);
  }
}

TEST_CASE("exact partition on fixed graphs") {
  CHECK(exact_clique_partition(IdcGraph(5)).value == 5);
  IdcGraph complete(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) complete.add_edge(i, j);
  auto res = exact_clique_partition(complete);
  CHECK(res.value == 1);
  REQUIRE(res.partition.size() == 1);
  CHECK(res.partition[0] == std::vector<int>{0, 1, 2, 3, 4, 5});

  IdcGraph c5 = oracles::idc_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(exact_clique_partition(c5).value == 3);
}

TEST_CASE("exact partition equals exhaustive search on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    int n = 2 + static_cast<int>(seed % 7);
    IdcGraph k = oracles::random_idc_graph(n, 0.4, seed * 13);
    auto res = exact_clique_partition(k);
    CHECK(res.value == oracles::brute_clique_partition(k));
    CHECK(verify_partition(k, CliquePartition{res.partition}).empty());
  }
}

TEST_CASE("exact partition respects the size cap") {
  REQUIRE_THROWS_AS(exact_clique_partition(IdcGraph(16)), Error);
  REQUIRE_NOTHROW(exact_clique_partition(IdcGraph(16), 16));
}

TEST_CASE("clique number on fixed and random graphs") {
  IdcGraph complete(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) complete.add_edge(i, j);
  auto res = clique_number(complete);
  CHECK(res.value == 4);
  CHECK(res.clique == std::vector<int>{0, 1, 2, 3});
  CHECK(clique_number(IdcGraph(4)).value == 1);

  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    IdcGraph k = oracles::random_idc_graph(10, 0.5, seed * 31);
    CHECK(clique_number(k).value == oracles::brute_clique_number(k));
  }
}

TEST_CASE("clique number respects the size cap") {
  REQUIRE_THROWS_AS(clique_number(IdcGraph(21)), Error);
}

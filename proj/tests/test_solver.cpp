#include <numeric>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "ucic/codec.hpp"
#include "ucic/experiment.hpp"
#include "ucic/generator.hppp"
#include "ucic/minrank.hpp"
#include "ucic/solver.hpp"

using namespace ucic;

namespace {

const std::vector<const char*> kPartitioners = {"ldg", "color-saving", "greedy"};

/// satisfied sets across iterations must partition the client set
void check_trace(const Instance& inst, const SolveResult& res) {
  Bitset covered(inst.n);
  for (const auto& it : res.trace.iterations) {
    REQUIRE_FALSE(it.satisfied.empty());
    for (int c : it.satisfied) {
      REQUIRE_FALSE(covered.test(c));
      covered.set(c);
    }
  }
  CHECK(covered.count() == static_cast<std::size_t>(inst.n));
}

}  // namespace

TEST_CASE("greedy search reproduces the worked first step") {
  SideInfoGraph g = build_side_info_graph(fixture("motivating"));
  auto res = greedy_search(g, {0});  // Y_b = {p1}
  REQUIRE(res.has_value());
  CHECK(res->symbol == 1);  // piggyback p2
  CHECK(res->gain == 2);
  CHECK(res->gaining_clients == std::vector<int>{2, 3});  // c3 and c4
}

TEST_CASE("greedy search reproduces the worked second step") {
  SideInfoGraph g = build_side_info_graph(fixture("motivating"));
  SideInfoGraph g2 = apply_step4b(g, {0}, {{2, 1}, {3, 1}});
  auto res = greedy_search(g2, {4});  // Y_b = {p5}
  REQUIRE(res.has_value());
  CHECK(res->symbol == 2);  // piggyback p3
  CHECK(res->gain == 1);
  CHECK(res->gaining_clients == std::vector<int>{3});  // c4
}

TEST_CASE("greedy search is absent on a spanning clique") {
  Instance inst = gen_near_extreme(ExtremeFamily::complete, 4);
  SideInfoGraph g = build_side_info_graph(inst);
  CHECK_FALSE(greedy_search(g, {0, 1, 2, 3}).has_value());
}

TEST_CASE("greedy search breaks per-clique ties toward the lower symbol") {
  // clique {0}; both p2 and p4 are cached by c1 and gain one client each
  SideInfoGraph g(5);
  g.add_arc(0, 1);
  g.add_arc(0, 3);
  g.add_arc(2, 0);  // c3 holds p1, gains either piggyback
  auto res = greedy_search(g, {0});
  REQUIRE(res.has_value());
  CHECK(res->symbol == 1);
  CHECK(res->gain == 1);
}

TEST_CASE("select_best_pair prefers gain, then clique, then symbol") {
  PairCandidate a{{2}, {5, 1, {0}}};
  PairCandidate b{{1}, {4, 2, {0, 3}}};
  SECTION("single candidate") {
    CHECK(select_best_pair({a}).clique == std::vector<int>{2});
  }
  SECTION("higher gain wins") {
    CHECK(select_best_pair({a, b}).clique == std::vector<int>{1});
  }
  SECTION("equal gain: lexicographically smaller clique wins") {
    PairCandidate c{{0}, {6, 2, {1, 3}}};
    CHECK(select_best_pair({b, c}).clique == std::vector<int>{0});
  }
}

TEST_CASE("fallback emits one transmission per clique") {
  CliquePartition final_k{{{1, 2, 3}}};
  auto out = fallback_emit(final_k);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == coded({1, 2, 3}));  // p2+p3+p4

  CliquePartition singletons{{{0}, {1}, {2}, {3}, {4}}};
  CHECK(fallback_emit(singletons).size() == 5);

  CliquePartition star{{{0, 1}, {2}, {3}, {4}, {5}}};
  CHECK(fallback_emit(star).size() == 5);  // n-1 for n=6
}

TEST_CASE("motivating example solves to three transmissions") {
  Instance inst = fixture("motivating");
  for (const char* name : kPartitioners) {
    INFO(name);
    SolveResult res = ucic_solve(inst, partitioner_by_name(name));
    CHECK(res.code.length() == 3);
    CHECK(verify_code_valid(inst, res.code).valid);
    check_trace(inst, res);
    // canonical trace under the deterministic tie rules
    CHECK(res.code.transmissions[0] == coded({0, 1}));  // p1+p2
    CHECK(res.code.transmissions[1] == coded({3, 4}));  // p4+p5
    CHECK(res.code.transmissions[2] == coded({1, 2, 4}));  // p2+p3+p5
    REQUIRE(res.trace.iterations.size() == 3);
    CHECK(res.trace.iterations[0].partition_size_r == 5);
    CHECK(res.trace.iterations[0].piggyback == 1);
    CHECK(res.trace.iterations[0].satisfied == std::vector<int>{0});
    CHECK(res.trace.fallback_used);  // final complete clique
  }
}

TEST_CASE("alice-bob solves to the single coded exchange") {
  Instance inst = fixture("alice-bob");
  for (const char* name : kPartitioners) {
    SolveResult res = ucic_solve(inst, partitioner_by_name(name));
    REQUIRE(res.code.length() == 1);
    CHECK(res.code.transmissions[0] == coded({0, 1}));
    CHECK(verify_code_valid(inst, res.code).valid);
  }
}

TEST_CASE("future-work example solves to two transmissions") {
  Instance inst = fixture("future-work");
  for (const char* name : kPartitioners) {
    INFO(name);
    SolveResult res = ucic_solve(inst, partitioner_by_name(name));
    CHECK(res.code.length() == 2);
    CHECK(verify_code_valid(inst, res.code).valid);
    CHECK(res.code.transmissions[0] == coded({0, 3}));     // p1+p4
    CHECK(res.code.transmissions[1] == coded({1, 2, 3}));  // p2+p3+p4
    check_trace(inst, res);
  }
}

TEST_CASE("a complete instance needs one transmission via step 5") {
  Instance inst = gen_near_extreme(ExtremeFamily::complete, 5);
  SolveResult res = ucic_solve(inst, partitioner_by_name("ldg"));
  REQUIRE(res.code.length() == 1);
  CHECK(res.code.transmissions[0] == coded({0, 1, 2, 3, 4}));
  CHECK(res.trace.fallback_used);
}

TEST_CASE("single-uniprior instances solve optimally to n minus xi") {
  for (int n = 4; n <= 12; ++n) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto gen = gen_single_uniprior(n, seed * 101 + n);
      for (const char* name : kPartitioners) {
        SolveResult res = ucic_solve(gen.instance, partitioner_by_name(name));
        INFO("n " << n << " seed " << seed << " " << name);
        REQUIRE(res.code.length() == n - gen.cycle_count);
        REQUIRE(verify_code_valid(gen.instance, res.code).valid);
      }
    }
  }
}

TEST_CASE("a handwritten n-cycle saves exactly one transmission") {
  Instance inst;
  inst.n = inst.k = 5;
  inst.has.resize(5);
  inst.want.resize(5);
  for (int i = 0; i < 5; ++i) {
    inst.want[i] = {i};
    inst.has[i] = {(i + 1) % 5};
  }
  SolveResult res = ucic_solve(inst, partitioner_by_name("ldg"));
  CHECK(res.code.length() == 4);
  CHECK(verify_code_valid(inst, res.code).valid);
  // and the two-2-cycle permutation needs exactly two
  Instance pairs;
  pairs.n = pairs.k = 4;
  pairs.has = {{1}, {0}, {3}, {2}};
  pairs.want = {{0}, {1}, {2}, {3}};
  CHECK(ucic_solve(pairs, partitioner_by_name("ldg")).code.length() == 2);
}

TEST_CASE("ucic never exceeds the plain partition (proposition 1)") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    int n = 5 + static_cast<int>(seed % 14);
    double p = (seed % 3 == 0) ? 0.1 : (seed % 3 == 1) ? 0.3 : 0.5;
    Instance inst = gen_random(n, p, seed * 7);
    for (const char* name : kPartitioners) {
      SolveResult plain = plain_partition_solve(inst, partitioner_by_name(name));
      SolveResult ucic = ucic_solve(inst, partitioner_by_name(name));
      INFO("seed " << seed << " n " << n << " " << name);
      REQUIRE(ucic.code.length() <= plain.code.length());
      REQUIRE(verify_code_valid(inst, ucic.code).valid);
      REQUIRE(verify_code_valid(inst, plain.code).valid);
      check_trace(inst, ucic);
    }
  }
}

TEST_CASE("ucic never beats the exact optimum on small instances") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = gen_random(7, 0.3, seed * 3 + 1);
    SideInfoGraph g = build_side_info_graph(inst);
    if (g.arc_count() > 24) continue;
    int optimum = minrk2(g).value;
    for (const char* name : kPartitioners)
      CHECK(ucic_solve(inst, partitioner_by_name(name)).code.length() >= optimum);
  }
}

TEST_CASE("solves are deterministic") {
  Instance inst = gen_random(15, 0.2, 42);
  for (const char* name : kPartitioners) {
    SolveResult a = ucic_solve(inst, partitioner_by_name(name));
    SolveResult b = ucic_solve(inst, partitioner_by_name(name));
    CHECK(a.code == b.code);
    CHECK(a.trace.to_lines() == b.trace.to_lines());
  }
}

TEST_CASE("continue-after-fallback keeps looping and stays valid") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Instance inst = gen_random(10, 0.25, seed);
    SolveOptions opts;
    opts.continue_after_fallback = true;
    SolveResult res = ucic_solve(inst, partitioner_by_name("ldg"), opts);
    CHECK_FALSE(res.trace.fallback_used);
    CHECK(verify_code_valid(inst, res.code).valid);
    check_trace(inst, res);
  }
}

TEST_CASE("trace lines carry the spec fields") {
  SolveResult res = ucic_solve(fixture("motivating"), partitioner_by_name("ldg"));
  std::string lines = res.trace.to_lines();
  CHECK(lines.find("iteration=1 Y_b={p1} pbs=p2 satisfied={c1} "
                   "gains={c3:p2,c4:p2} r=5") == 0);
  CHECK(lines.find("pbs=-") != std::string::npos);  // the fallback record
}

TEST_CASE("empty instances produce the empty code") {
  Instance empty;
  SolveResult res = ucic_solve(empty, partitioner_by_name("ldg"));
  CHECK(res.code.length() == 0);
  CHECK(res.trace.iterations.empty());
}

TEST_CASE("solver rejects non-reduced instances") {
  Instance inst;
  inst.n = 1;
  inst.k = 2;
  inst.want = {{0, 1}};
  inst.has = {{}};
  REQUIRE_THROWS_AS(ucic_solve(inst, partitioner_by_name("ldg")), Error);
}

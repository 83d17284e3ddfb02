#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sftzeta/decomp.hpp"

using namespace sftzeta;

namespace {

Sft golden_mean() { return from_matrix({"a", "b"}, {{1, 1}, {1, 0}}); }
Sft two_loops_chain() { return from_matrix({"a", "b"}, {{1, 1}, {0, 1}}); }
Sft cycle(int n) {
  std::vector<std::string> states;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    states.push_back("c" + std::to_string(i));
    rows[i][(i + 1) % n] = 1;
  }
  return from_matrix(states, rows);
}

}  // namespace

TEST_SUITE("decomp") {
  TEST_CASE("communicating classes and block-triangular order") {
    Decomposition d = communicating_classes(golden_mean());
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0] == std::vector<int>{0, 1});
    CHECK(d.has_edge[0]);
    CHECK(d.condensation.empty());

    Decomposition d2 = communicating_classes(two_loops_chain());
    REQUIRE(d2.classes.size() == 2);
    // sinks first: b's class comes before a's, and the edge goes from the
    // later class to the earlier one
    CHECK(d2.classes[0] == std::vector<int>{1});
    CHECK(d2.classes[1] == std::vector<int>{0});
    REQUIRE(d2.condensation.size() == 1);
    CHECK(d2.condensation[0] == std::pair<int, int>{1, 0});
    CHECK(d2.has_edge[0]);
    CHECK(d2.has_edge[1]);

    Decomposition d3 = communicating_classes(from_matrix({"a", "b"}, {{0, 1}, {0, 0}}));
    REQUIRE(d3.classes.size() == 2);
    CHECK_FALSE(d3.has_edge[0]);
    CHECK_FALSE(d3.has_edge[1]);

    CHECK(communicating_classes(Sft()).classes.empty());
  }

  TEST_CASE("irreducible components") {
    auto comps = irreducible_components(two_loops_chain());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].sft.size() == 1);
    CHECK(comps[1].sft.size() == 1);
    CHECK(comps[0].sft.edge(0, 0));

    auto g = irreducible_components(golden_mean());
    REQUIRE(g.size() == 1);
    CHECK(g[0].sft.transition() == golden_mean().transition());

    CHECK(irreducible_components(from_matrix({"a", "b"}, {{0, 1}, {0, 0}})).empty());
    for (const auto& c : irreducible_components(two_loops_chain())) CHECK(is_irreducible(c.sft));
  }

  TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(golden_mean()));
    CHECK_FALSE(is_irreducible(two_loops_chain()));
    CHECK_FALSE(is_irreducible(Sft()));
    CHECK(is_irreducible(cycle(4)));
  }

  TEST_CASE("nonwandering set drops cross-class edges") {
    Sft nw = nonwandering(two_loops_chain());
    CHECK(nw.size() == 2);
    CHECK(nw.edge(0, 0));
    CHECK(nw.edge(1, 1));
    CHECK_FALSE(nw.edge(0, 1));
    CHECK(nonwandering(golden_mean()).transition() == golden_mean().transition());
    CHECK(nonwandering(from_matrix({"a", "b"}, {{0, 1}, {0, 0}})).empty());
  }

  TEST_CASE("nonwandering equals the disjoint union of irreducible components") {
    std::mt19937 rng(111);
    for (int round = 0; round < 40; ++round) {
      Sft x = oracle::random_sft(rng, 1 + static_cast<int>(rng() % 6), 0.4);
      Sft nw = nonwandering(x);
      auto comps = irreducible_components(x);
      std::size_t total = 0;
      for (const auto& c : comps) total += c.states.size();
      CHECK(total == static_cast<std::size_t>(nw.size()));
      // edges of nw are exactly the union of the component edges
      std::map<std::string, int> pos;
      for (int i = 0; i < nw.size(); ++i) pos[nw.label(i)] = i;
      BigInt nw_edges = 0;
      for (int i = 0; i < nw.size(); ++i)
        for (int j = 0; j < nw.size(); ++j) nw_edges += nw.edge(i, j) ? 1 : 0;
      BigInt comp_edges = 0;
      for (const auto& c : comps) {
        for (int a = 0; a < c.sft.size(); ++a)
          for (int b = 0; b < c.sft.size(); ++b)
            if (c.sft.edge(a, b)) {
              ++comp_edges;
              CHECK(nw.edge(pos.at(c.sft.label(a)), pos.at(c.sft.label(b))));
            }
      }
      CHECK(nw_edges == comp_edges);
    }
  }

  TEST_CASE("classify_irreducible") {
    auto fin = classify_irreducible(cycle(3));
    CHECK(fin.finite);
    CHECK(fin.orbit_length == 3);
    auto inf = classify_irreducible(golden_mean());
    CHECK_FALSE(inf.finite);
    auto loop = classify_irreducible(from_matrix({"a"}, {{1}}));
    CHECK(loop.finite);
    CHECK(loop.orbit_length == 1);
    CHECK_THROWS_WITH_AS(classify_irreducible(two_loops_chain()),
                         doctest::Contains("NotIrreducible"), Error);
  }

  TEST_CASE("sigma components") {
    Sft disjoint = from_matrix({"a", "b"}, {{1, 0}, {0, 1}});
    CHECK(sigma_components(disjoint).size() == 2);
    CHECK(sigma_components(two_loops_chain()).size() == 1);
    CHECK(sigma_components(golden_mean()).size() == 1);
    CHECK(sigma_components(Sft()).empty());
    // partition check
    auto comps = sigma_components(two_loops_chain());
    std::size_t total = 0;
    for (const auto& c : comps) total += c.states.size();
    CHECK(total == 2);
  }

  TEST_CASE("cyclic_period examples") {
    auto two = cyclic_period(cycle(2));
    CHECK(two.modulus == 2);
    CHECK(two.labels == std::vector<int>{0, 1});
    CHECK(cyclic_period(from_matrix({"a"}, {{1}})).modulus == 1);
    CHECK(cyclic_period(cycle(3)).modulus == 3);

    // 2-cycle with a chord closing a 3-cycle forces gcd(2,3) = 1
    Sft chord = from_matrix({"a", "b", "c"}, {{0, 1, 0}, {1, 0, 1}, {1, 0, 0}});
    CHECK(cyclic_period(chord).modulus == 1);

    CHECK_THROWS_WITH_AS(cyclic_period(Sft()), doctest::Contains("Empty"), Error);
    Sft disjoint = from_matrix({"a", "b"}, {{1, 0}, {0, 1}});
    CHECK_THROWS_WITH_AS(cyclic_period(disjoint), doctest::Contains("NotWeaklyConnected"), Error);
  }

  TEST_CASE("cyclic_period against the brute-force labeling oracle") {
    std::mt19937 rng(1123);
    for (int round = 0; round < 80; ++round) {
      Sft x = oracle::random_essential_sft(rng, 6);
      for (const auto& comp : sigma_components(x)) {
        CyclicLabeling cl = cyclic_period(comp.sft);
        CHECK(cl.modulus == oracle::max_labeling_modulus(comp.sft));
        // every valid modulus divides the period
        for (int m = 1; m <= comp.sft.size(); ++m)
          if (oracle::labeling_exists(comp.sft, m)) CHECK(cl.modulus % m == 0);
        // edge condition of the returned labels
        for (int u = 0; u < comp.sft.size(); ++u)
          for (int v = 0; v < comp.sft.size(); ++v)
            if (comp.sft.edge(u, v))
              CHECK(cl.labels[v] == (cl.labels[u] + 1) % cl.modulus);
        CHECK(cl.labels[0] == 0);
      }
    }
  }

  TEST_CASE("strong core") {
    auto one = strong_core(prune(golden_mean()));
    REQUIRE(one.components.size() == 1);
    CHECK(one.components[0].modulus == 1);

    Sft d23 = from_matrix({"a", "b", "c", "d", "e"}, {{0, 1, 0, 0, 0},
                                                      {1, 0, 0, 0, 0},
                                                      {0, 0, 0, 1, 0},
                                                      {0, 0, 0, 0, 1},
                                                      {0, 0, 1, 0, 0}});
    auto core = strong_core(d23);
    REQUIRE(core.components.size() == 2);
    CHECK(core.components[0].modulus == 2);
    CHECK(core.components[1].modulus == 3);
    CHECK(strong_core(Sft()).components.empty());
  }

  TEST_CASE("periodic points live inside classes") {
    std::mt19937 rng(9090);
    for (int round = 0; round < 50; ++round) {
      Sft x = oracle::random_sft(rng, 1 + static_cast<int>(rng() % 5), 0.45);
      auto comps = irreducible_components(x);
      for (int n = 1; n <= 6; ++n) {
        BigInt total = 0;
        for (const auto& c : comps) total += periodic_count(c.sft, n);
        CHECK(total == periodic_count(x, n));
      }
      // class sizes partition the states
      Decomposition d = communicating_classes(x);
      std::size_t covered = 0;
      for (const auto& c : d.classes) covered += c.size();
      CHECK(covered == static_cast<std::size_t>(x.size()));
    }
  }

  TEST_CASE("strong core modulus divides periods of its component") {
    std::mt19937 rng(2718);
    for (int round = 0; round < 50; ++round) {
      Sft x = oracle::random_essential_sft(rng, 6);
      for (const auto& comp : strong_core(x).components) {
        Sft induced = induced_subshift(x, comp.states);
        for (int n = 1; n <= 2 * x.size(); ++n)
          if (periodic_count(induced, n) > 0) CHECK(n % comp.modulus == 0);
      }
    }
  }

  TEST_CASE("sigma component count is monotone under edge additions") {
    std::mt19937 rng(646);
    for (int round = 0; round < 40; ++round) {
      Sft x = oracle::random_essential_sft(rng, 6);
      std::size_t before = sigma_components(x).size();
      int u = static_cast<int>(rng() % x.size());
      int v = static_cast<int>(rng() % x.size());
      std::vector<std::vector<int>> rows(x.size(), std::vector<int>(x.size(), 0));
      for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j) rows[i][j] = x.edge(i, j) ? 1 : 0;
      rows[u][v] = 1;
      Sft bigger = from_matrix(x.states(), rows);
      CHECK(sigma_components(bigger).size() <= before);
    }
  }
}

#include <doctest.h>

#include <random>

#include "genset/catalog.hpp"
#include "genset/equiv.hpp"
#include "genset/errors.hpp"
#include "genset/gengraph.hpp"
#include "support.hpp"

using namespace genset;

namespace {

WeightedReducedGraph graph_of(const GroupData& gd) { return reduced_graph(gd.action, m_classes(gd.action)); }
WeightedReducedGraph graph_of(const std::string& s) { return graph_of(testing::analyze(s)); }

// Every vertex becomes `weight` copies; copies are adjacent to each other
// only through a loop. Copy 0 of the identity vertex is vertex 0.
oracle::Graph expand(const WeightedReducedGraph& g) {
  std::vector<std::size_t> owner;
  std::vector<std::size_t> order(g.vertex_count);
  std::iota(order.begin(), order.end(), 0);
  std::swap(order[0], order[g.identity_vertex]);
  for (auto v : order)
    for (std::size_t i = 0; i < g.weights[v]; ++i) owner.push_back(v);
  oracle::Graph out{owner.size(), std::vector<std::vector<bool>>(owner.size(), std::vector<bool>(owner.size()))};
  for (std::size_t a = 0; a < owner.size(); ++a)
    for (std::size_t b = 0; b < owner.size(); ++b) out.adj[a][b] = g.adjacent(owner[a], owner[b]);
  return out;
}

WeightedReducedGraph random_graph(std::mt19937& rng, std::size_t n, double p, bool loops) {
  std::vector<Bits> adj(n, Bits(n));
  std::vector<bool> lp(n, false);
  std::vector<std::size_t> w(n);
  for (std::size_t u = 1; u < n; ++u) {
    w[u] = 1 + rng() % 3;
    if (loops) lp[u] = rng() % 3 == 0;
    for (std::size_t v = u + 1; v < n; ++v)
      if (std::uniform_real_distribution<>(0, 1)(rng) < p) {
        adj[u].set(v);
        adj[v].set(u);
      }
  }
  w[0] = 1 + rng() % 2;
  return make_graph(adj, lp, w, 0);
}

}  // namespace

TEST_CASE("structural invariants") {
  for (const char* s : {"Sn:4", "An:5", "Cn:30", "Affine:5,1,4", "ElemAb:3,2", "PSL2:7"}) {
    CAPTURE(s);
    const auto gd = testing::analyze(s);
    const auto g = graph_of(gd);
    std::size_t total = 0;
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
      total += g.weights[v];
      CHECK(g.weights[v] == g.members[v].size());
      CHECK_FALSE(g.adjacency[v].test(v));
      for (std::size_t u = 0; u < g.vertex_count; ++u) CHECK(g.adjacency[u].test(v) == g.adjacency[v].test(u));
      if (g.loops[v]) CHECK(gd.action.generates(std::vector<ElementId>{g.members[v][0]}));
      // members of one class never generate together unless they generate alone
      if (!g.loops[v] && g.members[v].size() > 1)
        CHECK_FALSE(gd.action.generates_pair(g.members[v][0], g.members[v][1]));
    }
    CHECK(total == gd.order());
    // Isolated elements share the identity's empty neighbourhood.
    const auto& idv = g.members[g.identity_vertex];
    for (auto x : gd.frattini.elements()) CHECK(std::count(idv.begin(), idv.end(), x) == 1);
    if (has_nonzero_spread(g)) CHECK(g.weights[g.identity_vertex] == gd.frattini.order);
    if (!g.has_loops()) CHECK(g.degree(g.identity_vertex) == 0);
  }
}

TEST_CASE("adjacency is generation of representatives") {
  const auto gd = testing::analyze("Sn:4");
  const auto g = graph_of(gd);
  for (std::size_t u = 0; u < g.vertex_count; ++u)
    for (std::size_t v = 0; v < g.vertex_count; ++v)
      for (auto x : g.members[u])
        for (auto y : g.members[v])
          if (u != v) CHECK(g.adjacent(u, v) == gd.action.generates_pair(x, y));
}

TEST_CASE("elementary abelian of rank 2") {
  for (unsigned p : {2u, 3u, 5u}) {
    const auto g = graph_of("ElemAb:" + std::to_string(p) + ",2");
    CHECK(g.vertex_count == p + 2);
    CHECK(clique_number(g) == p + 1);
    CHECK(spread(g) == p);
  }
  const auto g = graph_of("ElemAb:2,2");
  CHECK(spread(g) == 2);
  CHECK(chromatic_number(g) == 3);
  CHECK(total_domination_number(g) == 2);
}

TEST_CASE("S4 has spread 0 through the double transpositions") {
  const auto gd = testing::analyze("Sn:4");
  const auto g = graph_of(gd);
  CHECK(spread(g) == 0);
  CHECK_FALSE(has_nonzero_spread(g));
  const auto iso = g.isolated();
  std::set<std::vector<std::size_t>> types;
  std::size_t members = 0;
  for (auto v : iso)
    for (auto x : g.members[v])
      if (x != 0) {
        types.insert(gd.table.element(x).cycle_type());
        ++members;
      }
  CHECK(types == std::set<std::vector<std::size_t>>{{2, 2}});
  CHECK(members == 3);
  CHECK_THROWS_AS(total_domination_number(g), Undefined);
}

TEST_CASE("cyclic groups") {
  const auto g = graph_of("Cn:30");
  CHECK(g.has_loops());
  CHECK_FALSE(spread(g).has_value());
  CHECK(clique_number(g) >= 8);
  CHECK_THROWS_AS(chromatic_number(g), LoopsUnsupported);
  CHECK(has_nonzero_spread(g));
}

TEST_CASE("small graphs") {
  {
    std::vector<Bits> adj(4, Bits(4));
    const auto g = make_graph(adj, {false, false, false, false}, {1, 1, 1, 1}, 0);
    CHECK(chromatic_number(g) == 1);
    CHECK(clique_number(g) == 1);
    CHECK(spread(g) == 0);
  }
  {
    // K_4 on vertices 1..4 plus an isolated identity
    std::vector<Bits> adj(5, Bits(5));
    for (std::size_t u = 1; u < 5; ++u)
      for (std::size_t v = 1; v < 5; ++v)
        if (u != v) adj[u].set(v);
    const auto g = make_graph(adj, std::vector<bool>(5, false), std::vector<std::size_t>(5, 1), 0);
    CHECK(total_domination_number(g) == 2);
    CHECK(clique_number(g) == 4);
    CHECK(chromatic_number(g) == 4);
  }
}

TEST_CASE("parameters of random weighted graphs against their expansions") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const auto g = random_graph(rng, n, 0.3 + 0.1 * (trial % 6), false);
    const auto full = expand(g);
    CAPTURE(trial);
    CHECK(spread(g) == oracle::spread(full));
    CHECK(clique_number(g) == oracle::clique_number(full));
    CHECK(chromatic_number(g) == oracle::chromatic_number(full));
    const auto td = oracle::total_domination(full);
    if (td)
      CHECK(total_domination_number(g) == *td);
    else
      CHECK_THROWS_AS(total_domination_number(g), Undefined);
  }
}

TEST_CASE("clique number with loops") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, 3 + trial % 5, 0.6, true);
    CHECK(clique_number(g) == oracle::clique_number(expand(g)));
  }
}

TEST_CASE("minimum set cover") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + trial % 8, k = 3 + trial % 7;
    Bits universe(n, true);
    std::vector<Bits> sets(k, Bits(n));
    for (auto& s : sets)
      for (std::size_t i = 0; i < n; ++i)
        if (rng() % 3 == 0) s.set(i);
    std::optional<std::size_t> best;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Bits u(n);
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) u |= sets[i];
      if (u == universe && (!best || std::size_t(std::popcount(mask)) < *best)) best = std::popcount(mask);
    }
    CHECK(min_set_cover(universe, sets, 1'000'000) == best);
  }
}

TEST_CASE("search budget") {
  const auto g = graph_of("PSL2:7");
  CHECK_THROWS_AS(spread(g, 1), BudgetExceeded);
}

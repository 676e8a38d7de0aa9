#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "genset/equiv.hpp"

namespace genset {

// Quotient of the generating graph by equal-neighbourhood classes. The
// adjacency rows never contain the diagonal; generator classes of cyclic
// groups carry loop flags instead.
struct WeightedReducedGraph {
  std::size_t vertex_count = 0;
  std::vector<std::size_t> weights;
  std::vector<Bits> adjacency;
  std::vector<bool> loops;
  std::size_t identity_vertex = 0;
  std::vector<std::vector<ElementId>> members;  // group elements per vertex

  bool adjacent(std::size_t u, std::size_t v) const { return u == v ? bool(loops[u]) : adjacency[u].test(v); }
  bool has_loops() const;
  std::size_t degree(std::size_t v) const { return adjacency[v].count(); }
  // Vertices containing a nonidentity element.
  std::vector<std::size_t> nonidentity_vertices() const;
  std::vector<std::size_t> isolated() const;  // nonidentity vertices without neighbours
};

// Vertices are the r = 2 classes; u ~ v iff their representatives generate G.
WeightedReducedGraph reduced_graph(const MUniversalAction& a, const Partition& m);
WeightedReducedGraph reduced_graph_from_classes(const MUniversalAction& a, const Partition& gamma_classes);
// Plain graph on explicit vertices (tests, brute-force comparisons).
WeightedReducedGraph make_graph(std::vector<Bits> adjacency, std::vector<bool> loops, std::vector<std::size_t> weights,
                                std::size_t identity_vertex);

inline constexpr std::size_t kDefaultSearchBudget = 5'000'000;

// Largest k such that every k nonidentity elements have a common neighbour.
// nullopt when no bound exists (cyclic and trivial groups).
std::optional<std::size_t> spread(const WeightedReducedGraph& g, std::size_t budget = kDefaultSearchBudget);
bool has_nonzero_spread(const WeightedReducedGraph& g);
// Looped vertices count with multiplicity equal to their weight.
std::size_t clique_number(const WeightedReducedGraph& g, std::size_t budget = kDefaultSearchBudget);
// Throws LoopsUnsupported on looped graphs.
std::size_t chromatic_number(const WeightedReducedGraph& g, std::size_t budget = kDefaultSearchBudget);
// Throws Undefined when some nonidentity vertex is isolated.
std::size_t total_domination_number(const WeightedReducedGraph& g, std::size_t budget = kDefaultSearchBudget);

// Exact minimum set cover of `universe` by `sets` (branch and bound).
// Returns nullopt when the union does not cover the universe.
std::optional<std::size_t> min_set_cover(const Bits& universe, const std::vector<Bits>& sets, std::size_t budget);

}  // namespace genset

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "genset/gengraph.hpp"

namespace genset {

struct AutResult {
  std::vector<Permutation> generators;  // on vertices
  BigInt order = 1;
  std::vector<std::size_t> orbit_of;    // orbit id per vertex, numbered by first vertex
  std::size_t orbit_count() const;
};

inline constexpr std::size_t kDefaultAutBudget = 5'000'000;

// Full automorphism group of the reduced graph by individualization and
// refinement. Weighted mode also preserves vertex weights. Throws
// BudgetExceeded after `budget` search nodes.
AutResult graph_aut(const WeightedReducedGraph& g, bool weighted, std::size_t budget = kDefaultAutBudget);

// Product of weight factorials; the kernel of Aut(Gamma) -> Aut of the weighted reduced graph.
BigInt weight_factorial_product(const WeightedReducedGraph& g);
// |Aut(Gamma(G))| = prod k_i! * |Aut(weighted reduced graph)|.
BigInt aut_gamma_order(const WeightedReducedGraph& g, std::size_t budget = kDefaultAutBudget);

// |Aut(G)| by backtracking over images of a minimal generating tuple.
BigInt aut_group_order(const GroupTable& t, const MUniversalAction& a, const Partition& m);

struct ClosedFormCheck {
  std::string name;
  std::string predicted;
  std::string computed;
  bool ok = false;
};

struct ClosedFormReport {
  std::string group;
  std::vector<ClosedFormCheck> checks;
  bool ok() const;
};

// Prediction for the reduced graph of C_n against the computed graph.
// Throws Mismatch naming the first failing check.
ClosedFormReport closed_form_cyclic(unsigned n, const AnalysisOptions& options = {});
// Prediction for C_p^k : C_n against the computed graph. Throws Mismatch.
ClosedFormReport closed_form_affine(unsigned p, unsigned k, unsigned n, const AnalysisOptions& options = {});

BigInt factorial(std::size_t n);

}  // namespace genset

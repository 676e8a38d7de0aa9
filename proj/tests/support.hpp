#pragma once

#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "genset/catalog.hpp"
#include "genset/equiv.hpp"
#include "genset/lattice.hpp"
#include "checks.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Perm images(const genset::Permutation& p) { return {p.images().begin(), p.images().end()}; }

// Brute-force copy of a library group, element numbering checked to agree.
inline oracle::Group brute(const genset::GroupTable& t) {
  std::vector<oracle::Perm> gens;
  for (const auto& g : t.group().generators()) gens.push_back(images(g));
  oracle::Group g(t.group().degree(), gens);
  REQUIRE(g.size() == t.size());
  for (std::size_t i = 0; i < t.size(); ++i) REQUIRE(g.elems[i] == images(t.element(i)));
  return g;
}

inline genset::GroupData analyze(const std::string& spec, std::size_t cap = genset::kDefaultElementCap) {
  genset::AnalysisOptions o;
  o.cap = cap;
  return genset::analyze(genset::build(genset::parse_group_spec(spec)), o);
}

inline genset::PermGroup custom(std::size_t degree, const std::string& gens) {
  return genset::PermGroup(degree, genset::parse_generators(gens, degree));
}

inline genset::GroupData analyze(const genset::PermGroup& g) { return genset::analyze(g); }

inline genset::PermGroup dihedral8() { return checks::dihedral8(); }
inline genset::PermGroup dihedral10() { return checks::dihedral10(); }
inline genset::PermGroup quaternion8() { return checks::quaternion8(); }
inline bool soluble(const genset::GroupTable& t) { return checks::soluble(t); }

}  // namespace testing

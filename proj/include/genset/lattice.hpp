#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "genset/bits.hpp"
#include "genset/table.hpp"

namespace genset {

// A subgroup as a membership bit vector over the element index.
struct SubgroupSet {
  Bits members;
  std::size_t order = 0;

  SubgroupSet() = default;
  explicit SubgroupSet(Bits m) : members(std::move(m)), order(members.count()) {}

  bool contains(std::size_t e) const { return members.test(e); }
  std::vector<ElementId> elements() const;
  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) { return a.members == b.members; }
};

struct LatticeOptions {
  std::size_t subgroup_budget = 200'000;
};

// Subgroups grouped into conjugacy classes. classes[c] lists indices into
// `subgroups`; the first entry is the class representative.
struct Lattice {
  std::vector<SubgroupSet> subgroups;  // sorted by (order, members)
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> maximal_classes;  // class ids, sorted by index then representative
};

struct MaximalClasses {
  std::vector<std::vector<SubgroupSet>> classes;
  std::vector<SubgroupSet> representatives;
  std::vector<std::size_t> indices;  // |G : M| per class

  std::size_t total() const;
};

// Smallest subgroup containing the seed.
SubgroupSet closure(const GroupTable& t, std::span<const ElementId> seed);
SubgroupSet closure(const GroupTable& t, const SubgroupSet& seed);
// <H, x> for a subgroup H. Stops early with G once more than half of G is reached.
SubgroupSet extend(const GroupTable& t, const SubgroupSet& h, ElementId x);
// {x : H^x = H}
SubgroupSet normalizer(const GroupTable& t, const SubgroupSet& h, std::span<const ElementId> h_generators);
SubgroupSet conjugate_subgroup(const GroupTable& t, const SubgroupSet& h, ElementId by);

// Every subgroup, by breadth-first cyclic extension of conjugacy-class
// representatives. Throws BudgetExceeded past options.subgroup_budget.
Lattice compute_lattice(const GroupTable& t, const LatticeOptions& options = {});
std::vector<SubgroupSet> all_subgroups(const GroupTable& t, const LatticeOptions& options = {});
MaximalClasses maximal_subgroups(const Lattice& lattice, std::size_t group_order);
MaximalClasses maximal_subgroups(const GroupTable& t, const LatticeOptions& options = {});
// Intersection of all maximal subgroups (G itself when there are none).
SubgroupSet frattini(const MaximalClasses& mc, std::size_t group_order);

}  // namespace genset

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "genset/muniversal.hpp"

namespace genset {

// Partition of the element index. Blocks are ordered by their smallest
// element, which is also the block's representative.
struct Partition {
  std::vector<std::size_t> block_of;
  std::vector<std::vector<ElementId>> blocks;
  std::vector<ElementId> reps;

  std::size_t size() const { return blocks.size(); }
  // Builds from arbitrary per-element keys; equal keys share a block.
  template <class Key>
  static Partition from_keys(const std::vector<Key>& keys);
  // Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  std::vector<std::size_t> block_sizes() const;  // sorted descending
  friend bool operator==(const Partition& a, const Partition& b) { return a.block_of == b.block_of; }
};

// Everything downstream needs for one group: table, lattice, maximal classes,
// m-universal action, Frattini subgroup and the m-classes.
struct GroupData {
  GroupTable table;
  Lattice lattice;
  MaximalClasses maximal;
  MUniversalAction action;
  SubgroupSet frattini;

  std::size_t order() const { return table.size(); }
};

struct AnalysisOptions {
  std::size_t cap = kDefaultElementCap;
  LatticeOptions lattice;
};

GroupData analyze(const PermGroup& g, const AnalysisOptions& options = {});
// Completes a GroupData from a precomputed lattice (cache path).
GroupData analyze_from_lattice(GroupTable table, Lattice lattice);

Partition c_classes(const GroupTable& t);
Partition m_classes(const MUniversalAction& a);
// x ~ y iff they generate G together with exactly the same (r-1)-multisets.
Partition mr_classes(const MUniversalAction& a, const Partition& m, std::size_t r);
Partition mr_classes_serial(const MUniversalAction& a, const Partition& m, std::size_t r);

struct GeneratingSet {
  std::size_t size = 0;
  std::vector<ElementId> elements;  // witness of minimal size
};

GeneratingSet minimal_generating_set(const MUniversalAction& a, const Partition& m);
std::size_t d(const MUniversalAction& a, const Partition& m);
// Least k such that x with some k further elements generates; 0 if <x> = G.
std::size_t d_with(const MUniversalAction& a, const Partition& m, ElementId x);

struct PsiReport {
  std::size_t d = 0;
  std::size_t psi = 0;
  std::vector<std::pair<std::size_t, Partition>> partitions_by_r;
  std::size_t cap_used = 0;
  std::size_t m_class_count = 0;
};

// Throws InternalError if no r <= d + 5 reaches the m-partition.
PsiReport psi(const MUniversalAction& a, const Partition& m);

bool efficiently_generated(const MUniversalAction& a, const Partition& m, const SubgroupSet& frattini);

inline constexpr std::size_t kDefaultMuBudget = 10'000'000;
// Largest irredundant generating set. Throws BudgetExceeded after `budget` oracle calls.
std::size_t mu(const GroupTable& t, const MUniversalAction& a, const Partition& m, std::size_t budget = kDefaultMuBudget);

// ---------------------------------------------------------------------------

template <class Key>
Partition Partition::from_keys(const std::vector<Key>& keys) {
  Partition p;
  p.block_of.assign(keys.size(), 0);
  std::vector<std::size_t> order;
  // Blocks numbered by first occurrence, which is the smallest element.
  std::vector<std::size_t> idx(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> group_first(keys.size());
  std::vector<std::size_t> group_id(keys.size());
  std::size_t groups = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || keys[idx[k - 1]] < keys[idx[k]]) group_first[groups++] = idx[k];
    group_id[idx[k]] = groups - 1;
  }
  std::vector<std::size_t> rank(groups, 0), by_first(groups);
  for (std::size_t g = 0; g < groups; ++g) by_first[g] = g;
  std::sort(by_first.begin(), by_first.end(),
            [&](std::size_t a, std::size_t b) { return group_first[a] < group_first[b]; });
  for (std::size_t r = 0; r < groups; ++r) rank[by_first[r]] = r;
  p.blocks.resize(groups);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    p.block_of[i] = rank[group_id[i]];
    p.blocks[p.block_of[i]].push_back(static_cast<ElementId>(i));
  }
  for (const auto& b : p.blocks) p.reps.push_back(b.front());
  return p;
}

}  // namespace genset

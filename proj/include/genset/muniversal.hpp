#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "genset/bits.hpp"
#include "genset/lattice.hpp"

namespace genset {

// Disjoint union of the right-coset actions on one maximal subgroup per
// conjugacy class. Only fixed-point incidence is kept: fix.row(y) holds the
// points fixed by element y.
struct MUniversalAction {
  struct Block {
    SubgroupSet subgroup;                // class representative M
    std::vector<ElementId> transversal;  // coset M * x for each x, first-found order
    std::size_t offset = 0;
  };
  std::vector<Block> blocks;
  std::size_t total_degree = 0;
  BitMatrix fix;

  std::size_t group_order() const { return fix.rows(); }
  // True iff the fixed-point sets of `ids` have empty intersection, i.e. ids generate G.
  bool generates(std::span<const ElementId> ids) const;
  bool generates_pair(std::size_t x, std::size_t y) const { return !fix.rows_intersect(x, y); }
};

MUniversalAction build_action(const GroupTable& t, const MaximalClasses& mc);
// Serial fixed-point kernel; reference for tests.
MUniversalAction build_action_serial(const GroupTable& t, const MaximalClasses& mc);

struct AuditReport {
  std::size_t trials = 0;
  std::size_t agreements = 0;
  std::size_t generating = 0;  // subsets that generated G
};

// Compares the fixed-point oracle with closure size on random subsets.
// Throws AuditFailure naming the first disagreeing subset.
AuditReport property_g_audit(const GroupTable& t, const MUniversalAction& a, std::size_t trials,
                             std::uint64_t seed = 0x5eed);

}  // namespace genset

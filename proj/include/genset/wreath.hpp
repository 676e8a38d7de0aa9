#pragma once

#include <string>
#include <vector>

#include "genset/perm.hpp"

namespace genset {

// A subgroup of S5 wr S2 containing A5 x A5, described by its image K in
// the quotient C2 wr C2 (block parities and the swap).
struct WreathCandidate {
  PermGroup group;
  std::string quotient;       // e.g. "C4" or "C2^2 (base)"
  bool quotient_cyclic = false;
  bool inside_base = false;   // K fixes both blocks
};

// Representatives of the conjugacy classes of index-2 and index-4
// subgroups of S5 wr S2 containing A5 x A5, ordered by decreasing index.
std::vector<WreathCandidate> wreath_index_2_4_classes();

// The candidates whose quotient is cyclic and not inside the base group:
// a group of nonzero spread has only cyclic proper quotients. Variant 1 is
// the smaller group.
std::vector<PermGroup> wreath_nonzero_spread_subgroups();

}  // namespace genset

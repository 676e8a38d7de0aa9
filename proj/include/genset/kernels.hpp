#pragma once

// Data-parallel inner loops. Each kernel has a serial reference kept for
// testing and benchmarking; the parallel form uses OpenMP when available
// and must produce bit-identical output.

#include <cstddef>
#include <span>
#include <vector>

#include "genset/bits.hpp"
#include "genset/table.hpp"

namespace genset::kernels {

// One coset block of the m-universal action: subgroup M and a right
// transversal; point offset+i is the coset M * transversal[i].
struct CosetBlockView {
  const Bits* subgroup;
  std::span<const ElementId> transversal;
  std::size_t offset;
};

// Row y, column offset+i is set iff transversal[i] * y * transversal[i]^-1 lies in M.
BitMatrix fix_matrix_serial(const GroupTable& t, std::span<const CosetBlockView> blocks, std::size_t total_degree);
BitMatrix fix_matrix_parallel(const GroupTable& t, std::span<const CosetBlockView> blocks, std::size_t total_degree);

// adj(i, j) set iff rows[i] and rows[j] of `fix` are disjoint, i.e. the two
// elements generate the group.
BitMatrix generation_matrix_serial(const BitMatrix& fix, std::span<const std::size_t> rows);
BitMatrix generation_matrix_parallel(const BitMatrix& fix, std::span<const std::size_t> rows);

// Partition of `rows` (as block ids, numbered by first occurrence) under
// x ~ y iff for every multiset Z of `count` rows, fix(x) & fix(Z) is empty
// exactly when fix(y) & fix(Z) is.
std::vector<std::size_t> multiset_signature_classes_serial(const BitMatrix& fix, std::span<const std::size_t> rows,
                                                            std::size_t count);
std::vector<std::size_t> multiset_signature_classes_parallel(const BitMatrix& fix, std::span<const std::size_t> rows,
                                                              std::size_t count);

int max_threads();

}  // namespace genset::kernels

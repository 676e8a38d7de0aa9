#pragma once

#include <cstddef>
#include <vector>

#include "genset/perm.hpp"

namespace genset {

// Multiplication table over an ElementIndex. mul(a, b) is the index of
// elements[a] * elements[b] (apply a first). The table is |G|^2 16-bit
// entries, built from the right-regular action of the generators.
class GroupTable {
 public:
  GroupTable(const PermGroup& group, std::size_t cap = kDefaultElementCap);
  GroupTable(const PermGroup& group, ElementIndex index);

  std::size_t size() const { return n_; }
  const ElementIndex& index() const { return index_; }
  const PermGroup& group() const { return group_; }
  const Permutation& element(std::size_t i) const { return index_[i]; }

  ElementId mul(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
  const ElementId* row(std::size_t a) const { return mul_.data() + a * n_; }
  ElementId inv(std::size_t a) const { return inv_[a]; }
  // t^-1 a t
  ElementId conj(std::size_t a, std::size_t t) const { return mul(mul(inv_[t], a), t); }
  std::size_t order(std::size_t a) const { return order_[a]; }
  // Indices of the group's generators, identity generators dropped.
  const std::vector<ElementId>& generators() const { return gens_; }

  // <x> as sorted element ids (x^0, x^1, ... reordered ascending).
  std::vector<ElementId> cyclic_subgroup(std::size_t x) const;
  // Smallest id generating the same cyclic subgroup as x.
  ElementId cyclic_key(std::size_t x) const;
  bool is_abelian() const;

 private:
  void build();

  PermGroup group_;
  ElementIndex index_;
  std::size_t n_ = 0;
  std::vector<ElementId> mul_;
  std::vector<ElementId> inv_;
  std::vector<std::size_t> order_;
  std::vector<ElementId> gens_;
};

}  // namespace genset

#include "genset/table.hpp"

#include <algorithm>
#include <numeric>

#include "genset/errors.hpp"

namespace genset {

GroupTable::GroupTable(const PermGroup& group, std::size_t cap)
    : GroupTable(group, enumerate_elements(group, cap)) {}

GroupTable::GroupTable(const PermGroup& group, ElementIndex index)
    : group_(group), index_(std::move(index)), n_(index_.size()) {
  if (n_ == 0 || n_ > kMaxElementCap) throw InternalError("element index size out of range");
  build();
}

void GroupTable::build() {
  for (const auto& g : group_.generators())
    if (!g.is_identity()) gens_.push_back(index_.at(g));
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());

  // Right multiplication by each generator, then a spanning tree
  // e_j = e_parent * s so that row a follows from row a's parent column.
  const std::size_t k = gens_.size();
  std::vector<std::vector<ElementId>> right(k, std::vector<ElementId>(n_));
  for (std::size_t s = 0; s < k; ++s) {
    const auto& gs = index_[gens_[s]];
    for (std::size_t i = 0; i < n_; ++i) right[s][i] = index_.at(index_[i] * gs);
  }
  std::vector<std::ptrdiff_t> parent(n_, -1);
  std::vector<std::size_t> via(n_, 0);
  std::vector<ElementId> bfs{0};
  std::vector<bool> seen(n_, false);
  seen[0] = true;
  for (std::size_t q = 0; q < bfs.size(); ++q) {
    const ElementId e = bfs[q];
    for (std::size_t s = 0; s < k; ++s) {
      const ElementId f = right[s][e];
      if (!seen[f]) {
        seen[f] = true;
        parent[f] = e;
        via[f] = s;
        bfs.push_back(f);
      }
    }
  }
  if (bfs.size() != n_) throw InternalError("generators do not reach every element");

  mul_.assign(n_ * n_, 0);
  for (std::size_t a = 0; a < n_; ++a) mul_[a * n_] = static_cast<ElementId>(a);
  for (std::size_t q = 1; q < bfs.size(); ++q) {
    const ElementId b = bfs[q];
    const auto& r = right[via[b]];
    const std::size_t pb = static_cast<std::size_t>(parent[b]);
    for (std::size_t a = 0; a < n_; ++a) mul_[a * n_ + b] = r[mul_[a * n_ + pb]];
  }
  inv_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    const ElementId* r = row(a);
    for (std::size_t b = 0; b < n_; ++b)
      if (r[b] == 0) {
        inv_[a] = static_cast<ElementId>(b);
        break;
      }
  }
  order_.assign(n_, 1);
  for (std::size_t a = 1; a < n_; ++a) {
    std::size_t o = 1;
    for (std::size_t x = a; x != 0; x = mul(x, a)) ++o;
    order_[a] = o;
  }
  order_[0] = 1;
}

std::vector<ElementId> GroupTable::cyclic_subgroup(std::size_t x) const {
  std::vector<ElementId> out{0};
  for (std::size_t y = x; y != 0; y = mul(y, x)) out.push_back(static_cast<ElementId>(y));
  std::sort(out.begin(), out.end());
  return out;
}

ElementId GroupTable::cyclic_key(std::size_t x) const {
  const std::size_t o = order_[x];
  ElementId best = static_cast<ElementId>(x);
  std::size_t y = x;
  for (std::size_t e = 1; e <= o; ++e, y = mul(y, x))
    if (std::gcd(e, o) == 1) best = std::min(best, static_cast<ElementId>(y));
  return best;
}

bool GroupTable::is_abelian() const {
  for (auto a : gens_)
    for (auto b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

}  // namespace genset

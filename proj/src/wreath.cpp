#include "genset/wreath.hpp"

#include <algorithm>

#include "genset/catalog.hpp"
#include "genset/lattice.hpp"

namespace genset {

namespace {

Permutation cyc(std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(10, cycles); }

// Image in S5 wr S2 of an element of C2 wr C2 acting on {0,1,2,3}, where
// (0 1) and (2 3) are the block parities and (0 2)(1 3) swaps the blocks.
Permutation lift(const Permutation& q) {
  const Permutation swap = cyc({{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  const Permutation qswap = Permutation::from_cycles(4, {{0, 2}, {1, 3}});
  const bool swaps = q(0) >= 2;
  const Permutation base = swaps ? q * qswap : q;
  Permutation out(10);
  if (base(0) == 1) out = out * cyc({{0, 1}});
  if (base(2) == 3) out = out * cyc({{5, 6}});
  if (swaps) out = out * swap;
  return out;
}

std::string describe(const GroupTable& t, const SubgroupSet& k) {
  const auto ids = k.elements();
  bool cyclic = false;
  for (ElementId e : ids) cyclic = cyclic || t.order(e) == k.order;
  if (k.order == 2) return "C2";
  return cyclic ? "C4" : "C2^2";
}

}  // namespace

std::vector<WreathCandidate> wreath_index_2_4_classes() {
  const PermGroup quotient(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}}),
                               Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  const GroupTable qt(quotient);
  const Lattice lat = compute_lattice(qt);

  const std::vector<Permutation> socle = {cyc({{0, 1, 2}}), cyc({{0, 1, 2, 3, 4}}), cyc({{5, 6, 7}}),
                                          cyc({{5, 6, 7, 8, 9}})};
  std::vector<WreathCandidate> out;
  for (const auto& cls : lat.classes) {
    const SubgroupSet& k = lat.subgroups[cls.front()];
    if (k.order != 2 && k.order != 4) continue;
    std::vector<Permutation> gens = socle;
    bool inside_base = true;
    for (ElementId e : k.elements()) {
      if (e == 0) continue;
      gens.push_back(lift(qt.element(e)));
      inside_base = inside_base && qt.element(e)(0) < 2;
    }
    bool cyclic = false;
    for (ElementId e : k.elements()) cyclic = cyclic || qt.order(e) == k.order;
    WreathCandidate c{PermGroup(10, std::move(gens)), describe(qt, k), cyclic, inside_base};
    if (inside_base) c.quotient += " (base)";
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.group.order() < b.group.order(); });
  return out;
}

std::vector<PermGroup> wreath_nonzero_spread_subgroups() {
  std::vector<PermGroup> out;
  for (auto& c : wreath_index_2_4_classes())
    if (c.quotient_cyclic && !c.inside_base) out.push_back(std::move(c.group));
  return out;
}

}  // namespace genset

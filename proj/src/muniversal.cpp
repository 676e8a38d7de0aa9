#include "genset/muniversal.hpp"

#include <random>
#include <string>

#include "genset/errors.hpp"
#include "genset/kernels.hpp"

namespace genset {

bool MUniversalAction::generates(std::span<const ElementId> ids) const {
  std::vector<Bits::Word> acc(fix.stride(), ~Bits::Word{0});
  for (ElementId id : ids) {
    const auto r = fix.row(id);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= r[w];
  }
  // Padding bits beyond total_degree are zero in every row.
  if (ids.empty()) return total_degree == 0;
  for (auto w : acc)
    if (w) return false;
  return true;
}

namespace {

MUniversalAction make_blocks(const GroupTable& t, const MaximalClasses& mc) {
  MUniversalAction a;
  const std::size_t n = t.size();
  for (const auto& rep : mc.representatives) {
    MUniversalAction::Block b;
    b.subgroup = rep;
    b.offset = a.total_degree;
    const auto mel = rep.elements();
    Bits covered(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (covered.test(x)) continue;
      b.transversal.push_back(static_cast<ElementId>(x));
      for (ElementId m : mel) covered.set(t.mul(m, x));
    }
    a.total_degree += b.transversal.size();
    a.blocks.push_back(std::move(b));
  }
  return a;
}

template <class Kernel>
MUniversalAction build_with(const GroupTable& t, const MaximalClasses& mc, Kernel kernel) {
  MUniversalAction a = make_blocks(t, mc);
  std::vector<kernels::CosetBlockView> views;
  for (const auto& b : a.blocks) views.push_back({&b.subgroup.members, b.transversal, b.offset});
  a.fix = kernel(t, views, a.total_degree);
  return a;
}

}  // namespace

MUniversalAction build_action(const GroupTable& t, const MaximalClasses& mc) {
  return build_with(t, mc, [](const GroupTable& tt, std::span<const kernels::CosetBlockView> v, std::size_t d) {
    return kernels::fix_matrix_parallel(tt, v, d);
  });
}

MUniversalAction build_action_serial(const GroupTable& t, const MaximalClasses& mc) {
  return build_with(t, mc, [](const GroupTable& tt, std::span<const kernels::CosetBlockView> v, std::size_t d) {
    return kernels::fix_matrix_serial(tt, v, d);
  });
}

AuditReport property_g_audit(const GroupTable& t, const MUniversalAction& a, std::size_t trials, std::uint64_t seed) {
  AuditReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> elem(0, t.size() - 1);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (std::size_t k = 0; k < trials; ++k) {
    std::vector<ElementId> s(size(rng));
    for (auto& e : s) e = static_cast<ElementId>(elem(rng));
    const bool by_fix = a.generates(s);
    const bool by_order = closure(t, s).order == t.size();
    ++rep.trials;
    if (by_fix != by_order) {
      std::string names;
      for (auto e : s) names += t.element(e).to_cycle_string() + " ";
      throw AuditFailure("fixed-point oracle disagrees with closure on {" + names + "}");
    }
    ++rep.agreements;
    rep.generating += by_fix ? 1 : 0;
  }
  return rep;
}

}  // namespace genset

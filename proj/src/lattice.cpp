#include "genset/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "genset/errors.hpp"

namespace genset {

std::vector<ElementId> SubgroupSet::elements() const {
  std::vector<ElementId> out;
  out.reserve(order);
  members.for_each([&](std::size_t i) { out.push_back(static_cast<ElementId>(i)); });
  return out;
}

std::size_t MaximalClasses::total() const {
  std::size_t s = 0;
  for (const auto& c : classes) s += c.size();
  return s;
}

SubgroupSet closure(const GroupTable& t, std::span<const ElementId> seed) {
  const std::size_t n = t.size();
  Bits in(n);
  std::vector<ElementId> list{0};
  in.set(0);
  std::vector<ElementId> gens;
  for (ElementId g : seed)
    if (g != 0) gens.push_back(g);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const ElementId* r = t.row(list[i]);
    for (ElementId g : gens) {
      const ElementId y = r[g];
      if (!in.test(y)) {
        in.set(y);
        list.push_back(y);
      }
    }
  }
  return SubgroupSet(std::move(in));
}

SubgroupSet closure(const GroupTable& t, const SubgroupSet& seed) {
  const auto e = seed.elements();
  return closure(t, std::span<const ElementId>(e));
}

SubgroupSet extend(const GroupTable& t, const SubgroupSet& h, ElementId x) {
  const std::size_t n = t.size();
  if (h.contains(x)) return h;
  const auto hel = h.elements();
  Bits in = h.members;
  std::vector<ElementId> list = hel;
  // The result is a union of left cosets yH closed under right
  // multiplication by x.
  for (std::size_t i = 0; i < list.size(); ++i) {
    const ElementId y = t.mul(list[i], x);
    if (in.test(y)) continue;
    const ElementId* r = t.row(y);
    for (ElementId e : hel) {
      const ElementId z = r[e];
      in.set(z);
      list.push_back(z);
    }
    if (2 * list.size() > n) return SubgroupSet(Bits(n, true));
  }
  SubgroupSet out;
  out.order = list.size();
  out.members = std::move(in);
  return out;
}

SubgroupSet conjugate_subgroup(const GroupTable& t, const SubgroupSet& h, ElementId by) {
  Bits out(t.size());
  h.members.for_each([&](std::size_t e) { out.set(t.conj(e, by)); });
  SubgroupSet s;
  s.order = h.order;
  s.members = std::move(out);
  return s;
}

SubgroupSet normalizer(const GroupTable& t, const SubgroupSet& h, std::span<const ElementId> h_generators) {
  const std::size_t n = t.size();
  Bits out(n);
  for (std::size_t g = 0; g < n; ++g) {
    bool ok = true;
    for (ElementId s : h_generators)
      if (!h.contains(t.conj(s, g))) {
        ok = false;
        break;
      }
    if (ok) out.set(g);
  }
  return SubgroupSet(std::move(out));
}

namespace {

struct ClassRecord {
  SubgroupSet rep;
  std::vector<ElementId> gens;  // generates rep
  std::vector<std::size_t> members;  // indices into the flat subgroup store
  bool maximal = false;
};

struct Extension {
  SubgroupSet group;
  std::vector<ElementId> gens;
};

struct RepJobResult {
  std::vector<Extension> found;
  bool maximal = false;
};

// A small generating set of a subgroup given as a bit set.
std::vector<ElementId> generating_set(const GroupTable& t, const SubgroupSet& s) {
  std::vector<ElementId> gens;
  SubgroupSet cur = closure(t, std::span<const ElementId>{});
  while (cur.order < s.order) {
    std::size_t pick = 0;
    s.members.for_each([&](std::size_t e) {
      if (!pick && !cur.contains(e)) pick = e;
    });
    gens.push_back(static_cast<ElementId>(pick));
    cur = extend(t, cur, static_cast<ElementId>(pick));
  }
  return gens;
}

// Marks every element of the orbit of x under left and right multiplication
// by H and conjugation by N(H); these all extend H to conjugate subgroups.
void mark_equivalent(const GroupTable& t, ElementId x, std::span<const ElementId> hgens,
                     std::span<const ElementId> ngens, Bits& tried, std::vector<ElementId>& scratch) {
  if (tried.test(x)) return;
  scratch.clear();
  scratch.push_back(x);
  tried.set(x);
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    const ElementId y = scratch[i];
    auto visit = [&](ElementId z) {
      if (!tried.test(z)) {
        tried.set(z);
        scratch.push_back(z);
      }
    };
    for (ElementId h : hgens) {
      visit(t.mul(h, y));
      visit(t.mul(y, h));
    }
    for (ElementId g : ngens) visit(t.conj(y, g));
  }
}

RepJobResult extend_representative(const GroupTable& t, const ClassRecord& rec,
                                   const std::vector<ElementId>& cyclic_keys) {
  const std::size_t n = t.size();
  RepJobResult out;
  out.maximal = rec.rep.order < n;
  if (rec.rep.order == n) return out;
  const SubgroupSet norm = normalizer(t, rec.rep, rec.gens);
  const auto ngens = generating_set(t, norm);
  Bits tried = rec.rep.members;
  std::vector<ElementId> scratch;
  std::unordered_map<Bits, std::size_t, BitsHash> local;
  for (ElementId x : cyclic_keys) {
    if (tried.test(x)) continue;
    mark_equivalent(t, x, rec.gens, ngens, tried, scratch);
    SubgroupSet k = extend(t, rec.rep, x);
    if (k.order != n) out.maximal = false;
    if (local.contains(k.members)) continue;
    local.emplace(k.members, out.found.size());
    auto gens = rec.gens;
    gens.push_back(x);
    out.found.push_back({std::move(k), std::move(gens)});
  }
  return out;
}

}  // namespace

Lattice compute_lattice(const GroupTable& t, const LatticeOptions& options) {
  const std::size_t n = t.size();
  std::vector<ElementId> cyclic_keys;
  for (std::size_t x = 1; x < n; ++x)
    if (t.cyclic_key(x) == x) cyclic_keys.push_back(static_cast<ElementId>(x));

  std::vector<SubgroupSet> store;
  std::vector<std::size_t> store_class;
  std::unordered_map<Bits, std::size_t, BitsHash> known;
  std::vector<ClassRecord> classes;

  auto add_class = [&](SubgroupSet rep, std::vector<ElementId> gens) {
    const std::size_t cid = classes.size();
    ClassRecord rec;
    // Orbit under conjugation by the generators of G.
    std::vector<std::size_t> orbit;
    auto push = [&](SubgroupSet s) {
      if (known.contains(s.members)) return;
      if (store.size() >= options.subgroup_budget)
        throw BudgetExceeded("subgroup count exceeds budget " + std::to_string(options.subgroup_budget));
      known.emplace(s.members, store.size());
      orbit.push_back(store.size());
      store.push_back(std::move(s));
      store_class.push_back(cid);
    };
    push(rep);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElementId g : t.generators()) push(conjugate_subgroup(t, store[orbit[i]], g));
    rec.rep = std::move(rep);
    rec.gens = std::move(gens);
    rec.members = std::move(orbit);
    classes.push_back(std::move(rec));
  };

  add_class(closure(t, std::span<const ElementId>{}), {});
  std::size_t processed = 0;
  while (processed < classes.size()) {
    const std::size_t batch_end = classes.size();
    std::vector<RepJobResult> results(batch_end - processed);
#if defined(GENSET_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(results.size()); ++i)
      results[static_cast<std::size_t>(i)] = extend_representative(t, classes[processed + static_cast<std::size_t>(i)], cyclic_keys);
    for (std::size_t i = 0; i < results.size(); ++i) {
      classes[processed + i].maximal = results[i].maximal;
      for (auto& ext : results[i].found)
        if (!known.contains(ext.group.members)) add_class(std::move(ext.group), std::move(ext.gens));
    }
    processed = batch_end;
  }

  // Canonical ordering: subgroups by (order, members); classes by their
  // smallest member; the representative is the smallest member.
  std::vector<std::size_t> perm(store.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (store[a].order != store[b].order) return store[a].order < store[b].order;
    return store[a].members < store[b].members;
  });
  std::vector<std::size_t> new_pos(store.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_pos[perm[i]] = i;

  Lattice lat;
  lat.subgroups.reserve(store.size());
  for (std::size_t i : perm) lat.subgroups.push_back(std::move(store[i]));
  std::vector<std::vector<std::size_t>> cls(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t m : classes[c].members) cls[c].push_back(new_pos[m]);
    std::sort(cls[c].begin(), cls[c].end());
  }
  std::vector<std::size_t> corder(classes.size());
  std::iota(corder.begin(), corder.end(), 0);
  std::sort(corder.begin(), corder.end(), [&](std::size_t a, std::size_t b) { return cls[a][0] < cls[b][0]; });
  lat.class_of.assign(lat.subgroups.size(), 0);
  std::vector<std::size_t> class_new_id(classes.size());
  for (std::size_t k = 0; k < corder.size(); ++k) {
    class_new_id[corder[k]] = k;
    for (std::size_t m : cls[corder[k]]) lat.class_of[m] = k;
    lat.classes.push_back(std::move(cls[corder[k]]));
  }
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].maximal) lat.maximal_classes.push_back(class_new_id[c]);
  std::sort(lat.maximal_classes.begin(), lat.maximal_classes.end(), [&](std::size_t a, std::size_t b) {
    const auto oa = lat.subgroups[lat.classes[a][0]].order, ob = lat.subgroups[lat.classes[b][0]].order;
    if (oa != ob) return oa > ob;  // larger maximal subgroup = smaller index first
    return a < b;
  });
  return lat;
}

std::vector<SubgroupSet> all_subgroups(const GroupTable& t, const LatticeOptions& options) {
  return compute_lattice(t, options).subgroups;
}

MaximalClasses maximal_subgroups(const Lattice& lattice, std::size_t group_order) {
  MaximalClasses mc;
  for (std::size_t c : lattice.maximal_classes) {
    std::vector<SubgroupSet> members;
    for (std::size_t i : lattice.classes[c]) members.push_back(lattice.subgroups[i]);
    mc.representatives.push_back(members.front());
    mc.indices.push_back(group_order / members.front().order);
    mc.classes.push_back(std::move(members));
  }
  return mc;
}

MaximalClasses maximal_subgroups(const GroupTable& t, const LatticeOptions& options) {
  return maximal_subgroups(compute_lattice(t, options), t.size());
}

SubgroupSet frattini(const MaximalClasses& mc, std::size_t group_order) {
  Bits acc(group_order, true);
  for (const auto& cls : mc.classes)
    for (const auto& m : cls) acc &= m.members;
  return SubgroupSet(std::move(acc));
}

}  // namespace genset

#include "genset/equiv.hpp"

#include <algorithm>
#include <numeric>

#include "genset/errors.hpp"
#include "genset/kernels.hpp"

namespace genset {

bool Partition::refines(const Partition& coarser) const {
  for (const auto& b : blocks)
    for (ElementId e : b)
      if (coarser.block_of[e] != coarser.block_of[b.front()]) return false;
  return true;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& b : blocks) s.push_back(b.size());
  std::sort(s.rbegin(), s.rend());
  return s;
}

GroupData analyze(const PermGroup& g, const AnalysisOptions& options) {
  GroupTable table(g, options.cap);
  Lattice lattice = compute_lattice(table, options.lattice);
  return analyze_from_lattice(std::move(table), std::move(lattice));
}

GroupData analyze_from_lattice(GroupTable table, Lattice lattice) {
  MaximalClasses maximal = maximal_subgroups(lattice, table.size());
  MUniversalAction action = build_action(table, maximal);
  SubgroupSet frat = frattini(maximal, table.size());
  return GroupData{std::move(table), std::move(lattice), std::move(maximal), std::move(action), std::move(frat)};
}

Partition c_classes(const GroupTable& t) {
  std::vector<ElementId> keys(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) keys[x] = t.cyclic_key(x);
  return Partition::from_keys(keys);
}

Partition m_classes(const MUniversalAction& a) {
  std::vector<Bits> keys(a.group_order());
  for (std::size_t x = 0; x < keys.size(); ++x) keys[x] = a.fix.row_bits(x);
  return Partition::from_keys(keys);
}

namespace {

std::vector<std::size_t> rep_rows(const Partition& m) {
  std::vector<std::size_t> rows(m.reps.begin(), m.reps.end());
  return rows;
}

Partition lift(const Partition& m, const std::vector<std::size_t>& rep_block) {
  std::vector<std::size_t> keys(m.block_of.size());
  for (std::size_t x = 0; x < keys.size(); ++x) keys[x] = rep_block[m.block_of[x]];
  return Partition::from_keys(keys);
}

}  // namespace

// Generation depends only on m-classes, so multisets range over m-class
// representatives instead of all of G.
Partition mr_classes(const MUniversalAction& a, const Partition& m, std::size_t r) {
  if (r == 0) throw InvalidSpec("rank r must be at least 1");
  const auto rows = rep_rows(m);
  return lift(m, kernels::multiset_signature_classes_parallel(a.fix, rows, r - 1));
}

Partition mr_classes_serial(const MUniversalAction& a, const Partition& m, std::size_t r) {
  if (r == 0) throw InvalidSpec("rank r must be at least 1");
  const auto rows = rep_rows(m);
  return lift(m, kernels::multiset_signature_classes_serial(a.fix, rows, r - 1));
}

namespace {

// Depth-first search for at most `k` representatives (from `candidates`,
// increasing positions) whose fixed sets, intersected with `acc`, are empty.
bool find_cover(const MUniversalAction& a, const std::vector<ElementId>& candidates, std::size_t k,
                const std::vector<Bits::Word>& acc, std::size_t from, std::vector<ElementId>& chosen) {
  const std::size_t stride = a.fix.stride();
  std::vector<Bits::Word> next(stride);
  for (std::size_t i = from; i < candidates.size(); ++i) {
    const auto r = a.fix.row(candidates[i]);
    bool shrank = false, empty = true;
    for (std::size_t w = 0; w < stride; ++w) {
      next[w] = acc[w] & r[w];
      shrank |= next[w] != acc[w];
      empty &= next[w] == 0;
    }
    if (!shrank) continue;
    chosen.push_back(candidates[i]);
    if (empty) return true;
    if (k > 1 && find_cover(a, candidates, k - 1, next, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// The identity's block is the Frattini subgroup; its rows are full and never help.
std::vector<ElementId> non_frattini_reps(const Partition& m) {
  std::vector<ElementId> out;
  for (ElementId r : m.reps)
    if (r != 0) out.push_back(r);
  return out;
}

std::size_t search_with(const MUniversalAction& a, const Partition& m, std::vector<Bits::Word> start,
                        std::vector<ElementId>* witness) {
  if (std::all_of(start.begin(), start.end(), [](Bits::Word w) { return w == 0; })) return 0;
  const auto cands = non_frattini_reps(m);
  for (std::size_t k = 1; k <= cands.size(); ++k) {
    std::vector<ElementId> chosen;
    if (find_cover(a, cands, k, start, 0, chosen)) {
      if (witness) *witness = chosen;
      return k;
    }
  }
  throw InternalError("no generating set among m-class representatives");
}

}  // namespace

GeneratingSet minimal_generating_set(const MUniversalAction& a, const Partition& m) {
  GeneratingSet gs;
  std::vector<Bits::Word> full(a.fix.stride(), 0);
  for (std::size_t c = 0; c < a.total_degree; ++c) full[c / 64] |= Bits::Word{1} << (c % 64);
  gs.size = search_with(a, m, std::move(full), &gs.elements);
  return gs;
}

std::size_t d(const MUniversalAction& a, const Partition& m) { return minimal_generating_set(a, m).size; }

std::size_t d_with(const MUniversalAction& a, const Partition& m, ElementId x) {
  const auto r = a.fix.row(x);
  return search_with(a, m, std::vector<Bits::Word>(r.begin(), r.end()), nullptr);
}

PsiReport psi(const MUniversalAction& a, const Partition& m) {
  PsiReport rep;
  rep.d = d(a, m);
  rep.cap_used = rep.d + 5;
  rep.m_class_count = m.size();
  for (std::size_t r = std::max<std::size_t>(rep.d, 1); r <= rep.cap_used; ++r) {
    Partition p = mr_classes(a, m, r);
    const bool done = p.size() == m.size();
    rep.partitions_by_r.emplace_back(r, std::move(p));
    if (done) {
      rep.psi = r;
      return rep;
    }
  }
  throw InternalError("psi exceeds d(G) + 5 = " + std::to_string(rep.cap_used));
}

bool efficiently_generated(const MUniversalAction& a, const Partition& m, const SubgroupSet& frattini) {
  const std::size_t dg = d(a, m);
  for (ElementId x : m.reps) {
    if (frattini.contains(x)) continue;
    if (d_with(a, m, x) == dg) return false;
  }
  return true;
}

namespace {

struct MuSearch {
  const MUniversalAction& a;
  std::vector<ElementId> cands;
  std::size_t budget;
  std::size_t calls = 0;
  std::size_t best = 0;
  std::size_t stride;

  // others[i] = AND of fix rows of chosen minus chosen[i]
  std::vector<ElementId> chosen;
  std::vector<std::vector<Bits::Word>> others;
  std::vector<Bits::Word> acc;

  bool has_escape(const std::vector<Bits::Word>& set, std::span<const Bits::Word> fix_s) const {
    for (std::size_t w = 0; w < stride; ++w)
      if (set[w] & ~fix_s[w]) return true;
    return false;
  }

  void dfs(std::size_t from, ElementId first) {
    for (std::size_t i = from; i < cands.size(); ++i) {
      const ElementId y = cands[i];
      if (y == first) continue;
      if (++calls > budget) throw BudgetExceeded("mu search exceeded " + std::to_string(budget) + " oracle calls");
      const auto fy = a.fix.row(y);
      // y must not be redundant: the current set fixes a point y moves.
      if (!has_escape(acc, fy)) continue;
      std::vector<std::vector<Bits::Word>> new_others(others.size());
      bool ok = true;
      for (std::size_t k = 0; k < chosen.size() && ok; ++k) {
        new_others[k].resize(stride);
        for (std::size_t w = 0; w < stride; ++w) new_others[k][w] = others[k][w] & fy[w];
        ok = has_escape(new_others[k], a.fix.row(chosen[k]));
      }
      if (!ok) continue;
      std::vector<Bits::Word> new_acc(stride);
      bool empty = true;
      for (std::size_t w = 0; w < stride; ++w) {
        new_acc[w] = acc[w] & fy[w];
        empty &= new_acc[w] == 0;
      }
      if (empty) {
        best = std::max(best, chosen.size() + 1);
        continue;
      }
      auto saved_others = std::move(others);
      auto saved_acc = std::move(acc);
      others = std::move(new_others);
      others.push_back(saved_acc);
      acc = std::move(new_acc);
      chosen.push_back(y);
      dfs(i + 1, first);
      chosen.pop_back();
      others = std::move(saved_others);
      acc = std::move(saved_acc);
    }
  }
};

}  // namespace

std::size_t mu(const GroupTable& t, const MUniversalAction& a, const Partition& m, std::size_t budget) {
  if (a.total_degree == 0) return 0;
  MuSearch s{a, non_frattini_reps(m), budget, 0, 0, a.fix.stride(), {}, {}, {}};
  // Conjugation permutes irredundant generating sets, so the first element
  // only needs to range over conjugacy orbits of m-classes.
  std::vector<std::size_t> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementId r : m.reps)
    for (ElementId g : t.generators()) {
      const auto a1 = find(m.block_of[r]), b1 = find(m.block_of[t.conj(r, g)]);
      if (a1 != b1) parent[std::max(a1, b1)] = std::min(a1, b1);
    }
  for (ElementId first : s.cands) {
    if (find(m.block_of[first]) != m.block_of[first]) continue;
    const auto f = a.fix.row(first);
    s.acc.assign(f.begin(), f.end());
    if (std::all_of(s.acc.begin(), s.acc.end(), [](Bits::Word w) { return w == 0; })) {
      s.best = std::max<std::size_t>(s.best, 1);
      continue;
    }
    s.chosen = {first};
    std::vector<Bits::Word> full(s.stride, 0);
    for (std::size_t c = 0; c < a.total_degree; ++c) full[c / 64] |= Bits::Word{1} << (c % 64);
    s.others = {full};
    s.dfs(0, first);
  }
  return s.best;
}

}  // namespace genset

#include "genset/gengraph.hpp"

#include <algorithm>
#include <numeric>

#include "genset/errors.hpp"
#include "genset/kernels.hpp"

namespace genset {

bool WeightedReducedGraph::has_loops() const { return std::find(loops.begin(), loops.end(), true) != loops.end(); }

std::vector<std::size_t> WeightedReducedGraph::nonidentity_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (v != identity_vertex || weights[v] > 1) out.push_back(v);
  return out;
}

std::vector<std::size_t> WeightedReducedGraph::isolated() const {
  std::vector<std::size_t> out;
  for (std::size_t v : nonidentity_vertices())
    if (adjacency[v].none() && !loops[v]) out.push_back(v);
  return out;
}

WeightedReducedGraph reduced_graph_from_classes(const MUniversalAction& a, const Partition& gamma) {
  WeightedReducedGraph g;
  g.vertex_count = gamma.size();
  std::vector<std::size_t> rows(gamma.reps.begin(), gamma.reps.end());
  const BitMatrix adj = kernels::generation_matrix_parallel(a.fix, rows);
  g.adjacency.reserve(g.vertex_count);
  g.loops.assign(g.vertex_count, false);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    Bits row = adj.row_bits(v);
    if (row.test(v)) {
      g.loops[v] = true;
      row.reset(v);
    }
    g.adjacency.push_back(std::move(row));
    g.weights.push_back(gamma.blocks[v].size());
    g.members.push_back(gamma.blocks[v]);
  }
  g.identity_vertex = gamma.block_of[0];
  return g;
}

WeightedReducedGraph reduced_graph(const MUniversalAction& a, const Partition& m) {
  return reduced_graph_from_classes(a, mr_classes(a, m, 2));
}

WeightedReducedGraph make_graph(std::vector<Bits> adjacency, std::vector<bool> loops, std::vector<std::size_t> weights,
                                std::size_t identity_vertex) {
  WeightedReducedGraph g;
  g.vertex_count = adjacency.size();
  g.adjacency = std::move(adjacency);
  for (std::size_t v = 0; v < g.vertex_count; ++v) g.adjacency[v].reset(v);
  g.loops = std::move(loops);
  g.weights = std::move(weights);
  g.identity_vertex = identity_vertex;
  g.members.resize(g.vertex_count);
  return g;
}

// ---------------------------------------------------------------------------

namespace {

class CoverSearch {
 public:
  CoverSearch(const std::vector<Bits>& sets, std::size_t budget) : sets_(sets), budget_(budget) {}

  std::size_t solve(const Bits& universe) {
    best_ = greedy(universe);
    rec(universe, 0);
    return best_;
  }

  std::size_t greedy(Bits uncovered) const {
    std::size_t used = 0;
    while (uncovered.any()) {
      std::size_t bi = 0, bc = 0;
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        const std::size_t c = (sets_[i] & uncovered).count();
        if (c > bc) {
          bc = c;
          bi = i;
        }
      }
      uncovered.subtract(sets_[bi]);
      ++used;
    }
    return used;
  }

 private:
  void rec(const Bits& uncovered, std::size_t depth) {
    if (++nodes_ > budget_) throw BudgetExceeded("set cover search exceeded " + std::to_string(budget_) + " nodes");
    if (uncovered.none()) {
      best_ = std::min(best_, depth);
      return;
    }
    if (depth + 1 >= best_) return;
    // Elements no two of which share a covering set each need their own set.
    std::size_t pick = 0, fewest = SIZE_MAX, packing = 0;
    Bits blocked(uncovered.size());
    uncovered.for_each([&](std::size_t e) {
      std::size_t c = 0;
      for (const auto& s : sets_) c += s.test(e) ? 1 : 0;
      if (c < fewest) {
        fewest = c;
        pick = e;
      }
      if (!blocked.test(e)) {
        ++packing;
        for (const auto& s : sets_)
          if (s.test(e)) blocked |= s;
      }
    });
    if (depth + packing >= best_) return;
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t i = 0; i < sets_.size(); ++i)
      if (sets_[i].test(pick)) options.emplace_back((sets_[i] & uncovered).count(), i);
    std::sort(options.begin(), options.end(), [](auto a, auto b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    for (auto [gain, i] : options) {
      Bits next = uncovered;
      next.subtract(sets_[i]);
      rec(next, depth + 1);
    }
  }

  const std::vector<Bits>& sets_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::size_t best_ = SIZE_MAX;
};

}  // namespace

std::optional<std::size_t> min_set_cover(const Bits& universe, const std::vector<Bits>& sets, std::size_t budget) {
  Bits all(universe.size());
  for (const auto& s : sets) all |= s;
  if (!universe.is_subset_of(all)) return std::nullopt;
  if (universe.none()) return 0;
  // Drop sets contained in another (ties keep the first).
  std::vector<Bits> kept;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Bits si = sets[i] & universe;
    bool dominated = si.none();
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (i == j) continue;
      const Bits sj = sets[j] & universe;
      dominated = si.is_subset_of(sj) && (!(sj.is_subset_of(si)) || j < i);
    }
    if (!dominated) kept.push_back(si);
  }
  CoverSearch cs(kept, budget);
  return cs.solve(universe);
}

std::optional<std::size_t> spread(const WeightedReducedGraph& g, std::size_t budget) {
  const auto cand = g.nonidentity_vertices();
  if (cand.empty() || g.has_loops()) return std::nullopt;
  for (std::size_t v : cand)
    if (g.adjacency[v].none()) return 0;
  // A set S has no common neighbour iff the non-neighbourhoods of its
  // members cover every possible mate.
  Bits mates(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v)
    if (g.adjacency[v].any()) mates.set(v);
  std::vector<Bits> sets;
  for (std::size_t v : cand) {
    Bits s = mates;
    s.subtract(g.adjacency[v]);
    sets.push_back(std::move(s));
  }
  auto cover = min_set_cover(mates, sets, budget);
  if (!cover) throw InternalError("non-cyclic generating graph with a universal mate");
  return *cover - 1;
}

bool has_nonzero_spread(const WeightedReducedGraph& g) {
  if (g.has_loops()) return true;
  const auto cand = g.nonidentity_vertices();
  if (cand.empty()) return true;
  return std::none_of(cand.begin(), cand.end(), [&](std::size_t v) { return g.adjacency[v].none(); });
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const WeightedReducedGraph& g, std::size_t budget) : g_(g), budget_(budget) {
    for (std::size_t v = 0; v < g.vertex_count; ++v) w_.push_back(g.loops[v] ? g.weights[v] : 1);
  }

  std::size_t run() {
    Bits all(g_.vertex_count, true);
    expand(0, all);
    return best_;
  }

 private:
  void expand(std::size_t current, Bits cand) {
    if (++nodes_ > budget_) throw BudgetExceeded("clique search exceeded " + std::to_string(budget_) + " nodes");
    // Greedy colouring: each colour class contributes its heaviest vertex.
    std::vector<std::size_t> order, bound;
    Bits uncoloured = cand;
    std::size_t acc = 0;
    while (uncoloured.any()) {
      Bits avail = uncoloured;
      std::size_t heaviest = 0;
      while (avail.any()) {
        std::size_t v = 0;
        avail.for_each([&](std::size_t x) {
          if (!v && !avail.test(0)) v = x;
        });
        if (avail.test(0)) v = 0;
        avail.reset(v);
        avail.subtract(g_.adjacency[v]);
        uncoloured.reset(v);
        heaviest = std::max(heaviest, w_[v]);
        order.push_back(v);
        bound.push_back(0);
      }
      acc += heaviest;
      for (std::size_t k = bound.size(); k-- > 0 && bound[k] == 0;) bound[k] = acc;
    }
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current + bound[k] <= best_) return;
      const std::size_t v = order[k];
      const std::size_t next = current + w_[v];
      Bits nc = cand & g_.adjacency[v];
      if (nc.none())
        best_ = std::max(best_, next);
      else
        expand(next, std::move(nc));
      cand.reset(v);
    }
  }

  const WeightedReducedGraph& g_;
  std::vector<std::size_t> w_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::size_t best_ = 0;
};

class ColourSearch {
 public:
  ColourSearch(const WeightedReducedGraph& g, std::size_t budget) : g_(g), budget_(budget), colour_(g.vertex_count, 0) {}

  std::size_t run(std::size_t lower) {
    lower_ = lower;
    best_ = g_.vertex_count;
    search(0, 0);
    return best_;
  }

 private:
  // DSATUR branch and bound; colours are 1-based, 0 = uncoloured.
  void search(std::size_t coloured, std::size_t used) {
    if (++nodes_ > budget_) throw BudgetExceeded("colouring search exceeded " + std::to_string(budget_) + " nodes");
    if (used >= best_) return;
    if (coloured == g_.vertex_count) {
      best_ = used;
      return;
    }
    std::size_t pick = 0, best_sat = 0, best_deg = 0;
    bool have = false;
    std::vector<bool> seen;
    for (std::size_t v = 0; v < g_.vertex_count; ++v) {
      if (colour_[v]) continue;
      seen.assign(used + 2, false);
      std::size_t sat = 0;
      g_.adjacency[v].for_each([&](std::size_t u) {
        if (colour_[u] && !seen[colour_[u]]) {
          seen[colour_[u]] = true;
          ++sat;
        }
      });
      const std::size_t deg = g_.adjacency[v].count();
      if (!have || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        have = true;
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::vector<bool> blocked(used + 2, false);
    g_.adjacency[pick].for_each([&](std::size_t u) {
      if (colour_[u]) blocked[colour_[u]] = true;
    });
    for (std::size_t c = 1; c <= used + 1 && c < best_; ++c) {
      if (blocked[c]) continue;
      colour_[pick] = c;
      search(coloured + 1, std::max(used, c));
      colour_[pick] = 0;
      if (best_ == lower_) return;
    }
  }

  const WeightedReducedGraph& g_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> colour_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
};

}  // namespace

std::size_t clique_number(const WeightedReducedGraph& g, std::size_t budget) {
  if (g.vertex_count == 0) return 0;
  return CliqueSearch(g, budget).run();
}

std::size_t chromatic_number(const WeightedReducedGraph& g, std::size_t budget) {
  if (g.has_loops()) throw LoopsUnsupported();
  if (g.vertex_count == 0) return 0;
  const std::size_t lower = clique_number(g, budget);
  return ColourSearch(g, budget).run(lower);
}

std::size_t total_domination_number(const WeightedReducedGraph& g, std::size_t budget) {
  const auto cand = g.nonidentity_vertices();
  if (!g.isolated().empty()) throw Undefined("total domination undefined: some nonidentity element is isolated");
  Bits universe(g.vertex_count);
  for (std::size_t v : cand) universe.set(v);
  std::vector<Bits> sets;
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    Bits s = g.adjacency[v];
    if (g.loops[v]) s.set(v);
    sets.push_back(s & universe);
  }
  auto cover = min_set_cover(universe, sets, budget);
  if (!cover) throw Undefined("total domination undefined");
  return *cover;
}

}  // namespace genset

#pragma once

// Slow, independent reference computations. Nothing here uses the
// multiplication table, the lattice search or the fixed-point oracle: groups
// are plain sets of image arrays and generation is decided by closure.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Perm = std::vector<unsigned>;
using PermSet = std::set<Perm>;

inline Perm mul(const Perm& p, const Perm& q) {  // apply p, then q
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<unsigned>(i);
  return r;
}

inline std::size_t order(const Perm& p) {
  Perm x = p;
  std::size_t k = 1;
  const Perm e = identity(p.size());
  while (x != e) {
    x = mul(x, p);
    ++k;
  }
  return k;
}

inline PermSet closure(std::size_t degree, const std::vector<Perm>& gens) {
  PermSet seen{identity(degree)};
  std::vector<Perm> frontier{identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = mul(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline PermSet closure(std::size_t degree, const PermSet& seed) {
  return closure(degree, std::vector<Perm>(seed.begin(), seed.end()));
}

// Every subgroup: start from the trivial group and close under adding one
// element at a time until nothing new appears. Each subgroup keeps the
// generators it was reached with so closures stay cheap.
inline std::set<PermSet> all_subgroups(std::size_t degree, const PermSet& g) {
  std::map<PermSet, std::vector<Perm>> found{{PermSet{identity(degree)}, {}}};
  std::vector<PermSet> frontier{PermSet{identity(degree)}};
  while (!frontier.empty()) {
    std::vector<PermSet> next;
    for (const auto& h : frontier)
      for (const auto& x : g) {
        if (h.count(x)) continue;
        auto gens = found[h];
        gens.push_back(x);
        PermSet k = closure(degree, gens);
        if (found.emplace(k, gens).second) next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  std::set<PermSet> out;
  for (auto& [h, gens] : found) out.insert(h);
  return out;
}

inline std::vector<PermSet> maximal_subgroups(const std::set<PermSet>& subs, std::size_t group_order) {
  std::vector<PermSet> out;
  for (const auto& h : subs) {
    if (h.size() == group_order) continue;
    bool maximal = true;
    for (const auto& k : subs)
      if (k.size() != group_order && k.size() > h.size() &&
          std::includes(k.begin(), k.end(), h.begin(), h.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(h);
  }
  return out;
}

// Brute-force view of one group: elements in the library's order (identity
// first, then lexicographic), so element i here is element i there.
struct Group {
  std::size_t degree = 0;
  std::vector<Perm> elems;
  std::map<Perm, std::size_t> index;

  Group(std::size_t deg, const std::vector<Perm>& gens) : degree(deg) {
    const PermSet all = closure(deg, gens);
    elems.push_back(identity(deg));
    for (const auto& p : all)
      if (p != elems.front()) elems.push_back(p);
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  }
  std::size_t size() const { return elems.size(); }

  bool generates(const std::vector<std::size_t>& ids) const {
    std::vector<Perm> gens;
    for (auto i : ids) gens.push_back(elems[i]);
    return closure(degree, gens).size() == size();
  }

  // gen[x][y]: <x, y> = G
  std::vector<std::vector<bool>> generation_table() const {
    std::vector<std::vector<bool>> t(size(), std::vector<bool>(size()));
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = x; y < size(); ++y) t[x][y] = t[y][x] = generates({x, y});
    return t;
  }
};

// x ~ y iff the same maximal subgroups contain them.
inline std::vector<std::size_t> m_keys(const Group& g, const std::vector<PermSet>& maximal) {
  std::map<std::vector<bool>, std::size_t> ids;
  std::vector<std::size_t> out;
  for (const auto& x : g.elems) {
    std::vector<bool> key;
    for (const auto& m : maximal) key.push_back(m.count(x) > 0);
    out.push_back(ids.emplace(key, ids.size()).first->second);
  }
  return out;
}

inline std::size_t count_classes(const std::vector<std::size_t>& keys) {
  return std::set<std::size_t>(keys.begin(), keys.end()).size();
}

// x ~ y iff x and y generate together with the same (r-1)-tuples of elements.
inline std::size_t mr_class_count(const Group& g, std::size_t r) {
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (std::size_t k = 1; k < r; ++k) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (std::size_t z = t.empty() ? 0 : t.back(); z < g.size(); ++z) {
        auto u = t;
        u.push_back(z);
        next.push_back(u);
      }
    tuples = std::move(next);
  }
  std::set<std::vector<bool>> sigs;
  for (std::size_t x = 0; x < g.size(); ++x) {
    std::vector<bool> sig;
    for (const auto& t : tuples) {
      auto ids = t;
      ids.push_back(x);
      sig.push_back(g.generates(ids));
    }
    sigs.insert(sig);
  }
  return sigs.size();
}

// Calls f on every k-subset of {0..n-1}; stops early if f returns true.
inline bool any_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s(k);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == k) return f(s);
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      s[depth] = i;
      if (rec(depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

inline std::size_t d(const Group& g) {
  for (std::size_t k = 0;; ++k)
    if (any_subset(g.size(), k, [&](const auto& s) { return g.generates(s); })) return k;
}

// Largest irredundant generating set among subsets of size <= max_k.
inline std::size_t mu(const Group& g, std::size_t max_k) {
  std::size_t best = 0;
  for (std::size_t k = 1; k <= max_k; ++k)
    if (any_subset(g.size(), k, [&](const auto& s) {
          if (!g.generates(s)) return false;
          for (std::size_t i = 0; i < s.size(); ++i) {
            auto t = s;
            t.erase(t.begin() + static_cast<long>(i));
            if (g.generates(t)) return false;
          }
          return true;
        }))
      best = k;
  return best;
}

// The full generating graph; loops where an element alone generates.
struct Graph {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;  // includes the diagonal (loops)
  std::vector<std::size_t> nonidentity() const {
    std::vector<std::size_t> v(n - 1);
    std::iota(v.begin(), v.end(), 1);
    return v;
  }
};

inline Graph generating_graph(const Group& g) {
  return Graph{g.size(), g.generation_table()};
}

// Fewest sets (chosen from `sets`, indexed by element) whose union is
// `target`, by breadth-first search over the reachable unions. Groups here
// have at most 64 elements, so a union is one word.
inline std::optional<std::size_t> min_union(const std::vector<std::uint64_t>& sets, std::uint64_t target) {
  std::set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> level{0};
  for (std::size_t k = 0; !level.empty(); ++k) {
    for (auto u : level)
      if ((u & target) == target) return k;
    std::vector<std::uint64_t> next;
    for (auto u : level)
      for (auto s : sets)
        if (seen.insert(u | s).second) next.push_back(u | s);
    level = std::move(next);
  }
  return std::nullopt;
}

inline std::uint64_t row_mask(const Graph& gr, std::size_t x, bool complement) {
  std::uint64_t m = 0;
  for (std::size_t y = 0; y < gr.n; ++y)
    if (gr.adj[x][y] != complement) m |= std::uint64_t{1} << y;
  return m;
}

// Largest k such that every k nonidentity elements have a common neighbour;
// nullopt if there is no bound (some element is adjacent to everything).
// A set has no common neighbour iff its non-neighbourhoods cover G.
inline std::optional<std::size_t> spread(const Graph& gr) {
  if (gr.n > 64) throw std::invalid_argument("spread oracle needs at most 64 elements");
  const std::uint64_t all = gr.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << gr.n) - 1;
  std::vector<std::uint64_t> non;
  for (std::size_t x : gr.nonidentity()) non.push_back(row_mask(gr, x, true));
  const auto k = min_union(non, all);
  if (!k) return std::nullopt;
  return *k - 1;
}

// Largest set of distinct elements that pairwise generate.
inline std::size_t clique_number(const Graph& gr) {
  std::size_t best = 0;
  std::vector<std::size_t> cur;
  std::function<void(std::vector<std::size_t>)> rec = [&](std::vector<std::size_t> cand) {
    best = std::max(best, cur.size());
    while (!cand.empty()) {
      if (cur.size() + cand.size() <= best) return;
      const std::size_t v = cand.back();
      cand.pop_back();
      std::vector<std::size_t> next;
      for (auto u : cand)
        if (gr.adj[v][u]) next.push_back(u);
      cur.push_back(v);
      rec(next);
      cur.pop_back();
    }
  };
  std::vector<std::size_t> all(gr.n);
  std::iota(all.begin(), all.end(), 0);
  rec(all);
  return best;
}

// k-colouring as a constraint problem: colour the vertex with the fewest
// remaining colours next, drop that colour from its neighbours' domains, and
// open colours in order so relabelings are not revisited.
inline bool colourable(const Graph& gr, std::size_t k) {
  if (gr.n == 0) return true;
  if (k == 0) return false;
  std::vector<std::vector<bool>> domain(gr.n, std::vector<bool>(k, true));
  std::vector<std::size_t> colour(gr.n, SIZE_MAX);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t done, std::size_t used) {
    if (done == gr.n) return true;
    std::size_t v = SIZE_MAX, best = SIZE_MAX;
    for (std::size_t u = 0; u < gr.n; ++u) {
      if (colour[u] != SIZE_MAX) continue;
      const auto left = static_cast<std::size_t>(std::count(domain[u].begin(), domain[u].end(), true));
      if (left < best) best = left, v = u;
    }
    if (best == 0) return false;
    for (std::size_t c = 0; c < k && c <= used; ++c) {
      if (!domain[v][c]) continue;
      std::vector<std::size_t> pruned;
      bool dead = false;
      for (std::size_t u = 0; u < gr.n; ++u)
        if (u != v && gr.adj[v][u] && colour[u] == SIZE_MAX && domain[u][c]) {
          domain[u][c] = false;
          pruned.push_back(u);
          dead = dead || std::none_of(domain[u].begin(), domain[u].end(), [](bool b) { return b; });
        }
      colour[v] = c;
      if (!dead && rec(done + 1, std::max(used, c + 1))) return true;
      colour[v] = SIZE_MAX;
      for (auto u : pruned) domain[u][c] = true;
    }
    return false;
  };
  return rec(0, 0);
}

inline std::size_t chromatic_number(const Graph& gr) {
  for (std::size_t k = 1;; ++k)
    if (colourable(gr, k)) return k;
}

// Smallest S with every nonidentity element adjacent to some member of S.
inline std::optional<std::size_t> total_domination(const Graph& gr) {
  if (gr.n > 64) throw std::invalid_argument("domination oracle needs at most 64 elements");
  std::uint64_t target = 0;
  for (std::size_t x : gr.nonidentity()) target |= std::uint64_t{1} << x;
  std::vector<std::uint64_t> nbrs;
  for (std::size_t x = 0; x < gr.n; ++x) nbrs.push_back(row_mask(gr, x, false));
  return min_union(nbrs, target);
}

// Equal-neighbourhood classes of the full graph.
inline std::vector<std::vector<std::size_t>> neighbourhood_classes(const Graph& gr) {
  std::map<std::vector<bool>, std::vector<std::size_t>> by;
  for (std::size_t x = 0; x < gr.n; ++x) by[gr.adj[x]].push_back(x);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, v] : by) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

// Automorphisms of a small graph with optional vertex labels, by trying
// every vertex permutation.
inline std::size_t graph_aut_order(const std::vector<std::vector<bool>>& adj, const std::vector<std::size_t>& labels) {
  std::vector<std::size_t> p(adj.size());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < adj.size() && ok; ++u) {
      ok = labels[u] == labels[p[u]];
      for (std::size_t v = 0; v < adj.size() && ok; ++v) ok = adj[u][v] == adj[p[u]][p[v]];
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// |Aut(G)|: count tuples of images of a generating tuple that extend to an
// automorphism, checking the induced map on all of G by words.
inline std::size_t aut_group_order(const Group& g, const std::vector<std::size_t>& gens) {
  std::size_t count = 0;
  std::vector<std::size_t> img(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      std::map<Perm, Perm> phi{{g.elems[0], g.elems[0]}};
      std::vector<Perm> frontier{g.elems[0]};
      bool ok = true;
      while (!frontier.empty() && ok) {
        std::vector<Perm> next;
        for (const auto& x : frontier)
          for (std::size_t j = 0; j < gens.size() && ok; ++j) {
            const Perm y = mul(x, g.elems[gens[j]]);
            const Perm fy = mul(phi[x], g.elems[img[j]]);
            auto it = phi.find(y);
            if (it == phi.end()) {
              phi[y] = fy;
              next.push_back(y);
            } else {
              ok = it->second == fy;
            }
          }
        frontier = std::move(next);
      }
      if (!ok) return;
      std::set<Perm> image;
      for (auto& [x, y] : phi) image.insert(y);
      count += image.size() == g.size();
      return;
    }
    for (std::size_t h = 0; h < g.size(); ++h) {
      img[i] = h;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace oracle

#include "genset/autgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "genset/catalog.hpp"
#include "genset/errors.hpp"

namespace genset {

std::size_t AutResult::orbit_count() const {
  return orbit_of.empty() ? 0 : *std::max_element(orbit_of.begin(), orbit_of.end()) + 1;
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

using Colours = std::vector<std::uint32_t>;

class AutSearch {
 public:
  AutSearch(const WeightedReducedGraph& g, bool weighted, std::size_t budget)
      : g_(g), weighted_(weighted), budget_(budget), n_(g.vertex_count) {}

  AutResult run() {
    AutResult res;
    if (n_ == 0) return res;
    // Initial colouring by (degree, loop, weight).
    std::vector<std::tuple<std::size_t, bool, std::size_t>> keys(n_);
    for (std::size_t v = 0; v < n_; ++v) keys[v] = {g_.degree(v), g_.loops[v], weighted_ ? g_.weights[v] : 0};
    Colours c(n_);
    {
      auto sorted = keys;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t v = 0; v < n_; ++v)
        c[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    }
    refine(c);

    // First path down to a discrete colouring.
    std::vector<Colours> path{c};
    while (true) {
      hist_.push_back(histogram(path.back()));
      const auto t = target_cell(path.back());
      if (!t) break;
      target_.push_back(*t);
      const std::size_t v = first_in_cell(path.back(), *t);
      chosen_.push_back(v);
      Colours next = individualize(path.back(), v);
      refine(next);
      path.push_back(std::move(next));
    }
    leaf_ = leaf_map(path.back());

    UnionFind orbits(n_);
    BigInt order = 1;
    for (std::size_t level = chosen_.size(); level-- > 0;) {
      const std::size_t v = chosen_[level];
      std::vector<std::size_t> failed;
      for (std::size_t w = 0; w < n_; ++w) {
        if (path[level][w] != target_[level] || w == v) continue;
        if (orbits.find(w) == orbits.find(v)) continue;
        if (std::any_of(failed.begin(), failed.end(), [&](std::size_t f) { return orbits.find(f) == orbits.find(w); }))
          continue;
        Colours next = individualize(path[level], w);
        refine(next);
        if (auto perm = descend(next, level + 1)) {
          res.generators.emplace_back(std::move(*perm));
          const auto& p = res.generators.back();
          for (std::size_t x = 0; x < n_; ++x) orbits.unite(x, p(static_cast<Point>(x)));
        } else {
          failed.push_back(w);
        }
      }
      std::size_t orbit = 0;
      for (std::size_t w = 0; w < n_; ++w)
        if (path[level][w] == target_[level] && orbits.find(w) == orbits.find(v)) ++orbit;
      order *= orbit;
    }

    const PermGroup check(n_, res.generators);
    if (check.order() != order)
      throw InternalError("automorphism search: orbit product " + order.str() + " differs from chain order " +
                          check.order().str());
    res.order = order;
    std::vector<std::size_t> root_id(n_, SIZE_MAX);
    std::size_t next_id = 0;
    res.orbit_of.resize(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      const std::size_t r = orbits.find(x);
      if (root_id[r] == SIZE_MAX) root_id[r] = next_id++;
      res.orbit_of[x] = root_id[r];
    }
    return res;
  }

 private:
  // Equitable refinement: split cells by the multiset of neighbour colours.
  void refine(Colours& c) const {
    std::size_t cells = count_cells(c);
    std::vector<std::vector<std::uint32_t>> sig(n_);
    std::vector<std::size_t> idx(n_);
    while (true) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(c[v]);
        g_.adjacency[v].for_each([&](std::size_t u) { s.push_back(c[u]); });
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      std::uint32_t colour = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        if (k > 0 && sig[idx[k - 1]] != sig[idx[k]]) ++colour;
        c[idx[k]] = colour;
      }
      const std::size_t now = colour + 1;
      if (now == cells) return;
      cells = now;
    }
  }

  static std::size_t count_cells(const Colours& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  Colours individualize(const Colours& c, std::size_t v) const {
    Colours out(n_);
    for (std::size_t x = 0; x < n_; ++x) out[x] = c[x] + (c[x] > c[v] || (c[x] == c[v] && x != v) ? 1 : 0);
    return out;
  }

  std::vector<std::size_t> histogram(const Colours& c) const {
    std::vector<std::size_t> h(count_cells(c), 0);
    for (auto x : c) ++h[x];
    return h;
  }

  std::optional<std::uint32_t> target_cell(const Colours& c) const {
    const auto h = histogram(c);
    std::optional<std::uint32_t> best;
    for (std::uint32_t k = 0; k < h.size(); ++k)
      if (h[k] > 1 && (!best || h[k] < h[*best])) best = k;
    return best;
  }

  std::size_t first_in_cell(const Colours& c, std::uint32_t cell) const {
    for (std::size_t x = 0; x < n_; ++x)
      if (c[x] == cell) return x;
    throw InternalError("empty cell");
  }

  std::vector<std::size_t> leaf_map(const Colours& c) const {
    std::vector<std::size_t> m(n_);
    for (std::size_t x = 0; x < n_; ++x) m[c[x]] = x;
    return m;
  }

  std::optional<Permutation> descend(const Colours& c, std::size_t level) {
    if (++nodes_ > budget_) throw BudgetExceeded("automorphism search exceeded " + std::to_string(budget_) + " nodes");
    if (histogram(c) != hist_[level]) return std::nullopt;
    if (level == chosen_.size()) {
      const auto other = leaf_map(c);
      std::vector<Point> images(n_);
      for (std::size_t k = 0; k < n_; ++k) images[leaf_[k]] = static_cast<Point>(other[k]);
      Permutation p(std::move(images));
      if (is_automorphism(p)) return p;
      return std::nullopt;
    }
    for (std::size_t w = 0; w < n_; ++w) {
      if (c[w] != target_[level]) continue;
      Colours next = individualize(c, w);
      refine(next);
      if (auto p = descend(next, level + 1)) return p;
    }
    return std::nullopt;
  }

  bool is_automorphism(const Permutation& p) const {
    for (std::size_t u = 0; u < n_; ++u) {
      const std::size_t pu = p(static_cast<Point>(u));
      if (g_.loops[u] != g_.loops[pu] || g_.degree(u) != g_.degree(pu)) return false;
      if (weighted_ && g_.weights[u] != g_.weights[pu]) return false;
      bool ok = true;
      g_.adjacency[u].for_each([&](std::size_t v) { ok = ok && g_.adjacency[pu].test(p(static_cast<Point>(v))); });
      if (!ok) return false;
    }
    return true;
  }

  const WeightedReducedGraph& g_;
  bool weighted_;
  std::size_t budget_;
  std::size_t n_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> hist_;
  std::vector<std::uint32_t> target_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> leaf_;
};

}  // namespace

AutResult graph_aut(const WeightedReducedGraph& g, bool weighted, std::size_t budget) {
  return AutSearch(g, weighted, budget).run();
}

BigInt weight_factorial_product(const WeightedReducedGraph& g) {
  BigInt out = 1;
  for (std::size_t w : g.weights) out *= factorial(w);
  return out;
}

BigInt aut_gamma_order(const WeightedReducedGraph& g, std::size_t budget) {
  return weight_factorial_product(g) * graph_aut(g, true, budget).order;
}

// ---------------------------------------------------------------------------

namespace {

// Conjugacy class id per element, from orbits under conjugation by the generators.
std::vector<std::size_t> conjugacy_classes(const GroupTable& t, std::vector<std::size_t>& class_size) {
  const std::size_t n = t.size();
  std::vector<std::size_t> cls(n, SIZE_MAX);
  class_size.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != SIZE_MAX) continue;
    const std::size_t id = class_size.size();
    std::vector<std::size_t> stack{x};
    cls[x] = id;
    std::size_t size = 0;
    while (!stack.empty()) {
      const std::size_t y = stack.back();
      stack.pop_back();
      ++size;
      for (ElementId s : t.generators()) {
        const std::size_t z = t.conj(y, s);
        if (cls[z] == SIZE_MAX) {
          cls[z] = id;
          stack.push_back(z);
        }
      }
    }
    class_size.push_back(size);
  }
  return cls;
}

class AutGroupSearch {
 public:
  AutGroupSearch(const GroupTable& t, std::vector<ElementId> gens, const std::vector<std::vector<ElementId>>& cand)
      : t_(t), gens_(std::move(gens)), cand_(cand), images_(gens_.size()), phi_(t.size()), used_(t.size()) {}

  BigInt run() {
    rec(0);
    return count_;
  }

 private:
  void rec(std::size_t i) {
    if (i == gens_.size()) {
      if (extends()) ++count_;
      return;
    }
    for (ElementId h : cand_[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = t_.order(t_.mul(images_[j], h)) == t_.order(t_.mul(gens_[j], gens_[i])) &&
             t_.order(t_.mul(h, images_[j])) == t_.order(t_.mul(gens_[i], gens_[j]));
      if (!ok) continue;
      images_[i] = h;
      rec(i + 1);
    }
  }

  // phi(x * g_i) = phi(x) * h_i along a breadth-first walk; any conflict
  // or collision means the images do not define an automorphism.
  bool extends() {
    std::fill(phi_.begin(), phi_.end(), kUnset);
    std::fill(used_.begin(), used_.end(), 0);
    phi_[0] = 0;
    used_[0] = 1;
    std::deque<std::size_t> queue{0};
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        const std::size_t y = t_.mul(x, gens_[i]);
        const ElementId img = t_.mul(phi_[x], images_[i]);
        if (phi_[y] == kUnset) {
          if (used_[img]) return false;
          phi_[y] = img;
          used_[img] = 1;
          queue.push_back(y);
          ++reached;
        } else if (phi_[y] != img) {
          return false;
        }
      }
    }
    return reached == t_.size();
  }

  static constexpr std::uint32_t kUnset = UINT32_MAX;
  const GroupTable& t_;
  std::vector<ElementId> gens_;
  const std::vector<std::vector<ElementId>>& cand_;
  std::vector<ElementId> images_;
  std::vector<std::uint32_t> phi_;
  std::vector<std::uint8_t> used_;
  BigInt count_ = 0;
};

}  // namespace

BigInt aut_group_order(const GroupTable& t, const MUniversalAction& a, const Partition& m) {
  const std::size_t n = t.size();
  if (n == 1) return 1;
  std::vector<std::size_t> class_size;
  const auto cls = conjugacy_classes(t, class_size);
  // Automorphisms preserve element order and conjugacy class size.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ElementId>> by_type;
  for (std::size_t x = 0; x < n; ++x) by_type[{t.order(x), class_size[cls[x]]}].push_back(static_cast<ElementId>(x));
  auto candidates = [&](std::size_t x) -> const std::vector<ElementId>& {
    return by_type.at({t.order(x), class_size[cls[x]]});
  };

  std::vector<ElementId> gens;
  const GeneratingSet mgs = minimal_generating_set(a, m);
  if (mgs.size == 1) {
    ElementId best = mgs.elements[0];
    for (std::size_t x = 0; x < n; ++x)
      if (t.order(x) == n && candidates(x).size() < candidates(best).size()) best = static_cast<ElementId>(x);
    gens = {best};
  } else if (mgs.size == 2) {
    // Pick the generating pair with the fewest candidate images.
    std::vector<std::size_t> seen_class(class_size.size(), 0);
    std::size_t best_cost = SIZE_MAX;
    for (std::size_t x = 0; x < n; ++x) {
      if (seen_class[cls[x]]++) continue;
      const std::size_t cx = candidates(x).size();
      if (cx >= best_cost) continue;
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t cost = cx * candidates(y).size();
        if (cost < best_cost && a.generates_pair(x, y)) {
          best_cost = cost;
          gens = {static_cast<ElementId>(x), static_cast<ElementId>(y)};
        }
      }
    }
  } else {
    gens = mgs.elements;
  }
  std::vector<std::vector<ElementId>> cand;
  for (ElementId g : gens) cand.push_back(candidates(g));
  return AutGroupSearch(t, gens, cand).run();
}

// ---------------------------------------------------------------------------

bool ClosedFormReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

template <class T>
std::string str(const T& v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return v.str();
  } else if constexpr (std::is_arithmetic_v<T>) {
    return std::to_string(v);
  } else {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  }
}

template <class T>
void add_check(ClosedFormReport& r, std::string name, const T& predicted, const T& computed) {
  r.checks.push_back({std::move(name), str(predicted), str(computed), predicted == computed});
}

void require(const ClosedFormReport& r) {
  for (const auto& c : r.checks)
    if (!c.ok)
      throw Mismatch(r.group + ": " + c.name + " predicted " + c.predicted + " but computed " + c.computed);
}

std::vector<std::size_t> sorted_desc(std::vector<std::size_t> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

// Weight of the class of elements of C_n lying in M_p exactly for p in J
// (J given as a bitmask over `primes`).
std::size_t cyclic_weight(unsigned n, const std::vector<unsigned>& primes, unsigned mask) {
  std::size_t w = n;
  for (unsigned p : primes) w /= p;
  for (std::size_t j = 0; j < primes.size(); ++j)
    if (!(mask >> j & 1U)) w *= primes[j] - 1;
  return w;
}

}  // namespace

ClosedFormReport closed_form_cyclic(unsigned n, const AnalysisOptions& options) {
  if (n < 2) throw InvalidSpec("closed_form_cyclic: n must be at least 2");
  const auto primes = prime_divisors(n);
  const std::size_t r = primes.size();
  ClosedFormReport rep;
  rep.group = "C" + std::to_string(n);

  const GroupData gd = analyze(build(GroupSpec::cyclic(n)), options);
  const Partition m = m_classes(gd.action);
  const WeightedReducedGraph g = reduced_graph(gd.action, m);

  std::vector<std::size_t> predicted_w;
  BigInt predicted_gamma = 1;
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    predicted_w.push_back(cyclic_weight(n, primes, mask));
    predicted_gamma *= factorial(predicted_w.back());
  }
  add_check(rep, "vertex count", std::size_t{1} << r, g.vertex_count);
  add_check(rep, "weight multiset", sorted_desc(predicted_w), sorted_desc(g.weights));

  // The element c^e lies in M_p iff p divides e; e is the image of point 0.
  std::vector<unsigned> mask_of(g.vertex_count, 0);
  bool weights_by_mask = true;
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    const unsigned e = gd.table.element(g.members[v].front())(0);
    for (std::size_t j = 0; j < r; ++j)
      if (e % primes[j] == 0) mask_of[v] |= 1U << j;
    weights_by_mask = weights_by_mask && g.weights[v] == cyclic_weight(n, primes, mask_of[v]);
  }
  add_check(rep, "weight of each prime-set vertex", true, weights_by_mask);
  bool disjoint_rule = true;
  for (std::size_t u = 0; u < g.vertex_count; ++u)
    for (std::size_t v = 0; v < g.vertex_count; ++v)
      disjoint_rule = disjoint_rule && g.adjacent(u, v) == ((mask_of[u] & mask_of[v]) == 0);
  add_check(rep, "adjacency iff disjoint prime sets", true, disjoint_rule);
  add_check(rep, "unweighted automorphism order", factorial(r), graph_aut(g, false).order);
  add_check(rep, "weighted automorphism order", BigInt(1), graph_aut(g, true).order);
  add_check(rep, "Aut(Gamma) order", predicted_gamma, aut_gamma_order(g));
  require(rep);
  return rep;
}

ClosedFormReport closed_form_affine(unsigned p, unsigned k, unsigned n, const AnalysisOptions& options) {
  const auto primes = prime_divisors(n);
  const std::size_t r = primes.size();
  std::size_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  unsigned radical = 1;
  for (unsigned q : primes) radical *= q;
  const bool squarefree = radical == n;
  ClosedFormReport rep;
  rep.group = "C" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "") + ":C" + std::to_string(n);

  const GroupData gd = analyze(build(GroupSpec::affine(p, k, n)), options);
  const Partition m = m_classes(gd.action);
  const WeightedReducedGraph g = reduced_graph(gd.action, m);

  const std::size_t vertices = squarefree ? ((std::size_t{1} << r) - 1) * pk + 2 : (std::size_t{1} << r) * pk + 2;
  add_check(rep, "vertex count", vertices, g.vertex_count);
  // Kernel of Aut(Gamma) -> Aut(weighted reduced graph): S_{p^k - 1} for the
  // normal subgroup, and each nonidentity class of C_n (plus the
  // nonidentity Frattini elements) once per complement.
  BigInt kernel = factorial(pk - 1);
  for (unsigned mask = 0; mask + 1 < (1U << r); ++mask)
    for (std::size_t c = 0; c < pk; ++c) kernel *= factorial(cyclic_weight(n, primes, mask));
  for (std::size_t c = 0; c < pk; ++c) kernel *= factorial(n / radical - 1);
  add_check(rep, "weight factorial product", kernel, weight_factorial_product(g));
  add_check(rep, "unweighted automorphism order", factorial(pk) * factorial(r), graph_aut(g, false).order);
  add_check(rep, "weighted automorphism order", factorial(pk), graph_aut(g, true).order);
  require(rep);
  return rep;
}

}  // namespace genset

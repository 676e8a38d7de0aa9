#include "genset/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "genset/errors.hpp"

namespace genset {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw InvalidSpec("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (Point x : c) {
      if (x >= degree) throw PointOutOfRange(x + 1, degree);
      if (used[x]) throw InvalidSpec("point " + std::to_string(x + 1) + " repeated in cycles");
      used[x] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  for (std::size_t len : cycle_type()) ord = std::lcm(ord, len);
  return ord;
}

std::optional<Point> Permutation::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = q(p(static_cast<Point>(i)));
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& p, const Permutation& t) {
  if (p.degree() != t.degree()) throw DegreeMismatch(p.degree(), t.degree());
  // t^-1 p t maps t(x) to t(p(x)).
  std::vector<Point> img(p.degree());
  for (std::size_t x = 0; x < img.size(); ++x) img[t(static_cast<Point>(x))] = t(p(static_cast<Point>(x)));
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation power(const Permutation& p, long long e) {
  Permutation base = e < 0 ? p.inverse() : p;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result(p.degree());
  while (n) {
    if (n & 1U) result = result * base;
    base = base * base;
    n >>= 1U;
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw DegreeMismatch(g.degree(), degree_);
  schreier_sims();
  order_ = 1;
  for (const auto& level : chain_) order_ *= level.orbit.size();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : chain_) b.push_back(l.base);
  return b;
}

void PermGroup::rebuild_orbit(ChainLevel& level) const {
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.transversal[level.base] = Permutation(degree_);
  level.orbit.push_back(level.base);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const Point b = level.orbit[k];
    for (const auto& s : level.generators) {
      const Point c = s(b);
      if (!level.transversal[c]) {
        level.transversal[c] = *level.transversal[b] * s;
        level.orbit.push_back(c);
      }
    }
  }
}

PermGroup::SiftResult PermGroup::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t i = from_level; i < chain_.size(); ++i) {
    const Point b = g(chain_[i].base);
    const auto& u = chain_[i].transversal[b];
    if (!u) return {std::move(g), i};
    g = g * u->inverse();
  }
  return {std::move(g), chain_.size()};
}

void PermGroup::schreier_sims() {
  chain_.clear();
  auto add_level = [&](Point base) {
    ChainLevel l;
    l.base = base;
    chain_.push_back(std::move(l));
  };
  // Initial base: every nontrivial generator must move some base point.
  std::vector<Permutation> strong;
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    strong.push_back(g);
    bool moves = false;
    for (const auto& l : chain_)
      if (g(l.base) != l.base) moves = true;
    if (!moves) add_level(*g.smallest_moved_point());
  }
  if (chain_.empty()) return;
  auto fixes_prefix = [&](const Permutation& s, std::size_t i) {
    for (std::size_t j = 0; j < i; ++j)
      if (s(chain_[j].base) != chain_[j].base) return false;
    return true;
  };
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    for (const auto& s : strong)
      if (fixes_prefix(s, i)) chain_[i].generators.push_back(s);
    rebuild_orbit(chain_[i]);
  }

  std::size_t i = chain_.size();
  while (i > 0) {
    const std::size_t lvl = i - 1;
    bool restarted = false;
    for (std::size_t k = 0; k < chain_[lvl].orbit.size() && !restarted; ++k) {
      const Point beta = chain_[lvl].orbit[k];
      for (std::size_t si = 0; si < chain_[lvl].generators.size(); ++si) {
        const Permutation s = chain_[lvl].generators[si];
        const Permutation ub_s = *chain_[lvl].transversal[beta] * s;
        const Permutation& u_img = *chain_[lvl].transversal[s(beta)];
        if (ub_s == u_img) continue;
        auto [residue, j] = sift(ub_s * u_img.inverse(), lvl + 1);
        if (residue.is_identity()) continue;
        if (j == chain_.size()) add_level(*residue.smallest_moved_point());
        for (std::size_t l = lvl + 1; l <= j; ++l) {
          chain_[l].generators.push_back(residue);
          rebuild_orbit(chain_[l]);
        }
        i = j + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw DegreeMismatch(p.degree(), degree_);
  return sift(p, 0).residue.is_identity();
}

bool is_member(const PermGroup& g, const Permutation& p) { return g.contains(p); }

// ---------------------------------------------------------------------------

ElementIndex::ElementIndex(std::vector<Permutation> sorted_elements) : elements_(std::move(sorted_elements)) {
  lookup_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) lookup_.emplace(elements_[i], static_cast<ElementId>(i));
}

std::optional<ElementId> ElementIndex::lookup(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

ElementId ElementIndex::at(const Permutation& p) const {
  auto id = lookup(p);
  if (!id) throw InternalError("permutation " + p.to_cycle_string() + " not in element index");
  return *id;
}

ElementIndex enumerate_elements(const PermGroup& g, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxElementCap);
  if (g.order() > limit) throw OrderExceedsCap(g.order().str(), limit);
  const auto n = g.order().convert_to<std::size_t>();
  // Products of transversal elements along the chain give each element once.
  std::vector<Permutation> elems{Permutation(g.degree())};
  elems.reserve(n);
  for (auto it = g.chain().rbegin(); it != g.chain().rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(elems.size() * it->orbit.size());
    for (Point b : it->orbit)
      for (const auto& e : elems) next.push_back(e * *it->transversal[b]);
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  if (elems.size() != n) throw InternalError("element enumeration size disagrees with chain order");
  return ElementIndex(std::move(elems));
}

}  // namespace genset

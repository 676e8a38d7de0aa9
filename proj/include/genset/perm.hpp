#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace genset {

using BigInt = boost::multiprecision::cpp_int;
using Point = std::uint32_t;

// A permutation of {0..degree-1} stored by images. Products act on the
// right: (p * q)(x) = q(p(x)), i.e. apply p first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<Point> images);  // throws InvalidSpec unless a bijection

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  // Builds from 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;  // fits in size_t for every degree used here
  std::optional<Point> smallest_moved_point() const;
  // Cycle lengths sorted descending, fixed points included as 1s.
  std::vector<std::size_t> cycle_type() const;
  // 1-based cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation conjugate(const Permutation& p, const Permutation& t);

  std::vector<Point> images_;
};

// x -> q(p(x)); throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }
// t^-1 p t; throws DegreeMismatch.
Permutation conjugate(const Permutation& p, const Permutation& t);
Permutation power(const Permutation& p, long long e);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// One level of a stabilizer chain: base point, strong generators fixing the
// earlier base points, and the orbit of the base point with coset
// representatives u[b] sending the base point to b.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::optional<Permutation>> transversal;  // indexed by point
};

// Permutation group given by generators, with a deterministic Schreier-Sims
// stabilizer chain built at construction. Immutable afterwards.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ChainLevel>& chain() const { return chain_; }
  std::vector<Point> base() const;

  const BigInt& order() const { return order_; }
  // Sifts p through the chain. Throws DegreeMismatch.
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return chain_.empty(); }

 private:
  struct SiftResult {
    Permutation residue;
    std::size_t level;
  };
  SiftResult sift(Permutation g, std::size_t from_level) const;
  void schreier_sims();
  void rebuild_orbit(ChainLevel& level) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> chain_;
  BigInt order_ = 1;
};

inline const BigInt& group_order(const PermGroup& g) { return g.order(); }
bool is_member(const PermGroup& g, const Permutation& p);

inline constexpr std::size_t kDefaultElementCap = 5040;
// Hard ceiling from 16-bit element indices.
inline constexpr std::size_t kMaxElementCap = 65535;

using ElementId = std::uint16_t;

// Indexed list of all elements of a group: identity at index 0, the rest in
// lexicographic order of image arrays.
class ElementIndex {
 public:
  ElementIndex() = default;
  explicit ElementIndex(std::vector<Permutation> sorted_elements);

  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return elements_.empty() ? 0 : elements_.front().degree(); }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::optional<ElementId> lookup(const Permutation& p) const;
  ElementId at(const Permutation& p) const;  // throws InternalError if absent

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> lookup_;
};

// Throws OrderExceedsCap when |G| > cap (or cap exceeds kMaxElementCap).
ElementIndex enumerate_elements(const PermGroup& g, std::size_t cap = kDefaultElementCap);

}  // namespace genset

#pragma once

// Property checks shared by the unit tests and the acceptance binary. Each
// returns human-readable failures; empty means everything held.

#include <sstream>
#include <string>
#include <vector>

#include "genset/catalog.hpp"
#include "genset/equiv.hpp"
#include "genset/errors.hpp"
#include "genset/gengraph.hpp"
#include "genset/muniversal.hpp"
#include "oracles.hpp"

namespace checks {

using namespace genset;

struct Named {
  std::string name;
  PermGroup group;
};

inline PermGroup custom(std::size_t degree, const std::string& gens) {
  return PermGroup(degree, parse_generators(gens, degree));
}
inline PermGroup dihedral8() { return custom(4, "(1,2,3,4), (1,3)"); }
inline PermGroup dihedral10() { return custom(5, "(1,2,3,4,5), (2,5)(3,4)"); }
inline PermGroup quaternion8() { return custom(8, "(1,2,3,4)(5,6,7,8), (1,5,3,7)(2,8,4,6)"); }

inline std::vector<Named> named(std::initializer_list<const char*> specs) {
  std::vector<Named> out;
  for (const char* s : specs) out.push_back({s, build(parse_group_spec(s))});
  return out;
}

inline std::vector<Named> groups_up_to_360() {
  auto out = named({"Sn:1", "Sn:2", "Sn:3", "Sn:4", "Sn:5", "An:4", "An:5", "An:6", "Cn:1", "Cn:2", "Cn:6", "Cn:8",
                    "Cn:12", "Cn:30", "Cn:60", "Cn:210", "ElemAb:2,2", "ElemAb:2,3", "ElemAb:3,2", "ElemAb:5,2",
                    "ElemAb:7,2", "ElemAb:2,4", "Affine:5,1,4", "Affine:7,1,3", "Affine:2,2,3", "Affine:3,2,8",
                    "Affine:11,1,5", "Affine:13,1,12", "Sharply2t:17", "PSL2:7", "PGL2:5", "PGL2:7"});
  out.push_back({"D8", dihedral8()});
  out.push_back({"Q8", quaternion8()});
  out.push_back({"D10", dihedral10()});
  return out;
}

inline std::vector<Named> groups_up_to_60() {
  auto out = named({"Sn:3", "Sn:4", "An:4", "An:5", "Cn:2", "Cn:6", "Cn:12", "Cn:30", "ElemAb:2,2", "ElemAb:3,2",
                    "ElemAb:2,3", "Affine:5,1,4", "Affine:7,1,3", "Affine:11,1,5"});
  out.push_back({"D8", dihedral8()});
  out.push_back({"Q8", quaternion8()});
  out.push_back({"D10", dihedral10()});
  return out;
}

inline oracle::Perm images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

// Brute-force copy of a library group; throws if the numbering differs.
inline oracle::Group brute(const GroupTable& t) {
  std::vector<oracle::Perm> gens;
  for (const auto& g : t.group().generators()) gens.push_back(images(g));
  oracle::Group g(t.group().degree(), gens);
  if (g.size() != t.size()) throw std::runtime_error("brute-force order differs");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (g.elems[i] != images(t.element(i))) throw std::runtime_error("element numbering differs");
  return g;
}

// Derived series down to the perfect core; soluble iff it ends trivial.
inline bool soluble(const GroupTable& t) {
  std::vector<ElementId> h(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) h[i] = static_cast<ElementId>(i);
  while (h.size() > 1) {
    std::vector<ElementId> comms;
    for (auto a : h)
      for (auto b : h) comms.push_back(t.mul(t.mul(t.inv(a), t.inv(b)), t.mul(a, b)));
    auto next = closure(t, comms).elements();
    if (next.size() == h.size()) return false;
    h = std::move(next);
  }
  return true;
}

class Failures {
 public:
  explicit Failures(std::string group) : group_(std::move(group)) {}
  void expect(bool ok, const std::string& what) {
    if (!ok) out_.push_back(group_ + ": " + what);
  }
  std::vector<std::string> take() { return std::move(out_); }

 private:
  std::string group_;
  std::vector<std::string> out_;
};

// Audit, refinement chain, Frattini class, psi bounds, spread criterion.
// `notes` collects properties that could not be checked (mu over budget).
inline std::vector<std::string> property_failures(const Named& n, std::vector<std::string>* notes = nullptr) {
  Failures f(n.name);
  const auto gd = analyze(n.group);
  const auto& a = gd.action;

  const auto audit = property_g_audit(gd.table, a, 500);
  f.expect(audit.agreements == 500, "fixed-point oracle disagrees with closure");

  const auto c = c_classes(gd.table);
  const auto m = m_classes(a);
  f.expect(c.refines(m), "c-classes do not refine m-classes");
  f.expect(m.blocks[m.block_of[0]] == gd.frattini.elements(), "identity m-class is not the Frattini subgroup");

  const auto rep = psi(a, m);
  Partition prev = mr_classes(a, m, 1);
  for (std::size_t r = 2; r <= rep.psi; ++r) {
    const auto cur = mr_classes(a, m, r);
    f.expect(cur.refines(prev), "r-classes not monotone at r = " + std::to_string(r));
    f.expect(m.refines(cur), "m-classes do not refine r = " + std::to_string(r));
    prev = cur;
  }
  f.expect(prev == m, "partition at psi is not the m-partition");
  f.expect(rep.d <= rep.psi && rep.psi <= rep.d + 5, "psi outside [d, d+5]");
  // psi counts from r = 1, so the bound by mu needs a nontrivial group.
  if (gd.order() > 1) try {
    f.expect(rep.psi <= genset::mu(gd.table, a, m), "psi exceeds mu");
  } catch (const BudgetExceeded&) {
    if (notes) notes->push_back(n.name + ": mu over budget, psi <= d+5 only");
  }
  const bool sol = soluble(gd.table);
  if (sol) f.expect(rep.psi <= rep.d + 1, "soluble but psi > d+1");

  const auto graph = reduced_graph(a, m);
  if (sol && gd.order() > 1 && !graph.has_loops() && has_nonzero_spread(graph))
    f.expect(rep.psi == 2, "soluble of nonzero spread but psi != 2");
  if (rep.d == 2)
    f.expect(has_nonzero_spread(graph) == (efficiently_generated(a, m, gd.frattini) && gd.frattini.order == 1),
             "spread > 0 differs from efficient generation with trivial Frattini");
  return f.take();
}

// Reduced-graph vertices and parameters against the full generating graph.
inline std::vector<std::string> graph_failures(const Named& n) {
  Failures f(n.name);
  const auto gd = analyze(n.group);
  const auto graph = reduced_graph(gd.action, m_classes(gd.action));
  const auto full = oracle::generating_graph(brute(gd.table));

  std::vector<std::vector<std::size_t>> verts;
  for (const auto& mem : graph.members) verts.emplace_back(mem.begin(), mem.end());
  std::sort(verts.begin(), verts.end());
  f.expect(verts == oracle::neighbourhood_classes(full), "vertices differ from equal-neighbourhood classes");

  f.expect(spread(graph) == oracle::spread(full), "spread");
  f.expect(clique_number(graph) == oracle::clique_number(full), "clique number");
  if (!graph.has_loops()) f.expect(chromatic_number(graph) == oracle::chromatic_number(full), "chromatic number");
  const auto td = oracle::total_domination(full);
  if (td) {
    f.expect(total_domination_number(graph) == *td, "total domination number");
  } else {
    bool threw = false;
    try {
      total_domination_number(graph);
    } catch (const Undefined&) {
      threw = true;
    }
    f.expect(threw, "total domination should be undefined");
  }
  return f.take();
}

}  // namespace checks

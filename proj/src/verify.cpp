#include "genset/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "genset/autgraph.hpp"
#include "genset/catalog.hpp"
#include "genset/errors.hpp"

namespace genset {

bool SuiteResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

namespace {

using Suite = std::function<void(SuiteResult&, const AnalysisOptions&)>;

template <class T>
void expect(SuiteResult& r, std::string name, const T& want, const T& got) {
  std::string detail;
  if constexpr (std::is_same_v<T, bool>)
    detail = got ? "true" : "false";
  else
    detail = "expected " + std::to_string(want) + ", got " + std::to_string(got);
  r.checks.push_back({std::move(name), want == got, std::move(detail)});
}

void closed_form(SuiteResult& r, const std::string& group, const std::function<ClosedFormReport()>& f) {
  try {
    const auto rep = f();
    r.checks.push_back({group, true, std::to_string(rep.checks.size()) + " predictions confirmed"});
  } catch (const Mismatch& e) {
    r.checks.push_back({group, false, e.what()});
  }
}

void suite_cyclic(SuiteResult& r, const AnalysisOptions& o) {
  for (unsigned n : {30u, 210u, 546u}) closed_form(r, "C" + std::to_string(n), [&] { return closed_form_cyclic(n, o); });
}

void suite_affine(SuiteResult& r, const AnalysisOptions& o) {
  closed_form(r, "C5:C4", [&] { return closed_form_affine(5, 1, 4, o); });
  closed_form(r, "C7:C3", [&] { return closed_form_affine(7, 1, 3, o); });
}

void suite_s4(SuiteResult& r, const AnalysisOptions& o) {
  const GroupData gd = analyze(build(GroupSpec::symmetric(4)), o);
  const Partition m = m_classes(gd.action);
  const PsiReport p = psi(gd.action, m);
  expect(r, "d(S4)", std::size_t{2}, p.d);
  expect(r, "psi(S4)", std::size_t{3}, p.psi);
  expect(r, "m-classes", std::size_t{15}, m.size());
  expect(r, "m2-classes", std::size_t{14}, mr_classes(gd.action, m, 2).size());
  const WeightedReducedGraph g = reduced_graph(gd.action, m);
  expect(r, "spread", std::size_t{0}, spread(g).value_or(SIZE_MAX));
  bool double_transpositions_isolated = true;
  for (std::size_t v : g.isolated())
    for (ElementId e : g.members[v]) {
      if (e == 0) continue;  // the identity shares the empty neighbourhood
      const auto ct = gd.table.element(e).cycle_type();
      double_transpositions_isolated = double_transpositions_isolated && ct[0] == 2 && ct[1] == 2;
    }
  expect(r, "isolated vertices are double transpositions", true, double_transpositions_isolated && !g.isolated().empty());
  expect(r, "efficiently generated", false, efficiently_generated(gd.action, m, gd.frattini));
}

void suite_smallsimple(SuiteResult& r, const AnalysisOptions& o) {
  const std::vector<GroupSpec> groups = {GroupSpec::alternating(5), GroupSpec::alternating(6), GroupSpec::psl2(7),
                                         GroupSpec::psl2(8),        GroupSpec::psl2(11),       GroupSpec::psl2(13),
                                         GroupSpec::psl2(16),       GroupSpec::m11()};
  for (const auto& spec : groups) {
    const PermGroup g = build(spec);
    if (g.order() > o.cap) {
      r.checks.push_back({"psi(" + spec.label() + ")", true, "skipped: order " + g.order().str() + " above cap"});
      continue;
    }
    const GroupData gd = analyze(g, o);
    expect(r, "psi(" + spec.label() + ")", std::size_t{2}, psi(gd.action, m_classes(gd.action)).psi);
  }
}

void suite_sn(SuiteResult& r, const AnalysisOptions& o) {
  const std::size_t want[] = {1, 2, 5, 15, 67, 362, 1479};
  for (unsigned n = 1; n <= 7; ++n) {
    const PermGroup g = build(GroupSpec::symmetric(n));
    if (g.order() > o.cap) continue;
    expect(r, "m-classes(S" + std::to_string(n) + ")", want[n - 1], m_classes(analyze(g, o).action).size());
  }
}

void suite_coincidence(SuiteResult& r, const AnalysisOptions& o) {
  const std::vector<std::pair<GroupSpec, bool>> groups = {
      {GroupSpec::symmetric(5), true}, {GroupSpec::symmetric(6), true},  {GroupSpec::alternating(5), true},
      {GroupSpec::alternating(6), true}, {GroupSpec::psl2(7), true},     {GroupSpec::psl2(11), true},
      {GroupSpec::psl2(13), true},     {GroupSpec::sharply2t(17), false}, {GroupSpec::paper_ex2(), false}};
  for (const auto& [spec, same] : groups) {
    const GroupData gd = analyze(build(spec), o);
    const Partition c = c_classes(gd.table);
    const Partition m = m_classes(gd.action);
    expect(r, "c-classes refine m-classes in " + spec.label(), true, c.refines(m));
    expect(r, std::string(same ? "c = m in " : "c != m in ") + spec.label(), same, c == m);
  }
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> s = {
      {"affine", suite_affine}, {"coincidence", suite_coincidence}, {"cyclic", suite_cyclic},
      {"s4", suite_s4},         {"smallsimple", suite_smallsimple}, {"sn", suite_sn},
  };
  return s;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : suites()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const AnalysisOptions& options) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw UnknownSuite(name);
  SuiteResult r;
  r.suite = name;
  it->second(r, options);
  return r;
}

}  // namespace genset

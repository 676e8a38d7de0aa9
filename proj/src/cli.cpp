#include "genset/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef GENSET_HAVE_OPENMP
#include <omp.h>
#endif

#include "genset/autgraph.hpp"
#include "genset/cache.hpp"
#include "genset/catalog.hpp"
#include "genset/errors.hpp"
#include "genset/verify.hpp"

namespace genset::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string group;
  std::size_t cap = kDefaultElementCap;
  std::optional<std::size_t> budget;
  std::string cache_dir;
  int threads = 0;
  std::string relation = "m";
  std::string emit = "json";
  std::string suite;
};

class Context {
 public:
  Context(const Settings& s, std::ostream& err) : s_(s), err_(err) {
    spec_ = parse_group_spec(s.group);
    group_ = build(spec_);
  }

  const PermGroup& group() const { return group_; }
  std::string label() const { return spec_.label(); }

  const GroupData& data() {
    if (!data_) {
      AnalysisOptions opts;
      opts.cap = s_.cap;
      std::optional<std::filesystem::path> dir;
      if (!s_.cache_dir.empty()) dir = s_.cache_dir;
      CacheOutcome outcome;
      data_.emplace(analyze_cached(group_, opts, dir, &outcome));
      if (outcome.used) err_ << "cache " << (outcome.hit ? "hit" : "miss") << ": " << cache_file(*dir, group_).string() << "\n";
    }
    return *data_;
  }
  const Partition& m() {
    if (!m_) m_ = m_classes(data().action);
    return *m_;
  }
  const WeightedReducedGraph& graph() {
    if (!graph_) graph_ = reduced_graph(data().action, m());
    return *graph_;
  }
  std::size_t search_budget(std::size_t fallback) const { return s_.budget.value_or(fallback); }

 private:
  const Settings& s_;
  std::ostream& err_;
  GroupSpec spec_;
  PermGroup group_;
  std::optional<GroupData> data_;
  std::optional<Partition> m_;
  std::optional<WeightedReducedGraph> graph_;
};

Json header(const std::string& command, const Context& ctx) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["group"] = ctx.label();
  return j;
}

std::string cycles(const GroupTable& t, std::size_t e) { return t.element(e).to_cycle_string(); }

Json perm_json(const Permutation& p) {
  Json a = Json::array();
  for (Point x : p.images()) a.push_back(x);
  return a;
}

Json partition_json(const GroupTable& t, const Partition& p) {
  Json blocks = Json::array();
  for (std::size_t b = 0; b < p.size(); ++b) {
    const ElementId rep = p.reps[b];
    blocks.push_back({{"id", b}, {"size", p.blocks[b].size()}, {"representative", cycles(t, rep)},
                      {"order", t.order(rep)}});
  }
  return blocks;
}

Partition relation_partition(Context& ctx, const std::string& rel) {
  const auto& d = ctx.data();
  if (rel == "c") return c_classes(d.table);
  if (rel == "m") return ctx.m();
  if (rel == "m2") return mr_classes(d.action, ctx.m(), 2);
  if (rel.rfind("mr:", 0) == 0) {
    const std::string num = rel.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 3)
      throw InvalidSpec("relation: mr:<r> needs a positive integer");
    const std::size_t r = std::stoul(num);
    if (r == 0) throw InvalidSpec("relation: r must be at least 1");
    return mr_classes(d.action, ctx.m(), r);
  }
  throw InvalidSpec("relation must be one of c, m, m2, mr:<r>");
}

Json cmd_info(Context& ctx, std::ostream& err) {
  Json j = header("info", ctx);
  const auto& g = ctx.group();
  j["degree"] = g.degree();
  j["order"] = g.order().str();
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycle_string());
  j["generators"] = gens;
  const auto& d = ctx.data();
  j["subgroups"] = d.lattice.subgroups.size();
  j["subgroup_classes"] = d.lattice.classes.size();
  Json mc = Json::array();
  for (std::size_t c = 0; c < d.maximal.classes.size(); ++c)
    mc.push_back({{"order", d.maximal.representatives[c].order},
                  {"index", d.maximal.indices[c]},
                  {"conjugates", d.maximal.classes[c].size()}});
  j["maximal_classes"] = mc;
  j["frattini_order"] = d.frattini.order;
  j["m_universal_degree"] = d.action.total_degree;
  err << ctx.label() << ": order " << g.order() << ", " << d.lattice.subgroups.size() << " subgroups, "
      << d.maximal.classes.size() << " maximal classes\n";
  return j;
}

Json cmd_lattice(Context& ctx, std::ostream& err) {
  Json j = header("lattice", ctx);
  const auto& d = ctx.data();
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_order;  // order -> (subgroups, classes)
  for (const auto& cls : d.lattice.classes) {
    auto& e = by_order[d.lattice.subgroups[cls.front()].order];
    e.first += cls.size();
    e.second += 1;
  }
  Json orders = Json::array();
  for (const auto& [order, counts] : by_order)
    orders.push_back({{"order", order}, {"subgroups", counts.first}, {"classes", counts.second}});
  j["subgroups"] = d.lattice.subgroups.size();
  j["classes"] = d.lattice.classes.size();
  j["by_order"] = orders;
  Json maximal = Json::array();
  for (std::size_t c = 0; c < d.maximal.classes.size(); ++c) {
    maximal.push_back({{"order", d.maximal.representatives[c].order},
                       {"index", d.maximal.indices[c]},
                       {"conjugates", d.maximal.classes[c].size()}});
  }
  j["maximal_classes"] = maximal;
  j["frattini_order"] = d.frattini.order;
  err << ctx.label() << ": " << d.lattice.subgroups.size() << " subgroups in " << d.lattice.classes.size()
      << " classes\n";
  return j;
}

Json cmd_classes(Context& ctx, const Settings& s, std::ostream& err) {
  Json j = header("classes", ctx);
  const Partition p = relation_partition(ctx, s.relation);
  j["relation"] = s.relation;
  j["count"] = p.size();
  j["block_sizes"] = p.block_sizes();
  j["classes"] = partition_json(ctx.data().table, p);
  err << ctx.label() << ": " << p.size() << " classes of " << s.relation << "\n";
  return j;
}

Json cmd_psi(Context& ctx, std::ostream& err) {
  Json j = header("psi", ctx);
  const PsiReport rep = psi(ctx.data().action, ctx.m());
  j["d"] = rep.d;
  j["psi"] = rep.psi;
  j["cap"] = rep.cap_used;
  j["m_classes"] = rep.m_class_count;
  Json parts = Json::array();
  for (const auto& [r, p] : rep.partitions_by_r) parts.push_back({{"r", r}, {"classes", p.size()}});
  j["partitions"] = parts;
  err << ctx.label() << ": d = " << rep.d << ", psi = " << rep.psi << "\n";
  return j;
}

Json cmd_invariants(Context& ctx, std::ostream& err) {
  Json j = header("invariants", ctx);
  const auto& d = ctx.data();
  const auto& m = ctx.m();
  const PsiReport rep = psi(d.action, m);
  j["order"] = d.order();
  j["d"] = rep.d;
  j["psi"] = rep.psi;
  try {
    j["mu"] = mu(d.table, d.action, m, ctx.search_budget(kDefaultMuBudget));
  } catch (const BudgetExceeded&) {
    j["mu"] = nullptr;
  }
  j["c_classes"] = c_classes(d.table).size();
  j["m_classes"] = m.size();
  j["m2_classes"] = mr_classes(d.action, m, 2).size();
  j["frattini_order"] = d.frattini.order;
  j["efficiently_generated"] = efficiently_generated(d.action, m, d.frattini);
  j["nonzero_spread"] = has_nonzero_spread(ctx.graph());
  err << ctx.label() << ": d = " << rep.d << ", psi = " << rep.psi << ", |Frat| = " << d.frattini.order << "\n";
  return j;
}

void emit_dot(const WeightedReducedGraph& g, const std::string& name, std::ostream& out) {
  out << "graph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    out << "  v" << v << " [label=\"" << v << "/" << g.weights[v] << "\"";
    if (g.loops[v]) out << ", peripheries=2";
    if (v == g.identity_vertex) out << ", shape=box";
    out << "];\n";
  }
  for (std::size_t u = 0; u < g.vertex_count; ++u) {
    if (g.loops[u]) out << "  v" << u << " -- v" << u << " [style=dashed];\n";
    g.adjacency[u].for_each([&](std::size_t v) {
      if (u < v) out << "  v" << u << " -- v" << v << ";\n";
    });
  }
  out << "}\n";
}

Json graph_json(Context& ctx) {
  const auto& g = ctx.graph();
  const auto& t = ctx.data().table;
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    Json nbrs = Json::array();
    g.adjacency[v].for_each([&](std::size_t u) { nbrs.push_back(u); });
    vertices.push_back({{"id", v},
                        {"weight", g.weights[v]},
                        {"loop", bool(g.loops[v])},
                        {"representative", cycles(t, g.members[v].front())},
                        {"neighbours", nbrs}});
  }
  return vertices;
}

Json cmd_graph(Context& ctx, const Settings& s, std::ostream& out, std::ostream& err, bool& emitted) {
  const auto& g = ctx.graph();
  err << ctx.label() << ": reduced graph with " << g.vertex_count << " vertices\n";
  if (s.emit == "dot") {
    emit_dot(g, ctx.label(), out);
    emitted = true;
    return {};
  }
  Json j = header("graph", ctx);
  j["vertex_count"] = g.vertex_count;
  j["identity_vertex"] = g.identity_vertex;
  j["vertices"] = graph_json(ctx);
  return j;
}

template <class F>
Json guarded(F&& f) {
  try {
    return f();
  } catch (const BudgetExceeded& e) {
    return {{"status", "budget_exceeded"}, {"message", e.what()}};
  } catch (const Undefined& e) {
    return {{"status", "undefined"}, {"message", e.what()}};
  } catch (const LoopsUnsupported& e) {
    return {{"status", "undefined"}, {"message", e.what()}};
  }
}

Json cmd_params(Context& ctx, std::ostream& err) {
  Json j = header("params", ctx);
  const auto& g = ctx.graph();
  const std::size_t budget = ctx.search_budget(kDefaultSearchBudget);
  j["vertex_count"] = g.vertex_count;
  j["spread"] = guarded([&]() -> Json {
    const auto s = spread(g, budget);
    if (!s) return {{"status", "infinite"}};
    return {{"status", "ok"}, {"value", *s}};
  });
  j["clique_number"] = guarded([&]() -> Json { return {{"status", "ok"}, {"value", clique_number(g, budget)}}; });
  j["chromatic_number"] = guarded([&]() -> Json { return {{"status", "ok"}, {"value", chromatic_number(g, budget)}}; });
  j["total_domination_number"] =
      guarded([&]() -> Json { return {{"status", "ok"}, {"value", total_domination_number(g, budget)}}; });
  err << ctx.label() << ": graph parameters computed\n";
  return j;
}

Json aut_json(const AutResult& r) {
  Json gens = Json::array();
  for (const auto& p : r.generators) gens.push_back(perm_json(p));
  return {{"order", r.order.str()}, {"orbits", r.orbit_count()}, {"generators", gens}};
}

Json cmd_aut(Context& ctx, std::ostream& err) {
  Json j = header("aut", ctx);
  const auto& g = ctx.graph();
  const std::size_t budget = ctx.search_budget(kDefaultAutBudget);
  const AutResult w = graph_aut(g, true, budget);
  const AutResult u = graph_aut(g, false, budget);
  const BigInt autg = aut_group_order(ctx.data().table, ctx.data().action, ctx.m());
  j["aut_group_order"] = autg.str();
  j["weighted"] = aut_json(w);
  j["unweighted"] = aut_json(u);
  err << ctx.label() << ": |Aut(G)| = " << autg << ", weighted " << w.order << ", unweighted " << u.order << "\n";
  return j;
}

Json cmd_autgamma(Context& ctx, std::ostream& err) {
  Json j = header("autgamma", ctx);
  const auto& g = ctx.graph();
  const AutResult w = graph_aut(g, true, ctx.search_budget(kDefaultAutBudget));
  const BigInt kernel = weight_factorial_product(g);
  const BigInt order = kernel * w.order;
  std::vector<std::size_t> weights = g.weights;
  std::sort(weights.rbegin(), weights.rend());
  j["weights"] = weights;
  j["weight_factorial_product"] = kernel.str();
  j["weighted_aut_order"] = w.order.str();
  j["order"] = order.str();
  err << ctx.label() << ": |Aut(Gamma)| = " << order << "\n";
  return j;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const LimitExceeded*>(&e)) return 2;
  if (dynamic_cast<const InternalError*>(&e)) return 3;
  if (dynamic_cast<const Error*>(&e)) return 1;
  return 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  if (const char* env = std::getenv("GENSET_CACHE")) s.cache_dir = env;

  CLI::App app{"Generation-theoretic invariants of small finite groups", "genset"};
  app.require_subcommand(1);
  app.add_option("--cap", s.cap, "Largest group order for element-level work")->check(CLI::Range(1, 65535));
  app.add_option("--budget", s.budget, "Node budget for exhaustive searches");
  app.add_option("--cache-dir", s.cache_dir, "Lattice cache directory (default: $GENSET_CACHE)");
  app.add_option("--threads", s.threads, "Worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  auto group_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->fallthrough();
    c->add_option("-g,--group", s.group, "Group spec, e.g. Sn:4, PSL2:7, file:x.gens")->required();
    return c;
  };
  auto* info = group_cmd("info", "Order, generators and maximal subgroup classes");
  auto* lattice = group_cmd("lattice", "Subgroup lattice summary");
  auto* classes = group_cmd("classes", "Equivalence classes of a relation");
  classes->add_option("--relation", s.relation, "c, m, m2 or mr:<r>");
  auto* psi_cmd = group_cmd("psi", "d(G) and psi(G)");
  auto* inv = group_cmd("invariants", "d, psi, mu, Frattini order, efficient generation");
  auto* graph = group_cmd("graph", "Weighted reduced generating graph");
  graph->add_option("--emit", s.emit, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  auto* params = group_cmd("params", "Spread, clique, chromatic and total domination numbers");
  auto* aut = group_cmd("aut", "Automorphism groups of the reduced graph and of G");
  auto* autgamma = group_cmd("autgamma", "Order of the automorphism group of the generating graph");
  auto* verify = app.add_subcommand("verify", "Run a named check suite");
  verify->fallthrough();
  verify->add_option("suite", s.suite, "Suite name")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

#ifdef GENSET_HAVE_OPENMP
  if (s.threads > 0) omp_set_num_threads(s.threads);
#endif

  try {
    if (verify->parsed()) {
      AnalysisOptions opts;
      opts.cap = s.cap;
      const SuiteResult r = run_suite(s.suite, opts);
      Json j;
      j["schema"] = kSchema;
      j["command"] = "verify";
      j["suite"] = r.suite;
      Json checks = Json::array();
      for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        err << (c.ok ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      }
      j["checks"] = checks;
      j["ok"] = r.ok();
      out << j.dump(2) << "\n";
      return r.ok() ? 0 : 1;
    }

    Context ctx(s, err);
    Json j;
    bool emitted = false;
    if (info->parsed()) j = cmd_info(ctx, err);
    else if (lattice->parsed()) j = cmd_lattice(ctx, err);
    else if (classes->parsed()) j = cmd_classes(ctx, s, err);
    else if (psi_cmd->parsed()) j = cmd_psi(ctx, err);
    else if (inv->parsed()) j = cmd_invariants(ctx, err);
    else if (graph->parsed()) j = cmd_graph(ctx, s, out, err, emitted);
    else if (params->parsed()) j = cmd_params(ctx, err);
    else if (aut->parsed()) j = cmd_aut(ctx, err);
    else if (autgamma->parsed()) j = cmd_autgamma(ctx, err);
    if (!emitted) out << j.dump(2) << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace genset::cli

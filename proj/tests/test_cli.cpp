#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "genset/cache.hpp"
#include "genset/catalog.hpp"
#include "genset/cli.hpp"
#include "genset/equiv.hpp"
#include "support.hpp"

using namespace genset;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE(r.status == 0);
  return json::parse(r.out);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("genset-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("psi command") {
  const auto j = run_json({"psi", "--group", "Sn:4"});
  CHECK(j["schema"] == cli::kSchema);
  CHECK(j["d"] == 2);
  CHECK(j["psi"] == 3);
}

TEST_CASE("classes command") {
  CHECK(run_json({"classes", "--relation", "m", "--group", "Sn:5"})["count"] == 67);
  CHECK(run_json({"classes", "--relation", "m2", "--group", "Sn:4"})["count"] == 14);
  CHECK(run_json({"classes", "--relation", "mr:3", "--group", "Sn:4"})["count"] == 15);
  CHECK(run_json({"classes", "--relation", "c", "--group", "Sn:3"})["count"] == 5);
  CHECK(run({"classes", "--relation", "q", "--group", "Sn:3"}).status == 1);
}

TEST_CASE("autgamma command") {
  const auto j = run_json({"autgamma", "--group", "An:5"});
  const BigInt expected = (BigInt(1) << 31) * 2187 * 5;
  CHECK(j["order"] == expected.str());
}

TEST_CASE("other commands") {
  const auto info = run_json({"info", "-g", "PSL2:7"});
  CHECK(info["order"] == "168");
  CHECK(info["degree"] == 8);
  const auto lat = run_json({"lattice", "-g", "Sn:4"});
  CHECK(lat["subgroups"] == 30);
  CHECK(lat["classes"] == 11);
  const auto inv = run_json({"invariants", "-g", "Sn:4"});
  CHECK(inv["mu"] == 3);
  CHECK(inv["efficiently_generated"] == false);
  CHECK(inv["nonzero_spread"] == false);
  const auto params = run_json({"params", "-g", "An:5"});
  CHECK(params["spread"]["status"] == "ok");
  CHECK(params["spread"]["value"] == 2);
  const auto cyc = run_json({"params", "-g", "Cn:6"});
  CHECK(cyc["spread"]["status"] == "infinite");
  CHECK(cyc["chromatic_number"]["status"] == "undefined");
  const auto s4 = run_json({"params", "-g", "Sn:4"});
  CHECK(s4["total_domination_number"]["status"] == "undefined");
  const auto aut = run_json({"aut", "-g", "An:5"});
  CHECK(aut["aut_group_order"] == "120");
  CHECK(aut["weighted"]["order"] == "120");
  const auto g = run_json({"graph", "-g", "ElemAb:2,2"});
  CHECK(g["vertex_count"] == 4);
  CHECK(g["vertices"].size() == 4);
  CHECK(run({"params", "--budget", "1", "-g", "PSL2:7"}).out.find("budget_exceeded") != std::string::npos);
}

TEST_CASE("dot output") {
  const auto r = run({"graph", "--emit", "dot", "-g", "Cn:6"});
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("graph", 0) == 0);
  CHECK(r.out.find("label=\"0/") != std::string::npos);
  CHECK(r.out.find("peripheries=2") != std::string::npos);  // loop on the generator class
  CHECK(r.out.find("}") != std::string::npos);
  const auto s = run({"graph", "--emit", "dot", "-g", "Sn:4"});
  CHECK(s.out.find("peripheries=2") == std::string::npos);
}

TEST_CASE("exit statuses") {
  CHECK(run({}).status == 1);
  CHECK(run({"psi"}).status == 1);
  CHECK(run({"psi", "-g", "Bogus:1"}).status == 1);
  CHECK(run({"frobnicate"}).status == 1);
  CHECK(run({"psi", "-g", "Sn:8"}).status == 2);
  CHECK(run({"--cap", "100", "psi", "-g", "Sn:5"}).status == 2);
  CHECK(run({"--cap", "0", "psi", "-g", "Sn:3"}).status == 1);
  CHECK(run({"psi", "-g", "file:/nonexistent/x.gens"}).status == 1);
  CHECK(run({"verify", "nosuch"}).status == 1);
  CHECK(run({"verify", "s4"}).status == 0);
}

TEST_CASE("custom group files") {
  TempDir dir;
  const auto f = dir.path / "d8.gens";
  std::ofstream(f) << "deg 4\n(1,2,3,4)\n(1,3)\n";
  const auto j = run_json({"info", "-g", "file:" + f.string()});
  CHECK(j["order"] == "8");
  CHECK(j["frattini_order"] == 2);
}

TEST_CASE("outputs do not depend on the thread count") {
  const auto a = run({"--threads", "1", "graph", "-g", "Sn:5"});
  const auto b = run({"--threads", "3", "graph", "-g", "Sn:5"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cache round trip") {
  const auto g = build(GroupSpec::symmetric(4));
  const auto gd = analyze(g);
  const auto bytes = serialize(g, gd);
  CHECK(bytes.rfind("GENSETC1", 0) == 0);
  const auto back = deserialize(g, bytes);
  CHECK(back.lattice.subgroups == gd.lattice.subgroups);
  CHECK(back.lattice.classes == gd.lattice.classes);
  CHECK(back.lattice.maximal_classes == gd.lattice.maximal_classes);
  CHECK(back.action.fix == gd.action.fix);
  CHECK(back.frattini == gd.frattini);
  CHECK(serialize(g, back) == bytes);

  // damaged images are rejected
  CHECK_THROWS_AS(deserialize(g, bytes.substr(0, bytes.size() / 2)), CacheFormatError);
  CHECK_THROWS_AS(deserialize(g, "nonsense"), CacheFormatError);
  auto bumped = bytes;
  bumped[8] = 2;  // version
  CHECK_THROWS_AS(deserialize(g, bumped), CacheFormatError);
  CHECK_THROWS_AS(deserialize(build(GroupSpec::alternating(4)), bytes), CacheFormatError);
}

TEST_CASE("group hash") {
  CHECK(group_hash(build(GroupSpec::symmetric(4))) == group_hash(build(GroupSpec::symmetric(4))));
  CHECK(group_hash(build(GroupSpec::symmetric(4))) != group_hash(build(GroupSpec::alternating(4))));
}

TEST_CASE("cache directory") {
  TempDir dir;
  const auto g = build(GroupSpec::alternating(5));
  CacheOutcome first, second;
  const auto a = analyze_cached(g, {}, dir.path, &first);
  CHECK(first.used);
  CHECK_FALSE(first.hit);
  CHECK(fs::exists(cache_file(dir.path, g)));
  const auto b = analyze_cached(g, {}, dir.path, &second);
  CHECK(second.hit);
  CHECK(a.action.fix == b.action.fix);

  // corrupt entry: treated as a miss and rewritten
  const auto file = cache_file(dir.path, g);
  {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << "GENSETC1 garbage";
  }
  CHECK_FALSE(load_cached(dir.path, g).has_value());
  CacheOutcome third;
  analyze_cached(g, {}, dir.path, &third);
  CHECK_FALSE(third.hit);
  CHECK(load_cached(dir.path, g).has_value());
  for (const auto& e : fs::directory_iterator(dir.path)) CHECK(e.path().extension() == ".gsc");
}

TEST_CASE("cache hit and miss give identical output") {
  TempDir dir;
  for (const char* cmd : {"info", "psi", "graph", "aut", "autgamma", "params", "invariants", "lattice"}) {
    CAPTURE(cmd);
    const auto miss = run({"--cache-dir", dir.path.string(), cmd, "-g", "PSL2:7"});
    const auto hit = run({"--cache-dir", dir.path.string(), cmd, "-g", "PSL2:7"});
    CHECK(miss.status == 0);
    CHECK(hit.out == miss.out);
    CHECK(hit.err.find("hit") != std::string::npos);
  }
  CHECK(run({"--cache-dir", dir.path.string(), "classes", "--relation", "m", "-g", "PSL2:7"}).out ==
        run({"classes", "--relation", "m", "-g", "PSL2:7"}).out);
}

TEST_CASE("cache directory from the environment") {
  TempDir dir;
  ::setenv("GENSET_CACHE", dir.path.c_str(), 1);
  const auto r = run({"psi", "-g", "Sn:4"});
  ::unsetenv("GENSET_CACHE");
  CHECK(r.status == 0);
  CHECK(fs::exists(cache_file(dir.path, build(GroupSpec::symmetric(4)))));
  const auto bytes = slurp(cache_file(dir.path, build(GroupSpec::symmetric(4))));
  CHECK(bytes.rfind("GENSETC1", 0) == 0);
}

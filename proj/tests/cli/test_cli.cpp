// Runs the command-line tool as a subprocess and checks its output and exit
// codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("matchcx-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args, const std::string& cache = "") {
  std::string cache_dir = cache.empty() ? (scratch() / "cache").string() : cache;
  std::string cmd = "MATCHCX_CACHE_DIR='" + cache_dir + "' '" MATCHCX_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("compute") {
  auto r = run("compute G 5");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "∨_16 S^4");
  CHECK(first_line(run("compute M 1").out) == "pt");
  auto j = json::parse(run("--json compute G 9").out);
  CHECK(j["spheres"] == json{{"8", 165}, {"9", 2}});
  CHECK(j["contractible"] == false);
  CHECK(run("compute Z 5").code == 2);
  CHECK(run("compute G 0").code == 2);
  CHECK(run("compute G").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("table") {
  auto t = run("table 2");
  CHECK(t.code == 0);
  CHECK(t.out.find("H | S^1 | ∨_3 S^2\n") != std::string::npos);
  auto one = run("table 1");
  int rows = 0;
  std::istringstream in(one.out);
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 11);  // header plus ten families
  auto eight = run("table 8");
  CHECK(eight.out.find("G | S^0 | ∨_2 S^1 | ∨_5 S^2 | ∨_9 S^3 | ∨_16 S^4 | ∨_31 S^5 | ∨_55 S^6 | ∨_94 S^7\n") !=
        std::string::npos);
  auto j = json::parse(run("--json table 3").out);
  CHECK(j["rows"].size() == 10);
}

TEST_CASE("betti") {
  auto r = run("--no-cache betti G 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("b~_2 = 5") != std::string::npos);
  CHECK(r.out.find("torsion-free") != std::string::npos);
  auto m = run("--no-cache betti grid 1 7 --matching");
  CHECK(m.out.find("b~_1 = 1") != std::string::npos);
  auto tri = scratch() / "triangle.edges";
  std::ofstream(tri) << "# triangle\n1 2\n2 3\n1 3\n";
  auto f = run("--no-cache betti file " + tri.string());
  CHECK(f.code == 0);
  CHECK(f.out.find("b~_0 = 2") != std::string::npos);
  CHECK(run("--no-cache betti file /nonexistent.edges").code == 2);
  CHECK(run("--no-cache --budget 10 betti G 4").code == 3);
  auto j = json::parse(run("--no-cache --json --budget 10 betti G 4").out);
  CHECK(j["status"] == "resource-limit");
}

TEST_CASE("betti json is byte-stable and the cache re-serves it") {
  auto cache = (scratch() / "stable").string();
  fs::remove_all(cache);
  auto fresh = run("--json --no-cache betti H 3", cache);
  auto first = run("--json betti H 3", cache);
  CHECK(fs::exists(cache));
  CHECK(!fs::is_empty(cache));
  auto second = run("--json betti H 3", cache);
  CHECK(fresh.code == 0);
  CHECK(fresh.out == first.out);
  CHECK(first.out == second.out);
  auto j = json::parse(second.out);
  for (auto key : {"graph", "reduction", "betti", "status", "timings", "version"}) CHECK(j.contains(key));
  CHECK(j["betti"]["reduced_betti"].is_object());
  CHECK(j["betti"]["torsion_free"] == true);
  // a corrupted entry whose key line does not match is ignored
  for (auto& e : fs::directory_iterator(cache)) std::ofstream(e.path(), std::ios::trunc) << "other key\n{}";
  CHECK(run("--json betti H 3", cache).out == fresh.out);
}

TEST_CASE("verify") {
  auto report = scratch() / "report.json";
  auto r = run("--no-cache verify --families G,M --n-max 3 --output " + report.string());
  CHECK(r.code == 0);
  std::ifstream in(report);
  auto doc = json::parse(in);
  REQUIRE(doc["reports"].size() == 6);
  for (auto& rep : doc["reports"]) {
    CHECK(rep["status"] == "match");
    for (auto key : {"family", "n", "symbolic", "betti", "status", "timings", "version"}) CHECK(rep.contains(key));
    CHECK(rep["symbolic"].contains("spheres"));
    CHECK(rep["symbolic"].contains("contractible"));
  }
  auto g5 = json::parse(run("--json verify --families G --n-max 5 --output ''").out);
  auto& last = g5["reports"].back();
  CHECK(last["n"] == 5);
  CHECK(last["betti"]["reduced_betti"] == json{{"4", 16}});
  CHECK(last["status"] == "match");

  // O_3 is computed as ∨_3 S^4, against ∨_4 S^4 ∨ S^5 from the recursion
  auto o = run("--no-cache verify --families O --n-max 3 --output ''");
  CHECK(o.code == 1);
  CHECK(o.out.find("mismatch") != std::string::npos);
  CHECK(run("verify --n-max 6 --output ''").code == 2);
  CHECK(run("verify --families X --output ''").code == 2);
}

TEST_CASE("explore") {
  auto a = run("--no-cache explore 2 2");
  CHECK(a.code == 0);
  CHECK(a.out.find("b~_0 = 1") != std::string::npos);
  auto b = json::parse(run("--no-cache --json explore 3 4").out);
  CHECK(b["betti"]["reduced_betti"] == json{{"3", 9}});
  CHECK(b["status"] == "match");
  CHECK(b["torsion_detected"] == false);
  CHECK(b["band"]["contiguous"] == true);
  auto c = run("--no-cache explore 1 4");
  CHECK(c.out.find("b~_0 = 1") != std::string::npos);
}

TEST_CASE("dims") {
  auto g = run("dims G 9");
  CHECK(g.code == 0);
  CHECK(g.out.find("predicted [8,9]") != std::string::npos);
  CHECK(g.out.find("OK") != std::string::npos);
  CHECK(run("dims A 7").out.find("predicted [6,7]") != std::string::npos);
  CHECK(run("dims Q 1").out.find("contractible") != std::string::npos);
}

TEST_CASE("reduce and iso") {
  auto r = run("reduce M 1");
  CHECK(r.code == 0);
  CHECK(r.out == "FOLD m2 remove=x1\nFOLD m3 remove=m1\nCONE isolated=v1\n# terminal contractible\n");
  auto j = json::parse(run("--json reduce cycle 6 --terminal").out);
  CHECK(j["contractible"] == false);
  CHECK(j.contains("terminal_edge_list"));
  CHECK(run("iso linegrid:3:4 G:4").out.find("isomorphic") != std::string::npos);
  auto no = run("iso path:6 cycle:6");
  CHECK(no.out.find("not isomorphic") != std::string::npos);
  CHECK(run("iso path:70 path:70").code == 3);
}

// matchcx command-line front end. Uses only the public C API.

#include <matchcx/matchcx.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cli_support.hpp"

using nlohmann::json;
using namespace cli;

namespace {

const char* kFamilies = "GBADJOMQFH";

struct Globals {
  bool json_out = false;
  bool no_cache = false;
  bool timings = false;
  std::uint64_t budget = 50'000'000;
  std::string method = "crosscheck";
  unsigned jobs = 1;
};

char family_token(const std::string& tok) {
  if (tok.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if (std::strchr(kFamilies, c)) return c;
  }
  throw CliError(kUsage, "unknown family '" + tok + "' (expected one of G B A D J O M Q F H)");
}

int positive(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used == tok.size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw CliError(kUsage, std::string(what) + " must be a positive integer, got '" + tok + "'");
}

mcx_method method_of(const std::string& m) {
  if (m == "gf2") return MCX_METHOD_GF2;
  if (m == "rank") return MCX_METHOD_RATIONAL;
  if (m == "snf") return MCX_METHOD_SNF;
  if (m == "crosscheck") return MCX_METHOD_CROSSCHECK;
  throw CliError(kUsage, "unknown method '" + m + "' (snf, rank, gf2, crosscheck)");
}

using Clock = std::chrono::steady_clock;
double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

// A graph plus a stable description used for reports and cache keys.
struct Source {
  GraphPtr graph;
  std::string label;   // "G", "grid(3,4)", "file"
  int n = 0;           // family index or grid width; 0 otherwise
  std::string key;     // cache identity
};

Source family_source(char f, int n) {
  Source s;
  mcx_graph* g = nullptr;
  check(mcx_graph_family(f, n, &g), "building family");
  s.graph.reset(g);
  s.label = std::string(1, f);
  s.n = n;
  s.key = std::string("family:") + f + ":" + std::to_string(n);
  return s;
}

Source grid_source(int m, int n) {
  Source s;
  mcx_graph* g = nullptr;
  check(mcx_graph_grid(m, n, &g), "building grid");
  s.graph.reset(g);
  s.label = "grid(" + std::to_string(m) + "," + std::to_string(n) + ")";
  s.n = n;
  s.key = "grid:" + std::to_string(m) + ":" + std::to_string(n);
  return s;
}

Source file_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kUsage, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Source s;
  mcx_graph* g = nullptr;
  check(mcx_graph_parse(text.c_str(), &g), path);
  s.graph.reset(g);
  s.label = "file";
  // key on the canonical edge list so equal graphs share cache entries
  char* canon = nullptr;
  check(mcx_graph_edge_list(g, &canon), "canonical form");
  s.key = "file:" + take(canon);
  return s;
}

Source source_from_args(const std::vector<std::string>& a) {
  if (a.empty()) throw CliError(kUsage, "missing input (family n | grid m n | file path | path r | cycle r)");
  auto want = [&](std::size_t k) {
    if (a.size() != k) throw CliError(kUsage, "wrong number of arguments for '" + a[0] + "'");
  };
  if (a[0] == "grid") {
    want(3);
    return grid_source(positive(a[1], "m"), positive(a[2], "n"));
  }
  if (a[0] == "file") {
    want(2);
    return file_source(a[1]);
  }
  if (a[0] == "path" || a[0] == "cycle") {
    want(2);
    int r = positive(a[1], "r");
    Source s;
    mcx_graph* g = nullptr;
    check(a[0] == "path" ? mcx_graph_path(r, &g) : mcx_graph_cycle(r, &g), "building " + a[0]);
    s.graph.reset(g);
    s.label = a[0] + "(" + a[1] + ")";
    s.key = a[0] + ":" + a[1];
    return s;
  }
  want(2);
  return family_source(family_token(a[0]), positive(a[1], "n"));
}

// "G:3", "grid:3:4", "linegrid:3:4", "path:5", "cycle:6", or a file path.
Source source_from_token(const std::string& tok) {
  std::vector<std::string> parts;
  std::stringstream ss(tok);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() >= 2 && parts[0] == "linegrid") {
    if (parts.size() != 3) throw CliError(kUsage, "expected linegrid:m:n");
    auto s = grid_source(positive(parts[1], "m"), positive(parts[2], "n"));
    mcx_graph* l = nullptr;
    check(mcx_graph_line(s.graph.get(), &l), "line graph");
    s.graph.reset(l);
    return s;
  }
  if (parts.size() >= 2 && (parts[0] == "grid" || parts[0] == "path" || parts[0] == "cycle"))
    return source_from_args(parts);
  if (parts.size() == 2 && parts[0].size() == 1 && std::strchr(kFamilies, std::toupper(parts[0][0])))
    return source_from_args(parts);
  return file_source(tok);
}

json parse_lib_json(char* s) { return json::parse(take(s)); }

json wedge_json(char f, int n, std::string* text = nullptr) {
  mcx_wedge* w = nullptr;
  check(mcx_wedge_family(f, n, &w), "symbolic evaluation");
  WedgePtr hold(w);
  char* js = nullptr;
  check(mcx_wedge_json(w, &js), "rendering");
  if (text) {
    char* t = nullptr;
    check(mcx_wedge_text(w, &t), "rendering");
    *text = take(t);
  }
  return parse_lib_json(js);
}

// Builds Ind of the source graph (after fold/cone reduction unless raw) and
// computes its reduced homology. Result fields: graph, reduction, betti
// (null on resource limit), error, timings.
json run_homology(const Source& src, const Globals& g, bool raw, bool matching, const Cache& cache) {
  std::string key = src.key + "|matching=" + (matching ? "1" : "0") + "|raw=" + (raw ? "1" : "0") +
                    "|method=" + g.method + "|budget=" + std::to_string(g.budget) + "|version=" + mcx_version();
  json timings = json::object();
  if (auto hit = cache.get(key)) {
    auto r = json::parse(*hit);
    r["timings"] = g.timings ? json{{"cache_hit", true}} : json::object();
    return r;
  }

  auto t0 = Clock::now();
  GraphPtr work;
  {
    mcx_graph* copy = nullptr;
    if (matching) {
      check(mcx_graph_line(src.graph.get(), &copy), "line graph");
    } else {
      check(mcx_graph_copy(src.graph.get(), &copy), "copy");
    }
    work.reset(copy);
  }
  json out;
  std::size_t v = 0, e = 0;
  mcx_graph_order(work.get(), &v);
  mcx_graph_size(work.get(), &e);
  out["graph"] = {{"vertices", v}, {"edges", e}, {"complex", matching ? "matching" : "independence"}};
  timings["build_ms"] = ms_since(t0);

  bool contractible = false;
  json red = {{"applied", !raw}};
  if (!raw) {
    auto t1 = Clock::now();
    mcx_trace* tr = nullptr;
    check(mcx_reduce(work.get(), &tr), "reduction");
    TracePtr trace(tr);
    int c = 0;
    std::size_t steps = 0;
    mcx_trace_contractible(tr, &c);
    mcx_trace_steps(tr, &steps);
    contractible = c != 0;
    red["rules"] = "fold,cone";
    red["steps"] = steps;
    red["contractible"] = contractible;
    if (!contractible) {
      mcx_graph* term = nullptr;
      check(mcx_trace_terminal(tr, &term), "reduction");
      work.reset(term);
      mcx_graph_order(term, &v);
      mcx_graph_size(term, &e);
      red["vertices_after"] = v;
      red["edges_after"] = e;
    }
    timings["reduce_ms"] = ms_since(t1);
  }
  out["reduction"] = red;

  auto t2 = Clock::now();
  if (contractible) {
    out["betti"] = {{"reduced_betti", json::object()},
                    {"torsion_free", true},
                    {"torsion", json::array()},
                    {"evidence", "cone"}};
  } else {
    mcx_complex* k = nullptr;
    auto st = mcx_independence_complex(work.get(), g.budget, &k);
    ComplexPtr hold(k);
    mcx_betti* b = nullptr;
    if (st == MCX_OK) st = mcx_compute_betti(k, method_of(g.method), 3, g.budget, 1, &b);
    BettiPtr bh(b);
    if (st == MCX_E_RESOURCE || st == MCX_E_SIZE_LIMIT) {
      out["betti"] = nullptr;
      out["error"] = mcx_last_error();
    } else {
      check(st, "homology");
      char* js = nullptr;
      check(mcx_betti_json(b, &js), "homology");
      out["betti"] = parse_lib_json(js);
    }
  }
  timings["homology_ms"] = ms_since(t2);
  if (!out["betti"].is_null()) cache.put(key, out.dump());
  out["timings"] = g.timings ? timings : json::object();
  return out;
}

std::map<int, std::string> counts_of(const json& obj) {
  std::map<int, std::string> m;
  for (auto& [k, v] : obj.items()) m[std::stoi(k)] = v.is_string() ? v.get<std::string>() : v.dump();
  return m;
}

std::string betti_text(const json& betti) {
  auto m = counts_of(betti.at("reduced_betti"));
  if (m.empty()) return "all reduced Betti numbers vanish";
  std::string out;
  for (auto& [d, c] : m) out += (out.empty() ? "" : ", ") + std::string("b~_") + std::to_string(d) + " = " + c;
  return out;
}

std::string torsion_text(const json& betti) {
  const auto& tf = betti.at("torsion_free");
  std::string ev = betti.value("evidence", "");
  if (tf.is_null()) return "torsion not determined (" + ev + ")";
  if (tf.get<bool>()) return "torsion-free (" + ev + ")";
  std::string out = "TORSION DETECTED";
  for (const auto& t : betti.at("torsion")) {
    out += " in dimension " + std::to_string(t.at("dimension").get<int>());
    if (!t.at("factors").empty()) out += " factors " + t.at("factors").dump();
    if (!t.at("primes").empty()) out += " primes " + t.at("primes").dump();
  }
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// --- commands --------------------------------------------------------------

int cmd_compute(const Globals& g, const std::string& fam, const std::string& n) {
  char f = family_token(fam);
  mcx_wedge* w = nullptr;
  check(mcx_wedge_family(f, positive(n, "n"), &w), "compute");
  WedgePtr hold(w);
  char* s = nullptr;
  check(g.json_out ? mcx_wedge_json(w, &s) : mcx_wedge_text(w, &s), "compute");
  std::cout << take(s) << "\n";
  return kOk;
}

int cmd_betti(const Globals& g, const std::vector<std::string>& args, bool raw, bool matching, const Cache& cache) {
  auto src = source_from_args(args);
  auto r = run_homology(src, g, raw, matching, cache);
  std::string status = r["betti"].is_null() ? "resource-limit" : "betti-only";
  if (g.json_out) {
    json rep = {{"family", src.label}, {"n", src.n}, {"status", status}, {"version", mcx_version()}};
    for (auto& [k, v] : r.items()) rep[k] = v;
    print_json(rep);
  } else {
    std::cout << "input: " << src.label << (src.n ? " n=" + std::to_string(src.n) : "") << "\n";
    std::cout << "complex: " << r["graph"]["complex"].get<std::string>() << " complex, graph with "
              << r["graph"]["vertices"] << " vertices and " << r["graph"]["edges"] << " edges\n";
    const auto& red = r["reduction"];
    if (!red["applied"].get<bool>())
      std::cout << "reduction: off\n";
    else if (red["contractible"].get<bool>())
      std::cout << "reduction: fold/cone, " << red["steps"] << " steps, contractible (isolated vertex)\n";
    else
      std::cout << "reduction: fold/cone, " << red["steps"] << " steps, " << red["vertices_after"]
                << " vertices left\n";
    if (status == "resource-limit") {
      std::cout << "status: resource-limit (" << r["error"].get<std::string>() << ")\n";
    } else {
      std::cout << betti_text(r["betti"]) << "\n" << torsion_text(r["betti"]) << "\n";
    }
  }
  return status == "resource-limit" ? kResource : kOk;
}

json verify_one(const Globals& g, char f, int n, bool raw, const Cache& cache) {
  auto src = family_source(f, n);
  json rep = {{"family", std::string(1, f)}, {"n", n}, {"version", mcx_version()}};
  rep["symbolic"] = wedge_json(f, n);
  auto r = run_homology(src, g, raw, false, cache);
  rep["betti"] = r["betti"];
  rep["reduction"] = r["reduction"];
  rep["timings"] = r["timings"];
  if (r["betti"].is_null()) {
    rep["status"] = "resource-limit";
    rep["error"] = r["error"];
    return rep;
  }
  auto sym = counts_of(rep["symbolic"]["spheres"]);
  auto bet = counts_of(r["betti"]["reduced_betti"]);
  bool tf = r["betti"]["torsion_free"].is_boolean() && r["betti"]["torsion_free"].get<bool>();
  rep["status"] = sym == bet && tf ? "match" : "mismatch";
  if (sym != bet) {
    json diff = json::array();
    std::set<int> dims;
    for (auto& [d, c] : sym) dims.insert(d);
    for (auto& [d, c] : bet) dims.insert(d);
    for (int d : dims) {
      auto s = sym.count(d) ? sym[d] : "0";
      auto b = bet.count(d) ? bet[d] : "0";
      if (s != b) diff.push_back({{"dimension", d}, {"symbolic", s}, {"betti", b}});
    }
    rep["diff"] = diff;
  }
  return rep;
}

int cmd_verify(const Globals& g, const std::string& families, int n_max, bool deep, bool raw,
               const std::string& output, const Cache& cache) {
  if (n_max > 5 && !deep) throw CliError(kUsage, "n-max above 5 needs --deep");
  if (n_max > 6) throw CliError(kUsage, "n-max is limited to 6");
  std::string fams;
  if (families == "all") {
    fams = kFamilies;
  } else {
    std::stringstream ss(families);
    for (std::string t; std::getline(ss, t, ',');) fams += family_token(t);
  }
  std::vector<std::pair<char, int>> jobs;
  for (int n = 1; n <= n_max; ++n)
    for (char f : fams) jobs.emplace_back(f, n);
  // heaviest cells last in input order; workers pull the next index
  std::vector<json> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      try {
        reports[i] = verify_one(g, jobs[i].first, jobs[i].second, raw, cache);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, g.jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  std::map<std::string, int> summary = {{"match", 0}, {"mismatch", 0}, {"resource-limit", 0}};
  for (const auto& r : reports) summary[r["status"].get<std::string>()]++;
  json doc = {{"version", mcx_version()}, {"reports", reports}, {"summary", summary}};
  if (!output.empty()) {
    std::ofstream out(output, std::ios::trunc);
    if (!out) throw CliError(kUsage, "cannot write " + output);
    out << doc.dump(2) << "\n";
  }
  if (g.json_out) {
    print_json(doc);
  } else {
    for (const auto& r : reports) {
      std::string text;
      wedge_json(r["family"].get<std::string>()[0], r["n"].get<int>(), &text);
      std::cout << r["family"].get<std::string>() << "_" << r["n"] << "  " << r["status"].get<std::string>()
                << "  symbolic " << text;
      if (!r["betti"].is_null()) std::cout << "  betti " << betti_text(r["betti"]);
      std::cout << "\n";
      if (r.contains("diff"))
        for (const auto& d : r["diff"])
          std::cout << "    dim " << d["dimension"] << ": symbolic " << d["symbolic"].get<std::string>()
                    << ", betti " << d["betti"].get<std::string>() << "\n";
      if (r["status"] == "mismatch" && !r.contains("diff"))
        std::cout << "    " << torsion_text(r["betti"]) << "\n";
    }
    std::cout << "summary: " << summary["match"] << " match, " << summary["mismatch"] << " mismatch, "
              << summary["resource-limit"] << " resource-limit\n";
  }
  if (summary["mismatch"]) return kMismatch;
  if (summary["resource-limit"]) return kResource;
  return kOk;
}

int cmd_table(const Globals& g, int n_max) {
  json rows = json::array();
  std::vector<std::vector<std::string>> cells;
  for (const char* p = kFamilies; *p; ++p) {
    std::vector<std::string> row;
    for (int n = 1; n <= n_max; ++n) {
      mcx_wedge* w = nullptr;
      check(mcx_wedge_family(*p, n, &w), "table");
      WedgePtr hold(w);
      char* t = nullptr;
      check(mcx_wedge_text(w, &t), "table");
      row.push_back(take(t));
    }
    rows.push_back({{"family", std::string(1, *p)}, {"cells", row}});
    cells.push_back(std::move(row));
  }
  if (g.json_out) {
    print_json({{"n_max", n_max}, {"rows", rows}});
    return kOk;
  }
  std::cout << "n";
  for (int n = 1; n <= n_max; ++n) std::cout << " | " << n;
  std::cout << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::cout << kFamilies[i];
    for (const auto& c : cells[i]) std::cout << " | " << c;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_explore(const Globals& g, int m, int n, bool raw, const Cache& cache) {
  auto src = grid_source(m, n);
  auto r = run_homology(src, g, raw, true, cache);
  json rep = {{"family", src.label}, {"n", n}, {"version", mcx_version()}};
  rep["betti"] = r["betti"];
  rep["reduction"] = r["reduction"];
  rep["timings"] = r["timings"];
  int code = kOk;
  std::string band = "n/a";
  if (r["betti"].is_null()) {
    rep["status"] = "resource-limit";
    rep["error"] = r["error"];
    code = kResource;
  } else {
    auto bet = counts_of(r["betti"]["reduced_betti"]);
    bool contiguous = true;
    int prev = 0;
    bool first = true;
    for (auto& [d, c] : bet) {
      if (!first && d != prev + 1) contiguous = false;
      prev = d;
      first = false;
    }
    band = bet.empty() ? "empty" : std::to_string(bet.begin()->first) + ".." + std::to_string(bet.rbegin()->first);
    rep["band"] = {{"contiguous", contiguous}, {"dimensions", band}};
    bool torsion = r["betti"]["torsion_free"].is_boolean() && !r["betti"]["torsion_free"].get<bool>();
    rep["torsion_detected"] = torsion;
    if (m == 3) {
      rep["symbolic"] = wedge_json('G', n);
      bool same = counts_of(rep["symbolic"]["spheres"]) == bet;
      rep["status"] = same && !torsion ? "match" : "mismatch";
    } else {
      rep["status"] = torsion ? "mismatch" : "betti-only";
    }
    if (torsion || rep["status"] == "mismatch") code = kMismatch;
  }
  if (g.json_out) {
    print_json(rep);
    return code;
  }
  std::cout << "M(Γ_{" << m << "," << n << "}): ";
  if (r["betti"].is_null()) {
    std::cout << "resource-limit (" << r["error"].get<std::string>() << ")\n";
    return code;
  }
  std::cout << betti_text(r["betti"]) << "\n" << torsion_text(r["betti"]) << "\n";
  std::cout << "band: " << band << (rep["band"]["contiguous"].get<bool>() ? " (contiguous)" : " (NOT contiguous)")
            << "\n";
  if (m == 3) {
    std::string text;
    wedge_json('G', n, &text);
    std::cout << "symbolic G_" << n << ": " << text << " -> " << rep["status"].get<std::string>() << "\n";
  }
  return code;
}

int cmd_dims(const Globals& g, const std::string& fam, const std::string& n_tok) {
  char f = family_token(fam);
  int n = positive(n_tok, "n");
  int has = 0, lo = 0, hi = 0;
  check(mcx_dimension_range(f, n, &has, &lo, &hi), "dims");
  auto sym = wedge_json(f, n);
  std::vector<int> support;
  for (auto& [k, v] : sym["spheres"].items()) support.push_back(std::stoi(k));
  std::sort(support.begin(), support.end());
  bool ok;
  if (!has) {
    ok = support.empty();
  } else {
    ok = static_cast<int>(support.size()) == hi - lo + 1 && !support.empty() && support.front() == lo &&
         support.back() == hi;
  }
  if (g.json_out) {
    json j = {{"family", std::string(1, f)}, {"n", n}, {"actual", support}, {"ok", ok}};
    j["predicted"] = has ? json{{"low", lo}, {"high", hi}} : json(nullptr);
    print_json(j);
  } else {
    std::string actual = "{";
    for (std::size_t i = 0; i < support.size(); ++i) actual += (i ? "," : "") + std::to_string(support[i]);
    actual += "}";
    if (!has)
      std::cout << "predicted contractible, actual " << (support.empty() ? "contractible" : actual);
    else
      std::cout << "predicted [" << lo << "," << hi << "], actual " << (support.empty() ? "contractible" : actual);
    std::cout << ", " << (ok ? "OK" : "DISAGREE") << "\n";
  }
  return ok ? kOk : kMismatch;
}

int cmd_reduce(const Globals& g, const std::vector<std::string>& args, bool matching, bool fold_only,
               bool show_terminal) {
  auto src = source_from_args(args);
  GraphPtr work;
  if (matching) {
    mcx_graph* l = nullptr;
    check(mcx_graph_line(src.graph.get(), &l), "line graph");
    work.reset(l);
  } else {
    work = std::move(src.graph);
  }
  mcx_trace* t = nullptr;
  check(fold_only ? mcx_fold_reduce(work.get(), &t) : mcx_reduce(work.get(), &t), "reduce");
  TracePtr trace(t);
  char* text = nullptr;
  check(mcx_trace_text(t, &text), "reduce");
  auto body = take(text);
  int contractible = 0;
  mcx_trace_contractible(t, &contractible);
  std::string terminal;
  if (!contractible) {
    mcx_graph* term = nullptr;
    check(mcx_trace_terminal(t, &term), "reduce");
    GraphPtr th(term);
    char* el = nullptr;
    check(mcx_graph_edge_list(term, &el), "reduce");
    terminal = take(el);
  }
  if (g.json_out) {
    json steps = json::array();
    std::stringstream ss(body);
    for (std::string line; std::getline(ss, line);)
      if (!line.empty() && line[0] != '#') steps.push_back(line);
    json j = {{"input", src.label}, {"n", src.n}, {"steps", steps}, {"contractible", contractible != 0}};
    if (!contractible) j["terminal_edge_list"] = terminal;
    print_json(j);
  } else {
    std::cout << body;
    if (show_terminal && !contractible) std::cout << terminal;
  }
  return kOk;
}

int cmd_iso(const Globals& g, const std::string& a, const std::string& b) {
  auto sa = source_from_token(a);
  auto sb = source_from_token(b);
  int found = 0;
  char* mapping = nullptr;
  check(mcx_graph_isomorphic(sa.graph.get(), sb.graph.get(), &found, &mapping), "iso");
  auto text = take(mapping);
  if (g.json_out) {
    json j = {{"isomorphic", found != 0}};
    if (found) {
      json m = json::object();
      std::stringstream ss(text);
      for (std::string x, y; ss >> x >> y;) m[x] = y;
      j["mapping"] = m;
    }
    print_json(j);
  } else {
    std::cout << (found ? "isomorphic\n" : "not isomorphic\n") << text;
  }
  return found ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchcx: homotopy types of independence complexes of 3×n grid families"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(mcx_version()));

  Globals g;
  app.add_flag("--json", g.json_out, "JSON output");
  app.add_flag("--no-cache", g.no_cache, "bypass the result cache");
  app.add_flag("--timings", g.timings, "include phase timings in reports");
  app.add_option("--budget", g.budget, "face budget for complex enumeration")->check(CLI::PositiveNumber);
  app.add_option("--method", g.method, "homology method")
      ->check(CLI::IsMember({"snf", "rank", "gf2", "crosscheck"}));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string fam, n_tok;
  auto* compute = app.add_subcommand("compute", "symbolic homotopy type of Ind(F_n)");
  compute->add_option("family", fam)->required();
  compute->add_option("n", n_tok)->required();

  std::vector<std::string> src_args;
  bool raw = false, matching = false;
  auto* betti = app.add_subcommand("betti", "reduced homology: <family n | grid m n | file path>");
  betti->add_option("input", src_args)->required()->expected(2, 3);
  betti->add_flag("--raw", raw, "skip fold/cone reduction");
  betti->add_flag("--matching", matching, "use the matching complex (line graph) of the input");

  std::string families = "all", output = "verify-report.json";
  int n_max = 5;
  bool deep = false;
  auto* verify = app.add_subcommand("verify", "compare symbolic and brute-force results");
  verify->add_option("--families", families, "all or a comma list, e.g. G,B");
  verify->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  verify->add_flag("--deep", deep, "allow n = 6");
  verify->add_flag("--raw", raw, "skip fold/cone reduction");
  verify->add_option("--output", output, "JSON report path ('' to skip)");

  int table_n = 8;
  auto* table = app.add_subcommand("table", "symbolic table for n <= n_max");
  table->add_option("n_max", table_n)->check(CLI::PositiveNumber);

  int em = 0, en = 0;
  auto* explore = app.add_subcommand("explore", "homology of the matching complex of the m×n grid");
  explore->add_option("m", em)->required()->check(CLI::PositiveNumber);
  explore->add_option("n", en)->required()->check(CLI::PositiveNumber);
  explore->add_flag("--raw", raw, "skip fold/cone reduction");

  auto* dims = app.add_subcommand("dims", "predicted sphere dimensions against the symbolic support");
  dims->add_option("family", fam)->required();
  dims->add_option("n", n_tok)->required();

  bool fold_only = false, show_terminal = false;
  auto* reduce = app.add_subcommand("reduce", "print a reduction trace");
  reduce->add_option("input", src_args)->required()->expected(2, 3);
  reduce->add_flag("--matching", matching, "reduce the line graph of the input");
  reduce->add_flag("--fold-only", fold_only, "folds only, no isolated-vertex stop");
  reduce->add_flag("--terminal", show_terminal, "also print the terminal edge list");

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "graph isomorphism: G:3, grid:3:4, linegrid:3:4, path:5, cycle:6 or a file");
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    Cache cache(Cache::default_dir(), !g.no_cache);
    if (*compute) return cmd_compute(g, fam, n_tok);
    if (*betti) return cmd_betti(g, src_args, raw, matching, cache);
    if (*verify) return cmd_verify(g, families, n_max, deep, raw, output, cache);
    if (*table) return cmd_table(g, table_n);
    if (*explore) return cmd_explore(g, em, en, raw, cache);
    if (*dims) return cmd_dims(g, fam, n_tok);
    if (*reduce) return cmd_reduce(g, src_args, matching, fold_only, show_terminal);
    if (*iso) return cmd_iso(g, iso_a, iso_b);
  } catch (const CliError& e) {
    std::cerr << "matchcx: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "matchcx: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

#include "matchcx/matchcx.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"

#include "core/complex.hpp"
#include "core/edge_list.hpp"
#include "core/families.hpp"
#include "core/homology.hpp"
#include "core/isomorphism.hpp"
#include "core/reduction.hpp"
#include "core/wedge.hpp"

using namespace matchcx;

struct mcx_graph {
  Graph g;
};
struct mcx_complex {
  SimplicialComplex k;
};
struct mcx_betti {
  BettiVector b;
};
struct mcx_wedge {
  WedgeExpression w;
};
struct mcx_trace {
  ReductionTrace t;
};

namespace {

thread_local std::string g_last_error;

mcx_status code_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidParameter: return MCX_E_INVALID;
    case ErrorCode::Precondition: return MCX_E_PRECONDITION;
    case ErrorCode::SizeLimit: return MCX_E_SIZE_LIMIT;
    case ErrorCode::Resource: return MCX_E_RESOURCE;
    case ErrorCode::Parse: return MCX_E_PARSE;
    case ErrorCode::Io: return MCX_E_IO;
    case ErrorCode::Inconsistent: return MCX_E_INCONSISTENT;
  }
  return MCX_E_INTERNAL;
}

template <typename F>
mcx_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return MCX_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MCX_E_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MCX_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

FamilyId family(char c) {
  auto f = parse_family(std::string(1, c));
  if (!f) fail(ErrorCode::InvalidParameter, std::string("unknown family '") + c + "'");
  return *f;
}

std::uint64_t budget_or_default(uint64_t b) { return b ? b : kDefaultFaceBudget; }

template <typename H, typename... A>
void emit(H** out, A&&... args) {
  *out = new H{std::forward<A>(args)...};
}

#define MCX_NULLCHECK(...)                                        \
  do {                                                            \
    const void* ptrs_[] = {__VA_ARGS__};                          \
    for (auto p_ : ptrs_)                                         \
      if (!p_) {                                                  \
        g_last_error = "required pointer argument is NULL";       \
        return MCX_E_NULL;                                        \
      }                                                           \
  } while (0)

nlohmann::json betti_to_json(const BettiVector& b) {
  nlohmann::json j;
  j["reduced_betti"] = nlohmann::json::object();
  for (auto [d, v] : b.reduced) j["reduced_betti"][std::to_string(d)] = v;
  if (b.torsion_free)
    j["torsion_free"] = *b.torsion_free;
  else
    j["torsion_free"] = nullptr;
  j["torsion"] = nlohmann::json::array();
  for (const auto& t : b.torsion) {
    nlohmann::json e;
    e["dimension"] = t.dimension;
    e["factors"] = nlohmann::json::array();
    for (const auto& f : t.factors) e["factors"].push_back(f.get_str());
    e["primes"] = t.primes;
    j["torsion"].push_back(e);
  }
  j["evidence"] = b.evidence;
  return j;
}

BettiVector betti_from_json(const nlohmann::json& j) {
  BettiVector b;
  for (auto& [k, v] : j.at("reduced_betti").items()) b.reduced[std::stoi(k)] = v.get<std::uint64_t>();
  if (!j.at("torsion_free").is_null()) b.torsion_free = j.at("torsion_free").get<bool>();
  for (const auto& e : j.at("torsion")) {
    TorsionEntry t;
    t.dimension = e.at("dimension").get<int>();
    for (const auto& f : e.at("factors")) t.factors.emplace_back(f.get<std::string>());
    t.primes = e.at("primes").get<std::vector<std::uint32_t>>();
    b.torsion.push_back(std::move(t));
  }
  b.evidence = j.value("evidence", "");
  return b;
}

}  // namespace

extern "C" {

const char* mcx_version(void) { return MATCHCX_VERSION_STRING; }

const char* mcx_last_error(void) { return g_last_error.c_str(); }

const char* mcx_status_name(mcx_status s) {
  switch (s) {
    case MCX_OK: return "ok";
    case MCX_E_INVALID: return "invalid-parameter";
    case MCX_E_PRECONDITION: return "precondition";
    case MCX_E_SIZE_LIMIT: return "size-limit";
    case MCX_E_RESOURCE: return "resource-limit";
    case MCX_E_PARSE: return "parse";
    case MCX_E_IO: return "io";
    case MCX_E_INCONSISTENT: return "inconsistent";
    case MCX_E_NULL: return "null-argument";
    case MCX_E_INTERNAL: return "internal";
  }
  return "unknown";
}

void mcx_string_free(char* s) { std::free(s); }

mcx_status mcx_graph_family(char f, int n, mcx_graph** out) {
  MCX_NULLCHECK(out);
  return guard([&] { emit(out, build_family(family(f), n)); });
}

mcx_status mcx_graph_grid(int m, int n, mcx_graph** out) {
  MCX_NULLCHECK(out);
  return guard([&] { emit(out, build_grid(m, n)); });
}

mcx_status mcx_graph_path(int r, mcx_graph** out) {
  MCX_NULLCHECK(out);
  return guard([&] { emit(out, build_path(r)); });
}

mcx_status mcx_graph_cycle(int r, mcx_graph** out) {
  MCX_NULLCHECK(out);
  return guard([&] { emit(out, build_cycle(r)); });
}

mcx_status mcx_graph_parse(const char* text, mcx_graph** out) {
  MCX_NULLCHECK(text, out);
  return guard([&] { emit(out, parse_edge_list(std::string(text))); });
}

mcx_status mcx_graph_read(const char* path, mcx_graph** out) {
  MCX_NULLCHECK(path, out);
  return guard([&] { emit(out, read_edge_list_file(path)); });
}

mcx_status mcx_graph_line(const mcx_graph* g, mcx_graph** out) {
  MCX_NULLCHECK(g, out);
  return guard([&] { emit(out, line_graph(g->g)); });
}

mcx_status mcx_graph_copy(const mcx_graph* g, mcx_graph** out) {
  MCX_NULLCHECK(g, out);
  return guard([&] { emit(out, g->g); });
}

mcx_status mcx_graph_order(const mcx_graph* g, size_t* out) {
  MCX_NULLCHECK(g, out);
  *out = g->g.order();
  return MCX_OK;
}

mcx_status mcx_graph_size(const mcx_graph* g, size_t* out) {
  MCX_NULLCHECK(g, out);
  *out = g->g.size();
  return MCX_OK;
}

mcx_status mcx_graph_edge_list(const mcx_graph* g, char** out) {
  MCX_NULLCHECK(g, out);
  return guard([&] { *out = dup(format_edge_list(g->g)); });
}

void mcx_graph_free(mcx_graph* g) { delete g; }

mcx_status mcx_graph_isomorphic(const mcx_graph* g, const mcx_graph* h, int* found, char** mapping) {
  MCX_NULLCHECK(g, h, found, mapping);
  return guard([&] {
    auto m = are_isomorphic(g->g, h->g);
    *found = m ? 1 : 0;
    *mapping = nullptr;
    if (!m) return;
    std::string text;
    for (const auto& [a, b] : *m) text += a.spelling() + " " + b.spelling() + "\n";
    *mapping = dup(text);
  });
}

mcx_status mcx_reduce(const mcx_graph* g, mcx_trace** out) {
  MCX_NULLCHECK(g, out);
  return guard([&] { emit(out, reduce_pipeline(g->g)); });
}

mcx_status mcx_fold_reduce(const mcx_graph* g, mcx_trace** out) {
  MCX_NULLCHECK(g, out);
  return guard([&] { emit(out, fold_reduce(g->g).second); });
}

mcx_status mcx_trace_contractible(const mcx_trace* t, int* out) {
  MCX_NULLCHECK(t, out);
  *out = t->t.contractible() ? 1 : 0;
  return MCX_OK;
}

mcx_status mcx_trace_steps(const mcx_trace* t, size_t* out) {
  MCX_NULLCHECK(t, out);
  *out = t->t.steps.size();
  return MCX_OK;
}

mcx_status mcx_trace_terminal(const mcx_trace* t, mcx_graph** out) {
  MCX_NULLCHECK(t, out);
  return guard([&] {
    if (t->t.contractible()) fail(ErrorCode::Precondition, "trace ends in a contractible complex");
    emit(out, *t->t.terminal);
  });
}

mcx_status mcx_trace_text(const mcx_trace* t, char** out) {
  MCX_NULLCHECK(t, out);
  return guard([&] { *out = dup(t->t.to_text()); });
}

mcx_status mcx_trace_replay(const mcx_graph* g, const char* text, int* contractible, mcx_graph** terminal) {
  MCX_NULLCHECK(g, text, contractible);
  return guard([&] {
    auto end = replay(g->g, parse_trace(text));
    *contractible = end ? 0 : 1;
    if (terminal) *terminal = end ? new mcx_graph{*end} : nullptr;
  });
}

void mcx_trace_free(mcx_trace* t) { delete t; }

mcx_status mcx_independence_complex(const mcx_graph* g, uint64_t budget, mcx_complex** out) {
  MCX_NULLCHECK(g, out);
  return guard([&] { emit(out, independence_complex(g->g, budget_or_default(budget))); });
}

mcx_status mcx_matching_complex(const mcx_graph* g, uint64_t budget, mcx_complex** out) {
  MCX_NULLCHECK(g, out);
  return guard([&] { emit(out, matching_complex(g->g, budget_or_default(budget))); });
}

mcx_status mcx_complex_dimension(const mcx_complex* k, int* out) {
  MCX_NULLCHECK(k, out);
  *out = k->k.dimension();
  return MCX_OK;
}

mcx_status mcx_complex_facet_count(const mcx_complex* k, size_t* out) {
  MCX_NULLCHECK(k, out);
  *out = k->k.facets().size();
  return MCX_OK;
}

mcx_status mcx_complex_facets(const mcx_complex* k, const char* name, char** out) {
  MCX_NULLCHECK(k, out);
  return guard([&] { *out = dup(format_facets(k->k, name ? name : "complex")); });
}

mcx_status mcx_complex_face_counts(const mcx_complex* k, uint64_t budget, char** out) {
  MCX_NULLCHECK(k, out);
  return guard([&] {
    auto t = face_table(k->k, std::nullopt, budget_or_default(budget));
    *out = dup(nlohmann::json(t.counts()).dump());
  });
}

mcx_status mcx_complex_euler(const mcx_complex* k, uint64_t budget, long long* out) {
  MCX_NULLCHECK(k, out);
  return guard([&] { *out = euler_characteristic_reduced(k->k, budget_or_default(budget)); });
}

mcx_status mcx_complex_boundary_check(const mcx_complex* k, uint64_t budget, int* ok) {
  MCX_NULLCHECK(k, ok);
  return guard([&] { *ok = boundary_squares_to_zero(boundary_matrices(k->k, budget_or_default(budget))) ? 1 : 0; });
}

mcx_status mcx_complex_boundary_text(const mcx_complex* k, uint64_t budget, char** out) {
  MCX_NULLCHECK(k, out);
  return guard([&] {
    auto c = boundary_matrices(k->k, budget_or_default(budget));
    std::string text;
    for (std::size_t d = 0; d < c.boundary.size(); ++d)
      text += format_coordinate(c.boundary[d], std::to_string(d));
    *out = dup(text);
  });
}

void mcx_complex_free(mcx_complex* k) { delete k; }

mcx_status mcx_compute_betti(const mcx_complex* k, mcx_method method, uint32_t prime, uint64_t budget, unsigned jobs,
                     mcx_betti** out) {
  MCX_NULLCHECK(k, out);
  return guard([&] {
    HomologyOptions opt;
    switch (method) {
      case MCX_METHOD_GF2: opt.method = HomologyMethod::Gf2; break;
      case MCX_METHOD_GFP: opt.method = HomologyMethod::ModP; break;
      case MCX_METHOD_RATIONAL: opt.method = HomologyMethod::Rational; break;
      case MCX_METHOD_SNF: opt.method = HomologyMethod::Smith; break;
      case MCX_METHOD_CROSSCHECK: opt.method = HomologyMethod::Crosscheck; break;
      default: fail(ErrorCode::InvalidParameter, "unknown homology method");
    }
    opt.prime = prime ? prime : 3;
    opt.budget = budget_or_default(budget);
    opt.jobs = jobs;
    emit(out, betti_reduced(k->k, opt));
  });
}

mcx_status mcx_betti_get(const mcx_betti* b, int dim, uint64_t* out) {
  MCX_NULLCHECK(b, out);
  *out = b->b.at(dim);
  return MCX_OK;
}

mcx_status mcx_betti_torsion_free(const mcx_betti* b, int* out) {
  MCX_NULLCHECK(b, out);
  *out = b->b.torsion_free ? (*b->b.torsion_free ? 1 : 0) : -1;
  return MCX_OK;
}

mcx_status mcx_betti_json(const mcx_betti* b, char** out) {
  MCX_NULLCHECK(b, out);
  return guard([&] { *out = dup(betti_to_json(b->b).dump()); });
}

mcx_status mcx_betti_parse_json(const char* json, mcx_betti** out) {
  MCX_NULLCHECK(json, out);
  return guard([&] {
    try {
      emit(out, betti_from_json(nlohmann::json::parse(json)));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::Parse, e.what());
    }
  });
}

void mcx_betti_free(mcx_betti* b) { delete b; }

mcx_status mcx_wedge_family(char f, int n, mcx_wedge** out) {
  MCX_NULLCHECK(out);
  return guard([&] { emit(out, homotopy_type(family(f), n)); });
}

mcx_status mcx_wedge_path(int r, mcx_wedge** out) {
  MCX_NULLCHECK(out);
  return guard([&] { emit(out, path_formula(r)); });
}

mcx_status mcx_wedge_cycle(int r, mcx_wedge** out) {
  MCX_NULLCHECK(out);
  return guard([&] { emit(out, cycle_formula(r)); });
}

mcx_status mcx_wedge_parse(const char* text, mcx_wedge** out) {
  MCX_NULLCHECK(text, out);
  return guard([&] { emit(out, WedgeExpression::parse(text)); });
}

mcx_status mcx_wedge_text(const mcx_wedge* w, char** out) {
  MCX_NULLCHECK(w, out);
  return guard([&] { *out = dup(w->w.to_text()); });
}

mcx_status mcx_wedge_json(const mcx_wedge* w, char** out) {
  MCX_NULLCHECK(w, out);
  return guard([&] { *out = dup(w->w.to_json()); });
}

mcx_status mcx_wedge_count(const mcx_wedge* w, int dim, char** out) {
  MCX_NULLCHECK(w, out);
  return guard([&] { *out = dup(w->w.count(dim).get_str()); });
}

mcx_status mcx_wedge_equal(const mcx_wedge* a, const mcx_wedge* b, int* out) {
  MCX_NULLCHECK(a, b, out);
  *out = a->w == b->w ? 1 : 0;
  return MCX_OK;
}

mcx_status mcx_wedge_matches_betti(const mcx_wedge* w, const mcx_betti* b, int* out) {
  MCX_NULLCHECK(w, b, out);
  return guard([&] {
    bool same = w->w.counts().size() == b->b.reduced.size();
    for (const auto& [d, c] : w->w.counts()) same = same && mpz_class(std::to_string(b->b.at(d))) == c;
    *out = same ? 1 : 0;
  });
}

void mcx_wedge_free(mcx_wedge* w) { delete w; }

mcx_status mcx_dimension_range(char f, int n, int* has_range, int* low, int* high) {
  MCX_NULLCHECK(has_range, low, high);
  return guard([&] {
    auto r = dimension_range(family(f), n);
    *has_range = r ? 1 : 0;
    *low = r ? r->low : 0;
    *high = r ? r->high : -1;
  });
}

}  // extern "C"

/* Exercises the shared library through its C header only. */
#include <matchcx/matchcx.h>

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                    \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

#define OK(call) CHECK((call) == MCX_OK)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

static void test_graphs(void) {
  mcx_graph *g = NULL, *c = NULL, *l = NULL, *copy = NULL;
  size_t n = 0;
  char* text = NULL;
  char* mapping = NULL;
  int found = -1;

  OK(mcx_graph_family('G', 3, &g));
  OK(mcx_graph_order(g, &n));
  CHECK(n == 12);
  OK(mcx_graph_copy(g, &copy));
  OK(mcx_graph_edge_list(copy, &text));
  CHECK(contains(text, "u1 "));
  mcx_string_free(text);

  OK(mcx_graph_grid(3, 3, &c));
  OK(mcx_graph_line(c, &l));
  OK(mcx_graph_isomorphic(l, g, &found, &mapping));
  CHECK(found == 1);
  CHECK(mapping != NULL);
  mcx_string_free(mapping);
  mcx_graph_free(c);
  mcx_graph_free(l);

  OK(mcx_graph_cycle(6, &c));
  OK(mcx_graph_path(6, &l));
  OK(mcx_graph_isomorphic(c, l, &found, &mapping));
  CHECK(found == 0);
  CHECK(mapping == NULL);
  mcx_graph_free(c);
  mcx_graph_free(l);

  CHECK(mcx_graph_family('Z', 3, &c) == MCX_E_INVALID);
  CHECK(strlen(mcx_last_error()) > 0);
  CHECK(mcx_graph_family('g', 0, &c) == MCX_E_INVALID);
  CHECK(mcx_graph_cycle(2, &c) == MCX_E_INVALID);
  CHECK(mcx_graph_parse("1 2\n3\n", &c) == MCX_E_PARSE);
  CHECK(mcx_graph_read("/nonexistent/x.edges", &c) == MCX_E_IO);
  CHECK(mcx_graph_order(NULL, &n) == MCX_E_NULL);
  CHECK(mcx_graph_family('G', 2, NULL) == MCX_E_NULL);

  OK(mcx_graph_path(65, &c));
  CHECK(mcx_graph_isomorphic(c, c, &found, &mapping) == MCX_E_SIZE_LIMIT);
  mcx_graph_free(c);

  mcx_graph_free(g);
  mcx_graph_free(copy);
  mcx_graph_free(NULL);
}

static void test_homology(void) {
  mcx_graph* g = NULL;
  mcx_complex* k = NULL;
  mcx_betti *b = NULL, *back = NULL;
  uint64_t v = 0;
  int tf = -2, ok = 0, dim = 0;
  long long chi = 0;
  char* json = NULL;

  OK(mcx_graph_grid(3, 3, &g));
  OK(mcx_matching_complex(g, 0, &k));
  OK(mcx_complex_dimension(k, &dim));
  CHECK(dim == 3);
  OK(mcx_complex_euler(k, 0, &chi));
  CHECK(chi == 5);
  OK(mcx_complex_boundary_check(k, 0, &ok));
  CHECK(ok == 1);
  OK(mcx_compute_betti(k, MCX_METHOD_CROSSCHECK, 3, 0, 2, &b));
  OK(mcx_betti_get(b, 2, &v));
  CHECK(v == 5);
  OK(mcx_betti_get(b, 1, &v));
  CHECK(v == 0);
  OK(mcx_betti_torsion_free(b, &tf));
  CHECK(tf == 1);
  OK(mcx_betti_json(b, &json));
  CHECK(contains(json, "\"reduced_betti\":{\"2\":5}"));
  CHECK(contains(json, "\"evidence\":\"gf2,gf3,rational,snf\""));
  OK(mcx_betti_parse_json(json, &back));
  OK(mcx_betti_get(back, 2, &v));
  CHECK(v == 5);
  mcx_string_free(json);
  mcx_betti_free(back);
  mcx_betti_free(b);

  OK(mcx_compute_betti(k, MCX_METHOD_GF2, 0, 0, 1, &b));
  OK(mcx_betti_torsion_free(b, &tf));
  CHECK(tf == -1);
  mcx_betti_free(b);

  CHECK(mcx_compute_betti(k, MCX_METHOD_GFP, 4, 0, 1, &b) == MCX_E_INVALID);
  CHECK(mcx_compute_betti(k, MCX_METHOD_CROSSCHECK, 3, 10, 1, &b) == MCX_E_RESOURCE);
  CHECK(mcx_betti_parse_json("{not json", &b) == MCX_E_PARSE);
  mcx_complex_free(k);
  mcx_graph_free(g);

  OK(mcx_graph_family('G', 5, &g));
  CHECK(mcx_independence_complex(g, 5, &k) == MCX_E_RESOURCE);
  mcx_graph_free(g);
}

static void test_reduction(void) {
  mcx_graph *g = NULL, *t = NULL;
  mcx_trace* tr = NULL;
  int c = -1;
  size_t steps = 0;
  char* text = NULL;

  OK(mcx_graph_family('M', 1, &g));
  OK(mcx_reduce(g, &tr));
  OK(mcx_trace_contractible(tr, &c));
  CHECK(c == 1);
  OK(mcx_trace_steps(tr, &steps));
  CHECK(steps == 3);
  CHECK(mcx_trace_terminal(tr, &t) == MCX_E_PRECONDITION);
  OK(mcx_trace_text(tr, &text));
  CHECK(contains(text, "FOLD m2 remove=x1"));
  OK(mcx_trace_replay(g, text, &c, NULL));
  CHECK(c == 1);
  CHECK(mcx_trace_replay(g, "FOLD x1 remove=m2\n", &c, NULL) == MCX_E_INCONSISTENT);
  mcx_string_free(text);
  mcx_trace_free(tr);
  mcx_graph_free(g);

  OK(mcx_graph_cycle(6, &g));
  OK(mcx_fold_reduce(g, &tr));
  OK(mcx_trace_terminal(tr, &t));
  OK(mcx_trace_contractible(tr, &c));
  CHECK(c == 0);
  mcx_graph_free(t);
  mcx_trace_free(tr);
  mcx_graph_free(g);
}

static void test_wedges(void) {
  mcx_wedge *w = NULL, *p = NULL;
  char* s = NULL;
  int eq = 0, has = -1, lo = 0, hi = 0;

  OK(mcx_wedge_family('G', 5, &w));
  OK(mcx_wedge_text(w, &s));
  CHECK(strcmp(s, "∨_16 S^4") == 0);
  mcx_string_free(s);
  OK(mcx_wedge_parse("∨_16 S^4", &p));
  OK(mcx_wedge_equal(w, p, &eq));
  CHECK(eq == 1);
  mcx_wedge_free(p);
  mcx_wedge_free(w);

  OK(mcx_wedge_family('G', 9, &w));
  OK(mcx_wedge_json(w, &s));
  CHECK(contains(s, "\"spheres\":{"));
  mcx_string_free(s);
  mcx_wedge_free(w);

  OK(mcx_dimension_range('F', 1500, &has, &lo, &hi));
  CHECK(has == 1);
  OK(mcx_wedge_family('F', 1500, &w));
  OK(mcx_wedge_count(w, lo, &s));
  CHECK(strlen(s) > 30);
  mcx_string_free(s);
  mcx_wedge_free(w);

  OK(mcx_wedge_path(4, &w));
  OK(mcx_wedge_text(w, &s));
  CHECK(strcmp(s, "pt") == 0);
  mcx_string_free(s);
  mcx_wedge_free(w);
  CHECK(mcx_wedge_cycle(2, &w) == MCX_E_INVALID);
  CHECK(mcx_wedge_parse("S^", &w) == MCX_E_PARSE || mcx_wedge_parse("S^", &w) == MCX_E_INVALID);

  OK(mcx_dimension_range('G', 9, &has, &lo, &hi));
  CHECK(has == 1 && lo == 8 && hi == 9);
  OK(mcx_dimension_range('M', 1, &has, &lo, &hi));
  CHECK(has == 0);
}

static void test_match_wedge_betti(void) {
  mcx_graph* g = NULL;
  mcx_complex* k = NULL;
  mcx_betti* b = NULL;
  mcx_wedge* w = NULL;
  int m = 0;
  OK(mcx_graph_cycle(9, &g));
  OK(mcx_independence_complex(g, 0, &k));
  OK(mcx_compute_betti(k, MCX_METHOD_SNF, 0, 0, 1, &b));
  OK(mcx_wedge_cycle(9, &w));
  OK(mcx_wedge_matches_betti(w, b, &m));
  CHECK(m == 1);
  mcx_wedge_free(w);
  OK(mcx_wedge_cycle(10, &w));
  OK(mcx_wedge_matches_betti(w, b, &m));
  CHECK(m == 0);
  mcx_wedge_free(w);
  mcx_betti_free(b);
  mcx_complex_free(k);
  mcx_graph_free(g);
}

int main(void) {
  CHECK(strlen(mcx_version()) > 0);
  CHECK(strcmp(mcx_status_name(MCX_E_RESOURCE), "") != 0);
  test_graphs();
  test_homology();
  test_reduction();
  test_wedges();
  test_match_wedge_betti();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}

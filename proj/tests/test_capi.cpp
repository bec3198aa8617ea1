// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "dmt.h"

namespace {

std::vector<uint64_t> fvec(const dmt_complex* k) {
  size_t n = 0;
  REQUIRE(dmt_complex_f_vector(k, nullptr, 0, &n) == DMT_OK);
  std::vector<uint64_t> f(n);
  REQUIRE(dmt_complex_f_vector(k, f.data(), n, &n) == DMT_OK);
  return f;
}

dmt_complex* from_text(const char* text) {
  dmt_complex* k = nullptr;
  REQUIRE(dmt_complex_from_text(text, &k) == DMT_OK);
  return k;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  dmt_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(dmt_version()) > 0);
  CHECK(std::string(dmt_status_name(DMT_ERR_PARSE)) == "parse error");
}

TEST_CASE("parse, query, serialize") {
  dmt_complex* k = from_text("1 2 3\n3 4\n");
  CHECK(dmt_complex_dimension(k) == 2);
  CHECK(fvec(k) == std::vector<uint64_t>{4, 4, 1});
  char* text = nullptr;
  REQUIRE(dmt_complex_to_text(k, &text) == DMT_OK);
  dmt_complex* again = from_text(text);
  dmt_string_free(text);
  int eq = 0;
  CHECK(dmt_complex_equal(k, again, &eq) == DMT_OK);
  CHECK(eq == 1);
  dmt_complex_free(again);
  dmt_complex_free(k);
  CHECK(dmt_complex_dimension(nullptr) == -1);
}

TEST_CASE("errors carry status codes and messages") {
  dmt_complex* k = nullptr;
  CHECK(dmt_complex_from_text("1 2\n1 q\n", &k) == DMT_ERR_PARSE);
  CHECK(k == nullptr);
  CHECK(std::string(dmt_last_error()).find("line 2") != std::string::npos);
  CHECK(dmt_complex_from_text("1 1 2\n", &k) == DMT_ERR_MALFORMED_FACE);
  CHECK(dmt_complex_read("/nonexistent/x.fac", &k) == DMT_ERR_IO);
  CHECK(dmt_build("no_such_thing", 2, &k) == DMT_ERR_INVALID_ARGUMENT);
  CHECK(dmt_build("sigma", 1, &k) == DMT_ERR_INVALID_ARGUMENT);
  CHECK(dmt_complex_to_text(nullptr, nullptr) == DMT_ERR_INVALID_ARGUMENT);

  dmt_complex* bd = nullptr;
  REQUIRE(dmt_build("simplex_boundary", 3, &bd) == DMT_OK);
  CHECK(dmt_contract_edge(bd, 1, 2, &k) == DMT_ERR_LINK_CONDITION);
  const int64_t from[] = {2}, to[] = {1};
  CHECK(dmt_apply_map(bd, from, to, 1, &k) == DMT_ERR_QUOTIENT_UNSAFE);
  const int64_t missing[] = {1, 9};
  CHECK(dmt_link(bd, missing, 2, &k) == DMT_ERR_FACE_NOT_FOUND);
  char* json = nullptr;
  CHECK(dmt_homology(bd, 0, 5, 1, &json) == DMT_ERR_SIZE_LIMIT);
  CHECK(dmt_spectrum(bd, "sideways", 10, 1, 1, 0, "json", &json) == DMT_ERR_INVALID_ARGUMENT);
  dmt_complex_free(bd);
}

TEST_CASE("named builds") {
  struct Expect {
    const char* name;
    int dim;
    std::vector<uint64_t> f;
  };
  const Expect cases[] = {
      {"simplex", 3, {4, 6, 4, 1}},
      {"cross_polytope", 3, {6, 12, 8}},
      {"sigma", 2, {7, 19, 13}},
      {"two_optima", 0, {106, 596, 1064, 573}},
      {"sigma2_sigma3prime", 0, {25, 128, 218, 114}},
      {"dunce_hat", 0, {8, 24, 17}},
      {"poincare", 0, {16, 106, 180, 90}},
  };
  for (const auto& c : cases) {
    dmt_complex* k = nullptr;
    REQUIRE(dmt_build(c.name, c.dim, &k) == DMT_OK);
    CHECK(fvec(k) == c.f);
    dmt_complex_free(k);
  }
}

TEST_CASE("transformations") {
  dmt_complex* bd = nullptr;
  REQUIRE(dmt_build("simplex_boundary", 3, &bd) == DMT_OK);
  dmt_complex* out = nullptr;
  const int64_t v1[] = {1};
  REQUIRE(dmt_link(bd, v1, 1, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{3, 3});
  dmt_complex_free(out);
  REQUIRE(dmt_cone(bd, 0, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{5, 10, 10, 4});
  dmt_complex* b = nullptr;
  REQUIRE(dmt_boundary(out, &b) == DMT_OK);
  int eq = 0;
  REQUIRE(dmt_complex_equal(b, bd, &eq) == DMT_OK);
  CHECK(eq == 1);
  dmt_complex_free(b);
  dmt_complex_free(out);
  REQUIRE(dmt_barycentric_subdivision(bd, 1, &out) == DMT_OK);
  CHECK(fvec(out)[2] == 24);
  dmt_complex_free(out);
  REQUIRE(dmt_suspension(bd, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{6, 14, 16, 8});
  dmt_complex_free(out);
  REQUIRE(dmt_delete_vertex(bd, 4, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{3, 3, 1});
  dmt_complex_free(out);
  REQUIRE(dmt_closed_star(bd, v1, 1, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{4, 6, 3});
  dmt_complex* nb = nullptr;
  REQUIRE(dmt_simplicial_neighborhood(bd, out, &nb) == DMT_OK);
  CHECK(fvec(nb) == std::vector<uint64_t>{4, 6, 4});
  dmt_complex_free(nb);
  dmt_complex_free(out);
  const int64_t tri[] = {1, 2, 3};
  REQUIRE(dmt_stellar_subdivision(bd, tri, 3, 0, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{5, 9, 6});
  dmt_complex_free(out);
  REQUIRE(dmt_stack_facet(bd, tri, 3, 10, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{5, 9, 6});
  dmt_complex_free(out);
  dmt_complex_free(bd);

  dmt_complex* edge = from_text("1 2\n");
  REQUIRE(dmt_one_point_suspension(edge, 1, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{3, 3, 1});
  dmt_complex_free(out);
  REQUIRE(dmt_product_with_interval(edge, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{4, 5, 2});
  dmt_complex_free(out);
  dmt_complex_free(edge);

  dmt_complex* path = from_text("1 2\n2 3\n");
  REQUIRE(dmt_contract_edge(path, 1, 2, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{2, 1});
  dmt_complex_free(out);
  const int64_t from[] = {3}, to[] = {1};
  dmt_complex* cycle = from_text("1 2\n2 3\n3 4\n1 4\n");
  REQUIRE(dmt_apply_map(cycle, from, to, 1, &out) == DMT_OK);
  CHECK(fvec(out) == std::vector<uint64_t>{3, 2});
  dmt_complex_free(out);
  dmt_complex_free(cycle);
  dmt_complex_free(path);
}

TEST_CASE("morse engine and verification") {
  dmt_complex* s = nullptr;
  REQUIRE(dmt_build("sigma", 3, &s) == DMT_OK);
  size_t count = 0;
  char* pairs = nullptr;
  REQUIRE(dmt_free_faces(s, &count, &pairs) == DMT_OK);
  CHECK(count == 1);
  CHECK(take(pairs).rfind("{1,2,3} < ", 0) == 0);

  uint64_t v[8];
  size_t len = 0;
  int ok = 0;
  REQUIRE(dmt_run_strategy(s, "random-lex-last", 5, v, 8, &len, &ok) == DMT_OK);
  CHECK(len == 4);
  CHECK(ok == 1);

  char* report = nullptr;
  REQUIRE(dmt_spectrum(s, "random", 50, 3, 2, 1, "csv", &report) == DMT_OK);
  const std::string csv = take(report);
  CHECK(csv.rfind("strategy,runs,master_seed,c0,c1,c2,c3,count", 0) == 0);
  REQUIRE(dmt_spectrum(s, "random", 50, 3, 1, 0, "json", &report) == DMT_OK);
  CHECK(take(report).find("\"runs\": 50") != std::string::npos);

  char* result = nullptr;
  REQUIRE(dmt_oracle(s, "collapsible", 1, &result) == DMT_OK);
  CHECK(take(result) == "unknown");
  CHECK(dmt_oracle(s, "shellable", 1, &result) == DMT_ERR_INVALID_ARGUMENT);
  dmt_complex_free(s);

  dmt_complex* p = nullptr;
  REQUIRE(dmt_build("poincare", 0, &p) == DMT_OK);
  char* json = nullptr;
  REQUIRE(dmt_homology(p, 0, 0, 1, &json) == DMT_OK);
  CHECK(take(json).find("\"ranks\": [\n    1,\n    0,\n    0,\n    1\n  ]") != std::string::npos);
  const uint64_t good[] = {1, 2, 2, 1}, bad[] = {1, 0, 0, 0};
  REQUIRE(dmt_morse_check(p, good, 4, &ok, nullptr) == DMT_OK);
  CHECK(ok == 1);
  REQUIRE(dmt_morse_check(p, bad, 4, &ok, &json) == DMT_OK);
  CHECK(ok == 0);
  CHECK(take(json).find("\"euler_ok\": false") != std::string::npos);
  dmt_complex_free(p);

  dmt_complex* tri = from_text("1 2 3\n");
  REQUIRE(dmt_sd_growth(tri, 1, "random", 5, 1, 1000, 1, &json) == DMT_OK);
  CHECK(take(json).find("\"level\": 1") != std::string::npos);
  CHECK(dmt_sd_growth(tri, 3, "random", 5, 1, 100, 1, &json) == DMT_ERR_SIZE_LIMIT);
  dmt_complex_free(tri);
}

TEST_CASE("file round trip") {
  dmt_complex* k = nullptr;
  REQUIRE(dmt_build("two_optima", 0, &k) == DMT_OK);
  const std::string path = "capi_roundtrip.fac";
  REQUIRE(dmt_complex_write(k, path.c_str()) == DMT_OK);
  dmt_complex* back = nullptr;
  REQUIRE(dmt_complex_read(path.c_str(), &back) == DMT_OK);
  int eq = 0;
  REQUIRE(dmt_complex_equal(k, back, &eq) == DMT_OK);
  CHECK(eq == 1);
  std::remove(path.c_str());
  dmt_complex_free(back);
  dmt_complex_free(k);
}

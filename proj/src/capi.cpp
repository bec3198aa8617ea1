#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "dmt.h"
#include "dmt/complex_ops.hpp"
#include "dmt/constructions.hpp"
#include "dmt/errors.hpp"
#include "dmt/facet_io.hpp"
#include "dmt/morse.hpp"
#include "dmt/verify.hpp"
#include "dmt/version.hpp"

struct dmt_complex {
  dmt::SimplicialComplex k;
};

namespace {

thread_local std::string last_error;

dmt_status set_error(dmt_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class F>
dmt_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return DMT_OK;
  } catch (const dmt::Error& e) {
    return set_error(static_cast<dmt_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(DMT_ERR_SIZE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return set_error(DMT_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(DMT_ERR_INTERNAL, "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool cond, const char* what) {
  if (!cond) dmt::fail(dmt::ErrorCode::InvalidArgument, what);
}

const dmt::SimplicialComplex& get(const dmt_complex* k) {
  require(k != nullptr, "null complex handle");
  return k->k;
}

void emit(dmt::SimplicialComplex c, dmt_complex** out) {
  require(out != nullptr, "null output pointer");
  *out = new dmt_complex{std::move(c)};
}

dmt::Face face_arg(const int64_t* vertices, size_t n) {
  require(vertices != nullptr || n == 0, "null face");
  return dmt::Face(std::vector<dmt::Vertex>(vertices, vertices + n));
}

std::optional<dmt::Vertex> label_arg(int64_t v) {
  if (v == 0) return std::nullopt;
  return v;
}

dmt::Strategy strategy_arg(const char* name) {
  require(name != nullptr, "null strategy");
  auto s = dmt::parse_strategy(name);
  if (!s) dmt::fail(dmt::ErrorCode::InvalidArgument, std::string("unknown strategy: ") + name);
  return *s;
}

nlohmann::json fvec_json(const dmt::FVector& f) { return f.counts; }

}  // namespace

extern "C" {

const char* dmt_version(void) { return dmt::kVersion; }

const char* dmt_last_error(void) { return last_error.c_str(); }

const char* dmt_status_name(dmt_status status) {
  switch (status) {
    case DMT_OK: return "ok";
    case DMT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DMT_ERR_PARSE: return "parse error";
    case DMT_ERR_MALFORMED_FACE: return "malformed face";
    case DMT_ERR_FACE_NOT_FOUND: return "face not found";
    case DMT_ERR_QUOTIENT_UNSAFE: return "quotient unsafe";
    case DMT_ERR_LINK_CONDITION: return "link condition violated";
    case DMT_ERR_SIZE_LIMIT: return "size limit exceeded";
    case DMT_ERR_CONSISTENCY: return "consistency check failed";
    case DMT_ERR_IO: return "i/o error";
    case DMT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void dmt_string_free(char* s) { std::free(s); }

void dmt_complex_free(dmt_complex* k) { delete k; }

dmt_status dmt_complex_from_text(const char* facet_text, dmt_complex** out) {
  return guarded([&] {
    require(facet_text != nullptr, "null text");
    auto facets = dmt::parse_facets(std::string(facet_text));
    emit(dmt::SimplicialComplex::from_facets(facets), out);
  });
}

dmt_status dmt_complex_read(const char* path, dmt_complex** out) {
  return guarded([&] {
    require(path != nullptr, "null path");
    emit(dmt::read_complex(path), out);
  });
}

dmt_status dmt_complex_write(const dmt_complex* k, const char* path) {
  return guarded([&] {
    require(path != nullptr, "null path");
    dmt::write_complex(path, get(k));
  });
}

dmt_status dmt_complex_to_text(const dmt_complex* k, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(dmt::to_facet_text(get(k)));
  });
}

int dmt_complex_dimension(const dmt_complex* k) { return k ? k->k.dimension() : -1; }

dmt_status dmt_complex_f_vector(const dmt_complex* k, uint64_t* counts, size_t capacity,
                                size_t* length) {
  return guarded([&] {
    const auto f = get(k).f_vector();
    if (length) *length = f.counts.size();
    for (size_t i = 0; i < f.counts.size() && i < capacity; ++i) counts[i] = f.counts[i];
  });
}

dmt_status dmt_complex_equal(const dmt_complex* a, const dmt_complex* b, int* equal) {
  return guarded([&] {
    require(equal != nullptr, "null output pointer");
    *equal = get(a) == get(b) ? 1 : 0;
  });
}

dmt_status dmt_build(const char* name, int dim, dmt_complex** out) {
  return guarded([&] {
    require(name != nullptr, "null name");
    const std::string n = name;
    auto need_dim = [&](int lo) {
      if (dim < lo)
        dmt::fail(dmt::ErrorCode::InvalidArgument,
                  n + " needs a dimension of at least " + std::to_string(lo));
    };
    if (n == "simplex") {
      need_dim(0);
      emit(dmt::simplex(dim), out);
    } else if (n == "simplex_boundary") {
      need_dim(1);
      emit(dmt::simplex_boundary(dim), out);
    } else if (n == "cross_polytope") {
      need_dim(1);
      emit(dmt::cross_polytope(dim), out);
    } else if (n == "sigma") {
      need_dim(2);
      emit(dmt::build_sigma(dim), out);
    } else if (n == "E") {
      need_dim(2);
      emit(dmt::build_E(dim), out);
    } else if (n == "two_optima") {
      emit(dmt::build_two_optima(), out);
    } else if (n == "sigma2_sigma3prime") {
      emit(dmt::build_sigma2_sigma3prime(), out);
    } else if (n == "dunce_hat") {
      emit(dmt::dunce_hat(), out);
    } else if (n == "poincare") {
      emit(dmt::poincare(), out);
    } else {
      dmt::fail(dmt::ErrorCode::InvalidArgument, "unknown construction: " + n);
    }
  });
}

dmt_status dmt_pipeline_5manifold(const dmt_complex* sphere, char** report_json,
                                  dmt_complex** collar, dmt_complex** boundary) {
  return guarded([&] {
    const dmt::SimplicialComplex input = sphere ? sphere->k : dmt::poincare();
    dmt::PipelineResult r = dmt::pipeline_5manifold(input);
    if (report_json) {
      nlohmann::json stages = nlohmann::json::array();
      for (const auto& s : r.stages) {
        nlohmann::json j = {{"stage", s.index},
                            {"name", s.name},
                            {"f_vector", fvec_json(s.complex.f_vector())}};
        if (!s.expected.counts.empty()) j["expected"] = fvec_json(s.expected);
        if (!s.notes.empty()) j["notes"] = s.notes;
        stages.push_back(std::move(j));
      }
      nlohmann::json doc = {{"version", dmt::kVersion},
                            {"stages", std::move(stages)},
                            {"boundary_f_vector", fvec_json(r.boundary.f_vector())}};
      *report_json = dup_string(doc.dump(2) + "\n");
    }
    if (collar) emit(std::move(r.stages.back().complex), collar);
    if (boundary) emit(std::move(r.boundary), boundary);
  });
}

dmt_status dmt_barycentric_subdivision(const dmt_complex* k, int iterations, dmt_complex** out) {
  return guarded([&] {
    require(iterations >= 1, "iterations must be at least 1");
    emit(dmt::barycentric_subdivision(get(k), iterations), out);
  });
}

dmt_status dmt_cone(const dmt_complex* k, int64_t apex, dmt_complex** out) {
  return guarded([&] { emit(dmt::cone(get(k), label_arg(apex)), out); });
}

dmt_status dmt_suspension(const dmt_complex* k, dmt_complex** out) {
  return guarded([&] { emit(dmt::suspension(get(k)), out); });
}

dmt_status dmt_one_point_suspension(const dmt_complex* k, int64_t v, dmt_complex** out) {
  return guarded([&] { emit(dmt::one_point_suspension(get(k), v), out); });
}

dmt_status dmt_product_with_interval(const dmt_complex* k, dmt_complex** out) {
  return guarded([&] { emit(dmt::product_with_interval(get(k)), out); });
}

dmt_status dmt_stellar_subdivision(const dmt_complex* k, const int64_t* face, size_t n,
                                   int64_t fresh, dmt_complex** out) {
  return guarded([&] {
    emit(dmt::stellar_subdivision(get(k), face_arg(face, n), label_arg(fresh)), out);
  });
}

dmt_status dmt_stack_facet(const dmt_complex* k, const int64_t* facet, size_t n, int64_t fresh,
                           dmt_complex** out) {
  return guarded(
      [&] { emit(dmt::stack_facet(get(k), face_arg(facet, n), label_arg(fresh)), out); });
}

dmt_status dmt_link(const dmt_complex* k, const int64_t* face, size_t n, dmt_complex** out) {
  return guarded([&] { emit(dmt::link_of(get(k), face_arg(face, n)), out); });
}

dmt_status dmt_closed_star(const dmt_complex* k, const int64_t* face, size_t n,
                           dmt_complex** out) {
  return guarded([&] { emit(dmt::closed_star_of(get(k), face_arg(face, n)), out); });
}

dmt_status dmt_delete_vertex(const dmt_complex* k, int64_t v, dmt_complex** out) {
  return guarded([&] { emit(dmt::delete_vertex(get(k), v), out); });
}

dmt_status dmt_boundary(const dmt_complex* k, dmt_complex** out) {
  return guarded([&] { emit(dmt::boundary_complex(get(k)), out); });
}

dmt_status dmt_apply_map(const dmt_complex* k, const int64_t* from, const int64_t* to, size_t n,
                         dmt_complex** out) {
  return guarded([&] {
    require(n == 0 || (from && to), "null map arrays");
    dmt::VertexMap m;
    for (size_t i = 0; i < n; ++i) {
      require(from[i] > 0 && to[i] > 0, "map entries must be positive vertex ids");
      m[from[i]] = to[i];
    }
    emit(dmt::apply_map(get(k), m), out);
  });
}

dmt_status dmt_contract_edge(const dmt_complex* k, int64_t keep, int64_t remove,
                             dmt_complex** out) {
  return guarded([&] { emit(dmt::contract_edge(get(k), keep, remove), out); });
}

dmt_status dmt_simplicial_neighborhood(const dmt_complex* k, const dmt_complex* sub,
                                       dmt_complex** out) {
  return guarded([&] { emit(dmt::simplicial_neighborhood(get(k), get(sub)), out); });
}

dmt_status dmt_run_strategy(const dmt_complex* k, const char* strategy, uint64_t seed,
                            uint64_t* vector, size_t capacity, size_t* length, int* trace_ok) {
  return guarded([&] {
    const auto& c = get(k);
    dmt::RunResult r = dmt::run_strategy(c, strategy_arg(strategy), seed);
    if (length) *length = r.vector.size();
    for (size_t i = 0; i < r.vector.size() && i < capacity; ++i) vector[i] = r.vector[i];
    if (trace_ok) *trace_ok = dmt::check_monotone_trace(c, r.trace).ok() ? 1 : 0;
  });
}

dmt_status dmt_spectrum(const dmt_complex* k, const char* strategy, uint64_t runs,
                        uint64_t master_seed, unsigned workers, int check_traces,
                        const char* format, char** report) {
  return guarded([&] {
    require(report != nullptr, "null output pointer");
    const std::string fmt = format ? format : "json";
    require(fmt == "json" || fmt == "csv" || fmt == "text", "format must be json, csv or text");
    dmt::SpectrumOptions opt;
    opt.workers = workers;
    opt.check_traces = check_traces != 0;
    const auto r = dmt::spectrum(get(k), strategy_arg(strategy), runs, master_seed, opt);
    if (opt.check_traces && r.trace_violations > 0)
      dmt::fail(dmt::ErrorCode::Consistency,
                std::to_string(r.trace_violations) + " traces violate the monotone axioms");
    *report = dup_string(fmt == "json"  ? dmt::report_json(r)
                         : fmt == "csv" ? dmt::report_csv(r)
                                        : dmt::report_text(r));
  });
}

dmt_status dmt_sd_growth(const dmt_complex* k, int max_level, const char* strategy, uint64_t runs,
                         uint64_t master_seed, uint64_t size_limit, unsigned workers,
                         char** report_json) {
  return guarded([&] {
    require(report_json != nullptr, "null output pointer");
    require(max_level >= 0, "negative level");
    dmt::SpectrumOptions opt;
    opt.workers = workers;
    const auto r = dmt::sd_growth_experiment(get(k), max_level, strategy_arg(strategy), runs,
                                             master_seed, size_limit, opt);
    *report_json = dup_string(dmt::growth_json(r));
  });
}

dmt_status dmt_free_faces(const dmt_complex* k, size_t* count, char** pairs_text) {
  return guarded([&] {
    const auto pairs = dmt::free_faces(get(k));
    if (count) *count = pairs.size();
    if (pairs_text) {
      std::string s;
      for (const auto& p : pairs) s += p.sigma.to_string() + " < " + p.tau.to_string() + "\n";
      *pairs_text = dup_string(s);
    }
  });
}

dmt_status dmt_homology(const dmt_complex* k, uint64_t prime, uint64_t size_limit, int reduce,
                        char** json) {
  return guarded([&] {
    require(json != nullptr, "null output pointer");
    dmt::HomologyOptions opt;
    opt.prime = prime;
    if (size_limit) opt.size_limit = size_limit;
    opt.reduce = reduce != 0;
    const auto b = dmt::betti_numbers(get(k), opt);
    nlohmann::json doc = {{"version", dmt::kVersion},
                          {"field", prime ? "GF(" + std::to_string(prime) + ")" : "Z"},
                          {"ranks", b.ranks},
                          {"euler_characteristic", b.euler_characteristic()}};
    if (!prime) doc["torsion"] = b.torsion;
    *json = dup_string(doc.dump(2) + "\n");
  });
}

dmt_status dmt_morse_check(const dmt_complex* k, const uint64_t* vector, size_t n, int* ok,
                           char** json) {
  return guarded([&] {
    require(vector != nullptr || n == 0, "null vector");
    const dmt::MorseVector v(vector, vector + n);
    const auto r = dmt::check_morse_consistency(get(k), v);
    if (ok) *ok = r.ok() ? 1 : 0;
    if (json) {
      nlohmann::json doc = {{"vector", v},
                            {"euler_ok", r.euler_ok},
                            {"ok", r.ok()},
                            {"messages", r.messages}};
      doc["inequalities_ok"] =
          r.inequalities_ok ? nlohmann::json(*r.inequalities_ok) : nlohmann::json(nullptr);
      *json = dup_string(doc.dump(2) + "\n");
    }
  });
}

dmt_status dmt_oracle(const dmt_complex* k, const char* kind, uint64_t node_budget,
                      char** result) {
  return guarded([&] {
    require(kind != nullptr && result != nullptr, "null argument");
    const std::string w = kind;
    dmt::OracleResult r;
    if (w == "collapsible")
      r = dmt::exhaustive_collapsible(get(k), node_budget);
    else if (w == "nonevasive")
      r = dmt::exhaustive_nonevasive(get(k), node_budget);
    else
      dmt::fail(dmt::ErrorCode::InvalidArgument, "oracle kind must be collapsible or nonevasive");
    *result = dup_string(dmt::to_string(r.decision));
  });
}

}  // extern "C"

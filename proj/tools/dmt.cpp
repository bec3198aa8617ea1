// dmt: command-line front end over the C API in libdmt.
//
// Exit codes: 0 success, 1 usage or runtime error, 2 malformed input,
// 3 failed consistency or verification check.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dmt.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCheck = 3;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(dmt_status s) {
  switch (s) {
    case DMT_OK: return kExitOk;
    case DMT_ERR_PARSE:
    case DMT_ERR_MALFORMED_FACE: return kExitParse;
    case DMT_ERR_CONSISTENCY: return kExitCheck;
    default: return kExitUsage;
  }
}

void check(dmt_status s) {
  if (s != DMT_OK)
    throw Failure{exit_code_for(s), std::string(dmt_status_name(s)) + ": " + dmt_last_error()};
}

struct ComplexDeleter {
  void operator()(dmt_complex* k) const { dmt_complex_free(k); }
};
using Complex = std::unique_ptr<dmt_complex, ComplexDeleter>;

struct StringDeleter {
  void operator()(char* s) const { dmt_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

Complex load(const std::string& path) {
  dmt_complex* k = nullptr;
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    check(dmt_complex_from_text(text.c_str(), &k));
  } else {
    check(dmt_complex_read(path.c_str(), &k));
  }
  return Complex(k);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{kExitUsage, "cannot open " + path + " for writing"};
  out << text;
  if (!out) throw Failure{kExitUsage, "write to " + path + " failed"};
}

void write_complex(const std::string& path, const dmt_complex* k) {
  if (path.empty() || path == "-") {
    char* text = nullptr;
    check(dmt_complex_to_text(k, &text));
    OwnedString owned(text);
    std::cout << text;
  } else {
    check(dmt_complex_write(k, path.c_str()));
  }
}

std::vector<uint64_t> f_vector(const dmt_complex* k) {
  size_t n = 0;
  check(dmt_complex_f_vector(k, nullptr, 0, &n));
  std::vector<uint64_t> f(n);
  check(dmt_complex_f_vector(k, f.data(), f.size(), &n));
  return f;
}

std::string format_counts(const std::vector<uint64_t>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Integers separated by whitespace or commas.
template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    if (*p == ' ' || *p == ',' || *p == '\t') {
      ++p;
      continue;
    }
    T value{};
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || next == p)
      throw Failure{kExitUsage, std::string("cannot read ") + what + " '" + text + "'"};
    out.push_back(value);
    p = next;
  }
  return out;
}

std::uint64_t env_size_limit() {
  const char* s = std::getenv("DMT_SIZE_LIMIT");
  if (!s || !*s) return 0;
  auto v = parse_list<std::uint64_t>(s, "DMT_SIZE_LIMIT");
  if (v.size() != 1) throw Failure{kExitUsage, "DMT_SIZE_LIMIT must be a single integer"};
  return v[0];
}

struct BuildArgs {
  std::string name;
  int dim = -1;
  std::string output;
  std::string boundary_output;
  std::string report;
  std::string sphere;
};

int cmd_build(const BuildArgs& a) {
  if (a.name == "pipeline_5manifold") {
    Complex sphere;
    if (!a.sphere.empty()) sphere = load(a.sphere);
    char* report = nullptr;
    dmt_complex* collar = nullptr;
    dmt_complex* boundary = nullptr;
    const dmt_status s = dmt_pipeline_5manifold(sphere.get(), &report, &collar, &boundary);
    OwnedString owned_report(report);
    Complex c(collar), b(boundary);
    check(s);
    write_complex(a.output, c.get());
    std::string bpath = a.boundary_output;
    if (bpath.empty() && !a.output.empty() && a.output != "-") bpath = a.output + ".boundary";
    if (!bpath.empty()) write_complex(bpath, b.get());
    if (!a.report.empty())
      write_text(a.report, report);
    else
      std::cerr << report;
    return kExitOk;
  }
  dmt_complex* k = nullptr;
  check(dmt_build(a.name.c_str(), a.dim, &k));
  Complex owned(k);
  write_complex(a.output, k);
  std::cerr << a.name << ": f = " << format_counts(f_vector(k)) << "\n";
  return kExitOk;
}

struct SpectrumArgs {
  std::string input;
  std::string strategy = "random";
  std::uint64_t runs = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string format = "json";
  bool check_traces = false;
  std::string output;
};

int cmd_spectrum(const SpectrumArgs& a) {
  Complex k = load(a.input);
  char* report = nullptr;
  check(dmt_spectrum(k.get(), a.strategy.c_str(), a.runs, a.seed, a.workers,
                     a.check_traces ? 1 : 0, a.format.c_str(), &report));
  OwnedString owned(report);
  write_text(a.output, report);
  return kExitOk;
}

struct TransformArgs {
  std::string input;
  std::string op;
  std::string face;
  std::int64_t vertex = 0;
  std::int64_t keep = 0, remove = 0;
  std::string map;
  std::string sub;
  int iterations = 1;
  std::string output;
};

int cmd_transform(const TransformArgs& a) {
  Complex k = load(a.input);
  dmt_complex* out = nullptr;
  const auto face = parse_list<std::int64_t>(a.face, "face");
  auto need_face = [&] {
    if (face.empty()) throw Failure{kExitUsage, "--op " + a.op + " needs --face"};
  };
  auto need_vertex = [&] {
    if (a.vertex <= 0) throw Failure{kExitUsage, "--op " + a.op + " needs --vertex"};
  };
  const std::string& op = a.op;
  if (op == "sd") {
    check(dmt_barycentric_subdivision(k.get(), a.iterations, &out));
  } else if (op == "cone") {
    check(dmt_cone(k.get(), a.vertex, &out));
  } else if (op == "suspension") {
    check(dmt_suspension(k.get(), &out));
  } else if (op == "opsusp") {
    need_vertex();
    check(dmt_one_point_suspension(k.get(), a.vertex, &out));
  } else if (op == "product_I") {
    check(dmt_product_with_interval(k.get(), &out));
  } else if (op == "stellar") {
    need_face();
    check(dmt_stellar_subdivision(k.get(), face.data(), face.size(), a.vertex, &out));
  } else if (op == "stack") {
    need_face();
    check(dmt_stack_facet(k.get(), face.data(), face.size(), a.vertex, &out));
  } else if (op == "link") {
    need_face();
    check(dmt_link(k.get(), face.data(), face.size(), &out));
  } else if (op == "star") {
    need_face();
    check(dmt_closed_star(k.get(), face.data(), face.size(), &out));
  } else if (op == "delete") {
    need_vertex();
    check(dmt_delete_vertex(k.get(), a.vertex, &out));
  } else if (op == "boundary") {
    check(dmt_boundary(k.get(), &out));
  } else if (op == "quotient") {
    const auto pairs = parse_list<std::int64_t>(a.map, "map");
    if (pairs.empty() || pairs.size() % 2)
      throw Failure{kExitUsage, "--map needs pairs 'from,to,from,to,...'"};
    std::vector<std::int64_t> from, to;
    for (size_t i = 0; i < pairs.size(); i += 2) {
      from.push_back(pairs[i]);
      to.push_back(pairs[i + 1]);
    }
    check(dmt_apply_map(k.get(), from.data(), to.data(), from.size(), &out));
  } else if (op == "contract") {
    if (a.keep <= 0 || a.remove <= 0)
      throw Failure{kExitUsage, "--op contract needs --keep and --remove"};
    check(dmt_contract_edge(k.get(), a.keep, a.remove, &out));
  } else if (op == "neighborhood") {
    if (a.sub.empty()) throw Failure{kExitUsage, "--op neighborhood needs --sub"};
    Complex sub = load(a.sub);
    check(dmt_simplicial_neighborhood(k.get(), sub.get(), &out));
  } else {
    throw Failure{kExitUsage, "unknown transform: " + op};
  }
  Complex result(out);
  write_complex(a.output, result.get());
  std::cerr << op << ": f = " << format_counts(f_vector(result.get())) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  std::string mode = "fvector";
  std::uint64_t prime = 0;
  std::uint64_t size_limit = 0;
  bool no_reduce = false;
  std::string vector;
  std::string kind = "collapsible";
  std::uint64_t budget = 1000000;
  std::string output;
};

int cmd_verify(const VerifyArgs& a) {
  Complex k = load(a.input);
  const std::string& m = a.mode;
  if (m == "fvector") {
    const auto f = f_vector(k.get());
    std::int64_t chi = 0;
    for (size_t i = 0; i < f.size(); ++i)
      chi += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(f[i]);
    write_text(a.output, "f = " + format_counts(f) + "\nchi = " + std::to_string(chi) + "\n");
  } else if (m == "homology") {
    char* json = nullptr;
    const std::uint64_t limit = a.size_limit ? a.size_limit : env_size_limit();
    check(dmt_homology(k.get(), a.prime, limit, a.no_reduce ? 0 : 1, &json));
    OwnedString owned(json);
    write_text(a.output, json);
  } else if (m == "free-faces") {
    size_t count = 0;
    char* pairs = nullptr;
    check(dmt_free_faces(k.get(), &count, &pairs));
    OwnedString owned(pairs);
    write_text(a.output, std::to_string(count) + "\n" + pairs);
  } else if (m == "morse-check") {
    const auto v = parse_list<std::uint64_t>(a.vector, "vector");
    if (v.empty()) throw Failure{kExitUsage, "--mode morse-check needs --vector"};
    int ok = 0;
    char* json = nullptr;
    check(dmt_morse_check(k.get(), v.data(), v.size(), &ok, &json));
    OwnedString owned(json);
    write_text(a.output, json);
    if (!ok) return kExitCheck;
  } else if (m == "oracle") {
    char* result = nullptr;
    check(dmt_oracle(k.get(), a.kind.c_str(), a.budget, &result));
    OwnedString owned(result);
    write_text(a.output, a.kind + ": " + result + "\n");
  } else {
    throw Failure{kExitUsage, "unknown verify mode: " + m};
  }
  return kExitOk;
}

struct GrowthArgs {
  std::string input;
  int levels = 2;
  std::string strategy = "random";
  std::uint64_t runs = 100;
  std::uint64_t seed = 1;
  std::uint64_t size_limit = 0;
  unsigned workers = 0;
  std::string output;
};

int cmd_growth(const GrowthArgs& a) {
  Complex k = load(a.input);
  std::uint64_t limit = a.size_limit ? a.size_limit : env_size_limit();
  if (!limit) limit = 2000000;
  char* json = nullptr;
  check(dmt_sd_growth(k.get(), a.levels, a.strategy.c_str(), a.runs, a.seed, limit, a.workers,
                      &json));
  OwnedString owned(json);
  write_text(a.output, json);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Morse toolkit: build, transform, collapse and verify simplicial complexes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dmt_version()));
  const std::vector<std::string> strategies = {"random", "random-lex-first", "random-lex-last"};

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Write a named construction as a facet file");
  b->add_option("name", build.name, "Construction name")
      ->required()
      ->check(CLI::IsMember({"simplex", "simplex_boundary", "cross_polytope", "sigma", "E",
                             "two_optima", "sigma2_sigma3prime", "dunce_hat", "poincare",
                             "pipeline_5manifold"}));
  b->add_option("-d,--dim", build.dim, "Dimension parameter");
  b->add_option("-o,--output", build.output, "Output facet file (default: stdout)");
  b->add_option("--boundary-output", build.boundary_output,
                "Pipeline: boundary facet file (default: <output>.boundary)");
  b->add_option("--report", build.report, "Pipeline: stage report path (default: stderr)");
  b->add_option("--sphere", build.sphere, "Pipeline: input homology sphere (default: built-in)");

  SpectrumArgs spec;
  auto* s = app.add_subcommand("spectrum", "Histogram of Morse vectors over seeded runs");
  s->add_option("input", spec.input, "Facet file, or - for stdin")->required();
  s->add_option("-s,--strategy", spec.strategy, "Strategy")
      ->check(CLI::IsMember(strategies))
      ->capture_default_str();
  s->add_option("-n,--runs", spec.runs, "Number of runs")->capture_default_str();
  s->add_option("--seed", spec.seed, "Master seed")->capture_default_str();
  s->add_option("-j,--workers", spec.workers, "Worker threads (0: all hardware threads)")
      ->capture_default_str();
  s->add_option("-f,--format", spec.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  s->add_flag("--check-traces", spec.check_traces, "Replay every trace through the axiom checker");
  s->add_option("-o,--output", spec.output, "Report path (default: stdout)");

  TransformArgs tr;
  auto* t = app.add_subcommand("transform", "Apply an operation and write the result");
  t->add_option("input", tr.input, "Facet file, or - for stdin")->required();
  t->add_option("--op", tr.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"sd", "cone", "suspension", "opsusp", "product_I", "stellar",
                             "stack", "link", "star", "delete", "boundary", "quotient",
                             "contract", "neighborhood"}));
  t->add_option("--face", tr.face, "Face as a list of vertices, e.g. '1,2,3'");
  t->add_option("--vertex", tr.vertex,
                "Vertex: apex (cone), base vertex (opsusp), fresh label (stellar, stack), "
                "deleted vertex (delete)");
  t->add_option("--keep", tr.keep, "Contract: surviving endpoint");
  t->add_option("--remove", tr.remove, "Contract: removed endpoint");
  t->add_option("--map", tr.map, "Quotient: pairs 'from,to,from,to,...'");
  t->add_option("--sub", tr.sub, "Neighborhood: subcomplex facet file");
  t->add_option("--iterations", tr.iterations, "sd: number of subdivisions")
      ->capture_default_str();
  t->add_option("-o,--output", tr.output, "Output facet file (default: stdout)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Invariants and checks");
  v->add_option("input", ver.input, "Facet file, or - for stdin")->required();
  v->add_option("-m,--mode", ver.mode, "Check to run")
      ->check(CLI::IsMember({"fvector", "homology", "free-faces", "morse-check", "oracle"}))
      ->capture_default_str();
  v->add_option("--prime", ver.prime, "Homology over GF(p); 0 works over the integers")
      ->capture_default_str();
  v->add_option("--size-limit", ver.size_limit,
                "Integer homology face limit (default: DMT_SIZE_LIMIT or built-in)");
  v->add_flag("--no-reduce", ver.no_reduce, "Skip reduction preprocessing in homology");
  v->add_option("--vector", ver.vector, "Morse vector for morse-check, e.g. '1,2,2,1'");
  v->add_option("--kind", ver.kind, "Oracle question")
      ->check(CLI::IsMember({"collapsible", "nonevasive"}))
      ->capture_default_str();
  v->add_option("--budget", ver.budget, "Oracle node budget")->capture_default_str();
  v->add_option("-o,--output", ver.output, "Report path (default: stdout)");

  GrowthArgs gr;
  auto* g = app.add_subcommand("growth", "Spectra of iterated barycentric subdivisions");
  g->add_option("input", gr.input, "Facet file, or - for stdin")->required();
  g->add_option("-l,--levels", gr.levels, "Highest subdivision level")->capture_default_str();
  g->add_option("-s,--strategy", gr.strategy, "Strategy")
      ->check(CLI::IsMember(strategies))
      ->capture_default_str();
  g->add_option("-n,--runs", gr.runs, "Runs per level")->capture_default_str();
  g->add_option("--seed", gr.seed, "Master seed")->capture_default_str();
  g->add_option("--size-limit", gr.size_limit,
                "Face limit per level (default: DMT_SIZE_LIMIT or 2000000)");
  g->add_option("-j,--workers", gr.workers, "Worker threads (0: all hardware threads)")
      ->capture_default_str();
  g->add_option("-o,--output", gr.output, "Report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*b) return cmd_build(build);
    if (*s) return cmd_spectrum(spec);
    if (*t) return cmd_transform(tr);
    if (*v) return cmd_verify(ver);
    if (*g) return cmd_growth(gr);
  } catch (const Failure& f) {
    std::cerr << "dmt: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitUsage;
}

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

enum class Strategy { Random, RandomLexFirst, RandomLexLast };

std::string to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);

// Seed of run i of a spectrum: output i+1 (counting from 0) of the standard
// splitmix64 stream seeded with `master`.
std::uint64_t child_seed(std::uint64_t master, std::uint64_t index);

// mt19937_64 with a portable unbiased bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n), n > 0

 private:
  std::mt19937_64 gen_;
};

struct MorseEvent {
  enum class Kind : std::uint8_t { Collapse, Critical };
  Kind kind = Kind::Critical;
  int dim = 0;           // dimension of the removed face, or of the free face of a pair
  FaceIndex face = 0;    // the critical face, or the free face
  FaceIndex coface = 0;  // the partner of a collapse, a face of dimension dim+1
};

// A deconstruction sequence. Event i carries the value M - i of the induced
// discrete Morse function.
struct MorseTrace {
  std::vector<MorseEvent> events;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::Random;
  // Image of each vertex (in label order) under the run's random relabeling;
  // empty for the plain random strategy.
  std::vector<std::uint32_t> relabeling;
};

using MorseVector = std::vector<std::uint64_t>;

std::uint64_t total(const MorseVector& v);
std::string format_vector(const MorseVector& v);

struct RunResult {
  MorseTrace trace;
  MorseVector vector;
};

// Level-wise randomized deconstruction. Deterministic in (k, strategy, seed).
RunResult run_strategy(const SimplicialComplex& k, Strategy strategy, std::uint64_t seed);

// Reusable scratch state for repeated runs on one complex.
class MorseEngine {
 public:
  explicit MorseEngine(const SimplicialComplex& k);
  ~MorseEngine();
  MorseEngine(MorseEngine&&) noexcept;
  MorseEngine& operator=(MorseEngine&&) noexcept;

  // Returns the Morse vector; the trace is filled only when `trace` is set.
  MorseVector run(Strategy strategy, std::uint64_t seed, MorseTrace* trace = nullptr);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

struct TraceCheck {
  bool ok() const { return violations.empty(); }
  std::vector<std::string> violations;
};

// Replays the trace and checks the six monotone discrete Morse function
// axioms for f(event i) = M - i. Throws FaceNotFound for out-of-range faces.
TraceCheck check_monotone_trace(const SimplicialComplex& k, const MorseTrace& trace);

// Event given by explicit faces, for traces that come from outside.
struct FaceEvent {
  Face face;
  std::optional<Face> coface;  // set for collapses
};
MorseTrace trace_from_faces(const SimplicialComplex& k, const std::vector<FaceEvent>& events);
std::vector<FaceEvent> trace_to_faces(const SimplicialComplex& k, const MorseTrace& trace);

struct SpectrumReport {
  Strategy strategy = Strategy::Random;
  std::uint64_t runs = 0;
  std::uint64_t master_seed = 0;
  std::map<MorseVector, std::uint64_t> histogram;
  double mean = 0.0;  // mean total number of critical faces
  MorseVector min_vector;
  MorseVector max_vector;
  std::uint64_t trace_violations = 0;  // only counted when traces are checked

  std::uint64_t count(const MorseVector& v) const;
};

struct SpectrumOptions {
  unsigned workers = 0;        // 0 means hardware concurrency
  bool check_traces = false;   // replay every trace through check_monotone_trace
};

SpectrumReport spectrum(const SimplicialComplex& k, Strategy strategy, std::uint64_t runs,
                        std::uint64_t master_seed, const SpectrumOptions& options = {});

std::string report_json(const SpectrumReport& r);
std::string report_csv(const SpectrumReport& r);
std::string report_text(const SpectrumReport& r);

struct GrowthLevel {
  int level = 0;
  FVector f_vector;
  SpectrumReport report;
};

struct GrowthReport {
  std::vector<GrowthLevel> levels;
};

// Spectra of sd^l K for l = 0..max_level. Throws SizeLimitExceeded before
// building a level whose face count would exceed `size_limit`.
GrowthReport sd_growth_experiment(const SimplicialComplex& k, int max_level, Strategy strategy,
                                  std::uint64_t runs, std::uint64_t master_seed,
                                  std::uint64_t size_limit, const SpectrumOptions& options = {});
std::string growth_json(const GrowthReport& r);

}  // namespace dmt

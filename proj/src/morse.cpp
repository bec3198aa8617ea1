#include "dmt/morse.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dmt/constructions.hpp"
#include "dmt/errors.hpp"
#include "dmt/version.hpp"

namespace dmt {

namespace {

constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Dense subset of [0, n) with O(1) insert, erase and uniform sampling.
class SampleSet {
 public:
  void reset(std::size_t n) {
    items_.clear();
    pos_.assign(n, kAbsent);
  }
  void insert(std::uint32_t i) {
    pos_[i] = static_cast<std::uint32_t>(items_.size());
    items_.push_back(i);
  }
  void erase(std::uint32_t i) {
    const std::uint32_t p = pos_[i];
    if (p == kAbsent) return;
    const std::uint32_t last = items_.back();
    items_[p] = last;
    pos_[last] = p;
    items_.pop_back();
    pos_[i] = kAbsent;
  }
  bool empty() const { return items_.empty(); }
  std::uint32_t sample(Rng& rng) const {
    return items_[rng.below(items_.size())];
  }

 private:
  std::vector<std::uint32_t> items_;
  std::vector<std::uint32_t> pos_;
};

// Subset of [0, n) as a 64-ary tree of bitsets, with minimum and maximum.
class RankSet {
 public:
  void reset(std::size_t n) {
    levels_.clear();
    std::size_t words = std::max<std::size_t>(1, (n + 63) / 64);
    while (true) {
      levels_.emplace_back(words, 0);
      if (words == 1) break;
      words = (words + 63) / 64;
    }
  }
  void insert(std::uint32_t i) {
    std::size_t idx = i;
    for (auto& level : levels_) {
      const bool was_empty = level[idx / 64] == 0;
      level[idx / 64] |= std::uint64_t{1} << (idx % 64);
      if (!was_empty) break;
      idx /= 64;
    }
  }
  void erase(std::uint32_t i) {
    std::size_t idx = i;
    for (auto& level : levels_) {
      level[idx / 64] &= ~(std::uint64_t{1} << (idx % 64));
      if (level[idx / 64] != 0) break;
      idx /= 64;
    }
  }
  bool empty() const { return levels_.back()[0] == 0; }
  std::uint32_t min() const {
    std::size_t idx = 0;
    for (std::size_t l = levels_.size(); l-- > 0;)
      idx = idx * 64 + static_cast<std::size_t>(std::countr_zero(levels_[l][idx]));
    return static_cast<std::uint32_t>(idx);
  }
  std::uint32_t max() const {
    std::size_t idx = 0;
    for (std::size_t l = levels_.size(); l-- > 0;)
      idx = idx * 64 + 63 - static_cast<std::size_t>(std::countl_zero(levels_[l][idx]));
    return static_cast<std::uint32_t>(idx);
  }

 private:
  std::vector<std::vector<std::uint64_t>> levels_;
};

// Candidate faces of one dimension, chosen according to the strategy.
class Candidates {
 public:
  void reset(Strategy s, std::size_t n, const std::vector<std::uint32_t>* rank,
             const std::vector<std::uint32_t>* by_rank) {
    strategy_ = s;
    rank_ = rank;
    by_rank_ = by_rank;
    if (s == Strategy::Random)
      sample_.reset(n);
    else
      ranks_.reset(n);
  }
  void insert(std::uint32_t i) {
    if (strategy_ == Strategy::Random)
      sample_.insert(i);
    else
      ranks_.insert((*rank_)[i]);
  }
  void erase(std::uint32_t i) {
    if (strategy_ == Strategy::Random)
      sample_.erase(i);
    else
      ranks_.erase((*rank_)[i]);
  }
  bool empty() const {
    return strategy_ == Strategy::Random ? sample_.empty() : ranks_.empty();
  }
  std::uint32_t pick(Rng& rng) const {
    switch (strategy_) {
      case Strategy::Random: return sample_.sample(rng);
      case Strategy::RandomLexFirst: return (*by_rank_)[ranks_.min()];
      case Strategy::RandomLexLast: return (*by_rank_)[ranks_.max()];
    }
    return 0;
  }

 private:
  Strategy strategy_ = Strategy::Random;
  const std::vector<std::uint32_t>* rank_ = nullptr;
  const std::vector<std::uint32_t>* by_rank_ = nullptr;
  SampleSet sample_;
  RankSet ranks_;
};

using u128 = unsigned __int128;

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Random: return "random";
    case Strategy::RandomLexFirst: return "random-lex-first";
    case Strategy::RandomLexLast: return "random-lex-last";
  }
  return "random";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
  if (name == "random") return Strategy::Random;
  if (name == "random-lex-first") return Strategy::RandomLexFirst;
  if (name == "random-lex-last") return Strategy::RandomLexLast;
  return std::nullopt;
}

std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ull);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t x = gen_();
    if (x >= threshold) return x % n;
  }
}

std::uint64_t total(const MorseVector& v) {
  return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

std::string format_vector(const MorseVector& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ')';
  return s.str();
}

struct MorseEngine::State {
  const SimplicialComplex* k;
  std::vector<std::vector<std::uint8_t>> alive;
  std::vector<std::vector<std::uint32_t>> count;  // alive cofaces
  std::vector<std::vector<std::uint32_t>> rank;
  std::vector<std::vector<std::uint32_t>> by_rank;
  Candidates top, free;

  void compute_ranks(const std::vector<std::uint32_t>& image) {
    const int d = k->dimension();
    rank.resize(d + 1);
    by_rank.resize(d + 1);
    const bool packed = k->num_vertices() <= 65536 && d + 1 <= 8;
    std::vector<std::pair<u128, std::uint32_t>> keys;
    std::vector<std::uint32_t> rows;
    for (int j = 0; j <= d; ++j) {
      const std::size_t n = k->num_faces(j);
      const std::size_t w = j + 1;
      auto& by = by_rank[j];
      by.resize(n);
      if (packed) {
        keys.resize(n);
        std::uint32_t buf[8];
        for (FaceIndex i = 0; i < n; ++i) {
          auto r = k->row(j, i);
          for (std::size_t t = 0; t < w; ++t) buf[t] = image[r[t]];
          std::sort(buf, buf + w);
          u128 key = 0;
          for (std::size_t t = 0; t < w; ++t) key = (key << 16) | buf[t];
          keys[i] = {key, i};
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t t = 0; t < n; ++t) by[t] = keys[t].second;
      } else {
        rows.resize(n * w);
        for (FaceIndex i = 0; i < n; ++i) {
          auto r = k->row(j, i);
          for (std::size_t t = 0; t < w; ++t) rows[i * w + t] = image[r[t]];
          std::sort(rows.begin() + i * w, rows.begin() + (i + 1) * w);
        }
        std::iota(by.begin(), by.end(), 0u);
        std::sort(by.begin(), by.end(), [&](std::uint32_t a, std::uint32_t b) {
          return std::lexicographical_compare(rows.begin() + a * w, rows.begin() + (a + 1) * w,
                                              rows.begin() + b * w, rows.begin() + (b + 1) * w);
        });
      }
      auto& rk = rank[j];
      rk.resize(n);
      for (std::size_t t = 0; t < n; ++t) rk[by[t]] = static_cast<std::uint32_t>(t);
    }
  }

  // Removes a face whose cofaces are all gone, updating the free candidates
  // of dimension j-1 when `track` is set.
  void remove(int j, FaceIndex i, bool track) {
    alive[j][i] = 0;
    if (j == 0) return;
    for (FaceIndex b : k->boundary(j, i)) {
      const std::uint32_t c = --count[j - 1][b];
      if (!track || !alive[j - 1][b]) continue;
      if (c == 1)
        free.insert(b);
      else if (c == 0)
        free.erase(b);
    }
  }
};

MorseEngine::MorseEngine(const SimplicialComplex& k) : state_(std::make_unique<State>()) {
  state_->k = &k;
}
MorseEngine::~MorseEngine() = default;
MorseEngine::MorseEngine(MorseEngine&&) noexcept = default;
MorseEngine& MorseEngine::operator=(MorseEngine&&) noexcept = default;

MorseVector MorseEngine::run(Strategy strategy, std::uint64_t seed, MorseTrace* trace) {
  State& s = *state_;
  const SimplicialComplex& k = *s.k;
  const int d = k.dimension();
  if (d < 0) fail(ErrorCode::InvalidArgument, "cannot run on the empty complex");
  Rng rng(seed);
  if (trace) {
    trace->events.clear();
    trace->events.reserve(k.total_faces());
    trace->seed = seed;
    trace->strategy = strategy;
    trace->relabeling.clear();
  }
  if (strategy != Strategy::Random) {
    std::vector<std::uint32_t> image(k.num_vertices());
    std::iota(image.begin(), image.end(), 0u);
    for (std::size_t i = image.size(); i > 1; --i)
      std::swap(image[i - 1], image[rng.below(i)]);
    s.compute_ranks(image);
    if (trace) trace->relabeling = image;
  }
  s.alive.resize(d + 1);
  s.count.resize(d + 1);
  for (int j = 0; j <= d; ++j) {
    const std::size_t n = k.num_faces(j);
    s.alive[j].assign(n, 1);
    s.count[j].resize(n);
    for (FaceIndex i = 0; i < n; ++i)
      s.count[j][i] = static_cast<std::uint32_t>(k.cofaces(j, i).size());
  }
  const std::vector<std::uint32_t>* no_rank = nullptr;
  auto rank_of = [&](int j) { return strategy == Strategy::Random ? no_rank : &s.rank[j]; };
  auto by_rank_of = [&](int j) { return strategy == Strategy::Random ? no_rank : &s.by_rank[j]; };

  MorseVector vec(d + 1, 0);
  for (int j = d; j >= 1; --j) {
    s.top.reset(strategy, k.num_faces(j), rank_of(j), by_rank_of(j));
    s.free.reset(strategy, k.num_faces(j - 1), rank_of(j - 1), by_rank_of(j - 1));
    for (FaceIndex i = 0; i < k.num_faces(j); ++i)
      if (s.alive[j][i]) s.top.insert(i);
    for (FaceIndex i = 0; i < k.num_faces(j - 1); ++i)
      if (s.alive[j - 1][i] && s.count[j - 1][i] == 1) s.free.insert(i);
    while (!s.top.empty()) {
      if (!s.free.empty()) {
        const FaceIndex sigma = s.free.pick(rng);
        FaceIndex tau = 0;
        for (FaceIndex c : k.cofaces(j - 1, sigma))
          if (s.alive[j][c]) {
            tau = c;
            break;
          }
        s.top.erase(tau);
        s.remove(j, tau, true);
        s.free.erase(sigma);
        s.remove(j - 1, sigma, false);
        if (trace) trace->events.push_back({MorseEvent::Kind::Collapse, j - 1, sigma, tau});
      } else {
        const FaceIndex delta = s.top.pick(rng);
        s.top.erase(delta);
        s.remove(j, delta, true);
        ++vec[j];
        if (trace) trace->events.push_back({MorseEvent::Kind::Critical, j, delta, 0});
      }
    }
  }
  for (FaceIndex i = 0; i < k.num_faces(0); ++i)
    if (s.alive[0][i]) {
      s.alive[0][i] = 0;
      ++vec[0];
      if (trace) trace->events.push_back({MorseEvent::Kind::Critical, 0, i, 0});
    }
  return vec;
}

RunResult run_strategy(const SimplicialComplex& k, Strategy strategy, std::uint64_t seed) {
  MorseEngine engine(k);
  RunResult r;
  r.vector = engine.run(strategy, seed, &r.trace);
  return r;
}

TraceCheck check_monotone_trace(const SimplicialComplex& k, const MorseTrace& trace) {
  const int d = k.dimension();
  TraceCheck out;
  auto report = [&](std::size_t step, const std::string& axiom, const std::string& msg) {
    if (out.violations.size() < 1000)
      out.violations.push_back("event " + std::to_string(step) + ": axiom (" + axiom + "): " + msg);
  };
  std::vector<std::vector<std::uint8_t>> alive(d + 1);
  std::vector<std::vector<std::uint32_t>> count(d + 1);
  std::vector<std::uint64_t> free_count(d + 1, 0);
  for (int j = 0; j <= d; ++j) {
    const std::size_t n = k.num_faces(j);
    alive[j].assign(n, 1);
    count[j].resize(n);
    for (FaceIndex i = 0; i < n; ++i) {
      count[j][i] = static_cast<std::uint32_t>(k.cofaces(j, i).size());
      if (count[j][i] == 1) ++free_count[j];
    }
  }
  auto remove = [&](int j, FaceIndex i) {
    alive[j][i] = 0;
    if (count[j][i] == 1) --free_count[j];
    if (j == 0) return;
    for (FaceIndex b : k.boundary(j, i)) {
      if (alive[j - 1][b] && count[j - 1][b] == 1) --free_count[j - 1];
      --count[j - 1][b];
      if (alive[j - 1][b] && count[j - 1][b] == 1) ++free_count[j - 1];
    }
  };
  auto check_ref = [&](int j, FaceIndex i) {
    if (j < 0 || j > d || i >= k.num_faces(j))
      fail(ErrorCode::FaceNotFound, "trace refers to face " + std::to_string(i) +
                                        " of dimension " + std::to_string(j) +
                                        ", which is not in the complex");
  };

  int last_pair_dim = std::numeric_limits<int>::max();
  for (std::size_t step = 0; step < trace.events.size(); ++step) {
    const MorseEvent& e = trace.events[step];
    check_ref(e.dim, e.face);
    const std::string name = k.face(e.dim, e.face).to_string();
    if (!alive[e.dim][e.face]) {
      report(step, "ii", name + " receives a second value");
      continue;
    }
    if (e.kind == MorseEvent::Kind::Critical) {
      if (count[e.dim][e.face] != 0)
        report(step, "i", name + " gets a value below one of its cofaces");
      if (e.dim >= 1 && free_count[e.dim - 1] != 0)
        report(step, "vi", "critical " + name + " while " + std::to_string(free_count[e.dim - 1]) +
                               " free faces of dimension " + std::to_string(e.dim - 1) + " remain");
      remove(e.dim, e.face);
      continue;
    }
    check_ref(e.dim + 1, e.coface);
    const std::string tname = k.face(e.dim + 1, e.coface).to_string();
    if (!alive[e.dim + 1][e.coface]) {
      report(step, "ii", tname + " receives a second value");
      continue;
    }
    auto bd = k.boundary(e.dim + 1, e.coface);
    if (std::find(bd.begin(), bd.end(), e.face) == bd.end()) {
      report(step, "iii", name + " and " + tname + " share a value but are not nested");
      continue;
    }
    if (count[e.dim + 1][e.coface] != 0)
      report(step, "i", tname + " gets a value below one of its cofaces");
    if (count[e.dim][e.face] != 1)
      report(step, "i", name + " has a coface other than " + tname + " with a smaller value");
    if (e.dim + 1 > last_pair_dim)
      report(step, "iv", "pair " + name + " < " + tname + " follows a pair of lower dimension");
    last_pair_dim = e.dim + 1;
    remove(e.dim + 1, e.coface);
    remove(e.dim, e.face);
  }
  for (int j = 0; j <= d; ++j)
    for (FaceIndex i = 0; i < k.num_faces(j); ++i)
      if (alive[j][i]) {
        report(trace.events.size(), "v", k.face(j, i).to_string() + " receives no value");
      }
  return out;
}

MorseTrace trace_from_faces(const SimplicialComplex& k, const std::vector<FaceEvent>& events) {
  MorseTrace t;
  auto locate = [&](const Face& f) {
    auto r = k.find(f);
    if (!r) fail(ErrorCode::FaceNotFound, "trace face " + f.to_string() + " is not in the complex");
    return *r;
  };
  for (const FaceEvent& e : events) {
    const FaceRef a = locate(e.face);
    if (!e.coface) {
      t.events.push_back({MorseEvent::Kind::Critical, a.dim, a.index, 0});
      continue;
    }
    const FaceRef b = locate(*e.coface);
    if (b.dim != a.dim + 1)
      fail(ErrorCode::InvalidArgument, "collapse " + e.face.to_string() + " < " +
                                           e.coface->to_string() + " is not of codimension one");
    t.events.push_back({MorseEvent::Kind::Collapse, a.dim, a.index, b.index});
  }
  return t;
}

std::vector<FaceEvent> trace_to_faces(const SimplicialComplex& k, const MorseTrace& trace) {
  std::vector<FaceEvent> out;
  out.reserve(trace.events.size());
  for (const MorseEvent& e : trace.events) {
    if (e.kind == MorseEvent::Kind::Critical)
      out.push_back({k.face(e.dim, e.face), std::nullopt});
    else
      out.push_back({k.face(e.dim, e.face), k.face(e.dim + 1, e.coface)});
  }
  return out;
}

std::uint64_t SpectrumReport::count(const MorseVector& v) const {
  auto it = histogram.find(v);
  return it == histogram.end() ? 0 : it->second;
}

SpectrumReport spectrum(const SimplicialComplex& k, Strategy strategy, std::uint64_t runs,
                        std::uint64_t master_seed, const SpectrumOptions& options) {
  if (runs == 0) fail(ErrorCode::InvalidArgument, "runs must be >= 1");
  if (k.empty()) fail(ErrorCode::InvalidArgument, "cannot run on the empty complex");
  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, runs));

  std::vector<MorseVector> results(runs);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> violations{0};
  auto work = [&] {
    MorseEngine engine(k);
    MorseTrace trace;
    for (std::uint64_t i = next++; i < runs; i = next++) {
      results[i] = engine.run(strategy, child_seed(master_seed, i),
                              options.check_traces ? &trace : nullptr);
      if (options.check_traces && !check_monotone_trace(k, trace).ok()) ++violations;
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SpectrumReport r;
  r.strategy = strategy;
  r.runs = runs;
  r.master_seed = master_seed;
  r.trace_violations = violations;
  long double sum = 0;
  for (const MorseVector& v : results) {
    ++r.histogram[v];
    sum += total(v);
  }
  r.mean = static_cast<double>(sum / runs);
  auto by_total = [](const MorseVector& a, const MorseVector& b) {
    const auto ta = total(a), tb = total(b);
    return ta != tb ? ta < tb : a < b;
  };
  for (const auto& [v, c] : r.histogram) {
    if (r.min_vector.empty() || by_total(v, r.min_vector)) r.min_vector = v;
    if (r.max_vector.empty() || by_total(r.max_vector, v)) r.max_vector = v;
  }
  return r;
}

namespace {

// Distinct vectors by decreasing count, ties by vector.
std::vector<std::pair<MorseVector, std::uint64_t>> sorted_histogram(const SpectrumReport& r) {
  std::vector<std::pair<MorseVector, std::uint64_t>> h(r.histogram.begin(), r.histogram.end());
  std::stable_sort(h.begin(), h.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return h;
}

nlohmann::json report_object(const SpectrumReport& r) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [v, c] : sorted_histogram(r)) hist.push_back({{"vector", v}, {"count", c}});
  return {{"strategy", to_string(r.strategy)}, {"runs", r.runs},
          {"master_seed", r.master_seed},      {"histogram", hist},
          {"mean", r.mean},                    {"min_vector", r.min_vector},
          {"max_vector", r.max_vector},        {"seed_derivation", "run i uses output i+1 of the splitmix64 stream seeded with master_seed"},
          {"version", kVersion}};
}

}  // namespace

std::string report_json(const SpectrumReport& r) { return report_object(r).dump(2) + "\n"; }

std::string report_csv(const SpectrumReport& r) {
  std::size_t width = 0;
  for (const auto& [v, c] : r.histogram) width = std::max(width, v.size());
  std::ostringstream s;
  s << "strategy,runs,master_seed";
  for (std::size_t i = 0; i < width; ++i) s << ",c" << i;
  s << ",count\n";
  for (const auto& [v, c] : sorted_histogram(r)) {
    s << to_string(r.strategy) << ',' << r.runs << ',' << r.master_seed;
    for (std::size_t i = 0; i < width; ++i) s << ',' << (i < v.size() ? v[i] : 0);
    s << ',' << c << '\n';
  }
  return s.str();
}

std::string report_text(const SpectrumReport& r) {
  std::ostringstream s;
  s << "strategy " << to_string(r.strategy) << ", " << r.runs << " runs, master seed "
    << r.master_seed << "\n";
  for (const auto& [v, c] : sorted_histogram(r)) s << "  " << format_vector(v) << "  " << c << "\n";
  s << "mean critical faces " << r.mean << "\n";
  s << "min " << format_vector(r.min_vector) << "  max " << format_vector(r.max_vector) << "\n";
  return s.str();
}

GrowthReport sd_growth_experiment(const SimplicialComplex& k, int max_level, Strategy strategy,
                                  std::uint64_t runs, std::uint64_t master_seed,
                                  std::uint64_t size_limit, const SpectrumOptions& options) {
  if (max_level < 0) fail(ErrorCode::InvalidArgument, "max level must be >= 0");
  GrowthReport g;
  SimplicialComplex cur = k;
  for (int level = 0; level <= max_level; ++level) {
    if (level > 0) {
      const std::uint64_t next_total = subdivision_f_vector(cur.f_vector()).total();
      if (next_total > size_limit)
        fail(ErrorCode::SizeLimitExceeded,
             "level " + std::to_string(level) + " would have " + std::to_string(next_total) +
                 " faces, above the limit " + std::to_string(size_limit));
      cur = barycentric_subdivision(cur);
    }
    g.levels.push_back({level, cur.f_vector(), spectrum(cur, strategy, runs, master_seed, options)});
  }
  return g;
}

std::string growth_json(const GrowthReport& r) {
  nlohmann::json levels = nlohmann::json::array();
  for (const GrowthLevel& l : r.levels)
    levels.push_back({{"level", l.level}, {"f_vector", l.f_vector.counts},
                      {"report", report_object(l.report)}});
  return nlohmann::json{{"levels", levels}}.dump(2) + "\n";
}

}  // namespace dmt

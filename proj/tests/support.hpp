#pragma once

#include <random>
#include <set>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt::test {

// Facets drawn as random vertex subsets of {1..n} with 1..max_size vertices.
inline std::vector<Face> random_facets(std::mt19937_64& rng, int n, int count, int max_size) {
  std::vector<Face> out;
  std::uniform_int_distribution<int> size(1, max_size);
  for (int i = 0; i < count; ++i) {
    std::vector<Vertex> all;
    for (int v = 1; v <= n; ++v) all.push_back(v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(size(rng), n));
    std::sort(all.begin(), all.end());
    out.emplace_back(all);
  }
  return out;
}

// Every nonempty subset of every facet, by brute force.
inline std::set<std::vector<Vertex>> brute_closure(const std::vector<Face>& facets) {
  std::set<std::vector<Vertex>> faces;
  for (const Face& f : facets) {
    const unsigned n = static_cast<unsigned>(f.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vertex> s;
      for (unsigned j = 0; j < n; ++j)
        if (mask >> j & 1u) s.push_back(f[j]);
      faces.insert(s);
    }
  }
  return faces;
}

inline std::vector<std::uint64_t> counts(std::initializer_list<std::uint64_t> c) { return c; }

}  // namespace dmt::test

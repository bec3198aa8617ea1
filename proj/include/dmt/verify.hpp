#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/morse.hpp"

namespace dmt {

struct BettiVector {
  std::vector<std::uint64_t> ranks;                 // b_0 .. b_d
  std::vector<std::vector<std::uint64_t>> torsion;  // torsion coefficients per degree
  std::uint64_t prime = 0;                          // 0 over the integers

  std::int64_t euler_characteristic() const;
};

inline constexpr std::uint64_t kDefaultHomologyLimit = 100000;
inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

struct HomologyOptions {
  std::uint64_t size_limit = kDefaultHomologyLimit;  // total faces, integer mode only
  std::uint64_t prime = 0;   // nonzero: Betti numbers over GF(prime), no torsion
  bool reduce = true;        // coreduction and collapse preprocessing
};

// Simplicial homology with boundary signs (-1)^j on sorted vertex tuples.
// Integer mode throws SizeLimitExceeded above the size limit.
BettiVector betti_numbers(const SimplicialComplex& k, const HomologyOptions& options = {});

// Dense integer matrix, row major.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int64_t> a;
  std::int64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
// Throws SizeLimitExceeded when an entry would overflow 64 bits.
std::vector<std::int64_t> smith_invariants(IntMatrix m);
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t prime);

struct MorseConsistency {
  bool euler_ok = true;
  std::optional<bool> inequalities_ok;  // empty when Betti numbers were unavailable
  std::vector<std::string> messages;

  bool ok() const { return euler_ok && inequalities_ok.value_or(true); }
};

// Alternating sum against the Euler characteristic, then weak and strong
// Morse inequalities. Only necessary conditions: a passing vector need not
// be realizable.
MorseConsistency check_morse_consistency(const SimplicialComplex& k, const MorseVector& v,
                                         const BettiVector* betti = nullptr);

enum class Decision { Yes, No, Unknown };
std::string to_string(Decision d);

struct OracleResult {
  Decision decision = Decision::Unknown;
  std::uint64_t nodes = 0;
};

// Depth-first search over elementary collapse sequences, memoizing residual
// complexes that were already shown to be dead ends.
OracleResult exhaustive_collapsible(const SimplicialComplex& k, std::uint64_t node_budget);
// Recursive definition with memoization on the canonical facet list.
OracleResult exhaustive_nonevasive(const SimplicialComplex& k, std::uint64_t node_budget);

}  // namespace dmt

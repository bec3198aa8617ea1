#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "dmt/complex_ops.hpp"
#include "dmt/errors.hpp"
#include "dmt/facet_io.hpp"
#include "dmt/verify.hpp"

namespace dmt {

namespace {

struct BudgetExhausted {};

struct BitsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t x : v) {
      h ^= x;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Unknown: return "unknown";
  }
  return "unknown";
}

MorseConsistency check_morse_consistency(const SimplicialComplex& k, const MorseVector& v,
                                         const BettiVector* betti) {
  MorseConsistency out;
  const int d = k.dimension();
  if (static_cast<int>(v.size()) != d + 1) {
    out.euler_ok = false;
    out.messages.push_back("vector has " + std::to_string(v.size()) + " entries, expected " +
                           std::to_string(d + 1));
    return out;
  }
  std::int64_t alt = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    alt += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(v[i]);
  const std::int64_t chi = k.f_vector().euler_characteristic();
  if (alt != chi) {
    out.euler_ok = false;
    out.messages.push_back("alternating sum " + std::to_string(alt) +
                           " differs from the Euler characteristic " + std::to_string(chi));
  }

  BettiVector computed;
  if (!betti) {
    try {
      computed = betti_numbers(k);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeLimitExceeded) throw;
      HomologyOptions field;
      field.prime = kDefaultPrime;
      computed = betti_numbers(k, field);
    }
    betti = &computed;
  }
  if (betti->ranks.size() != v.size()) {
    out.messages.push_back("Betti numbers unavailable for this dimension");
    return out;
  }
  bool ok = true;
  std::int64_t strong_c = 0, strong_b = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < betti->ranks[i]) {
      ok = false;
      out.messages.push_back("c_" + std::to_string(i) + " = " + std::to_string(v[i]) +
                             " is below b_" + std::to_string(i) + " = " +
                             std::to_string(betti->ranks[i]));
    }
    strong_c = static_cast<std::int64_t>(v[i]) - strong_c;
    strong_b = static_cast<std::int64_t>(betti->ranks[i]) - strong_b;
    if (strong_c < strong_b) {
      ok = false;
      out.messages.push_back("strong Morse inequality fails in degree " + std::to_string(i));
    }
  }
  out.inequalities_ok = ok;
  if (ok && out.euler_ok)
    out.messages.push_back("necessary conditions hold; realizability is not decided");
  return out;
}

OracleResult exhaustive_collapsible(const SimplicialComplex& k, std::uint64_t node_budget) {
  OracleResult res;
  if (k.empty()) {
    res.decision = Decision::No;
    return res;
  }
  const int d = k.dimension();
  std::vector<std::size_t> offset(d + 2, 0);
  for (int j = 0; j <= d; ++j) offset[j + 1] = offset[j] + k.num_faces(j);
  const std::size_t total = offset[d + 1];
  const std::size_t words = (total + 63) / 64;
  auto test = [](const std::vector<std::uint64_t>& s, std::size_t g) {
    return (s[g / 64] >> (g % 64)) & 1u;
  };
  auto clear = [](std::vector<std::uint64_t>& s, std::size_t g) {
    s[g / 64] &= ~(std::uint64_t{1} << (g % 64));
  };

  // The alive-face bitset over the fixed face numbering determines the
  // residual complex exactly, so it serves as the memo key.
  std::unordered_set<std::vector<std::uint64_t>, BitsHash> dead;
  std::function<bool(const std::vector<std::uint64_t>&, std::size_t)> search =
      [&](const std::vector<std::uint64_t>& state, std::size_t remaining) -> bool {
    if (++res.nodes > node_budget) throw BudgetExhausted{};
    if (remaining == 1) return true;
    if (dead.count(state)) return false;
    for (int j = 0; j < d; ++j)
      for (FaceIndex i = 0; i < k.num_faces(j); ++i) {
        if (!test(state, offset[j] + i)) continue;
        FaceIndex partner = 0;
        int alive_cofaces = 0;
        for (FaceIndex c : k.cofaces(j, i))
          if (test(state, offset[j + 1] + c)) {
            partner = c;
            if (++alive_cofaces > 1) break;
          }
        if (alive_cofaces != 1) continue;
        std::vector<std::uint64_t> next = state;
        clear(next, offset[j] + i);
        clear(next, offset[j + 1] + partner);
        if (search(next, remaining - 2)) return true;
      }
    dead.insert(state);
    return false;
  };

  std::vector<std::uint64_t> start(words, ~std::uint64_t{0});
  if (total % 64) start.back() = (std::uint64_t{1} << (total % 64)) - 1;
  try {
    res.decision = search(start, total) ? Decision::Yes : Decision::No;
  } catch (const BudgetExhausted&) {
    res.decision = Decision::Unknown;
  }
  return res;
}

OracleResult exhaustive_nonevasive(const SimplicialComplex& k, std::uint64_t node_budget) {
  OracleResult res;
  std::unordered_map<std::string, bool> memo;
  std::function<bool(const SimplicialComplex&)> nonevasive = [&](const SimplicialComplex& c) {
    if (++res.nodes > node_budget) throw BudgetExhausted{};
    if (c.empty()) return false;
    if (c.num_vertices() == 1) return true;
    const std::string key = to_facet_text(c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = false;
    for (Vertex v : c.vertices()) {
      const SimplicialComplex link = link_of(c, Face{v});
      if (link.empty()) continue;
      if (nonevasive(link) && nonevasive(delete_vertex(c, v))) {
        result = true;
        break;
      }
    }
    memo.emplace(key, result);
    return result;
  };
  try {
    res.decision = nonevasive(k) ? Decision::Yes : Decision::No;
  } catch (const BudgetExhausted&) {
    res.decision = Decision::Unknown;
  }
  return res;
}

}  // namespace dmt

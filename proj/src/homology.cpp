#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "dmt/errors.hpp"
#include "dmt/verify.hpp"

namespace dmt {

namespace {

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r))
    fail(ErrorCode::SizeLimitExceeded,
         "integer entries overflow during Smith normal form; use prime-field mode");
  return r;
}

std::int64_t abs64(std::int64_t x) {
  if (x == INT64_MIN) fail(ErrorCode::SizeLimitExceeded, "integer entry overflow");
  return x < 0 ? -x : x;
}

// Sparse column over GF(p): (row, value) sorted by row.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, x = b % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Column reduction keyed on the largest row index of each column.
std::size_t sparse_rank_mod_p(std::vector<SparseColumn> cols, std::size_t rows, std::uint64_t p) {
  std::vector<std::int64_t> pivot_of(rows, -1);
  std::size_t rank = 0;
  SparseColumn tmp;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    SparseColumn& col = cols[c];
    while (!col.empty()) {
      const auto [low, val] = col.back();
      const std::int64_t pc = pivot_of[low];
      if (pc < 0) break;
      const SparseColumn& piv = cols[pc];
      // col -= (val / piv_low) * piv
      const std::uint64_t factor = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(val) * pow_mod(piv.back().second, p - 2, p) % p);
      tmp.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          tmp.push_back(col[i++]);
        } else {
          const std::uint64_t sub = static_cast<std::uint64_t>(
              static_cast<unsigned __int128>(factor) * piv[j].second % p);
          if (i < col.size() && col[i].first == piv[j].first) {
            const std::uint64_t v = (col[i].second + p - sub) % p;
            if (v) tmp.push_back({col[i].first, v});
            ++i;
          } else {
            tmp.push_back({piv[j].first, (p - sub) % p});
          }
          ++j;
        }
      }
      col.swap(tmp);
    }
    if (!col.empty()) {
      pivot_of[col.back().first] = static_cast<std::int64_t>(c);
      ++rank;
    }
  }
  return rank;
}

std::uint64_t to_field(std::int64_t x, std::uint64_t p) {
  const std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

}  // namespace

std::int64_t BettiVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    chi += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(ranks[i]);
  return chi;
}

std::vector<std::int64_t> smith_invariants(IntMatrix m) {
  const std::size_t r = m.rows, c = m.cols;
  std::vector<std::int64_t> diag;
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    if (x != y)
      for (std::size_t j = 0; j < c; ++j) std::swap(m.at(x, j), m.at(y, j));
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x != y)
      for (std::size_t i = 0; i < r; ++i) std::swap(m.at(i, x), m.at(i, y));
  };
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    std::size_t pi = r, pj = c;
    std::int64_t best = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        const std::int64_t v = m.at(i, j);
        if (v != 0 && (best == 0 || abs64(v) < best)) {
          best = abs64(v);
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      const std::int64_t p = m.at(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m.at(i, t) == 0) continue;
        const std::int64_t q = m.at(i, t) / p;
        for (std::size_t j = t; j < c; ++j) m.at(i, j) = checked_sub_mul(m.at(i, j), q, m.at(t, j));
        if (m.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m.at(t, j) == 0) continue;
        const std::int64_t q = m.at(t, j) / p;
        for (std::size_t i = t; i < r; ++i) m.at(i, j) = checked_sub_mul(m.at(i, j), q, m.at(i, t));
        if (m.at(t, j) != 0) clean = false;
      }
      if (clean) break;
      // A remainder is smaller than the pivot; bring it to the pivot position.
      std::size_t bi = t, bj = t;
      std::int64_t small = abs64(m.at(t, t));
      for (std::size_t i = t + 1; i < r; ++i)
        if (m.at(i, t) != 0 && abs64(m.at(i, t)) < small) small = abs64(m.at(i, t)), bi = i, bj = t;
      for (std::size_t j = t + 1; j < c; ++j)
        if (m.at(t, j) != 0 && abs64(m.at(t, j)) < small) small = abs64(m.at(t, j)), bi = t, bj = j;
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
    diag.push_back(abs64(m.at(t, t)));
  }
  // Diagonal to invariant factors: replace pairs by (gcd, lcm) until each divides the next.
  std::sort(diag.begin(), diag.end());
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const std::int64_t g = std::gcd(diag[i], diag[j]);
      if (g == diag[i]) continue;
      std::int64_t l;
      if (__builtin_mul_overflow(diag[i] / g, diag[j], &l))
        fail(ErrorCode::SizeLimitExceeded, "invariant factor overflow");
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t prime) {
  std::vector<SparseColumn> cols(m.cols);
  for (std::size_t j = 0; j < m.cols; ++j)
    for (std::size_t i = 0; i < m.rows; ++i)
      if (const std::uint64_t v = to_field(m.at(i, j), prime))
        cols[j].push_back({static_cast<std::uint32_t>(i), v});
  return sparse_rank_mod_p(std::move(cols), m.rows, prime);
}

BettiVector betti_numbers(const SimplicialComplex& k, const HomologyOptions& options) {
  BettiVector out;
  out.prime = options.prime;
  if (k.empty()) return out;
  if (options.prime == 0 && k.total_faces() > options.size_limit)
    fail(ErrorCode::SizeLimitExceeded,
         "complex has " + std::to_string(k.total_faces()) +
             " faces, above the integer homology limit " + std::to_string(options.size_limit) +
             "; use prime-field mode");
  const int d = k.dimension();
  std::vector<std::vector<std::uint8_t>> alive(d + 1);
  std::vector<std::vector<std::uint32_t>> bcount(d + 1), ccount(d + 1);
  for (int j = 0; j <= d; ++j) {
    const std::size_t n = k.num_faces(j);
    alive[j].assign(n, 1);
    bcount[j].assign(n, j == 0 ? 0 : j + 1);
    ccount[j].resize(n);
    for (FaceIndex i = 0; i < n; ++i)
      ccount[j][i] = static_cast<std::uint32_t>(k.cofaces(j, i).size());
  }

  if (options.reduce) {
    std::vector<FaceRef> work;
    auto remove = [&](int j, FaceIndex i) {
      alive[j][i] = 0;
      for (FaceIndex b : k.boundary(j, i))
        if (alive[j - 1][b]) {
          --ccount[j - 1][b];
          work.push_back({j - 1, b});
        }
      for (FaceIndex c : k.cofaces(j, i))
        if (alive[j + 1][c]) {
          --bcount[j + 1][c];
          work.push_back({j + 1, c});
        }
    };
    // Relative to one vertex: reduced homology, restored at the end.
    remove(0, 0);
    for (int j = d; j >= 0; --j)
      for (FaceIndex i = 0; i < k.num_faces(j); ++i) work.push_back({j, i});
    while (!work.empty()) {
      const FaceRef f = work.back();
      work.pop_back();
      if (!alive[f.dim][f.index]) continue;
      if (f.dim >= 1 && bcount[f.dim][f.index] == 1) {
        FaceIndex a = 0;
        for (FaceIndex b : k.boundary(f.dim, f.index))
          if (alive[f.dim - 1][b]) a = b;
        remove(f.dim, f.index);
        remove(f.dim - 1, a);
      } else if (f.dim < d && ccount[f.dim][f.index] == 1) {
        FaceIndex t = 0;
        for (FaceIndex c : k.cofaces(f.dim, f.index))
          if (alive[f.dim + 1][c]) t = c;
        remove(f.dim + 1, t);
        remove(f.dim, f.index);
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> index(d + 1);
  std::vector<std::uint64_t> n(d + 1, 0);
  for (int j = 0; j <= d; ++j) {
    index[j].assign(k.num_faces(j), UINT32_MAX);
    for (FaceIndex i = 0; i < k.num_faces(j); ++i)
      if (alive[j][i]) index[j][i] = static_cast<std::uint32_t>(n[j]++);
  }
  std::vector<std::uint64_t> rank(d + 2, 0);
  std::vector<std::vector<std::uint64_t>> invariants(d + 2);
  for (int j = 1; j <= d; ++j) {
    if (n[j] == 0 || n[j - 1] == 0) continue;
    if (options.prime) {
      std::vector<SparseColumn> cols;
      cols.reserve(n[j]);
      for (FaceIndex i = 0; i < k.num_faces(j); ++i) {
        if (!alive[j][i]) continue;
        SparseColumn col;
        auto bd = k.boundary(j, i);
        for (std::size_t t = 0; t < bd.size(); ++t)
          if (alive[j - 1][bd[t]])
            col.push_back({index[j - 1][bd[t]], t % 2 ? options.prime - 1 : 1});
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
      }
      rank[j] = sparse_rank_mod_p(std::move(cols), n[j - 1], options.prime);
    } else {
      if (n[j] * n[j - 1] > 50'000'000ull)
        fail(ErrorCode::SizeLimitExceeded, "boundary matrix too large for dense Smith form");
      IntMatrix m{n[j - 1], n[j], std::vector<std::int64_t>(n[j - 1] * n[j], 0)};
      for (FaceIndex i = 0; i < k.num_faces(j); ++i) {
        if (!alive[j][i]) continue;
        auto bd = k.boundary(j, i);
        for (std::size_t t = 0; t < bd.size(); ++t)
          if (alive[j - 1][bd[t]]) m.at(index[j - 1][bd[t]], index[j][i]) = t % 2 ? -1 : 1;
      }
      for (std::int64_t x : smith_invariants(std::move(m))) {
        ++rank[j];
        if (x > 1) invariants[j].push_back(static_cast<std::uint64_t>(x));
      }
    }
  }
  out.ranks.resize(d + 1);
  out.torsion.resize(d + 1);
  for (int j = 0; j <= d; ++j) {
    out.ranks[j] = n[j] - rank[j] - rank[j + 1];
    out.torsion[j] = invariants[j + 1];
  }
  if (options.reduce) out.ranks[0] += 1;
  return out;
}

}  // namespace dmt

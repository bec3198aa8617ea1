#include "dmt/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "dmt/errors.hpp"

namespace dmt {

namespace {

using u128 = unsigned __int128;

template <typename Key>
void sort_rows_packed(std::vector<LocalVertex>& rows, std::size_t width,
                      unsigned bits) {
  const std::size_t n = rows.size() / width;
  std::vector<Key> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    Key key = 0;
    for (std::size_t j = 0; j < width; ++j)
      key = (key << bits) | static_cast<Key>(rows[i * width + j]);
    keys[i] = key;
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  rows.resize(keys.size() * width);
  const Key mask = (Key{1} << bits) - 1;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    Key key = keys[i];
    for (std::size_t j = width; j-- > 0;) {
      rows[i * width + j] = static_cast<LocalVertex>(key & mask);
      key >>= bits;
    }
  }
}

void sort_rows_generic(std::vector<LocalVertex>& rows, std::size_t width) {
  const std::size_t n = rows.size() / width;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto row_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(rows.begin() + a * width,
                                        rows.begin() + (a + 1) * width,
                                        rows.begin() + b * width,
                                        rows.begin() + (b + 1) * width);
  };
  std::sort(order.begin(), order.end(), row_less);
  std::vector<LocalVertex> out;
  out.reserve(rows.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = order[k];
    if (k > 0 && !row_less(order[k - 1], i)) continue;
    out.insert(out.end(), rows.begin() + i * width, rows.begin() + (i + 1) * width);
  }
  rows = std::move(out);
}

}  // namespace

void sort_unique_rows(std::vector<LocalVertex>& rows, std::size_t width,
                      LocalVertex max_value) {
  if (rows.empty()) return;
  const unsigned bits = std::max(1u, static_cast<unsigned>(std::bit_width(max_value)));
  if (width * bits <= 64)
    sort_rows_packed<std::uint64_t>(rows, width, bits);
  else if (width * bits <= 128)
    sort_rows_packed<u128>(rows, width, bits);
  else
    sort_rows_generic(rows, width);
}

std::int64_t FVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(counts[i]);
  return chi;
}

std::uint64_t FVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

SimplicialComplex SimplicialComplex::from_facets(std::span<const Face> facets) {
  if (facets.empty()) fail(ErrorCode::InvalidArgument, "no facets given");
  std::vector<Vertex> labels;
  std::size_t max_size = 0;
  for (const Face& f : facets) {
    if (f.empty()) fail(ErrorCode::MalformedFace, "empty face in input");
    labels.insert(labels.end(), f.begin(), f.end());
    max_size = std::max(max_size, f.size());
  }
  if (max_size > 24)
    fail(ErrorCode::SizeLimitExceeded, "faces with more than 24 vertices are not supported");
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::vector<std::vector<LocalVertex>> rows(max_size);
  std::vector<LocalVertex> local;
  for (const Face& f : facets) {
    local.clear();
    for (Vertex v : f)
      local.push_back(static_cast<LocalVertex>(
          std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
    const std::uint32_t s = static_cast<std::uint32_t>(local.size());
    for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
      auto& out = rows[std::popcount(mask) - 1];
      for (std::uint32_t j = 0; j < s; ++j)
        if (mask & (1u << j)) out.push_back(local[j]);
    }
  }
  const auto max_value = static_cast<LocalVertex>(labels.size() - 1);
  for (std::size_t k = 0; k < rows.size(); ++k)
    sort_unique_rows(rows[k], k + 1, max_value);
  return from_closed_rows(std::move(labels), std::move(rows));
}

SimplicialComplex SimplicialComplex::from_closed_rows(
    std::vector<Vertex> labels, std::vector<std::vector<LocalVertex>> rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  c.rows_ = std::move(rows);
  if (!c.rows_.empty() && c.rows_[0].size() != c.labels_.size())
    fail(ErrorCode::Consistency, "vertex rows do not match the label list");
  c.build_incidences();
  return c;
}

void SimplicialComplex::build_incidences() {
  const int d = dimension();
  boundary_.assign(rows_.size(), {});
  coface_offsets_.assign(rows_.size(), {});
  cofaces_.assign(rows_.size(), {});
  std::vector<LocalVertex> sub;
  for (int k = 1; k <= d; ++k) {
    const std::size_t n = num_faces(k);
    auto& bd = boundary_[k];
    bd.resize(n * (k + 1));
    for (FaceIndex i = 0; i < n; ++i) {
      auto r = row(k, i);
      for (int j = 0; j <= k; ++j) {
        sub.assign(r.begin(), r.end());
        sub.erase(sub.begin() + j);
        auto idx = find_row(k - 1, sub);
        if (!idx) fail(ErrorCode::Consistency, "face list is not closed under subsets");
        bd[static_cast<std::size_t>(i) * (k + 1) + j] = *idx;
      }
    }
    const std::size_t m = num_faces(k - 1);
    auto& off = coface_offsets_[k - 1];
    off.assign(m + 1, 0);
    for (FaceIndex b : bd) ++off[b + 1];
    for (std::size_t i = 0; i < m; ++i) off[i + 1] += off[i];
    auto& co = cofaces_[k - 1];
    co.resize(bd.size());
    std::vector<std::uint64_t> fill(off.begin(), off.end() - 1);
    for (FaceIndex i = 0; i < n; ++i)
      for (int j = 0; j <= k; ++j) co[fill[bd[static_cast<std::size_t>(i) * (k + 1) + j]]++] = i;
  }
  if (d >= 0) coface_offsets_[d].assign(num_faces(d) + 1, 0);
}

std::size_t SimplicialComplex::num_faces(int k) const {
  if (k < 0 || k > dimension()) return 0;
  return rows_[k].size() / (k + 1);
}

std::size_t SimplicialComplex::total_faces() const {
  std::size_t n = 0;
  for (int k = 0; k <= dimension(); ++k) n += num_faces(k);
  return n;
}

FVector SimplicialComplex::f_vector() const {
  FVector f;
  for (int k = 0; k <= dimension(); ++k) f.counts.push_back(num_faces(k));
  return f;
}

std::optional<LocalVertex> SimplicialComplex::local_vertex(Vertex label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<LocalVertex>(it - labels_.begin());
}

std::span<const LocalVertex> SimplicialComplex::row(int k, FaceIndex i) const {
  return std::span<const LocalVertex>(rows_[k]).subspan(
      static_cast<std::size_t>(i) * (k + 1), k + 1);
}

Face SimplicialComplex::face(int k, FaceIndex i) const {
  std::vector<Vertex> v;
  v.reserve(k + 1);
  for (LocalVertex x : row(k, i)) v.push_back(labels_[x]);
  return Face::from_sorted(std::move(v));
}

std::optional<FaceIndex> SimplicialComplex::find_row(
    int k, std::span<const LocalVertex> r) const {
  if (k < 0 || k > dimension() || r.size() != static_cast<std::size_t>(k + 1))
    return std::nullopt;
  const auto& data = rows_[k];
  const std::size_t w = k + 1;
  std::size_t lo = 0, hi = data.size() / w;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto it = data.begin() + mid * w;
    if (std::lexicographical_compare(it, it + w, r.begin(), r.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == data.size() / w) return std::nullopt;
  if (!std::equal(r.begin(), r.end(), data.begin() + lo * w)) return std::nullopt;
  return static_cast<FaceIndex>(lo);
}

std::optional<FaceRef> SimplicialComplex::find(const Face& f) const {
  if (f.empty()) return std::nullopt;
  std::vector<LocalVertex> r;
  r.reserve(f.size());
  for (Vertex v : f) {
    auto lv = local_vertex(v);
    if (!lv) return std::nullopt;
    r.push_back(*lv);
  }
  auto idx = find_row(f.dimension(), r);
  if (!idx) return std::nullopt;
  return FaceRef{f.dimension(), *idx};
}

std::span<const FaceIndex> SimplicialComplex::boundary(int k, FaceIndex i) const {
  if (k <= 0) return {};
  return std::span<const FaceIndex>(boundary_[k]).subspan(
      static_cast<std::size_t>(i) * (k + 1), k + 1);
}

std::span<const FaceIndex> SimplicialComplex::cofaces(int k, FaceIndex i) const {
  if (k >= dimension()) return {};
  const auto& off = coface_offsets_[k];
  return std::span<const FaceIndex>(cofaces_[k]).subspan(off[i], off[i + 1] - off[i]);
}

std::vector<Face> SimplicialComplex::faces(int k) const {
  std::vector<Face> out;
  out.reserve(num_faces(k));
  for (FaceIndex i = 0; i < num_faces(k); ++i) out.push_back(face(k, i));
  return out;
}

std::vector<FaceRef> SimplicialComplex::facet_refs() const {
  std::vector<FaceRef> out;
  for (int k = 0; k <= dimension(); ++k)
    for (FaceIndex i = 0; i < num_faces(k); ++i)
      if (cofaces(k, i).empty()) out.push_back({k, i});
  return out;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (FaceRef r : facet_refs()) out.push_back(face(r));
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::is_pure() const {
  for (int k = 0; k < dimension(); ++k)
    for (FaceIndex i = 0; i < num_faces(k); ++i)
      if (cofaces(k, i).empty()) return false;
  return true;
}

std::vector<std::uint64_t> SimplicialComplex::vertex_valences() const {
  std::vector<std::uint64_t> val(num_vertices(), 0);
  for (FaceIndex e = 0; e < num_faces(1); ++e)
    for (LocalVertex v : row(1, e)) ++val[v];
  return val;
}

}  // namespace dmt

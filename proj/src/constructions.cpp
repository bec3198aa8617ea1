#include "dmt/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "dmt/errors.hpp"
#include "dmt/facet_io.hpp"

namespace dmt {

namespace detail {
const std::string& poincare_text();
}

namespace {

SimplicialComplex closure(const std::vector<Face>& faces) {
  if (faces.empty()) return {};
  return SimplicialComplex::from_facets(faces);
}

void require_dim(int d, int min, const char* what) {
  if (d < min)
    fail(ErrorCode::InvalidArgument,
         std::string(what) + " needs dimension >= " + std::to_string(min));
}

Face with_vertex(const Face& f, Vertex v) {
  std::vector<Vertex> out(f.begin(), f.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return Face::from_sorted(std::move(out));
}

std::string format_counts(const std::vector<std::uint64_t>& c) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < c.size(); ++i) s << (i ? "," : "") << c[i];
  s << ')';
  return s.str();
}

}  // namespace

std::optional<std::size_t> PolytopalComplex::find(const std::vector<Vertex>& vertices) const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i] == vertices) return i;
  return std::nullopt;
}

std::size_t PolytopalComplex::top() const {
  return static_cast<std::size_t>(std::max_element(dims.begin(), dims.end()) - dims.begin());
}

SimplicialComplex simplex(int d) {
  require_dim(d, 0, "simplex");
  std::vector<Vertex> v(d + 1);
  std::iota(v.begin(), v.end(), Vertex{1});
  return SimplicialComplex::from_facets(std::vector<Face>{Face(v)});
}

SimplicialComplex simplex_boundary(int d) {
  require_dim(d, 1, "simplex boundary");
  std::vector<Face> facets;
  for (Vertex skip = 1; skip <= d + 1; ++skip) {
    std::vector<Vertex> v;
    for (Vertex x = 1; x <= d + 1; ++x)
      if (x != skip) v.push_back(x);
    facets.emplace_back(std::move(v));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cross_polytope(int d) {
  require_dim(d, 1, "cross-polytope");
  std::vector<Face> facets;
  for (unsigned s = 0; s < (1u << d); ++s) {
    std::vector<Vertex> v;
    for (int i = 0; i < d; ++i) v.push_back((s >> i) & 1u ? i + 1 : d + i + 1);
    facets.emplace_back(std::move(v));
  }
  return SimplicialComplex::from_facets(facets);
}

Vertex cube_label(int d, unsigned coordinates) {
  return d + 2 + static_cast<Vertex>(coordinates ^ 1u);
}

PolytopalComplex cube_lattice(int d) {
  require_dim(d, 1, "cube lattice");
  if (d > 12) fail(ErrorCode::SizeLimitExceeded, "cube lattice dimension too large");
  const unsigned all = (1u << d) - 1;
  struct Pattern { unsigned fixed, values; };
  std::vector<Pattern> patterns;
  for (unsigned fixed = 0; fixed <= all; ++fixed)
    for (unsigned values = fixed;; values = (values - 1) & fixed) {
      patterns.push_back({fixed, values});
      if (values == 0) break;
    }
  auto dim_of = [&](const Pattern& p) { return d - std::popcount(p.fixed); };
  auto verts_of = [&](const Pattern& p) {
    std::vector<Vertex> v;
    for (unsigned x = 0; x <= all; ++x)
      if ((x & p.fixed) == p.values) v.push_back(cube_label(d, x));
    std::sort(v.begin(), v.end());
    return v;
  };
  std::sort(patterns.begin(), patterns.end(), [&](const Pattern& a, const Pattern& b) {
    if (dim_of(a) != dim_of(b)) return dim_of(a) < dim_of(b);
    return verts_of(a) < verts_of(b);
  });
  PolytopalComplex p;
  std::map<std::pair<unsigned, unsigned>, std::size_t> index;
  for (const Pattern& pat : patterns) {
    index[{pat.fixed, pat.values}] = p.cells.size();
    p.cells.push_back(verts_of(pat));
    p.dims.push_back(dim_of(pat));
  }
  p.covers.resize(patterns.size());
  for (std::size_t c = 0; c < patterns.size(); ++c) {
    const Pattern& pat = patterns[c];
    for (int i = 0; i < d; ++i) {
      const unsigned bit = 1u << i;
      if (pat.fixed & bit) continue;
      p.covers[c].push_back(index.at({pat.fixed | bit, pat.values}));
      p.covers[c].push_back(index.at({pat.fixed | bit, pat.values | bit}));
    }
  }
  return p;
}

std::vector<Face> pulling_triangulation(const PolytopalComplex& p, std::size_t cell,
                                        const std::vector<Vertex>& order) {
  auto rank = [&](Vertex v) {
    auto it = std::find(order.begin(), order.end(), v);
    if (it == order.end())
      fail(ErrorCode::InvalidArgument, "pull order misses vertex " + std::to_string(v));
    return it - order.begin();
  };
  std::function<std::vector<Face>(std::size_t)> pull = [&](std::size_t c) {
    const auto& verts = p.cells[c];
    if (verts.size() == 1) return std::vector<Face>{Face::from_sorted(verts)};
    const Vertex first = *std::min_element(
        verts.begin(), verts.end(), [&](Vertex a, Vertex b) { return rank(a) < rank(b); });
    std::vector<Face> out;
    for (std::size_t f : p.covers[c]) {
      const auto& fv = p.cells[f];
      if (std::binary_search(fv.begin(), fv.end(), first)) continue;
      for (const Face& s : pull(f)) out.push_back(with_vertex(s, first));
    }
    return out;
  };
  return pull(cell);
}

SimplicialComplex antiprism_triangulation(int d, const std::vector<Vertex>& pull_order) {
  require_dim(d, 2, "antiprism triangulation");
  const PolytopalComplex cube = cube_lattice(d);
  const unsigned all = (1u << d) - 1;
  std::vector<Vertex> order = pull_order;
  std::vector<Vertex> labels = cube.cells[cube.top()];
  if (order.empty()) order = labels;
  {
    std::vector<Vertex> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != labels)
      fail(ErrorCode::InvalidArgument,
           "pull order must be a permutation of the cube labels");
  }
  const Vertex prime_base = (Vertex{1} << d) + d + 1;
  std::vector<Face> facets;
  for (unsigned coords = 1; coords <= all; ++coords)
    for (unsigned signs = coords;; signs = (signs - 1) & coords) {
      std::vector<Vertex> sigma;
      for (int i = 0; i < d; ++i)
        if (coords & (1u << i)) sigma.push_back(signs & (1u << i) ? i + 1 : prime_base + i + 1);
      std::vector<Vertex> dual;
      for (unsigned x = 0; x <= all; ++x)
        if ((x & coords) == signs) dual.push_back(cube_label(d, x));
      std::sort(dual.begin(), dual.end());
      const std::size_t cell = *cube.find(dual);
      const Face base(sigma);
      for (const Face& s : pulling_triangulation(cube, cell, order)) facets.push_back(join(base, s));
      if (signs == 0) break;
    }
  for (Face& s : pulling_triangulation(cube, cube.top(), order)) facets.push_back(std::move(s));
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex build_sigma(int d, const std::vector<Vertex>& pull_order) {
  require_dim(d, 2, "sigma");
  SimplicialComplex k = antiprism_triangulation(d, pull_order);
  const Vertex prime_base = (Vertex{1} << d) + d + 1;
  Vertex fresh = prime_base + d + 1;
  VertexMap m;
  for (unsigned s = 0; s + 1 < (1u << d); ++s) {
    std::vector<Vertex> f;
    for (int i = 0; i < d; ++i) f.push_back((s >> i) & 1u ? i + 1 : prime_base + i + 1);
    k = stellar_subdivision(k, Face(f), fresh);
    m[fresh++] = d + 1;
  }
  for (int i = 1; i <= d; ++i) m[prime_base + i] = i;
  return apply_map(k, m);
}

SimplicialComplex cone(const SimplicialComplex& k, std::optional<Vertex> apex) {
  const Vertex a = apex.value_or(max_vertex(k) + 1);
  if (a <= 0) fail(ErrorCode::InvalidArgument, "apex must be positive");
  if (k.local_vertex(a))
    fail(ErrorCode::InvalidArgument, "apex " + std::to_string(a) + " is already a vertex");
  std::vector<Face> facets;
  for (const Face& f : k.facets()) facets.push_back(with_vertex(f, a));
  if (facets.empty()) facets.push_back(Face{a});
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex suspension(const SimplicialComplex& k) {
  const Vertex a = max_vertex(k) + 1, b = a + 1;
  std::vector<Face> facets;
  for (const Face& f : k.facets()) {
    facets.push_back(with_vertex(f, a));
    facets.push_back(with_vertex(f, b));
  }
  if (facets.empty()) facets = {Face{a}, Face{b}};
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex one_point_suspension(const SimplicialComplex& k, Vertex v) {
  if (!k.local_vertex(v))
    fail(ErrorCode::FaceNotFound, "vertex " + std::to_string(v) + " is not in the complex");
  const Vertex w2 = max_vertex(k) + 2;
  return contract_edge(suspension(k), v, w2);
}

Vertex barycenter_id(const SimplicialComplex& k, FaceRef face) {
  Vertex id = 1;
  for (int j = 0; j < face.dim; ++j) id += static_cast<Vertex>(k.num_faces(j));
  return id + face.index;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k, int iterations) {
  if (iterations < 1) fail(ErrorCode::InvalidArgument, "iterations must be >= 1");
  SimplicialComplex cur = k;
  for (int it = 0; it < iterations; ++it) {
    const int d = cur.dimension();
    if (d < 0) return cur;
    const std::size_t total = cur.total_faces();
    if (total > (std::size_t{1} << 31))
      fail(ErrorCode::SizeLimitExceeded, "subdivision has too many vertices");
    std::vector<LocalVertex> offset(d + 1, 0);
    for (int j = 1; j <= d; ++j) offset[j] = offset[j - 1] + cur.num_faces(j - 1);

    std::vector<std::vector<LocalVertex>> rows(d + 1);
    std::vector<LocalVertex> sub_id;
    std::vector<LocalVertex> chain;
    std::vector<LocalVertex> sub_row;
    for (int kdim = 0; kdim <= d; ++kdim) {
      const unsigned width = kdim + 1;
      const unsigned full = (1u << width) - 1;
      sub_id.assign(full + 1, 0);
      for (FaceIndex g = 0; g < cur.num_faces(kdim); ++g) {
        auto r = cur.row(kdim, g);
        for (unsigned mask = 1; mask <= full; ++mask) {
          sub_row.clear();
          for (unsigned j = 0; j < width; ++j)
            if (mask & (1u << j)) sub_row.push_back(r[j]);
          const int sd = std::popcount(mask) - 1;
          sub_id[mask] = offset[sd] + *cur.find_row(sd, sub_row);
        }
        // Every chain whose top element is g, emitted once.
        std::function<void(unsigned)> descend = [&](unsigned mask) {
          chain.push_back(sub_id[mask]);
          auto& out = rows[chain.size() - 1];
          out.insert(out.end(), chain.rbegin(), chain.rend());
          for (unsigned s = (mask - 1) & mask; s != 0; s = (s - 1) & mask) descend(s);
          chain.pop_back();
        };
        descend(full);
      }
    }
    const auto max_value = static_cast<LocalVertex>(total - 1);
    for (int j = 0; j <= d; ++j) sort_unique_rows(rows[j], j + 1, max_value);
    std::vector<Vertex> labels(total);
    std::iota(labels.begin(), labels.end(), Vertex{1});
    cur = SimplicialComplex::from_closed_rows(std::move(labels), std::move(rows));
  }
  return cur;
}

FVector subdivision_f_vector(const FVector& f) {
  constexpr std::uint64_t kMax = UINT64_MAX;
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? kMax : r;
  };
  auto add = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? kMax : r;
  };
  const std::size_t n = f.counts.size();
  // stirling[a][b] = S(a, b) for a, b <= n
  std::vector<std::vector<std::uint64_t>> stirling(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  stirling[0][0] = 1;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= a; ++b)
      stirling[a][b] = add(mul(b, stirling[a - 1][b]), stirling[a - 1][b - 1]);
  FVector out;
  std::uint64_t fact = 1;
  for (std::size_t j = 0; j < n; ++j) {
    fact = mul(fact, j + 1);
    std::uint64_t s = 0;
    for (std::size_t kk = j; kk < n; ++kk)
      s = add(s, mul(f.counts[kk], mul(fact, stirling[kk + 1][j + 1])));
    out.counts.push_back(s);
  }
  return out;
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k, const Face& sigma,
                                      std::optional<Vertex> fresh) {
  if (!k.contains(sigma))
    fail(ErrorCode::FaceNotFound, "face " + sigma.to_string() + " is not in the complex");
  const Vertex c = fresh.value_or(max_vertex(k) + 1);
  if (c <= 0 || k.local_vertex(c))
    fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(c) + " is already in use");
  std::vector<Face> facets;
  for (const Face& f : k.facets()) {
    if (!sigma.is_subset_of(f)) {
      facets.push_back(f);
      continue;
    }
    std::vector<Vertex> rest;
    std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(),
                        std::back_inserter(rest));
    for (Vertex x : sigma) {
      std::vector<Vertex> v = rest;
      for (Vertex y : sigma)
        if (y != x) v.push_back(y);
      v.push_back(c);
      facets.emplace_back(std::move(v));
    }
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex stack_facet(const SimplicialComplex& k, const Face& facet,
                              std::optional<Vertex> fresh) {
  auto ref = k.find(facet);
  if (!ref) fail(ErrorCode::FaceNotFound, "face " + facet.to_string() + " is not in the complex");
  if (!k.cofaces(ref->dim, ref->index).empty())
    fail(ErrorCode::InvalidArgument, facet.to_string() + " is not a facet");
  return stellar_subdivision(k, facet, fresh);
}

SimplicialComplex product_with_interval(const SimplicialComplex& k) {
  const Vertex top = max_vertex(k);
  auto upper = [&](Vertex v) { return top + static_cast<Vertex>(*k.local_vertex(v)) + 1; };
  std::vector<Face> facets;
  for (const Face& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<Vertex> v(f.begin(), f.begin() + i + 1);
      for (std::size_t j = i; j < f.size(); ++j) v.push_back(upper(f[j]));
      facets.push_back(Face::from_sorted(std::move(v)));
    }
  return closure(facets);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k,
                                     const std::vector<Vertex>& vertices) {
  std::vector<char> keep(k.num_vertices(), 0);
  for (Vertex v : vertices)
    if (auto lv = k.local_vertex(v)) keep[*lv] = 1;
  std::vector<Face> faces;
  for (FaceRef r : k.facet_refs()) {
    std::vector<Vertex> v;
    for (LocalVertex x : k.row(r.dim, r.index))
      if (keep[x]) v.push_back(k.label(x));
    if (!v.empty()) faces.push_back(Face::from_sorted(std::move(v)));
  }
  return closure(faces);
}

SimplicialComplex build_E(int d) {
  require_dim(d, 2, "E");
  if (d == 2) return barycentric_subdivision(build_sigma(2));
  const SimplicialComplex lower = build_sigma(d - 1);
  const Vertex w = max_vertex(lower) + 1;
  const SimplicialComplex upper = build_sigma(d);
  // The free face {1..d} of the upper complex becomes {1..d-1, w}; all of its
  // other vertices are moved past w.
  VertexMap m;
  for (Vertex v : upper.vertices())
    if (v >= d) m[v] = v == d ? w : w + v - d;
  const SimplicialComplex u = union_of(cone(lower, w), apply_map(upper, m));
  const SimplicialComplex sd = barycentric_subdivision(u);
  std::vector<Vertex> lower_barycenters;
  for (int j = 0; j <= lower.dimension(); ++j)
    for (const Face& f : lower.faces(j)) lower_barycenters.push_back(barycenter_id(u, *u.find(f)));
  const SimplicialComplex sd_lower = induced_subcomplex(sd, lower_barycenters);
  return union_of(sd, cone(sd_lower, max_vertex(sd) + 1));
}

namespace {

std::vector<Face> sigma2_sigma3prime_facets() {
  std::vector<Face> t = {
      {1, 3, 23}, {1, 22, 23}, {1, 22, 24}, {1, 22, 25}, {1, 24, 25}, {2, 3, 25},
      {2, 22, 23}, {2, 22, 24}, {2, 22, 25}, {2, 23, 24}, {3, 23, 25}, {23, 24, 25}};
  const Vertex cone_base[7][3] = {{1, 2, 5}, {1, 2, 6}, {1, 3, 5}, {1, 4, 6},
                                  {2, 5, 6}, {3, 4, 6}, {3, 5, 6}};
  for (Vertex x = 7; x <= 13; ++x) {
    const Vertex y = x + 7;
    for (const auto& b : cone_base) t.push_back({b[0], b[1], b[2], x});
    t.push_back({1, 3, x, y});
    t.push_back({1, 4, x, y});
    t.push_back({3, 4, x, y});
    t.push_back({1, 2, 4, y});
    t.push_back({2, 3, 4, y});
  }
  const std::vector<Face> rest = {
      {2, 3, 14, 15}, {1, 2, 15, 16}, {1, 3, 16, 17}, {2, 3, 17, 18}, {1, 2, 18, 19},
      {1, 3, 14, 19}, {1, 3, 15, 20}, {1, 2, 17, 20}, {2, 3, 19, 20},
      {1, 15, 16, 17}, {1, 15, 17, 20}, {2, 17, 18, 19}, {2, 17, 19, 20},
      {3, 14, 15, 19}, {3, 15, 19, 20}, {15, 17, 19, 20},
      {1, 2, 14, 21}, {1, 3, 18, 21}, {1, 14, 19, 21}, {1, 18, 19, 21}, {2, 3, 16, 21},
      {2, 14, 15, 21}, {2, 15, 16, 21}, {3, 16, 17, 21}, {3, 17, 18, 21},
      {14, 15, 19, 21}, {15, 16, 17, 21}, {15, 17, 19, 21}, {17, 18, 19, 21},
      {1, 2, 3, 21}};
  t.insert(t.end(), rest.begin(), rest.end());
  return t;
}

}  // namespace

SimplicialComplex build_sigma2_sigma3prime() {
  return SimplicialComplex::from_facets(sigma2_sigma3prime_facets());
}

SimplicialComplex build_two_optima() {
  std::vector<Face> t = sigma2_sigma3prime_facets();
  const Vertex triangles[9][3] = {{1, 2, 5}, {1, 2, 6}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6},
                                  {2, 3, 4}, {2, 5, 6}, {3, 4, 6}, {3, 5, 6}};
  for (int j = 0; j < 9; ++j) {
    const Vertex t1 = triangles[j][0], t2 = triangles[j][1], t3 = triangles[j][2];
    const Vertex a = 26 + 9 * j, e = a + 8;
    for (Vertex b = a + 1; b <= a + 7; ++b) {
      t.push_back({t1, t2, a, b});
      t.push_back({t1, t3, a, b});
      t.push_back({t2, t3, a, b});
    }
    const std::vector<Face> block = {
        {t2, t3, a + 1, a + 2}, {t1, t2, a + 2, a + 3}, {t1, t3, a + 3, a + 4},
        {t2, t3, a + 4, a + 5}, {t1, t2, a + 5, a + 6}, {t1, t3, a + 6, a + 1},
        {t1, t3, a + 2, a + 7}, {t1, t2, a + 4, a + 7}, {t2, t3, a + 6, a + 7},
        {t1, a + 2, a + 3, a + 4}, {t1, a + 2, a + 4, a + 7}, {t2, a + 4, a + 5, a + 6},
        {t2, a + 4, a + 6, a + 7}, {t3, a + 1, a + 2, a + 6}, {t3, a + 2, a + 6, a + 7},
        {a + 2, a + 4, a + 6, a + 7},
        {t1, t2, t3, e}, {t1, t2, a + 1, e}, {t1, t3, a + 5, e}, {t2, t3, a + 3, e},
        {t1, a + 1, a + 6, e}, {t1, a + 5, a + 6, e}, {t2, a + 1, a + 2, e},
        {t2, a + 2, a + 3, e}, {t3, a + 3, a + 4, e}, {t3, a + 4, a + 5, e},
        {a + 1, a + 2, a + 6, e}, {a + 2, a + 3, a + 4, e}, {a + 4, a + 5, a + 6, e},
        {a + 2, a + 4, a + 6, e}};
    t.insert(t.end(), block.begin(), block.end());
  }
  return SimplicialComplex::from_facets(t);
}

SimplicialComplex dunce_hat() {
  const std::vector<Face> facets = {
      {1, 3, 5}, {2, 3, 5}, {2, 4, 5}, {1, 2, 4}, {1, 3, 4}, {3, 4, 8},
      {1, 2, 8}, {1, 7, 8}, {1, 2, 7}, {2, 3, 7}, {3, 6, 7}, {1, 3, 6},
      {1, 5, 6}, {4, 5, 6}, {4, 6, 8}, {6, 7, 8}, {2, 3, 8}};
  return SimplicialComplex::from_facets(facets);
}

const std::string& poincare_facet_text() { return detail::poincare_text(); }

SimplicialComplex poincare() {
  return SimplicialComplex::from_facets(parse_facets(poincare_facet_text()));
}

SimplicialComplex simplicial_neighborhood(const SimplicialComplex& k,
                                          const SimplicialComplex& l) {
  if (!is_subcomplex(l, k))
    fail(ErrorCode::InvalidArgument, "the subcomplex is not contained in the complex");
  std::vector<char> marked(k.num_vertices(), 0);
  for (Vertex v : l.vertices()) marked[*k.local_vertex(v)] = 1;
  std::vector<Face> facets;
  for (FaceRef r : k.facet_refs()) {
    auto row = k.row(r.dim, r.index);
    if (std::any_of(row.begin(), row.end(), [&](LocalVertex x) { return marked[x]; }))
      facets.push_back(k.face(r));
  }
  return closure(facets);
}

namespace {

void check_stage(const PipelineStage& s) {
  if (s.expected.counts.empty()) return;
  const FVector got = s.complex.f_vector();
  if (got != s.expected)
    fail(ErrorCode::Consistency, "stage " + std::to_string(s.index) + " (" + s.name +
                                     "): expected f=" + format_counts(s.expected.counts) +
                                     ", got " + format_counts(got.counts));
}

void check_count(const PipelineStage& s, int dim, std::uint64_t expected) {
  const std::uint64_t got = s.complex.num_faces(dim);
  if (got != expected)
    fail(ErrorCode::Consistency, "stage " + std::to_string(s.index) + " (" + s.name +
                                     "): expected " + std::to_string(expected) + " faces of dimension " +
                                     std::to_string(dim) + ", got " + std::to_string(got));
}

}  // namespace

PipelineResult pipeline_5manifold(const SimplicialComplex& sphere) {
  PipelineResult res;
  auto add = [&](int index, std::string name, SimplicialComplex k, FVector expected,
                 std::string notes) -> const PipelineStage& {
    res.stages.push_back({index, std::move(name), std::move(k), std::move(expected), std::move(notes)});
    check_stage(res.stages.back());
    return res.stages.back();
  };

  add(1, "homology sphere", sphere, FVector{{16, 106, 180, 90}}, "input");
  const std::vector<std::uint64_t> valences = {14, 14, 11, 14, 14, 11, 14, 12,
                                               13, 15, 15, 14, 15, 15, 15, 6};
  std::vector<Vertex> expected_labels(16);
  std::iota(expected_labels.begin(), expected_labels.end(), Vertex{1});
  if (!std::equal(sphere.vertices().begin(), sphere.vertices().end(), expected_labels.begin(),
                  expected_labels.end()) ||
      sphere.vertex_valences() != valences)
    fail(ErrorCode::Consistency,
         "stage 1 (homology sphere): vertex labels or valences differ from the expected "
         "16-vertex triangulation; got valences " + format_counts(sphere.vertex_valences()));

  const auto& s2 = add(2, "sphere minus vertex star",
                       apply_map(delete_vertex(sphere, 15), VertexMap{{16, 15}}), {},
                       "star of vertex 15 removed, 16 renamed to 15");
  check_count(s2, 0, 15);
  check_count(s2, 3, 64);

  const auto& s3 = add(3, "product with interval", product_with_interval(res.stages[1].complex), {},
                       "staircase triangulation, (v,1) labelled v+15");
  check_count(s3, 0, 30);

  const SimplicialComplex& k3 = res.stages[2].complex;
  add(4, "cone over boundary", union_of(k3, cone(boundary_complex(k3), 31)), {},
      "apex 31");

  add(5, "one-point suspension",
      one_point_suspension(res.stages[3].complex, 31),
      FVector{{32, 349, 1352, 2471, 2154, 718}}, "apexes 32, 33; edge 31-33 contracted");

  const SimplicialComplex& s5 = res.stages[4].complex;
  add(6, "barycentric subdivision", barycentric_subdivision(s5),
      FVector{{7076, 152540, 807888, 1696344, 1550880, 516960}}, "");

  const Vertex b31 = barycenter_id(s5, *s5.find(Face{31}));
  const Vertex b32 = barycenter_id(s5, *s5.find(Face{32}));
  const Vertex b3132 = barycenter_id(s5, *s5.find(Face{31, 32}));
  const SimplicialComplex path =
      SimplicialComplex::from_facets(std::vector<Face>{Face{b31, b3132}, Face{b32, b3132}});
  add(7, "collar of singular path", simplicial_neighborhood(res.stages[5].complex, path),
      FVector{{5013, 72300, 290944, 495912, 383136, 110880}},
      "barycenters " + std::to_string(b31) + ", " + std::to_string(b3132) + ", " +
          std::to_string(b32));

  res.boundary = boundary_complex(res.stages[6].complex);
  const FVector expected_bd{{5010, 65520, 212000, 252480, 100992}};
  if (res.boundary.f_vector() != expected_bd)
    fail(ErrorCode::Consistency, "boundary of stage 7: expected f=" +
                                     format_counts(expected_bd.counts) + ", got " +
                                     format_counts(res.boundary.f_vector().counts));
  return res;
}

}  // namespace dmt

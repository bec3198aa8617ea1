#include "dmt/complex_ops.hpp"

#include <algorithm>
#include <set>

#include "dmt/errors.hpp"

namespace dmt {

namespace {

SimplicialComplex closure_or_empty(const std::vector<Face>& faces) {
  if (faces.empty()) return {};
  return SimplicialComplex::from_facets(faces);
}

Face require_face(const SimplicialComplex& k, const Face& sigma) {
  if (!k.contains(sigma))
    fail(ErrorCode::FaceNotFound, "face " + sigma.to_string() + " is not in the complex");
  return sigma;
}

Face minus(const Face& f, const Face& g) {
  std::vector<Vertex> out;
  std::set_difference(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(out));
  return Face::from_sorted(std::move(out));
}

}  // namespace

std::vector<FreeRef> free_face_refs(const SimplicialComplex& k) {
  std::vector<FreeRef> out;
  for (int d = 0; d < k.dimension(); ++d)
    for (FaceIndex i = 0; i < k.num_faces(d); ++i) {
      auto co = k.cofaces(d, i);
      if (co.size() == 1) out.push_back({{d, i}, co[0]});
    }
  return out;
}

std::vector<FreePair> free_faces(const SimplicialComplex& k) {
  std::vector<FreePair> out;
  for (const FreeRef& r : free_face_refs(k))
    out.push_back({k.face(r.sigma), k.face(r.sigma.dim + 1, r.tau)});
  return out;
}

SimplicialComplex link_of(const SimplicialComplex& k, const Face& sigma) {
  require_face(k, sigma);
  std::vector<Face> parts;
  for (const Face& f : k.facets())
    if (sigma.is_subset_of(f) && f.size() > sigma.size()) parts.push_back(minus(f, sigma));
  return closure_or_empty(parts);
}

SimplicialComplex closed_star_of(const SimplicialComplex& k, const Face& sigma) {
  require_face(k, sigma);
  std::vector<Face> parts;
  for (const Face& f : k.facets())
    if (sigma.is_subset_of(f)) parts.push_back(f);
  return closure_or_empty(parts);
}

SimplicialComplex delete_vertex(const SimplicialComplex& k, Vertex v) {
  if (!k.local_vertex(v))
    fail(ErrorCode::FaceNotFound, "vertex " + std::to_string(v) + " is not in the complex");
  const Face single{v};
  std::vector<Face> parts;
  for (const Face& f : k.facets()) {
    if (!f.contains(v))
      parts.push_back(f);
    else if (f.size() > 1)
      parts.push_back(minus(f, single));
  }
  return closure_or_empty(parts);
}

SimplicialComplex boundary_complex(const SimplicialComplex& k) {
  if (k.empty()) return {};
  if (!k.is_pure()) fail(ErrorCode::InvalidArgument, "boundary requires a pure complex");
  const int d = k.dimension();
  std::vector<Face> ridges;
  for (FaceIndex i = 0; i < k.num_faces(d - 1); ++i)
    if (k.cofaces(d - 1, i).size() == 1) ridges.push_back(k.face(d - 1, i));
  return closure_or_empty(ridges);
}

SimplicialComplex apply_map(const SimplicialComplex& k, const VertexMap& m) {
  std::vector<Face> image;
  for (const Face& f : k.facets()) {
    std::vector<Vertex> v;
    v.reserve(f.size());
    for (Vertex x : f) {
      auto it = m.find(x);
      v.push_back(it == m.end() ? x : it->second);
    }
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      fail(ErrorCode::QuotientUnsafe,
           "face " + f.to_string() + " has two vertices with the same image");
    image.push_back(Face(std::move(v)));
  }
  return closure_or_empty(image);
}

SimplicialComplex contract_edge(const SimplicialComplex& k, Vertex keep, Vertex remove) {
  require_face(k, Face{keep, remove});
  std::set<Face> lk_keep, lk_remove, lk_edge;
  const Face edge{keep, remove};
  for (int d = 1; d <= k.dimension(); ++d)
    for (FaceIndex i = 0; i < k.num_faces(d); ++i) {
      Face f = k.face(d, i);
      const bool a = f.contains(keep), b = f.contains(remove);
      if (a) lk_keep.insert(minus(f, Face{keep}));
      if (b) lk_remove.insert(minus(f, Face{remove}));
      if (a && b && d >= 2) lk_edge.insert(minus(f, edge));
    }
  std::vector<Face> common;
  std::set_intersection(lk_keep.begin(), lk_keep.end(), lk_remove.begin(),
                        lk_remove.end(), std::back_inserter(common));
  if (!std::equal(common.begin(), common.end(), lk_edge.begin(), lk_edge.end()) ||
      common.size() != lk_edge.size())
    fail(ErrorCode::LinkConditionViolated,
         "contracting " + edge.to_string() + " violates the link condition");

  std::vector<Face> image;
  for (const Face& f : k.facets()) {
    if (!f.contains(remove)) {
      image.push_back(f);
      continue;
    }
    std::vector<Vertex> v(f.begin(), f.end());
    std::replace(v.begin(), v.end(), remove, keep);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    image.push_back(Face::from_sorted(std::move(v)));
  }
  return closure_or_empty(image);
}

SimplicialComplex contract_edge(const SimplicialComplex& k, const Face& edge) {
  if (edge.size() != 2) fail(ErrorCode::InvalidArgument, "contraction needs an edge");
  return contract_edge(k, edge[0], edge[1]);
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Face> all = a.facets();
  for (Face& f : b.facets()) all.push_back(std::move(f));
  return closure_or_empty(all);
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& k) {
  for (const Face& f : sub.facets())
    if (!k.contains(f)) return false;
  return true;
}

Vertex max_vertex(const SimplicialComplex& k) {
  return k.num_vertices() == 0 ? 0 : k.vertices().back();
}

}  // namespace dmt

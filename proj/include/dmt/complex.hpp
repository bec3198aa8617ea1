#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dmt/face.hpp"

namespace dmt {

using FaceIndex = std::uint32_t;
using LocalVertex = std::uint32_t;

// A face addressed by dimension and position in that dimension's sorted list.
struct FaceRef {
  int dim = 0;
  FaceIndex index = 0;
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

struct FVector {
  std::vector<std::uint64_t> counts;  // counts[i] = number of i-faces

  int dimension() const noexcept { return static_cast<int>(counts.size()) - 1; }
  std::int64_t euler_characteristic() const;
  std::uint64_t total() const;

  friend bool operator==(const FVector&, const FVector&) = default;
};

// Finite abstract simplicial complex. Every face is stored explicitly, one
// lexicographically sorted list per dimension, together with boundary and
// cofacet incidences between consecutive dimensions. Vertex labels are kept
// as given; internally vertices are renumbered densely in label order, so the
// lexicographic order of dense rows equals the order of the labelled faces.
//
// Instances are immutable after construction and safe to share across threads.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // the empty complex

  // Downward closure of the given faces. Throws on empty input.
  static SimplicialComplex from_facets(std::span<const Face> facets);

  // Assembles a complex from per-dimension rows of dense vertex indices.
  // `rows[k]` holds (k+1)-tuples back to back, each strictly increasing,
  // sorted and duplicate free; the family must be closed under subsets.
  // `labels` maps dense index -> label and must be strictly increasing.
  static SimplicialComplex from_closed_rows(std::vector<Vertex> labels,
                                            std::vector<std::vector<LocalVertex>> rows);

  bool empty() const noexcept { return rows_.empty(); }
  int dimension() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_faces(int k) const;
  std::size_t total_faces() const;
  FVector f_vector() const;

  std::span<const Vertex> vertices() const noexcept { return labels_; }
  Vertex label(LocalVertex v) const { return labels_[v]; }
  std::optional<LocalVertex> local_vertex(Vertex label) const;

  // Dense vertex indices of a face.
  std::span<const LocalVertex> row(int k, FaceIndex i) const;
  Face face(int k, FaceIndex i) const;
  Face face(FaceRef ref) const { return face(ref.dim, ref.index); }

  std::optional<FaceIndex> find_row(int k, std::span<const LocalVertex> row) const;
  std::optional<FaceRef> find(const Face& f) const;
  bool contains(const Face& f) const { return find(f).has_value(); }

  // The k+1 codimension-one faces of a k-face (k >= 1); entry j omits the
  // j-th vertex of the face.
  std::span<const FaceIndex> boundary(int k, FaceIndex i) const;
  // The (k+1)-faces containing a k-face, in increasing index order.
  std::span<const FaceIndex> cofaces(int k, FaceIndex i) const;

  std::vector<Face> faces(int k) const;
  // Maximal faces, in lexicographic order of their vertex tuples.
  std::vector<Face> facets() const;
  std::vector<FaceRef> facet_refs() const;
  bool is_pure() const;

  // Number of edges at each vertex, in label order.
  std::vector<std::uint64_t> vertex_valences() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.rows_ == b.rows_;
  }

 private:
  void build_incidences();

  std::vector<Vertex> labels_;
  std::vector<std::vector<LocalVertex>> rows_;
  std::vector<std::vector<FaceIndex>> boundary_;        // boundary_[k], k >= 1
  std::vector<std::vector<std::uint64_t>> coface_offsets_;
  std::vector<std::vector<FaceIndex>> cofaces_;
};

// Sorts (width)-tuples stored back to back and removes duplicates.
void sort_unique_rows(std::vector<LocalVertex>& rows, std::size_t width,
                      LocalVertex max_value);

}  // namespace dmt

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/complex_ops.hpp"

namespace dmt {

// A polytopal complex given by its face lattice: each cell lists its vertex
// labels and the cells it covers (its facets).
struct PolytopalComplex {
  std::vector<std::vector<Vertex>> cells;
  std::vector<int> dims;
  std::vector<std::vector<std::size_t>> covers;

  std::optional<std::size_t> find(const std::vector<Vertex>& vertices) const;
  std::size_t top() const;  // index of the unique cell of maximal dimension
};

SimplicialComplex simplex(int d);            // closure of {1,...,d+1}
SimplicialComplex simplex_boundary(int d);   // proper faces of {1,...,d+1}
// Vertices 1..d and i' = d+i; facets pick i or i' for every i.
SimplicialComplex cross_polytope(int d);
// Face lattice of the d-cube on labels d+2 .. 2^d+d+1. The cube vertex with
// coordinates x gets label d+2+sum y_i 2^(i-1), where y_1 = 1-x_1 and
// y_i = x_i otherwise.
PolytopalComplex cube_lattice(int d);
Vertex cube_label(int d, unsigned coordinates);

// Pulling triangulation of one cell: the first vertex of the cell in
// `order` is coned over the pulled triangulations of the facets missing it.
std::vector<Face> pulling_triangulation(const PolytopalComplex& p, std::size_t cell,
                                        const std::vector<Vertex>& order);

SimplicialComplex cone(const SimplicialComplex& k, std::optional<Vertex> apex = {});
SimplicialComplex suspension(const SimplicialComplex& k);
// Suspension with apexes max+1 and max+2, then max+2 contracted onto v.
SimplicialComplex one_point_suspension(const SimplicialComplex& k, Vertex v);

// Barycenter of the i-th k-face gets id 1 + f_0 + ... + f_{k-1} + i.
Vertex barycenter_id(const SimplicialComplex& k, FaceRef face);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k, int iterations = 1);
// Face numbers of sd K from those of K, via f_j(sd K) = sum_k f_k (j+1)! S(k+1, j+1)
// with S the Stirling numbers of the second kind. Saturates at UINT64_MAX.
FVector subdivision_f_vector(const FVector& f);

SimplicialComplex stellar_subdivision(const SimplicialComplex& k, const Face& sigma,
                                      std::optional<Vertex> fresh = {});
SimplicialComplex stack_facet(const SimplicialComplex& k, const Face& facet,
                              std::optional<Vertex> fresh = {});
// Staircase triangulation; (v,0) keeps label v, (v,1) gets max + rank(v) + 1.
SimplicialComplex product_with_interval(const SimplicialComplex& k);
// Full subcomplex on the given vertices.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k,
                                     const std::vector<Vertex>& vertices);

// Antiprism over the boundary of the d-dimensional cross-polytope, with the
// inner cube and the mixed cells triangulated by pulling. Cross-polytope
// labels: 1..d and i' = 2^d+d+1+i. An empty order means ascending labels.
SimplicialComplex antiprism_triangulation(int d, const std::vector<Vertex>& pull_order = {});

SimplicialComplex build_sigma(int d, const std::vector<Vertex>& pull_order = {});
SimplicialComplex build_E(int d);
SimplicialComplex build_sigma2_sigma3prime();
SimplicialComplex build_two_optima();
SimplicialComplex dunce_hat();
SimplicialComplex poincare();
const std::string& poincare_facet_text();

// Union of the closed stars in k of the vertices of l.
SimplicialComplex simplicial_neighborhood(const SimplicialComplex& k,
                                          const SimplicialComplex& l);

struct PipelineStage {
  int index = 0;
  std::string name;
  SimplicialComplex complex;
  FVector expected;  // empty when only partial counts are checked
  std::string notes;
};

struct PipelineResult {
  std::vector<PipelineStage> stages;  // stages 1..7
  SimplicialComplex boundary;         // boundary of the stage 7 collar
};

// Runs the seven stages from a 16-vertex homology 3-sphere and checks each
// against its expected counts; throws Consistency with stage diagnostics.
PipelineResult pipeline_5manifold(const SimplicialComplex& poincare_sphere);

}  // namespace dmt

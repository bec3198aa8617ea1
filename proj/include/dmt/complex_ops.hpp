#pragma once

#include <map>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

// Old vertex -> new vertex. Vertices missing from the map are kept as they are.
using VertexMap = std::map<Vertex, Vertex>;

struct FreePair {
  Face sigma;  // the free face
  Face tau;    // its unique proper coface
  friend bool operator==(const FreePair&, const FreePair&) = default;
};

struct FreeRef {
  FaceRef sigma;
  FaceIndex tau = 0;  // index among faces of dimension sigma.dim + 1
};

// Every face with exactly one proper coface, in (dimension, lex) order.
std::vector<FreeRef> free_face_refs(const SimplicialComplex& k);
std::vector<FreePair> free_faces(const SimplicialComplex& k);

SimplicialComplex link_of(const SimplicialComplex& k, const Face& sigma);
SimplicialComplex closed_star_of(const SimplicialComplex& k, const Face& sigma);
SimplicialComplex delete_vertex(const SimplicialComplex& k, Vertex v);

// Closure of the codimension-one faces lying in exactly one facet.
SimplicialComplex boundary_complex(const SimplicialComplex& k);

// Image complex under `m`. Throws QuotientUnsafe when some face would lose a
// vertex because two of its vertices share an image.
SimplicialComplex apply_map(const SimplicialComplex& k, const VertexMap& m);

// Identifies `remove` with `keep`. The edge must exist and satisfy the link
// condition lk(keep) ∩ lk(remove) = lk(edge).
SimplicialComplex contract_edge(const SimplicialComplex& k, Vertex keep, Vertex remove);
// Keeps the smaller endpoint.
SimplicialComplex contract_edge(const SimplicialComplex& k, const Face& edge);

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& k);

Vertex max_vertex(const SimplicialComplex& k);

}  // namespace dmt

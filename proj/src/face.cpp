#include "dmt/face.hpp"

#include <algorithm>
#include <iterator>

#include "dmt/errors.hpp"

namespace dmt {

Face::Face(std::initializer_list<Vertex> vertices)
    : Face(std::vector<Vertex>(vertices)) {}

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) fail(ErrorCode::MalformedFace, "face has no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() <= 0)
    fail(ErrorCode::MalformedFace, "vertex ids must be positive");
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    fail(ErrorCode::MalformedFace,
         "face " + to_string() + " repeats a vertex");
}

Face Face::from_sorted(std::vector<Vertex> vertices) {
  Face f;
  f.vertices_ = std::move(vertices);
  return f;
}

bool Face::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

std::string Face::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vertices_[i]);
  }
  return s + "}";
}

Face join(const Face& a, const Face& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Face::from_sorted(std::move(out));
}

}  // namespace dmt

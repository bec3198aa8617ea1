#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dmt {

// Vertex identifiers are arbitrary positive integers chosen by the caller.
using Vertex = std::int64_t;

// A simplex given by its strictly increasing list of vertex labels.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<Vertex> vertices);
  explicit Face(std::vector<Vertex> vertices);

  // Trusted construction: the caller guarantees sortedness and positivity.
  static Face from_sorted(std::vector<Vertex> vertices);

  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool is_subset_of(const Face& other) const;

  // Lexicographic order on the vertex tuples.
  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

  std::string to_string() const;

 private:
  std::vector<Vertex> vertices_;
};

// Union of two faces (vertex sets merged).
Face join(const Face& a, const Face& b);

}  // namespace dmt

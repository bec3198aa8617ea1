#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

// Facet files: one face per line as whitespace-separated positive integers.
// Text after '#' is ignored, as are blank lines.
std::vector<Face> parse_facets(std::istream& in);
std::vector<Face> parse_facets(const std::string& text);
SimplicialComplex read_complex(const std::string& path);

// Writes the maximal faces in lexicographic order.
void write_facets(std::ostream& out, const SimplicialComplex& k);
std::string to_facet_text(const SimplicialComplex& k);
void write_complex(const std::string& path, const SimplicialComplex& k);

}  // namespace dmt

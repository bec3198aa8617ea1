#include "dmt/facet_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dmt/errors.hpp"

namespace dmt {

std::vector<Face> parse_facets(std::istream& in) {
  std::vector<Face> faces;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<Vertex> v;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r' || *p == ',')) ++p;
      if (p == end) break;
      Vertex x = 0;
      auto [next, ec] = std::from_chars(p, end, x);
      if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t' &&
                                *next != '\r' && *next != ','))
        throw ParseError(line_no, "expected a vertex id near '" +
                                      std::string(p, std::min<std::size_t>(end - p, 12)) + "'");
      if (x <= 0)
        throw ParseError(line_no, "vertex ids must be positive", ErrorCode::MalformedFace);
      v.push_back(x);
      p = next;
    }
    if (v.empty()) continue;
    try {
      faces.emplace_back(std::move(v));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what(), e.code());
    }
  }
  return faces;
}

std::vector<Face> parse_facets(const std::string& text) {
  std::istringstream in(text);
  return parse_facets(in);
}

SimplicialComplex read_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  auto faces = parse_facets(in);
  if (faces.empty()) fail(ErrorCode::Parse, path + " contains no faces");
  return SimplicialComplex::from_facets(faces);
}

void write_facets(std::ostream& out, const SimplicialComplex& k) {
  for (const Face& f : k.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
}

std::string to_facet_text(const SimplicialComplex& k) {
  std::ostringstream out;
  write_facets(out, k);
  return out.str();
}

void write_complex(const std::string& path, const SimplicialComplex& k) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot write " + path);
  write_facets(out, k);
  if (!out) fail(ErrorCode::Io, "write to " + path + " failed");
}

}  // namespace dmt

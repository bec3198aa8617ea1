#include <doctest.h>

#include <sstream>

#include "dmt/complex.hpp"
#include "dmt/complex_ops.hpp"
#include "dmt/constructions.hpp"
#include "dmt/errors.hpp"
#include "dmt/facet_io.hpp"
#include "support.hpp"

using namespace dmt;
using dmt::test::counts;

namespace {

SimplicialComplex K(std::initializer_list<Face> facets) {
  std::vector<Face> f(facets);
  return SimplicialComplex::from_facets(f);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("face validation") {
  CHECK(Face{3, 1, 2} == Face{1, 2, 3});
  CHECK(Face{1, 2, 3}.to_string() == "{1,2,3}");
  CHECK(code_of([] { Face{1, 1, 2}; }) == ErrorCode::MalformedFace);
  CHECK(code_of([] { Face{0, 2}; }) == ErrorCode::MalformedFace);
  CHECK(code_of([] { Face(std::vector<Vertex>{}); }) == ErrorCode::MalformedFace);
  CHECK(Face{1, 3}.is_subset_of(Face{1, 2, 3}));
  CHECK_FALSE(Face{1, 4}.is_subset_of(Face{1, 2, 3}));
  CHECK(join(Face{1, 3}, Face{2, 3}) == Face{1, 2, 3});
}

TEST_CASE("closure of small inputs") {
  CHECK(K({{1, 2, 3}}).f_vector().counts == counts({3, 3, 1}));
  CHECK(K({{1, 2}, {2, 3}}).f_vector().counts == counts({3, 2}));
  const auto v = K({{7}});
  CHECK(v.f_vector().counts == counts({1}));
  CHECK(v.f_vector().euler_characteristic() == 1);
  CHECK(code_of([] { SimplicialComplex::from_facets(std::vector<Face>{}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("closure and incidences agree with brute force") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    const auto facets = test::random_facets(rng, 9, 1 + round % 8, 5);
    const auto k = SimplicialComplex::from_facets(facets);
    const auto brute = test::brute_closure(facets);
    CHECK(k.total_faces() == brute.size());
    for (int d = 0; d <= k.dimension(); ++d)
      for (FaceIndex i = 0; i < k.num_faces(d); ++i) {
        const Face f = k.face(d, i);
        std::vector<Vertex> fv(f.begin(), f.end());
        REQUIRE(brute.count(fv));
        std::size_t co = 0;
        for (const auto& g : brute)
          if (g.size() == f.size() + 1 && std::includes(g.begin(), g.end(), fv.begin(), fv.end()))
            ++co;
        CHECK(k.cofaces(d, i).size() == co);
        if (d > 0) {
          CHECK(k.boundary(d, i).size() == f.size());
          for (std::size_t j = 0; j < f.size(); ++j) {
            std::vector<Vertex> sub = fv;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
            CHECK(k.face(d - 1, k.boundary(d, i)[j]) == Face(sub));
          }
        }
        CHECK(k.find(f)->index == i);
      }
    std::size_t maximal = 0;
    for (const auto& g : brute) {
      bool covered = false;
      for (const auto& h : brute)
        if (h.size() > g.size() && std::includes(h.begin(), h.end(), g.begin(), g.end())) {
          covered = true;
          break;
        }
      maximal += !covered;
    }
    CHECK(k.facets().size() == maximal);
  }
}

TEST_CASE("face lists are lexicographically sorted") {
  const auto k = K({{10, 2, 30}, {2, 5}, {5, 30, 40}});
  for (int d = 0; d <= k.dimension(); ++d) {
    const auto f = k.faces(d);
    CHECK(std::is_sorted(f.begin(), f.end()));
  }
  CHECK_FALSE(k.contains(Face{2, 40}));
  CHECK(k.contains(Face{30, 40}));
}

TEST_CASE("free faces") {
  CHECK(free_faces(K({{1, 2, 3}})).size() == 3);
  CHECK(free_faces(dunce_hat()).empty());
  CHECK(free_faces(simplex_boundary(3)).empty());
  const auto p = free_faces(K({{1, 2}, {2, 3}}));
  REQUIRE(p.size() == 2);
  CHECK(p[0] == FreePair{Face{1}, Face{1, 2}});
  CHECK(p[1] == FreePair{Face{3}, Face{2, 3}});
}

TEST_CASE("link, star, deletion") {
  const auto bd = simplex_boundary(3);
  const auto lk = link_of(bd, Face{1});
  CHECK(lk.f_vector().counts == counts({3, 3}));
  CHECK(lk == K({{2, 3}, {2, 4}, {3, 4}}));
  CHECK(link_of(bd, Face{1, 2}) == K({{3}, {4}}));
  CHECK(closed_star_of(poincare(), Face{15}).num_faces(3) == 26);
  CHECK(delete_vertex(K({{1, 2}, {2, 3}}), 3) == K({{1, 2}}));
  CHECK(code_of([&] { link_of(bd, Face{1, 5}); }) == ErrorCode::FaceNotFound);
  CHECK(code_of([&] { delete_vertex(bd, 9); }) == ErrorCode::FaceNotFound);
}

TEST_CASE("boundary complex") {
  CHECK(boundary_complex(simplex(3)) == simplex_boundary(3));
  CHECK(boundary_complex(simplex(3)).f_vector().counts == counts({4, 6, 4}));
  const auto square = product_with_interval(K({{1, 2}}));
  const auto b = boundary_complex(square);
  CHECK(b.f_vector().counts == counts({4, 4}));
  for (auto v : b.vertex_valences()) CHECK(v == 2);
  CHECK(code_of([] { boundary_complex(K({{1, 2, 3}, {3, 4}})); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("quotients") {
  const auto cycle = K({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(apply_map(cycle, {{3, 1}}) == K({{1, 2}, {1, 4}}));
  CHECK(apply_map(cycle, {}) == cycle);
  CHECK(apply_map(cycle, {{1, 1}, {2, 2}}) == cycle);
  CHECK(code_of([&] { apply_map(cycle, {{2, 1}}); }) == ErrorCode::QuotientUnsafe);
}

TEST_CASE("edge contraction and the link condition") {
  const auto bd = simplex_boundary(3);
  for (const Face& e : bd.faces(1)) {
    // Direct enumeration: lk(a) ∩ lk(b) versus lk(ab).
    const auto la = link_of(bd, Face{e[0]}), lb = link_of(bd, Face{e[1]});
    const auto le = link_of(bd, e);
    std::size_t common = 0;
    for (int d = 0; d <= la.dimension(); ++d)
      for (const Face& f : la.faces(d)) common += lb.contains(f);
    REQUIRE(common > le.total_faces());
    CHECK(code_of([&] { contract_edge(bd, e); }) == ErrorCode::LinkConditionViolated);
  }
  CHECK(contract_edge(K({{1, 2}, {2, 3}}), Face{1, 2}) == K({{1, 3}}));
  CHECK(contract_edge(K({{1, 2}, {2, 3}}), 2, 1) == K({{2, 3}}));
  CHECK(code_of([] { contract_edge(K({{1, 2}, {2, 3}}), 1, 3); }) == ErrorCode::FaceNotFound);
  // Contracting an interior edge of a triangulated disk keeps it a disk.
  const auto fan = K({{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}});
  const auto c = contract_edge(fan, 5, 1);
  CHECK(c.f_vector().counts == counts({4, 5, 2}));
  CHECK(c.f_vector().euler_characteristic() == 1);
}

TEST_CASE("union and subcomplex") {
  const auto a = K({{1, 2, 3}}), b = K({{3, 4}});
  const auto u = union_of(a, b);
  CHECK(u.f_vector().counts == counts({4, 4, 1}));
  CHECK(is_subcomplex(a, u));
  CHECK(is_subcomplex(b, u));
  CHECK_FALSE(is_subcomplex(u, a));
  CHECK(max_vertex(u) == 4);
}

TEST_CASE("facet file round trip") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    const auto k = SimplicialComplex::from_facets(test::random_facets(rng, 12, 6, 4));
    CHECK(SimplicialComplex::from_facets(parse_facets(to_facet_text(k))) == k);
  }
  const auto two = build_two_optima();
  CHECK(SimplicialComplex::from_facets(parse_facets(to_facet_text(two))) == two);
}

TEST_CASE("facet file parsing") {
  const auto f = parse_facets("# header\n1 2 3\n\n 4,5  # trailing\n6\t7\n");
  REQUIRE(f.size() == 3);
  CHECK(f[1] == Face{4, 5});
  try {
    parse_facets("1 2\n3 x 4\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.code() == ErrorCode::Parse);
  }
  try {
    parse_facets("1 2\n\n2 2 3\n");
    FAIL("expected a malformed face");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedFace);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([] { parse_facets("1 -2\n"); }) == ErrorCode::MalformedFace);
  CHECK(code_of([] { read_complex("/nonexistent/file.fac"); }) == ErrorCode::Io);
}

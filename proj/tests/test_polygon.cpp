#include "doctest.h"
#include "totval/polygon.hpp"

using namespace totval;

TEST_CASE("edge pairing is a fixed-point-free involution") {
  for (Int n = 3; n <= 14; ++n) {
    for (Int p = 1; p < n; ++p) {
      const auto s = PolygonSurface::build(n, p);
      for (Int e = 0; e < s.slot_count(); ++e) {
        CHECK(s.edge_partner(e) != e);
        CHECK(s.edge_partner(s.edge_partner(e)) == e);
        // alpha slots (odd) pair with beta slots (even)
        CHECK((e + s.edge_partner(e)) % 2 == 1);
      }
      Int corners = 0;
      for (const auto& cyc : s.vertex_cycles()) corners += static_cast<Int>(cyc.size());
      CHECK(corners == 2 * n);
    }
  }
}

TEST_CASE("surface genus") {
  CHECK(PolygonSurface::build(8, 1).genus() == 3);
  CHECK(PolygonSurface::build(4, 1).genus() == 1);
  const auto sphere = PolygonSurface::build(6, 5);
  CHECK(sphere.euler_characteristic() == 2);
  CHECK(sphere.genus() == 0);
  CHECK_THROWS_AS(PolygonSurface::build(2, 1), ValidationError);
  CHECK_THROWS_AS(PolygonSurface::build(5, 5), ValidationError);
}

TEST_CASE("oracle orbits of h_{4,1}") {
  const auto s = PolygonSurface::build(4, 1);
  const auto orbits = oracle_orbits(s, 1);
  Int face = 0, vertex = 0, edge = 0;
  for (const auto& o : orbits) {
    if (o.kind == CellKind::Face) {
      ++face;
      CHECK(o.isotropy == 4);
      CHECK(o.valency == Valency::make(1, 4));
    } else if (o.kind == CellKind::Vertex) {
      ++vertex;
    } else {
      ++edge;
      CHECK(o.isotropy == 1);
      CHECK_FALSE(o.valency.has_value());
    }
  }
  CHECK(face == 1);
  CHECK(vertex >= 1);
  CHECK(edge >= 1);
  CHECK(to_text(oracle_total_valency(s, 1)) == "[1,4; 1/4 + 1/4 + 1/2]");
}

TEST_CASE("oracle values") {
  CHECK(to_text(oracle_total_valency(PolygonSurface::build(8, 1), 1)) == "[3,8; 1/8 + 1/8 + 3/4]");
  CHECK(to_text(oracle_total_valency(PolygonSurface::build(6, 3), 2)) == "[1,3; 1/3 + 1/3 + 1/3]");
  CHECK(to_text(oracle_total_valency(PolygonSurface::build(6, 3), 3)) == "[1,2; 1/2 + 1/2 + 1/2 + 1/2]");
  CHECK(to_text(oracle_total_valency(PolygonSurface::build(10, 5), 4)) == "[2,5; 1/5 + 1/5 + 3/5]");
  CHECK_THROWS_AS(oracle_orbits(PolygonSurface::build(6, 3), 0), ValidationError);
  CHECK_THROWS_AS(oracle_orbits(PolygonSurface::build(6, 3), 6), ValidationError);
}

TEST_CASE("oracle matches the closed form") {
  for (Int n = 3; n <= 16; ++n) {
    for (Int p = 1; p < n; ++p) {
      const auto s = PolygonSurface::build(n, p);
      CHECK(s.genus() == hnp_genus(n, p));
      for (Int k = 1; k < n; ++k) CHECK(oracle_total_valency(s, k) == power(hnp(n, p), k));
    }
  }
}

TEST_CASE("dump") {
  const auto j = PolygonSurface::build(4, 1).dump();
  CHECK(j["n"] == 4);
  CHECK(j["genus"] == 1);
  CHECK(j["edge_pairing"].size() == 4);
}

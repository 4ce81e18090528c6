#include "doctest.h"

#include "curveaut/chars.hpp"

using namespace curveaut;

TEST_CASE("space sextic characteristic table") {
  auto t = space_sextic_chars(0, 0);
  CHECK(t.rank == 18);
  CHECK(t.apparent_double_points == 6);
  CHECK(t.cls == 36);
  CHECK(t.double_touch_class == 96);
  CHECK(t.double_curve_order == 126);
  CHECK(t.stationary_planes == 60);
  CHECK(t.triple_tangent_planes == 120);
  CHECK(t.triple_tangent_points == 480);
  CHECK(t.osculating_with_tangent == 324);

  auto t12 = space_sextic_chars(12, 0);
  CHECK(t12.stationary_planes == 36);
  CHECK(t12.cls == 24);

  auto t75 = space_sextic_chars(0, 75);
  CHECK(t75.osculating_with_tangent == 24);

  CHECK_THROWS_AS(space_sextic_chars(13, 0), Error);
}

TEST_CASE("gamma-prime closed form and integrality across the theta range") {
  for (long theta = 0; theta <= 12; ++theta) {
    for (long delta : {0L, 9L, 75L}) {
      auto t = space_sextic_chars(theta, delta);
      CHECK(t.osculating_with_tangent == 324 - 12 * theta - 4 * delta);
      // g integral for every theta: constructor would have thrown otherwise
      CHECK(t.lines_in_two_osculating_planes ==
            531 - (65 * theta - theta * theta) / 2 - delta);
      CHECK(t.triple_tangent_planes == contact_phi_count(4));
    }
  }
}

TEST_CASE("plane pluecker formulas") {
  PlaneChars q;
  q.degree = 4;
  q.nodes = 0;
  q.cusps = 0;
  auto r = plane_pluecker(q);
  CHECK(*r.cls == 12);
  CHECK(*r.inflexions == 24);
  CHECK(*r.bitangents == 28);
  CHECK(*r.genus == 3);

  PlaneChars s;
  s.degree = 6;
  s.nodes = 6;
  s.cusps = 0;
  auto rs = plane_pluecker(s);
  CHECK(*rs.cls == 18);
  CHECK(*rs.genus == 4);

  PlaneChars c;
  c.degree = 3;
  c.nodes = 0;
  c.cusps = 0;
  auto rc = plane_pluecker(c);
  CHECK(*rc.cls == 6);
  CHECK(*rc.inflexions == 9);

  // idempotent on a complete consistent table
  auto again = plane_pluecker(r);
  CHECK(*again.cls == *r.cls);
  CHECK(*again.bitangents == *r.bitangents);

  // inconsistent over-determination rejected
  PlaneChars bad = r;
  bad.genus = 7;
  CHECK_THROWS_AS(plane_pluecker(bad), Error);
}

TEST_CASE("counting formulas") {
  CHECK(weierstrass_count(4) == 60);
  CHECK(weierstrass_count(3) == 24);
  CHECK(weierstrass_count(2) == 6);
  CHECK(contact_phi_count(4) == 120);
  CHECK(contact_phi_count(3) == 28);
  CHECK(contact_phi_count(2) == 6);
  CHECK(trisecant_genus(0) == 11);
  CHECK(trisecant_genus(6) == 5);
  CHECK(trisecant_genus(4) == 7);
  CHECK_THROWS_AS(trisecant_genus(7), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knotgap/diagram.hpp"
#include "support/pdgen.hpp"

using namespace knotgap;

namespace {
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
}

TEST_CASE("parse and roundtrip") {
  Diagram d = parse_pd(std::string("trefoil: ") + kTrefoil);
  CHECK(d.name == "trefoil");
  CHECK(d.n() == 3);
  CHECK(d.edges() == 6);
  CHECK(to_pd(d) == std::string("trefoil: ") + kTrefoil);
  Diagram d2 = parse_pd(to_pd(d));
  CHECK(to_pd(d2) == to_pd(d));

  Diagram u = parse_pd("unknot:");
  CHECK(u.n() == 0);
  CHECK(u.name == "unknot");
  CHECK(writhe(u) == 0);
  CHECK(seifert_circles(u).size() == 1);
  Faces f = faces(u);
  CHECK(f.count() == 2);
  CHECK(is_reduced(u, f));
  CHECK(is_prime_diagram(u));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("hello("), SyntaxError);
  CHECK_THROWS_AS(parse_pd(""), SyntaxError);
  CHECK_THROWS_AS(parse_pd("X(1,-4,2,5)"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("X(1,4,2,5) X(3,6,4,1)"), ValidationError);
  CHECK_THROWS_AS(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,1)"),
                  ValidationError);
  // two components (Hopf link)
  CHECK_THROWS_AS(parse_pd("X(1,3,2,4) X(3,1,4,2)"), ValidationError);
}

TEST_CASE("edge traversal helpers") {
  Diagram d = parse_pd(kTrefoil);
  CHECK(d.next_edge(1) == 2);
  CHECK(d.next_edge(6) == 1);
  CHECK(d.prev_edge(1) == 6);
  CHECK(d.prev_edge(4) == 3);
}

TEST_CASE("trefoil invariants") {
  Diagram d = parse_pd(kTrefoil);
  CHECK(writhe(d) == 3);
  CHECK(seifert_circles(d).size() == 2);
  Faces f = faces(d);
  CHECK(f.count() == 5);
  CHECK(is_reduced(d, f));
  CHECK(find_nugatory(d, f) == -1);
  CHECK(is_prime_diagram(d));

  Diagram m = mirror(d);
  CHECK(writhe(m) == -3);
  CHECK(seifert_circles(m).size() == 2);
  CHECK(faces(m).count() == 5);
}

TEST_CASE("crossing signs") {
  Diagram d = parse_pd(kTrefoil);
  for (const Crossing& x : d.xs) CHECK(x.sign == 1);
  Diagram m = mirror(d);
  for (const Crossing& x : m.xs) CHECK(x.sign == -1);
}

TEST_CASE("face orbits partition the darts") {
  for (int n = 1; n <= 5; ++n) {
    Diagram d = parse_pd(pdgen::twist_knot_pd(n));
    Faces f = faces(d);
    size_t total = 0;
    for (const auto& orbit : f.orbit) total += orbit.size();
    CHECK(total == size_t(4 * d.n()));
    for (int dart = 0; dart < 4 * d.n(); ++dart) {
      int fc = f.face_of_dart[dart];
      REQUIRE(fc >= 0);
      REQUIRE(fc < f.count());
    }
  }
}

TEST_CASE("twist knot family") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    Diagram d = parse_pd(pdgen::twist_knot_pd(n));
    CHECK(d.n() == 2 * n + 2);
    CHECK(writhe(d) == 2 - 2 * n);
    CHECK(seifert_circles(d).size() == size_t(2 * n + 1));
    // Euler: n crossings, 2n edges, so n + 2 faces.
    CHECK(faces(d).count() == d.n() + 2);
    CHECK(is_reduced(d, faces(d)));
    CHECK(is_prime_diagram(d));
  }
}

TEST_CASE("connected sums are composite") {
  Diagram granny = parse_pd(pdgen::connected_sum_pd(kTrefoil, kTrefoil));
  CHECK(granny.n() == 6);
  CHECK(writhe(granny) == 6);
  CHECK_FALSE(is_prime_diagram(granny));

  Diagram square =
      parse_pd(pdgen::connected_sum_pd(kTrefoil, pdgen::mirror_pd(kTrefoil)));
  CHECK(square.n() == 6);
  CHECK(writhe(square) == 0);
  CHECK_FALSE(is_prime_diagram(square));
}

TEST_CASE("kinks are nugatory") {
  Diagram d = parse_pd(pdgen::add_kink(kTrefoil, 2, 1));
  CHECK(d.n() == 4);
  Faces f = faces(d);
  CHECK_FALSE(is_reduced(d, f));
  int k = find_nugatory(d, f);
  REQUIRE(k >= 0);
  // the nugatory crossing has the same face at two opposite quadrants
  bool opposite = f.at_quadrant(k, 0) == f.at_quadrant(k, 2) ||
                  f.at_quadrant(k, 1) == f.at_quadrant(k, 3);
  CHECK(opposite);

  Diagram kink1 = parse_pd(pdgen::add_kink("", 1, 1));
  CHECK(kink1.n() == 1);
  CHECK_FALSE(is_reduced(kink1, faces(kink1)));
}

TEST_CASE("mirror is an involution") {
  for (int n = 1; n <= 4; ++n) {
    Diagram d = parse_pd(pdgen::twist_knot_pd(n));
    Diagram mm = mirror(mirror(d));
    CHECK(to_pd(mm) == to_pd(d));
    CHECK(writhe(mirror(d)) == -writhe(d));
  }
}

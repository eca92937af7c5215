#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "polytet/generators.hpp"
#include "polytet/off_io.hpp"
#include "polytet/polyhedron.hpp"

using namespace polytet;

TEST_CASE("triangle and tet canonical forms") {
  Triangle t = Triangle::of(5, 1, 3);
  CHECK(t.v == std::array<int, 3>{1, 3, 5});
  CHECK_THROWS_AS(Triangle::of(1, 1, 2), InvalidParams);

  Tet q = Tet::of(7, 0, 3, 5);
  CHECK(q.v == std::array<int, 4>{0, 3, 5, 7});
  CHECK(q.contains_edge(7, 0));
  CHECK_FALSE(q.contains_edge(1, 3));
  CHECK_THROWS_AS(Tet::of(1, 2, 2, 3), InvalidParams);

  auto tris = Tet::of(0, 1, 2, 3).triangles();
  CHECK(tris[0] == Triangle::of(0, 1, 2));
  CHECK(tris[3] == Triangle::of(1, 2, 3));
}

TEST_CASE("cube validates") {
  Polyhedron P = gen_cube();
  ValidationReport rep = validate(P);
  REQUIRE(rep.ok());
  CHECK(rep.convex);
  CHECK(volume6(P) == 6);
  CHECK_FALSE(is_simplicial(P));
}

TEST_CASE("prism validates") {
  Polyhedron P = gen_prism();
  ValidationReport rep = validate(P);
  REQUIRE(rep.ok());
  CHECK(rep.convex);
  CHECK(volume6(P) == 3);
  CHECK_FALSE(is_simplicial(P));
}

TEST_CASE("tetrahedron validates") {
  Polyhedron P = gen_tetrahedron();
  ValidationReport rep = validate(P);
  REQUIRE(rep.ok());
  CHECK(rep.convex);
  CHECK(volume6(P) == 1);
  CHECK(is_simplicial(P));
}

TEST_CASE("validation flags broken structure") {
  SECTION("missing face leaves unmatched edges") {
    Polyhedron P = gen_cube();
    P.faces.pop_back();
    CHECK_FALSE(validate(P).ok());
  }
  SECTION("flipped face breaks edge orientation pairing") {
    Polyhedron P = gen_cube();
    std::reverse(P.faces[0].begin(), P.faces[0].end());
    CHECK_FALSE(validate(P).ok());
  }
  SECTION("all faces flipped means negative volume") {
    Polyhedron P = gen_cube();
    for (auto& f : P.faces) std::reverse(f.begin(), f.end());
    ValidationReport rep = validate(P);
    REQUIRE_FALSE(rep.ok());
    bool mentions_volume = false;
    for (const auto& v : rep.violations)
      if (v.find("volume") != std::string::npos) mentions_volume = true;
    CHECK(mentions_volume);
  }
  SECTION("nonplanar face") {
    Polyhedron P = gen_cube();
    P.vertices[0].z = Rat(1, 10);  // vertex 0 is on three quads; all bend
    CHECK_FALSE(validate(P).ok());
  }
  SECTION("out-of-range index") {
    Polyhedron P = gen_cube();
    P.faces[0][0] = 99;
    CHECK_FALSE(validate(P).ok());
  }
  SECTION("repeated vertex in a face") {
    Polyhedron P = gen_cube();
    P.faces[0] = {0, 2, 2, 1};
    CHECK_FALSE(validate(P).ok());
  }
  SECTION("duplicate vertex coordinates") {
    Polyhedron P = gen_cube();
    P.vertices[7] = P.vertices[0];
    CHECK_FALSE(validate(P).ok());
  }
  SECTION("unused vertex breaks the Euler count") {
    Polyhedron P = gen_cube();
    P.vertices.push_back({Rat(5), Rat(5), Rat(5)});
    CHECK_FALSE(validate(P).ok());
  }
  SECTION("coplanar adjacent faces") {
    // Split one quad of the prism into two triangles: still a closed
    // surface with strictly convex faces, but the halves are coplanar
    // neighbors across the new diagonal.
    Polyhedron P = gen_prism();
    P.faces[2] = {0, 1, 4};  // was {0, 1, 4, 3}
    P.faces.push_back({0, 4, 3});
    ValidationReport rep = validate(P);
    REQUIRE_FALSE(rep.ok());
    bool mentions_coplanar = false;
    for (const auto& v : rep.violations)
      if (v.find("coplanar") != std::string::npos) mentions_coplanar = true;
    CHECK(mentions_coplanar);
  }
}

TEST_CASE("validation flags T-junctions") {
  // Triangular bipyramid whose bottom apex (vertex 4) gets moved onto the
  // far side of the shape. All faces stay nondegenerate triangles, the
  // combinatorics stay those of a closed surface, so only the geometric
  // vertex-placement checks can object.
  Polyhedron P;
  P.vertices = {{Rat(2), Rat(0), Rat(0)},
                {Rat(0), Rat(2), Rat(0)},
                {Rat(-2), Rat(-2), Rat(0)},
                {Rat(0), Rat(0), Rat(2)},
                {Rat(0), Rat(0), Rat(-2)}};
  P.faces = {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {1, 0, 4}, {2, 1, 4}, {0, 2, 4}};
  REQUIRE(validate(P).ok());  // sanity: the honest bipyramid is fine

  SECTION("vertex in the open interior of a face") {
    P.vertices[4] = {Rat(2, 3), Rat(2, 3), Rat(2, 3)};  // inside face {0,1,3}
    ValidationReport rep = validate(P);
    REQUIRE_FALSE(rep.ok());
    bool mentions_face = false;
    for (const auto& v : rep.violations)
      if (v.find("inside face") != std::string::npos) mentions_face = true;
    CHECK(mentions_face);
  }
  SECTION("vertex strictly inside an edge") {
    P.vertices[4] = {Rat(1), Rat(0), Rat(1)};  // midpoint of edge 0-3
    ValidationReport rep = validate(P);
    REQUIRE_FALSE(rep.ok());
    bool mentions_edge = false;
    for (const auto& v : rep.violations)
      if (v.find("inside edge") != std::string::npos) mentions_edge = true;
    CHECK(mentions_edge);
  }
}

TEST_CASE("strictly convex face requirement") {
  // A hexagonal face with a collinear triple is rejected.
  Polyhedron P;
  P.vertices = {{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(2), Rat(0), Rat(0)},
                {Rat(2), Rat(2), Rat(0)}, {Rat(0), Rat(2), Rat(0)}, {Rat(1), Rat(1), Rat(2)}};
  P.faces = {{0, 4, 3, 2, 1},  // bottom, contains collinear 0,1,2
             {0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {4, 0, 5}};
  ValidationReport rep = validate(P);
  REQUIRE_FALSE(rep.ok());
  bool mentions_convex = false;
  for (const auto& v : rep.violations)
    if (v.find("convex") != std::string::npos || v.find("collinear") != std::string::npos)
      mentions_convex = true;
  CHECK(mentions_convex);
}

TEST_CASE("triangulation bounds") {
  CHECK(triangulation_bounds(4) == std::pair<long, long>{1, 1});
  CHECK(triangulation_bounds(5) == std::pair<long, long>{2, 3});
  CHECK(triangulation_bounds(6) == std::pair<long, long>{3, 6});
  CHECK(triangulation_bounds(8) == std::pair<long, long>{5, 15});
  CHECK(triangulation_bounds(9) == std::pair<long, long>{6, 21});
  CHECK_THROWS_AS(triangulation_bounds(3), InvalidParams);
}

TEST_CASE("OFF round trip") {
  SECTION("cube with integer coordinates") {
    Polyhedron P = gen_cube();
    Polyhedron Q = parse_off_string(write_off_string(P));
    REQUIRE(Q.vertices.size() == P.vertices.size());
    REQUIRE(Q.faces == P.faces);
    for (size_t i = 0; i < P.vertices.size(); ++i) REQUIRE(Q.vertices[i] == P.vertices[i]);
  }
  SECTION("twisted shape with fractional coordinates") {
    Polyhedron P = gen_schoenhardt();
    Polyhedron Q = parse_off_string(write_off_string(P));
    REQUIRE(Q.faces == P.faces);
    for (size_t i = 0; i < P.vertices.size(); ++i) REQUIRE(Q.vertices[i] == P.vertices[i]);
  }
}

TEST_CASE("OFF parsing accepts decimals and comments") {
  std::string text =
      "# a tetrahedron\n"
      "OFF\n"
      "4 4 6\n"
      "0 0 0\n"
      "1.5 0 0   # trailing comment\n"
      "0 -0.25 0\n"
      "0 0 2e-1\n"
      "3 0 1 2\n"
      "3 0 2 3\n"
      "3 0 3 1\n"
      "3 2 1 3\n";
  Polyhedron P = parse_off_string(text);
  REQUIRE(P.vertices.size() == 4);
  CHECK(P.vertices[1].x == Rat(3, 2));
  CHECK(P.vertices[2].y == Rat(-1, 4));
  CHECK(P.vertices[3].z == Rat(1, 5));
  CHECK(validate(P).ok());
}

TEST_CASE("OFF parse errors carry positions") {
  SECTION("wrong header") {
    try {
      parse_off_string("NOFF\n1 0 0\n0 0 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 1);
      CHECK(e.col == 1);
    }
  }
  SECTION("malformed coordinate") {
    try {
      parse_off_string("OFF\n1 0 0\n0 zero 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK(e.col == 3);
    }
  }
  SECTION("truncated file") {
    CHECK_THROWS_AS(parse_off_string("OFF\n4 4 6\n0 0 0\n"), ParseError);
  }
  SECTION("face index out of range") {
    try {
      parse_off_string("OFF\n3 1 3\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 6);
    }
  }
  SECTION("trailing junk") {
    CHECK_THROWS_AS(parse_off_string("OFF\n0 0 0\nextra\n"), ParseError);
  }
  SECTION("zero denominator") {
    CHECK_THROWS_AS(parse_off_string("OFF\n1 0 0\n1/0 0 0\n"), ParseError);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-3/4") == Rat(-3, 4));
  CHECK(parse_rational("6/8") == Rat(3, 4));
  CHECK(parse_rational("2") == Rat(2));
  CHECK(parse_rational("-0.125") == Rat(-1, 8));
  CHECK(parse_rational("1e2") == Rat(100));
  CHECK(parse_rational("2.5e-1") == Rat(1, 4));
  CHECK(rat_to_string(Rat(-7, 25)) == "-7/25");
  CHECK(rat_to_string(Rat(42)) == "42");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidParams);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidParams);
  CHECK_THROWS_AS(parse_rational(""), InvalidParams);
  CHECK_THROWS_AS(parse_rational("1.2.3"), InvalidParams);
}

TEST_CASE("floor and ceiling of rationals") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(rat_floor(Rat(6)) == 6);
  CHECK(rat_ceil(Rat(6)) == 6);
}

#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "candidates.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "hull.hpp"
#include "polyhedron.hpp"
#include "prng.hpp"

namespace polytet {

namespace gen_detail {

inline Point3 vertex_centroid(const Polyhedron& P) {
  Rat x = 0, y = 0, z = 0;
  for (const auto& v : P.vertices) {
    x += v.x;
    y += v.y;
    z += v.z;
  }
  Rat n = static_cast<long>(P.vertices.size());
  return {x / n, y / n, z / n};
}

// Flips face cycles so the interior (represented by the vertex centroid,
// which must be strictly inside and off every face plane) lies on each
// cycle's negative side, i.e. cycles run counterclockwise from outside.
inline void orient_faces_outward(Polyhedron& P) {
  Point3 c = vertex_centroid(P);
  for (auto& face : P.faces) {
    int s = orient3d(P.vertices[face[0]], P.vertices[face[1]], P.vertices[face[2]], c);
    if (s == 0) throw InvalidParams("generator centroid lies on a face plane");
    if (s > 0) std::reverse(face.begin(), face.end());
  }
}

inline void require_valid(const Polyhedron& P, const char* what) {
  ValidationReport rep = validate(P);
  if (!rep.ok())
    throw InvalidParams(std::string(what) + ": construction failed validation: " +
                        rep.violations.front());
}

}  // namespace gen_detail

// Unit tetrahedron (0,0,0),(1,0,0),(0,1,0),(0,0,1).
inline Polyhedron gen_tetrahedron() {
  Polyhedron P;
  P.vertices = {{Rat(0), Rat(0), Rat(0)},
                {Rat(1), Rat(0), Rat(0)},
                {Rat(0), Rat(1), Rat(0)},
                {Rat(0), Rat(0), Rat(1)}};
  P.faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  gen_detail::orient_faces_outward(P);
  gen_detail::require_valid(P, "tetrahedron");
  return P;
}

// Unit cube; vertex i = (i&1, (i>>1)&1, (i>>2)&1).
inline Polyhedron gen_cube() {
  Polyhedron P;
  for (int i = 0; i < 8; ++i)
    P.vertices.push_back({Rat(i & 1), Rat((i >> 1) & 1), Rat((i >> 2) & 1)});
  P.faces = {{0, 2, 3, 1},   // z = 0
             {4, 5, 7, 6},   // z = 1
             {0, 1, 5, 4},   // y = 0
             {2, 6, 7, 3},   // y = 1
             {0, 4, 6, 2},   // x = 0
             {1, 3, 7, 5}};  // x = 1
  gen_detail::orient_faces_outward(P);
  gen_detail::require_valid(P, "cube");
  return P;
}

// Right triangular prism over the unit right triangle, height 1.
inline Polyhedron gen_prism() {
  Polyhedron P;
  P.vertices = {{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)},
                {Rat(0), Rat(0), Rat(1)}, {Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}};
  P.faces = {{0, 2, 1}, {3, 4, 5}, {0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5}};
  gen_detail::orient_faces_outward(P);
  gen_detail::require_valid(P, "prism");
  return P;
}

struct SchoenhardtParams {
  Rat twist_cos = Rat(24, 25);
  Rat twist_sin = Rat(7, 25);
  Rat base_scale = Rat(1);
  Rat height = Rat(3);
};

// Twisted triangular antiprism-like solid with 6 vertices and 8 triangular
// faces whose three quad diagonals bottom_i -> top_{i+1} all run outside
// the solid, so no 4-vertex subset spans a contained tetrahedron. The base
// triangle is a slightly irregular rational triangle inscribed in the unit
// circle (tangent half-angle points t = 0, 7/4, -7/4, recentered on the
// centroid); the top copy is rotated clockwise by the rational twist angle.
// The defining properties are certified exactly at construction.
inline Polyhedron gen_schoenhardt(const SchoenhardtParams& params = {}) {
  const Rat& c = params.twist_cos;
  const Rat& s = params.twist_sin;
  if (c * c + s * s != 1) throw InvalidParams("twist must satisfy cos^2 + sin^2 = 1");
  if (!(s > 0)) throw InvalidParams("twist sine must be positive");
  if (!(c > Rat(1, 2))) throw InvalidParams("twist angle must be below 60 degrees");
  if (!(params.base_scale > 0)) throw InvalidParams("base scale must be positive");
  if (!(params.height > 0)) throw InvalidParams("height must be positive");

  // Recentered rational points of the unit circle (see header comment).
  const Rat bx[3] = {Rat(196, 195), Rat(-98, 195), Rat(-98, 195)};
  const Rat by[3] = {Rat(0), Rat(56, 65), Rat(-56, 65)};

  Polyhedron P;
  for (int i = 0; i < 3; ++i)
    P.vertices.push_back({params.base_scale * bx[i], params.base_scale * by[i], Rat(0)});
  for (int i = 0; i < 3; ++i) {
    Rat x = params.base_scale * bx[i], y = params.base_scale * by[i];
    // Clockwise rotation by the twist angle.
    P.vertices.push_back({c * x + s * y, c * y - s * x, params.height});
  }

  P.faces = {{0, 2, 1}, {3, 4, 5}};
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    int bi = i, bj = j, ti = 3 + i, tj = 3 + j;
    P.faces.push_back({bi, bj, ti});  // crease diagonal bottom_j -> top_i
    P.faces.push_back({bj, tj, ti});
  }
  gen_detail::orient_faces_outward(P);

  // Certificates. Any violation means the parameters do not produce the
  // intended shape.
  ValidationReport rep = validate(P);
  if (!rep.ok())
    throw InvalidParams("twist parameters break validity: " + rep.violations.front());
  if (rep.convex) throw InvalidParams("twist parameters produce a convex solid");
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    const Point3& b = P.vertices[i];
    const Point3& t = P.vertices[3 + j];
    Point3 mid{(b.x + t.x) / 2, (b.y + t.y) / 2, (b.z + t.z) / 2};
    if (point_in_polyhedron(mid, P) != Containment::Outside)
      throw InvalidParams("twist parameters leave a quad diagonal inside the solid");
  }
  return P;
}

// Convex bipyramid whose natural triangulations pivot on the main
// diagonal: apexes (0,0,1) and (0,0,-1) (indices 0 and 1) over a convex
// equatorial arc of spokes+1 rational unit-circle points spanning more
// than a half circle, so segment 0-1 passes through the interior.
inline Polyhedron gen_fan(int spokes) {
  if (spokes < 3) throw InvalidParams("fan generator requires at least 3 spokes");
  const int m = spokes;
  Polyhedron P;
  P.vertices.push_back({Rat(0), Rat(0), Rat(1)});
  P.vertices.push_back({Rat(0), Rat(0), Rat(-1)});
  for (int k = 0; k <= m; ++k) {
    Rat t = Rat(-9, 4) + Rat(k) * Rat(9, 2) / Rat(m);
    Rat d = 1 + t * t;
    P.vertices.push_back({(1 - t * t) / d, 2 * t / d, Rat(0)});
  }
  auto ring = [&](int k) { return 2 + ((k % (m + 1)) + (m + 1)) % (m + 1); };
  for (int k = 0; k <= m; ++k) {
    P.faces.push_back({0, ring(k), ring(k + 1)});
    P.faces.push_back({1, ring(k), ring(k + 1)});
  }
  gen_detail::orient_faces_outward(P);

  ValidationReport rep = validate(P);
  if (!rep.ok()) throw InvalidParams("fan construction failed validation: " + rep.violations.front());
  if (!rep.convex) throw InvalidParams("fan construction is not convex");
  if (point_in_polyhedron(Point3{Rat(0), Rat(0), Rat(0)}, P) != Containment::Interior)
    throw InvalidParams("fan apex segment does not pass through the interior");
  return P;
}

struct SurfacePolyhedron {
  Polyhedron poly;
  std::vector<Triangle> surface;
};

// The plain prism together with a boundary triangulation whose three quad
// diagonals chase each other cyclically (0-4, 1-5, 2-3). No triangulation
// of the prism induces this surface, exactly as twisting the side quads of
// a prism produces an untetrahedralizable solid.
inline SurfacePolyhedron gen_prism_twisted() {
  SurfacePolyhedron sp;
  sp.poly = gen_prism();
  sp.surface = {Triangle::of(0, 1, 2), Triangle::of(3, 4, 5),
                // quad 0-1-4-3 split along 0-4
                Triangle::of(0, 1, 4), Triangle::of(0, 4, 3),
                // quad 1-2-5-4 split along 1-5
                Triangle::of(1, 2, 5), Triangle::of(1, 5, 4),
                // quad 2-0-3-5 split along 2-3
                Triangle::of(2, 0, 3), Triangle::of(2, 3, 5)};
  std::sort(sp.surface.begin(), sp.surface.end());
  return sp;
}

// Random simplicial convex polyhedron with exactly n vertices, all on the
// unit sphere (exact rational points via stereographic projection of a
// random quarter-integer grid). Deterministic for fixed (n, seed); retries
// degenerate configurations a bounded number of times.
inline Polyhedron gen_random_convex(int n, uint64_t seed) {
  if (n < 4) throw InvalidParams("random convex generator requires n >= 4");
  SplitMix64 rng(seed);
  const int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::set<std::pair<long, long>> used;
    std::vector<Point3> pts;
    bool sampled = true;
    while (static_cast<int>(pts.size()) < n) {
      int tries = 0;
      for (;;) {
        long a = rng.range(-64, 64);
        long b = rng.range(-64, 64);
        if (used.insert({a, b}).second) {
          Rat D = Rat(256 + a * a + b * b);
          pts.push_back({Rat(32 * a) / D, Rat(32 * b) / D, Rat(256 - a * a - b * b) / D});
          break;
        }
        if (++tries > 1000) {
          sampled = false;
          break;
        }
      }
      if (!sampled) break;
    }
    if (!sampled) continue;

    std::vector<std::array<int, 3>> faces;
    try {
      faces = convex_hull_faces(pts);
    } catch (const DegenerateHull&) {
      continue;
    }

    Polyhedron P;
    P.vertices = std::move(pts);
    for (auto f : faces) {
      // Canonical cycle: smallest index first, orientation preserved.
      int k = (f[1] < f[0] && f[1] <= f[2]) ? 1 : (f[2] < f[0] && f[2] < f[1]) ? 2 : 0;
      P.faces.push_back({f[k], f[(k + 1) % 3], f[(k + 2) % 3]});
    }
    std::sort(P.faces.begin(), P.faces.end());

    ValidationReport rep = validate(P);
    if (!rep.ok() || !rep.convex)
      throw InvalidPolyhedron("random convex construction failed its own validation");
    return P;
  }
  throw RetriesExhausted("random convex generator exhausted its retry budget");
}

}  // namespace polytet

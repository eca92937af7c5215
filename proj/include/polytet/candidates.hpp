#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "polyhedron.hpp"

namespace polytet {

namespace cand_detail {

// Face data precomputed once per polyhedron for the containment tests.
struct FaceFrame {
  Vec3 normal;                  // cycle normal (outward for valid input)
  std::vector<Point3> polygon;  // cycle vertices, ccw w.r.t. normal
};

inline std::vector<FaceFrame> face_frames(const Polyhedron& P) {
  std::vector<FaceFrame> out;
  out.reserve(P.faces.size());
  for (const auto& face : P.faces) {
    FaceFrame ff;
    ff.normal = poly_detail::face_normal(P, face);
    for (int idx : face) ff.polygon.push_back(P.vertices[idx]);
    out.push_back(std::move(ff));
  }
  return out;
}

// Classification of p against the closed face polygon, assuming p lies on
// the face plane: 1 strictly inside, 0 on the polygon boundary, -1 outside.
inline int coplanar_point_vs_polygon(const FaceFrame& ff, const Point3& p) {
  const size_t k = ff.polygon.size();
  bool on_boundary = false;
  for (size_t i = 0; i < k; ++i) {
    int s = in_plane_orient(ff.normal, ff.polygon[i], ff.polygon[(i + 1) % k], p);
    if (s < 0) return -1;
    if (s == 0) on_boundary = true;
  }
  return on_boundary ? 0 : 1;
}

// Deterministic ray directions for the parity test; each retry uses the
// next one. Directions are pairwise non-parallel.
inline const std::vector<Vec3>& ray_directions() {
  static const std::vector<Vec3> dirs = [] {
    std::vector<Vec3> d;
    const int raw[][3] = {{1, 0, 0},  {0, 1, 0},  {0, 0, 1},  {1, 1, 1},  {1, 2, 3},
                          {3, 1, 2},  {2, 3, 1},  {1, -2, 4}, {4, 1, -2}, {-2, 4, 1},
                          {5, 3, -7}, {-7, 5, 3}, {3, -7, 5}, {1, 5, 25}, {25, 1, 5},
                          {5, 25, 1}, {2, -9, 11}, {11, 2, -9}, {-9, 11, 2}, {7, 13, 17}};
    for (auto& r : raw) d.push_back({Rat(r[0]), Rat(r[1]), Rat(r[2])});
    return d;
  }();
  return dirs;
}

inline Containment point_in_impl(const std::vector<FaceFrame>& frames, const Point3& p) {
  // Exact boundary test first: on some face plane and within the closed
  // polygon.
  for (const auto& ff : frames) {
    if (dot(ff.normal, p - ff.polygon[0]) != 0) continue;
    if (coplanar_point_vs_polygon(ff, p) >= 0) return Containment::Boundary;
  }
  // Ray parity with exact crossing classification; any crossing that is
  // not strictly through a face interior retries with the next direction.
  for (const Vec3& dir : ray_directions()) {
    bool ambiguous = false;
    long crossings = 0;
    for (const auto& ff : frames) {
      Rat denom = dot(ff.normal, dir);
      Rat num = dot(ff.normal, ff.polygon[0] - p);
      if (denom == 0) {
        if (num == 0) {
          ambiguous = true;  // ray runs inside the face plane
          break;
        }
        continue;
      }
      Rat t = num / denom;
      if (t <= 0) continue;
      Point3 x = p + t * dir;
      int cls = coplanar_point_vs_polygon(ff, x);
      if (cls == 0) {
        ambiguous = true;  // crossing through an edge or vertex
        break;
      }
      if (cls > 0) ++crossings;
    }
    if (!ambiguous) return (crossings % 2 == 1) ? Containment::Interior : Containment::Outside;
  }
  throw RetriesExhausted("point containment: all ray directions hit degeneracies");
}

// Is the open tetrahedron disjoint from the boundary of P, and its
// centroid strictly inside? That is exactly containment of the closed
// tetrahedron for a valid (possibly nonconvex) P.
inline bool tet_in_impl(const Polyhedron& P, const std::vector<FaceFrame>& frames,
                        bool convex, const std::array<const Point3*, 4>& t) {
  if (convex) return true;  // vertices of P span it; any tet on them is inside

  Point3 centroid{(t[0]->x + t[1]->x + t[2]->x + t[3]->x) / 4,
                  (t[0]->y + t[1]->y + t[2]->y + t[3]->y) / 4,
                  (t[0]->z + t[1]->z + t[2]->z + t[3]->z) / 4};
  if (point_in_impl(frames, centroid) != Containment::Interior) return false;

  // The boundary decomposes into open face interiors, open edges and
  // vertices; the open tet must miss all three kinds.
  for (const auto& ff : frames) {
    if (geo_detail::relint_polygon_open_tet(ff.polygon, ff.normal, *t[0], *t[1], *t[2], *t[3]))
      return false;
  }
  std::set<std::pair<int, int>> edges;
  for (const auto& face : P.faces) {
    const size_t k = face.size();
    for (size_t i = 0; i < k; ++i) {
      int a = face[i], b = face[(i + 1) % k];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  for (const auto& [a, b] : edges) {
    if (geo_detail::relint_seg_tet(P.vertices[a], P.vertices[b], *t[0], *t[1], *t[2], *t[3]))
      return false;
  }
  for (const auto& v : P.vertices) {
    if (geo_detail::pt_in_open_tet(v, *t[0], *t[1], *t[2], *t[3])) return false;
  }
  return true;
}

}  // namespace cand_detail

// Classifies a point against a valid polyhedron: strictly inside, on the
// boundary, or outside. Exact; uses ray parity with deterministic retry
// directions and throws RetriesExhausted if every direction degenerates.
inline Containment point_in_polyhedron(const Point3& p, const Polyhedron& P) {
  if (!validate(P).ok())
    throw InvalidPolyhedron("point containment requires a valid polyhedron");
  auto frames = cand_detail::face_frames(P);
  return cand_detail::point_in_impl(frames, p);
}

// Is the closed tetrahedron on the given vertex indices contained in P?
inline bool tet_in_polyhedron(const Tet& t, const Polyhedron& P) {
  ValidationReport rep = validate(P);
  if (!rep.ok()) throw InvalidPolyhedron("tet containment requires a valid polyhedron");
  for (int idx : t.v)
    if (idx < 0 || static_cast<size_t>(idx) >= P.vertices.size())
      throw InvalidParams("tetrahedron vertex index out of range");
  if (orient3d(P.vertices[t.v[0]], P.vertices[t.v[1]], P.vertices[t.v[2]],
               P.vertices[t.v[3]]) == 0)
    return false;  // degenerate tets are never members of a triangulation
  auto frames = cand_detail::face_frames(P);
  std::array<const Point3*, 4> tp = {&P.vertices[t.v[0]], &P.vertices[t.v[1]],
                                     &P.vertices[t.v[2]], &P.vertices[t.v[3]]};
  return cand_detail::tet_in_impl(P, frames, rep.convex, tp);
}

// All candidate tetrahedra of a polyhedron plus pairwise compatibility.
struct CandidateSet {
  std::vector<Tet> tets;    // lexicographic by index tuple
  std::vector<Rat> volume6; // per candidate
  // Per candidate, per facet (order of Tet::triangles()): true iff the
  // facet triangle lies on a face of P (all three vertices on one face).
  std::vector<std::array<bool, 4>> facet_on_boundary;
  // Pairwise proper-intersection compatibility, as bitset rows.
  size_t words = 0;
  std::vector<uint64_t> compat;  // tets.size() rows of `words` words
  // Enumeration statistics.
  long degenerate_subsets = 0;  // coplanar 4-subsets
  long rejected_subsets = 0;    // nondegenerate but not contained in P

  bool compatible(size_t i, size_t j) const {
    return (compat[i * words + j / 64] >> (j % 64)) & 1u;
  }
};

// Enumerates all 4-subsets of vertices spanning a nondegenerate
// tetrahedron contained in P, and computes pairwise compatibility
// (proper intersection). Requires a valid polyhedron.
inline CandidateSet enumerate_candidates(const Polyhedron& P) {
  ValidationReport rep = validate(P);
  if (!rep.ok()) throw InvalidPolyhedron("candidate enumeration requires a valid polyhedron");
  auto frames = cand_detail::face_frames(P);
  const int n = static_cast<int>(P.vertices.size());

  CandidateSet C;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          Rat vol = orient3d_val(P.vertices[a], P.vertices[b], P.vertices[c], P.vertices[d]);
          if (vol == 0) {
            ++C.degenerate_subsets;
            continue;
          }
          std::array<const Point3*, 4> tp = {&P.vertices[a], &P.vertices[b], &P.vertices[c],
                                             &P.vertices[d]};
          if (!cand_detail::tet_in_impl(P, frames, rep.convex, tp)) {
            ++C.rejected_subsets;
            continue;
          }
          C.tets.push_back(Tet::of(a, b, c, d));
          C.volume6.push_back(vol < 0 ? Rat(-vol) : vol);
        }

  // Boundary classification of candidate facets.
  std::vector<std::set<int>> face_sets;
  face_sets.reserve(P.faces.size());
  for (const auto& f : P.faces) face_sets.emplace_back(f.begin(), f.end());
  auto on_some_face = [&](const Triangle& tri) {
    for (const auto& fs : face_sets)
      if (fs.count(tri.v[0]) && fs.count(tri.v[1]) && fs.count(tri.v[2])) return true;
    return false;
  };
  C.facet_on_boundary.resize(C.tets.size());
  for (size_t i = 0; i < C.tets.size(); ++i) {
    auto tris = C.tets[i].triangles();
    for (int k = 0; k < 4; ++k) C.facet_on_boundary[i][k] = on_some_face(tris[k]);
  }

  // Pairwise compatibility. Proper intersection is invariant under uniform
  // positive scaling, so clear all denominators once up front: on an
  // integer lattice the predicates do integer arithmetic instead of
  // renormalizing rationals at every step.
  const size_t m = C.tets.size();
  C.words = (m + 63) / 64;
  C.compat.assign(m * C.words, 0);
  Int lattice = 1;
  for (const auto& v : P.vertices) {
    lattice = boost::multiprecision::lcm(lattice, boost::multiprecision::denominator(v.x));
    lattice = boost::multiprecision::lcm(lattice, boost::multiprecision::denominator(v.y));
    lattice = boost::multiprecision::lcm(lattice, boost::multiprecision::denominator(v.z));
  }
  const Rat factor(lattice);
  std::vector<Point3> scaled;
  scaled.reserve(P.vertices.size());
  for (const auto& v : P.vertices) scaled.push_back({v.x * factor, v.y * factor, v.z * factor});
  std::vector<std::vector<Point3>> pts(m);
  for (size_t i = 0; i < m; ++i)
    for (int k = 0; k < 4; ++k) pts[i].push_back(scaled[C.tets[i].v[k]]);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      if (simplices_properly_intersect(pts[i], pts[j])) {
        C.compat[i * C.words + j / 64] |= (1ull << (j % 64));
        C.compat[j * C.words + i / 64] |= (1ull << (i % 64));
      }
    }
  return C;
}

}  // namespace polytet

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace polytet {

// Triangle and Tet store ascending vertex indices, so they order and
// compare lexicographically as index tuples.
struct Triangle {
  std::array<int, 3> v{};

  static Triangle of(int a, int b, int c) {
    Triangle t;
    t.v = {a, b, c};
    std::sort(t.v.begin(), t.v.end());
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2])
      throw InvalidParams("triangle has repeated vertex indices");
    return t;
  }
  friend bool operator==(const Triangle& a, const Triangle& b) { return a.v == b.v; }
  friend bool operator<(const Triangle& a, const Triangle& b) { return a.v < b.v; }
};

struct Tet {
  std::array<int, 4> v{};

  static Tet of(int a, int b, int c, int d) {
    Tet t;
    t.v = {a, b, c, d};
    std::sort(t.v.begin(), t.v.end());
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[2] == t.v[3])
      throw InvalidParams("tetrahedron has repeated vertex indices");
    return t;
  }
  std::array<Triangle, 4> triangles() const {
    return {Triangle::of(v[0], v[1], v[2]), Triangle::of(v[0], v[1], v[3]),
            Triangle::of(v[0], v[2], v[3]), Triangle::of(v[1], v[2], v[3])};
  }
  bool contains_edge(int a, int b) const {
    bool fa = false, fb = false;
    for (int w : v) {
      fa |= (w == a);
      fb |= (w == b);
    }
    return fa && fb;
  }
  friend bool operator==(const Tet& a, const Tet& b) { return a.v == b.v; }
  friend bool operator<(const Tet& a, const Tet& b) { return a.v < b.v; }
};

// A triangulation is kept sorted ascending (lexicographic by index tuple).
using Triangulation = std::vector<Tet>;

// Boundary description of a solid: vertices plus faces, each face a cycle
// of vertex indices, counterclockwise as seen from outside the solid.
struct Polyhedron {
  std::vector<Point3> vertices;
  std::vector<std::vector<int>> faces;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool convex = false;
  bool ok() const { return violations.empty(); }
};

namespace poly_detail {

// Face normal under the stored cycle orientation, from the first
// noncollinear corner. Valid only when face planarity/convexity hold.
inline Vec3 face_normal(const Polyhedron& P, const std::vector<int>& face) {
  return cross(P.vertices[face[1]] - P.vertices[face[0]],
               P.vertices[face[2]] - P.vertices[face[0]]);
}

inline Rat signed_volume6(const Polyhedron& P) {
  Rat total = 0;
  for (const auto& face : P.faces) {
    const Point3& a = P.vertices[face[0]];
    for (size_t i = 1; i + 1 < face.size(); ++i)
      total += det3(a, P.vertices[face[i]], P.vertices[face[i + 1]]);
  }
  return total;
}

}  // namespace poly_detail

// Structural and geometric validation:
//   - at least 4 vertices, no repeated vertex points;
//   - faces are cycles of >= 3 distinct in-range indices;
//   - every face is planar and strictly convex, with its cycle
//     consistently oriented (all consecutive turns strictly one way);
//   - every undirected edge is shared by exactly two faces, traversed in
//     opposite directions (closed orientable surface);
//   - Euler characteristic V - E + F = 2;
//   - no two faces sharing an edge are coplanar (faces are maximal);
//   - no vertex lies in the relative interior of another face or edge
//     (no T-junctions);
//   - enclosed signed volume is strictly positive (outward orientation).
// The convex flag is set iff additionally every vertex is strictly on the
// inner side of every non-incident face plane.
inline ValidationReport validate(const Polyhedron& P) {
  ValidationReport rep;
  auto flag = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

  const size_t n = P.vertices.size();
  if (n < 4) flag("fewer than 4 vertices");
  if (P.faces.size() < 4) flag("fewer than 4 faces");

  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (P.vertices[i] == P.vertices[j])
        flag("vertices " + std::to_string(i) + " and " + std::to_string(j) +
             " have identical coordinates");

  bool structure_ok = true;
  for (size_t fi = 0; fi < P.faces.size(); ++fi) {
    const auto& face = P.faces[fi];
    if (face.size() < 3) {
      flag("face " + std::to_string(fi) + " has fewer than 3 vertices");
      structure_ok = false;
      continue;
    }
    std::set<int> seen;
    for (int idx : face) {
      if (idx < 0 || static_cast<size_t>(idx) >= n) {
        flag("face " + std::to_string(fi) + " references vertex " + std::to_string(idx) +
             " out of range");
        structure_ok = false;
      } else if (!seen.insert(idx).second) {
        flag("face " + std::to_string(fi) + " repeats vertex " + std::to_string(idx));
        structure_ok = false;
      }
    }
  }
  // Geometric checks below assume clean index structure.
  if (!structure_ok) return rep;

  // Planarity and strict convexity of each face cycle. With the normal
  // taken from the first corner, strict convexity plus consistent
  // orientation is exactly "every cyclic turn is strictly positive".
  std::vector<Vec3> normals(P.faces.size());
  bool faces_ok = true;
  for (size_t fi = 0; fi < P.faces.size(); ++fi) {
    const auto& face = P.faces[fi];
    const size_t k = face.size();
    Vec3 nrm = poly_detail::face_normal(P, face);
    normals[fi] = nrm;
    if (is_zero(nrm)) {
      flag("face " + std::to_string(fi) + " starts with collinear vertices");
      faces_ok = false;
      continue;
    }
    bool planar = true;
    for (size_t i = 3; i < k; ++i)
      if (orient3d(P.vertices[face[0]], P.vertices[face[1]], P.vertices[face[2]],
                   P.vertices[face[i]]) != 0) {
        flag("face " + std::to_string(fi) + " is not planar");
        planar = false;
        faces_ok = false;
        break;
      }
    if (!planar) continue;
    for (size_t i = 0; i < k; ++i) {
      const Point3& a = P.vertices[face[i]];
      const Point3& b = P.vertices[face[(i + 1) % k]];
      const Point3& c = P.vertices[face[(i + 2) % k]];
      if (in_plane_orient(nrm, a, b, c) <= 0) {
        flag("face " + std::to_string(fi) + " is not strictly convex");
        faces_ok = false;
        break;
      }
    }
  }

  // Edge pairing: each undirected edge in exactly two faces, opposite
  // directions.
  std::map<std::pair<int, int>, std::vector<std::pair<size_t, bool>>> edge_uses;
  for (size_t fi = 0; fi < P.faces.size(); ++fi) {
    const auto& face = P.faces[fi];
    const size_t k = face.size();
    for (size_t i = 0; i < k; ++i) {
      int a = face[i], b = face[(i + 1) % k];
      bool forward = a < b;
      edge_uses[{std::min(a, b), std::max(a, b)}].push_back({fi, forward});
    }
  }
  bool edges_ok = true;
  for (const auto& [edge, uses] : edge_uses) {
    if (uses.size() != 2) {
      flag("edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
           " belongs to " + std::to_string(uses.size()) + " faces (expected 2)");
      edges_ok = false;
    } else if (uses[0].second == uses[1].second) {
      flag("edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
           " is traversed twice in the same direction");
      edges_ok = false;
    }
  }

  long V = static_cast<long>(n);
  long E = static_cast<long>(edge_uses.size());
  long F = static_cast<long>(P.faces.size());
  if (edges_ok && V - E + F != 2)
    flag("Euler characteristic V-E+F = " + std::to_string(V - E + F) + " (expected 2)");

  if (!faces_ok || !edges_ok) return rep;

  // Neighboring faces must not be coplanar: a shared edge whose two faces
  // lie in one plane is a subdivided face, and face-by-face reasoning
  // (boundary classification, surface matching) would silently break.
  for (const auto& [edge, uses] : edge_uses) {
    const auto& fa = P.faces[uses[0].first];
    const auto& fb = P.faces[uses[1].first];
    bool coplanar = true;
    for (int idx : fb)
      if (orient3d(P.vertices[fa[0]], P.vertices[fa[1]], P.vertices[fa[2]],
                   P.vertices[idx]) != 0) {
        coplanar = false;
        break;
      }
    if (coplanar)
      flag("faces " + std::to_string(uses[0].first) + " and " + std::to_string(uses[1].first) +
           " sharing edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
           " are coplanar");
  }

  // No vertex inside another face (T-junction through a face interior) or
  // strictly inside an edge.
  for (size_t fi = 0; fi < P.faces.size(); ++fi) {
    const auto& face = P.faces[fi];
    std::set<int> on_face(face.begin(), face.end());
    for (size_t vi = 0; vi < n; ++vi) {
      if (on_face.count(static_cast<int>(vi))) continue;
      const Point3& p = P.vertices[vi];
      if (orient3d(P.vertices[face[0]], P.vertices[face[1]], P.vertices[face[2]], p) != 0)
        continue;
      bool strictly_inside = true;
      const size_t k = face.size();
      for (size_t i = 0; i < k && strictly_inside; ++i)
        if (in_plane_orient(normals[fi], P.vertices[face[i]], P.vertices[face[(i + 1) % k]],
                            p) <= 0)
          strictly_inside = false;
      if (strictly_inside)
        flag("vertex " + std::to_string(vi) + " lies inside face " + std::to_string(fi));
    }
  }
  for (const auto& [edge, uses] : edge_uses) {
    (void)uses;
    const Point3& a = P.vertices[edge.first];
    const Point3& b = P.vertices[edge.second];
    for (size_t vi = 0; vi < n; ++vi) {
      if (static_cast<int>(vi) == edge.first || static_cast<int>(vi) == edge.second) continue;
      if (geo_detail::pt_in_relint_segment(P.vertices[vi], a, b))
        flag("vertex " + std::to_string(vi) + " lies inside edge " + std::to_string(edge.first) +
             "-" + std::to_string(edge.second));
    }
  }

  Rat vol = poly_detail::signed_volume6(P);
  if (vol == 0)
    flag("enclosed volume is zero");
  else if (vol < 0)
    flag("faces are oriented inward (negative enclosed volume)");

  if (!rep.ok()) return rep;

  // Convexity: every non-incident vertex strictly on the inner side of
  // every face plane. (Cycles are counterclockwise from outside and the
  // volume is positive, so the cycle normal points outward and inside is
  // the strictly negative side.)
  rep.convex = true;
  for (size_t fi = 0; fi < P.faces.size() && rep.convex; ++fi) {
    const auto& face = P.faces[fi];
    std::set<int> on_face(face.begin(), face.end());
    const Point3& f0 = P.vertices[face[0]];
    for (size_t vi = 0; vi < n && rep.convex; ++vi) {
      if (on_face.count(static_cast<int>(vi))) continue;
      if (dot(normals[fi], P.vertices[vi] - f0) >= 0) rep.convex = false;
    }
  }
  return rep;
}

// Six times the enclosed volume. Requires a valid polyhedron.
inline Rat volume6(const Polyhedron& P) {
  if (!validate(P).ok()) throw InvalidPolyhedron("volume6 requires a valid polyhedron");
  return poly_detail::signed_volume6(P);
}

inline bool is_simplicial(const Polyhedron& P) {
  for (const auto& f : P.faces)
    if (f.size() != 3) return false;
  return true;
}

// (lower, upper) bounds on the number of tetrahedra in any triangulation
// of a polyhedron with n vertices: n - 3 and C(n,2) - 2n + 3.
inline std::pair<long, long> triangulation_bounds(int n) {
  if (n < 4) throw InvalidParams("bounds require n >= 4");
  long ln = n;
  return {ln - 3, ln * (ln - 1) / 2 - 2 * ln + 3};
}

}  // namespace polytet

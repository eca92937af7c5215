#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace polytet {

// Points in degenerate position for an exact convex hull (first four
// coplanar, a later point on a face plane, or a point not in strictly
// convex position). Callers that sample points catch this and resample.
struct DegenerateHull : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact incremental convex hull of points that must be in strictly convex
// position (every point a hull vertex, no point on a plane through three
// others). Returns triangular faces with vertices counterclockwise from
// outside, i.e. orient3d(face, interior point) < 0.
inline std::vector<std::array<int, 3>> convex_hull_faces(const std::vector<Point3>& pts) {
  const size_t n = pts.size();
  if (n < 4) throw DegenerateHull("hull needs at least 4 points");

  int o = orient3d(pts[0], pts[1], pts[2], pts[3]);
  if (o == 0) throw DegenerateHull("first four points are coplanar");
  std::array<int, 4> seed = {0, 1, 2, 3};
  if (o > 0) std::swap(seed[1], seed[2]);  // make orient3d(seed) < 0
  // With orient3d(a,b,c,d) < 0, each facet listed below is ccw from
  // outside (the omitted vertex is on its negative side).
  std::vector<std::array<int, 3>> faces = {{seed[0], seed[1], seed[2]},
                                           {seed[0], seed[3], seed[1]},
                                           {seed[0], seed[2], seed[3]},
                                           {seed[1], seed[3], seed[2]}};
  Point3 inner{(pts[0].x + pts[1].x + pts[2].x + pts[3].x) / 4,
               (pts[0].y + pts[1].y + pts[2].y + pts[3].y) / 4,
               (pts[0].z + pts[1].z + pts[2].z + pts[3].z) / 4};
  for (const auto& f : faces)
    if (orient3d(pts[f[0]], pts[f[1]], pts[f[2]], inner) >= 0)
      throw DegenerateHull("internal error: seed tetrahedron misoriented");

  for (size_t pi = 4; pi < n; ++pi) {
    const Point3& p = pts[pi];
    std::vector<bool> visible(faces.size());
    bool any_visible = false;
    for (size_t fi = 0; fi < faces.size(); ++fi) {
      int s = orient3d(pts[faces[fi][0]], pts[faces[fi][1]], pts[faces[fi][2]], p);
      if (s == 0) throw DegenerateHull("point on a hull face plane");
      visible[fi] = s > 0;
      any_visible |= visible[fi];
    }
    if (!any_visible) throw DegenerateHull("point inside current hull");

    std::map<std::pair<int, int>, size_t> owner;  // directed edge -> face
    for (size_t fi = 0; fi < faces.size(); ++fi)
      for (int e = 0; e < 3; ++e)
        owner[{faces[fi][e], faces[fi][(e + 1) % 3]}] = fi;

    // Horizon: directed edges of visible faces whose across-neighbor is
    // hidden. The replacement face keeps the edge direction and caps to p.
    std::vector<std::array<int, 3>> next_faces;
    for (size_t fi = 0; fi < faces.size(); ++fi)
      if (!visible[fi]) next_faces.push_back(faces[fi]);
    for (size_t fi = 0; fi < faces.size(); ++fi) {
      if (!visible[fi]) continue;
      for (int e = 0; e < 3; ++e) {
        int u = faces[fi][e], v = faces[fi][(e + 1) % 3];
        size_t nb = owner.at({v, u});
        if (!visible[nb]) next_faces.push_back({u, v, static_cast<int>(pi)});
      }
    }
    faces = std::move(next_faces);
    for (const auto& f : faces)
      if (orient3d(pts[f[0]], pts[f[1]], pts[f[2]], inner) >= 0)
        throw DegenerateHull("internal error: face lost outward orientation");
  }

  std::set<int> used;
  for (const auto& f : faces) used.insert(f.begin(), f.end());
  if (used.size() != n) throw DegenerateHull("not all points are hull vertices");
  return faces;
}

}  // namespace polytet

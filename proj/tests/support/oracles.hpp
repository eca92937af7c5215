#pragma once

// Independent reference implementations used only by tests. These
// deliberately avoid the library's intersection machinery: membership is
// re-derived from first principles so disagreements expose kernel bugs.

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "polytet/candidates.hpp"
#include "polytet/geometry.hpp"
#include "polytet/polyhedron.hpp"
#include "polytet/rational.hpp"

namespace oracles {

using polytet::Point3;
using polytet::Rat;
using polytet::sign_of;
using polytet::Vec3;

// ----- closed-simplex membership, written independently ---------------------

inline Rat o_det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  Rat a = u.x * (v.y * w.z - v.z * w.y);
  Rat b = u.y * (v.x * w.z - v.z * w.x);
  Rat c = u.z * (v.x * w.y - v.y * w.x);
  return a - b + c;
}

inline Rat o_orient(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return o_det3(b - a, c - a, d - a);
}

inline bool in_closed_segment(const Point3& p, const Point3& a, const Point3& b) {
  Vec3 ab = b - a, ap = p - a;
  if (!is_zero(cross(ab, ap))) return false;
  Rat t = dot(ap, ab);
  return t >= 0 && t <= dot(ab, ab);
}

inline bool in_closed_triangle(const Point3& p, const Point3& a, const Point3& b,
                               const Point3& c) {
  if (o_orient(a, b, c, p) != 0) return false;
  Vec3 n = cross(b - a, c - a);
  Rat s0 = dot(n, cross(b - a, p - a));
  Rat s1 = dot(n, cross(c - b, p - b));
  Rat s2 = dot(n, cross(a - c, p - c));
  return s0 >= 0 && s1 >= 0 && s2 >= 0;
}

inline bool in_closed_tet(const Point3& p, const Point3& a, const Point3& b, const Point3& c,
                          const Point3& d) {
  Rat whole = o_orient(a, b, c, d);
  int s = sign_of(whole);
  if (s == 0) return false;
  return sign_of(o_orient(a, b, c, p)) * s >= 0 && sign_of(o_orient(a, b, p, d)) * s >= 0 &&
         sign_of(o_orient(a, p, c, d)) * s >= 0 && sign_of(o_orient(p, b, c, d)) * s >= 0;
}

inline bool in_closed_simplex(const Point3& p, const std::vector<Point3>& s) {
  switch (s.size()) {
    case 0:
      return false;
    case 1:
      return p == s[0];
    case 2:
      return in_closed_segment(p, s[0], s[1]);
    case 3:
      return in_closed_triangle(p, s[0], s[1], s[2]);
    default:
      return in_closed_tet(p, s[0], s[1], s[2], s[3]);
  }
}

// ----- grid oracle for proper intersection ----------------------------------

// One-sided improperness witness: some grid point (step 1/denominator)
// lies in both closed simplices but outside the convex hull of their
// shared vertices. If this returns true, the pair is definitely improper;
// false is inconclusive (the grid may simply have missed a witness).
inline bool grid_finds_improper(const std::vector<Point3>& s1, const std::vector<Point3>& s2,
                                long denominator) {
  std::vector<Point3> shared;
  for (const auto& p : s1)
    for (const auto& q : s2)
      if (p == q) {
        shared.push_back(p);
        break;
      }

  auto bounds = [](const std::vector<Point3>& s, int axis) {
    Rat lo, hi;
    bool first = true;
    for (const auto& p : s) {
      const Rat& v = axis == 0 ? p.x : axis == 1 ? p.y : p.z;
      if (first || v < lo) lo = v;
      if (first || v > hi) hi = v;
      first = false;
    }
    return std::pair<Rat, Rat>(lo, hi);
  };

  long lo[3], hi[3];
  for (int axis = 0; axis < 3; ++axis) {
    auto [lo1, hi1] = bounds(s1, axis);
    auto [lo2, hi2] = bounds(s2, axis);
    Rat l = std::max(lo1, lo2), h = std::min(hi1, hi2);
    if (l > h) return false;  // disjoint boxes: closed sets cannot meet
    lo[axis] = static_cast<long>(polytet::rat_ceil(l * denominator));
    hi[axis] = static_cast<long>(polytet::rat_floor(h * denominator));
  }

  for (long gx = lo[0]; gx <= hi[0]; ++gx)
    for (long gy = lo[1]; gy <= hi[1]; ++gy)
      for (long gz = lo[2]; gz <= hi[2]; ++gz) {
        Point3 g{Rat(gx, denominator), Rat(gy, denominator), Rat(gz, denominator)};
        if (!in_closed_simplex(g, s1)) continue;
        if (!in_closed_simplex(g, s2)) continue;
        if (!in_closed_simplex(g, shared)) return true;
      }
  return false;
}

// ----- exhaustive triangulation enumeration ---------------------------------

// Enumerates every triangulation over the candidate set by walking
// ascending-index subsets of pairwise-compatible candidates, pruned only
// by the exact volume budget. No frontier logic, no bounds: an
// independent ground truth for small shapes.
inline std::vector<polytet::Triangulation> enumerate_all_triangulations(
    const polytet::Polyhedron& P, const polytet::CandidateSet& C) {
  Rat total = polytet::poly_detail::signed_volume6(P);
  std::vector<polytet::Triangulation> found;
  std::vector<int> chosen;

  auto compatible_with_chosen = [&](int i) {
    for (int c : chosen)
      if (!C.compatible(static_cast<size_t>(c), static_cast<size_t>(i))) return false;
    return true;
  };

  std::function<void(size_t, Rat)> walk = [&](size_t from, Rat used) {
    if (used == total) {
      polytet::Triangulation T;
      for (int c : chosen) T.push_back(C.tets[static_cast<size_t>(c)]);
      found.push_back(T);  // ascending already
      return;
    }
    for (size_t i = from; i < C.tets.size(); ++i) {
      if (used + C.volume6[i] > total) continue;
      if (!compatible_with_chosen(static_cast<int>(i))) continue;
      chosen.push_back(static_cast<int>(i));
      walk(i + 1, used + C.volume6[i]);
      chosen.pop_back();
    }
  };
  walk(0, Rat(0));
  return found;
}

}  // namespace oracles

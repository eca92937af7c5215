#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace polytet {

struct Point3 {
  Rat x, y, z;

  Point3() : x(0), y(0), z(0) {}
  Point3(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Point3& a, const Point3& b) { return !(a == b); }
  friend bool operator<(const Point3& a, const Point3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }

  friend Point3 operator-(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Point3 operator+(const Point3& a, const Point3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Point3 operator*(const Rat& s, const Point3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
};

using Vec3 = Point3;

inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline bool is_zero(const Vec3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

// Scalar triple product u . (v x w).
inline Rat det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) +
         u.z * (v.x * w.y - v.y * w.x);
}

// det[b-a, c-a, d-a]; positive for the frame (0,0,0),(1,0,0),(0,1,0),(0,0,1).
inline Rat orient3d_val(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return det3(b - a, c - a, d - a);
}

inline int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return sign_of(orient3d_val(a, b, c, d));
}

// Six times the (unsigned) volume of tetrahedron abcd.
inline Rat tet_volume6(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  Rat v = orient3d_val(a, b, c, d);
  return v < 0 ? Rat(-v) : v;
}

// Orientation of c relative to directed segment a->b inside the plane with
// normal n: sign of n . ((b-a) x (c-a)). For points in that plane this is
// the 2D orientation test, counterclockwise as seen from the tip of n.
inline Rat in_plane_orient_val(const Vec3& n, const Point3& a, const Point3& b, const Point3& c) {
  return dot(n, cross(b - a, c - a));
}

inline int in_plane_orient(const Vec3& n, const Point3& a, const Point3& b, const Point3& c) {
  return sign_of(in_plane_orient_val(n, a, b, c));
}

enum class Containment { Outside, Boundary, Interior };

namespace geo_detail {

// ----- strict relative-interior membership of a point ---------------------

inline bool pt_in_relint_point(const Point3& p, const Point3& a) { return p == a; }

inline bool pt_in_relint_segment(const Point3& p, const Point3& a, const Point3& b) {
  Vec3 ab = b - a;
  if (!is_zero(cross(ab, p - a))) return false;
  Rat t = dot(p - a, ab);
  return t > 0 && t < dot(ab, ab);
}

// Requires p already on the triangle's plane and n = cross(t1-t0, t2-t0).
inline bool coplanar_pt_in_open_triangle(const Point3& p, const Point3& t0, const Point3& t1,
                                         const Point3& t2, const Vec3& n) {
  return in_plane_orient(n, t0, t1, p) > 0 && in_plane_orient(n, t1, t2, p) > 0 &&
         in_plane_orient(n, t2, t0, p) > 0;
}

inline bool pt_in_relint_triangle(const Point3& p, const Point3& t0, const Point3& t1,
                                  const Point3& t2) {
  if (orient3d(t0, t1, t2, p) != 0) return false;
  return coplanar_pt_in_open_triangle(p, t0, t1, t2, cross(t1 - t0, t2 - t0));
}

inline bool pt_in_open_tet(const Point3& p, const Point3& a, const Point3& b, const Point3& c,
                           const Point3& d) {
  int s = orient3d(a, b, c, d);  // nonzero for a nondegenerate tet
  return orient3d(a, b, c, p) == s && orient3d(a, b, p, d) == s && orient3d(a, p, c, d) == s &&
         orient3d(p, b, c, d) == s;
}

// ----- open rational interval, clipped by affine constraints --------------

// Represents { t : lo < t < hi } with optional (infinite) bounds.
struct OpenInterval {
  std::optional<Rat> lo, hi;
  bool dead = false;

  static OpenInterval unit() {
    OpenInterval i;
    i.lo = Rat(0);
    i.hi = Rat(1);
    return i;
  }
  static OpenInterval whole() { return {}; }

  bool nonempty() const {
    if (dead) return false;
    if (lo && hi) return *lo < *hi;
    return true;
  }

  // Intersect with { t : (1-t)*w0 + t*w1 > 0 }.
  void require_positive(const Rat& w0, const Rat& w1) {
    if (dead) return;
    Rat slope = w1 - w0;
    if (slope == 0) {
      if (w0 <= 0) dead = true;
      return;
    }
    Rat root = -w0 / slope;  // L(root) == 0
    if (slope > 0) {
      if (!lo || *lo < root) lo = root;
    } else {
      if (!hi || *hi > root) hi = root;
    }
  }
};

// ----- 2D support inside a fixed plane with normal n ----------------------

struct PlanarPoint {
  Rat u, v;
  const Point3* src;
};

inline Rat cross2(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
  return ax * by - ay * bx;
}

// Counterclockwise convex hull (w.r.t. n) of coplanar points; collinear and
// duplicate points are dropped. Returns hull vertices in ccw order.
inline std::vector<Point3> hull2d_ccw(const Vec3& n, const std::vector<Point3>& pts) {
  Vec3 u = cross(n, Vec3{Rat(1), Rat(0), Rat(0)});
  if (is_zero(u)) u = cross(n, Vec3{Rat(0), Rat(1), Rat(0)});
  Vec3 v = cross(n, u);  // (u, v, n) is a right-handed frame
  std::vector<PlanarPoint> pp;
  pp.reserve(pts.size());
  for (const Point3& p : pts) pp.push_back({dot(p, u), dot(p, v), &p});
  std::sort(pp.begin(), pp.end(), [](const PlanarPoint& a, const PlanarPoint& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  pp.erase(std::unique(pp.begin(), pp.end(),
                       [](const PlanarPoint& a, const PlanarPoint& b) {
                         return a.u == b.u && a.v == b.v;
                       }),
           pp.end());
  size_t m = pp.size();
  if (m <= 2) {
    std::vector<Point3> out;
    for (auto& q : pp) out.push_back(*q.src);
    return out;
  }
  std::vector<const PlanarPoint*> hull;
  auto turn = [](const PlanarPoint* a, const PlanarPoint* b, const PlanarPoint* c) {
    return cross2(b->u - a->u, b->v - a->v, c->u - a->u, c->v - a->v);
  };
  for (size_t pass = 0; pass < 2; ++pass) {
    size_t base = hull.size();
    for (size_t k = 0; k < m; ++k) {
      const PlanarPoint* q = pass == 0 ? &pp[k] : &pp[m - 1 - k];
      while (hull.size() >= base + 2 &&
             turn(hull[hull.size() - 2], hull[hull.size() - 1], q) <= 0)
        hull.pop_back();
      hull.push_back(q);
    }
    hull.pop_back();  // last point repeats as the next pass's first
  }
  std::vector<Point3> out;
  out.reserve(hull.size());
  for (auto* q : hull) out.push_back(*q->src);
  return out;
}

// Separating-axis test for the OPEN interiors of two coplanar convex
// polygons given in ccw order w.r.t. n: returns true iff the interiors
// intersect. An edge line with one polygon entirely on its closed
// non-positive side separates the interiors.
inline bool open_polygons_intersect_2d(const Vec3& n, const std::vector<Point3>& A,
                                       const std::vector<Point3>& B) {
  const std::vector<Point3>* polys[2][2] = {{&A, &B}, {&B, &A}};
  for (auto& pq : polys) {
    const std::vector<Point3>& P = *pq[0];
    const std::vector<Point3>& Q = *pq[1];
    size_t k = P.size();
    for (size_t i = 0; i < k; ++i) {
      const Point3& e0 = P[i];
      const Point3& e1 = P[(i + 1) % k];
      bool separated = true;
      for (const Point3& q : Q) {
        if (in_plane_orient(n, e0, e1, q) > 0) {
          separated = false;
          break;
        }
      }
      if (separated) return false;
    }
  }
  return true;
}

// ----- relint-pair intersection cases --------------------------------------

using Face = std::array<const Point3*, 4>;  // first `dim+1` entries valid

inline bool relint_seg_seg(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  if (orient3d(a, b, c, d) != 0) return false;  // skew
  Vec3 ab = b - a, cd = d - c;
  Vec3 n = cross(ab, cd);
  if (!is_zero(n)) {
    // Coplanar, non-parallel: open segments cross iff each strictly
    // straddles the other's line.
    int s1 = in_plane_orient(n, a, b, c), s2 = in_plane_orient(n, a, b, d);
    int s3 = in_plane_orient(n, c, d, a), s4 = in_plane_orient(n, c, d, b);
    return s1 * s2 < 0 && s3 * s4 < 0;
  }
  if (!is_zero(cross(ab, c - a))) return false;  // parallel, distinct lines
  // Collinear: compare open parameter ranges along ab.
  Rat len2 = dot(ab, ab);
  Rat u0 = dot(c - a, ab), u1 = dot(d - a, ab);
  if (u0 > u1) std::swap(u0, u1);
  Rat lo = u0 > 0 ? u0 : Rat(0);
  Rat hi = u1 < len2 ? u1 : len2;
  return lo < hi;
}

inline bool relint_seg_triangle(const Point3& a, const Point3& b, const Point3& t0,
                                const Point3& t1, const Point3& t2) {
  Rat wa = orient3d_val(t0, t1, t2, a);
  Rat wb = orient3d_val(t0, t1, t2, b);
  int sa = sign_of(wa), sb = sign_of(wb);
  if (sa == 0 && sb == 0) {
    // Segment lies in the triangle's plane: clip the open parameter range
    // against the three open edge half-planes.
    Vec3 n = cross(t1 - t0, t2 - t0);
    OpenInterval iv = OpenInterval::unit();
    const Point3* e[3][2] = {{&t0, &t1}, {&t1, &t2}, {&t2, &t0}};
    for (auto& ed : e) {
      iv.require_positive(in_plane_orient_val(n, *ed[0], *ed[1], a),
                          in_plane_orient_val(n, *ed[0], *ed[1], b));
      if (!iv.nonempty()) return false;
    }
    return iv.nonempty();
  }
  if (sa * sb >= 0) return false;  // open segment misses the plane
  // Strict crossing: the crossing point must be strictly inside.
  Rat t = wa / (wa - wb);
  Point3 x = a + t * (b - a);
  return coplanar_pt_in_open_triangle(x, t0, t1, t2, cross(t1 - t0, t2 - t0));
}

inline bool relint_seg_tet(const Point3& a, const Point3& b, const Point3& v0, const Point3& v1,
                           const Point3& v2, const Point3& v3) {
  OpenInterval iv = OpenInterval::unit();
  const Point3* f[4][4] = {{&v0, &v1, &v2, &v3},
                           {&v0, &v1, &v3, &v2},
                           {&v0, &v2, &v3, &v1},
                           {&v1, &v2, &v3, &v0}};
  for (auto& fc : f) {
    Rat side = orient3d_val(*fc[0], *fc[1], *fc[2], *fc[3]);
    int sigma = sign_of(side);  // interior lies where sigma * facet value > 0
    Rat w0 = orient3d_val(*fc[0], *fc[1], *fc[2], a);
    Rat w1 = orient3d_val(*fc[0], *fc[1], *fc[2], b);
    if (sigma < 0) {
      w0 = -w0;
      w1 = -w1;
    }
    iv.require_positive(w0, w1);
    if (!iv.nonempty()) return false;
  }
  return iv.nonempty();
}

inline bool relint_tri_tri(const Point3& a0, const Point3& a1, const Point3& a2, const Point3& b0,
                           const Point3& b1, const Point3& b2) {
  int pb[3] = {orient3d(a0, a1, a2, b0), orient3d(a0, a1, a2, b1), orient3d(a0, a1, a2, b2)};
  if (pb[0] > 0 && pb[1] > 0 && pb[2] > 0) return false;
  if (pb[0] < 0 && pb[1] < 0 && pb[2] < 0) return false;
  int pa[3] = {orient3d(b0, b1, b2, a0), orient3d(b0, b1, b2, a1), orient3d(b0, b1, b2, a2)};
  if (pa[0] > 0 && pa[1] > 0 && pa[2] > 0) return false;
  if (pa[0] < 0 && pa[1] < 0 && pa[2] < 0) return false;

  Vec3 na = cross(a1 - a0, a2 - a0);
  Vec3 nb = cross(b1 - b0, b2 - b0);

  if (pb[0] == 0 && pb[1] == 0 && pb[2] == 0) {
    // Coplanar triangles: 2D separating-axis test on the open interiors.
    std::vector<Point3> A = {a0, a1, a2};
    std::vector<Point3> B = {b0, b1, b2};
    if (in_plane_orient(na, b0, b1, b2) < 0) std::swap(B[1], B[2]);
    return open_polygons_intersect_2d(na, A, B);
  }

  // Planes are distinct and non-parallel; both open triangles meet the
  // common line x0 + t*u (or not). Clip that line by the six open edge
  // half-planes (three per triangle).
  Vec3 u = cross(na, nb);
  Rat A = dot(na, na), B = dot(na, nb), C = dot(nb, nb);
  Rat d1 = dot(na, a0 - Point3()), d2 = dot(nb, b0 - Point3());
  Rat Delta = A * C - B * B;  // > 0 since na, nb independent
  Rat alpha = (d1 * C - d2 * B) / Delta;
  Rat beta = (d2 * A - d1 * B) / Delta;
  Point3 x0{alpha * na.x + beta * nb.x, alpha * na.y + beta * nb.y, alpha * na.z + beta * nb.z};
  Point3 x1 = x0 + u;

  OpenInterval iv = OpenInterval::whole();
  const Point3* tris[2][3] = {{&a0, &a1, &a2}, {&b0, &b1, &b2}};
  const Vec3* norms[2] = {&na, &nb};
  for (int t = 0; t < 2; ++t) {
    for (int i = 0; i < 3; ++i) {
      const Point3& e0 = *tris[t][i];
      const Point3& e1 = *tris[t][(i + 1) % 3];
      iv.require_positive(in_plane_orient_val(*norms[t], e0, e1, x0),
                          in_plane_orient_val(*norms[t], e0, e1, x1));
      if (!iv.nonempty()) return false;
    }
  }
  return iv.nonempty();
}

// Cross-section of the OPEN tet by the plane of the triangle, then a 2D
// open-interior test against the triangle. Works for any coplanar convex
// polygon in ccw order, so it is shared with polyhedron-face tests.
inline bool relint_polygon_open_tet(const std::vector<Point3>& poly, const Vec3& n,
                                    const Point3& v0, const Point3& v1, const Point3& v2,
                                    const Point3& v3) {
  const Point3* tv[4] = {&v0, &v1, &v2, &v3};
  Rat L[4];
  bool pos = false, neg = false;
  for (int i = 0; i < 4; ++i) {
    L[i] = dot(n, *tv[i] - poly[0]);
    if (L[i] > 0) pos = true;
    if (L[i] < 0) neg = true;
  }
  if (!pos || !neg) return false;  // open tet misses the plane
  std::vector<Point3> section;
  for (int i = 0; i < 4; ++i)
    if (L[i] == 0) section.push_back(*tv[i]);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (sign_of(L[i]) * sign_of(L[j]) < 0) {
        Rat t = L[i] / (L[i] - L[j]);
        section.push_back(*tv[i] + t * (*tv[j] - *tv[i]));
      }
  std::vector<Point3> sect_hull = hull2d_ccw(n, section);
  // A plane strictly separating two vertices of a nondegenerate tet cuts a
  // full 2D cross-section.
  return open_polygons_intersect_2d(n, poly, sect_hull);
}

inline bool relint_tri_tet(const Point3& t0, const Point3& t1, const Point3& t2, const Point3& v0,
                           const Point3& v1, const Point3& v2, const Point3& v3) {
  Vec3 n = cross(t1 - t0, t2 - t0);
  std::vector<Point3> tri = {t0, t1, t2};  // ccw w.r.t. its own normal n
  return relint_polygon_open_tet(tri, n, v0, v1, v2, v3);
}

// Separating-axis test for two nondegenerate tetrahedra's OPEN interiors.
// Axes: both facet normal sets plus all edge-direction cross products.
// Touching (closed overlap with empty open overlap) shows up as a
// non-strict separation on some axis.
inline bool open_tet_tet_intersect(const std::array<const Point3*, 4>& S,
                                   const std::array<const Point3*, 4>& T) {
  auto separated_by = [&](const Vec3& axis) {
    if (is_zero(axis)) return false;
    Rat smin, smax, tmin, tmax;
    for (int i = 0; i < 4; ++i) {
      Rat ps = dot(axis, *S[i] - Point3());
      Rat pt = dot(axis, *T[i] - Point3());
      if (i == 0) {
        smin = smax = ps;
        tmin = tmax = pt;
      } else {
        if (ps < smin) smin = ps;
        if (ps > smax) smax = ps;
        if (pt < tmin) tmin = pt;
        if (pt > tmax) tmax = pt;
      }
    }
    return smax <= tmin || tmax <= smin;
  };
  static const int facets[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (auto& f : facets) {
    if (separated_by(cross(*S[f[1]] - *S[f[0]], *S[f[2]] - *S[f[0]]))) return false;
    if (separated_by(cross(*T[f[1]] - *T[f[0]], *T[f[2]] - *T[f[0]]))) return false;
  }
  static const int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (auto& es : edges) {
    Vec3 ds = *S[es[1]] - *S[es[0]];
    for (auto& et : edges) {
      Vec3 dt = *T[et[1]] - *T[et[0]];
      if (separated_by(cross(ds, dt))) return false;
    }
  }
  return true;
}

// Dispatch on (dim f, dim g), dim f <= dim g. Entries of f/g beyond the
// dimension are unused.
inline bool relints_intersect(const Face& f, int df, const Face& g, int dg) {
  if (df > dg) return relints_intersect(g, dg, f, df);
  switch (df * 4 + dg) {
    case 0 * 4 + 0:
      return pt_in_relint_point(*f[0], *g[0]);
    case 0 * 4 + 1:
      return pt_in_relint_segment(*f[0], *g[0], *g[1]);
    case 0 * 4 + 2:
      return pt_in_relint_triangle(*f[0], *g[0], *g[1], *g[2]);
    case 0 * 4 + 3:
      return pt_in_open_tet(*f[0], *g[0], *g[1], *g[2], *g[3]);
    case 1 * 4 + 1:
      return relint_seg_seg(*f[0], *f[1], *g[0], *g[1]);
    case 1 * 4 + 2:
      return relint_seg_triangle(*f[0], *f[1], *g[0], *g[1], *g[2]);
    case 1 * 4 + 3:
      return relint_seg_tet(*f[0], *f[1], *g[0], *g[1], *g[2], *g[3]);
    case 2 * 4 + 2:
      return relint_tri_tri(*f[0], *f[1], *f[2], *g[0], *g[1], *g[2]);
    case 2 * 4 + 3:
      return relint_tri_tet(*f[0], *f[1], *f[2], *g[0], *g[1], *g[2], *g[3]);
    case 3 * 4 + 3:
      return open_tet_tet_intersect({f[0], f[1], f[2], f[3]}, {g[0], g[1], g[2], g[3]});
    default:
      return false;  // unreachable
  }
}

inline void check_simplex_nondegenerate(const std::vector<Point3>& s) {
  if (s.empty() || s.size() > 4)
    throw DegenerateSimplex("simplex must have 1 to 4 vertices");
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) throw DegenerateSimplex("simplex has repeated vertices");
  if (s.size() == 3 && is_zero(cross(s[1] - s[0], s[2] - s[0])))
    throw DegenerateSimplex("triangle vertices are collinear");
  if (s.size() == 4 && orient3d(s[0], s[1], s[2], s[3]) == 0)
    throw DegenerateSimplex("tetrahedron vertices are coplanar");
}

// Subset-pair visit order for the proper-intersection loop: cheap
// (low-dimensional) pairs first. Masks are over vertex indices.
struct SubsetPair {
  unsigned m1, m2;
};

inline const std::vector<SubsetPair>& subset_pairs(size_t n1, size_t n2) {
  static std::vector<SubsetPair> cache[5][5];
  static bool built[5][5] = {};
  auto& out = cache[n1][n2];
  if (!built[n1][n2]) {
    for (unsigned a = 1; a < (1u << n1); ++a)
      for (unsigned b = 1; b < (1u << n2); ++b) out.push_back({a, b});
    auto card = [](unsigned m) { return __builtin_popcount(m); };
    std::stable_sort(out.begin(), out.end(), [&](const SubsetPair& p, const SubsetPair& q) {
      return card(p.m1) + card(p.m2) < card(q.m1) + card(q.m2);
    });
    built[n1][n2] = true;
  }
  return out;
}

inline bool same_point_set(const Face& f, int nf, const Face& g, int ng) {
  if (nf != ng) return false;
  for (int i = 0; i < nf; ++i) {
    bool found = false;
    for (int j = 0; j < ng; ++j)
      if (*f[i] == *g[j]) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// Exhaustive criterion: the two simplices' intersection equals the hull of
// their shared vertices iff every face pair with differing vertex sets has
// disjoint relative interiors.
inline bool all_face_pairs_disjoint(const Face& va, int na, const Face& vb, int nb) {
  Face fa{}, fb{};
  const auto& order = subset_pairs(static_cast<size_t>(na), static_cast<size_t>(nb));
  for (const SubsetPair& sp : order) {
    int nf = 0, ng = 0;
    for (int i = 0; i < na; ++i)
      if (sp.m1 & (1u << i)) fa[nf++] = va[i];
    for (int i = 0; i < nb; ++i)
      if (sp.m2 & (1u << i)) fb[ng++] = vb[i];
    if (same_point_set(fa, nf, fb, ng)) continue;
    if (relints_intersect(fa, nf - 1, fb, ng - 1)) return false;
  }
  return true;
}

}  // namespace geo_detail

// Classifies p against the closed simplex spanned by s (1 to 4 affinely
// independent vertices): strictly inside its relative interior, on its
// relative boundary, or outside. A single point has itself as relative
// interior and no boundary.
inline Containment point_in_simplex(const Point3& p, const std::vector<Point3>& s) {
  geo_detail::check_simplex_nondegenerate(s);
  switch (s.size()) {
    case 1:
      return p == s[0] ? Containment::Interior : Containment::Outside;
    case 2: {
      Vec3 ab = s[1] - s[0];
      if (!is_zero(cross(ab, p - s[0]))) return Containment::Outside;
      Rat t = dot(p - s[0], ab), len2 = dot(ab, ab);
      if (t < 0 || t > len2) return Containment::Outside;
      if (t == 0 || t == len2) return Containment::Boundary;
      return Containment::Interior;
    }
    case 3: {
      if (orient3d(s[0], s[1], s[2], p) != 0) return Containment::Outside;
      Vec3 n = cross(s[1] - s[0], s[2] - s[0]);
      int e0 = in_plane_orient(n, s[0], s[1], p);
      int e1 = in_plane_orient(n, s[1], s[2], p);
      int e2 = in_plane_orient(n, s[2], s[0], p);
      if (e0 < 0 || e1 < 0 || e2 < 0) return Containment::Outside;
      if (e0 == 0 || e1 == 0 || e2 == 0) return Containment::Boundary;
      return Containment::Interior;
    }
    default: {
      int s0 = orient3d(s[0], s[1], s[2], s[3]);
      int f0 = orient3d(s[0], s[1], s[2], p);
      int f1 = orient3d(s[0], s[1], p, s[3]);
      int f2 = orient3d(s[0], p, s[2], s[3]);
      int f3 = orient3d(p, s[1], s[2], s[3]);
      if (f0 * s0 < 0 || f1 * s0 < 0 || f2 * s0 < 0 || f3 * s0 < 0) return Containment::Outside;
      if (f0 == 0 || f1 == 0 || f2 == 0 || f3 == 0) return Containment::Boundary;
      return Containment::Interior;
    }
  }
}

// Proper intersection of two nondegenerate simplices (1 to 4 vertices
// each): true iff their intersection is exactly the convex hull of their
// shared vertices and the two vertex sets are not identical. Equivalently,
// for every pair of faces (one from each simplex) whose vertex sets
// differ, the relative interiors are disjoint.
//
// Throws DegenerateSimplex if either input is degenerate.
inline bool simplices_properly_intersect(const std::vector<Point3>& s1,
                                         const std::vector<Point3>& s2) {
  using namespace geo_detail;
  check_simplex_nondegenerate(s1);
  check_simplex_nondegenerate(s2);

  // Identical vertex sets: the simplices coincide, which is improper.
  {
    Face f{}, g{};
    for (size_t i = 0; i < s1.size(); ++i) f[i] = &s1[i];
    for (size_t i = 0; i < s2.size(); ++i) g[i] = &s2[i];
    if (same_point_set(f, static_cast<int>(s1.size()), g, static_cast<int>(s2.size())))
      return false;
  }

  // Strictly disjoint bounding boxes: nothing can intersect, and no
  // vertices are shared, so the intersection is trivially proper.
  {
    auto axis_disjoint = [&](auto get) {
      Rat min1 = get(s1[0]), max1 = min1, min2 = get(s2[0]), max2 = min2;
      for (const auto& p : s1) {
        Rat v = get(p);
        if (v < min1) min1 = v;
        if (v > max1) max1 = v;
      }
      for (const auto& p : s2) {
        Rat v = get(p);
        if (v < min2) min2 = v;
        if (v > max2) max2 = v;
      }
      return max1 < min2 || max2 < min1;
    };
    if (axis_disjoint([](const Point3& p) { return p.x; }) ||
        axis_disjoint([](const Point3& p) { return p.y; }) ||
        axis_disjoint([](const Point3& p) { return p.z; }))
      return true;
  }

  // Fast path: two tetrahedra sharing exactly one facet are proper iff
  // their apexes lie strictly on opposite sides of that facet's plane.
  if (s1.size() == 4 && s2.size() == 4) {
    std::vector<const Point3*> shared;
    const Point3* apex1 = nullptr;
    const Point3* apex2 = nullptr;
    int shared_count = 0;
    for (const auto& p : s1) {
      bool found = false;
      for (const auto& q : s2)
        if (p == q) {
          found = true;
          break;
        }
      if (found) {
        shared.push_back(&p);
        ++shared_count;
      } else {
        apex1 = &p;
      }
    }
    if (shared_count == 3) {
      for (const auto& q : s2) {
        bool found = false;
        for (const auto& p : s1)
          if (p == q) {
            found = true;
            break;
          }
        if (!found) apex2 = &q;
      }
      int sp = orient3d(*shared[0], *shared[1], *shared[2], *apex1);
      int sq = orient3d(*shared[0], *shared[1], *shared[2], *apex2);
      return sp * sq < 0;
    }
  }

  // Tet-tet separating-axis sweep. A strict separation means the closed
  // tetrahedra are disjoint: proper. A touching separation (projections
  // meeting at a single value c) confines the whole intersection to the
  // plane H = {axis . x = c}, so A cap B = (A cap H) cap (B cap H) and the
  // question reduces to the two exposed faces, each spanned by at most 3
  // vertices. If no axis separates even weakly, the open interiors meet:
  // improper. These three outcomes are exhaustive. The sweep runs on a
  // local integer lattice (the answer is invariant under uniform positive
  // scaling), keeping the hot loop free of rational renormalization.
  if (s1.size() == 4 && s2.size() == 4) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Int den(1);
    for (const std::vector<Point3>* sv : {&s1, &s2})
      for (const Point3& p : *sv) {
        den = boost::multiprecision::lcm(den, denominator(p.x));
        den = boost::multiprecision::lcm(den, denominator(p.y));
        den = boost::multiprecision::lcm(den, denominator(p.z));
      }
    auto scale_coord = [&](const Rat& r) { return Int(numerator(r) * (den / denominator(r))); };
    Int SI[4][3], TI[4][3];
    for (int i = 0; i < 4; ++i) {
      SI[i][0] = scale_coord(s1[i].x);
      SI[i][1] = scale_coord(s1[i].y);
      SI[i][2] = scale_coord(s1[i].z);
      TI[i][0] = scale_coord(s2[i].x);
      TI[i][1] = scale_coord(s2[i].y);
      TI[i][2] = scale_coord(s2[i].z);
    }
    static const int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    // Facet f spans the cross of these two edge vectors.
    static const int facet_edges[4][2] = {{0, 1}, {0, 2}, {1, 2}, {3, 4}};
    Int SE[6][3], TE[6][3];
    for (int e = 0; e < 6; ++e)
      for (int c = 0; c < 3; ++c) {
        SE[e][c] = SI[edges[e][1]][c] - SI[edges[e][0]][c];
        TE[e][c] = TI[edges[e][1]][c] - TI[edges[e][0]][c];
      }

    Face fa{}, fb{};
    int na = 0, nb = 0;
    Int axis[3], ps[4], pt[4];
    auto set_cross = [&](const Int a[3], const Int b[3]) {
      axis[0] = a[1] * b[2] - a[2] * b[1];
      axis[1] = a[2] * b[0] - a[0] * b[2];
      axis[2] = a[0] * b[1] - a[1] * b[0];
    };
    // 1 = strict separation, 2 = touching (contact faces filled), 0 = none.
    auto scan = [&]() -> int {
      if (axis[0] == 0 && axis[1] == 0 && axis[2] == 0) return 0;
      for (int i = 0; i < 4; ++i) {
        ps[i] = axis[0] * SI[i][0] + axis[1] * SI[i][1] + axis[2] * SI[i][2];
        pt[i] = axis[0] * TI[i][0] + axis[1] * TI[i][1] + axis[2] * TI[i][2];
      }
      int smin = 0, smax = 0, tmin = 0, tmax = 0;
      for (int i = 1; i < 4; ++i) {
        if (ps[i] < ps[smin]) smin = i;
        if (ps[i] > ps[smax]) smax = i;
        if (pt[i] < pt[tmin]) tmin = i;
        if (pt[i] > pt[tmax]) tmax = i;
      }
      if (ps[smax] < pt[tmin] || pt[tmax] < ps[smin]) return 1;
      const Int* contact;
      if (ps[smax] == pt[tmin])
        contact = &ps[smax];
      else if (pt[tmax] == ps[smin])
        contact = &ps[smin];
      else
        return 0;
      na = nb = 0;
      for (int i = 0; i < 4; ++i) {
        if (ps[i] == *contact) fa[na++] = &s1[i];
        if (pt[i] == *contact) fb[nb++] = &s2[i];
      }
      return 2;
    };
    // Touching: every shared vertex lies on the contact plane, so it
    // appears in both exposed faces; properness of the original pair is
    // exactly properness of the contact pair.
    auto finish_contact = [&]() -> bool {
      if (same_point_set(fa, na, fb, nb)) return true;
      return all_face_pairs_disjoint(fa, na, fb, nb);
    };
    for (int f = 0; f < 4; ++f) {
      set_cross(SE[facet_edges[f][0]], SE[facet_edges[f][1]]);
      if (int h = scan()) return h == 1 ? true : finish_contact();
      set_cross(TE[facet_edges[f][0]], TE[facet_edges[f][1]]);
      if (int h = scan()) return h == 1 ? true : finish_contact();
    }
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        set_cross(SE[a], TE[b]);
        if (int h = scan()) return h == 1 ? true : finish_contact();
      }
    return false;  // no axis separates even weakly: open interiors intersect
  }

  // General case: every face pair with differing vertex sets must have
  // disjoint relative interiors.
  Face fa{}, fb{};
  for (size_t i = 0; i < s1.size(); ++i) fa[i] = &s1[i];
  for (size_t i = 0; i < s2.size(); ++i) fb[i] = &s2[i];
  return all_face_pairs_disjoint(fa, static_cast<int>(s1.size()), fb,
                                 static_cast<int>(s2.size()));
}

}  // namespace polytet

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "candidates.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "polyhedron.hpp"

namespace polytet {

enum class SolveMode { Minimize, Maximize, Decide };
enum class SolveStatus { Optimal, Feasible, Infeasible, Limit };

struct SolveSpec {
  SolveMode mode = SolveMode::Minimize;
  // Decide asks: is there a triangulation with FEWER than decide_k tets?
  int decide_k = 0;
  std::vector<std::pair<int, int>> forced_edges;
  std::vector<std::pair<int, int>> forbidden_edges;
  // Exact boundary triangulation every solution must induce.
  std::optional<std::vector<Triangle>> surface;
  uint64_t node_limit = 0;     // 0 = unlimited
  uint64_t time_limit_ms = 0;  // 0 = unlimited
};

struct SolveStats {
  uint64_t nodes = 0;
  size_t candidates = 0;
  uint64_t millis = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<int> value;
  std::optional<Triangulation> witness;
  SolveStats stats;
};

// Checks that `surface` is a triangulation of the boundary of P: every
// triangle spans vertices of exactly one face, and the triangles assigned
// to each face tile it (pairwise proper, exact area sum). Returns a reason
// string, or nullopt if the surface is valid. Requires a valid P.
inline std::optional<std::string> validate_surface(const Polyhedron& P,
                                                   const std::vector<Triangle>& surface) {
  const int n = static_cast<int>(P.vertices.size());
  std::vector<std::set<int>> face_sets;
  for (const auto& f : P.faces) face_sets.emplace_back(f.begin(), f.end());

  std::set<Triangle> seen;
  std::vector<std::vector<Triangle>> per_face(P.faces.size());
  for (const Triangle& tri : surface) {
    for (int idx : tri.v)
      if (idx < 0 || idx >= n)
        return "surface triangle references vertex " + std::to_string(idx) + " out of range";
    if (!seen.insert(tri).second)
      return "surface repeats triangle " + std::to_string(tri.v[0]) + "-" +
             std::to_string(tri.v[1]) + "-" + std::to_string(tri.v[2]);
    int home = -1;
    for (size_t fi = 0; fi < face_sets.size(); ++fi) {
      if (face_sets[fi].count(tri.v[0]) && face_sets[fi].count(tri.v[1]) &&
          face_sets[fi].count(tri.v[2])) {
        if (home >= 0)
          return "surface triangle " + std::to_string(tri.v[0]) + "-" +
                 std::to_string(tri.v[1]) + "-" + std::to_string(tri.v[2]) +
                 " is ambiguous between faces";
        home = static_cast<int>(fi);
      }
    }
    if (home < 0)
      return "surface triangle " + std::to_string(tri.v[0]) + "-" + std::to_string(tri.v[1]) +
             "-" + std::to_string(tri.v[2]) + " does not lie on any face";
    per_face[static_cast<size_t>(home)].push_back(tri);
  }

  for (size_t fi = 0; fi < P.faces.size(); ++fi) {
    const auto& face = P.faces[fi];
    Vec3 nrm = poly_detail::face_normal(P, face);
    // Twice the face area times |nrm|, via the fan from the first vertex.
    Rat face_measure = 0;
    for (size_t i = 1; i + 1 < face.size(); ++i)
      face_measure += in_plane_orient_val(nrm, P.vertices[face[0]], P.vertices[face[i]],
                                          P.vertices[face[i + 1]]);
    Rat tri_measure = 0;
    for (const Triangle& tri : per_face[fi]) {
      Rat m = in_plane_orient_val(nrm, P.vertices[tri.v[0]], P.vertices[tri.v[1]],
                                  P.vertices[tri.v[2]]);
      tri_measure += (m < 0 ? Rat(-m) : m);
    }
    if (tri_measure != face_measure)
      return "surface does not tile face " + std::to_string(fi);
    for (size_t i = 0; i < per_face[fi].size(); ++i)
      for (size_t j = i + 1; j < per_face[fi].size(); ++j) {
        std::vector<Point3> a, b;
        for (int idx : per_face[fi][i].v) a.push_back(P.vertices[idx]);
        for (int idx : per_face[fi][j].v) b.push_back(P.vertices[idx]);
        if (!simplices_properly_intersect(a, b))
          return "surface triangles overlap on face " + std::to_string(fi);
      }
  }
  return std::nullopt;
}

// Fan triangulation of a convex polyhedron from vertex v: every face not
// containing v is fanned from its lowest-index vertex and coned to v.
inline Triangulation star_triangulation(const Polyhedron& P, int v) {
  ValidationReport rep = validate(P);
  if (!rep.ok()) throw InvalidPolyhedron("star triangulation requires a valid polyhedron");
  if (!rep.convex) throw NotConvex("star triangulation requires a convex polyhedron");
  if (v < 0 || static_cast<size_t>(v) >= P.vertices.size())
    throw InvalidParams("star vertex index out of range");

  Triangulation tets;
  for (const auto& face : P.faces) {
    if (std::find(face.begin(), face.end(), v) != face.end()) continue;
    const size_t k = face.size();
    size_t apex_pos = 0;
    for (size_t i = 1; i < k; ++i)
      if (face[i] < face[apex_pos]) apex_pos = i;
    int apex = face[apex_pos];
    for (size_t i = 1; i + 1 < k; ++i) {
      int b = face[(apex_pos + i) % k];
      int c = face[(apex_pos + i + 1) % k];
      tets.push_back(Tet::of(v, apex, b, c));
    }
  }
  std::sort(tets.begin(), tets.end());
  return tets;
}

struct StarResult {
  int vertex = 0;
  Triangulation tets;
};

// Smallest star triangulation over all vertices; ties break to the lowest
// vertex index.
inline StarResult best_star(const Polyhedron& P) {
  ValidationReport rep = validate(P);
  if (!rep.ok()) throw InvalidPolyhedron("star triangulation requires a valid polyhedron");
  if (!rep.convex) throw NotConvex("star triangulation requires a convex polyhedron");

  const int n = static_cast<int>(P.vertices.size());
  int best_v = -1;
  long best_size = -1;
  for (int v = 0; v < n; ++v) {
    long size = 0;
    for (const auto& face : P.faces)
      if (std::find(face.begin(), face.end(), v) == face.end())
        size += static_cast<long>(face.size()) - 2;
    if (best_v < 0 || size < best_size) {
      best_v = v;
      best_size = size;
    }
  }
  StarResult r;
  r.vertex = best_v;
  r.tets = star_triangulation(P, best_v);
  return r;
}

// Independent validity check of a claimed triangulation: index range,
// nondegeneracy, containment in P, pairwise proper intersection, and the
// exact volume identity. With `surface`, additionally requires the induced
// boundary triangle set to equal it. Order of `tets` is irrelevant;
// repeated tets are invalid. Writes a human-readable reason on failure.
inline bool check_triangulation(const Polyhedron& P, const Triangulation& tets,
                                const std::vector<Triangle>* surface = nullptr,
                                std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  ValidationReport rep = validate(P);
  if (!rep.ok()) throw InvalidPolyhedron("triangulation check requires a valid polyhedron");
  if (tets.empty()) return fail("triangulation is empty");

  const int n = static_cast<int>(P.vertices.size());
  Triangulation T = tets;
  std::sort(T.begin(), T.end());
  for (size_t i = 0; i + 1 < T.size(); ++i)
    if (T[i] == T[i + 1]) return fail("triangulation repeats a tetrahedron");
  for (const Tet& t : T)
    for (int idx : t.v)
      if (idx < 0 || idx >= n) return fail("tetrahedron vertex index out of range");

  auto frames = cand_detail::face_frames(P);
  std::vector<std::vector<Point3>> pts(T.size());
  for (size_t i = 0; i < T.size(); ++i)
    for (int idx : T[i].v) pts[i].push_back(P.vertices[idx]);

  Rat total = 0;
  for (size_t i = 0; i < T.size(); ++i) {
    Rat vol = orient3d_val(pts[i][0], pts[i][1], pts[i][2], pts[i][3]);
    if (vol == 0)
      return fail("tetrahedron " + std::to_string(i) + " is degenerate");
    total += vol < 0 ? Rat(-vol) : vol;
    std::array<const Point3*, 4> tp = {&pts[i][0], &pts[i][1], &pts[i][2], &pts[i][3]};
    if (!cand_detail::tet_in_impl(P, frames, rep.convex, tp))
      return fail("tetrahedron " + std::to_string(i) + " is not contained in the polyhedron");
  }
  for (size_t i = 0; i < T.size(); ++i)
    for (size_t j = i + 1; j < T.size(); ++j)
      if (!simplices_properly_intersect(pts[i], pts[j]))
        return fail("tetrahedra " + std::to_string(i) + " and " + std::to_string(j) +
                    " intersect improperly");
  if (total != poly_detail::signed_volume6(P))
    return fail("tetrahedra volumes do not sum to the polyhedron volume");

  if (surface) {
    std::map<Triangle, int> count;
    for (const Tet& t : T)
      for (const Triangle& tri : t.triangles()) ++count[tri];
    std::set<Triangle> boundary;
    for (const auto& [tri, c] : count)
      if (c == 1) boundary.insert(tri);
    std::set<Triangle> want(surface->begin(), surface->end());
    if (boundary != want) return fail("induced boundary differs from the required surface");
  }
  if (why) why->clear();
  return true;
}

namespace solve_detail {

struct Search {
  const Polyhedron& P;
  const CandidateSet& C;
  const SolveSpec& spec;

  Rat total_vol;
  size_t words;
  std::vector<uint64_t> alive0;
  std::map<Triangle, std::vector<int>> tri_cands;
  std::map<Triangle, bool> tri_on_boundary;
  std::set<Triangle> surface_set;
  std::vector<std::vector<uint64_t>> forced_masks;  // per forced edge

  // Node state.
  std::vector<int> chosen;
  std::map<Triangle, int> open_count;
  Rat used_vol;

  // Incumbent / outcome.
  std::optional<Triangulation> best;
  bool decide_found = false;
  bool limit_hit = false;
  uint64_t nodes = 0;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;

  explicit Search(const Polyhedron& p, const CandidateSet& c, const SolveSpec& s)
      : P(p), C(c), spec(s) {}

  bool alive_bit(const std::vector<uint64_t>& alive, size_t i) const {
    return (alive[i / 64] >> (i % 64)) & 1u;
  }

  bool over_limit() {
    if (spec.node_limit && nodes > spec.node_limit) return true;
    if (has_deadline && (nodes % 64 == 0) &&
        std::chrono::steady_clock::now() > deadline)
      return true;
    return false;
  }

  // Max/min candidate volume among alive candidates; nullopt if none.
  std::optional<Rat> extreme_alive_volume(const std::vector<uint64_t>& alive, bool want_max) {
    std::optional<Rat> best_vol;
    for (size_t w = 0; w < words; ++w) {
      uint64_t bits = alive[w];
      while (bits) {
        size_t i = w * 64 + static_cast<size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        const Rat& v = C.volume6[i];
        if (!best_vol || (want_max ? v > *best_vol : v < *best_vol)) best_vol = v;
      }
    }
    return best_vol;
  }

  long alive_count(const std::vector<uint64_t>& alive) const {
    long c = 0;
    for (size_t w = 0; w < words; ++w) c += __builtin_popcountll(alive[w]);
    return c;
  }

  // Can the partial solution still beat/satisfy the objective if extended
  // from `alive`? Returns false to prune.
  bool bound_allows(const std::vector<uint64_t>& alive) {
    Rat rem = total_vol - used_vol;
    long depth = static_cast<long>(chosen.size());
    if (rem == 0) return true;  // leaf logic decides
    if (spec.mode == SolveMode::Maximize) {
      auto mn = extreme_alive_volume(alive, false);
      if (!mn) return false;
      long ub = depth + std::min<long>(static_cast<long>(rat_floor(rem / *mn)),
                                       alive_count(alive));
      if (best && ub < static_cast<long>(best->size())) return false;
      return true;
    }
    auto mx = extreme_alive_volume(alive, true);
    if (!mx) return false;
    long lb = depth + static_cast<long>(rat_ceil(rem / *mx));
    if (spec.mode == SolveMode::Minimize) {
      if (best && lb > static_cast<long>(best->size())) return false;
    } else {  // Decide: need strictly fewer than decide_k
      if (lb >= spec.decide_k) return false;
    }
    return true;
  }

  // Every forced edge must be in a chosen tet already or achievable by an
  // alive candidate.
  bool forced_edges_alive(const std::vector<uint64_t>& alive) {
    for (size_t e = 0; e < spec.forced_edges.size(); ++e) {
      auto [a, b] = spec.forced_edges[e];
      bool realized = false;
      for (int ci : chosen)
        if (C.tets[static_cast<size_t>(ci)].contains_edge(a, b)) {
          realized = true;
          break;
        }
      if (realized) continue;
      bool possible = false;
      for (size_t w = 0; w < words && !possible; ++w)
        if (alive[w] & forced_masks[e][w]) possible = true;
      if (!possible) return false;
    }
    return true;
  }

  void record_leaf() {
    // Pairwise-proper contained tets whose facets are all matched or on
    // the boundary exactly fill the polyhedron.
    if (used_vol != total_vol)
      throw std::logic_error("closed partial triangulation does not fill the volume");
    for (auto [a, b] : spec.forced_edges) {
      bool realized = false;
      for (int ci : chosen)
        if (C.tets[static_cast<size_t>(ci)].contains_edge(a, b)) {
          realized = true;
          break;
        }
      if (!realized) return;
    }
    if (spec.surface) {
      std::set<Triangle> boundary;
      for (const auto& [tri, cnt] : open_count)
        if (cnt == 1) boundary.insert(tri);
      if (boundary != surface_set) return;
    }
    Triangulation T;
    T.reserve(chosen.size());
    for (int ci : chosen) T.push_back(C.tets[static_cast<size_t>(ci)]);
    std::sort(T.begin(), T.end());
    switch (spec.mode) {
      case SolveMode::Minimize:
        if (!best || T.size() < best->size() || (T.size() == best->size() && T < *best))
          best = std::move(T);
        break;
      case SolveMode::Maximize:
        if (!best || T.size() > best->size() || (T.size() == best->size() && T < *best))
          best = std::move(T);
        break;
      case SolveMode::Decide:
        if (static_cast<int>(T.size()) < spec.decide_k) {
          best = std::move(T);
          decide_found = true;
        }
        break;
    }
  }

  // The lexicographically smallest facet triangle owned by exactly one
  // chosen tet and not lying on the boundary, if any.
  const Triangle* open_triangle() const {
    for (const auto& [tri, cnt] : open_count)
      if (cnt == 1 && !tri_on_boundary.at(tri)) return &tri;
    return nullptr;
  }

  void push_tet(int ci) {
    chosen.push_back(ci);
    used_vol += C.volume6[static_cast<size_t>(ci)];
    for (const Triangle& tri : C.tets[static_cast<size_t>(ci)].triangles()) ++open_count[tri];
  }

  void pop_tet() {
    int ci = chosen.back();
    chosen.pop_back();
    used_vol -= C.volume6[static_cast<size_t>(ci)];
    for (const Triangle& tri : C.tets[static_cast<size_t>(ci)].triangles()) {
      auto it = open_count.find(tri);
      if (--(it->second) == 0) open_count.erase(it);
    }
  }

  void dive(const std::vector<uint64_t>& alive) {
    ++nodes;
    if (limit_hit) return;
    if (over_limit()) {
      limit_hit = true;
      return;
    }
    const Triangle* open = open_triangle();
    if (!open) {
      record_leaf();
      return;
    }
    auto it = tri_cands.find(*open);
    if (it == tri_cands.end()) return;
    std::vector<uint64_t> child(words);
    for (int ci : it->second) {
      if (!alive_bit(alive, static_cast<size_t>(ci))) continue;
      const uint64_t* row = &C.compat[static_cast<size_t>(ci) * words];
      for (size_t w = 0; w < words; ++w) child[w] = alive[w] & row[w];
      push_tet(ci);
      if (bound_allows(child) && forced_edges_alive(child)) dive(child);
      pop_tet();
      if (limit_hit || (spec.mode == SolveMode::Decide && decide_found)) return;
    }
  }

  SolveResult run() {
    auto t0 = std::chrono::steady_clock::now();
    if (spec.time_limit_ms) {
      deadline = t0 + std::chrono::milliseconds(spec.time_limit_ms);
      has_deadline = true;
    }

    // Root: branch on the lexicographically smallest tet of the
    // triangulation, so each one is discovered exactly once.
    std::vector<uint64_t> child(words);
    for (size_t r = 0; r < C.tets.size(); ++r) {
      if (!alive_bit(alive0, r)) continue;
      const uint64_t* row = &C.compat[r * words];
      for (size_t w = 0; w < words; ++w) child[w] = alive0[w] & row[w];
      // Clear every candidate before r: r is the smallest chosen tet.
      for (size_t i = 0; i < r; ++i) child[i / 64] &= ~(1ull << (i % 64));
      push_tet(static_cast<int>(r));
      if (bound_allows(child) && forced_edges_alive(child)) dive(child);
      pop_tet();
      if (limit_hit || (spec.mode == SolveMode::Decide && decide_found)) break;
    }

    SolveResult res;
    res.stats.nodes = nodes;
    res.stats.candidates = C.tets.size();
    if (limit_hit) {
      res.status = SolveStatus::Limit;
      if (best && spec.mode != SolveMode::Decide) {
        res.value = static_cast<int>(best->size());
        res.witness = *best;
      }
    } else if (spec.mode == SolveMode::Decide) {
      res.status = decide_found ? SolveStatus::Feasible : SolveStatus::Infeasible;
      if (decide_found) {
        res.value = static_cast<int>(best->size());
        res.witness = *best;
      }
    } else if (best) {
      res.status = SolveStatus::Optimal;
      res.value = static_cast<int>(best->size());
      res.witness = *best;
    } else {
      res.status = SolveStatus::Infeasible;
    }
    res.stats.millis = static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                 std::chrono::steady_clock::now() - t0)
                                                 .count());
    return res;
  }
};

}  // namespace solve_detail

// Complete search for a minimum, maximum, or fewer-than-k triangulation of
// P over the given candidate set, honoring forced/forbidden edges and an
// optional exact surface. Deterministic: ties resolve to the
// lexicographically smallest witness, and Decide returns the first witness
// in search order.
inline SolveResult solve(const Polyhedron& P, const CandidateSet& C, const SolveSpec& spec) {
  ValidationReport rep = validate(P);
  if (!rep.ok()) throw InvalidPolyhedron("solve requires a valid polyhedron");
  const int n = static_cast<int>(P.vertices.size());
  if (spec.mode == SolveMode::Decide && spec.decide_k < 1)
    throw InvalidParams("decide threshold must be at least 1");

  auto check_edge = [&](std::pair<int, int> e, const char* kind) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
      throw InvalidParams(std::string(kind) + " edge index out of range");
    if (e.first == e.second)
      throw InvalidParams(std::string(kind) + " edge endpoints must differ");
  };
  for (auto e : spec.forced_edges) check_edge(e, "forced");
  for (auto e : spec.forbidden_edges) check_edge(e, "forbidden");
  auto norm = [](std::pair<int, int> e) {
    return e.first < e.second ? e : std::pair<int, int>{e.second, e.first};
  };
  for (auto f : spec.forced_edges)
    for (auto g : spec.forbidden_edges)
      if (norm(f) == norm(g))
        throw InfeasibleConstraints("edge " + std::to_string(norm(f).first) + "-" +
                                    std::to_string(norm(f).second) +
                                    " is both forced and forbidden");
  if (spec.surface) {
    if (auto reason = validate_surface(P, *spec.surface))
      throw InfeasibleConstraints("invalid surface: " + *reason);
  }

  solve_detail::Search S(P, C, spec);
  S.total_vol = poly_detail::signed_volume6(P);
  S.used_vol = 0;
  S.words = (C.tets.size() + 63) / 64;
  if (S.words == 0) S.words = 1;
  S.alive0.assign(S.words, 0);

  if (spec.surface) S.surface_set.insert(spec.surface->begin(), spec.surface->end());

  for (size_t i = 0; i < C.tets.size(); ++i) {
    const Tet& t = C.tets[i];
    bool banned = false;
    for (auto [a, b] : spec.forbidden_edges)
      if (t.contains_edge(a, b)) {
        banned = true;
        break;
      }
    if (!banned && spec.surface) {
      auto tris = t.triangles();
      for (int k = 0; k < 4 && !banned; ++k)
        if (C.facet_on_boundary[i][k] && !S.surface_set.count(tris[k])) banned = true;
    }
    if (banned) continue;
    S.alive0[i / 64] |= 1ull << (i % 64);
    auto tris = t.triangles();
    for (int k = 0; k < 4; ++k) {
      S.tri_cands[tris[k]].push_back(static_cast<int>(i));
      S.tri_on_boundary[tris[k]] = C.facet_on_boundary[i][k];
    }
  }

  S.forced_masks.assign(spec.forced_edges.size(), std::vector<uint64_t>(S.words, 0));
  for (size_t e = 0; e < spec.forced_edges.size(); ++e) {
    auto [a, b] = spec.forced_edges[e];
    for (size_t i = 0; i < C.tets.size(); ++i)
      if (S.alive_bit(S.alive0, i) && C.tets[i].contains_edge(a, b))
        S.forced_masks[e][i / 64] |= 1ull << (i % 64);
  }

  return S.run();
}

// Convenience wrappers that enumerate candidates internally.
inline SolveResult min_triangulation(const Polyhedron& P) {
  CandidateSet C = enumerate_candidates(P);
  SolveSpec spec;
  spec.mode = SolveMode::Minimize;
  return solve(P, C, spec);
}

inline SolveResult max_triangulation(const Polyhedron& P) {
  CandidateSet C = enumerate_candidates(P);
  SolveSpec spec;
  spec.mode = SolveMode::Maximize;
  return solve(P, C, spec);
}

inline SolveResult decide_triangulation(const Polyhedron& P, int k) {
  CandidateSet C = enumerate_candidates(P);
  SolveSpec spec;
  spec.mode = SolveMode::Decide;
  spec.decide_k = k;
  return solve(P, C, spec);
}

}  // namespace polytet

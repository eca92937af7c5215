// Command-line front end: generate, validate, solve, star, check, bounds.
//
// Exit codes: 0 success (including OPTIMAL/FEASIBLE solves), 1 usage or
// parse errors, 2 invalid polyhedron, 3 infeasible (or failed check),
// 4 search limit reached.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polytet/candidates.hpp"
#include "polytet/errors.hpp"
#include "polytet/generators.hpp"
#include "polytet/json_io.hpp"
#include "polytet/off_io.hpp"
#include "polytet/polyhedron.hpp"
#include "polytet/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidPolyhedron = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitLimit = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw polytet::InvalidParams("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw polytet::InvalidParams("cannot write file '" + path + "'");
  out << content;
}

polytet::Polyhedron load_polyhedron(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  return polytet::parse_off(in);
}

polytet::Polyhedron load_valid_polyhedron(const std::string& path) {
  polytet::Polyhedron P = load_polyhedron(path);
  polytet::ValidationReport rep = polytet::validate(P);
  if (!rep.ok())
    throw polytet::InvalidPolyhedron("'" + path + "': " + rep.violations.front());
  return P;
}

std::pair<int, int> parse_edge(const std::string& text) {
  auto dash = text.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= text.size())
    throw polytet::InvalidParams("edge must look like 'i-j', got '" + text + "'");
  try {
    size_t a_end = 0, b_end = 0;
    int a = std::stoi(text.substr(0, dash), &a_end);
    int b = std::stoi(text.substr(dash + 1), &b_end);
    if (a_end != dash || b_end != text.size() - dash - 1)
      throw polytet::InvalidParams("edge must look like 'i-j', got '" + text + "'");
    return {a, b};
  } catch (const polytet::InvalidParams&) {
    throw;
  } catch (const std::exception&) {
    throw polytet::InvalidParams("edge must look like 'i-j', got '" + text + "'");
  }
}

struct GenArgs {
  std::string shape;
  std::string twist;
  std::string scale;
  int spokes = 3;
  int n = 0;
  uint64_t seed = 0;
  bool seed_set = false;
  bool n_set = false;
  std::string output;
};

int run_gen(const GenArgs& a) {
  using namespace polytet;
  Polyhedron P;
  std::optional<std::vector<Triangle>> surface;

  if (a.shape == "tetrahedron") {
    P = gen_tetrahedron();
  } else if (a.shape == "cube") {
    P = gen_cube();
  } else if (a.shape == "prism") {
    P = gen_prism();
  } else if (a.shape == "schoenhardt" || a.shape == "schoenhardt-enlarged") {
    SchoenhardtParams params;
    if (a.shape == "schoenhardt-enlarged") params.base_scale = 2;
    if (!a.twist.empty()) {
      auto comma = a.twist.find(',');
      if (comma == std::string::npos)
        throw InvalidParams("--twist must look like 'cos,sin' (rationals)");
      params.twist_cos = parse_rational(a.twist.substr(0, comma));
      params.twist_sin = parse_rational(a.twist.substr(comma + 1));
    }
    if (!a.scale.empty()) params.base_scale = parse_rational(a.scale);
    P = gen_schoenhardt(params);
  } else if (a.shape == "fan") {
    P = gen_fan(a.spokes);
  } else if (a.shape == "prism-twisted") {
    SurfacePolyhedron sp = gen_prism_twisted();
    P = sp.poly;
    surface = sp.surface;
  } else if (a.shape == "random") {
    if (!a.n_set || !a.seed_set)
      throw InvalidParams("shape 'random' requires --n and --seed");
    P = gen_random_convex(a.n, a.seed);
  } else {
    throw InvalidParams("unknown shape '" + a.shape +
                        "' (expected tetrahedron, cube, prism, schoenhardt, "
                        "schoenhardt-enlarged, fan, prism-twisted, or random)");
  }

  write_file(a.output, write_off_string(P));
  if (surface) {
    std::string spath = a.output;
    const std::string suffix = ".off";
    if (spath.size() >= suffix.size() &&
        spath.compare(spath.size() - suffix.size(), suffix.size(), suffix) == 0)
      spath = spath.substr(0, spath.size() - suffix.size());
    spath += ".surface.json";
    write_file(spath, surface_to_json(*surface));
    std::cerr << "wrote " << a.output << " and " << spath << "\n";
  } else {
    std::cerr << "wrote " << a.output << "\n";
  }
  return kExitOk;
}

int run_validate(const std::string& path) {
  using namespace polytet;
  Polyhedron P = load_polyhedron(path);
  ValidationReport rep = validate(P);

  size_t edge_sum = 0;
  for (const auto& f : P.faces) edge_sum += f.size();
  nlohmann::json j;
  j["valid"] = rep.ok();
  j["convex"] = rep.convex;
  j["vertices"] = P.vertices.size();
  j["faces"] = P.faces.size();
  j["edges"] = edge_sum / 2;
  j["violations"] = rep.violations;
  if (rep.ok()) j["volume6"] = rat_to_string(poly_detail::signed_volume6(P));
  std::cout << j.dump() << "\n";
  return rep.ok() ? kExitOk : kExitInvalidPolyhedron;
}

struct SolveArgs {
  std::string path;
  std::string mode = "min";
  int k = 0;
  bool k_set = false;
  std::vector<std::string> force;
  std::vector<std::string> forbid;
  std::string surface_path;
  uint64_t node_limit = 0;
  uint64_t time_limit = 0;
  bool stats = false;
};

int run_solve(const SolveArgs& a) {
  using namespace polytet;
  Polyhedron P = load_valid_polyhedron(a.path);

  SolveSpec spec;
  if (a.mode == "min") {
    spec.mode = SolveMode::Minimize;
  } else if (a.mode == "max") {
    spec.mode = SolveMode::Maximize;
  } else if (a.mode == "decide") {
    spec.mode = SolveMode::Decide;
    if (!a.k_set) throw InvalidParams("--mode decide requires --k");
    spec.decide_k = a.k;
  } else {
    throw InvalidParams("--mode must be min, max, or decide");
  }
  for (const auto& e : a.force) spec.forced_edges.push_back(parse_edge(e));
  for (const auto& e : a.forbid) spec.forbidden_edges.push_back(parse_edge(e));
  if (!a.surface_path.empty()) spec.surface = surface_from_json(read_file(a.surface_path));
  spec.node_limit = a.node_limit;
  spec.time_limit_ms = a.time_limit;

  CandidateSet C = enumerate_candidates(P);
  SolveResult res = solve(P, C, spec);
  std::cout << result_to_json(res, a.stats) << "\n";
  switch (res.status) {
    case SolveStatus::Optimal:
    case SolveStatus::Feasible:
      return kExitOk;
    case SolveStatus::Infeasible:
      return kExitInfeasible;
    default:
      return kExitLimit;
  }
}

int run_star(const std::string& path, int vertex, bool vertex_set) {
  using namespace polytet;
  Polyhedron P = load_valid_polyhedron(path);
  StarResult star;
  if (vertex_set) {
    star.vertex = vertex;
    star.tets = star_triangulation(P, vertex);
  } else {
    star = best_star(P);
  }
  nlohmann::json j;
  j["vertex"] = star.vertex;
  j["size"] = star.tets.size();
  j["tets"] = nlohmann::json::array();
  for (const Tet& t : star.tets) j["tets"].push_back({t.v[0], t.v[1], t.v[2], t.v[3]});
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_check(const std::string& poly_path, const std::string& tri_path,
              const std::string& surface_path) {
  using namespace polytet;
  Polyhedron P = load_valid_polyhedron(poly_path);
  Triangulation T = triangulation_from_json(read_file(tri_path));
  std::optional<std::vector<Triangle>> surface;
  if (!surface_path.empty()) surface = surface_from_json(read_file(surface_path));

  std::string why;
  bool ok = check_triangulation(P, T, surface ? &*surface : nullptr, &why);
  nlohmann::json j;
  j["valid"] = ok;
  if (!ok) j["reason"] = why;
  std::cout << j.dump() << "\n";
  return ok ? kExitOk : kExitInfeasible;
}

int run_bounds(int n) {
  auto [lo, hi] = polytet::triangulation_bounds(n);
  std::cout << lo << " " << hi << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimum/maximum tetrahedralization of polyhedra"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a polyhedron as an OFF file");
  gen->add_option("shape", gen_args.shape,
                  "tetrahedron|cube|prism|schoenhardt|schoenhardt-enlarged|fan|"
                  "prism-twisted|random")
      ->required();
  gen->add_option("--twist", gen_args.twist, "rational cosine,sine of the twist angle");
  gen->add_option("--scale", gen_args.scale, "rational base scale");
  gen->add_option("--spokes", gen_args.spokes, "fan spoke count (>= 3)");
  auto* nopt = gen->add_option("--n", gen_args.n, "random shape vertex count");
  auto* seedopt = gen->add_option("--seed", gen_args.seed, "random shape seed");
  gen->add_option("-o,--output", gen_args.output, "output OFF path")->required();

  std::string validate_path;
  auto* val = app.add_subcommand("validate", "validate an OFF polyhedron");
  val->add_option("file", validate_path, "OFF file")->required();

  SolveArgs solve_args;
  auto* slv = app.add_subcommand("solve", "search for extremal triangulations");
  slv->add_option("file", solve_args.path, "OFF file")->required();
  slv->add_option("--mode", solve_args.mode, "min|max|decide")->required();
  auto* kopt = slv->add_option("--k", solve_args.k, "decide threshold: fewer than k tets");
  slv->add_option("--force", solve_args.force, "edge i-j that must appear (repeatable)");
  slv->add_option("--forbid", solve_args.forbid, "edge i-j that must not appear (repeatable)");
  slv->add_option("--surface", solve_args.surface_path, "required boundary surface JSON");
  slv->add_option("--node-limit", solve_args.node_limit, "abort after this many search nodes");
  slv->add_option("--time-limit", solve_args.time_limit, "abort after this many milliseconds");
  slv->add_flag("--stats", solve_args.stats, "include search statistics in the output");

  std::string star_path;
  int star_vertex = 0;
  bool star_best = false;
  auto* str = app.add_subcommand("star", "star (fan) triangulation of a convex polyhedron");
  str->add_option("file", star_path, "OFF file")->required();
  auto* vopt = str->add_option("--vertex", star_vertex, "star from this vertex");
  str->add_flag("--best", star_best, "pick the vertex with the smallest star (default)");

  std::string check_poly, check_tri, check_surface;
  auto* chk = app.add_subcommand("check", "verify a triangulation JSON against an OFF file");
  chk->add_option("file", check_poly, "OFF file")->required();
  chk->add_option("triangulation", check_tri, "triangulation JSON file")->required();
  chk->add_option("--surface", check_surface, "required boundary surface JSON");

  int bounds_n = 0;
  auto* bnd = app.add_subcommand("bounds", "triangulation size bounds for n vertices");
  bnd->add_option("--n", bounds_n, "vertex count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      gen_args.n_set = nopt->count() > 0;
      gen_args.seed_set = seedopt->count() > 0;
      return run_gen(gen_args);
    }
    if (val->parsed()) return run_validate(validate_path);
    if (slv->parsed()) {
      solve_args.k_set = kopt->count() > 0;
      return run_solve(solve_args);
    }
    if (str->parsed()) {
      bool vertex_set = vopt->count() > 0;
      if (vertex_set && star_best)
        throw polytet::InvalidParams("--vertex and --best are mutually exclusive");
      return run_star(star_path, star_vertex, vertex_set);
    }
    if (chk->parsed()) return run_check(check_poly, check_tri, check_surface);
    if (bnd->parsed()) return run_bounds(bounds_n);
  } catch (const polytet::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const polytet::InvalidPolyhedron& e) {
    std::cerr << "error: invalid polyhedron: " << e.what() << "\n";
    return kExitInvalidPolyhedron;
  } catch (const polytet::NotConvex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidPolyhedron;
  } catch (const polytet::InfeasibleConstraints& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const polytet::InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

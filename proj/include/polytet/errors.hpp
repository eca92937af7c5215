#pragma once

#include <stdexcept>
#include <string>

namespace polytet {

// A simplex argument had repeated/affinely dependent vertices where a
// full-dimensional simplex was required.
struct DegenerateSimplex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A polyhedron failed structural or geometric validation.
struct InvalidPolyhedron : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation argument was outside its documented domain.
struct InvalidParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A constraint set was detected as contradictory before search
// (e.g. an edge both forced and forbidden, or a surface that does not
// tile the boundary).
struct InfeasibleConstraints : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation requiring a convex polyhedron was given a nonconvex one.
struct NotConvex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A retry-based procedure exhausted its deterministic retry budget.
struct RetriesExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries 1-based line and column.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("parse error at line " + std::to_string(line_) +
                           ", column " + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace polytet

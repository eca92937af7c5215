#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polyhedron.hpp"

namespace polytet {

namespace off_detail {

struct Token {
  std::string text;
  int line;  // 1-based
  int col;   // 1-based
};

// Whitespace-separated tokens with positions; '#' starts a comment that
// runs to end of line.
inline std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({line.substr(i, j - i), lineno, static_cast<int>(i + 1)});
      i = j;
    }
  }
  return out;
}

struct TokenCursor {
  const std::vector<Token>& toks;
  size_t pos = 0;
  int last_line = 1, last_col = 1;

  const Token& next(const char* what) {
    if (pos >= toks.size())
      throw ParseError(last_line, last_col, std::string("unexpected end of input, expected ") + what);
    const Token& t = toks[pos++];
    last_line = t.line;
    last_col = t.col;
    return t;
  }

  long next_integer(const char* what, long min_value) {
    const Token& t = next(what);
    const std::string& s = t.text;
    size_t k = (s.size() > 1 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (k == s.size()) throw ParseError(t.line, t.col, std::string("malformed ") + what);
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw ParseError(t.line, t.col, std::string("malformed ") + what + " '" + s + "'");
    long v;
    try {
      v = std::stol(s);
    } catch (const std::exception&) {
      throw ParseError(t.line, t.col, std::string("out-of-range ") + what + " '" + s + "'");
    }
    if (v < min_value)
      throw ParseError(t.line, t.col,
                       std::string(what) + " must be at least " + std::to_string(min_value));
    return v;
  }

  Rat next_rational(const char* what) {
    const Token& t = next(what);
    try {
      return parse_rational(t.text);
    } catch (const InvalidParams&) {
      throw ParseError(t.line, t.col, std::string("malformed ") + what + " '" + t.text + "'");
    }
  }
};

}  // namespace off_detail

// Parses OFF text: an "OFF" header token, vertex/face/edge counts, then
// vertex coordinate triples and face index cycles. Coordinates may be
// integers, fractions ("p/q") or decimals; all are read exactly. Throws
// ParseError (with line and column) on malformed input; geometric
// validation is separate (validate()).
inline Polyhedron parse_off(std::istream& in) {
  using namespace off_detail;
  std::vector<Token> toks = tokenize(in);
  TokenCursor cur{toks};

  const Token& header = cur.next("OFF header");
  if (header.text != "OFF")
    throw ParseError(header.line, header.col, "expected 'OFF' header, got '" + header.text + "'");

  long nv = cur.next_integer("vertex count", 0);
  long nf = cur.next_integer("face count", 0);
  cur.next_integer("edge count", 0);  // conventionally present, value unused

  Polyhedron P;
  P.vertices.reserve(static_cast<size_t>(nv));
  for (long i = 0; i < nv; ++i) {
    Rat x = cur.next_rational("x coordinate");
    Rat y = cur.next_rational("y coordinate");
    Rat z = cur.next_rational("z coordinate");
    P.vertices.push_back({std::move(x), std::move(y), std::move(z)});
  }
  P.faces.reserve(static_cast<size_t>(nf));
  for (long f = 0; f < nf; ++f) {
    long k = cur.next_integer("face vertex count", 3);
    std::vector<int> face;
    face.reserve(static_cast<size_t>(k));
    for (long i = 0; i < k; ++i) {
      long idx = cur.next_integer("face vertex index", 0);
      if (idx >= nv)
        throw ParseError(cur.last_line, cur.last_col,
                         "face vertex index " + std::to_string(idx) + " out of range (" +
                             std::to_string(nv) + " vertices)");
      face.push_back(static_cast<int>(idx));
    }
    P.faces.push_back(std::move(face));
  }
  if (cur.pos != toks.size()) {
    const Token& t = toks[cur.pos];
    throw ParseError(t.line, t.col, "unexpected trailing token '" + t.text + "'");
  }
  return P;
}

inline Polyhedron parse_off_string(const std::string& text) {
  std::istringstream in(text);
  return parse_off(in);
}

// Writes OFF text with exact rational coordinates ("p" or "p/q").
inline void write_off(std::ostream& out, const Polyhedron& P) {
  size_t edge_sum = 0;
  for (const auto& f : P.faces) edge_sum += f.size();
  out << "OFF\n";
  out << P.vertices.size() << " " << P.faces.size() << " " << edge_sum / 2 << "\n";
  for (const auto& v : P.vertices)
    out << rat_to_string(v.x) << " " << rat_to_string(v.y) << " " << rat_to_string(v.z) << "\n";
  for (const auto& f : P.faces) {
    out << f.size();
    for (int idx : f) out << " " << idx;
    out << "\n";
  }
}

inline std::string write_off_string(const Polyhedron& P) {
  std::ostringstream out;
  write_off(out, P);
  return out.str();
}

}  // namespace polytet

#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latgeo/polytope.hpp"

namespace latgeo {

/// Parses the plain-text polytope format: one vertex per line of
/// whitespace-separated integers, '#' comment lines ignored, a blank line
/// terminates each polytope. Returns every polytope in the stream.
[[nodiscard]] inline std::vector<Polytope> parse_polytopes_text(const std::string& text) {
  std::vector<Polytope> out;
  std::vector<Vec> current;
  int dim = -1;
  auto flush = [&]() {
    if (!current.empty()) {
      out.push_back(hull(current));
      current.clear();
      dim = -1;
    }
  };
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      flush();
      continue;
    }
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> coords;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        coords.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": non-integer coordinate '" + tok +
                         "'");
      }
    }
    int d = static_cast<int>(coords.size());
    if (d < 2 || d > kMaxDim)
      throw ParseError("line " + std::to_string(lineno) + ": vertex dimension " +
                       std::to_string(d) + " outside 2..5");
    if (dim < 0) dim = d;
    if (d != dim)
      throw ParseError("line " + std::to_string(lineno) + ": mixed vertex dimensions");
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = coords[i];
    current.push_back(v);
  }
  flush();
  if (out.empty()) throw ParseError("no vertices found");
  return out;
}

[[nodiscard]] inline Polytope parse_polytope_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw ParseError("polytope JSON needs {\"dim\": n, \"vertices\": [[..], ..]}");
  if (!j["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
  long long dim = j["dim"].get<long long>();
  if (dim < 2 || dim > kMaxDim) throw ParseError("\"dim\" outside 2..5");
  if (!j["vertices"].is_array() || j["vertices"].empty())
    throw ParseError("\"vertices\" must be a nonempty array");
  std::vector<Vec> pts;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || static_cast<long long>(row.size()) != dim)
      throw ParseError("vertex rows must have exactly \"dim\" entries");
    Vec v(static_cast<int>(dim));
    for (int i = 0; i < dim; ++i) {
      if (!row[i].is_number_integer()) throw ParseError("non-integer coordinate in vertex");
      v[i] = row[i].get<long long>();
    }
    pts.push_back(v);
  }
  return hull(std::move(pts));
}

/// Parses a polytope from either supported format, sniffing JSON by the
/// leading '{'. For multi-polytope text documents this returns the first.
[[nodiscard]] inline Polytope parse_polytope(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return parse_polytope_json(text);
    break;
  }
  return parse_polytopes_text(text).front();
}

[[nodiscard]] inline nlohmann::json polytope_to_json(const Polytope& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Vec& v : p.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < v.dim(); ++i) row.push_back(v[i].value());
    verts.push_back(row);
  }
  return {{"dim", p.ambient_dim()}, {"vertices", verts}};
}

[[nodiscard]] inline std::string polytope_to_text(const Polytope& p) {
  std::ostringstream out;
  for (const Vec& v : p.vertices()) {
    for (int i = 0; i < v.dim(); ++i) out << (i ? " " : "") << v[i].value();
    out << '\n';
  }
  out << '\n';
  return out.str();
}

}  // namespace latgeo

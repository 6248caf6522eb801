// JSON serialization for classifications, canonical forms, census records
// (JSON-lines), and search reports.  All machine formats carry "format": 1.
#pragma once

#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>

#include "latgeo/classify.hpp"
#include "latgeo/equivalence.hpp"
#include "latgeo/search.hpp"

namespace latgeo {

[[nodiscard]] inline nlohmann::json vec_to_json(const Vec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(v[i].value());
  return a;
}

[[nodiscard]] inline nlohmann::json vecs_to_json(const std::vector<Vec>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (const Vec& v : vs) a.push_back(vec_to_json(v));
  return a;
}

[[nodiscard]] inline nlohmann::json mat_to_json(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).value());
    rows.push_back(row);
  }
  return rows;
}

[[nodiscard]] inline nlohmann::json classification_to_json(const Classification& c) {
  nlohmann::json j;
  j["tag"] = to_string(c.tag);
  j["interior"] = c.interior_points;
  j["width"] = c.width.value();
  if (c.cayley) {
    j["witness"] = {{"kind", "cayley"},
                    {"direction", vec_to_json(c.cayley->direction)},
                    {"base_level", c.cayley->base_level.value()},
                    {"lower", vecs_to_json(c.cayley->lower)},
                    {"upper", vecs_to_json(c.cayley->upper)}};
  } else if (c.projection) {
    j["witness"] = {{"kind", "projection"},
                    {"map", mat_to_json(c.projection->map)},
                    {"image_vertices", vecs_to_json(c.projection->image_vertices)}};
  } else {
    j["witness"] = nullptr;
  }
  j["containers"] = c.containers;
  return j;
}

[[nodiscard]] inline nlohmann::json canonical_to_json(const CanonicalForm& f) {
  return {{"affine_dim", f.affine_dim},
          {"vertex_count", f.vertex_count},
          {"volume", f.volume.value()},
          {"total_points", f.total_points},
          {"relative_interior_points", f.relative_interior_points},
          {"facet_point_counts", f.facet_point_counts},
          {"matrix", mat_to_json(f.matrix)}};
}

/// One-line description of a class, used in REPORT details and logs.
[[nodiscard]] inline std::string canonical_to_text(const CanonicalForm& f) {
  std::ostringstream os;
  os << "dim=" << f.affine_dim << " verts=" << f.vertex_count << " vol=" << f.volume.value()
     << " points=" << f.total_points << " matrix=[";
  for (int i = 0; i < f.matrix.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < f.matrix.cols(); ++j) {
      if (j) os << " ";
      os << f.matrix.at(i, j).value();
    }
  }
  os << "]";
  return os.str();
}

[[nodiscard]] inline nlohmann::json census_record_to_json(const CensusRecord& r) {
  return {{"format", 1},
          {"canonical", canonical_to_json(r.form)},
          {"classification", classification_to_json(r.cls)},
          {"vertices", vecs_to_json(r.rep.vertices())},
          {"source", r.source}};
}

inline void write_census_jsonl(std::ostream& os, const std::vector<CensusRecord>& records) {
  for (const CensusRecord& r : records) os << census_record_to_json(r).dump() << "\n";
}

[[nodiscard]] inline nlohmann::json report_to_json(const SearchReport& rep) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : rep.parameters) params[k] = v;
  nlohmann::json j = {{"format", 1},
                      {"engine", rep.engine},
                      {"parameters", params},
                      {"tag_counts", rep.tag_counts},
                      {"class_count", rep.class_count},
                      {"max_volume", rep.max_volume.value()},
                      {"anomalies", rep.anomalies}};
  if (rep.max_apex_height >= 0) j["max_apex_height"] = rep.max_apex_height.value();
  return j;
}

}  // namespace latgeo

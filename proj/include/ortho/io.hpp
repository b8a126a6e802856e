#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ortho/chord_diagram.hpp"
#include "ortho/error.hpp"
#include "ortho/graph.hpp"

namespace ortho::io {

using nlohmann::json;

namespace detail {

inline std::size_t index_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer() || obj.at(key).get<long long>() < 0) {
    throw InvalidSpec(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return obj.at(key).get<std::size_t>();
}

inline double length_value(const json& value, const std::string& what) {
  if (!value.is_number()) throw InvalidSpec(what + " must be a number");
  const double x = value.get<double>();
  if (!std::isfinite(x) || !(x > 0.0)) throw InvalidSpec(what + " must be finite and positive");
  return x;
}

inline std::vector<double> length_array(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_array()) {
    throw InvalidSpec(std::string("field \"") + key + "\" must be an array");
  }
  std::vector<double> out;
  for (const json& v : obj.at(key)) out.push_back(length_value(v, std::string(key) + " entry"));
  return out;
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

// {"vertices": N, "edges": [{"u": int, "v": int, "length": float}, ...]}
inline GraphSpec graph_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidSpec("graph document must be a JSON object");
  GraphSpec spec;
  spec.vertex_count = detail::index_field(doc, "vertices");
  if (!doc.contains("edges") || !doc.at("edges").is_array()) {
    throw InvalidSpec("field \"edges\" must be an array");
  }
  for (const json& e : doc.at("edges")) {
    if (!e.is_object()) throw InvalidSpec("edge entries must be objects");
    if (!e.contains("length")) throw InvalidSpec("edge is missing \"length\"");
    spec.edges.push_back({detail::index_field(e, "u"), detail::index_field(e, "v"),
                          detail::length_value(e.at("length"), "edge length")});
  }
  validate(spec);
  return spec;
}

inline json graph_to_json(const GraphSpec& spec) {
  json edges = json::array();
  for (const Edge& e : spec.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"length", e.length}});
  return {{"vertices", spec.vertex_count}, {"edges", edges}};
}

// {"n": int, "arcs": [...], "matching": [[i, j], ...], "chords": [...]}
inline ChordDiagram diagram_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidSpec("chord diagram document must be a JSON object");
  ChordDiagram cd;
  cd.n = detail::index_field(doc, "n");
  cd.arcs = detail::length_array(doc, "arcs");
  cd.chords = detail::length_array(doc, "chords");
  if (!doc.contains("matching") || !doc.at("matching").is_array()) {
    throw InvalidSpec("field \"matching\" must be an array");
  }
  for (const json& pair : doc.at("matching")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer() || pair[0].get<long long>() < 0 ||
        pair[1].get<long long>() < 0) {
      throw InvalidSpec("matching entries must be pairs of nonnegative integers");
    }
    cd.matching.emplace_back(pair[0].get<std::size_t>(), pair[1].get<std::size_t>());
  }
  validate(cd);
  return cd;
}

inline json diagram_to_json(const ChordDiagram& cd) {
  json matching = json::array();
  for (const auto& [i, j] : cd.matching) matching.push_back({i, j});
  return {{"n", cd.n}, {"arcs", cd.arcs}, {"matching", matching}, {"chords", cd.chords}};
}

inline bool looks_like_diagram(const json& doc) {
  return doc.is_object() && doc.contains("matching");
}

// Reads a file, or takes `source` itself as JSON when it starts with '{'.
inline json load(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return detail::parse_text(source);
  std::ifstream in(source);
  if (!in) throw InvalidSpec("cannot open " + source);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return detail::parse_text(buffer.str());
}

}  // namespace ortho::io

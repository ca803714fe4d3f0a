#include "gasket/io.hpp"

#include <fstream>

namespace gasket {

json structure_to_json(const CellStructure& s) {
  json cells = json::array();
  for (const auto& cell : s.cells) cells.push_back(cell);
  json out{{"name", s.name},
           {"k", s.boundary_size},
           {"vertex_count", s.vertex_count},
           {"boundary", s.boundary_vertices},
           {"cells", cells}};
  if (s.coords) {
    json coords = json::array();
    for (const auto& p : *s.coords) coords.push_back(json::array({p.a, p.b}));
    out["coords"] = coords;
  }
  return out;
}

CellStructure structure_from_json(const json& j) {
  if (!j.is_object())
    throw malformed_input("structure_from_json: expected an object");
  for (const char* field : {"name", "k", "vertex_count", "boundary", "cells"})
    if (!j.contains(field))
      throw malformed_input(std::string("structure_from_json: missing field '") +
                            field + "'");

  CellStructure s;
  try {
    s.name = j.at("name").get<std::string>();
    s.boundary_size = j.at("k").get<int>();
    s.vertex_count = j.at("vertex_count").get<int>();
    s.boundary_vertices = j.at("boundary").get<std::vector<int>>();
    for (const auto& cell : j.at("cells"))
      s.cells.push_back(cell.get<std::vector<int>>());
    if (j.contains("coords")) {
      std::vector<LatticePoint> coords;
      for (const auto& c : j.at("coords")) {
        if (!c.is_array() || c.size() != 2)
          throw malformed_input("structure_from_json: coords entries must be [a, b]");
        coords.push_back(LatticePoint{c[0].get<int>(), c[1].get<int>()});
      }
      s.coords = std::move(coords);
    }
  } catch (const json::exception& e) {
    throw malformed_input(std::string("structure_from_json: ") + e.what());
  }
  validate_structure(s);
  return s;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw malformed_input("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw malformed_input("cannot parse JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw malformed_input("cannot open file for writing: " + path);
  out << content;
}

}  // namespace gasket

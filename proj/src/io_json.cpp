#include "fsdraw/io_json.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fsdraw {

std::string format_g12(double v) {
  if (v == 0.0) v = 0.0;  // flush -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Document parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }

  Document doc;
  try {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
      throw InputError("malformed document: expected object with \"vertices\" and \"edges\"");

    for (const auto& jv : j.at("vertices")) {
      DocVertex v;
      v.id = jv.at("id").get<long long>();
      v.x = jv.at("x").get<double>();
      v.y = jv.at("y").get<double>();
      if (!std::isfinite(v.x) || !std::isfinite(v.y))
        throw InputError("malformed document: non-finite coordinate");
      doc.vertices.push_back(v);
    }
    for (const auto& je : j.at("edges")) {
      if (!je.is_array() || je.size() != 2)
        throw InputError("malformed document: edge must be a pair of vertex ids");
      doc.edges.emplace_back(je.at(0).get<long long>(), je.at(1).get<long long>());
    }
    if (j.contains("zones") && !j.at("zones").is_null()) {
      std::vector<std::vector<int>> zones;
      for (const auto& jz : j.at("zones")) {
        std::vector<int> z;
        for (const auto& ji : jz) z.push_back(ji.get<int>());
        zones.push_back(std::move(z));
      }
      doc.zones = std::move(zones);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  return doc;
}

std::string emit_document(const Document& doc) {
  std::ostringstream os;
  os << "{\n  \"vertices\": [";
  for (size_t i = 0; i < doc.vertices.size(); ++i) {
    const auto& v = doc.vertices[i];
    os << (i ? ",\n    " : "\n    ") << "{\"id\": " << v.id << ", \"x\": " << format_g12(v.x)
       << ", \"y\": " << format_g12(v.y) << "}";
  }
  os << "\n  ],\n  \"edges\": [";
  for (size_t i = 0; i < doc.edges.size(); ++i) {
    os << (i ? ", " : "") << "[" << doc.edges[i].first << ", " << doc.edges[i].second << "]";
  }
  os << "]";
  if (doc.zones) {
    os << ",\n  \"zones\": [";
    for (size_t i = 0; i < doc.zones->size(); ++i) {
      os << (i ? ", " : "") << "[";
      const auto& z = (*doc.zones)[i];
      for (size_t k = 0; k < z.size(); ++k) os << (k ? ", " : "") << z[k];
      os << "]";
    }
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

Document document_from_drawing(const Drawing& d, const Zones& z) {
  Document doc;
  for (int v = 0; v < d.vertex_count(); ++v)
    doc.vertices.push_back({d.ids[v], d.pos[v].x, d.pos[v].y});
  for (const auto& e : d.edges) doc.edges.emplace_back(d.ids[e.first], d.ids[e.second]);
  std::vector<std::vector<int>> zones = z.members;
  for (auto& m : zones) std::sort(m.begin(), m.end());
  std::sort(zones.begin(), zones.end());
  doc.zones = std::move(zones);
  return doc;
}

}  // namespace fsdraw

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsdraw/drawing.hpp"

namespace fsdraw {

struct DocVertex {
  long long id = 0;
  double x = 0;
  double y = 0;
};

// On-disk drawing document.  Edges reference vertex ids, zones reference
// edge indices.
struct Document {
  std::vector<DocVertex> vertices;
  std::vector<std::pair<long long, long long>> edges;
  std::optional<std::vector<std::vector<int>>> zones;
};

Document parse_document(const std::string& text);
std::string emit_document(const Document& doc);

Document document_from_drawing(const Drawing& d, const Zones& z);

// Fixed 12-significant-digit float formatting used by every emitter.
std::string format_g12(double v);

}  // namespace fsdraw

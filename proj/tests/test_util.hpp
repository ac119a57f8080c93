#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fsdraw/aux_graph.hpp"
#include "fsdraw/fixtures.hpp"
#include "fsdraw/ingest.hpp"
#include "fsdraw/io_json.hpp"

namespace fsdraw::test {

inline Document square_doc() { return gen_polygon(2); }

// Rhombus with unit sides and zone directions 0 and delta.
inline Document rhombus_doc(double delta) {
  Document doc;
  double c = std::cos(delta), s = std::sin(delta);
  doc.vertices = {{0, 0, 0}, {1, 1, 0}, {2, 1 + c, s}, {3, c, s}};
  doc.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return doc;
}

inline Document star3_doc() {
  Document doc;
  doc.vertices = {{0, 0, 0},
                  {1, 1, 0},
                  {2, std::cos(2 * kPi / 3), std::sin(2 * kPi / 3)},
                  {3, std::cos(4 * kPi / 3), std::sin(4 * kPi / 3)}};
  doc.edges = {{0, 1}, {0, 2}, {0, 3}};
  return doc;
}

struct NamedFixture {
  std::string name;
  Document doc;
};

// Compact zoo of valid drawings across all the generator families.
inline std::vector<NamedFixture> fixture_zoo() {
  std::vector<NamedFixture> zoo;
  auto add = [&](std::string name, Document doc) { zoo.push_back({std::move(name), std::move(doc)}); };
  for (int k = 2; k <= 8; ++k) add("polygon" + std::to_string(k), gen_polygon(k));
  add("polygon4-skew", gen_polygon(4, {.skew = kPi / 6}));
  add("polygon6-jitter", gen_polygon(6, {.skew = 0.2, .seed = 7}));
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) add("grid" + std::to_string(m) + "x" + std::to_string(n), gen_grid(m, n));
  add("grid3x2-skew", gen_grid(3, 2, {.skew = kPi / 6}));
  add("grid2x2-jitter", gen_grid(2, 2, {.skew = 0.3, .seed = 11}));
  for (int k = 2; k <= 7; ++k) add("fan" + std::to_string(k), gen_fan(k));
  add("fan5-skew", gen_fan(5, {.skew = kPi / 7, .seed = 3}));
  for (int k = 3; k <= 6; ++k) add("star" + std::to_string(k), gen_star(k));
  add("star5-jitter", gen_star(5, {.skew = 0.1, .seed = 5}));
  add("comb4", gen_comb(4));
  add("comb8", gen_comb(8));
  add("rhombus30", rhombus_doc(kPi / 6));
  return zoo;
}

// All simple cycles (repeated vertices only at the closing point) of a
// deduplicated constraint graph; used to enumerate cycle ratios.
inline void for_each_simple_cycle(const AuxGraph& g,
                                  const std::function<void(const std::vector<int>&)>& fn) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out(n);
  for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei) out[g.edges[ei].tail].push_back(ei);

  std::vector<int> path;
  std::vector<char> visited(n, 0);
  std::function<void(int, int)> dfs = [&](int root, int v) {
    for (int ei : out[v]) {
      int w = g.edges[ei].head;
      if (w == root) {
        path.push_back(ei);
        fn(path);
        path.pop_back();
        continue;
      }
      if (w < root || visited[w] || w == g.source()) continue;
      visited[w] = 1;
      path.push_back(ei);
      dfs(root, w);
      path.pop_back();
      visited[w] = 0;
    }
  };
  for (int root = 0; root < n; ++root) {
    if (root == g.source()) continue;
    dfs(root, root);
  }
}

// Minimum ratio sum_b / sum_m over simple cycles with sum_m > 0.
inline double min_cycle_ratio(const AuxGraph& g) {
  double best = std::numeric_limits<double>::infinity();
  for_each_simple_cycle(g, [&](const std::vector<int>& cyc) {
    double sum_b = 0;
    int sum_m = 0;
    for (int ei : cyc) {
      sum_b += g.edges[ei].b;
      sum_m += g.edges[ei].m;
    }
    if (sum_m > 0) best = std::min(best, sum_b / sum_m);
  });
  return best;
}

}  // namespace fsdraw::test

#include "fsdraw/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "fsdraw/geometry.hpp"

namespace fsdraw {

namespace {

std::vector<double> zone_lengths(int count, const GenOptions& opt) {
  std::vector<double> len(count, 1.0);
  if (opt.seed) {
    std::mt19937_64 rng(*opt.seed);
    std::uniform_real_distribution<double> dist(0.8, 1.25);
    for (double& l : len) l = dist(rng);
  }
  return len;
}

void apply_skew(Document& doc, double skew) {
  if (skew == 0.0) return;
  double s = std::tan(skew);
  for (auto& v : doc.vertices) v.x += s * v.y;
}

void require(bool ok, const char* msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

Document gen_polygon(int k, const GenOptions& opt) {
  require(k >= 2, "polygon generator needs k >= 2");
  auto len = zone_lengths(k, opt);

  Document doc;
  Vec2 p{0, 0};
  for (int j = 0; j < 2 * k; ++j) {
    doc.vertices.push_back({j, p.x, p.y});
    p = p + unit_vec(j * kPi / k) * len[j % k];
    doc.edges.emplace_back(j, (j + 1) % (2 * k));
  }
  std::vector<std::vector<int>> zones;
  for (int i = 0; i < k; ++i) zones.push_back({i, i + k});
  doc.zones = std::move(zones);
  apply_skew(doc, opt.skew);
  return doc;
}

Document gen_grid(int m, int n, const GenOptions& opt) {
  require(m >= 1 && n >= 1, "grid generator needs m, n >= 1");
  auto len = zone_lengths(m + n, opt);  // m column widths then n row heights

  std::vector<double> xs(m + 1, 0), ys(n + 1, 0);
  for (int i = 0; i < m; ++i) xs[i + 1] = xs[i] + len[i];
  for (int j = 0; j < n; ++j) ys[j + 1] = ys[j] + len[m + j];

  Document doc;
  auto vid = [&](int i, int j) { return static_cast<long long>(j) * (m + 1) + i; };
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= m; ++i) doc.vertices.push_back({vid(i, j), xs[i], ys[j]});

  std::vector<std::vector<int>> zones(m + n);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i < m; ++i) {
      zones[i].push_back(static_cast<int>(doc.edges.size()));
      doc.edges.emplace_back(vid(i, j), vid(i + 1, j));
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= m; ++i) {
      zones[m + j].push_back(static_cast<int>(doc.edges.size()));
      doc.edges.emplace_back(vid(i, j), vid(i, j + 1));
    }
  }
  doc.zones = std::move(zones);
  apply_skew(doc, opt.skew);
  return doc;
}

Document gen_fan(int k, const GenOptions& opt) {
  require(k >= 2, "fan generator needs k >= 2");
  auto len = zone_lengths(k + 1, opt);
  const double step = (k - 1) * kPi / (static_cast<double>(k) * k);

  Document doc;
  doc.vertices.push_back({0, 0, 0});
  auto spoke_tip = [&](int i) { return unit_vec(i * step) * len[i]; };
  for (int i = 0; i <= k; ++i) {
    Vec2 a = spoke_tip(i);
    doc.vertices.push_back({1 + i, a.x, a.y});
  }
  for (int i = 0; i < k; ++i) {
    Vec2 b = spoke_tip(i) + spoke_tip(i + 1);
    doc.vertices.push_back({2 + k + i, b.x, b.y});
  }

  std::vector<std::vector<int>> zones(k + 1);
  for (int i = 0; i <= k; ++i) {
    zones[i].push_back(static_cast<int>(doc.edges.size()));
    doc.edges.emplace_back(0, 1 + i);
  }
  for (int i = 0; i < k; ++i) {
    zones[i + 1].push_back(static_cast<int>(doc.edges.size()));
    doc.edges.emplace_back(1 + i, 2 + k + i);  // parallel to spoke i+1
    zones[i].push_back(static_cast<int>(doc.edges.size()));
    doc.edges.emplace_back(2 + k + i, 1 + i + 1);  // parallel to spoke i
  }
  doc.zones = std::move(zones);
  apply_skew(doc, opt.skew);
  return doc;
}

Document gen_star(int k, const GenOptions& opt) {
  require(k >= 2, "star generator needs k >= 2");
  auto len = zone_lengths(k, opt);

  Document doc;
  doc.vertices.push_back({0, 0, 0});
  std::vector<std::vector<int>> zones(k);
  for (int i = 0; i < k; ++i) {
    Vec2 p = unit_vec(kTwoPi * i / k) * len[i];
    doc.vertices.push_back({1 + i, p.x, p.y});
    zones[i].push_back(static_cast<int>(doc.edges.size()));
    doc.edges.emplace_back(0, 1 + i);
  }
  doc.zones = std::move(zones);
  apply_skew(doc, opt.skew);
  return doc;
}

Document gen_comb(int k, const GenOptions& opt) {
  require(k >= 2, "comb generator needs k >= 2");
  auto len = zone_lengths(2 * k - 1, opt);  // k-1 spine lengths then k tooth lengths

  Document doc;
  std::vector<std::vector<int>> zones(2 * k - 1);
  double x = 0;
  for (int i = 0; i < k; ++i) {
    doc.vertices.push_back({i, x, 0});
    doc.vertices.push_back({k + i, x, len[k - 1 + i]});
    if (i + 1 < k) x += len[i];
  }
  for (int i = 0; i + 1 < k; ++i) {
    zones[i].push_back(static_cast<int>(doc.edges.size()));
    doc.edges.emplace_back(i, i + 1);
  }
  for (int i = 0; i < k; ++i) {
    zones[k - 1 + i].push_back(static_cast<int>(doc.edges.size()));
    doc.edges.emplace_back(i, k + i);
  }
  doc.zones = std::move(zones);
  apply_skew(doc, opt.skew);
  return doc;
}

std::vector<double> arrangement_init(const std::vector<std::string>& ends) {
  require(!ends.empty() && ends.size() % 2 == 0, "arrangement needs an even number of ends");
  const int two_t = static_cast<int>(ends.size());

  std::map<std::string, std::vector<int>> where;
  std::vector<std::string> order;
  for (int j = 0; j < two_t; ++j) {
    if (!where.count(ends[j])) order.push_back(ends[j]);
    where[ends[j]].push_back(j);
  }
  for (const auto& [label, at] : where) {
    if (at.size() != 2) {
      std::ostringstream os;
      os << "pseudoline end " << label << " appears " << at.size() << " times, expected 2";
      throw InputError(os.str());
    }
  }

  std::vector<double> dirs;
  for (const auto& label : order) {
    const auto& at = where[label];
    Vec2 diff = unit_vec(kTwoPi * at[1] / two_t) - unit_vec(kTwoPi * at[0] / two_t);
    dirs.push_back(wrap_pi(std::atan2(diff.y, diff.x)));
  }
  return dirs;
}

}  // namespace fsdraw

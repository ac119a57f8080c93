#include "fsdraw/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fsdraw {

const char* solver_name(SolverKind k) { return k == SolverKind::bisect ? "bisect" : "exact"; }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Follow predecessor edges from `start`; a revisited vertex closes a
// cycle.  Only genuinely negative cycles are accepted.
std::optional<CycleWitness> try_extract(const AuxGraph& g, const std::vector<int>& pred,
                                        int start, double lambda) {
  std::vector<int> stamp(g.vertex_count(), -1);
  int cur = start;
  int step = 0;
  while (cur != g.source() && pred[cur] >= 0) {
    if (stamp[cur] >= 0) {
      CycleWitness w;
      int x = cur;
      do {
        int e = pred[x];
        w.edge_indices.push_back(e);
        w.sum_b += g.edges[e].b;
        w.sum_m += g.edges[e].m;
        x = g.edges[e].tail;
      } while (x != cur);
      std::reverse(w.edge_indices.begin(), w.edge_indices.end());
      for (int e : w.edge_indices) w.vertices.push_back(g.edges[e].tail);
      w.vertices.push_back(cur);
      if (w.weight_at(lambda) < -1e-12) return w;
      return std::nullopt;
    }
    stamp[cur] = step++;
    cur = g.edges[pred[cur]].tail;
  }
  return std::nullopt;
}

}  // namespace

BellmanFordResult bellman_ford(const AuxGraph& g, double lambda, double eps_feas) {
  const int n = g.vertex_count();
  // Relaxations below this threshold are rounding noise; admitting them
  // would let zero-weight cycles into the predecessor graph and trap the
  // witness walk.
  constexpr double kDeltaRelax = 1e-11;

  BellmanFordResult res;
  res.dist.assign(n, kInf);
  res.dist[g.source()] = 0;
  std::vector<int> pred(n, -1);

  auto sweep = [&](double threshold, std::vector<int>* improved) {
    bool changed = false;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
      const AuxEdge& e = g.edges[ei];
      double base = res.dist[e.tail];
      if (base == kInf) continue;
      double cand = base + edge_weight(e, lambda);
      if (cand < res.dist[e.head] - threshold) {
        res.dist[e.head] = cand;
        pred[e.head] = static_cast<int>(ei);
        changed = true;
        if (improved) improved->push_back(e.head);
      }
    }
    return changed;
  };

  bool changed = true;
  int round = 0;
  for (; round < n - 1 && changed; ++round) changed = sweep(kDeltaRelax, nullptr);
  res.rounds = round;
  if (!changed) return res;  // converged early: no negative cycle

  bool detected = false;
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const AuxEdge& e = g.edges[ei];
    if (res.dist[e.tail] == kInf) continue;
    double cand = res.dist[e.tail] + edge_weight(e, lambda);
    if (cand < res.dist[e.head] - eps_feas) {
      detected = true;
      res.dist[e.head] = cand;
      pred[e.head] = static_cast<int>(ei);
      if (auto w = try_extract(g, pred, e.head, lambda)) {
        res.negative_cycle = true;
        res.witness = std::move(w);
        return res;
      }
    }
  }
  if (!detected) return res;

  // The improving chains have not wrapped the cycle yet; keep relaxing
  // until a predecessor walk closes.
  res.negative_cycle = true;
  for (int hunt = 0; hunt < 3 * n; ++hunt) {
    std::vector<int> improved;
    if (!sweep(kDeltaRelax, &improved)) {
      res.negative_cycle = false;  // fixpoint after all: threshold noise
      return res;
    }
    int attempts = 0;
    for (int h : improved) {
      if (attempts++ > 16) break;
      if (auto w = try_extract(g, pred, h, lambda)) {
        res.witness = std::move(w);
        return res;
      }
    }
  }
  return res;  // negative cycle detected but not extracted
}

namespace {

[[noreturn]] void throw_infeasible() {
  throw InputError("input drawing violates its own constraints");
}

}  // namespace

Solution solve_bisect(const AuxGraph& g, double tol, int max_iter) {
  Solution s;
  s.solver = SolverKind::bisect;

  double lo = g.lambda_lo;
  BellmanFordResult at_lo = bellman_ford(g, lo);
  ++s.iterations;
  if (!at_lo.feasible()) throw_infeasible();

  double hi = kTwoPi;
  BellmanFordResult at_hi = bellman_ford(g, hi);
  ++s.iterations;
  if (at_hi.feasible()) {
    s.lambda_star = hi;
    s.d.assign(at_hi.dist.begin(), at_hi.dist.begin() + g.zones);
  } else {
    std::vector<double> best = std::move(at_lo.dist);
    while (hi - lo > tol && s.iterations < max_iter) {
      double mid = 0.5 * (lo + hi);
      BellmanFordResult r = bellman_ford(g, mid);
      ++s.iterations;
      if (r.feasible()) {
        lo = mid;
        best = std::move(r.dist);
      } else {
        hi = mid;
      }
    }
    s.lambda_star = lo;
    s.d.assign(best.begin(), best.begin() + g.zones);
  }
  s.feasible_at = s.lambda_star;
  s.infeasible_at = s.lambda_star + std::max(10 * tol, 1e-6);
  return s;
}

Solution solve_exact(const AuxGraph& g) {
  Solution s;
  s.solver = SolverKind::exact;

  double lambda = kTwoPi;
  const int cap = 16 * g.vertex_count() + 1024;
  while (true) {
    if (s.iterations++ > cap)
      throw std::logic_error("minimum-ratio iteration failed to converge");
    BellmanFordResult r = bellman_ford(g, lambda);
    if (r.feasible()) {
      s.lambda_star = lambda;
      s.d.assign(r.dist.begin(), r.dist.begin() + g.zones);
      break;
    }
    if (!r.witness) throw std::logic_error("negative cycle detected but not extracted");
    const CycleWitness& w = *r.witness;
    if (w.sum_m == 0) throw_infeasible();
    double ratio = w.ratio();
    if (!(ratio < lambda)) throw std::logic_error("cycle ratio failed to decrease");
    lambda = ratio;
    if (lambda < 0) throw_infeasible();
  }
  s.feasible_at = s.lambda_star;
  s.infeasible_at = s.lambda_star + 1e-6;
  return s;
}

CertifyReport certify(const AuxGraph& g, const Solution& s, double eps_feas) {
  CertifyReport rep;
  auto dist = [&](int v) { return v == g.source() ? 0.0 : s.d[v]; };

  rep.worst_slack = kInf;
  for (const AuxEdge& e : g.edges) {
    double slack = dist(e.tail) + edge_weight(e, s.lambda_star) - dist(e.head);
    rep.worst_slack = std::min(rep.worst_slack, slack);
  }
  rep.lemma_ok = rep.worst_slack >= -eps_feas;

  rep.probe_lambda = s.infeasible_at;
  BellmanFordResult probe = bellman_ford(g, rep.probe_lambda, eps_feas);
  rep.maximality_ok = !probe.feasible();
  rep.probe_witness = std::move(probe.witness);
  return rep;
}

}  // namespace fsdraw

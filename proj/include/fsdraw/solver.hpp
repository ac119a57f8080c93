#pragma once

#include <optional>
#include <vector>

#include "fsdraw/aux_graph.hpp"

namespace fsdraw {

inline constexpr double kEpsFeas = 1e-9;

// Cycle with total weight sum_b - lambda * sum_m.
struct CycleWitness {
  std::vector<int> vertices;
  std::vector<int> edge_indices;
  double sum_b = 0;
  int sum_m = 0;
  double ratio() const { return sum_b / sum_m; }
  double weight_at(double lambda) const { return sum_b - lambda * sum_m; }
};

struct BellmanFordResult {
  std::optional<CycleWitness> witness;
  bool negative_cycle = false;  // true whenever a witness exists
  std::vector<double> dist;     // valid when feasible
  int rounds = 0;
  bool feasible() const { return !negative_cycle; }
};

// Shortest paths from the source at a fixed lambda; on a negative cycle,
// a witness extracted by predecessor walking is returned instead.
BellmanFordResult bellman_ford(const AuxGraph& g, double lambda, double eps_feas = kEpsFeas);

enum class SolverKind { bisect, exact };

const char* solver_name(SolverKind k);

struct Solution {
  double lambda_star = 0;
  std::vector<double> d;  // per zone vertex, d <= 0
  SolverKind solver = SolverKind::bisect;
  int iterations = 0;
  double feasible_at = 0;
  double infeasible_at = 0;
};

// Binary search for the largest feasible lambda, starting from the
// measured input resolution.
Solution solve_bisect(const AuxGraph& g, double tol = 1e-9, int max_iter = 64);

// Minimum-ratio iteration: repeatedly pin lambda to the ratio of the
// current negative cycle until none remains.
Solution solve_exact(const AuxGraph& g);

struct CertifyReport {
  bool lemma_ok = false;        // every edge satisfies d(head) <= d(tail) + w
  double worst_slack = 0;       // most negative constraint slack
  bool maximality_ok = false;   // negative cycle just above lambda_star
  double probe_lambda = 0;
  std::optional<CycleWitness> probe_witness;
  bool ok() const { return lemma_ok && maximality_ok; }
};

CertifyReport certify(const AuxGraph& g, const Solution& s, double eps_feas = kEpsFeas);

}  // namespace fsdraw

#pragma once

#include <optional>
#include <string>

#include "fsdraw/aux_graph.hpp"
#include "fsdraw/drawing.hpp"

namespace fsdraw {

// Minimum angle between consecutive incident edges over all vertices of
// degree >= 2; absent when no such vertex exists.  Requires a derived
// rotation system.
std::optional<double> measure_resolution(const Drawing& d);

struct CheckEntry {
  bool pass = true;
  bool asserted = true;  // failures gate the run only when asserted
  double worst = 0;
  std::string detail;
};

struct VerifyReport {
  Mode mode = Mode::safe;
  std::optional<double> resolution;
  CheckEntry central_symmetry;
  CheckEntry interior_convexity;
  CheckEntry winding_range;
  CheckEntry planarity;
  CheckEntry rotation_preservation;

  bool all_pass() const {
    auto gate = [](const CheckEntry& c) { return !c.asserted || c.pass; };
    return gate(central_symmetry) && gate(interior_convexity) && gate(winding_range) &&
           gate(planarity) && gate(rotation_preservation);
  }
};

// Re-derive the embedding of `out` and check every output-validity
// property against the ingested input.  In unsafe mode the winding and
// planarity outcomes are reported but not asserted.
VerifyReport check_drawing(const Drawing& out, const Ingested& ref, Mode mode,
                           const Config& cfg = {});

// Independent reference for the critical parameter: bisection over
// Floyd-Warshall all-pairs relaxation with negative-diagonal detection.
double oracle_lambda(const AuxGraph& g, double tol = 1e-10);

}  // namespace fsdraw

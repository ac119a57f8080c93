#pragma once

#include <string>

#include "fsdraw/aux_graph.hpp"
#include "fsdraw/drawing.hpp"
#include "fsdraw/io_json.hpp"
#include "fsdraw/layout.hpp"
#include "fsdraw/solver.hpp"
#include "fsdraw/verify.hpp"

namespace fsdraw {

struct OptimizeOptions {
  Mode mode = Mode::safe;
  SolverKind solver = SolverKind::bisect;
  double tol = 1e-9;
  int max_iter = 64;
  LengthPolicy lengths;
  Config cfg;
};

struct OptimizeOutcome {
  Ingested input;
  AuxGraph aux;
  Solution sol;
  CertifyReport cert;
  Drawing out;
  VerifyReport report;

  bool ok() const { return cert.ok() && report.all_pass(); }
};

// ingest -> aux graph -> solve -> certify -> layout -> verify.
// Certificate failures raise CertificateError.
OptimizeOutcome run_optimize(const Document& doc, const OptimizeOptions& opt);

std::string emit_result_json(const OptimizeOutcome& oc, const OptimizeOptions& opt);
std::string emit_compare_json(const OptimizeOutcome& safe_oc, const OptimizeOutcome& unsafe_oc,
                              const OptimizeOptions& opt);
std::string emit_report_json(const VerifyReport& rep);

}  // namespace fsdraw

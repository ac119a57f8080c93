#include "fsdraw/pipeline.hpp"

#include <sstream>

#include "fsdraw/ingest.hpp"

namespace fsdraw {

OptimizeOutcome run_optimize(const Document& doc, const OptimizeOptions& opt) {
  OptimizeOutcome oc;
  oc.input = ingest(doc, opt.cfg);
  oc.aux = build_aux_graph(oc.input, opt.mode);
  oc.sol = opt.solver == SolverKind::bisect ? solve_bisect(oc.aux, opt.tol, opt.max_iter)
                                            : solve_exact(oc.aux);
  oc.cert = certify(oc.aux, oc.sol);
  if (!oc.cert.ok()) {
    std::ostringstream os;
    os << "optimality certificate failed:"
       << (oc.cert.lemma_ok ? "" : " constraint inequality violated")
       << (oc.cert.maximality_ok ? "" : " no negative cycle above lambda*");
    throw CertificateError(os.str());
  }
  ZoneVectorSet zv = apply_rotations(oc.input.zones, oc.sol.d, opt.lengths);
  oc.out = place_vertices(oc.input.drawing, oc.input.zones, zv);
  oc.report = check_drawing(oc.out, oc.input, opt.mode, opt.cfg);
  return oc;
}

namespace {

void emit_check_entry(std::ostringstream& os, const char* key, const CheckEntry& c,
                      bool last = false) {
  os << "    \"" << key << "\": {\"pass\": " << (c.pass ? "true" : "false")
     << ", \"asserted\": " << (c.asserted ? "true" : "false")
     << ", \"worst\": " << format_g12(c.worst);
  if (!c.detail.empty()) os << ", \"detail\": \"" << c.detail << "\"";
  os << "}" << (last ? "" : ",") << "\n";
}

void emit_checks(std::ostringstream& os, const VerifyReport& rep) {
  os << "{\n";
  emit_check_entry(os, "central_symmetry", rep.central_symmetry);
  emit_check_entry(os, "interior_convexity", rep.interior_convexity);
  emit_check_entry(os, "winding_range", rep.winding_range);
  emit_check_entry(os, "planarity", rep.planarity);
  emit_check_entry(os, "rotation_preservation", rep.rotation_preservation, true);
  os << "  }";
}

std::string indent_block(const std::string& text, const std::string& pad) {
  std::string out;
  for (char ch : text) {
    out += ch;
    if (ch == '\n') out += pad;
  }
  return out;
}

std::string result_body(const OptimizeOutcome& oc, const OptimizeOptions& opt) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"lambda_star\": " << format_g12(oc.sol.lambda_star) << ",\n";
  os << "  \"mode\": \"" << mode_name(opt.mode) << "\",\n";
  os << "  \"solver\": \"" << solver_name(oc.sol.solver) << "\",\n";
  os << "  \"iterations\": " << oc.sol.iterations << ",\n";
  os << "  \"resolution_in\": "
     << (oc.input.resolution ? format_g12(*oc.input.resolution) : "null") << ",\n";
  os << "  \"resolution_out\": "
     << (oc.report.resolution ? format_g12(*oc.report.resolution) : "null") << ",\n";
  os << "  \"zone_rotations\": {";
  for (size_t i = 0; i < oc.sol.d.size(); ++i)
    os << (i ? ", " : "") << "\"" << i << "\": " << format_g12(oc.sol.d[i]);
  os << "},\n";
  os << "  \"certificate\": {\"feasible_at\": " << format_g12(oc.sol.feasible_at)
     << ", \"infeasible_at\": " << format_g12(oc.sol.infeasible_at)
     << ", \"worst_slack\": " << format_g12(oc.cert.worst_slack) << "},\n";
  os << "  \"checks\": ";
  emit_checks(os, oc.report);
  os << ",\n";
  std::string drawing = emit_document(document_from_drawing(oc.out, oc.input.zones));
  while (!drawing.empty() && drawing.back() == '\n') drawing.pop_back();
  os << "  \"drawing\": " << indent_block(drawing, "  ") << "\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string emit_result_json(const OptimizeOutcome& oc, const OptimizeOptions& opt) {
  return result_body(oc, opt);
}

std::string emit_compare_json(const OptimizeOutcome& safe_oc, const OptimizeOutcome& unsafe_oc,
                              const OptimizeOptions& opt) {
  OptimizeOptions safe_opt = opt;
  safe_opt.mode = Mode::safe;
  OptimizeOptions unsafe_opt = opt;
  unsafe_opt.mode = Mode::unsafe;

  std::ostringstream os;
  os << "{\n";
  os << "  \"mode\": \"compare\",\n";
  os << "  \"lambda_star_safe\": " << format_g12(safe_oc.sol.lambda_star) << ",\n";
  os << "  \"lambda_star_unsafe\": " << format_g12(unsafe_oc.sol.lambda_star) << ",\n";
  std::string s = result_body(safe_oc, safe_opt);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::string u = result_body(unsafe_oc, unsafe_opt);
  while (!u.empty() && u.back() == '\n') u.pop_back();
  os << "  \"safe\": " << indent_block(s, "  ") << ",\n";
  os << "  \"unsafe\": " << indent_block(u, "  ") << "\n";
  os << "}\n";
  return os.str();
}

std::string emit_report_json(const VerifyReport& rep) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"mode\": \"" << mode_name(rep.mode) << "\",\n";
  os << "  \"resolution\": " << (rep.resolution ? format_g12(*rep.resolution) : "null") << ",\n";
  os << "  \"checks\": ";
  emit_checks(os, rep);
  os << "\n}\n";
  return os.str();
}

}  // namespace fsdraw

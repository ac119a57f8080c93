#include "fsdraw/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fsdraw/fixtures.hpp"
#include "fsdraw/ingest.hpp"
#include "fsdraw/pipeline.hpp"
#include "fsdraw/svg.hpp"

namespace fsdraw::cli {

namespace {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level() {
  const char* v = std::getenv("FSDRAW_LOG");
  if (!v) return LogLevel::info;
  std::string s = v;
  if (s == "quiet") return LogLevel::quiet;
  if (s == "debug") return LogLevel::debug;
  return LogLevel::info;
}

bool log_at_least(LogLevel lvl) { return static_cast<int>(log_level()) >= static_cast<int>(lvl); }

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

LengthPolicy parse_lengths(const std::string& arg) {
  LengthPolicy p;
  if (arg == "unit") {
    p.kind = LengthPolicy::Kind::unit;
  } else if (arg == "preserve") {
    p.kind = LengthPolicy::Kind::preserve;
  } else if (arg.rfind("file:", 0) == 0) {
    p.kind = LengthPolicy::Kind::file;
    std::ifstream f(arg.substr(5));
    if (!f) throw InputError("cannot open length file " + arg.substr(5));
    nlohmann::json j;
    try {
      f >> j;
      for (auto it = j.begin(); it != j.end(); ++it)
        p.per_zone[std::stoi(it.key())] = it.value().get<double>();
    } catch (const std::exception& e) {
      throw InputError(std::string("bad length file: ") + e.what());
    }
  } else {
    throw CLI::ValidationError("--lengths", "expected unit, preserve or file:<path>");
  }
  return p;
}

struct OptimizeArgs {
  std::string input;
  std::string output = "-";
  std::string solver = "bisect";
  std::string lengths = "unit";
  std::string svg_path;
  std::string dump_aux_path;
  double tol = 1e-9;
  int max_iter = 64;
  bool unsafe_mode = false;
  bool compare = false;
  bool degrees = false;
};

double human_angle(double rad, bool degrees) { return degrees ? rad * 180.0 / kPi : rad; }

int exit_code_for(const OptimizeOutcome& oc) {
  return oc.report.all_pass() ? 0 : 3;
}

int cmd_optimize(const OptimizeArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  Document doc = parse_document(read_input(a.input, in));

  OptimizeOptions opt;
  opt.mode = a.unsafe_mode ? Mode::unsafe : Mode::safe;
  opt.solver = a.solver == "exact" ? SolverKind::exact : SolverKind::bisect;
  opt.tol = a.tol;
  opt.max_iter = a.max_iter;
  opt.lengths = parse_lengths(a.lengths);

  const bool log_info = log_at_least(LogLevel::info);
  const char* unit = a.degrees ? "deg" : "rad";

  if (!a.dump_aux_path.empty()) {
    Ingested ing = ingest(doc, opt.cfg);
    AuxGraph g = build_aux_graph(ing, opt.mode);
    write_output(a.dump_aux_path, dump_aux(g), out);
  }

  if (a.compare) {
    OptimizeOptions safe_opt = opt;
    safe_opt.mode = Mode::safe;
    OptimizeOptions unsafe_opt = opt;
    unsafe_opt.mode = Mode::unsafe;
    auto unsafe_future =
        std::async(std::launch::async, [&] { return run_optimize(doc, unsafe_opt); });
    OptimizeOutcome safe_oc = run_optimize(doc, safe_opt);
    OptimizeOutcome unsafe_oc = unsafe_future.get();
    if (log_info)
      err << "lambda* safe=" << human_angle(safe_oc.sol.lambda_star, a.degrees) << unit
          << " unsafe=" << human_angle(unsafe_oc.sol.lambda_star, a.degrees) << unit << "\n";
    write_output(a.output, emit_compare_json(safe_oc, unsafe_oc, opt), out);
    if (!a.svg_path.empty())
      write_output(a.svg_path, render_svg(safe_oc.out, safe_oc.input.zones), out);
    int safe_code = exit_code_for(safe_oc);
    int unsafe_code = exit_code_for(unsafe_oc);
    return std::max(safe_code, unsafe_code);
  }

  OptimizeOutcome oc = run_optimize(doc, opt);
  if (log_info) {
    err << "lambda* = " << human_angle(oc.sol.lambda_star, a.degrees) << unit << " ("
        << oc.sol.iterations << " iterations, solver=" << solver_name(oc.sol.solver) << ")\n";
    if (oc.input.resolution && oc.report.resolution)
      err << "resolution " << human_angle(*oc.input.resolution, a.degrees) << unit << " -> "
          << human_angle(*oc.report.resolution, a.degrees) << unit << "\n";
  }
  write_output(a.output, emit_result_json(oc, opt), out);
  if (!a.svg_path.empty()) write_output(a.svg_path, render_svg(oc.out, oc.input.zones), out);
  return exit_code_for(oc);
}

int cmd_check(const std::string& input, bool unsafe_mode, const std::string& output,
              std::istream& in, std::ostream& out) {
  Document doc = parse_document(read_input(input, in));
  Config cfg;
  Ingested ing = ingest(doc, cfg);
  Mode mode = unsafe_mode ? Mode::unsafe : Mode::safe;
  VerifyReport rep = check_drawing(ing.drawing, ing, mode, cfg);
  write_output(output, emit_report_json(rep), out);
  return rep.all_pass() ? 0 : 3;
}

int cmd_render(const std::string& input, const std::string& output, bool color_zones,
               std::istream& in, std::ostream& out, std::ostream& err) {
  Document doc = parse_document(read_input(input, in));
  Ingested ing = ingest(doc, Config{});
  if (ing.drawing.edge_count() > 3000 && log_at_least(LogLevel::info))
    err << "warning: " << ing.drawing.edge_count() << " edges; rendering may be slow\n";
  SvgOptions so;
  so.color_zones = color_zones;
  write_output(output, render_svg(ing.drawing, ing.zones, so), out);
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"face-symmetric drawing optimizer"};
  app.require_subcommand(1);

  OptimizeArgs oa;
  auto* optimize = app.add_subcommand("optimize", "maximize angular resolution");
  optimize->add_option("input", oa.input, "drawing document, - for stdin")->required();
  optimize->add_option("-o,--output", oa.output, "result path, - for stdout");
  optimize->add_option("--tol", oa.tol, "bisection tolerance");
  optimize->add_option("--max-iter", oa.max_iter, "bisection iteration cap");
  optimize->add_option("--solver", oa.solver, "bisect or exact")
      ->check(CLI::IsMember({"bisect", "exact"}));
  optimize->add_flag("--unsafe", oa.unsafe_mode, "drop boundary winding constraints");
  optimize->add_flag("--compare", oa.compare, "run both safe and unsafe modes");
  optimize->add_option("--lengths", oa.lengths, "unit, preserve or file:<path>");
  optimize->add_option("--svg", oa.svg_path, "also render the output drawing");
  optimize->add_option("--dump-aux", oa.dump_aux_path, "write the constraint graph edges");
  optimize->add_flag("--degrees", oa.degrees, "log angles in degrees");

  std::string check_input, check_output = "-";
  bool check_unsafe = false;
  auto* check = app.add_subcommand("check", "validate a drawing and report its resolution");
  check->add_option("input", check_input, "drawing document, - for stdin")->required();
  check->add_option("-o,--output", check_output, "report path, - for stdout");
  check->add_flag("--unsafe", check_unsafe, "skip winding and planarity gating");

  std::string render_input, render_output = "-";
  bool color_zones = false;
  auto* render = app.add_subcommand("render", "render a drawing document to SVG");
  render->add_option("input", render_input, "drawing document, - for stdin")->required();
  render->add_option("-o,--output", render_output, "svg path, - for stdout");
  render->add_flag("--color-zones", color_zones, "hue from zone direction");

  auto* gen = app.add_subcommand("gen", "generate a test drawing");
  gen->require_subcommand(1);
  int gk = 2, gm = 1, gn = 1;
  GenOptions gopt;
  std::string gen_output = "-";
  unsigned long long seed_val = 0;
  bool seed_set = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--skew", gopt.skew, "shear angle in radians");
    sub->add_option("--seed", seed_val, "jitter zone lengths")->each([&](const std::string&) {
      seed_set = true;
    });
    sub->add_option("-o,--output", gen_output, "document path, - for stdout");
  };
  auto* gp = gen->add_subcommand("polygon", "regular 2k-gon");
  gp->add_option("--k", gk, "zone count")->required();
  add_common(gp);
  auto* gg = gen->add_subcommand("grid", "rectangular lattice");
  gg->add_option("--m", gm, "columns")->required();
  gg->add_option("--n", gn, "rows")->required();
  add_common(gg);
  auto* gf = gen->add_subcommand("fan", "rhombi around one vertex");
  gf->add_option("--k", gk, "rhombus count")->required();
  add_common(gf);
  auto* gs = gen->add_subcommand("star", "rays from one vertex");
  gs->add_option("--k", gk, "ray count")->required();
  add_common(gs);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  }

  try {
    if (*optimize) return cmd_optimize(oa, in, out, err);
    if (*check) return cmd_check(check_input, check_unsafe, check_output, in, out);
    if (*render) return cmd_render(render_input, render_output, color_zones, in, out, err);
    if (*gen) {
      if (seed_set) gopt.seed = seed_val;
      Document doc;
      if (*gp) doc = gen_polygon(gk, gopt);
      else if (*gg) doc = gen_grid(gm, gn, gopt);
      else if (*gf) doc = gen_fan(gk, gopt);
      else doc = gen_star(gk, gopt);
      write_output(gen_output, emit_document(doc), out);
      return 0;
    }
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}

}  // namespace fsdraw::cli

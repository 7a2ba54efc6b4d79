// Command implementations behind the `civitas` executable. Each returns the
// process exit code: 0 success, 1 domain failure, 2 usage error. Results go
// to `out`, diagnostics to `err`.
#pragma once

#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "civitas/alcuin.hpp"
#include "civitas/layout_io.hpp"
#include "civitas/packer.hpp"
#include "civitas/svg.hpp"
#include "civitas/verifier.hpp"

namespace civitas::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

inline std::optional<ProblemId> named_problem(const std::string& name, std::ostream& err) {
  const auto id = parse_problem_id(name);
  if (!id || *id == ProblemId::custom) {
    err << "error: unknown problem '" << name << "' (expected quadrangula, triangula or rotunda)\n";
    return std::nullopt;
  }
  return id;
}

inline std::string format_step(const ArithmeticStep& s) {
  const auto& x = s.operands;
  std::ostringstream line;
  line << to_string(s.op) << ' ';
  switch (s.op) {
    case StepOp::add: line << x[0] << " + " << x[1]; break;
    case StepOp::subtract: line << x[0] << " - " << x[1]; break;
    case StepOp::multiply: line << x[0] << " * " << x[1]; break;
    case StepOp::floor_divide: line << x[0] << " / " << x[1]; break;
    case StepOp::halve: line << x[0]; break;
    case StepOp::proportion_split: line << x[0] << ' ' << x[1] << ':' << x[2]; break;
    case StepOp::adjust: line << x[0]; break;
  }
  line << " -> " << s.result << "    " << s.description;
  return line.str();
}

inline int arith(const std::string& problem, const std::string& variant, std::ostream& out,
                 std::ostream& err) {
  const auto id = named_problem(problem, err);
  if (!id) return kUsage;
  MedievalVariant v;
  if (variant == "alcuin") {
    v = MedievalVariant::alcuin;
  } else if (variant == "folkerts") {
    v = MedievalVariant::folkerts;
  } else {
    err << "error: unknown variant '" << variant << "' (expected alcuin or folkerts)\n";
    return kUsage;
  }
  if (v == MedievalVariant::folkerts && *id != ProblemId::rotunda) {
    err << "error: the folkerts variant exists only for rotunda\n";
    return kUsage;
  }
  const auto trace = medieval_count(*id, v);
  for (const auto& s : trace.steps) out << format_step(s) << '\n';
  out << "count = " << trace.final_count << '\n';
  return kOk;
}

inline int bounds(const std::string& problem, std::ostream& out, std::ostream& err) {
  const auto id = named_problem(problem, err);
  if (!id) return kUsage;
  const auto inst = make_instance(*id);
  const auto ref = *reference_counts(*id);
  const double area = container_area(inst.container);
  const char* rule = *id == ProblemId::quadrangula ? "egyptian quadrilateral rule"
                     : *id == ProblemId::triangula ? "egyptian triangle rule"
                                                   : "circumference squared over 12 (pi = 3)";
  out << "problem          " << problem << '\n';
  out << "medieval area    " << format_number(medieval_area(*inst.dims), 3) << "    " << rule << '\n';
  out << "exact area       " << format_number(area, 3) << '\n';
  out << "house            " << format_number(inst.house.length, 0) << " x "
      << format_number(inst.house.width, 0) << '\n';
  out << "house areas      " << format_number(area / inst.house.area(), 3) << '\n';
  out << "area bound       " << house_area_bound(inst) << '\n';
  out << "alcuin count     " << ref.alcuin << '\n';
  if (ref.folkerts) out << "folkerts count   " << *ref.folkerts << '\n';
  out << "singmaster       ";
  for (std::size_t i = 0; i < ref.singmaster.size(); ++i) out << (i ? " " : "") << ref.singmaster[i];
  out << '\n';
  out << "best known       " << ref.best_known << '\n';
  return kOk;
}

struct SolveOptions {
  std::string problem;
  std::uint64_t seed = 0;
  std::int64_t budget_ms = SolverConfig{}.budget_ms;
  std::optional<std::int64_t> iterations;
  bool local_search = true;
  std::vector<double> angles_deg;
  std::string output;
};

inline int solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const auto id = named_problem(o.problem, err);
  if (!id) return kUsage;
  if (o.budget_ms <= 0) {
    err << "error: --budget-ms must be positive\n";
    return kUsage;
  }
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write '" << o.output << "'\n";
    return kFailure;
  }
  SolverConfig cfg;
  cfg.seed = o.seed;
  cfg.budget_ms = o.budget_ms;
  cfg.iterations = o.iterations;
  cfg.enable_local_search = o.local_search;
  for (double d : o.angles_deg) cfg.angle_candidates.push_back(d * kPi / 180.0);

  const auto inst = make_instance(*id);
  const Layout layout = civitas::solve(inst, cfg);
  file << serialize(layout);
  file.close();
  if (!file) {
    err << "error: failed writing '" << o.output << "'\n";
    return kFailure;
  }
  for (const auto& s : layout.provenance.stages) {
    out << "stage " << s.name << ": " << s.count << " houses";
    if (s.name == "local_search") out << " (" << s.iterations << " iterations)";
    if (s.name == "edge_fill") out << " (" << s.iterations << " added)";
    out << '\n';
  }
  const auto report = verify(layout);
  out << "count " << report.count << '\n';
  out << "density " << format_number(report.density, 5) << '\n';
  std::map<double, std::size_t> angles;  // theta -> houses
  for (const auto& h : layout.houses) ++angles[h.theta()];
  out << "angles";
  for (const auto& [t, n] : angles) out << ' ' << format_number(t * 180.0 / kPi, 3) << "deg x" << n;
  out << '\n';
  out << "verification " << (report.passed ? "passed" : "FAILED") << '\n';
  return report.passed ? kOk : kFailure;
}

inline std::optional<Layout> load_layout(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return parse_layout(text);
  } catch (const LayoutParseError& e) {
    err << "parse error: " << path << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

inline int verify_file(const std::string& path, double tol, std::ostream& out, std::ostream& err) {
  if (!(tol >= 0.0)) {
    err << "error: --tol must be >= 0\n";
    return kUsage;
  }
  const auto layout = load_layout(path, err);
  if (!layout) return kFailure;
  const auto report = verify(*layout, Tolerance(tol));
  out << density_report(report, layout->instance);
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < report.violations.size() && i < kShown; ++i) {
    const auto& v = report.violations[i];
    out << "  " << to_string(v.kind);
    for (auto idx : v.indices) out << ' ' << idx;
    out << "  magnitude " << format_number(v.magnitude, 9) << '\n';
  }
  if (report.violations.size() > kShown) {
    out << "  ... " << report.violations.size() - kShown << " more\n";
  }
  return report.passed ? kOk : kFailure;
}

inline int render(const std::string& path, const std::string& svg_path, double scale, bool force,
                  std::ostream& out, std::ostream& err) {
  const auto layout = load_layout(path, err);
  if (!layout) return kFailure;
  const auto report = verify(*layout);
  if (!report.passed && !force) {
    err << "error: layout fails verification (" << report.violations.size()
        << " violations); use --force to render anyway\n";
    return kFailure;
  }
  std::ofstream file(svg_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write '" << svg_path << "'\n";
    return kFailure;
  }
  SvgOptions opt;
  opt.scale = scale;
  file << render_svg(*layout, opt);
  file.close();
  if (!file) {
    err << "error: failed writing '" << svg_path << "'\n";
    return kFailure;
  }
  out << "wrote " << svg_path << " (" << layout->count() << " houses)\n";
  return kOk;
}

}  // namespace civitas::cli

// civitas: medieval arithmetic, packing, verification and rendering for the
// three city problems.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "civitas/commands.hpp"

namespace cli = civitas::cli;

int main(int argc, char** argv) {
  CLI::App app{"Rectangle packing in convex cities", "civitas"};
  app.require_subcommand(1);

  std::string problem;
  std::string variant = "alcuin";
  auto* arith = app.add_subcommand("arith", "Replay the medieval arithmetic solution");
  arith->add_option("problem", problem, "quadrangula, triangula or rotunda")->required();
  arith->add_option("--variant", variant, "alcuin or folkerts (folkerts: rotunda only)");

  cli::SolveOptions solve_opts;
  std::int64_t iterations = -1;
  auto* solve = app.add_subcommand("solve", "Pack houses and write a layout file");
  solve->add_option("problem", solve_opts.problem, "quadrangula, triangula or rotunda")->required();
  solve->add_option("--seed", solve_opts.seed, "Random seed");
  solve->add_option("--budget-ms", solve_opts.budget_ms, "Local-search budget in milliseconds")
      ->check(CLI::PositiveNumber);
  solve->add_option("--iterations", iterations, "Run exactly this many local-search iterations")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--angles", solve_opts.angles_deg, "Extra house rotations in degrees")
      ->delimiter(',');
  bool no_local_search = false;
  solve->add_flag("--no-local-search", no_local_search, "Stop after rows and edge fill");
  solve->add_option("-o,--output", solve_opts.output, "Layout file to write")->required();

  std::string layout_path;
  double tol = civitas::Tolerance{}.eps;
  auto* verify = app.add_subcommand("verify", "Check a layout file");
  verify->add_option("layout", layout_path, "Layout file")->required();
  verify->add_option("--tol", tol, "Containment and penetration tolerance, feet")
      ->check(CLI::NonNegativeNumber);

  auto* bounds = app.add_subcommand("bounds", "Areas, area bound and published counts");
  bounds->add_option("problem", problem, "quadrangula, triangula or rotunda")->required();

  std::string svg_path;
  double scale = 0.0;
  bool force = false;
  auto* render = app.add_subcommand("render", "Draw a layout file as SVG");
  render->add_option("layout", layout_path, "Layout file")->required();
  render->add_option("-o,--output", svg_path, "SVG file to write")->required();
  render->add_option("--scale", scale, "Pixels per foot")->check(CLI::PositiveNumber);
  render->add_flag("--force", force, "Render even if verification fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  if (arith->parsed()) return cli::arith(problem, variant, std::cout, std::cerr);
  if (bounds->parsed()) return cli::bounds(problem, std::cout, std::cerr);
  if (verify->parsed()) return cli::verify_file(layout_path, tol, std::cout, std::cerr);
  if (render->parsed()) return cli::render(layout_path, svg_path, scale, force, std::cout, std::cerr);
  if (solve->parsed()) {
    solve_opts.local_search = !no_local_search;
    if (iterations >= 0) solve_opts.iterations = iterations;
    return cli::solve(solve_opts, std::cout, std::cerr);
  }
  return cli::kUsage;
}

// loewner_lab: batch driver for the experiments in loewner/experiments.hpp.
//
//   loewner_lab <experiment> [--kappa K] [--paths N] [--dt H] [--du H]
//               [--horizon T] [--u-max U] [--n-index N] [--seed S]
//               [--out DIR] [--format csv|json] [--config FILE] ...
//
// Flags override values read from --config (key = value lines). The default
// output directory comes from LOEWNER_LAB_OUT when set.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "loewner/experiments.hpp"

namespace {

using loewner::cli::Experiment;
using loewner::cli::ExperimentConfig;

struct Flags {
  std::optional<std::string> kappa;
  std::optional<std::int64_t> paths;
  std::optional<double> dt, du, horizon, u_max;
  std::optional<std::int64_t> n_index;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::vector<std::string>> kappa_grid;
  std::optional<std::vector<double>> s_grid;
  std::optional<double> a, b, c, x;
  std::optional<std::int64_t> grid_points;
  std::optional<double> t_max;
  bool svg = false;
};

template <class T>
void apply(const std::optional<T>& v, T& target) {
  if (v) target = *v;
}

ExperimentConfig build(Experiment e, const Flags& f) {
  ExperimentConfig c = loewner::cli::defaults_for(e);
  if (const char* env = std::getenv("LOEWNER_LAB_OUT"); env && *env) c.output_dir = env;
  apply(f.kappa, c.kappa);
  apply(f.paths, c.paths);
  apply(f.dt, c.dt);
  apply(f.du, c.du);
  apply(f.horizon, c.horizon);
  apply(f.u_max, c.u_max);
  apply(f.n_index, c.n_index);
  apply(f.seed, c.seed);
  if (f.out) c.output_dir = *f.out;
  if (f.format) c.format = *f.format == "json" ? loewner::io::Format::json : loewner::io::Format::csv;
  apply(f.kappa_grid, c.kappa_grid);
  apply(f.s_grid, c.s_grid);
  apply(f.a, c.a);
  apply(f.b, c.b);
  apply(f.c, c.c);
  apply(f.x, c.x);
  apply(f.grid_points, c.grid_points);
  apply(f.t_max, c.t_max);
  c.svg = c.svg || f.svg;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loewner flow and diffusion experiments"};
  app.set_version_flag("--version", loewner::cli::version);
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--kappa", f.kappa, "kappa, decimal or p/q");
  app.add_option("--paths", f.paths, "number of independent paths");
  app.add_option("--dt", f.dt, "flow time step (relative step for clock-stopped flows)");
  app.add_option("--du", f.du, "diffusion time step");
  app.add_option("--horizon", f.horizon, "flow time horizon");
  app.add_option("--u-max", f.u_max, "diffusion time horizon / clock level");
  app.add_option("--n-index", f.n_index, "index n of the level a_n = ln(1 + 4n/kappa)");
  app.add_option("--seed", f.seed, "master seed");
  app.add_option("--out", f.out, "output directory (default: $LOEWNER_LAB_OUT or ./out)");
  app.add_option("--format", f.format, "table format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--kappa-grid", f.kappa_grid, "kappa values for phase-scan")->delimiter(',');
  app.add_option("--s-grid", f.s_grid, "flow times for conjecture")->delimiter(',');
  app.add_option("--a", f.a, "2F1 parameter a");
  app.add_option("--b", f.b, "2F1 parameter b");
  app.add_option("--c", f.c, "2F1 parameter c");
  app.add_option("--x", f.x, "2F1 argument x <= 0");
  app.add_option("--grid-points", f.grid_points, "curve grid size for stationary-curves");
  app.add_option("--t-max", f.t_max, "curve range [-t_max, t_max] for stationary-curves");
  app.add_flag("--svg", f.svg, "also write SVG plots (stationary-curves)");

  std::map<CLI::App*, Experiment> commands;
  for (const auto& [e, name] : loewner::cli::experiment_names) {
    commands[app.add_subcommand(std::string(name), "run the " + std::string(name) + " experiment")] = e;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Experiment e = Experiment::flow;
  for (const auto& [cmd, exp] : commands) {
    if (cmd->parsed()) e = exp;
  }

  try {
    const auto report = loewner::cli::run(build(e, f));
    std::cout << report.to_json().dump(2) << '\n';
    return 0;
  } catch (const loewner::Error& err) {
    std::cerr << "error (" << loewner::to_string(err.code()) << "): " << err.what() << '\n';
    return loewner::cli::exit_code(err.code());
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}

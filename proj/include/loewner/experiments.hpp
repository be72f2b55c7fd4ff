#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "loewner/diffusion.hpp"
#include "loewner/error.hpp"
#include "loewner/io.hpp"
#include "loewner/kappa.hpp"
#include "loewner/loewner_flow.hpp"
#include "loewner/parallel.hpp"
#include "loewner/rng.hpp"
#include "loewner/special_fn.hpp"
#include "loewner/stationary.hpp"
#include "loewner/stats.hpp"
#include "loewner/svg.hpp"
#include "loewner/time_change.hpp"

// Named, seed-deterministic experiments. Each run writes its data files and a
// report.json into the output directory; on failure every file the run wrote
// is removed again.

namespace loewner::cli {

inline constexpr const char* version = "loewner-lab 1.0.0 (schema 1)";

enum class Experiment {
  flow,
  diffusion,
  stationary_curves,
  ergodic,
  embed,
  equivalence,
  phase_scan,
  scaling,
  conjecture,
  hypergeom_eval,
};

inline constexpr std::array<std::pair<Experiment, std::string_view>, 10> experiment_names{{
    {Experiment::flow, "flow"},
    {Experiment::diffusion, "diffusion"},
    {Experiment::stationary_curves, "stationary-curves"},
    {Experiment::ergodic, "ergodic"},
    {Experiment::embed, "embed"},
    {Experiment::equivalence, "equivalence"},
    {Experiment::phase_scan, "phase-scan"},
    {Experiment::scaling, "scaling"},
    {Experiment::conjecture, "conjecture"},
    {Experiment::hypergeom_eval, "hypergeom-eval"},
}};

inline std::string to_string(Experiment e) {
  for (const auto& [k, name] : experiment_names) {
    if (k == e) return std::string(name);
  }
  return "unknown";
}

inline Experiment parse_experiment(std::string_view name) {
  for (const auto& [k, n] : experiment_names) {
    if (n == name) return k;
  }
  fail(ErrorCode::invalid_argument, "unknown experiment '" + std::string(name) + "'");
}

/// Configuration of one run. For flow-based experiments that stop on the
/// clock (embed, equivalence, conjecture) `dt` is the relative step
/// dt_k / y_k^2 of the scaled integrator.
struct ExperimentConfig {
  Experiment experiment = Experiment::flow;
  std::string kappa = "4";
  std::int64_t paths = 1;
  double dt = 1e-3;
  double du = 1e-3;
  double horizon = 10.0;
  double u_max = 0.0;
  std::int64_t n_index = 50;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "out";
  io::Format format = io::Format::csv;

  std::vector<std::string> kappa_grid;  // phase-scan
  std::vector<double> s_grid;           // conjecture
  double a = 0.5, b = -1.0, c = 1.5, x = -1.0;  // hypergeom-eval
  std::int64_t grid_points = 401;       // stationary-curves
  double t_max = 5.0;
  bool svg = false;
};

/// Documented defaults per experiment.
inline ExperimentConfig defaults_for(Experiment e) {
  ExperimentConfig c;
  c.experiment = e;
  switch (e) {
    case Experiment::flow:
      break;
    case Experiment::diffusion:
      c.paths = 1000;
      c.u_max = 20.0;
      break;
    case Experiment::stationary_curves:
      c.kappa = "3";
      break;
    case Experiment::ergodic:
      c.u_max = 1000.0;
      break;
    case Experiment::embed:
      c.paths = 10000;
      break;
    case Experiment::equivalence:
      c.paths = 2000;
      c.dt = 1e-4;
      c.u_max = 10.0;
      break;
    case Experiment::phase_scan:
      c.kappa_grid = {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"};
      break;
    case Experiment::scaling:
      c.paths = 5000;
      c.horizon = 4.0;
      break;
    case Experiment::conjecture:
      c.paths = 2000;
      c.s_grid = {10.0, 100.0, 1000.0};
      break;
    case Experiment::hypergeom_eval:
      break;
  }
  return c;
}

struct FileEntry {
  std::string name;
  std::string schema;
};

struct Report {
  std::string experiment;
  nlohmann::json config;
  nlohmann::json metrics;
  std::vector<FileEntry> files;
  std::string version = cli::version;

  nlohmann::json to_json() const {
    nlohmann::json f = nlohmann::json::array();
    for (const auto& e : files) f.push_back({{"name", e.name}, {"schema", e.schema}});
    return {{"experiment", experiment}, {"config", config}, {"metrics", metrics}, {"files", f}, {"version", version}};
  }
};

/// Process exit status for a failed run.
inline int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return 2;
    case ErrorCode::non_normalizable: return 3;
    case ErrorCode::horizon_exceeded: return 4;
    case ErrorCode::divergent_region:
    case ErrorCode::pole: return 5;
  }
  return 1;
}

namespace detail {

inline void validate(const ExperimentConfig& c) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  (void)Kappa::parse(c.kappa);
  require(c.paths >= 1, "--paths must be at least 1");
  require(positive(c.dt), "--dt must be finite and positive");
  require(positive(c.du), "--du must be finite and positive");
  require(positive(c.horizon), "--horizon must be finite and positive");
  require(std::isfinite(c.u_max) && c.u_max >= 0.0, "--u-max must be finite and nonnegative");
  require(c.n_index >= 1, "--n-index must be at least 1");
  require(!c.output_dir.empty(), "--out must name a directory");
  require(c.grid_points >= 1, "--grid-points must be at least 1");
  require(positive(c.t_max), "--t-max must be finite and positive");
  for (const auto& k : c.kappa_grid) (void)Kappa::parse(k);
  for (double s : c.s_grid) require(positive(s), "--s-grid entries must be positive");
  switch (c.experiment) {
    case Experiment::diffusion:
    case Experiment::ergodic:
    case Experiment::equivalence:
      require(c.u_max >= c.du, "--u-max must cover at least one step");
      break;
    case Experiment::flow:
      require(c.horizon >= c.dt, "--horizon must cover at least one step");
      break;
    case Experiment::scaling:
      require(c.horizon >= c.dt, "--horizon must cover at least one step");
      break;
    case Experiment::phase_scan:
      require(!c.kappa_grid.empty(), "--kappa-grid must be nonempty");
      break;
    case Experiment::conjecture:
      require(!c.s_grid.empty(), "--s-grid must be nonempty");
      break;
    case Experiment::hypergeom_eval:
      require(std::isfinite(c.a) && std::isfinite(c.b) && std::isfinite(c.c) && std::isfinite(c.x),
              "hypergeometric parameters must be finite");
      break;
    default:
      break;
  }
}

inline nlohmann::json echo(const ExperimentConfig& c) {
  nlohmann::json j{{"experiment", to_string(c.experiment)},
                   {"kappa", c.kappa},
                   {"paths", c.paths},
                   {"dt", c.dt},
                   {"du", c.du},
                   {"horizon", c.horizon},
                   {"u_max", c.u_max},
                   {"n_index", c.n_index},
                   {"seed", c.seed},
                   {"format", c.format == io::Format::csv ? "csv" : "json"}};
  switch (c.experiment) {
    case Experiment::phase_scan: j["kappa_grid"] = c.kappa_grid; break;
    case Experiment::conjecture: j["s_grid"] = c.s_grid; break;
    case Experiment::hypergeom_eval: j["a"] = c.a; j["b"] = c.b; j["c"] = c.c; j["x"] = c.x; break;
    case Experiment::stationary_curves:
      j["grid_points"] = c.grid_points;
      j["t_max"] = c.t_max;
      j["svg"] = c.svg;
      break;
    default: break;
  }
  return j;
}

/// Files written by one run; removed on destruction unless committed.
class OutputSet {
 public:
  OutputSet(std::filesystem::path dir, io::Format format, Report& report)
      : dir_(std::move(dir)), format_(format), report_(report) {
    std::filesystem::create_directories(dir_);
  }
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;
  ~OutputSet() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& p : written_) std::filesystem::remove(p, ec);
  }

  void table(const std::string& stem, const io::Table& t) {
    const std::string name = stem + io::extension(format_);
    track(name);
    io::write_table(dir_ / name, t, format_);
    report_.files.push_back({name, join(t.columns)});
  }

  void text(const std::string& name, const std::string& schema, const std::string& body) {
    track(name);
    io::write_text(dir_ / name, body);
    report_.files.push_back({name, schema});
  }

  void commit() {
    track("report.json");
    io::write_text(dir_ / "report.json", report_.to_json().dump(2) + "\n");
    committed_ = true;
  }

 private:
  static std::string join(const std::vector<std::string>& cols) {
    std::string s;
    for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + cols[i];
    return s;
  }
  void track(const std::string& name) { written_.push_back(dir_ / name); }

  std::filesystem::path dir_;
  io::Format format_;
  Report& report_;
  std::vector<std::filesystem::path> written_;
  bool committed_ = false;
};

inline double arccot(double d) { return 0.5 * std::numbers::pi - std::atan(d); }

inline void run_flow(const ExperimentConfig& c, OutputSet& out, nlohmann::json& m) {
  const Kappa kappa = Kappa::parse(c.kappa);
  const auto n = static_cast<std::size_t>(c.paths);
  std::vector<std::array<std::size_t, 4>> violations(n);
  std::vector<double> final_u(n), final_y(n);
  std::optional<FlowPath> first;
  std::optional<TimeChangeMap> first_map;
  parallel_for(n, [&](std::size_t p) {
    FlowPath path = simulate_flow(kappa, c.horizon, c.dt, c.seed, {.path_index = p});
    TimeChangeMap map = u_tilde(path);
    auto& v = violations[p];
    v = {0, 0, 0, 0};
    const double y0sq = path.states.front().y * path.states.front().y;
    for (std::size_t k = 0; k < path.states.size(); ++k) {
      const auto& s = path.states[k];
      if (k > 0 && !(s.y > path.states[k - 1].y)) ++v[0];
      const double slack = 1e-12 * (1.0 + s.t);
      if (s.y * s.y > y0sq + 4.0 * s.t + slack) ++v[1];
      if (map.u_values[k] < 0.25 * std::log1p(4.0 * s.t / y0sq) - slack) ++v[2];
      if (map.u_values[k] > s.t / y0sq + slack) ++v[3];
    }
    final_u[p] = map.max_u();
    final_y[p] = path.states.back().y;
    if (p == 0) {
      first = std::move(path);
      first_map = std::move(map);
    }
  });

  out.table("flow", io::flow_table(*first));
  out.text("flow.json", "sidecar:kappa,dt,seed,horizon", io::flow_sidecar(*first).dump(2) + "\n");
  out.table("time_change", io::time_change_table(*first_map));

  std::array<std::size_t, 4> total{};
  for (const auto& v : violations) {
    for (int i = 0; i < 4; ++i) total[i] += v[i];
  }
  m["u_tilde_final"] = final_u[0];
  m["y_final"] = final_y[0];
  m["u_tilde_lower_bound"] = 0.25 * std::log1p(4.0 * first->horizon());
  m["violations"] = {{"y_not_increasing", total[0]},
                     {"y_squared_above_bound", total[1]},
                     {"u_tilde_below_log_bound", total[2]},
                     {"u_tilde_above_t", total[3]}};

  if (c.u_max > 0.0) {
    const std::size_t steps = static_cast<std::size_t>(std::ceil(c.u_max / c.du - 1e-9 * c.u_max / c.du));
    std::vector<double> grid(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) grid[k] = std::min(c.u_max, static_cast<double>(k) * c.du);
    const DiffusionPath extracted = extract_T(*first, *first_map, grid);  // horizon_exceeded propagates
    out.table("extracted", io::diffusion_table(extracted));
    m["T_extracted_final"] = extracted.T_values.back();
  }
}

inline void run_diffusion(const ExperimentConfig& c, OutputSet& out, nlohmann::json& m) {
  const Kappa kappa = Kappa::parse(c.kappa);
  const auto n = static_cast<std::size_t>(c.paths);
  const DiffusionSpec base{.kappa = kappa, .du = c.du, .u_max = c.u_max, .seed = c.seed};
  std::vector<double> finals(n);
  parallel_for(n, [&](std::size_t p) {
    DiffusionSpec s = base;
    s.path_index = p;
    finals[p] = simulate_T_terminal(s);
  });
  out.table("diffusion", io::diffusion_table(simulate_T(base)));
  out.table("terminal", io::terminal_table(finals));

  double mean = 0.0;
  for (double v : finals) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : finals) var += (v - mean) * (v - mean);
  m["mean_T_final"] = mean;
  m["var_T_final"] = n > 1 ? var / static_cast<double>(n - 1) : 0.0;
  if (kappa.subcritical()) {
    const StationaryLaw law(kappa);
    m["ks_vs_stationary"] = stats::ks_one_sample(stats::Sample(finals), [&](double t) { return law.cdf(t); });
  } else {
    m["ks_vs_stationary"] = nullptr;
  }
}

/// Curve files for a stationary law: `T,pdf,cdf` on [-t_max, t_max] and
/// `theta,argument_pdf` on cell centers of (0, pi), plus optional SVG plots.
inline void emit_curves(const StationaryLaw& law, std::int64_t points, double t_max, bool svg, OutputSet& out) {
  const auto n = static_cast<std::size_t>(points);
  io::Table curves{{"T", "pdf", "cdf"}, {}};
  io::Table arg{{"theta", "argument_pdf"}, {}};
  std::vector<double> ts(n), ps(n), th(n), ap(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Integer numerator keeps the grid exactly symmetric about 0.
    ts[i] = n == 1 ? 0.0 : t_max * (2.0 * static_cast<double>(i) - static_cast<double>(n - 1)) / static_cast<double>(n - 1);
    ps[i] = law.pdf(ts[i]);
    curves.add({ts[i], ps[i], law.cdf(ts[i])});
    th[i] = std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    ap[i] = law.argument_pdf(th[i]);
    arg.add({th[i], ap[i]});
  }
  out.table("curves", curves);
  out.table("argument", arg);
  if (svg) {
    const std::string k = law.kappa().to_string();
    out.text("curves.svg", "svg", io::svg_line_plot(ts, ps, "stationary density of T, kappa = " + k));
    out.text("argument.svg", "svg", io::svg_line_plot(th, ap, "density of the argument, kappa = " + k));
  }
}

inline void run_stationary_curves(const ExperimentConfig& c, OutputSet& out, nlohmann::json& m) {
  const Kappa kappa = Kappa::parse(c.kappa);
  const StationaryLaw law(kappa);
  emit_curves(law, c.grid_points, c.t_max, c.svg, out);
  m["normalization"] = law.normalization();
  m["inverse_normalization"] = law.inverse_normalization();
  m["inverse_normalization_closed_form"] = inverse_normalization_closed_form(kappa);
  const double mid = law.argument_pdf(0.5 * std::numbers::pi);
  const double off = law.argument_pdf(0.25 * std::numbers::pi);
  m["argument_shape"] = mid > off ? "mode_at_half_pi" : (mid < off ? "antimode_at_half_pi" : "uniform");
}

inline void run_ergodic(const ExperimentConfig& c, OutputSet& out, nlohmann::json& m) {
  const Kappa kappa = Kappa::parse(c.kappa);
  const StationaryLaw law(kappa);
  const DiffusionPath path = simulate_T({.kappa = kappa, .du = c.du, .u_max = c.u_max, .seed = c.seed});
  auto indicator = [](double t) { return std::abs(t) <= 1.0 ? 1.0 : 0.0; };

  // Running average at 200 evenly spaced checkpoints.
  io::Table running{{"u", "Z"}, {}};
  const std::size_t n = path.T_values.size() - 1;
  const std::size_t stride = std::max<std::size_t>(1, n / 200);
  double acc = 0.0;
  double prev = indicator(path.T_values[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    const double cur = indicator(path.T_values[k]);
    acc += 0.5 * (path.u_grid[k] - path.u_grid[k - 1]) * (prev + cur);
    prev = cur;
    if (k % stride == 0 || k == n) running.add({path.u_grid[k], acc / path.u_grid[k]});
  }
  out.table("ergodic", running);

  const double z = ergodic_average(path, indicator);
  const double mu = 2.0 * law.cdf(1.0) - 1.0;
  m["Z_u"] = z;
  m["mu_f"] = mu;
  m["abs_error"] = std::abs(z - mu);
  m["u"] = path.u_grid.back();
}

/// Flow from i stopped on the clock; D = cot(arg z) at the hitting time.
struct ClockObservation {
  double hitting_time;
  double d;
};

inline ClockObservation observe_at_clock(const Kappa& kappa, double level, double relative_step, std::uint64_t seed,
                                         std::uint64_t path_index) {
  const FlowPath path = simulate_flow_scaled(kappa, relative_step, {.clock = level}, seed, {.path_index = path_index});
  const TimeChangeMap map = u_tilde(path);
  const FlowState s = state_at_clock(path, map, level);
  return {s.t, cot_arg(s)};
}

inline void run_embed(const ExperimentConfig& c, OutputSet& out, nlohmann::json& m) {
  const Kappa kappa = Kappa::parse(c.kappa);
  const StationaryLaw law(kappa);
  const double level = schedule_a(kappa, c.n_index);
  const auto n = static_cast<std::size_t>(c.paths);
  std::vector<ClockObservation> obs(n);
  parallel_for(n, [&](std::size_t p) { obs[p] = observe_at_clock(kappa, level, c.dt, c.seed, p); });

  io::Table t{{"path_id", "s_n", "D", "theta"}, {}};
  std::vector<double> theta(n);
  double mean_s = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    theta[p] = arccot(obs[p].d);
    mean_s += obs[p].hitting_time / static_cast<double>(n);
    t.add({static_cast<double>(p), obs[p].hitting_time, obs[p].d, theta[p]});
  }
  out.table("embed", t);
  const stats::Sample sample(theta);
  m["a_n"] = level;
  m["mean_s_n"] = mean_s;
  m["ks_vs_argument_law"] = stats::ks_one_sample(sample, [&](double th) { return law.argument_cdf(th); });
  m["ks_vs_uniform"] = stats::ks_one_sample(sample, [](double th) { return std::clamp(th / std::numbers::pi, 0.0, 1.0); });
}

inline void run_equivalence(const ExperimentConfig& c, OutputSet& out, nlohmann::json& m) {
  const Kappa kappa = Kappa::parse(c.kappa);
  const auto n = static_cast<std::size_t>(c.paths);
  const std::uint64_t flow_seed = rng::derive_seed(c.seed, 1);
  const std::uint64_t sde_seed = rng::derive_seed(c.seed, 2);
  std::vector<double> extracted(n), direct(n);
  parallel_for(n, [&](std::size_t p) {
    extracted[p] = observe_at_clock(kappa, c.u_max, c.dt, flow_seed, p).d / kappa.sqrt();
    direct[p] = simulate_T_terminal({.kappa = kappa, .du = c.du, .u_max = c.u_max, .seed = sde_seed, .path_index = p});
  });
  io::Table t{{"path_id", "T_extracted", "T_direct"}, {}};
  for (std::size_t p = 0; p < n; ++p) t.add({static_cast<double>(p), extracted[p], direct[p]});
  out.table("equivalence", t);
  m["ks_two_sample"] = stats::ks_two_sample(stats::Sample(extracted), stats::Sample(direct));
  m["u"] = c.u_max;
}

inline void run_phase_scan(const ExperimentConfig& c, OutputSet& out, nlohmann::json& m) {
  std::vector<Kappa> grid;
  for (const auto& k : c.kappa_grid) grid.push_back(Kappa::parse(k));
  const auto rows = phase_scan(grid);
  out.table("phase_scan", io::phase_table(rows));
  std::size_t finite = 0;
  for (const auto& r : rows) finite += r.normalizable ? 1 : 0;
  m["normalizable_count"] = finite;
  m["non_normalizable_count"] = rows.size() - finite;
}

inline void run_scaling(const ExperimentConfig& c, OutputSet& out, nlohmann::json& m) {
  const Kappa kappa = Kappa::parse(c.kappa);
  const auto n = static_cast<std::size_t>(c.paths);
  const double t = c.horizon;
  const std::uint64_t seed_a = rng::derive_seed(c.seed, 1);
  const std::uint64_t seed_b = rng::derive_seed(c.seed, 2);
  std::vector<double> scaled(n), unit(n);
  parallel_for(n, [&](std::size_t p) {
    // x/y is invariant under z -> z / sqrt(t), so the rescaling drops out.
    scaled[p] = cot_arg(simulate_flow(kappa, t, c.dt, seed_a, {.path_index = p}).states.back());
    unit[p] = cot_arg(simulate_flow(kappa, 1.0, c.dt, seed_b, {.y0 = 1.0 / std::sqrt(t), .path_index = p}).states.back());
  });
  io::Table tab{{"path_id", "D_scaled", "D_unit"}, {}};
  for (std::size_t p = 0; p < n; ++p) tab.add({static_cast<double>(p), scaled[p], unit[p]});
  out.table("scaling", tab);
  m["ks_two_sample"] = stats::ks_two_sample(stats::Sample(scaled), stats::Sample(unit));
  m["t"] = t;
}

inline void run_conjecture(const ExperimentConfig& c, OutputSet& out, nlohmann::json& m) {
  const Kappa kappa = Kappa::parse(c.kappa);
  const StationaryLaw law(kappa);
  const auto n = static_cast<std::size_t>(c.paths);
  std::vector<double> s_grid = c.s_grid;
  std::sort(s_grid.begin(), s_grid.end());
  const double s_max = s_grid.back();
  std::vector<std::vector<double>> T(s_grid.size(), std::vector<double>(n));
  parallel_for(n, [&](std::size_t p) {
    const FlowPath path = simulate_flow_scaled(kappa, c.dt, {.horizon = s_max}, c.seed, {.path_index = p});
    for (std::size_t i = 0; i < s_grid.size(); ++i) T[i][p] = cot_arg(state_at(path, s_grid[i])) / kappa.sqrt();
  });
  io::Table summary{{"S", "ks_distance"}, {}};
  io::Table samples{{"path_id", "S", "T"}, {}};
  nlohmann::json ks = nlohmann::json::array();
  bool nonincreasing = true;
  double last = 2.0;
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    const double d = stats::ks_one_sample(stats::Sample(T[i]), [&](double t) { return law.cdf(t); });
    summary.add({s_grid[i], d});
    ks.push_back({{"S", s_grid[i]}, {"ks", d}});
    nonincreasing = nonincreasing && d <= last;
    last = d;
    for (std::size_t p = 0; p < n; ++p) samples.add({static_cast<double>(p), s_grid[i], T[i][p]});
  }
  out.table("conjecture", summary);
  out.table("conjecture_samples", samples);
  m["ks_by_S"] = ks;
  m["ks_nonincreasing"] = nonincreasing;
}

inline void run_hypergeom(const ExperimentConfig& c, nlohmann::json& m) {
  const auto e = special::hyp2f1(c.a, c.b, c.c, c.x);
  m["value"] = e.value;
  m["branch"] = special::to_string(e.branch);
}

}  // namespace detail

/// Validates, runs, writes data files plus report.json, returns the report.
/// Throws loewner::Error; files written before the failure are removed.
inline Report run(const ExperimentConfig& config) {
  detail::validate(config);
  Report report;
  report.experiment = to_string(config.experiment);
  report.config = detail::echo(config);
  report.metrics = nlohmann::json::object();
  detail::OutputSet out(config.output_dir, config.format, report);
  auto& m = report.metrics;
  switch (config.experiment) {
    case Experiment::flow: detail::run_flow(config, out, m); break;
    case Experiment::diffusion: detail::run_diffusion(config, out, m); break;
    case Experiment::stationary_curves: detail::run_stationary_curves(config, out, m); break;
    case Experiment::ergodic: detail::run_ergodic(config, out, m); break;
    case Experiment::embed: detail::run_embed(config, out, m); break;
    case Experiment::equivalence: detail::run_equivalence(config, out, m); break;
    case Experiment::phase_scan: detail::run_phase_scan(config, out, m); break;
    case Experiment::scaling: detail::run_scaling(config, out, m); break;
    case Experiment::conjecture: detail::run_conjecture(config, out, m); break;
    case Experiment::hypergeom_eval: detail::run_hypergeom(config, m); break;
  }
  out.commit();
  return report;
}

}  // namespace loewner::cli

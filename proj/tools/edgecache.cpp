// edgecache command-line driver.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgecache/config.hpp"
#include "edgecache/sim.hpp"

namespace ec = edgecache;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct CommonArgs {
  std::string scenario_path;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> realizations;
  std::optional<std::size_t> workers;
  std::string out;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool simulation) {
  cmd->add_option("--scenario", a.scenario_path, "Scenario config (JSON)");
  cmd->add_option("--preset", a.preset, "Bundled scenario name (see `presets`)");
  cmd->add_option("-o,--out", a.out, "Output CSV path (default: config output or stdout)");
  cmd->add_option("--override", a.overrides, "KEY=VALUE config override (repeatable)");
  cmd->add_option("--seed", a.seed, "Base seed");
  if (simulation) {
    cmd->add_option("--realizations", a.realizations, "Number of Monte Carlo realizations");
    cmd->add_option("--workers", a.workers, "Worker threads (env EDGECACHE_WORKERS)");
  }
}

ec::ConfigFile load(const CommonArgs& a) {
  if (a.scenario_path.empty() == a.preset.empty()) {
    throw ec::ConfigError("", "give exactly one of --scenario or --preset");
  }
  nlohmann::json doc =
      a.preset.empty() ? ec::read_config_json(a.scenario_path) : ec::preset_json(a.preset);
  for (const auto& o : a.overrides) ec::apply_override(doc, o);
  if (a.seed) doc["scenario"]["seed"] = *a.seed;
  if (a.realizations) doc["scenario"]["realizations"] = *a.realizations;
  const std::string source = a.preset.empty() ? a.scenario_path : "preset " + a.preset;
  try {
    return ec::parse_config(doc);
  } catch (const ec::ConfigError& e) {
    throw ec::ConfigError(source + ":" + e.where(), e.what());
  }
}

std::size_t worker_count(const CommonArgs& a, std::size_t configured) {
  if (a.workers) return *a.workers;
  if (const char* env = std::getenv("EDGECACHE_WORKERS")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw ec::ConfigError("EDGECACHE_WORKERS", "expected a nonnegative integer");
    }
  }
  return configured;
}

// Writes through `sink` to the chosen path, or to stdout when empty.
template <typename Sink>
void emit(const std::string& path, Sink&& sink) {
  if (path.empty()) {
    sink(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  sink(out);
  if (!out) throw std::runtime_error("write failed for " + path);
}

void print_summary(std::ostream& os, const ec::HitReport& report) {
  os << std::left << std::setw(18) << "policy" << std::right << std::setw(8) << "r_b"
     << std::setw(8) << "n_bs" << std::setw(7) << "gamma" << std::setw(8) << "alpha"
     << std::setw(6) << "q" << std::setw(10) << "hit" << std::setw(10) << "ci95"
     << std::setw(12) << "requests" << '\n';
  for (const auto& r : report.rows) {
    os << std::left << std::setw(18) << r.policy << std::right << std::fixed
       << std::setprecision(3) << std::setw(8) << r.r_b << std::setw(8) << r.n_bs
       << std::setprecision(2) << std::setw(7) << r.gamma << std::setprecision(4)
       << std::setw(8) << r.alpha << std::setw(6)
       << (r.q ? std::to_string(*r.q).substr(0, 4) : std::string("-")) << std::setprecision(4)
       << std::setw(10) << r.hit << std::setw(10) << r.ci95 << std::setw(12) << r.requests
       << '\n';
    os.unsetf(std::ios::floatfield);
  }
}

int cmd_run(const CommonArgs& a) {
  auto cfg = load(a);
  cfg.scenario.workers = worker_count(a, cfg.scenario.workers);
  const std::string out = a.out.empty() ? cfg.output.csv : a.out;
  std::ostream& summary = out.empty() ? std::cerr : std::cout;

  if (cfg.task == ec::ConfigTask::coverage_table) {
    const auto rows = ec::coverage_table(cfg);
    emit(out, [&](std::ostream& os) { ec::write_coverage_csv(os, rows); });
    for (const auto& r : rows) {
      summary << "r_b=" << r.r_b << " " << ec::to_string(r.placement) << " n_bs=" << r.n_bs
              << " p0=" << r.p0 << '\n';
    }
    return 0;
  }

  const auto report = cfg.sweep ? ec::sweep(cfg.scenario, cfg.sweep->axis, cfg.sweep->values)
                                : ec::run_experiment(cfg.scenario);
  emit(out, [&](std::ostream& os) { ec::write_hit_csv(os, report); });
  print_summary(summary, report);
  return 0;
}

int cmd_analytic(const CommonArgs& a) {
  const auto cfg = load(a);
  if (cfg.scenario.traffic.kind != ec::TrafficKind::irm) {
    std::cerr << "edgecache: analytic curves are unsupported for temporal (snm) traffic\n";
    return kExitConfig;
  }
  if (cfg.analytic_model == ec::AnalyticModel::network &&
      cfg.scenario.geometry.placement != ec::Placement::explicit_positions) {
    for (const auto& sc : ec::expand_sweep(cfg)) {
      const double r = sc.geometry.coverage_radius;
      if (std::numbers::pi * r * r <= 1.0 / sc.geometry.intensity) {
        std::cerr << "edgecache: warning: r_b=" << r
                  << " gives a coverage cell no larger than the mean Voronoi cell; "
                     "the multi_lru_one curve is outside its validity range\n";
      }
    }
  }
  const auto rows = ec::analytic_curves(cfg);
  const std::string out = a.out.empty() ? cfg.output.analytic_csv : a.out;
  emit(out, [&](std::ostream& os) { ec::write_analytic_csv(os, rows); });
  return 0;
}

int cmd_stream(const CommonArgs& a, std::size_t index) {
  const auto cfg = load(a);
  const auto& sc = cfg.scenario;
  const auto seed = ec::derive_seed(ec::realization_seed(sc.seed, index), ec::seed_tag::traffic);
  ec::RequestStream stream;
  if (sc.traffic.kind == ec::TrafficKind::irm) {
    const ec::ZipfCatalogue cat(sc.traffic.catalogue_size, sc.traffic.gamma);
    stream = ec::sample_irm_stream(sc.traffic.lambda_u, sc.geometry.window, sc.duration, cat, seed);
  } else {
    stream = ec::sample_snm_stream(sc.traffic.lambda_c_per_day, sc.traffic.snm,
                                   sc.geometry.window, sc.duration, seed);
  }
  emit(a.out, [&](std::ostream& os) { ec::write_stream_csv(os, stream); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge caching under multi-coverage: simulation and analytic hit curves"};
  app.require_subcommand(1);

  CommonArgs run_args;
  auto* run = app.add_subcommand("run", "Run a simulation experiment or sweep, write CSV");
  add_common(run, run_args, true);

  CommonArgs analytic_args;
  auto* analytic = app.add_subcommand("analytic", "Write analytic hit curves on the config grid");
  add_common(analytic, analytic_args, false);

  auto* presets = app.add_subcommand("presets", "List bundled scenarios");

  CommonArgs stream_args;
  std::size_t stream_index = 0;
  auto* stream = app.add_subcommand("stream", "Dump the request stream of one realization");
  add_common(stream, stream_args, false);
  stream->add_option("--realization", stream_index, "Realization index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*presets) {
      for (const auto& name : ec::preset_names()) std::cout << name << '\n';
      return 0;
    }
    if (*run) return cmd_run(run_args);
    if (*analytic) return cmd_analytic(analytic_args);
    if (*stream) return cmd_stream(stream_args, stream_index);
  } catch (const ec::ConfigError& e) {
    std::cerr << "edgecache: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ec::SolverError& e) {
    std::cerr << "edgecache: solver error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const ec::InvalidParameter& e) {
    std::cerr << "edgecache: invalid parameter: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "edgecache: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}

#include "edgecache/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "edgecache/csv.hpp"

namespace edgecache {

using nlohmann::json;

namespace {

// Walks one JSON object, remembering which keys were read so that leftovers
// can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) throw ConfigError(where_.empty() ? "/" : where_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key) && !j_.at(key).is_null(); }
  std::string path(const std::string& key) const { return where_ + "/" + key; }

  void mark(const std::string& key) { seen_.insert(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return j_.at(key);
  }

  double number(const std::string& key, double fallback) {
    seen_.insert(key);
    if (!has(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_number()) throw ConfigError(path(key), "expected a number");
    return v.get<double>();
  }

  double positive(const std::string& key, double fallback) {
    const double v = number(key, fallback);
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(path(key), "must be positive");
    return v;
  }

  std::uint64_t unsigned_int(const std::string& key, std::uint64_t fallback) {
    seen_.insert(key);
    if (!has(key)) return fallback;
    const auto& v = j_.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
      return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    if (v.is_number_float()) {
      const double d = v.get<double>();
      if (d >= 0.0 && d == std::floor(d) && d < 1.8e19) return static_cast<std::uint64_t>(d);
    }
    throw ConfigError(path(key), "expected a nonnegative integer");
  }

  std::string string(const std::string& key, const std::string& fallback) {
    seen_.insert(key);
    if (!has(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_string()) throw ConfigError(path(key), "expected a string");
    return v.get<std::string>();
  }

  template <typename F>
  auto parsed(const std::string& key, const std::string& fallback, F&& parse) {
    const std::string s = string(key, fallback);
    try {
      return parse(s);
    } catch (const InvalidParameter& e) {
      throw ConfigError(path(key), e.what());
    }
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(path(it.key()), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

std::vector<Point> parse_points(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where, "expected an array of [x, y] pairs");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& p = j[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw ConfigError(where + "/" + std::to_string(i), "expected [x, y]");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back({p.x, p.y});
  return a;
}

SnmLaw parse_snm(const json& j, const std::string& where, double& lambda_c) {
  ObjectReader r(j, where);
  SnmLaw law;
  lambda_c = r.number("lambda_c_per_day", lambda_c);
  if (lambda_c < 0.0) throw ConfigError(r.path("lambda_c_per_day"), "must be nonnegative");
  if (r.has("lifespan")) {
    ObjectReader l(r.raw("lifespan"), r.path("lifespan"));
    const auto kind = l.string("law", "exponential");
    if (kind == "exponential") {
      law.lifespan.kind = LifespanLaw::Kind::exponential;
    } else if (kind == "fixed") {
      law.lifespan.kind = LifespanLaw::Kind::fixed;
    } else {
      throw ConfigError(l.path("law"), "expected exponential or fixed");
    }
    law.lifespan.mean_days = l.positive("mean_days", law.lifespan.mean_days);
    l.finish();
  } else {
    r.mark("lifespan");
  }
  if (r.has("volume")) {
    ObjectReader v(r.raw("volume"), r.path("volume"));
    const auto kind = v.string("law", "pareto");
    if (kind == "pareto") {
      law.volume.kind = VolumeLaw::Kind::pareto;
    } else if (kind == "fixed") {
      law.volume.kind = VolumeLaw::Kind::fixed;
    } else {
      throw ConfigError(v.path("law"), "expected pareto or fixed");
    }
    law.volume.shape = v.positive("shape", law.volume.shape);
    law.volume.minimum = v.positive("minimum", law.volume.minimum);
    if (law.volume.kind == VolumeLaw::Kind::pareto && !(law.volume.shape > 1.0)) {
      throw ConfigError(v.path("shape"), "Pareto shape must exceed 1 for a finite mean");
    }
    v.finish();
  }
  if (r.has("shape")) {
    const auto& s = r.raw("shape");
    if (s.is_string()) {
      if (s == "rectangular") {
        law.shape = SnmShape::rectangular();
      } else {
        throw ConfigError(r.path("shape"), "expected rectangular or a knot list");
      }
    } else {
      law.shape.knots = parse_points(s, r.path("shape"));
    }
    try {
      law.shape.validate();
    } catch (const InvalidParameter& e) {
      throw ConfigError(r.path("shape"), e.what());
    }
  }
  law.warmup_lifespans = r.number("warmup_lifespans", law.warmup_lifespans);
  if (law.warmup_lifespans < 0.0) throw ConfigError(r.path("warmup_lifespans"), "must be >= 0");
  r.finish();
  return law;
}

std::vector<SimPolicy> parse_policies(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ConfigError(where, "expected a nonempty policy list");
  std::vector<SimPolicy> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    SimPolicy p;
    try {
      if (j[i].is_string()) {
        p.kind = parse_sim_policy(j[i].get<std::string>());
      } else {
        ObjectReader r(j[i], at);
        p.kind = r.parsed("kind", "", parse_sim_policy);
        if (r.has("q")) {
          if (p.kind != SimPolicyKind::q_multi_lru_all) {
            throw ConfigError(r.path("q"), "q applies only to q_multi_lru_all");
          }
          p.q = r.number("q", 1.0);
        }
        r.finish();
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const InvalidParameter& e) {
      throw ConfigError(at, e.what());
    }
    if (!(p.q > 0.0 && p.q <= 1.0)) throw ConfigError(at, "q must lie in (0, 1]");
    out.push_back(p);
  }
  return out;
}

Scenario parse_scenario(const json& j, const std::string& where) {
  ObjectReader r(j, where);
  for (const char* k : {"window", "stations", "snm", "policies", "pop"}) r.mark(k);
  Scenario sc;
  auto& g = sc.geometry;
  g.placement = r.parsed("placement", "ppp", parse_placement);
  g.intensity = r.positive("lambda_b", g.intensity);
  if (r.has("window")) {
    const auto& w = r.raw("window");
    if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number() ||
        !(w[0].get<double>() > 0.0) || !(w[1].get<double>() > 0.0)) {
      throw ConfigError(r.path("window"), "expected [width, height] with positive entries");
    }
    g.window = {w[0].get<double>(), w[1].get<double>()};
  } else {
    g.window = {12.0, 12.0};
  }
  g.coverage_radius = r.positive("r_b", g.coverage_radius);
  g.boundary = r.parsed("boundary", "torus", parse_boundary);
  if (r.has("stations")) g.stations = parse_points(r.raw("stations"), r.path("stations"));
  if (g.placement == Placement::explicit_positions && g.stations.empty()) {
    throw ConfigError(r.path("stations"), "explicit placement needs station positions");
  }
  if (g.placement != Placement::explicit_positions && !g.stations.empty()) {
    throw ConfigError(r.path("stations"), "stations are only used with explicit placement");
  }

  auto& t = sc.traffic;
  t.kind = r.parsed("traffic", "irm", parse_traffic_kind);
  t.lambda_u = r.positive("lambda_u", t.lambda_u);
  t.catalogue_size = r.unsigned_int("catalogue_size", t.catalogue_size);
  if (t.catalogue_size == 0) throw ConfigError(r.path("catalogue_size"), "must be at least 1");
  t.gamma = r.number("gamma", t.gamma);
  if (!(t.gamma >= 0.0)) throw ConfigError(r.path("gamma"), "must be nonnegative");
  if (r.has("snm")) t.snm = parse_snm(r.raw("snm"), r.path("snm"), t.lambda_c_per_day);

  const bool has_k = r.has("cache_size");
  const bool has_alpha = r.has("alpha");
  sc.cache_size = r.unsigned_int("cache_size", sc.cache_size);
  if (has_alpha) {
    const double alpha = r.number("alpha", 0.0);
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError(r.path("alpha"), "must lie in [0, 1]");
    const double f = static_cast<double>(t.catalogue_size);
    const auto k = static_cast<std::size_t>(std::llround(alpha * f));
    if (has_k && std::abs(static_cast<double>(sc.cache_size) - alpha * f) > 0.5) {
      throw ConfigError(r.path("alpha"), "inconsistent with cache_size / catalogue_size");
    }
    sc.cache_size = k;
  }

  if (r.has("policies")) sc.policies = parse_policies(r.raw("policies"), r.path("policies"));

  int duration_keys = 0;
  for (const char* k : {"duration_sec", "duration_days", "requests_per_realization"}) {
    r.mark(k);
    duration_keys += r.has(k) ? 1 : 0;
  }
  if (duration_keys > 1) {
    throw ConfigError(where, "give only one of duration_sec, duration_days, requests_per_realization");
  }
  if (r.has("duration_days")) {
    sc.duration = r.positive("duration_days", 1.0) * kSecondsPerDay;
  } else if (r.has("requests_per_realization")) {
    if (t.kind != TrafficKind::irm) {
      throw ConfigError(r.path("requests_per_realization"), "only defined for IRM traffic");
    }
    const double n = r.positive("requests_per_realization", 1.0);
    sc.duration = n / (t.lambda_u * g.window.area());
  } else {
    sc.duration = r.positive("duration_sec", sc.duration);
  }
  r.mark("duration_days");
  r.mark("requests_per_realization");

  sc.warmup_fraction = r.number("warmup_fraction", sc.warmup_fraction);
  if (!(sc.warmup_fraction >= 0.0 && sc.warmup_fraction < 1.0)) {
    throw ConfigError(r.path("warmup_fraction"), "must lie in [0, 1)");
  }
  sc.realizations = r.unsigned_int("realizations", sc.realizations);
  if (sc.realizations == 0) throw ConfigError(r.path("realizations"), "must be at least 1");
  sc.seed = r.unsigned_int("seed", kDefaultSeed);
  sc.workers = r.unsigned_int("workers", 0);

  if (r.has("pop")) {
    ObjectReader p(r.raw("pop"), r.path("pop"));
    sc.pop.update_interval =
        p.positive("delta_t_up_days", sc.pop.update_interval / kSecondsPerDay) * kSecondsPerDay;
    sc.pop.estimation_window =
        p.positive("delta_t_es_days", sc.pop.estimation_window / kSecondsPerDay) * kSecondsPerDay;
    sc.pop.gfi_samples_per_station =
        p.positive("gfi_samples_per_station", sc.pop.gfi_samples_per_station);
    p.finish();
  }
  sc.union_surface = r.parsed("union_surface", "formula", parse_union_surface_mode);
  sc.coverage_samples = r.unsigned_int("coverage_samples", sc.coverage_samples);
  if (sc.coverage_samples == 0) throw ConfigError(r.path("coverage_samples"), "must be positive");
  r.finish();

  try {
    sc.validate();
  } catch (const InvalidParameter& e) {
    throw ConfigError(where, e.what());
  }
  return sc;
}

json scenario_json(const Scenario& sc) {
  json j;
  const auto& g = sc.geometry;
  j["placement"] = to_string(g.placement);
  j["lambda_b"] = g.intensity;
  j["window"] = {g.window.width, g.window.height};
  j["r_b"] = g.coverage_radius;
  j["boundary"] = to_string(g.boundary);
  if (!g.stations.empty()) j["stations"] = points_json(g.stations);
  const auto& t = sc.traffic;
  j["traffic"] = to_string(t.kind);
  j["lambda_u"] = t.lambda_u;
  j["catalogue_size"] = t.catalogue_size;
  j["gamma"] = t.gamma;
  j["snm"] = {
      {"lambda_c_per_day", t.lambda_c_per_day},
      {"lifespan",
       {{"law", t.snm.lifespan.kind == LifespanLaw::Kind::exponential ? "exponential" : "fixed"},
        {"mean_days", t.snm.lifespan.mean_days}}},
      {"volume",
       {{"law", t.snm.volume.kind == VolumeLaw::Kind::pareto ? "pareto" : "fixed"},
        {"shape", t.snm.volume.shape},
        {"minimum", t.snm.volume.minimum}}},
      {"shape", points_json(t.snm.shape.knots)},
      {"warmup_lifespans", t.snm.warmup_lifespans},
  };
  j["cache_size"] = sc.cache_size;
  json pols = json::array();
  for (const auto& p : sc.policies) {
    if (p.kind == SimPolicyKind::q_multi_lru_all) {
      pols.push_back({{"kind", to_string(p.kind)}, {"q", p.q}});
    } else {
      pols.push_back(to_string(p.kind));
    }
  }
  j["policies"] = pols;
  j["duration_sec"] = sc.duration;
  j["warmup_fraction"] = sc.warmup_fraction;
  j["realizations"] = sc.realizations;
  j["seed"] = sc.seed;
  j["workers"] = sc.workers;
  j["pop"] = {{"delta_t_up_days", sc.pop.update_interval / kSecondsPerDay},
              {"delta_t_es_days", sc.pop.estimation_window / kSecondsPerDay},
              {"gfi_samples_per_station", sc.pop.gfi_samples_per_station}};
  j["union_surface"] = to_string(sc.union_surface);
  j["coverage_samples"] = sc.coverage_samples;
  return j;
}

// Keys of which a patch or override replaces the whole group.
void drop_exclusive_siblings(json& scenario, const json& patch) {
  static const std::vector<std::vector<std::string>> groups{
      {"duration_sec", "duration_days", "requests_per_realization"}, {"cache_size", "alpha"}};
  if (!scenario.is_object() || !patch.is_object()) return;
  for (const auto& group : groups) {
    const bool touched = std::any_of(group.begin(), group.end(),
                                     [&](const std::string& k) { return patch.contains(k); });
    if (!touched) continue;
    for (const auto& k : group) {
      if (!patch.contains(k)) scenario.erase(k);
    }
  }
}

const std::set<std::string>& top_level_keys() {
  static const std::set<std::string> keys{"schema_version", "preset", "task", "analytic_model",
                                          "scenario", "sweep", "output"};
  return keys;
}

std::string task_name(ConfigTask t) {
  return t == ConfigTask::experiment ? "experiment" : "coverage_table";
}

std::string model_name(AnalyticModel m) {
  return m == AnalyticModel::network ? "network" : "two_cache";
}

}  // namespace

ConfigFile parse_config(const json& input) {
  if (!input.is_object()) throw ConfigError("/", "expected an object");
  json doc = input;
  if (doc.contains("preset") && doc.at("preset").is_string()) {
    // Keys given alongside a preset name patch the bundled document.
    json base = preset_json(doc.at("preset").get<std::string>());
    if (doc.contains("scenario")) drop_exclusive_siblings(base["scenario"], doc.at("scenario"));
    base.merge_patch(doc);
    doc = std::move(base);
  }

  ObjectReader r(doc, "");
  r.mark("output");
  ConfigFile cfg;
  const auto version = r.unsigned_int("schema_version", kConfigSchemaVersion);
  if (version != static_cast<std::uint64_t>(kConfigSchemaVersion)) {
    throw ConfigError("/schema_version", "unsupported schema version " + std::to_string(version));
  }
  cfg.preset = r.string("preset", "");
  const auto task = r.string("task", "experiment");
  if (task == "experiment") {
    cfg.task = ConfigTask::experiment;
  } else if (task == "coverage_table") {
    cfg.task = ConfigTask::coverage_table;
  } else {
    throw ConfigError("/task", "expected experiment or coverage_table");
  }
  const auto model = r.string("analytic_model", "network");
  if (model == "network") {
    cfg.analytic_model = AnalyticModel::network;
  } else if (model == "two_cache") {
    cfg.analytic_model = AnalyticModel::two_cache;
  } else {
    throw ConfigError("/analytic_model", "expected network or two_cache");
  }
  r.mark("scenario");
  cfg.scenario = parse_scenario(r.has("scenario") ? r.raw("scenario") : json::object(), "/scenario");

  if (r.has("sweep")) {
    ObjectReader s(r.raw("sweep"), "/sweep");
    SweepSpec spec;
    spec.axis = s.parsed("axis", "", parse_sweep_axis);
    if (!s.has("values") || !s.raw("values").is_array() || s.raw("values").empty()) {
      throw ConfigError("/sweep/values", "expected a nonempty array of numbers");
    }
    const auto& vals = s.raw("values");
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (!vals[i].is_number()) {
        throw ConfigError("/sweep/values/" + std::to_string(i), "expected a number");
      }
      spec.values.push_back(vals[i].get<double>());
    }
    s.finish();
    cfg.sweep = std::move(spec);
    for (std::size_t i = 0; i < cfg.sweep->values.size(); ++i) {
      try {
        apply_axis(cfg.scenario, cfg.sweep->axis, cfg.sweep->values[i]).validate();
      } catch (const InvalidParameter& e) {
        throw ConfigError("/sweep/values/" + std::to_string(i), e.what());
      }
    }
  } else {
    r.mark("sweep");
  }

  if (r.has("output")) {
    ObjectReader o(r.raw("output"), "/output");
    cfg.output.csv = o.string("csv", "");
    cfg.output.analytic_csv = o.string("analytic_csv", "");
    o.finish();
  }
  r.finish();
  return cfg;
}

ConfigFile parse_config_text(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source, std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

json read_config_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string(), std::string("invalid JSON: ") + e.what());
  }
}

ConfigFile load_config(const std::filesystem::path& path) {
  const json doc = read_config_json(path);
  try {
    return parse_config(doc);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ":" + e.where(), e.what());
  }
}

json to_json(const ConfigFile& cfg) {
  json j;
  j["schema_version"] = cfg.schema_version;
  if (!cfg.preset.empty()) j["preset"] = cfg.preset;
  j["task"] = task_name(cfg.task);
  j["analytic_model"] = model_name(cfg.analytic_model);
  j["scenario"] = scenario_json(cfg.scenario);
  if (cfg.sweep) {
    j["sweep"] = {{"axis", to_string(cfg.sweep->axis)}, {"values", cfg.sweep->values}};
  } else {
    j["sweep"] = nullptr;
  }
  j["output"] = {{"csv", cfg.output.csv}, {"analytic_csv", cfg.output.analytic_csv}};
  return j;
}

std::string serialize_config(const ConfigFile& cfg) { return to_json(cfg).dump(2) + "\n"; }

void apply_override(json& doc, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError(std::string(assignment), "override must look like KEY=VALUE");
  }
  const std::string key(assignment.substr(0, eq));
  const std::string text(assignment.substr(eq + 1));

  std::vector<std::string> parts;
  std::stringstream ks(key);
  for (std::string part; std::getline(ks, part, '.');) {
    if (part.empty()) throw ConfigError(key, "empty path component in override key");
    parts.push_back(part);
  }
  if (!top_level_keys().count(parts.front())) parts.insert(parts.begin(), "scenario");

  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }
  if (!doc.is_object()) throw ConfigError("/", "expected an object");
  json* node = &doc;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    json& child = (*node)[parts[i]];
    if (child.is_null()) child = json::object();
    if (!child.is_object()) throw ConfigError(key, "'" + parts[i] + "' is not an object");
    node = &child;
  }
  if (parts.size() == 2 && parts.front() == "scenario") {
    drop_exclusive_siblings(*node, json{{parts.back(), nullptr}});
  }
  (*node)[parts.back()] = std::move(value);
}

std::vector<Scenario> expand_sweep(const ConfigFile& cfg) {
  if (!cfg.sweep) return {cfg.scenario};
  std::vector<Scenario> out;
  for (double v : cfg.sweep->values) out.push_back(apply_axis(cfg.scenario, cfg.sweep->axis, v));
  return out;
}

std::vector<AnalyticRow> analytic_curves(const ConfigFile& cfg) {
  if (cfg.scenario.traffic.kind != TrafficKind::irm) {
    throw InvalidParameter("no analytic model for temporal (SNM) traffic");
  }
  const bool alpha_sweep = cfg.sweep && cfg.sweep->axis == SweepAxis::alpha;
  std::vector<AnalyticRow> rows;
  for (const auto& sc : expand_sweep(cfg)) {
    const auto f = sc.traffic.catalogue_size;
    const auto pop = zipf_pmf(f, sc.traffic.gamma);
    const auto ctx = ExperimentContext::build(sc);
    AnalyticRow base;
    base.r_b = sc.geometry.coverage_radius;
    base.n_bs = ctx.profile.mean_coverage;
    base.gamma = sc.traffic.gamma;
    base.alpha = sc.alpha();
    auto emit = [&](const std::string& policy, double hit) {
      AnalyticRow row = base;
      row.policy = policy;
      row.analytic_hit = hit;
      rows.push_back(row);
    };

    const char* names[] = {"multi_lru_one", "multi_lru_all", "single_lru"};
    if (sc.cache_size >= f) {
      if (!alpha_sweep) {
        throw SolverError("no finite characteristic time: cache_size " +
                          std::to_string(sc.cache_size) + " >= catalogue_size " +
                          std::to_string(f));
      }
      // Saturated end of an alpha sweep: every cache holds the catalogue.
      const double covered = 1.0 - ctx.profile.pm.front();
      for (const char* n : names) emit(n, covered);
      continue;
    }

    const double wa = sc.geometry.window.area();
    const bool explicit_field = sc.geometry.placement == Placement::explicit_positions;
    const double voronoi = explicit_field
                               ? wa / static_cast<double>(sc.geometry.stations.size())
                               : 1.0 / sc.geometry.intensity;
    if (cfg.analytic_model == AnalyticModel::two_cache) {
      emit(names[0], two_cache_one_hit(pop, sc.traffic.lambda_u, voronoi, sc.cache_size).total_hit);
      emit(names[1], two_cache_all_hit(pop, sc.traffic.lambda_u, wa, sc.cache_size).total_hit);
      emit(names[2], single_lru_hit(pop, sc.traffic.lambda_u, voronoi, sc.cache_size).total_hit);
      continue;
    }
    AnalyticModelParams p;
    p.popularity = pop;
    p.lambda_u = sc.traffic.lambda_u;
    p.cache_size = sc.cache_size;
    p.voronoi_area = voronoi;
    p.coverage_area = std::numbers::pi * sc.geometry.coverage_radius * sc.geometry.coverage_radius;
    p.profile = ctx.profile;
    emit(names[0], multi_lru_one_hit(p).total_hit);
    emit(names[1], multi_lru_all_hit(p).total_hit);
    emit(names[2], network_single_lru_hit(p).total_hit);
  }
  return rows;
}

std::vector<CoverageRow> coverage_table(const ConfigFile& cfg) {
  std::vector<CoverageRow> rows;
  for (const auto& sc : expand_sweep(cfg)) {
    const auto ctx = ExperimentContext::build(sc);
    rows.push_back({sc.geometry.coverage_radius, sc.geometry.placement, ctx.profile.mean_coverage,
                    ctx.profile.pm.front()});
  }
  return rows;
}

void write_coverage_csv(std::ostream& os, std::span<const CoverageRow> rows) {
  os << "r_b,placement,n_bs,p0\n";
  for (const auto& r : rows) {
    os << csv::format(r.r_b) << ',' << to_string(r.placement) << ',' << csv::format(r.n_bs) << ','
       << csv::format(r.p0) << '\n';
  }
}

}  // namespace edgecache

#include <map>

#include "edgecache/config.hpp"

namespace edgecache {

namespace {

const std::map<std::string, const char*>& preset_table() {
  static const std::map<std::string, const char*> table{
      {"fig3a_verif_one", R"({
  "task": "experiment",
  "analytic_model": "network",
  "scenario": {
    "placement": "ppp", "lambda_b": 0.5, "window": [12, 12], "boundary": "torus",
    "traffic": "irm", "lambda_u": 0.023, "catalogue_size": 10000, "gamma": 0.78,
    "cache_size": 100, "policies": ["multi_lru_one"],
    "duration_sec": 100000, "warmup_fraction": 0.3, "realizations": 20
  },
  "sweep": {"axis": "r_b", "values": [0.6, 0.8, 1.0, 1.13, 1.38, 1.6, 1.8, 2.0, 2.25]}
})"},
      {"fig3b_verif_all", R"({
  "task": "experiment",
  "analytic_model": "network",
  "scenario": {
    "placement": "ppp", "lambda_b": 0.5, "window": [12, 12], "boundary": "torus",
    "traffic": "irm", "lambda_u": 0.023, "catalogue_size": 10000, "gamma": 0.78,
    "cache_size": 100, "policies": ["multi_lru_all"],
    "duration_sec": 100000, "warmup_fraction": 0.3, "realizations": 20
  },
  "sweep": {"axis": "r_b", "values": [0.6, 0.8, 1.0, 1.13, 1.38, 1.6, 1.8, 2.0, 2.25]}
})"},
      {"fig4_ppp_alpha1", R"({
  "task": "experiment",
  "scenario": {
    "placement": "ppp", "lambda_b": 0.5, "window": [12, 12], "boundary": "torus",
    "traffic": "irm", "lambda_u": 0.023, "catalogue_size": 10000, "gamma": 0.78,
    "alpha": 0.01,
    "policies": ["single_lru", "multi_lru_one", "multi_lru_all", "lfu", "mpc", "gfi", "pbp"],
    "duration_sec": 100000, "warmup_fraction": 0.3, "realizations": 10
  },
  "sweep": {"axis": "r_b", "values": [0.798, 1.128, 1.382, 1.596, 1.784, 1.954]}
})"},
      {"fig4_lattice_alpha1", R"({
  "task": "experiment",
  "scenario": {
    "placement": "lattice", "lambda_b": 0.5, "window": [12, 12], "boundary": "torus",
    "traffic": "irm", "lambda_u": 0.023, "catalogue_size": 10000, "gamma": 0.78,
    "alpha": 0.01,
    "policies": ["single_lru", "multi_lru_one", "multi_lru_all", "mpc", "gfi", "pbp"],
    "duration_sec": 100000, "warmup_fraction": 0.3, "realizations": 10
  },
  "sweep": {"axis": "r_b", "values": [0.798, 1.128, 1.382, 1.596, 1.784, 1.954]}
})"},
      {"fig4_lattice_alpha5", R"({
  "task": "experiment",
  "scenario": {
    "placement": "lattice", "lambda_b": 0.5, "window": [12, 12], "boundary": "torus",
    "traffic": "irm", "lambda_u": 0.023, "catalogue_size": 10000, "gamma": 0.78,
    "alpha": 0.05,
    "policies": ["single_lru", "multi_lru_one", "multi_lru_all", "mpc", "gfi", "pbp"],
    "duration_sec": 100000, "warmup_fraction": 0.3, "realizations": 10
  },
  "sweep": {"axis": "r_b", "values": [0.798, 1.128, 1.382, 1.596, 1.784, 1.954]}
})"},
      {"fig_qlru", R"({
  "task": "experiment",
  "scenario": {
    "placement": "ppp", "lambda_b": 0.5, "window": [12, 12], "boundary": "torus",
    "traffic": "irm", "lambda_u": 0.023, "catalogue_size": 10000, "gamma": 0.78,
    "alpha": 0.01, "r_b": 1.382,
    "policies": [{"kind": "q_multi_lru_all", "q": 1.0}],
    "duration_sec": 300000, "warmup_fraction": 0.3, "realizations": 10
  },
  "sweep": {"axis": "q", "values": [0.1, 0.25, 0.5, 0.75, 1.0]}
})"},
      {"fig_gamma_sweep", R"({
  "task": "experiment",
  "scenario": {
    "placement": "ppp", "lambda_b": 0.5, "window": [12, 12], "boundary": "torus",
    "traffic": "irm", "lambda_u": 0.023, "catalogue_size": 10000, "gamma": 0.78,
    "alpha": 0.01, "r_b": 1.382,
    "policies": ["single_lru", "multi_lru_one", "multi_lru_all"],
    "duration_sec": 100000, "warmup_fraction": 0.3, "realizations": 10
  },
  "sweep": {"axis": "gamma", "values": [0.4, 0.6, 0.78, 1.0, 1.2]}
})"},
      {"fig_alpha_sweep", R"({
  "task": "experiment",
  "scenario": {
    "placement": "ppp", "lambda_b": 0.5, "window": [12, 12], "boundary": "torus",
    "traffic": "irm", "lambda_u": 0.023, "catalogue_size": 10000, "gamma": 0.78,
    "alpha": 0.01, "r_b": 1.382,
    "policies": ["single_lru", "multi_lru_one", "multi_lru_all"],
    "duration_sec": 100000, "warmup_fraction": 0.3, "realizations": 10
  },
  "sweep": {"axis": "alpha", "values": [0.001, 0.005, 0.01, 0.05, 0.1, 0.2, 0.5, 1.0]}
})"},
      {"table2_mapping", R"({
  "task": "coverage_table",
  "scenario": {
    "placement": "ppp", "lambda_b": 0.5, "window": [12, 12], "boundary": "torus",
    "coverage_samples": 100000
  },
  "sweep": {"axis": "r_b", "values": [0.798, 1.128, 1.382, 1.596, 1.784, 1.954]}
})"},
      {"twocache_appendix", R"({
  "task": "experiment",
  "analytic_model": "two_cache",
  "scenario": {
    "placement": "explicit", "stations": [[0.5, 0.5], [1.5, 0.5]],
    "window": [2, 1], "boundary": "open", "r_b": 10,
    "traffic": "irm", "lambda_u": 0.023, "catalogue_size": 1000, "gamma": 0.78,
    "cache_size": 50, "policies": ["multi_lru_one", "multi_lru_all"],
    "requests_per_realization": 100000, "warmup_fraction": 0.3, "realizations": 4
  },
  "sweep": {"axis": "alpha", "values": [0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.5]}
})"},
      {"temporal_properties", R"({
  "task": "experiment",
  "scenario": {
    "placement": "ppp", "lambda_b": 0.5, "window": [12, 12], "boundary": "torus",
    "r_b": 1.382, "traffic": "snm",
    "snm": {
      "lambda_c_per_day": 200,
      "lifespan": {"law": "exponential", "mean_days": 0.5},
      "volume": {"law": "pareto", "shape": 2, "minimum": 250},
      "shape": "rectangular",
      "warmup_lifespans": 5
    },
    "cache_size": 200,
    "policies": ["single_lru", "multi_lru_one", "multi_lru_all", "windowed_mpc"],
    "duration_days": 4, "warmup_fraction": 0.25, "realizations": 4,
    "pop": {"delta_t_up_days": 0.25, "delta_t_es_days": 0.5}
  }
})"},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{
      "fig3a_verif_one",  "fig3b_verif_all", "fig4_ppp_alpha1", "fig4_lattice_alpha1",
      "fig4_lattice_alpha5", "fig_qlru",     "fig_gamma_sweep", "fig_alpha_sweep",
      "table2_mapping",   "twocache_appendix", "temporal_properties"};
  return names;
}

nlohmann::json preset_json(const std::string& name) {
  const auto& table = preset_table();
  const auto it = table.find(name);
  if (it == table.end()) throw ConfigError("preset", "unknown preset '" + name + "'");
  auto doc = nlohmann::json::parse(it->second);
  doc["preset"] = name;
  return doc;
}

}  // namespace edgecache

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgecache/analysis.hpp"
#include "edgecache/error.hpp"
#include "edgecache/sim.hpp"

namespace edgecache {

inline constexpr int kConfigSchemaVersion = 1;

/// Seed used when neither the config nor the command line sets one.
inline constexpr std::uint64_t kDefaultSeed = 20190101;

/// Malformed or unreadable configuration. `where` is a JSON pointer or a path.
class ConfigError : public InvalidParameter {
 public:
  ConfigError(std::string where, const std::string& what)
      : InvalidParameter(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

enum class ConfigTask { experiment, coverage_table };
enum class AnalyticModel { network, two_cache };

struct SweepSpec {
  SweepAxis axis = SweepAxis::r_b;
  std::vector<double> values;
  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct OutputSpec {
  std::string csv;
  std::string analytic_csv;
  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct ConfigFile {
  int schema_version = kConfigSchemaVersion;
  std::string preset;
  ConfigTask task = ConfigTask::experiment;
  AnalyticModel analytic_model = AnalyticModel::network;
  Scenario scenario{};
  std::optional<SweepSpec> sweep;
  OutputSpec output{};
  friend bool operator==(const ConfigFile&, const ConfigFile&) = default;
};

ConfigFile parse_config(const nlohmann::json& doc);
ConfigFile parse_config_text(std::string_view text, const std::string& source = "<config>");
/// Throws ConfigError naming `path` if it cannot be read.
nlohmann::json read_config_json(const std::filesystem::path& path);
ConfigFile load_config(const std::filesystem::path& path);

nlohmann::json to_json(const ConfigFile& config);
std::string serialize_config(const ConfigFile& config);

/// Applies `key=value` to a config document. The key is a dotted path; a
/// first component that is not a top-level key is looked up under
/// `scenario`. The value is parsed as JSON, falling back to a plain string.
void apply_override(nlohmann::json& doc, std::string_view assignment);

/// Bundled scenario names, in listing order.
const std::vector<std::string>& preset_names();
/// Throws ConfigError for an unknown name.
nlohmann::json preset_json(const std::string& name);

/// Sweep values to evaluate, or the scenario's own value when there is no sweep.
std::vector<Scenario> expand_sweep(const ConfigFile& config);

/// Analytic curves on the config's grid. `network` gives CIA, CSA and the
/// network single-LRU; `two_cache` gives the two fully overlapping cache forms.
/// Throws InvalidParameter for SNM traffic and SolverError when K >= F.
std::vector<AnalyticRow> analytic_curves(const ConfigFile& config);

struct CoverageRow {
  double r_b = 0.0;
  Placement placement = Placement::ppp;
  double n_bs = 0.0;
  double p0 = 0.0;
};
std::vector<CoverageRow> coverage_table(const ConfigFile& config);
/// Header `r_b,placement,n_bs,p0`.
void write_coverage_csv(std::ostream& os, std::span<const CoverageRow> rows);

}  // namespace edgecache

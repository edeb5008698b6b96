#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgecache/cache.hpp"
#include "edgecache/geometry.hpp"
#include "edgecache/traffic.hpp"

namespace edgecache {

/// Every policy the simulator can run: the online ones from CacheNetwork
/// plus static/prefetching baselines.
enum class SimPolicyKind {
  single_lru,
  multi_lru_one,
  multi_lru_all,
  q_multi_lru_all,
  lfu,
  mpc,           ///< K most popular objects everywhere (static)
  gfi,           ///< greedy full-information placement (static)
  pbp,           ///< probabilistic block placement (static)
  windowed_mpc,  ///< MPC refreshed every update interval from observed counts
};

std::string to_string(SimPolicyKind k);
SimPolicyKind parse_sim_policy(const std::string& s);
bool is_online(SimPolicyKind k);

struct SimPolicy {
  SimPolicyKind kind = SimPolicyKind::single_lru;
  double q = 1.0;
  std::string label() const { return to_string(kind); }
  friend bool operator==(const SimPolicy&, const SimPolicy&) = default;
};

struct TrafficParams {
  TrafficKind kind = TrafficKind::irm;
  double lambda_u = 0.023;  ///< IRM requests per km^2 per second
  std::size_t catalogue_size = 10000;
  double gamma = 0.78;
  double lambda_c_per_day = 100.0;  ///< SNM content births per day
  SnmLaw snm{};
  friend bool operator==(const TrafficParams&, const TrafficParams&) = default;
};

struct PopParams {
  double update_interval = kSecondsPerDay;        ///< Delta t_up [s]
  double estimation_window = 2 * kSecondsPerDay;  ///< Delta t_es [s]
  double gfi_samples_per_station = 50.0;
  friend bool operator==(const PopParams&, const PopParams&) = default;
};

struct Scenario {
  FieldParams geometry{};
  TrafficParams traffic{};
  std::vector<SimPolicy> policies{{SimPolicyKind::multi_lru_one}};
  std::size_t cache_size = 100;
  double duration = 1.0e5;  ///< seconds per realization
  double warmup_fraction = 0.3;
  std::size_t realizations = 200;
  std::uint64_t seed = 1;
  std::size_t workers = 0;  ///< 0 = hardware concurrency
  PopParams pop{};
  UnionSurfaceMode union_surface = UnionSurfaceMode::formula;
  std::size_t coverage_samples = 100000;

  double alpha() const {
    return static_cast<double>(cache_size) / static_cast<double>(traffic.catalogue_size);
  }
  /// Expected requests per realization under IRM.
  double expected_requests() const { return traffic.lambda_u * geometry.window.area() * duration; }
  /// Throws InvalidParameter on inconsistent settings.
  void validate() const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Quantities shared by all realizations of one experiment.
struct ExperimentContext {
  std::optional<ZipfCatalogue> catalogue;  ///< IRM only
  CoverageProfile profile;
  static ExperimentContext build(const Scenario& scenario);
};

struct PolicyCounts {
  std::uint64_t requests = 0;
  std::uint64_t hits = 0;
  std::uint64_t covered = 0;
  std::uint64_t covered_hits = 0;
  friend bool operator==(const PolicyCounts&, const PolicyCounts&) = default;
};

struct RealizationResult {
  std::vector<PolicyCounts> counts;  ///< parallel to Scenario::policies
  std::size_t stations = 0;
};

/// One Monte Carlo realization: fresh field and stream from child seeds,
/// every policy on its own state over the identical stream. Requests before
/// warmup_fraction * duration mutate caches but are not counted.
RealizationResult run_realization(const Scenario& scenario, std::uint64_t realization_seed);
RealizationResult run_realization(const Scenario& scenario, const ExperimentContext& ctx,
                                  std::uint64_t realization_seed);
/// Variant over a caller-supplied stream (replay).
RealizationResult run_realization(const Scenario& scenario, const ExperimentContext& ctx,
                                  std::uint64_t realization_seed, const RequestStream& stream);

struct HitRow {
  std::string policy;
  double r_b = 0.0;
  double n_bs = 0.0;
  double gamma = 0.0;
  double alpha = 0.0;
  std::optional<double> q;
  double hit = 0.0;
  double ci95 = 0.0;  ///< half-width, from across-realization variance
  std::uint64_t requests = 0;
  std::uint64_t hits = 0;
  std::size_t realizations = 0;
  double covered_hit = 0.0;  ///< hit ratio among covered requests
};

struct HitReport {
  std::vector<HitRow> rows;
  /// Row for `policy` (first match), throws if absent.
  const HitRow& find(const std::string& policy, std::optional<double> r_b = std::nullopt) const;
};

/// Seed of realization `index` under `base_seed`.
std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t index);

/// Realizations run on a bounded worker pool and are merged in index order,
/// so the report does not depend on the worker count.
HitReport run_experiment(const Scenario& scenario);
HitReport run_experiment(const Scenario& scenario, const ExperimentContext& ctx);

enum class SweepAxis { r_b, gamma, alpha, q };
std::string to_string(SweepAxis a);
SweepAxis parse_sweep_axis(const std::string& s);

/// Copy of `scenario` with `axis` set to `value`.
Scenario apply_axis(Scenario scenario, SweepAxis axis, double value);

HitReport sweep(const Scenario& scenario, SweepAxis axis, std::span<const double> values);

/// Header `policy,r_b,n_bs,gamma,alpha,q,hit,ci95,requests,realizations`.
void write_hit_csv(std::ostream& os, const HitReport& report);

}  // namespace edgecache

#include "edgecache/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <ostream>
#include <thread>

#include "edgecache/csv.hpp"
#include "edgecache/error.hpp"
#include "edgecache/placement.hpp"

namespace edgecache {

std::string to_string(SimPolicyKind k) {
  switch (k) {
    case SimPolicyKind::single_lru: return "single_lru";
    case SimPolicyKind::multi_lru_one: return "multi_lru_one";
    case SimPolicyKind::multi_lru_all: return "multi_lru_all";
    case SimPolicyKind::q_multi_lru_all: return "q_multi_lru_all";
    case SimPolicyKind::lfu: return "lfu";
    case SimPolicyKind::mpc: return "mpc";
    case SimPolicyKind::gfi: return "gfi";
    case SimPolicyKind::pbp: return "pbp";
    case SimPolicyKind::windowed_mpc: return "windowed_mpc";
  }
  return "?";
}

SimPolicyKind parse_sim_policy(const std::string& s) {
  for (auto k : {SimPolicyKind::single_lru, SimPolicyKind::multi_lru_one,
                 SimPolicyKind::multi_lru_all, SimPolicyKind::q_multi_lru_all, SimPolicyKind::lfu,
                 SimPolicyKind::mpc, SimPolicyKind::gfi, SimPolicyKind::pbp,
                 SimPolicyKind::windowed_mpc}) {
    if (to_string(k) == s) return k;
  }
  throw InvalidParameter("unknown policy '" + s + "'");
}

bool is_online(SimPolicyKind k) {
  switch (k) {
    case SimPolicyKind::single_lru:
    case SimPolicyKind::multi_lru_one:
    case SimPolicyKind::multi_lru_all:
    case SimPolicyKind::q_multi_lru_all:
    case SimPolicyKind::lfu:
      return true;
    default:
      return false;
  }
}

namespace {

PolicyKind online_kind(SimPolicyKind k) {
  switch (k) {
    case SimPolicyKind::single_lru: return PolicyKind::single_lru;
    case SimPolicyKind::multi_lru_one: return PolicyKind::multi_lru_one;
    case SimPolicyKind::multi_lru_all: return PolicyKind::multi_lru_all;
    case SimPolicyKind::q_multi_lru_all: return PolicyKind::q_multi_lru_all;
    case SimPolicyKind::lfu: return PolicyKind::lfu;
    default: throw InvalidParameter("not an online policy: " + to_string(k));
  }
}

bool is_static(SimPolicyKind k) {
  return k == SimPolicyKind::mpc || k == SimPolicyKind::gfi || k == SimPolicyKind::pbp;
}

}  // namespace

void Scenario::validate() const {
  if (!(geometry.window.width > 0.0) || !(geometry.window.height > 0.0)) {
    throw InvalidParameter("window must have positive width and height");
  }
  if (!(geometry.coverage_radius > 0.0)) throw InvalidParameter("r_b must be positive");
  if (geometry.placement != Placement::explicit_positions && !(geometry.intensity > 0.0)) {
    throw InvalidParameter("lambda_b must be positive");
  }
  if (geometry.placement == Placement::explicit_positions && geometry.stations.empty()) {
    throw InvalidParameter("explicit placement needs at least one station");
  }
  if (!(warmup_fraction >= 0.0 && warmup_fraction < 1.0)) {
    throw InvalidParameter("warmup_fraction must lie in [0, 1)");
  }
  if (realizations < 1) throw InvalidParameter("realizations must be at least 1");
  if (!(duration > 0.0)) throw InvalidParameter("duration must be positive");
  if (policies.empty()) throw InvalidParameter("no policies to simulate");
  if (traffic.kind == TrafficKind::irm) {
    if (traffic.catalogue_size == 0) throw InvalidParameter("catalogue_size must be at least 1");
    if (!(traffic.lambda_u > 0.0)) throw InvalidParameter("lambda_u must be positive");
    if (!(traffic.gamma >= 0.0)) throw InvalidParameter("gamma must be nonnegative");
  } else {
    if (traffic.lambda_c_per_day < 0.0) throw InvalidParameter("lambda_c must be nonnegative");
    traffic.snm.shape.validate();
  }
  for (const auto& p : policies) {
    if (p.kind == SimPolicyKind::q_multi_lru_all && !(p.q > 0.0 && p.q <= 1.0)) {
      throw InvalidParameter("q must lie in (0, 1]");
    }
    if (is_static(p.kind) && traffic.kind != TrafficKind::irm) {
      throw InvalidParameter("static policy " + to_string(p.kind) +
                             " needs a known IRM catalogue; use windowed_mpc for SNM traffic");
    }
    if (p.kind == SimPolicyKind::pbp && cache_size > traffic.catalogue_size) {
      throw InvalidParameter("pbp needs cache_size <= catalogue_size");
    }
  }
  if (!(pop.update_interval > 0.0) || !(pop.estimation_window > 0.0)) {
    throw InvalidParameter("update interval and estimation window must be positive");
  }
}

ExperimentContext ExperimentContext::build(const Scenario& scenario) {
  ExperimentContext ctx;
  if (scenario.traffic.kind == TrafficKind::irm) {
    ctx.catalogue.emplace(scenario.traffic.catalogue_size, scenario.traffic.gamma);
  }
  CoverageOptions opts;
  opts.n_samples = std::max<std::size_t>(1, scenario.coverage_samples);
  opts.union_mode = scenario.union_surface;
  ctx.profile = estimate_coverage_profile(scenario.geometry, opts,
                                          derive_seed(scenario.seed, 0x70726f66696c65ULL));
  return ctx;
}

namespace {

class Runner {
 public:
  virtual ~Runner() = default;
  /// Returns whether the request is a hit; may update internal state.
  virtual bool serve(const Request& r, std::span<const std::size_t> covering) = 0;
};

class OnlineRunner final : public Runner {
 public:
  OnlineRunner(PolicySpec spec, std::size_t n_stations, std::size_t k, std::uint64_t seed)
      : net_(spec, n_stations, k), rng_(make_rng(seed)) {}
  bool serve(const Request& r, std::span<const std::size_t> covering) override {
    return net_.handle_request(covering, r.object, rng_).hit;
  }

 private:
  CacheNetwork net_;
  Rng rng_;
};

class StaticRunner final : public Runner {
 public:
  explicit StaticRunner(PlacementPlan plan) : plan_(std::move(plan)) {}
  bool serve(const Request& r, std::span<const std::size_t> covering) override {
    for (auto s : covering) {
      if (plan_.holds(s, r.object)) return true;
    }
    return false;
  }

 private:
  PlacementPlan plan_;
};

// Every station holds the K objects most requested during the last
// estimation window; inventories are recomputed at multiples of the update
// interval.
class WindowedMpcRunner final : public Runner {
 public:
  WindowedMpcRunner(std::size_t k, double update, double window)
      : k_(k), update_(update), window_(window) {}
  bool serve(const Request& r, std::span<const std::size_t> covering) override {
    while (r.time >= next_refresh_) {
      top_ = estimate_top_objects(history_, next_refresh_, window_, k_);
      std::sort(top_.begin(), top_.end());
      next_refresh_ += update_;
    }
    history_.push_back(r);
    return !covering.empty() && std::binary_search(top_.begin(), top_.end(), r.object);
  }

 private:
  std::size_t k_;
  double update_;
  double window_;
  double next_refresh_ = 0.0;
  std::vector<Request> history_;
  std::vector<ObjectId> top_;
};

std::vector<Point> gfi_user_points(const Scenario& sc, const StationField& field, Rng& rng) {
  const double expected = sc.pop.gfi_samples_per_station *
                          static_cast<double>(std::max<std::size_t>(field.size(), 1));
  const auto n = static_cast<std::size_t>(std::llround(std::max(1.0, expected)));
  std::uniform_real_distribution<double> ux(0.0, field.window().width);
  std::uniform_real_distribution<double> uy(0.0, field.window().height);
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {ux(rng), uy(rng)};
  return pts;
}

std::unique_ptr<Runner> make_runner(const Scenario& sc, const ExperimentContext& ctx,
                                    const StationField& field, const SimPolicy& policy,
                                    std::uint64_t seed) {
  const std::size_t n = field.size();
  switch (policy.kind) {
    case SimPolicyKind::mpc:
      return std::make_unique<StaticRunner>(
          mpc_placement(ctx.catalogue->pmf(), sc.cache_size, n));
    case SimPolicyKind::pbp:
      return std::make_unique<StaticRunner>(
          pbp_placement(ctx.profile.pm, ctx.catalogue->pmf(), sc.cache_size, n, seed));
    case SimPolicyKind::gfi: {
      Rng rng = make_rng(seed);
      const auto pts = gfi_user_points(sc, field, rng);
      return std::make_unique<StaticRunner>(
          greedy_full_info_placement(field, pts, ctx.catalogue->pmf(), sc.cache_size).plan);
    }
    case SimPolicyKind::windowed_mpc:
      return std::make_unique<WindowedMpcRunner>(sc.cache_size, sc.pop.update_interval,
                                                 sc.pop.estimation_window);
    default:
      return std::make_unique<OnlineRunner>(PolicySpec{online_kind(policy.kind), policy.q}, n,
                                            sc.cache_size, seed);
  }
}

template <typename NextRequest>
RealizationResult drive(const Scenario& sc, const ExperimentContext& ctx, std::uint64_t seed,
                        const StationField& field, NextRequest&& next) {
  std::vector<std::unique_ptr<Runner>> runners;
  runners.reserve(sc.policies.size());
  for (std::size_t i = 0; i < sc.policies.size(); ++i) {
    runners.push_back(make_runner(sc, ctx, field, sc.policies[i],
                                  derive_seed(derive_seed(seed, seed_tag::policy), i)));
  }
  RealizationResult result;
  result.stations = field.size();
  result.counts.assign(sc.policies.size(), {});
  const double warmup_end = sc.warmup_fraction * sc.duration;
  std::vector<std::size_t> covering;
  while (const Request* r = next()) {
    field.covering_stations(r->position, covering);
    const bool counted = r->time >= warmup_end;
    for (std::size_t i = 0; i < runners.size(); ++i) {
      const bool hit = runners[i]->serve(*r, covering);
      if (!counted) continue;
      auto& c = result.counts[i];
      ++c.requests;
      c.hits += hit ? 1 : 0;
      if (!covering.empty()) {
        ++c.covered;
        c.covered_hits += hit ? 1 : 0;
      }
    }
  }
  return result;
}

}  // namespace

RealizationResult run_realization(const Scenario& scenario, const ExperimentContext& ctx,
                                  std::uint64_t realization_seed, const RequestStream& stream) {
  scenario.validate();
  const StationField field =
      sample_station_field(scenario.geometry, derive_seed(realization_seed, seed_tag::geometry));
  std::size_t idx = 0;
  return drive(scenario, ctx, realization_seed, field, [&]() -> const Request* {
    return idx < stream.requests.size() ? &stream.requests[idx++] : nullptr;
  });
}

RealizationResult run_realization(const Scenario& scenario, const ExperimentContext& ctx,
                                  std::uint64_t realization_seed) {
  scenario.validate();
  const auto traffic_seed = derive_seed(realization_seed, seed_tag::traffic);
  if (scenario.traffic.kind == TrafficKind::snm) {
    const auto stream =
        sample_snm_stream(scenario.traffic.lambda_c_per_day, scenario.traffic.snm,
                          scenario.geometry.window, scenario.duration, traffic_seed);
    return run_realization(scenario, ctx, realization_seed, stream);
  }
  const StationField field =
      sample_station_field(scenario.geometry, derive_seed(realization_seed, seed_tag::geometry));
  IrmGenerator gen(scenario.traffic.lambda_u, scenario.geometry.window, scenario.duration,
                   *ctx.catalogue, traffic_seed);
  Request current;
  return drive(scenario, ctx, realization_seed, field, [&]() -> const Request* {
    auto r = gen.next();
    if (!r) return nullptr;
    current = *r;
    return &current;
  });
}

RealizationResult run_realization(const Scenario& scenario, std::uint64_t realization_seed) {
  return run_realization(scenario, ExperimentContext::build(scenario), realization_seed);
}

const HitRow& HitReport::find(const std::string& policy, std::optional<double> r_b) const {
  for (const auto& row : rows) {
    if (row.policy == policy && (!r_b || std::abs(row.r_b - *r_b) < 1e-12)) return row;
  }
  throw std::out_of_range("no report row for policy " + policy);
}

std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t index) {
  return derive_seed(base_seed, 0x7265616cULL + index);
}

HitReport run_experiment(const Scenario& scenario, const ExperimentContext& ctx) {
  scenario.validate();
  const std::size_t n = scenario.realizations;
  std::vector<RealizationResult> results(n);

  std::size_t workers = scenario.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        results[i] = run_realization(scenario, ctx, realization_seed(scenario.seed, i));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  HitReport report;
  for (std::size_t p = 0; p < scenario.policies.size(); ++p) {
    HitRow row;
    row.policy = scenario.policies[p].label();
    row.r_b = scenario.geometry.coverage_radius;
    row.n_bs = ctx.profile.mean_coverage;
    row.gamma = scenario.traffic.gamma;
    row.alpha = scenario.alpha();
    if (scenario.policies[p].kind == SimPolicyKind::q_multi_lru_all) row.q = scenario.policies[p].q;
    row.realizations = n;
    std::uint64_t covered = 0;
    std::uint64_t covered_hits = 0;
    // Merge in realization order so the sums are reproducible.
    std::vector<double> ratios;
    ratios.reserve(n);
    for (const auto& r : results) {
      const auto& c = r.counts[p];
      row.requests += c.requests;
      row.hits += c.hits;
      covered += c.covered;
      covered_hits += c.covered_hits;
      if (c.requests > 0) {
        ratios.push_back(static_cast<double>(c.hits) / static_cast<double>(c.requests));
      }
    }
    row.hit = row.requests ? static_cast<double>(row.hits) / static_cast<double>(row.requests) : 0.0;
    row.covered_hit = covered ? static_cast<double>(covered_hits) / static_cast<double>(covered) : 0.0;
    if (ratios.size() >= 2) {
      double mean = 0.0;
      for (double x : ratios) mean += x;
      mean /= static_cast<double>(ratios.size());
      double var = 0.0;
      for (double x : ratios) var += (x - mean) * (x - mean);
      var /= static_cast<double>(ratios.size() - 1);
      row.ci95 = 1.96 * std::sqrt(var / static_cast<double>(ratios.size()));
    } else if (row.requests > 0) {
      // A single realization has no across-realization spread; use the
      // binomial half-width instead.
      row.ci95 = 1.96 * std::sqrt(row.hit * (1.0 - row.hit) / static_cast<double>(row.requests));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

HitReport run_experiment(const Scenario& scenario) {
  scenario.validate();
  return run_experiment(scenario, ExperimentContext::build(scenario));
}

std::string to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::r_b: return "r_b";
    case SweepAxis::gamma: return "gamma";
    case SweepAxis::alpha: return "alpha";
    case SweepAxis::q: return "q";
  }
  return "?";
}

SweepAxis parse_sweep_axis(const std::string& s) {
  if (s == "r_b") return SweepAxis::r_b;
  if (s == "gamma") return SweepAxis::gamma;
  if (s == "alpha") return SweepAxis::alpha;
  if (s == "q") return SweepAxis::q;
  throw InvalidParameter("unknown sweep axis '" + s + "' (expected r_b, gamma, alpha or q)");
}

Scenario apply_axis(Scenario sc, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::r_b:
      if (!(value > 0.0)) throw InvalidParameter("r_b sweep values must be positive");
      sc.geometry.coverage_radius = value;
      break;
    case SweepAxis::gamma:
      if (!(value >= 0.0)) throw InvalidParameter("gamma sweep values must be nonnegative");
      sc.traffic.gamma = value;
      break;
    case SweepAxis::alpha:
      if (!(value >= 0.0 && value <= 1.0)) throw InvalidParameter("alpha must lie in [0, 1]");
      sc.cache_size = static_cast<std::size_t>(
          std::llround(value * static_cast<double>(sc.traffic.catalogue_size)));
      break;
    case SweepAxis::q: {
      if (!(value > 0.0 && value <= 1.0)) throw InvalidParameter("q must lie in (0, 1]");
      bool any = false;
      for (auto& p : sc.policies) {
        if (p.kind == SimPolicyKind::q_multi_lru_all) {
          p.q = value;
          any = true;
        }
      }
      if (!any) throw InvalidParameter("q sweep needs a q_multi_lru_all policy");
      break;
    }
  }
  return sc;
}

HitReport sweep(const Scenario& scenario, SweepAxis axis, std::span<const double> values) {
  if (values.empty()) throw InvalidParameter("sweep needs at least one value");
  HitReport out;
  for (double v : values) {
    const Scenario sc = apply_axis(scenario, axis, v);
    auto part = run_experiment(sc);
    for (auto& row : part.rows) out.rows.push_back(std::move(row));
  }
  return out;
}

void write_hit_csv(std::ostream& os, const HitReport& report) {
  os << "policy,r_b,n_bs,gamma,alpha,q,hit,ci95,requests,realizations\n";
  for (const auto& r : report.rows) {
    os << r.policy << ',' << csv::format(r.r_b) << ',' << csv::format(r.n_bs) << ','
       << csv::format(r.gamma) << ',' << csv::format(r.alpha) << ','
       << (r.q ? csv::format(*r.q) : std::string()) << ',' << csv::format(r.hit) << ','
       << csv::format(r.ci95) << ',' << r.requests << ',' << r.realizations << '\n';
  }
}

}  // namespace edgecache

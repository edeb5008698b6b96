// Acceptance run: one line per criterion, nonzero exit if any fails.
// Usage: edgecache_acceptance [criterion ...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edgecache/analysis.hpp"
#include "edgecache/config.hpp"
#include "edgecache/geometry.hpp"
#include "edgecache/placement.hpp"
#include "edgecache/sim.hpp"
#include "edgecache/traffic.hpp"

using namespace edgecache;

namespace {

constexpr std::uint64_t kSeed = kDefaultSeed;
constexpr double kLambdaU = 0.023;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED{" << what << "}";
    }
  }
};

std::string fmt(double x, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << x;
  return os.str();
}

// Radius giving mean coverage n under lambda_b = 0.5.
double radius_for(double n_bs) { return std::sqrt(n_bs / (0.5 * std::numbers::pi)); }

Scenario desk(double r, std::size_t f, std::size_t k, std::vector<SimPolicy> policies,
              std::size_t realizations, double duration = 1.0e5) {
  Scenario sc;
  sc.geometry.coverage_radius = r;
  sc.traffic.catalogue_size = f;
  sc.cache_size = k;
  sc.policies = std::move(policies);
  sc.realizations = realizations;
  sc.duration = duration;
  sc.seed = kSeed;
  sc.workers = 0;
  return sc;
}

const SimPolicy kSingle{SimPolicyKind::single_lru};
const SimPolicy kOne{SimPolicyKind::multi_lru_one};
const SimPolicy kAll{SimPolicyKind::multi_lru_all};

// Every simulated static-IRM row checked against the bound, across criteria.
struct BoundCheck {
  std::string where;
  double hit;
  double ci95;
  double bound;
};
std::vector<BoundCheck> g_bound_checks;

HitReport run_and_record(const Scenario& sc, const ExperimentContext& ctx, const std::string& tag) {
  auto rep = run_experiment(sc, ctx);
  if (sc.traffic.kind == TrafficKind::irm) {
    const double bound = irm_upper_bound(ctx.profile.pm, ctx.catalogue->pmf(), sc.cache_size);
    for (const auto& row : rep.rows) {
      g_bound_checks.push_back(
          {tag + "/" + row.policy + "/R=" + fmt(row.r_b, 3), row.hit, row.ci95, bound});
    }
  }
  return rep;
}

HitReport run_and_record(const Scenario& sc, const std::string& tag) {
  return run_and_record(sc, ExperimentContext::build(sc), tag);
}

// Two caches covering the whole 2 x 1 window, one per Voronoi half.
Scenario two_cache_scenario(SimPolicy policy) {
  Scenario sc;
  sc.geometry.placement = Placement::explicit_positions;
  sc.geometry.stations = {{0.5, 0.5}, {1.5, 0.5}};
  sc.geometry.window = {2, 1};
  sc.geometry.boundary = BoundaryMode::open;
  sc.geometry.coverage_radius = 10;
  sc.traffic.catalogue_size = 1000;
  sc.traffic.gamma = 0.78;
  sc.cache_size = 50;
  sc.policies = {policy};
  sc.realizations = 4;
  sc.seed = kSeed;
  // 1e5 counted requests per realization after the 30% warmup.
  sc.duration = 1.0e5 / (kLambdaU * 2.0 * (1.0 - sc.warmup_fraction));
  return sc;
}

Outcome criterion1() {
  Outcome o;
  const auto sc = two_cache_scenario(kAll);
  const auto rep = run_experiment(sc);
  const auto a = zipf_pmf(1000, 0.78);
  const double analytic = two_cache_all_hit(a, kLambdaU, 2.0, 50).total_hit;
  const auto& row = rep.rows[0];
  o.detail << "sim=" << fmt(row.hit) << " analytic=" << fmt(analytic)
           << " |diff|=" << fmt(std::abs(row.hit - analytic)) << " (tol 0.01, "
           << row.requests << " counted)";
  o.require(row.requests >= 100000, "at least 1e5 counted requests");
  o.require(std::abs(row.hit - analytic) <= 0.01, "|sim - analytic| <= 0.01");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto sc = two_cache_scenario(kOne);
  const auto rep = run_experiment(sc);
  const auto a = zipf_pmf(1000, 0.78);
  const double analytic = two_cache_one_hit(a, kLambdaU, 1.0, 50).total_hit;
  const auto& row = rep.rows[0];
  o.detail << "sim=" << fmt(row.hit) << " analytic=" << fmt(analytic)
           << " |diff|=" << fmt(std::abs(row.hit - analytic)) << " (tol 0.05)";
  o.require(std::abs(row.hit - analytic) <= 0.05, "|sim - analytic| <= 0.05");
  return o;
}

Outcome criterion3() {
  Outcome o;
  double worst_tv = 0.0;
  for (double r : {0.8, 1.13, 1.382, 1.6, 1.954}) {
    FieldParams fp;
    fp.coverage_radius = r;
    CoverageOptions opts;
    opts.n_samples = 100000;
    opts.samples_per_field = 10;
    opts.method = CoverageMethod::monte_carlo;
    const auto mc = estimate_coverage_profile(fp, opts, derive_seed(kSeed, 3));
    const double nu = 0.5 * std::numbers::pi * r * r;
    const double tv = total_variation(mc.pm, poisson_pm(nu));
    worst_tv = std::max(worst_tv, tv);
    o.require(tv <= 0.01, "TV <= 0.01 at R=" + fmt(r, 3));
    if (r == 1.13) {
      o.detail << "R=1.13 N=" << fmt(mc.mean_coverage, 3) << " ";
      o.require(std::abs(mc.mean_coverage - 2.0) <= 0.05, "R=1.13 -> 2.00 +- 0.05");
      o.require(std::abs(nu - 2.0) <= 0.05, "analytic nu at R=1.13");
    }
    if (r == 1.6) {
      o.detail << "R=1.60 N=" << fmt(mc.mean_coverage, 3) << " ";
      o.require(std::abs(mc.mean_coverage - 4.0) <= 0.08, "R=1.60 -> 4.00 +- 0.08");
      o.require(std::abs(nu - 4.0) <= 0.08, "analytic nu at R=1.60");
    }
  }
  o.detail << "max TV=" << fmt(worst_tv) << " (tol 0.01, 1e5 points)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst = 0.0;
  for (double gamma : {0.6, 0.78, 1.0}) {
    for (std::size_t k : {10u, 50u, 200u}) {
      Scenario sc;
      sc.geometry.placement = Placement::explicit_positions;
      sc.geometry.stations = {{0.5, 0.5}};
      sc.geometry.window = {1, 1};
      sc.geometry.boundary = BoundaryMode::open;
      sc.geometry.coverage_radius = 5;
      sc.traffic.catalogue_size = 1000;
      sc.traffic.gamma = gamma;
      sc.cache_size = k;
      sc.policies = {kSingle};
      sc.realizations = 2;
      sc.seed = kSeed;
      sc.duration = 1.0e5 / (kLambdaU * (1.0 - sc.warmup_fraction));
      const auto rep = run_experiment(sc);
      const double analytic = single_lru_hit(zipf_pmf(1000, gamma), kLambdaU, 1.0, k).total_hit;
      const double d = std::abs(rep.rows[0].hit - analytic);
      worst = std::max(worst, d);
      o.require(d <= 0.02, "gamma=" + fmt(gamma, 2) + " K=" + std::to_string(k) +
                               " sim=" + fmt(rep.rows[0].hit) + " analytic=" + fmt(analytic));
    }
  }
  o.detail << "9 configurations, max |sim - analytic|=" << fmt(worst) << " (tol 0.02)";
  return o;
}

// Shared runs of multi-LRU-One and -All on the CIA/CSA grid.
struct FitPoint {
  double r, alpha, sim_one, sim_all, an_one, an_all;
};
std::vector<FitPoint> g_fit;

const std::vector<FitPoint>& fit_grid() {
  if (!g_fit.empty()) return g_fit;
  for (double alpha : {0.05, 0.2}) {
    for (double r : {0.6, 1.0, 1.4, 1.8, 2.25}) {
      const std::size_t f = 2000;
      const auto k = static_cast<std::size_t>(std::lround(alpha * f));
      const auto sc = desk(r, f, k, {kOne, kAll}, 4);
      const auto ctx = ExperimentContext::build(sc);
      const auto rep = run_and_record(sc, ctx, "fit");
      const auto p = AnalyticModelParams::for_field(ctx.catalogue->pmf(), kLambdaU, k,
                                                    sc.geometry, ctx.profile);
      g_fit.push_back({r, alpha, rep.find("multi_lru_one").hit, rep.find("multi_lru_all").hit,
                       multi_lru_one_hit(p).total_hit, multi_lru_all_hit(p).total_hit});
    }
  }
  return g_fit;
}

Outcome criterion5() {
  Outcome o;
  double worst = 0.0;
  for (const auto& pt : fit_grid()) {
    const double d = std::abs(pt.sim_one - pt.an_one);
    worst = std::max(worst, d);
    o.require(d <= 0.03, "alpha=" + fmt(pt.alpha, 2) + " R=" + fmt(pt.r, 2) + " sim=" +
                             fmt(pt.sim_one) + " analytic=" + fmt(pt.an_one));
  }
  o.detail << "10 grid points, max |sim - CIA|=" << fmt(worst) << " (tol 0.03)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst = 0.0;
  std::ostringstream gaps;
  for (const auto& pt : fit_grid()) {
    const double gap = pt.an_all - pt.sim_all;
    if (pt.r <= 1.6) {
      worst = std::max(worst, std::abs(gap));
      o.require(std::abs(gap) <= 0.05, "alpha=" + fmt(pt.alpha, 2) + " R=" + fmt(pt.r, 2) +
                                           " sim=" + fmt(pt.sim_all) +
                                           " analytic=" + fmt(pt.an_all));
    } else {
      gaps << " " << fmt(gap, 3);
      o.require(gap > 0.0, "CSA above simulation at R=" + fmt(pt.r, 2) +
                               " alpha=" + fmt(pt.alpha, 2));
    }
  }
  o.detail << "R<=1.6 max |sim - CSA|=" << fmt(worst) << " (tol 0.05); R>1.6 CSA - sim:"
           << gaps.str() << " (sign asserted > 0)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    const auto sc = desk(radius_for(n), 10000, 100, {kSingle, kOne, kAll}, 8);
    const auto rep = run_and_record(sc, "order");
    const auto& s = rep.find("single_lru");
    const auto& one = rep.find("multi_lru_one");
    const auto& all = rep.find("multi_lru_all");
    o.detail << "N=" << n << ": " << fmt(one.hit, 3) << ">" << fmt(all.hit, 3) << ">"
             << fmt(s.hit, 3) << " ";
    o.require(one.hit - all.hit > one.ci95 + all.ci95,
              "One > All beyond CIs at N=" + std::to_string(n));
    o.require(one.hit > s.hit && all.hit > s.hit, "both > single at N=" + std::to_string(n));
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  struct Range {
    Placement placement;
    int n;
    double lo, hi;
  };
  const Range ranges[] = {{Placement::ppp, 2, 0.25, 0.45},
                          {Placement::ppp, 3, 0.45, 0.75},
                          {Placement::lattice, 2, 0.30, 0.55},
                          {Placement::lattice, 3, 0.55, 0.85}};
  for (const auto& rg : ranges) {
    auto sc = desk(radius_for(rg.n), 10000, 100, {kSingle, kOne}, 10);
    sc.geometry.placement = rg.placement;
    const auto rep = run_and_record(sc, "gain");
    const double gain = rep.find("multi_lru_one").hit / rep.find("single_lru").hit - 1.0;
    const std::string label = to_string(rg.placement) + " N=" + std::to_string(rg.n);
    o.detail << label << " gain=" << fmt(100 * gain, 1) << "% [" << fmt(100 * rg.lo, 0) << ","
             << fmt(100 * rg.hi, 0) << "]  ";
    o.require(gain >= rg.lo && gain <= rg.hi, label);
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (int n : {2, 3}) {
    auto sc = desk(radius_for(n), 10000, 100,
                   {kSingle, kOne, kAll, {SimPolicyKind::lfu}, {SimPolicyKind::mpc},
                    {SimPolicyKind::gfi}, {SimPolicyKind::pbp}},
                   4);
    const auto ctx = ExperimentContext::build(sc);
    const auto rep = run_and_record(sc, ctx, "bound");
    const double bound = irm_upper_bound(ctx.profile.pm, ctx.catalogue->pmf(), 100);
    const double gfi = rep.find("gfi").hit;
    o.detail << "N=" << n << " bound=" << fmt(bound) << " gfi=" << fmt(gfi) << "  ";
    o.require(bound - gfi <= 0.05, "GFI within 0.05 of bound at N=" + std::to_string(n));
  }
  std::size_t violations = 0;
  double worst = -1.0;
  for (const auto& c : g_bound_checks) {
    worst = std::max(worst, c.hit - c.bound);
    if (c.hit > c.bound + 3 * c.ci95) {
      ++violations;
      o.require(false, "bound violated: " + c.where);
    }
  }
  o.detail << g_bound_checks.size() << " simulated rows checked, max(hit - bound)=" << fmt(worst)
           << ", violations beyond 3 CI: " << violations;
  return o;
}

Outcome criterion10() {
  Outcome o;
  {
    const auto sc = desk(0.8, 10000, 100, {kSingle, kOne, kAll}, 10);
    const auto rep = run_and_record(sc, "degenerate");
    const double s = rep.find("single_lru").hit;
    const double one = rep.find("multi_lru_one").hit;
    const double all = rep.find("multi_lru_all").hit;
    o.detail << "R=0.8 single=" << fmt(s) << " One=" << fmt(one) << " All=" << fmt(all) << "; ";
    o.require(std::abs(one - s) <= 0.02, "|One - single| <= 0.02 at R=0.8");
    o.require(std::abs(all - s) <= 0.02, "|All - single| <= 0.02 at R=0.8");
  }
  {
    // Full catalogue in every cache; the radius makes uncovered users negligible.
    auto sc = desk(2.25, 200, 200,
                   {kSingle, kOne, kAll, {SimPolicyKind::q_multi_lru_all, 0.5},
                    {SimPolicyKind::lfu}, {SimPolicyKind::mpc}, {SimPolicyKind::gfi},
                    {SimPolicyKind::pbp}, {SimPolicyKind::windowed_mpc}},
                   2, 3.0e5);
    sc.pop.update_interval = 5000;
    sc.pop.estimation_window = 10000;
    const auto rep = run_and_record(sc, "alpha1");
    double lowest = 1.0;
    for (const auto& row : rep.rows) {
      lowest = std::min(lowest, row.hit);
      o.require(row.hit >= 0.99, row.policy + " hit=" + fmt(row.hit) + " at alpha=1");
    }
    o.detail << "alpha=1 (R=2.25, " << rep.rows.size() << " policies) min hit=" << fmt(lowest);
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  const std::vector<double> qs{0.25, 0.5, 1.0};
  std::vector<SimPolicy> pols;
  for (double q : qs) pols.push_back({SimPolicyKind::q_multi_lru_all, q});
  pols.push_back(kAll);
  const auto sc = desk(1.382, 10000, 100, pols, 4, 3.0e5);
  const auto rep = run_and_record(sc, "qlru");
  for (std::size_t i = 0; i < qs.size(); ++i) {
    o.detail << "q=" << qs[i] << ":" << fmt(rep.rows[i].hit) << " ";
  }
  for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
    const auto& lo = rep.rows[i];
    const auto& hi = rep.rows[i + 1];
    o.require(hi.hit <= lo.hit + lo.ci95 + hi.ci95,
              "nonincreasing from q=" + fmt(qs[i], 2) + " to q=" + fmt(qs[i + 1], 2));
  }
  const auto& q1 = rep.rows[2];
  const auto& all = rep.rows[3];
  const bool identical = q1.hits == all.hits && q1.requests == all.requests && q1.ci95 == all.ci95;
  o.detail << "| q=1 vs All: " << q1.hits << "/" << q1.requests << " vs " << all.hits << "/"
           << all.requests;
  o.require(identical, "q=1 bit-identical to multi-LRU-All");
  return o;
}

Outcome criterion12() {
  Outcome o;
  double prev_one = -1.0, prev_all = -1.0, prev_adv = 1e9;
  for (double gamma : {0.4, 0.78, 1.2}) {
    auto sc = desk(1.382, 10000, 100, {kOne, kAll}, 6);
    sc.traffic.gamma = gamma;
    const auto rep = run_and_record(sc, "gamma");
    const double one = rep.find("multi_lru_one").hit;
    const double all = rep.find("multi_lru_all").hit;
    const double adv = (one - all) / all;
    o.detail << "gamma=" << gamma << ": One=" << fmt(one) << " All=" << fmt(all)
             << " adv=" << fmt(100 * adv, 1) << "%  ";
    o.require(one > prev_one && all > prev_all, "hit increasing at gamma=" + fmt(gamma, 2));
    o.require(adv < prev_adv, "advantage decreasing at gamma=" + fmt(gamma, 2));
    prev_one = one;
    prev_all = all;
    prev_adv = adv;
  }
  return o;
}

SnmLaw short_lived_law() {
  SnmLaw law;
  law.lifespan.kind = LifespanLaw::Kind::exponential;
  law.lifespan.mean_days = 0.5;
  law.volume.kind = VolumeLaw::Kind::pareto;
  law.volume.shape = 2.0;
  law.volume.minimum = 250;
  law.shape = SnmShape::rectangular();
  return law;
}

Scenario snm_scenario(std::size_t k, std::vector<SimPolicy> policies) {
  Scenario sc = desk(1.382, 1, k, std::move(policies), 4, 4 * kSecondsPerDay);
  sc.traffic.kind = TrafficKind::snm;
  sc.traffic.lambda_c_per_day = 200;
  sc.traffic.snm = short_lived_law();
  sc.warmup_fraction = 0.125;
  sc.pop.update_interval = 0.25 * kSecondsPerDay;
  sc.pop.estimation_window = 0.5 * kSecondsPerDay;
  return sc;
}

Outcome criterion13() {
  Outcome o;
  // (a) stream invariants.
  {
    const auto law = short_lived_law();
    const Window w{12, 12};
    const double duration = 2 * kSecondsPerDay;
    double total = 0.0;
    const int reps = 5;
    bool ok = true;
    for (int i = 0; i < reps; ++i) {
      std::vector<SnmContent> contents;
      const auto s = sample_snm_stream(200, law, w, duration, derive_seed(kSeed, 100 + i),
                                       &contents);
      std::map<ObjectId, const SnmContent*> by_id;
      for (const auto& c : contents) ok &= by_id.emplace(c.id, &c).second;
      double prev = 0.0;
      for (const auto& r : s.requests) {
        ok &= r.time >= prev && r.time >= 0.0 && r.time < duration;
        ok &= r.position.x >= 0 && r.position.x < w.width && r.position.y >= 0 &&
              r.position.y < w.height;
        const auto it = by_id.find(r.object);
        ok &= it != by_id.end();
        if (it != by_id.end()) {
          const auto* c = it->second;
          ok &= r.time >= c->birth_time && r.time <= c->birth_time + c->lifespan;
        }
        prev = r.time;
      }
      total += static_cast<double>(s.requests.size());
    }
    const double expected = 200.0 * law.volume.mean() * duration / kSecondsPerDay;
    const double rel = total / reps / expected - 1.0;
    o.require(ok, "(a) sorted, in-window, inside-lifespan requests with unique ids");
    // The Pareto(2) volume has infinite variance, so the rate check is loose.
    o.require(std::abs(rel) <= 0.1, "(a) mean request rate within 10% of Campbell");
    o.detail << "(a) rate err=" << fmt(100 * rel, 1) << "%; ";
  }
  // (b) windowed bound vs windowed MPC on the same streams.
  {
    const auto sc = snm_scenario(200, {{SimPolicyKind::windowed_mpc}});
    const auto ctx = ExperimentContext::build(sc);
    double worst = 1.0;
    for (std::size_t i = 0; i < sc.realizations; ++i) {
      const auto seed = realization_seed(sc.seed, i);
      const auto stream = sample_snm_stream(sc.traffic.lambda_c_per_day, sc.traffic.snm,
                                            sc.geometry.window, sc.duration,
                                            derive_seed(seed, seed_tag::traffic));
      const auto res = run_realization(sc, ctx, seed, stream);
      const auto& c = res.counts[0];
      const double hit = static_cast<double>(c.hits) / static_cast<double>(c.requests);
      const double ci = 1.96 * std::sqrt(hit * (1 - hit) / static_cast<double>(c.requests));
      const double bound = temporal_pop_bound(stream, ctx.profile.pm, sc.cache_size,
                                              sc.pop.update_interval, sc.pop.estimation_window);
      worst = std::min(worst, bound - hit);
      o.require(bound >= hit - ci, "(b) bound " + fmt(bound) + " < windowed MPC " + fmt(hit));
    }
    o.detail << "(b) min(bound - windowed MPC)=" << fmt(worst) << "; ";
  }
  // (c) -All competitive under short lifespans and large caches.
  {
    bool any = false;
    for (std::size_t k : {50u, 200u, 500u}) {
      const auto sc = snm_scenario(k, {kOne, kAll});
      const auto rep = run_experiment(sc);
      const auto& one = rep.find("multi_lru_one");
      const auto& all = rep.find("multi_lru_all");
      o.detail << "(c) K=" << k << " One=" << fmt(one.hit) << " All=" << fmt(all.hit) << " ";
      any |= all.hit >= one.hit - one.ci95 - all.ci95;
    }
    o.require(any, "(c) All >= One - CI in some configuration");
  }
  return o;
}

Outcome criterion14() {
  Outcome o;
  Rng rng = make_rng(kSeed);
  std::uniform_int_distribution<int> fsize(2, 2000);
  std::uniform_real_distribution<double> logr(-6, 3);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> rates(static_cast<std::size_t>(fsize(rng)));
    for (auto& x : rates) x = std::pow(10.0, logr(rng));
    std::uniform_int_distribution<std::size_t> kd(1, rates.size() - 1);
    const double k = static_cast<double>(kd(rng));
    const double t = solve_characteristic_time(rates, k);
    double s = 0.0;
    for (double x : rates) s += -std::expm1(-x * t);
    worst = std::max(worst, std::abs(s - k));
  }
  const std::vector<double> two{0.5, 0.5};
  const double closed = std::abs(solve_characteristic_time(two, 1) - 2 * std::log(2.0));
  o.detail << "1000 instances, max residual=" << worst << " (tol 1e-9); |T - 2 ln 2|=" << closed
           << " (tol 1e-12)";
  o.require(worst <= 1e-9, "residual");
  o.require(closed <= 1e-12, "closed form");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2,  criterion3,  criterion4,  criterion5,  criterion6,  criterion7,
      criterion8, criterion9,  criterion10, criterion11, criterion12, criterion13, criterion14};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!selected.empty() && !selected.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << o.detail.str()
              << " (" << fmt(secs, 1) << " s)" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}

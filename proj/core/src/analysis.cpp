#include "edgecache/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "edgecache/csv.hpp"
#include "edgecache/error.hpp"

namespace edgecache {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double occupancy(std::span<const double> rates, double t) {
  double s = 0.0;
  for (double r : rates) s += -std::expm1(-r * t);
  return s;
}

std::vector<double> scaled(std::span<const double> popularity, double factor) {
  std::vector<double> out(popularity.begin(), popularity.end());
  for (auto& r : out) r *= factor;
  return out;
}

// T_C and per-object residence probabilities for a cache whose object-j
// request rate is popularity[j] * rate_scale. Handles K = 0 and K >= F.
CheSolution solve_single(std::span<const double> popularity, double rate_scale,
                         std::size_t cache_size) {
  if (!(rate_scale > 0.0)) throw InvalidParameter("request rate scale must be positive");
  CheSolution sol;
  const std::size_t f = popularity.size();
  if (cache_size == 0) {
    sol.characteristic_time = 0.0;
    sol.per_object_hit.assign(f, 0.0);
    return sol;
  }
  if (cache_size >= f) {
    sol.characteristic_time = kInf;
    sol.per_object_hit.assign(f, 1.0);
    sol.solver_residual = static_cast<double>(f) - static_cast<double>(f);
    return sol;
  }
  const auto rates = scaled(popularity, rate_scale);
  sol.characteristic_time = solve_characteristic_time(rates, static_cast<double>(cache_size));
  sol.per_object_hit.resize(f);
  double sum = 0.0;
  for (std::size_t j = 0; j < f; ++j) {
    sol.per_object_hit[j] = -std::expm1(-rates[j] * sol.characteristic_time);
    sum += sol.per_object_hit[j];
  }
  sol.solver_residual = sum - static_cast<double>(cache_size);
  return sol;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

void check_params(const AnalyticModelParams& p) {
  if (p.popularity.empty()) throw InvalidParameter("empty popularity vector");
  if (!(p.lambda_u > 0.0)) throw InvalidParameter("lambda_u must be positive");
  if (p.profile.pm.empty()) throw InvalidParameter("coverage profile has no p_m");
}

}  // namespace

AnalyticModelParams AnalyticModelParams::for_field(std::vector<double> popularity,
                                                   double lambda_u, std::size_t cache_size,
                                                   const FieldParams& field,
                                                   CoverageProfile profile) {
  AnalyticModelParams p;
  p.popularity = std::move(popularity);
  p.lambda_u = lambda_u;
  p.cache_size = cache_size;
  p.voronoi_area = 1.0 / field.intensity;
  p.coverage_area = std::numbers::pi * field.coverage_radius * field.coverage_radius;
  p.profile = std::move(profile);
  return p;
}

double solve_characteristic_time(std::span<const double> rates, double cache_size,
                                 double tolerance) {
  if (rates.empty()) throw InvalidParameter("no object rates given");
  for (double r : rates) {
    if (!(r > 0.0) || !std::isfinite(r)) throw InvalidParameter("object rates must be positive");
  }
  if (cache_size >= static_cast<double>(rates.size())) {
    throw SolverError("no finite characteristic time: cache size " + csv::format(cache_size) +
                      " >= catalogue size " + std::to_string(rates.size()));
  }
  if (cache_size <= 0.0) return 0.0;

  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; occupancy(rates, hi) < cache_size; ++i) {
    lo = hi;
    hi *= 2.0;
    if (i > 2000) throw SolverError("characteristic time bracket did not close");
  }
  // The occupancy is strictly increasing, so bisect down to adjacent doubles.
  for (int i = 0; i < 4000; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (occupancy(rates, mid) < cache_size) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double r_lo = occupancy(rates, lo) - cache_size;
  const double r_hi = occupancy(rates, hi) - cache_size;
  const double t = std::abs(r_lo) <= std::abs(r_hi) ? lo : hi;
  const double residual = std::min(std::abs(r_lo), std::abs(r_hi));
  if (residual > tolerance) {
    throw SolverError("characteristic time residual " + csv::format(residual) +
                      " above tolerance");
  }
  return t;
}

CheSolution single_lru_hit(std::span<const double> popularity, double lambda_u, double area,
                           std::size_t cache_size) {
  if (!(area > 0.0)) throw InvalidParameter("cache area must be positive");
  if (!(lambda_u > 0.0)) throw InvalidParameter("lambda_u must be positive");
  CheSolution sol = solve_single(popularity, lambda_u * area, cache_size);
  sol.total_hit = dot(popularity, sol.per_object_hit);
  return sol;
}

CheSolution multi_lru_one_hit(const AnalyticModelParams& params) {
  check_params(params);
  CheSolution sol = solve_single(params.popularity, params.lambda_u * params.voronoi_area,
                                 params.cache_size);
  const auto& pm = params.profile.pm;
  double total = 0.0;
  for (std::size_t j = 0; j < params.popularity.size(); ++j) {
    const double miss_one = 1.0 - sol.per_object_hit[j];
    double hit = 0.0;
    double miss_m = 1.0;
    for (std::size_t m = 1; m < pm.size(); ++m) {
      miss_m *= miss_one;
      hit += pm[m] * (1.0 - miss_m);
    }
    total += params.popularity[j] * hit;
  }
  sol.total_hit = total;
  return sol;
}

CheSolution multi_lru_all_hit(const AnalyticModelParams& params) {
  check_params(params);
  if (!(params.coverage_area > 0.0)) throw InvalidParameter("coverage area must be positive");
  const auto& pm = params.profile.pm;
  const auto& surface = params.profile.union_surface;
  if (surface.size() < pm.size()) {
    throw InvalidParameter("union surfaces |A_m| missing for some coverage numbers");
  }
  CheSolution sol = solve_single(params.popularity, params.lambda_u * params.coverage_area,
                                 params.cache_size);
  const double tc = sol.characteristic_time;
  double total = 0.0;
  for (std::size_t j = 0; j < params.popularity.size(); ++j) {
    const double rate = params.popularity[j] * params.lambda_u;
    double hit = 0.0;
    for (std::size_t m = 1; m < pm.size(); ++m) {
      const double miss = std::isinf(tc) ? 0.0 : std::exp(-rate * surface[m] * tc);
      hit += pm[m] * (1.0 - miss);
    }
    total += params.popularity[j] * hit;
  }
  sol.total_hit = total;
  return sol;
}

CheSolution network_single_lru_hit(const AnalyticModelParams& params) {
  check_params(params);
  CheSolution sol = single_lru_hit(params.popularity, params.lambda_u, params.voronoi_area,
                                   params.cache_size);
  sol.total_hit *= 1.0 - params.profile.pm.front();
  return sol;
}

CheSolution two_cache_one_hit(std::span<const double> popularity, double lambda_u,
                              double voronoi_area, std::size_t cache_size) {
  if (!(voronoi_area > 0.0)) throw InvalidParameter("Voronoi area must be positive");
  if (!(lambda_u > 0.0)) throw InvalidParameter("lambda_u must be positive");
  CheSolution sol = solve_single(popularity, lambda_u * voronoi_area, cache_size);
  double total = 0.0;
  for (std::size_t j = 0; j < popularity.size(); ++j) {
    const double miss_one = 1.0 - sol.per_object_hit[j];
    total += popularity[j] * (1.0 - miss_one * miss_one);
  }
  sol.total_hit = total;
  return sol;
}

CheSolution two_cache_all_hit(std::span<const double> popularity, double lambda_u, double area,
                              std::size_t cache_size) {
  return single_lru_hit(popularity, lambda_u, area, cache_size);
}

void write_analytic_csv(std::ostream& os, std::span<const AnalyticRow> rows) {
  os << "r_b,n_bs,policy,analytic_hit,gamma,alpha\n";
  for (const auto& r : rows) {
    os << csv::format(r.r_b) << ',' << csv::format(r.n_bs) << ',' << r.policy << ','
       << csv::format(r.analytic_hit) << ',' << csv::format(r.gamma) << ','
       << csv::format(r.alpha) << '\n';
  }
}

}  // namespace edgecache

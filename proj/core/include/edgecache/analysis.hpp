#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "edgecache/geometry.hpp"

namespace edgecache {

/// Che-approximation output for one cache model.
struct CheSolution {
  double characteristic_time = 0.0;   ///< T_C [s]; +inf when K >= F
  std::vector<double> per_object_hit;  ///< P_hit,i(j), j = 1..F
  double total_hit = 0.0;
  double solver_residual = 0.0;  ///< sum_j P_hit,i(j) - K at the returned T_C
};

/// Inputs for the network-wide closed forms.
struct AnalyticModelParams {
  std::vector<double> popularity;  ///< a_j, j = 1..F
  double lambda_u = 0.023;         ///< requests per km^2 per second
  std::size_t cache_size = 100;
  double voronoi_area = 2.0;   ///< mean |V| = 1 / lambda_b [km^2]
  double coverage_area = 0.0;  ///< |C| = pi R_b^2 [km^2]
  CoverageProfile profile;     ///< p_m and |A_m|

  /// Builds the standard parameters for a Boolean field law.
  static AnalyticModelParams for_field(std::vector<double> popularity, double lambda_u,
                                       std::size_t cache_size, const FieldParams& field,
                                       CoverageProfile profile);
  /// Sufficient condition pi R_b^2 > |V| under which every Voronoi cell is
  /// assumed covered by its station.
  bool coverage_exceeds_voronoi() const noexcept { return coverage_area > voronoi_area; }
};

/// Root of sum_j (1 - exp(-rate_j T)) = K by bisection on [0, T_hi] with T_hi
/// doubled until the sum exceeds K. Throws SolverError when K >= F (no finite
/// root) and InvalidParameter on nonpositive rates.
double solve_characteristic_time(std::span<const double> rates, double cache_size,
                                 double tolerance = 1e-9);

/// Single LRU cache fed by IRM traffic over an area |A|.
CheSolution single_lru_hit(std::span<const double> popularity, double lambda_u, double area,
                           std::size_t cache_size);

/// multi-LRU-One under the cache independence approximation: T_C from the
/// Voronoi-area single-cache equation; a user covered m times misses with
/// probability (1 - P_hit(j))^m.
CheSolution multi_lru_one_hit(const AnalyticModelParams& params);

/// multi-LRU-All under the cache similarity approximation: T_C from the
/// coverage-cell equation; a user covered m times misses iff no request for
/// the object fell in the union surface |A_m| during T_C.
CheSolution multi_lru_all_hit(const AnalyticModelParams& params);

/// Single-LRU in the spatial network: the closest station serves covered
/// users only, so the single-cache hit is scaled by 1 - p_0.
CheSolution network_single_lru_hit(const AnalyticModelParams& params);

/// Two caches that both cover the whole area, Voronoi halves of |V| each,
/// under multi-LRU-One with CIA.
CheSolution two_cache_one_hit(std::span<const double> popularity, double lambda_u,
                              double voronoi_area, std::size_t cache_size);

/// Two fully overlapping caches over |A| under multi-LRU-All (exact under
/// the Che approximation since both inventories coincide).
CheSolution two_cache_all_hit(std::span<const double> popularity, double lambda_u, double area,
                              std::size_t cache_size);

/// One row of the analytic-curve CSV.
struct AnalyticRow {
  double r_b = 0.0;
  double n_bs = 0.0;
  std::string policy;
  double analytic_hit = 0.0;
  double gamma = 0.0;
  double alpha = 0.0;
};

/// Header `r_b,n_bs,policy,analytic_hit,gamma,alpha`.
void write_analytic_csv(std::ostream& os, std::span<const AnalyticRow> rows);

}  // namespace edgecache

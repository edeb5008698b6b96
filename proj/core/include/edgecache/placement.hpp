#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "edgecache/geometry.hpp"
#include "edgecache/traffic.hpp"

namespace edgecache {

/// Static per-station inventories prefetched by a popularity-based policy.
class PlacementPlan {
 public:
  PlacementPlan() = default;
  PlacementPlan(std::size_t n_stations, std::size_t capacity);

  std::size_t stations() const noexcept { return inventories_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }

  /// Adds `object` to `station`; false if already present. Throws
  /// ContractViolation when the station is full.
  bool add(std::size_t station, ObjectId object);
  bool holds(std::size_t station, ObjectId object) const;
  bool full(std::size_t station) const { return inventories_.at(station).size() >= capacity_; }
  /// Sorted ascending.
  const std::vector<ObjectId>& inventory(std::size_t station) const {
    return inventories_.at(station);
  }
  /// Replaces a station's inventory wholesale (at most `capacity` ids).
  void assign(std::size_t station, std::vector<ObjectId> objects);

 private:
  std::size_t capacity_ = 0;
  std::vector<std::vector<ObjectId>> inventories_;
};

/// CSV `station_id,object_id`, stations 0-based in field order.
void write_plan_csv(std::ostream& os, const PlacementPlan& plan);
PlacementPlan read_plan_csv(std::istream& is, std::size_t n_stations, std::size_t capacity);

/// Most Popular Content: every station holds objects 1..K.
PlacementPlan mpc_placement(std::span<const double> popularity, std::size_t cache_size,
                            std::size_t n_stations);

/// IRM upper bound for any static policy: sum_m p_m * sum_{j <= mK} a_j.
double irm_upper_bound(std::span<const double> pm, std::span<const double> popularity,
                       std::size_t cache_size);

struct GreedyPlacement {
  PlacementPlan plan;
  std::vector<double> gains;  ///< marginal objective gain of each accepted step
  double objective = 0.0;     ///< empirical hit probability over the sample points
};

/// Greedy full-information placement: repeatedly adds the (station, object)
/// pair with the largest marginal gain in empirical hit probability over
/// `user_points`, until all stations are full or no gain remains. Uses lazy
/// evaluation, which is exact because the coverage objective is submodular.
GreedyPlacement greedy_full_info_placement(const StationField& field,
                                           std::span<const Point> user_points,
                                           std::span<const double> popularity,
                                           std::size_t cache_size);

/// Empirical hit probability of a plan over sampled user points.
double placement_objective(const StationField& field, std::span<const Point> user_points,
                           std::span<const double> popularity, const PlacementPlan& plan);

/// Caching probabilities b_j in [0, 1], sum b_j = K, maximizing
/// sum_j a_j (1 - sum_m p_m (1 - b_j)^m). Bisection on the common Lagrange
/// multiplier with per-object bisection for the stationarity condition.
std::vector<double> pbp_probabilities(std::span<const double> pm,
                                      std::span<const double> popularity, std::size_t cache_size);

/// Objective value of a probability vector b under coverage law pm.
double pbp_objective(std::span<const double> pm, std::span<const double> popularity,
                     std::span<const double> b);

/// Probabilistic block placement: lays b_j end to end on [0, K) and gives a
/// station the objects whose segments contain U, U+1, ..., U+K-1 for one
/// uniform U. Each station gets exactly K distinct objects, object j with
/// probability b_j.
PlacementPlan pbp_placement(std::span<const double> pm, std::span<const double> popularity,
                            std::size_t cache_size, std::size_t n_stations, std::uint64_t seed);
PlacementPlan pbp_sample(std::span<const double> probabilities, std::size_t cache_size,
                         std::size_t n_stations, std::uint64_t seed);

/// Windowed upper bound for popularity-prefetching policies on a stream.
/// Time is cut at t_n = n * update_interval; requests in [t_n, t_n + update)
/// score sum_m p_m 1{object among the mK most requested in
/// [t_n - estimation_window, t_n)}. Only intervals with a full estimation
/// window are scored. Returns the request-weighted mean score.
double temporal_pop_bound(const RequestStream& stream, std::span<const double> pm,
                          std::size_t cache_size, double update_interval,
                          double estimation_window);

}  // namespace edgecache

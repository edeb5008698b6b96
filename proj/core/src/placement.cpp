#include "edgecache/placement.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <string>
#include <unordered_map>

#include "edgecache/csv.hpp"
#include "edgecache/error.hpp"
#include "edgecache/rng.hpp"

namespace edgecache {

PlacementPlan::PlacementPlan(std::size_t n_stations, std::size_t capacity)
    : capacity_(capacity), inventories_(n_stations) {}

bool PlacementPlan::add(std::size_t station, ObjectId object) {
  auto& inv = inventories_.at(station);
  auto it = std::lower_bound(inv.begin(), inv.end(), object);
  if (it != inv.end() && *it == object) return false;
  if (inv.size() >= capacity_) {
    throw ContractViolation("station " + std::to_string(station) + " inventory is full");
  }
  inv.insert(it, object);
  return true;
}

bool PlacementPlan::holds(std::size_t station, ObjectId object) const {
  const auto& inv = inventories_[station];
  return std::binary_search(inv.begin(), inv.end(), object);
}

void PlacementPlan::assign(std::size_t station, std::vector<ObjectId> objects) {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  if (objects.size() > capacity_) {
    throw ContractViolation("assigned inventory exceeds station capacity");
  }
  inventories_.at(station) = std::move(objects);
}

void write_plan_csv(std::ostream& os, const PlacementPlan& plan) {
  os << "station_id,object_id\n";
  for (std::size_t s = 0; s < plan.stations(); ++s) {
    for (auto obj : plan.inventory(s)) os << s << ',' << obj << '\n';
  }
}

PlacementPlan read_plan_csv(std::istream& is, std::size_t n_stations, std::size_t capacity) {
  PlacementPlan plan(n_stations, capacity);
  std::string line;
  if (!std::getline(is, line)) throw InvalidParameter("empty placement CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "station_id,object_id") {
    throw InvalidParameter("unexpected placement CSV header '" + line + "'");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = csv::split(line);
    if (f.size() != 2) throw InvalidParameter("placement CSV rows need 2 fields");
    const auto s = csv::parse_uint(f[0]);
    if (s >= n_stations) throw InvalidParameter("placement CSV station index out of range");
    plan.add(s, static_cast<ObjectId>(csv::parse_uint(f[1])));
  }
  return plan;
}

PlacementPlan mpc_placement(std::span<const double> popularity, std::size_t cache_size,
                            std::size_t n_stations) {
  const std::size_t k = std::min(cache_size, popularity.size());
  PlacementPlan plan(n_stations, cache_size);
  std::vector<ObjectId> top(k);
  for (std::size_t j = 0; j < k; ++j) top[j] = static_cast<ObjectId>(j + 1);
  for (std::size_t s = 0; s < n_stations; ++s) plan.assign(s, top);
  return plan;
}

double irm_upper_bound(std::span<const double> pm, std::span<const double> popularity,
                       std::size_t cache_size) {
  std::vector<double> prefix(popularity.size() + 1, 0.0);
  for (std::size_t j = 0; j < popularity.size(); ++j) prefix[j + 1] = prefix[j] + popularity[j];
  double bound = 0.0;
  for (std::size_t m = 1; m < pm.size(); ++m) {
    bound += pm[m] * prefix[std::min(m * cache_size, popularity.size())];
  }
  return bound;
}

double placement_objective(const StationField& field, std::span<const Point> user_points,
                           std::span<const double> popularity, const PlacementPlan& plan) {
  if (user_points.empty()) return 0.0;
  std::vector<std::size_t> cov;
  std::vector<ObjectId> seen;
  double total = 0.0;
  for (const auto& p : user_points) {
    field.covering_stations(p, cov);
    seen.clear();
    for (auto s : cov) {
      const auto& inv = plan.inventory(s);
      seen.insert(seen.end(), inv.begin(), inv.end());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (auto obj : seen) {
      if (obj >= 1 && obj <= popularity.size()) total += popularity[obj - 1];
    }
  }
  return total / static_cast<double>(user_points.size());
}

GreedyPlacement greedy_full_info_placement(const StationField& field,
                                           std::span<const Point> user_points,
                                           std::span<const double> popularity,
                                           std::size_t cache_size) {
  if (user_points.empty()) throw InvalidParameter("greedy placement needs user sample points");
  const std::size_t n_st = field.size();
  const std::size_t n_obj = popularity.size();
  const double inv_n = 1.0 / static_cast<double>(user_points.size());

  // Sample points inside each station's coverage disc.
  std::vector<std::vector<std::uint32_t>> members(n_st);
  std::vector<std::size_t> cov;
  for (std::size_t i = 0; i < user_points.size(); ++i) {
    field.covering_stations(user_points[i], cov);
    for (auto s : cov) members[s].push_back(static_cast<std::uint32_t>(i));
  }

  GreedyPlacement result{PlacementPlan(n_st, cache_size), {}, 0.0};
  // served[j] flags the sample points already holding object j+1 nearby.
  std::vector<std::vector<char>> served(n_obj);

  struct Entry {
    double gain;
    std::uint32_t station;
    ObjectId object;
    bool frontier;  // next-unvisited object for this station in popularity order
    bool operator<(const Entry& o) const {
      if (gain != o.gain) return gain < o.gain;
      if (station != o.station) return station > o.station;
      return object > o.object;
    }
  };
  std::priority_queue<Entry> heap;
  for (std::size_t s = 0; s < n_st; ++s) {
    if (!members[s].empty() && n_obj > 0 && cache_size > 0) {
      heap.push({popularity[0] * static_cast<double>(members[s].size()) * inv_n,
                 static_cast<std::uint32_t>(s), 1, true});
    }
  }

  auto gain_of = [&](std::size_t s, ObjectId obj) {
    const auto& flags = served[obj - 1];
    std::size_t fresh = members[s].size();
    if (!flags.empty()) {
      fresh = 0;
      for (auto i : members[s]) fresh += flags[i] ? 0 : 1;
    }
    return popularity[obj - 1] * static_cast<double>(fresh) * inv_n;
  };

  while (!heap.empty()) {
    const Entry top = heap.top();
    heap.pop();
    const std::size_t s = top.station;
    if (result.plan.full(s)) continue;
    if (top.frontier && top.object < n_obj) {
      const ObjectId next = top.object + 1;
      heap.push({popularity[next - 1] * static_cast<double>(members[s].size()) * inv_n,
                 top.station, next, true});
    }
    const double gain = gain_of(s, top.object);
    if (!(gain > 0.0)) continue;
    if (!heap.empty() && gain < heap.top().gain) {
      heap.push({gain, top.station, top.object, false});
      continue;
    }
    result.plan.add(s, top.object);
    result.gains.push_back(gain);
    result.objective += gain;
    auto& flags = served[top.object - 1];
    if (flags.empty()) flags.assign(user_points.size(), 0);
    for (auto i : members[s]) flags[i] = 1;
  }
  return result;
}

namespace {

// Derivative of 1 - sum_m p_m (1-b)^m with respect to b.
double coverage_slope(std::span<const double> pm, double b) {
  const double x = 1.0 - b;
  double acc = 0.0;
  for (std::size_t m = pm.size(); m-- > 1;) acc = acc * x + static_cast<double>(m) * pm[m];
  return acc;
}

std::vector<double> probabilities_at(std::span<const double> pm,
                                     std::span<const double> popularity, double mu) {
  const double slope0 = coverage_slope(pm, 0.0);
  const double slope1 = coverage_slope(pm, 1.0);
  std::vector<double> b(popularity.size(), 0.0);
  for (std::size_t j = 0; j < popularity.size(); ++j) {
    const double a = popularity[j];
    if (a * slope0 <= mu) continue;
    if (a * slope1 >= mu) {
      b[j] = 1.0;
      continue;
    }
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (a * coverage_slope(pm, mid) > mu) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    b[j] = 0.5 * (lo + hi);
  }
  return b;
}

double sum_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

std::vector<double> pbp_probabilities(std::span<const double> pm,
                                      std::span<const double> popularity,
                                      std::size_t cache_size) {
  const std::size_t f = popularity.size();
  if (cache_size > f) throw InvalidParameter("cache size exceeds catalogue size");
  if (cache_size == f) return std::vector<double>(f, 1.0);
  if (cache_size == 0) return std::vector<double>(f, 0.0);

  // Drop the zero tail of pm so the slope polynomial stays short.
  std::size_t m_hi = pm.size();
  while (m_hi > 1 && pm[m_hi - 1] == 0.0) --m_hi;
  const auto p = pm.first(m_hi);
  if (coverage_slope(p, 0.0) <= 0.0) {
    // Never covered: any feasible b is optimal; fall back to the top K.
    std::vector<double> b(f, 0.0);
    for (std::size_t j = 0; j < cache_size; ++j) b[j] = 1.0;
    return b;
  }

  const double k = static_cast<double>(cache_size);
  double mu_lo = 0.0;  // sum b(mu_lo) >= K
  double mu_hi = *std::max_element(popularity.begin(), popularity.end()) * coverage_slope(p, 0.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (mu_lo + mu_hi);
    if (mid <= mu_lo || mid >= mu_hi) break;
    if (sum_of(probabilities_at(p, popularity, mid)) >= k) {
      mu_lo = mid;
    } else {
      mu_hi = mid;
    }
  }
  // Interpolate across any jump of sum b(mu) (flat objective pieces).
  auto b_lo = probabilities_at(p, popularity, mu_lo);
  auto b_hi = probabilities_at(p, popularity, mu_hi);
  const double s_lo = sum_of(b_lo);
  const double s_hi = sum_of(b_hi);
  const double theta = s_lo > s_hi ? (k - s_hi) / (s_lo - s_hi) : 0.0;
  std::vector<double> b(f);
  for (std::size_t j = 0; j < f; ++j) {
    b[j] = std::clamp(b_hi[j] + theta * (b_lo[j] - b_hi[j]), 0.0, 1.0);
  }
  return b;
}

double pbp_objective(std::span<const double> pm, std::span<const double> popularity,
                     std::span<const double> b) {
  double total = 0.0;
  for (std::size_t j = 0; j < popularity.size(); ++j) {
    double miss = 0.0;
    double pow_m = 1.0;
    for (std::size_t m = 0; m < pm.size(); ++m) {
      miss += pm[m] * pow_m;
      pow_m *= 1.0 - b[j];
    }
    total += popularity[j] * (1.0 - miss);
  }
  return total;
}

PlacementPlan pbp_sample(std::span<const double> probabilities, std::size_t cache_size,
                         std::size_t n_stations, std::uint64_t seed) {
  PlacementPlan plan(n_stations, cache_size);
  // Segment j covers [start[j], start[j] + b_j).
  std::vector<double> ends(probabilities.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < probabilities.size(); ++j) ends[j] = (acc += probabilities[j]);
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t k = std::min(cache_size, probabilities.size());
  std::vector<ObjectId> inv;
  for (std::size_t s = 0; s < n_stations; ++s) {
    const double u = unit(rng);
    inv.clear();
    for (std::size_t i = 0; i < k; ++i) {
      const double point = u + static_cast<double>(i);
      auto it = std::upper_bound(ends.begin(), ends.end(), point);
      if (it == ends.end()) --it;  // rounding at the top of [0, K)
      inv.push_back(static_cast<ObjectId>(it - ends.begin()) + 1);
    }
    plan.assign(s, inv);
  }
  return plan;
}

PlacementPlan pbp_placement(std::span<const double> pm, std::span<const double> popularity,
                            std::size_t cache_size, std::size_t n_stations, std::uint64_t seed) {
  const auto b = pbp_probabilities(pm, popularity, cache_size);
  return pbp_sample(b, cache_size, n_stations, seed);
}

double temporal_pop_bound(const RequestStream& stream, std::span<const double> pm,
                          std::size_t cache_size, double update_interval,
                          double estimation_window) {
  if (!(update_interval > 0.0) || !(estimation_window > 0.0)) {
    throw InvalidParameter("update interval and estimation window must be positive");
  }
  if (stream.duration < estimation_window) {
    throw InvalidParameter("stream is shorter than the estimation window");
  }
  if (cache_size == 0) return 0.0;
  const std::size_t max_m = pm.empty() ? 0 : pm.size() - 1;
  // tail[m] = sum_{m' >= m} p_m'
  std::vector<double> tail(max_m + 2, 0.0);
  for (std::size_t m = max_m + 1; m-- > 0;) tail[m] = tail[m + 1] + pm[m];

  const auto& reqs = stream.requests;
  const std::span<const Request> all(reqs);
  double score = 0.0;
  std::size_t scored = 0;
  const auto first_n = static_cast<long>(std::ceil(estimation_window / update_interval - 1e-12));
  for (long n = first_n;; ++n) {
    const double t_n = static_cast<double>(n) * update_interval;
    if (t_n >= stream.duration) break;
    const double t_end = t_n + update_interval;
    auto by_time = [](const Request& r, double t) { return r.time < t; };
    auto begin = std::lower_bound(reqs.begin(), reqs.end(), t_n, by_time);
    auto end = std::lower_bound(begin, reqs.end(), t_end, by_time);
    if (begin == end) continue;
    const auto ranked = estimate_top_objects(all, t_n, estimation_window, max_m * cache_size);
    std::unordered_map<ObjectId, std::size_t> rank;
    rank.reserve(ranked.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) rank.emplace(ranked[i], i + 1);
    for (auto it = begin; it != end; ++it) {
      ++scored;
      auto r = rank.find(it->object);
      if (r == rank.end()) continue;
      // Object of rank r is among the mK most requested for m >= ceil(r / K).
      const std::size_t m_min = std::max<std::size_t>(1, (r->second + cache_size - 1) / cache_size);
      if (m_min <= max_m) score += tail[m_min];
    }
  }
  return scored == 0 ? 0.0 : score / static_cast<double>(scored);
}

}  // namespace edgecache

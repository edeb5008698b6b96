#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "edgecache/geometry.hpp"
#include "edgecache/rng.hpp"

namespace edgecache {

/// Catalogue index, 1-based. Under SNM traffic ids are assigned in birth order.
using ObjectId = std::uint32_t;

inline constexpr double kSecondsPerDay = 86400.0;

struct Request {
  double time = 0.0;  ///< seconds
  Point position{};   ///< km
  ObjectId object = 0;
  friend bool operator==(const Request&, const Request&) = default;
};

enum class TrafficKind { irm, snm };
std::string to_string(TrafficKind k);
TrafficKind parse_traffic_kind(const std::string& s);

/// Zipf popularity a_j = j^-gamma / D over objects 1..F.
std::vector<double> zipf_pmf(std::size_t catalogue_size, double gamma);

class ZipfCatalogue {
 public:
  ZipfCatalogue(std::size_t catalogue_size, double gamma);

  std::size_t size() const noexcept { return pmf_.size(); }
  double gamma() const noexcept { return gamma_; }
  double normalization() const noexcept { return normalization_; }
  const std::vector<double>& pmf() const noexcept { return pmf_; }
  /// Popularity of object `id` (1-based).
  double popularity(ObjectId id) const { return pmf_.at(id - 1); }

  /// Inverse-CDF draw; const and thread-safe.
  ObjectId sample(Rng& rng) const;

 private:
  double gamma_;
  double normalization_;
  std::vector<double> pmf_;
  std::vector<double> cdf_;
};

struct RequestStream {
  std::vector<Request> requests;
  double duration = 0.0;
  Window window{};
  TrafficKind kind = TrafficKind::irm;
};

/// Space-time homogeneous Poisson requests with i.i.d. Zipf marks, produced
/// one at a time. Exponential gaps at total rate lambda_u * |window| give the
/// same law as a Poisson count with uniform times.
class IrmGenerator {
 public:
  IrmGenerator(double lambda_u, Window window, double duration, const ZipfCatalogue& catalogue,
               std::uint64_t seed);

  std::optional<Request> next();
  double total_rate() const noexcept { return rate_; }

 private:
  Window window_;
  double duration_;
  double rate_;
  const ZipfCatalogue* catalogue_;
  Rng rng_;
  double clock_ = 0.0;
  std::exponential_distribution<double> gap_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

RequestStream sample_irm_stream(double lambda_u, Window window, double duration,
                                const ZipfCatalogue& catalogue, std::uint64_t seed);

/// Normalized request pulse g on the unit interval, given as a piecewise
/// linear density through `knots` (x strictly increasing from 0 to 1).
/// Lifespan scaling maps it onto [0, tau].
struct SnmShape {
  std::vector<Point> knots{{0.0, 1.0}, {1.0, 1.0}};

  static SnmShape rectangular();
  /// Triangle rising to its apex at `peak` in [0, 1].
  static SnmShape triangular(double peak);

  double density(double x) const;
  /// Integral over [0, 1] by composite Simpson quadrature of each piece.
  double integral() const;
  /// Throws InvalidParameter unless the knots are well-formed and integrate to 1.
  void validate() const;
  /// Inverse-CDF draw on [0, 1].
  double sample(Rng& rng) const;
  friend bool operator==(const SnmShape&, const SnmShape&) = default;
};

struct LifespanLaw {
  enum class Kind { exponential, fixed } kind = Kind::exponential;
  double mean_days = 3.0;
  friend bool operator==(const LifespanLaw&, const LifespanLaw&) = default;
};

struct VolumeLaw {
  enum class Kind { pareto, fixed } kind = Kind::pareto;
  double shape = 2.0;    ///< Pareto tail index
  double minimum = 10.0;  ///< Pareto scale, or the fixed volume
  double mean() const;
  friend bool operator==(const VolumeLaw&, const VolumeLaw&) = default;
};

struct SnmLaw {
  LifespanLaw lifespan{};
  VolumeLaw volume{};
  SnmShape shape{};
  double warmup_lifespans = 5.0;  ///< births are seeded on [-warmup * E[tau], 0)
  friend bool operator==(const SnmLaw&, const SnmLaw&) = default;
};

struct SnmContent {
  ObjectId id = 0;
  double birth_time = 0.0;  ///< seconds
  double lifespan = 0.0;    ///< seconds
  double volume = 0.0;      ///< expected total requests
};

/// Shot-noise traffic: contents are born at rate lambda_c per day; content n
/// gets Poisson(v_n) requests at times birth + tau_n * X, X ~ g_n, at uniform
/// positions. Returns the merged time-sorted requests inside [0, duration).
RequestStream sample_snm_stream(double lambda_c_per_day, const SnmLaw& law, Window window,
                                double duration, std::uint64_t seed,
                                std::vector<SnmContent>* contents = nullptr);

/// The `count` most requested objects in [t_now - window, t_now). Ties go to
/// the earlier last request, then to the lower id. `requests` must be
/// time-sorted.
std::vector<ObjectId> estimate_top_objects(std::span<const Request> requests, double t_now,
                                           double window, std::size_t count);

/// CSV with header `t_sec,x_km,y_km,object_id`.
void write_stream_csv(std::ostream& os, const RequestStream& stream);
RequestStream read_stream_csv(std::istream& is, Window window, TrafficKind kind = TrafficKind::irm);

}  // namespace edgecache

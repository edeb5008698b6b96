#include "edgecache/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "edgecache/csv.hpp"
#include "edgecache/error.hpp"

namespace edgecache {

std::string to_string(TrafficKind k) { return k == TrafficKind::irm ? "irm" : "snm"; }

TrafficKind parse_traffic_kind(const std::string& s) {
  if (s == "irm") return TrafficKind::irm;
  if (s == "snm") return TrafficKind::snm;
  throw InvalidParameter("unknown traffic kind '" + s + "' (expected irm or snm)");
}

std::vector<double> zipf_pmf(std::size_t catalogue_size, double gamma) {
  if (catalogue_size == 0) throw InvalidParameter("catalogue size must be at least 1");
  if (!(gamma >= 0.0)) throw InvalidParameter("Zipf exponent must be nonnegative");
  std::vector<double> pmf(catalogue_size);
  // Sum smallest terms first to keep the normalization accurate.
  double norm = 0.0;
  for (std::size_t j = catalogue_size; j >= 1; --j) {
    pmf[j - 1] = std::pow(static_cast<double>(j), -gamma);
    norm += pmf[j - 1];
  }
  for (auto& a : pmf) a /= norm;
  return pmf;
}

ZipfCatalogue::ZipfCatalogue(std::size_t catalogue_size, double gamma)
    : gamma_(gamma), normalization_(0.0), pmf_(zipf_pmf(catalogue_size, gamma)) {
  for (std::size_t j = catalogue_size; j >= 1; --j) {
    normalization_ += std::pow(static_cast<double>(j), -gamma);
  }
  cdf_.resize(pmf_.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < pmf_.size(); ++j) cdf_[j] = (acc += pmf_[j]);
  cdf_.back() = 1.0;
}

ObjectId ZipfCatalogue::sample(Rng& rng) const {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
  return static_cast<ObjectId>(idx) + 1;
}

IrmGenerator::IrmGenerator(double lambda_u, Window window, double duration,
                           const ZipfCatalogue& catalogue, std::uint64_t seed)
    : window_(window),
      duration_(duration),
      rate_(lambda_u * window.area()),
      catalogue_(&catalogue),
      rng_(make_rng(seed)),
      gap_(rate_ > 0.0 ? rate_ : 1.0) {
  if (!(lambda_u > 0.0)) throw InvalidParameter("user intensity lambda_u must be positive");
  if (!(duration > 0.0)) throw InvalidParameter("stream duration must be positive");
  if (!(window.area() > 0.0)) throw InvalidParameter("window must be nonempty");
}

std::optional<Request> IrmGenerator::next() {
  clock_ += gap_(rng_);
  if (clock_ >= duration_) return std::nullopt;
  Request r;
  r.time = clock_;
  r.position = {unit_(rng_) * window_.width, unit_(rng_) * window_.height};
  r.object = catalogue_->sample(rng_);
  return r;
}

RequestStream sample_irm_stream(double lambda_u, Window window, double duration,
                                const ZipfCatalogue& catalogue, std::uint64_t seed) {
  IrmGenerator gen(lambda_u, window, duration, catalogue, seed);
  RequestStream stream;
  stream.duration = duration;
  stream.window = window;
  stream.kind = TrafficKind::irm;
  stream.requests.reserve(static_cast<std::size_t>(gen.total_rate() * duration * 1.05) + 16);
  while (auto r = gen.next()) stream.requests.push_back(*r);
  return stream;
}

SnmShape SnmShape::rectangular() { return SnmShape{{{0.0, 1.0}, {1.0, 1.0}}}; }

SnmShape SnmShape::triangular(double peak) {
  if (!(peak >= 0.0 && peak <= 1.0)) throw InvalidParameter("triangular peak must lie in [0, 1]");
  if (peak == 0.0) return SnmShape{{{0.0, 2.0}, {1.0, 0.0}}};
  if (peak == 1.0) return SnmShape{{{0.0, 0.0}, {1.0, 2.0}}};
  return SnmShape{{{0.0, 0.0}, {peak, 2.0}, {1.0, 0.0}}};
}

double SnmShape::density(double x) const {
  if (x < 0.0 || x > 1.0 || knots.size() < 2) return 0.0;
  auto it = std::upper_bound(knots.begin(), knots.end(), x,
                             [](double v, const Point& k) { return v < k.x; });
  if (it == knots.end()) return knots.back().y;
  if (it == knots.begin()) return knots.front().y;
  const Point& b = *it;
  const Point& a = *(it - 1);
  const double w = b.x - a.x;
  return w > 0.0 ? a.y + (b.y - a.y) * (x - a.x) / w : a.y;
}

double SnmShape::integral() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i].x;
    const double b = knots[i + 1].x;
    const double fa = knots[i].y;
    const double fb = knots[i + 1].y;
    const double fm = 0.5 * (fa + fb);
    total += (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }
  return total;
}

void SnmShape::validate() const {
  if (knots.size() < 2) throw InvalidParameter("SNM shape needs at least two knots");
  if (knots.front().x != 0.0 || knots.back().x != 1.0) {
    throw InvalidParameter("SNM shape knots must span exactly [0, 1]");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!(knots[i].y >= 0.0)) throw InvalidParameter("SNM shape density must be nonnegative");
    if (i > 0 && !(knots[i].x > knots[i - 1].x)) {
      throw InvalidParameter("SNM shape knots must be strictly increasing in x");
    }
  }
  if (std::abs(integral() - 1.0) > 1e-9) {
    throw InvalidParameter("SNM shape does not integrate to 1 (integral = " +
                           std::to_string(integral()) + ")");
  }
}

double SnmShape::sample(Rng& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double target = unit(rng) * integral();
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double w = knots[i + 1].x - knots[i].x;
    const double y0 = knots[i].y;
    const double y1 = knots[i + 1].y;
    const double mass = 0.5 * (y0 + y1) * w;
    if (target > mass && i + 2 < knots.size()) {
      target -= mass;
      continue;
    }
    target = std::min(target, mass);
    // Solve y0*s + slope*s^2/2 = target for s in [0, w].
    const double slope = (y1 - y0) / w;
    double s = 0.0;
    if (std::abs(slope) < 1e-12) {
      s = y0 > 0.0 ? target / y0 : 0.5 * w;
    } else {
      const double disc = std::max(0.0, y0 * y0 + 2.0 * slope * target);
      s = (-y0 + std::sqrt(disc)) / slope;
    }
    return knots[i].x + std::clamp(s, 0.0, w);
  }
  return 1.0;
}

double VolumeLaw::mean() const {
  if (kind == Kind::fixed) return minimum;
  if (shape <= 1.0) return INFINITY;
  return shape * minimum / (shape - 1.0);
}

RequestStream sample_snm_stream(double lambda_c_per_day, const SnmLaw& law, Window window,
                                double duration, std::uint64_t seed,
                                std::vector<SnmContent>* contents) {
  if (lambda_c_per_day < 0.0) throw InvalidParameter("content birth rate must be nonnegative");
  if (!(duration > 0.0)) throw InvalidParameter("stream duration must be positive");
  if (!(law.lifespan.mean_days > 0.0)) throw InvalidParameter("mean lifespan must be positive");
  if (!(law.volume.minimum > 0.0)) throw InvalidParameter("content volume must be positive");
  if (law.volume.kind == VolumeLaw::Kind::pareto && !(law.volume.shape > 0.0)) {
    throw InvalidParameter("Pareto shape must be positive");
  }
  law.shape.validate();

  RequestStream stream;
  stream.duration = duration;
  stream.window = window;
  stream.kind = TrafficKind::snm;
  if (contents) contents->clear();
  if (lambda_c_per_day == 0.0) return stream;

  const double mean_tau = law.lifespan.mean_days * kSecondsPerDay;
  const double t_start = -law.warmup_lifespans * mean_tau;
  const double birth_rate = lambda_c_per_day / kSecondsPerDay;

  Rng births = make_rng(derive_seed(seed, 0));
  std::exponential_distribution<double> birth_gap(birth_rate);
  std::exponential_distribution<double> lifespan(1.0 / mean_tau);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  ObjectId next_id = 1;
  double t = t_start;
  while (true) {
    t += birth_gap(births);
    if (t >= duration) break;
    SnmContent c;
    c.id = next_id++;
    c.birth_time = t;
    c.lifespan = law.lifespan.kind == LifespanLaw::Kind::fixed ? mean_tau : lifespan(births);
    if (law.volume.kind == VolumeLaw::Kind::fixed) {
      c.volume = law.volume.minimum;
    } else {
      // Pareto by inversion: x_min * U^(-1/shape).
      c.volume = law.volume.minimum * std::pow(1.0 - unit(births), -1.0 / law.volume.shape);
    }
    if (c.birth_time + c.lifespan <= 0.0) continue;  // died before the window opened
    if (contents) contents->push_back(c);

    // Each content draws from its own child stream.
    Rng child = make_rng(derive_seed(seed, 0x100000000ULL + c.id));
    std::poisson_distribution<long> count(c.volume);
    const long n = count(child);
    for (long k = 0; k < n; ++k) {
      const double when = c.birth_time + c.lifespan * law.shape.sample(child);
      const Point where{unit(child) * window.width, unit(child) * window.height};
      if (when >= 0.0 && when < duration) stream.requests.push_back({when, where, c.id});
    }
  }
  std::stable_sort(stream.requests.begin(), stream.requests.end(),
                   [](const Request& a, const Request& b) { return a.time < b.time; });
  return stream;
}

std::vector<ObjectId> estimate_top_objects(std::span<const Request> requests, double t_now,
                                           double window, std::size_t count) {
  if (!(window > 0.0)) throw InvalidParameter("estimation window must be positive");
  const double t_from = t_now - window;
  auto by_time = [](const Request& r, double t) { return r.time < t; };
  auto first = std::lower_bound(requests.begin(), requests.end(), t_from, by_time);
  auto last = std::lower_bound(first, requests.end(), t_now, by_time);

  struct Tally {
    std::size_t hits = 0;
    double last_seen = 0.0;
  };
  std::unordered_map<ObjectId, Tally> tally;
  for (auto it = first; it != last; ++it) {
    auto& t = tally[it->object];
    ++t.hits;
    t.last_seen = it->time;
  }
  std::vector<std::pair<ObjectId, Tally>> ranked(tally.begin(), tally.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second.hits != b.second.hits) return a.second.hits > b.second.hits;
    if (a.second.last_seen != b.second.last_seen) return a.second.last_seen < b.second.last_seen;
    return a.first < b.first;
  });
  std::vector<ObjectId> out;
  out.reserve(std::min(count, ranked.size()));
  for (std::size_t i = 0; i < ranked.size() && i < count; ++i) out.push_back(ranked[i].first);
  return out;
}

void write_stream_csv(std::ostream& os, const RequestStream& stream) {
  os << "t_sec,x_km,y_km,object_id\n";
  for (const auto& r : stream.requests) {
    os << csv::format(r.time) << ',' << csv::format(r.position.x) << ','
       << csv::format(r.position.y) << ',' << r.object << '\n';
  }
}

RequestStream read_stream_csv(std::istream& is, Window window, TrafficKind kind) {
  RequestStream stream;
  stream.window = window;
  stream.kind = kind;
  std::string line;
  if (!std::getline(is, line)) throw InvalidParameter("empty stream CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t_sec,x_km,y_km,object_id") {
    throw InvalidParameter("unexpected stream CSV header '" + line + "'");
  }
  std::size_t lineno = 1;
  double prev = -INFINITY;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = csv::split(line);
    if (fields.size() != 4) {
      throw InvalidParameter("stream CSV line " + std::to_string(lineno) + ": expected 4 fields");
    }
    Request r;
    r.time = csv::parse_double(fields[0]);
    r.position = {csv::parse_double(fields[1]), csv::parse_double(fields[2])};
    r.object = static_cast<ObjectId>(csv::parse_uint(fields[3]));
    if (r.time < prev) {
      throw InvalidParameter("stream CSV line " + std::to_string(lineno) + ": time goes backwards");
    }
    prev = r.time;
    stream.requests.push_back(r);
  }
  stream.duration = stream.requests.empty() ? 0.0 : std::nextafter(prev, INFINITY);
  return stream;
}

}  // namespace edgecache

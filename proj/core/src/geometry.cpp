#include "edgecache/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "edgecache/error.hpp"
#include "edgecache/rng.hpp"

namespace edgecache {

std::string to_string(Placement p) {
  switch (p) {
    case Placement::ppp: return "ppp";
    case Placement::lattice: return "lattice";
    case Placement::explicit_positions: return "explicit";
  }
  return "?";
}

std::string to_string(BoundaryMode b) { return b == BoundaryMode::torus ? "torus" : "open"; }

Placement parse_placement(const std::string& s) {
  if (s == "ppp") return Placement::ppp;
  if (s == "lattice") return Placement::lattice;
  if (s == "explicit") return Placement::explicit_positions;
  throw InvalidParameter("unknown placement '" + s + "' (expected ppp, lattice or explicit)");
}

BoundaryMode parse_boundary(const std::string& s) {
  if (s == "torus") return BoundaryMode::torus;
  if (s == "open") return BoundaryMode::open;
  throw InvalidParameter("unknown boundary mode '" + s + "' (expected torus or open)");
}

std::string to_string(UnionSurfaceMode m) {
  return m == UnionSurfaceMode::formula ? "formula" : "monte_carlo";
}

UnionSurfaceMode parse_union_surface_mode(const std::string& s) {
  if (s == "formula") return UnionSurfaceMode::formula;
  if (s == "monte_carlo") return UnionSurfaceMode::monte_carlo;
  throw InvalidParameter("unknown union surface mode '" + s + "'");
}

double FieldParams::lattice_spacing() const {
  if (!(intensity > 0.0)) throw InvalidParameter("station intensity must be positive");
  return 1.0 / std::sqrt(intensity);
}

StationField::StationField(std::vector<Point> positions, Window window, double coverage_radius,
                           BoundaryMode boundary, double intensity, Placement placement)
    : positions_(std::move(positions)),
      window_(window),
      radius_(coverage_radius),
      radius_sq_(coverage_radius * coverage_radius),
      boundary_(boundary),
      intensity_(intensity),
      placement_(placement) {
  if (!(window_.width > 0.0) || !(window_.height > 0.0)) {
    throw InvalidParameter("window must have positive width and height");
  }
  if (!(radius_ > 0.0)) throw InvalidParameter("coverage radius must be positive");
  for (const auto& p : positions_) {
    if (!window_.contains(p)) throw InvalidParameter("station position outside window");
  }

  nx_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(window_.width / radius_)));
  ny_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(window_.height / radius_)));
  // Keep the grid bounded when R_b is tiny relative to the window.
  constexpr std::size_t kMaxCellsPerAxis = 2048;
  nx_ = std::min(nx_, kMaxCellsPerAxis);
  ny_ = std::min(ny_, kMaxCellsPerAxis);

  std::vector<std::uint32_t> counts(nx_ * ny_ + 1, 0);
  std::vector<std::size_t> cell_index(positions_.size());
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    const auto cx = cell_of(positions_[i].x, window_.width, nx_);
    const auto cy = cell_of(positions_[i].y, window_.height, ny_);
    cell_index[i] = cy * nx_ + cx;
    ++counts[cell_index[i] + 1];
  }
  for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
  cell_start_ = counts;
  cell_items_.resize(positions_.size());
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    cell_items_[counts[cell_index[i]]++] = static_cast<std::uint32_t>(i);
  }
}

std::size_t StationField::cell_of(double coord, double extent, std::size_t cells) const noexcept {
  auto c = static_cast<std::size_t>(coord / extent * static_cast<double>(cells));
  return std::min(c, cells - 1);
}

double StationField::squared_distance(Point a, Point b) const noexcept {
  double dx = std::abs(a.x - b.x);
  double dy = std::abs(a.y - b.y);
  if (boundary_ == BoundaryMode::torus) {
    dx = std::min(dx, window_.width - dx);
    dy = std::min(dy, window_.height - dy);
  }
  return dx * dx + dy * dy;
}

double StationField::distance(Point a, Point b) const noexcept {
  return std::sqrt(squared_distance(a, b));
}

void StationField::covering_stations(Point p, std::vector<std::size_t>& out) const {
  out.clear();
  const auto cx = static_cast<long>(cell_of(std::clamp(p.x, 0.0, window_.width), window_.width, nx_));
  const auto cy = static_cast<long>(cell_of(std::clamp(p.y, 0.0, window_.height), window_.height, ny_));
  const auto nx = static_cast<long>(nx_);
  const auto ny = static_cast<long>(ny_);
  const bool torus = boundary_ == BoundaryMode::torus;

  // Distinct neighbour cells; with fewer than 3 cells per axis the torus
  // wrap would otherwise visit a cell twice.
  std::array<long, 9> cells{};
  std::size_t n_cells = 0;
  for (long dy = -1; dy <= 1; ++dy) {
    long yy = cy + dy;
    if (torus) {
      yy = ((yy % ny) + ny) % ny;
    } else if (yy < 0 || yy >= ny) {
      continue;
    }
    for (long dx = -1; dx <= 1; ++dx) {
      long xx = cx + dx;
      if (torus) {
        xx = ((xx % nx) + nx) % nx;
      } else if (xx < 0 || xx >= nx) {
        continue;
      }
      const long c = yy * nx + xx;
      if (std::find(cells.begin(), cells.begin() + static_cast<long>(n_cells), c) ==
          cells.begin() + static_cast<long>(n_cells)) {
        cells[n_cells++] = c;
      }
    }
  }

  // (squared distance, index) pairs; m is small so insertion sort is fine.
  thread_local std::vector<std::pair<double, std::size_t>> hits;
  hits.clear();
  for (std::size_t k = 0; k < n_cells; ++k) {
    const auto c = static_cast<std::size_t>(cells[k]);
    for (auto it = cell_start_[c]; it < cell_start_[c + 1]; ++it) {
      const std::size_t s = cell_items_[it];
      const double d2 = squared_distance(p, positions_[s]);
      if (d2 <= radius_sq_) hits.emplace_back(d2, s);
    }
  }
  std::sort(hits.begin(), hits.end());
  for (const auto& h : hits) out.push_back(h.second);
}

std::vector<std::size_t> StationField::covering_stations(Point p) const {
  std::vector<std::size_t> out;
  covering_stations(p, out);
  return out;
}

std::size_t StationField::coverage_number(Point p) const {
  thread_local std::vector<std::size_t> buf;
  covering_stations(p, buf);
  return buf.size();
}

std::size_t StationField::closest_station(Point p) const {
  if (positions_.empty()) throw InvalidParameter("closest_station on an empty field");
  std::size_t best = 0;
  double best_d2 = squared_distance(p, positions_[0]);
  for (std::size_t i = 1; i < positions_.size(); ++i) {
    const double d2 = squared_distance(p, positions_[i]);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

StationField sample_station_field(const FieldParams& params, std::uint64_t seed) {
  if (!(params.window.width > 0.0) || !(params.window.height > 0.0)) {
    throw InvalidParameter("window must have positive width and height");
  }
  if (!(params.coverage_radius > 0.0)) throw InvalidParameter("coverage radius must be positive");

  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Window window = params.window;
  std::vector<Point> positions;

  switch (params.placement) {
    case Placement::ppp: {
      if (!(params.intensity > 0.0)) throw InvalidParameter("station intensity must be positive");
      std::poisson_distribution<long> count(params.intensity * window.area());
      const long n = count(rng);
      positions.reserve(static_cast<std::size_t>(n));
      for (long i = 0; i < n; ++i) {
        positions.push_back({unit(rng) * window.width, unit(rng) * window.height});
      }
      break;
    }
    case Placement::lattice: {
      const double eta = params.lattice_spacing();
      std::size_t nx = 0;
      std::size_t ny = 0;
      if (params.boundary == BoundaryMode::torus) {
        nx = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(window.width / eta)));
        ny = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(window.height / eta)));
        window = {static_cast<double>(nx) * eta, static_cast<double>(ny) * eta};
      }
      const double ox = unit(rng) * eta;
      const double oy = unit(rng) * eta;
      if (params.boundary == BoundaryMode::open) {
        nx = static_cast<std::size_t>(std::ceil((window.width - ox) / eta));
        ny = static_cast<std::size_t>(std::ceil((window.height - oy) / eta));
      }
      for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
          Point p{ox + static_cast<double>(i) * eta, oy + static_cast<double>(j) * eta};
          if (window.contains(p)) positions.push_back(p);
        }
      }
      break;
    }
    case Placement::explicit_positions:
      positions = params.stations;
      break;
  }
  return StationField(std::move(positions), window, params.coverage_radius, params.boundary,
                      params.intensity, params.placement);
}

std::vector<double> poisson_pm(double nu, std::size_t max_m) {
  if (nu < 0.0) throw InvalidParameter("Poisson parameter must be nonnegative");
  std::vector<double> pm(max_m + 1, 0.0);
  double term = std::exp(-nu);
  double acc = 0.0;
  for (std::size_t m = 0; m < max_m; ++m) {
    pm[m] = term;
    acc += term;
    term *= nu / static_cast<double>(m + 1);
  }
  pm[max_m] = std::max(0.0, 1.0 - acc);
  return pm;
}

namespace {

double mean_of(const std::vector<double>& pm) {
  double mean = 0.0;
  for (std::size_t m = 0; m < pm.size(); ++m) mean += static_cast<double>(m) * pm[m];
  return mean;
}

double formula_surface(long m, double radius) {
  const double a1 = std::numbers::pi * radius * radius;
  const double a_inf = a1 * (25.0 / 9.0);
  const double delta = -std::log(1.0 - a1 / a_inf);
  return a_inf * (1.0 - std::exp(-static_cast<double>(m) * delta));
}

// Monte Carlo union surfaces for m = 0..max_m in one pass: each raster point
// is charged to every m greater than the index of the first disc covering it.
std::vector<double> mc_union_curve(std::size_t max_m, double radius, std::uint64_t seed,
                                   std::size_t trials) {
  constexpr std::size_t kGrid = 160;
  const double half = 2.0 * radius;
  const double cell = 2.0 * half / static_cast<double>(kGrid);
  const double cell_area = cell * cell;
  const double r2 = radius * radius;

  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> acc(max_m + 1, 0.0);
  std::vector<Point> centres(max_m);
  std::vector<double> first_hits(max_m + 1);

  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& c : centres) {
      // Distance of a uniform point in a disc from its centre: R * sqrt(U).
      const double r = radius * std::sqrt(unit(rng));
      const double theta = 2.0 * std::numbers::pi * unit(rng);
      c = {r * std::cos(theta), r * std::sin(theta)};
    }
    std::fill(first_hits.begin(), first_hits.end(), 0.0);
    for (std::size_t gy = 0; gy < kGrid; ++gy) {
      const double y = -half + (static_cast<double>(gy) + 0.5) * cell;
      for (std::size_t gx = 0; gx < kGrid; ++gx) {
        const double x = -half + (static_cast<double>(gx) + 0.5) * cell;
        for (std::size_t k = 0; k < max_m; ++k) {
          const double dx = x - centres[k].x;
          const double dy = y - centres[k].y;
          if (dx * dx + dy * dy <= r2) {
            first_hits[k + 1] += 1.0;
            break;
          }
        }
      }
    }
    double running = 0.0;
    for (std::size_t m = 1; m <= max_m; ++m) {
      running += first_hits[m];
      acc[m] += running * cell_area;
    }
  }
  for (auto& a : acc) a /= static_cast<double>(trials);
  if (max_m >= 1) acc[1] = std::numbers::pi * r2;
  // Enforce monotonicity against residual raster noise.
  for (std::size_t m = 2; m <= max_m; ++m) acc[m] = std::max(acc[m], acc[m - 1]);
  return acc;
}

std::vector<double> union_curve(std::size_t max_m, double radius, UnionSurfaceMode mode,
                                std::uint64_t seed, std::size_t trials) {
  if (mode == UnionSurfaceMode::monte_carlo) return mc_union_curve(max_m, radius, seed, trials);
  std::vector<double> out(max_m + 1, 0.0);
  for (std::size_t m = 1; m <= max_m; ++m) out[m] = formula_surface(static_cast<long>(m), radius);
  return out;
}

}  // namespace

double estimate_union_surface(long m, double radius, UnionSurfaceMode mode, std::uint64_t seed,
                              std::size_t trials) {
  if (m < 0) throw InvalidParameter("union surface requested for negative m");
  if (!(radius > 0.0)) throw InvalidParameter("coverage radius must be positive");
  if (m == 0) return 0.0;
  if (m == 1) return std::numbers::pi * radius * radius;
  if (mode == UnionSurfaceMode::formula) return formula_surface(m, radius);
  return mc_union_curve(static_cast<std::size_t>(m), radius, seed, trials)[static_cast<std::size_t>(m)];
}

CoverageProfile estimate_coverage_profile(const FieldParams& params, const CoverageOptions& opts,
                                          std::uint64_t seed) {
  if (opts.n_samples < 1) throw InvalidParameter("coverage profile needs at least one sample");
  if (!(params.coverage_radius > 0.0)) throw InvalidParameter("coverage radius must be positive");
  CoverageProfile profile;
  const bool analytic =
      opts.method == CoverageMethod::analytic ||
      (opts.method == CoverageMethod::automatic && params.placement == Placement::ppp);

  if (analytic) {
    if (params.placement != Placement::ppp) {
      throw InvalidParameter("analytic coverage profile only exists for PPP placement");
    }
    const double nu = params.intensity * std::numbers::pi * params.coverage_radius *
                      params.coverage_radius;
    profile.pm = poisson_pm(nu, opts.max_m);
  } else {
    std::vector<double> counts(opts.max_m + 1, 0.0);
    const std::size_t per_field = std::max<std::size_t>(1, opts.samples_per_field);
    const std::size_t n_fields = (opts.n_samples + per_field - 1) / per_field;
    std::size_t remaining = opts.n_samples;
    std::vector<std::size_t> buf;
    for (std::size_t f = 0; f < n_fields; ++f) {
      const StationField field = sample_station_field(params, derive_seed(seed, 2 * f));
      Rng rng = make_rng(derive_seed(seed, 2 * f + 1));
      std::uniform_real_distribution<double> ux(0.0, field.window().width);
      std::uniform_real_distribution<double> uy(0.0, field.window().height);
      const std::size_t n = std::min(per_field, remaining);
      remaining -= n;
      for (std::size_t i = 0; i < n; ++i) {
        field.covering_stations({ux(rng), uy(rng)}, buf);
        counts[std::min(buf.size(), opts.max_m)] += 1.0;
      }
    }
    for (auto& c : counts) c /= static_cast<double>(opts.n_samples);
    profile.pm = std::move(counts);
  }
  profile.mean_coverage = mean_of(profile.pm);
  profile.union_surface = union_curve(opts.max_m, params.coverage_radius, opts.union_mode,
                                      derive_seed(seed, 0x756e696f6eULL), opts.union_trials);
  return profile;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  const std::size_t n = std::max(p.size(), q.size());
  double tv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    tv += std::abs(a - b);
  }
  return 0.5 * tv;
}

}  // namespace edgecache

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace edgecache {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Axis-aligned observation window [0, width) x [0, height), in km.
struct Window {
  double width = 12.0;
  double height = 12.0;
  double area() const noexcept { return width * height; }
  bool contains(Point p) const noexcept {
    return p.x >= 0.0 && p.x < width && p.y >= 0.0 && p.y < height;
  }
  friend bool operator==(const Window&, const Window&) = default;
};

enum class Placement { ppp, lattice, explicit_positions };
enum class BoundaryMode { torus, open };

std::string to_string(Placement p);
std::string to_string(BoundaryMode b);
Placement parse_placement(const std::string& s);
BoundaryMode parse_boundary(const std::string& s);

struct FieldParams {
  Placement placement = Placement::ppp;
  double intensity = 0.5;  ///< stations per km^2
  Window window{};
  double coverage_radius = 1.0;  ///< Boolean disc radius R_b [km]
  BoundaryMode boundary = BoundaryMode::torus;
  std::vector<Point> stations;  ///< used only for Placement::explicit_positions

  /// Lattice edge eta = intensity^(-1/2).
  double lattice_spacing() const;
  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// A realized set of base stations with Boolean disc coverage.
///
/// Immutable after construction; queries are const and safe to share across
/// threads. Coverage queries go through a uniform grid with cell edge >= R_b,
/// so only the 3x3 neighbourhood of a query point is scanned.
class StationField {
 public:
  StationField(std::vector<Point> positions, Window window, double coverage_radius,
               BoundaryMode boundary, double intensity, Placement placement);

  const std::vector<Point>& positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  const Window& window() const noexcept { return window_; }
  double coverage_radius() const noexcept { return radius_; }
  BoundaryMode boundary() const noexcept { return boundary_; }
  double intensity() const noexcept { return intensity_; }
  Placement placement() const noexcept { return placement_; }

  /// Euclidean distance, wrapped around the window on a torus.
  double distance(Point a, Point b) const noexcept;
  double squared_distance(Point a, Point b) const noexcept;

  /// Stations whose disc contains `p`, by ascending distance (ties by index).
  std::vector<std::size_t> covering_stations(Point p) const;
  /// Allocation-free variant for the simulation hot loop; `out` is cleared.
  void covering_stations(Point p, std::vector<std::size_t>& out) const;
  std::size_t coverage_number(Point p) const;

  /// Voronoi owner of `p`; ties go to the lowest index. Throws on empty field.
  std::size_t closest_station(Point p) const;

 private:
  std::size_t cell_of(double coord, double extent, std::size_t cells) const noexcept;

  std::vector<Point> positions_;
  Window window_;
  double radius_;
  double radius_sq_;
  BoundaryMode boundary_;
  double intensity_;
  Placement placement_;

  std::size_t nx_ = 1;
  std::size_t ny_ = 1;
  std::vector<std::uint32_t> cell_start_;  // CSR layout, size nx*ny + 1
  std::vector<std::uint32_t> cell_items_;
};

/// Draws a station field. PPP: Poisson(intensity * |window|) uniform points.
/// Lattice: square grid of edge intensity^(-1/2) with a uniform random
/// translation; on a torus the window is snapped to a whole number of lattice
/// periods so the grid stays regular across the seam.
StationField sample_station_field(const FieldParams& params, std::uint64_t seed);

/// Coverage-number distribution and union coverage surfaces.
struct CoverageProfile {
  std::vector<double> pm;             ///< P(N = m), m = 0..M_max
  double mean_coverage = 0.0;         ///< sum m * pm
  std::vector<double> union_surface;  ///< |A_m| [km^2], m = 0..M_max

  std::size_t max_m() const noexcept { return pm.empty() ? 0 : pm.size() - 1; }
};

inline constexpr std::size_t kDefaultMaxCoverage = 32;

enum class UnionSurfaceMode { formula, monte_carlo };
enum class CoverageMethod { automatic, analytic, monte_carlo };

std::string to_string(UnionSurfaceMode m);
UnionSurfaceMode parse_union_surface_mode(const std::string& s);

/// Poisson(nu) mass on 0..max_m with the tail folded into the last bin.
std::vector<double> poisson_pm(double nu, std::size_t max_m = kDefaultMaxCoverage);

struct CoverageOptions {
  std::size_t n_samples = 100000;
  std::size_t samples_per_field = 1000;
  std::size_t max_m = kDefaultMaxCoverage;
  CoverageMethod method = CoverageMethod::automatic;
  UnionSurfaceMode union_mode = UnionSurfaceMode::formula;
  std::size_t union_trials = 400;
};

/// Coverage profile for the given field law. `automatic` uses Poisson(nu),
/// nu = intensity * pi * R_b^2, for PPP and Monte Carlo otherwise.
CoverageProfile estimate_coverage_profile(const FieldParams& params, const CoverageOptions& opts,
                                          std::uint64_t seed);

/// Mean surface of the union of m coverage discs that all cover a common
/// user. `formula` is the exponential-saturation closed form with
/// |A_1| = pi R^2 and |A_inf| = (5/3)^2 |A_1|; `monte_carlo` draws disc centres
/// at the covered-user-to-station distance law (density 2r/R^2) and rasterizes.
double estimate_union_surface(long m, double radius, UnionSurfaceMode mode, std::uint64_t seed,
                              std::size_t trials = 400);

/// Total-variation distance between two mass vectors (shorter one zero-padded).
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace edgecache

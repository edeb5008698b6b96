#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "edgecache/analysis.hpp"
#include "edgecache/error.hpp"
#include "edgecache/placement.hpp"
#include "edgecache/traffic.hpp"
#include "oracles.hpp"

using namespace edgecache;

namespace {

AnalyticModelParams params_for(double r, std::size_t k, double gamma = 0.78,
                               std::size_t f = 2000) {
  FieldParams field;
  field.intensity = 0.5;
  field.coverage_radius = r;
  return AnalyticModelParams::for_field(zipf_pmf(f, gamma), 0.023, k, field,
                                        estimate_coverage_profile(field, {}, 1));
}

CoverageProfile single_profile(double area) {
  CoverageProfile p;
  p.pm = {0.0, 1.0};
  p.mean_coverage = 1.0;
  p.union_surface = {0.0, area};
  return p;
}

}  // namespace

TEST(SolverTest, ClosedForms) {
  const std::vector<double> two{0.5, 0.5};
  EXPECT_NEAR(solve_characteristic_time(two, 1), 2 * std::log(2.0), 1e-12);
  const double r = 0.37;
  const std::vector<double> three{r, r, r};
  EXPECT_NEAR(solve_characteristic_time(three, 2), std::log(3.0) / r, 1e-11);
}

TEST(SolverTest, Errors) {
  const std::vector<double> two{0.5, 0.5};
  EXPECT_THROW(solve_characteristic_time(two, 2), SolverError);
  EXPECT_THROW(solve_characteristic_time(two, 3), SolverError);
  const std::vector<double> bad{0.5, 0.0};
  EXPECT_THROW(solve_characteristic_time(bad, 1), InvalidParameter);
  EXPECT_EQ(solve_characteristic_time(two, 0), 0.0);
}

TEST(SolverTest, MatchesNewtonOracleAtScale) {
  const auto a = zipf_pmf(10000, 0.78);
  std::vector<double> rates(a);
  for (auto& x : rates) x *= 0.023 * 2.0;
  const double t = solve_characteristic_time(rates, 500);
  const double ref = static_cast<double>(oracle::che_newton(rates, 500));
  EXPECT_NEAR(t / ref, 1.0, 1e-10);
}

TEST(SolverTest, ResidualOnRandomInstances) {
  Rng rng = make_rng(2024);
  std::uniform_int_distribution<int> fsize(2, 3000);
  std::uniform_real_distribution<double> logr(-6, 3);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> rates(static_cast<std::size_t>(fsize(rng)));
    for (auto& x : rates) x = std::pow(10.0, logr(rng));
    std::uniform_int_distribution<std::size_t> kd(1, rates.size() - 1);
    const double k = static_cast<double>(kd(rng));
    const double t = solve_characteristic_time(rates, k);
    double s = 0.0;
    for (double x : rates) s += -std::expm1(-x * t);
    EXPECT_LE(std::abs(s - k), 1e-9);
  }
}

TEST(SingleLruTest, Examples) {
  const std::vector<double> a{0.5, 0.5};
  const auto s = single_lru_hit(a, 1.0, 1.0, 1);
  EXPECT_NEAR(s.per_object_hit[0], 0.5, 1e-12);
  EXPECT_NEAR(s.total_hit, 0.5, 1e-12);
  const auto full = single_lru_hit(zipf_pmf(50, 0.8), 0.023, 2.0, 50);
  EXPECT_DOUBLE_EQ(full.total_hit, 1.0);
  const auto none = single_lru_hit(zipf_pmf(50, 0.8), 0.023, 2.0, 0);
  EXPECT_EQ(none.total_hit, 0.0);
}

TEST(SingleLruTest, FixedPointConstraint) {
  for (std::size_t k : {1u, 10u, 50u, 999u}) {
    const auto s = single_lru_hit(zipf_pmf(1000, 0.78), 0.023, 2.0, k);
    const double sum = std::accumulate(s.per_object_hit.begin(), s.per_object_hit.end(), 0.0);
    EXPECT_NEAR(sum, static_cast<double>(k), 1e-6);
    EXPECT_NEAR(s.total_hit, oracle::che_single_total(zipf_pmf(1000, 0.78), 0.046, k), 1e-9);
  }
}

TEST(SingleLruTest, AgreesWithListLruSimulation) {
  const ZipfCatalogue cat(1000, 0.78);
  oracle::ListLru lru{50, {}};
  Rng rng = make_rng(77);
  std::size_t hits = 0;
  const std::size_t warm = 100000;
  const std::size_t n = 1000000;
  for (std::size_t i = 0; i < warm + n; ++i) {
    const bool h = lru.request(cat.sample(rng));
    if (i >= warm && h) ++hits;
  }
  const double sim = static_cast<double>(hits) / static_cast<double>(n);
  EXPECT_NEAR(single_lru_hit(cat.pmf(), 0.023, 2.0, 50).total_hit, sim, 0.02);
}

TEST(CiaTest, Degeneracies) {
  auto p = params_for(1.2, 40);
  p.profile = single_profile(p.coverage_area);
  const auto single = single_lru_hit(p.popularity, p.lambda_u, p.voronoi_area, p.cache_size);
  EXPECT_NEAR(multi_lru_one_hit(p).total_hit, single.total_hit, 1e-12);
  p.profile.pm = {1.0, 0.0};
  EXPECT_EQ(multi_lru_one_hit(p).total_hit, 0.0);
}

TEST(CsaTest, Degeneracies) {
  auto p = params_for(1.2, 40);
  p.profile = single_profile(p.coverage_area);
  const auto single = single_lru_hit(p.popularity, p.lambda_u, p.coverage_area, p.cache_size);
  EXPECT_NEAR(multi_lru_all_hit(p).total_hit, single.total_hit, 1e-12);

  auto q = params_for(1.2, 40);
  for (std::size_t m = 1; m < q.profile.union_surface.size(); ++m) {
    q.profile.union_surface[m] = q.coverage_area;
  }
  EXPECT_NEAR(multi_lru_all_hit(q).total_hit, (1.0 - q.profile.pm[0]) * single.total_hit, 1e-12);
}

TEST(CiaCsaTest, CoincideWhenVoronoiEqualsCellUnderSingleCoverage) {
  auto p = params_for(1.0, 25);
  p.voronoi_area = p.coverage_area;
  p.profile = single_profile(p.coverage_area);
  const auto one = multi_lru_one_hit(p);
  const auto all = multi_lru_all_hit(p);
  EXPECT_NEAR(one.total_hit, all.total_hit, 1e-12);
  for (std::size_t j = 0; j < one.per_object_hit.size(); ++j) {
    EXPECT_NEAR(one.per_object_hit[j], all.per_object_hit[j], 1e-12);
  }
}

TEST(CsaTest, NeedsUnionSurfaces) {
  auto p = params_for(1.0, 25);
  p.profile.union_surface.resize(2);
  EXPECT_THROW(multi_lru_all_hit(p), InvalidParameter);
}

TEST(AnalyticMonotonicity, InCacheSizeGammaAndCoverage) {
  double prev_one = 0.0;
  double prev_all = 0.0;
  for (std::size_t k : {5u, 20u, 80u, 320u}) {
    const auto p = params_for(1.2, k);
    EXPECT_GE(multi_lru_one_hit(p).total_hit, prev_one);
    EXPECT_GE(multi_lru_all_hit(p).total_hit, prev_all);
    prev_one = multi_lru_one_hit(p).total_hit;
    prev_all = multi_lru_all_hit(p).total_hit;
  }
  prev_one = prev_all = 0.0;
  for (double g : {0.4, 0.6, 0.78, 1.0, 1.2}) {
    const auto p = params_for(1.2, 40, g);
    EXPECT_GT(multi_lru_one_hit(p).total_hit, prev_one);
    EXPECT_GT(multi_lru_all_hit(p).total_hit, prev_all);
    prev_one = multi_lru_one_hit(p).total_hit;
    prev_all = multi_lru_all_hit(p).total_hit;
  }
  prev_one = prev_all = 0.0;
  for (double r : {0.6, 0.8, 1.13, 1.38, 1.6, 2.0, 2.25}) {
    const auto p = params_for(r, 40);
    EXPECT_GT(multi_lru_one_hit(p).total_hit, prev_one);
    EXPECT_GT(multi_lru_all_hit(p).total_hit, prev_all);
    prev_one = multi_lru_one_hit(p).total_hit;
    prev_all = multi_lru_all_hit(p).total_hit;
  }
}

TEST(AnalyticBounds, BelowIrmUpperBound) {
  for (double r : {0.6, 1.13, 1.6, 2.25}) {
    for (std::size_t k : {20u, 100u, 400u}) {
      const auto p = params_for(r, k);
      const double bound = irm_upper_bound(p.profile.pm, p.popularity, k);
      EXPECT_LE(multi_lru_one_hit(p).total_hit, bound + 1e-12);
      EXPECT_LE(multi_lru_all_hit(p).total_hit, bound + 1e-12);
      EXPECT_LE(network_single_lru_hit(p).total_hit, bound + 1e-12);
    }
  }
}

TEST(TwoCacheTest, AllEqualsGeneralFormWithTwoFullCovers) {
  const auto a = zipf_pmf(1000, 0.78);
  const double area = 2.0;
  AnalyticModelParams p;
  p.popularity = a;
  p.lambda_u = 0.023;
  p.cache_size = 50;
  p.voronoi_area = 1.0;
  p.coverage_area = area;
  p.profile.pm = {0.0, 0.0, 1.0};
  p.profile.mean_coverage = 2.0;
  p.profile.union_surface = {0.0, area, area};
  const auto general = multi_lru_all_hit(p);
  const auto appendix = two_cache_all_hit(a, 0.023, area, 50);
  EXPECT_NEAR(general.total_hit, appendix.total_hit, 1e-12);
  EXPECT_NEAR(appendix.total_hit, single_lru_hit(a, 0.023, area, 50).total_hit, 1e-15);
}

TEST(TwoCacheTest, OneFormAndEdges) {
  const auto a = zipf_pmf(100, 0.0);
  const auto s = two_cache_one_hit(a, 0.023, 1.0, 10);
  const double h = s.per_object_hit[0];
  EXPECT_NEAR(s.total_hit, 1.0 - (1.0 - h) * (1.0 - h), 1e-12);
  EXPECT_NEAR(h, 0.1, 1e-9);
  EXPECT_EQ(two_cache_one_hit(a, 0.023, 1.0, 0).total_hit, 0.0);
  EXPECT_DOUBLE_EQ(two_cache_one_hit(a, 0.023, 1.0, 100).total_hit, 1.0);
  EXPECT_EQ(two_cache_all_hit(a, 0.023, 2.0, 0).total_hit, 0.0);
}

TEST(AnalyticCsvTest, Header) {
  std::vector<AnalyticRow> rows{{1.13, 2.0, "multi_lru_one", 0.25, 0.78, 0.01}};
  std::stringstream ss;
  write_analytic_csv(ss, rows);
  EXPECT_EQ(ss.str(), "r_b,n_bs,policy,analytic_hit,gamma,alpha\n1.13,2,multi_lru_one,0.25,0.78,0.01\n");
}

TEST(AnalyticParamsTest, VoronoiCheck) {
  EXPECT_FALSE(params_for(0.6, 10).coverage_exceeds_voronoi());
  EXPECT_TRUE(params_for(0.8, 10).coverage_exceeds_voronoi());
  EXPECT_NEAR(params_for(0.8, 10).voronoi_area, 2.0, 1e-15);
}

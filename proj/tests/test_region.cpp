#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "icbounds/channel.hpp"
#include "icbounds/inner.hpp"
#include "icbounds/region.hpp"

using namespace icbounds;
using namespace icbounds::region;

namespace {

const Channel kFig2 = Channel{0.09, 0.04, 10, 20};

bool frontier_is_convex(const RegionPolygon& poly) {
  // Vertices run with r1 decreasing; the region under the frontier is convex
  // iff consecutive edges never turn clockwise.
  for (std::size_t i = 0; i + 2 < poly.vertices.size(); ++i) {
    const auto& p = poly.vertices[i];
    const auto& q = poly.vertices[i + 1];
    const auto& r = poly.vertices[i + 2];
    const double cross = (q.r1 - p.r1) * (r.r2 - p.r2) -
                         (q.r2 - p.r2) * (r.r1 - p.r1);
    if (cross < -1e-9) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("outer support at selected weights") {
  const HalfPlane sum = outer_support(kFig2, 1.0);
  CHECK(std::abs(sum.c - 3.0633785711429694) <= 1e-4);
  CHECK(sum.source == outer::BoundSource::thm1_constraint1);

  // w = 1/b is the top of the eta1 range, so constraint 2 applies there
  CHECK_NOTHROW(outer_support(kFig2, 25.0));

  // below the eta2 range only constraint 1 applies and still yields a bound
  const HalfPlane low = outer_support(kFig2, 0.05);
  CHECK(low.source == outer::BoundSource::thm1_constraint1);
  CHECK(std::isfinite(low.c));

  CHECK_THROWS_AS(outer_support(Channel{1.2, 0.4, 1, 1}, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(outer_support(kFig2, 0.0), std::invalid_argument);
}

TEST_CASE("region polygon basics") {
  const RegionPolygon poly = outer_region(kFig2);
  REQUIRE(poly.vertices.size() >= 3);

  // frontier orientation and convexity
  for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
    CHECK(poly.vertices[i].r1 >= poly.vertices[i + 1].r1 - 1e-12);
    CHECK(poly.vertices[i].r2 <= poly.vertices[i + 1].r2 + 1e-12);
  }
  CHECK(frontier_is_convex(poly));

  // every vertex satisfies every generating half-plane
  for (const auto& v : poly.vertices) {
    CHECK(contains(poly, v));
  }

  // the TIN full-power point lies inside
  CHECK(contains(poly, inner::tin_rates(kFig2, 10, 20)));
  CHECK(contains(poly, inner::RatePair{0.0, 0.0}));

  // single-user caps box the polygon
  const double cap1 = 0.5 * std::log2(11.0);
  const double cap2 = 0.5 * std::log2(21.0);
  for (const auto& v : poly.vertices) {
    CHECK(v.r1 <= cap1 + 1e-9);
    CHECK(v.r2 <= cap2 + 1e-9);
  }
  CHECK_FALSE(contains(poly, inner::RatePair{cap1 + 0.1, 0.0}));
  CHECK_FALSE(contains(poly, inner::RatePair{0.0, cap2 + 0.1}));
}

TEST_CASE("denser weight grids never enlarge the region") {
  std::vector<double> coarse, fine;
  for (int i = 0; i < 3; ++i) {
    coarse.push_back(std::pow(2.0, -6.0 + 6.0 * i));
  }
  for (int i = 0; i < 17; ++i) {
    fine.push_back(std::pow(2.0, -6.0 + 12.0 * i / 16.0));
  }
  const double a3 = area(outer_region(kFig2, coarse));
  const double a17 = area(outer_region(kFig2, fine));
  CHECK(a3 >= a17 - 1e-12);

  // supersets of weights only shrink it further
  std::vector<double> fine_plus = fine;
  fine_plus.push_back(1.7);
  fine_plus.push_back(0.9);
  std::sort(fine_plus.begin(), fine_plus.end());
  CHECK(area(outer_region(kFig2, fine_plus)) <= a17 + 1e-12);
}

TEST_CASE("containment of the inner schemes on random channels") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> ua(0.05, 0.95);
  std::uniform_real_distribution<double> logp(std::log(0.1), std::log(50.0));
  for (int n = 0; n < 3; ++n) {
    const Channel ch = make_channel(ua(rng), ua(rng), std::exp(logp(rng)),
                                    std::exp(logp(rng)));
    const RegionPolygon poly = outer_region(ch);
    CHECK(frontier_is_convex(poly));
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const double q1 = std::min(ch.p1, ch.p1 * i / 10.0);
        const double q2 = std::min(ch.p2, ch.p2 * j / 10.0);
        CHECK(contains(poly, inner::tin_rates(ch, q1, q2)));
      }
    }
    for (const auto& v : inner::tdm_frontier(ch, 64).vertices) {
      CHECK(contains(poly, v));
    }
  }
}

TEST_CASE("default weight grid includes the eta endpoints") {
  const std::vector<double> ws = default_weight_grid(kFig2);
  CHECK(ws.size() >= 129);
  const auto has = [&ws](double w) {
    for (double x : ws) {
      if (x == w) return true;
    }
    return false;
  };
  CHECK(has(1.0 / 0.04));                    // eta1 top
  CHECK(has(0.09));                          // eta2 bottom
  CHECK(std::is_sorted(ws.begin(), ws.end()));
}

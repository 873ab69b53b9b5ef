#include "icbounds/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icbounds::region {

namespace {

constexpr double kContainSlack = 1e-9;

double l2h(double x) { return 0.5 * std::log2(x); }

// A frontier line r2 = intercept + slope * r1 (slope <= 0).
struct Line {
  double slope;
  double intercept;
};

double line_x(const Line& u, const Line& v) {
  return (v.intercept - u.intercept) / (u.slope - v.slope);
}

}  // namespace

const char* halfplane_kind_name(HalfPlane::Kind k) {
  switch (k) {
    case HalfPlane::Kind::weighted: return "weighted";
    case HalfPlane::Kind::cap_r1: return "r1_cap";
    case HalfPlane::Kind::cap_r2: return "r2_cap";
  }
  return "?";
}

HalfPlane outer_support(const Channel& ch, double w) {
  if (!(ch.a > 0.0 && ch.a < 1.0 && ch.b > 0.0 && ch.b < 1.0)) {
    throw std::domain_error("outer_support requires 0 < a < 1 and 0 < b < 1");
  }
  if (!(w > 0.0)) throw std::invalid_argument("weight must be > 0");

  outer::WeightedBound best = outer::constraint1_bound(ch, w);
  const auto [e1lo, e1hi] = outer::eta1_range(ch);
  if (w >= e1lo && w <= e1hi) {
    const outer::WeightedBound c2 = outer::constraint2_bound(ch, w);
    if (c2.value < best.value) best = c2;
  }
  const auto [e2lo, e2hi] = outer::eta2_range(ch);
  if (w >= e2lo && w <= e2hi) {
    const outer::WeightedBound c3 = outer::constraint3_bound(ch, w);
    if (c3.value < best.value) best = c3;
  }
  return HalfPlane{HalfPlane::Kind::weighted, w, best.value, best.source};
}

std::vector<double> default_weight_grid(const Channel& ch) {
  std::vector<double> ws;
  constexpr int kCount = 129;
  for (int i = 0; i < kCount; ++i) {
    // log-spaced over [1/64, 64]
    ws.push_back(std::pow(2.0, -6.0 + 12.0 * i / (kCount - 1)));
  }
  const auto [e1lo, e1hi] = outer::eta1_range(ch);
  const auto [e2lo, e2hi] = outer::eta2_range(ch);
  ws.insert(ws.end(), {e1lo, e1hi, e2lo, e2hi});
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

RegionPolygon outer_region(const Channel& ch, std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("weight grid is empty");

  RegionPolygon poly;
  const double cap1 = l2h(1.0 + ch.p1);
  const double cap2 = l2h(1.0 + ch.p2);
  poly.halfplanes.push_back(HalfPlane{HalfPlane::Kind::cap_r1, 0.0, cap1,
                                      outer::BoundSource::single_user1});
  poly.halfplanes.push_back(HalfPlane{HalfPlane::Kind::cap_r2, 0.0, cap2,
                                      outer::BoundSource::single_user2});
  for (const double w : weights) {
    poly.halfplanes.push_back(outer_support(ch, w));
  }

  // Frontier = lower envelope of r2 = (c - r1)/w plus the flat cap r2 <= cap2,
  // clipped to 0 <= r1 <= r1_max.
  std::vector<Line> lines;
  lines.push_back(Line{0.0, cap2});
  double r1_max = cap1;
  for (const HalfPlane& hp : poly.halfplanes) {
    if (hp.kind != HalfPlane::Kind::weighted) continue;
    lines.push_back(Line{-1.0 / hp.w, hp.c / hp.w});
    r1_max = std::min(r1_max, hp.c);
  }
  // Shallowest slope is active at r1 = 0; the envelope's active slope
  // decreases as r1 grows (the min of affines is concave).
  std::sort(lines.begin(), lines.end(), [](const Line& u, const Line& v) {
    if (u.slope != v.slope) return u.slope > v.slope;
    return u.intercept < v.intercept;
  });

  std::vector<Line> env;
  for (const Line& ln : lines) {
    if (!env.empty() && env.back().slope == ln.slope) continue;
    while (env.size() >= 2) {
      const Line& f = env[env.size() - 2];
      const Line& g = env.back();
      // g is redundant if the new line undercuts it at or before the point
      // where g took over from f.
      if (line_x(f, g) >= line_x(g, ln)) {
        env.pop_back();
      } else {
        break;
      }
    }
    // A steeper line starting no higher hides the stacked one on r1 >= 0.
    if (env.size() == 1 && ln.intercept <= env.back().intercept) {
      env.pop_back();
    }
    env.push_back(ln);
  }

  // Walk the envelope over [0, r1_max]; breakpoints are increasing.
  std::vector<inner::RatePair> frontier;
  frontier.push_back(inner::RatePair{0.0, env.front().intercept});
  std::size_t active = 0;
  for (std::size_t i = 0; i + 1 < env.size(); ++i) {
    const double x = line_x(env[i], env[i + 1]);
    if (x >= r1_max) break;
    active = i + 1;
    const double y = env[i].intercept + env[i].slope * x;
    frontier.push_back(inner::RatePair{std::max(x, 0.0), std::max(y, 0.0)});
  }
  const Line& end_line = env[active];
  const double y_end =
      std::max(end_line.intercept + end_line.slope * r1_max, 0.0);
  frontier.push_back(inner::RatePair{r1_max, y_end});
  if (y_end > 0.0) {
    frontier.push_back(inner::RatePair{r1_max, 0.0});
  }

  // Emit with r1 decreasing and drop duplicates.
  std::reverse(frontier.begin(), frontier.end());
  for (const inner::RatePair& v : frontier) {
    if (!poly.vertices.empty() &&
        std::abs(poly.vertices.back().r1 - v.r1) < 1e-12 &&
        std::abs(poly.vertices.back().r2 - v.r2) < 1e-12) {
      continue;
    }
    poly.vertices.push_back(v);
  }
  return poly;
}

RegionPolygon outer_region(const Channel& ch) {
  const std::vector<double> ws = default_weight_grid(ch);
  return outer_region(ch, ws);
}

bool contains(const RegionPolygon& poly, const inner::RatePair& p) {
  if (p.r1 < -kContainSlack || p.r2 < -kContainSlack) return false;
  for (const HalfPlane& hp : poly.halfplanes) {
    double slack = 0.0;
    switch (hp.kind) {
      case HalfPlane::Kind::weighted:
        slack = hp.c - (p.r1 + hp.w * p.r2);
        break;
      case HalfPlane::Kind::cap_r1:
        slack = hp.c - p.r1;
        break;
      case HalfPlane::Kind::cap_r2:
        slack = hp.c - p.r2;
        break;
    }
    if (slack < -kContainSlack) return false;
  }
  return true;
}

double area(const RegionPolygon& poly) {
  // Trapezoid sum under the frontier; vertices run with r1 decreasing.
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
    const inner::RatePair& right = poly.vertices[i];
    const inner::RatePair& left = poly.vertices[i + 1];
    total += (right.r1 - left.r1) * 0.5 * (right.r2 + left.r2);
  }
  return total;
}

}  // namespace icbounds::region

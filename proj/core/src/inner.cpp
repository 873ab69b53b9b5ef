#include "icbounds/inner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icbounds::inner {

namespace {

double l2h(double x) { return 0.5 * std::log2(x); }

}  // namespace

RatePair tin_rates(const Channel& ch, double q1, double q2) {
  if (!(q1 >= 0.0 && q1 <= ch.p1)) {
    throw std::out_of_range("q1 must be in [0, p1]");
  }
  if (!(q2 >= 0.0 && q2 <= ch.p2)) {
    throw std::out_of_range("q2 must be in [0, p2]");
  }
  return RatePair{l2h(1.0 + q1 / (1.0 + ch.a * q2)),
                  l2h(1.0 + q2 / (1.0 + ch.b * q1))};
}

Polyline tdm_frontier(const Channel& ch, int steps) {
  if (steps < 2) throw std::invalid_argument("steps must be >= 2");
  Polyline line;
  line.vertices.reserve(steps + 1);
  // tau descending keeps r1 nonincreasing along the list.
  for (int k = steps; k >= 0; --k) {
    const double tau = static_cast<double>(k) / steps;
    RatePair v;
    if (k == steps) {
      v = RatePair{l2h(1.0 + ch.p1), 0.0};
    } else if (k == 0) {
      v = RatePair{0.0, l2h(1.0 + ch.p2)};
    } else {
      v = RatePair{tau * l2h(1.0 + ch.p1 / tau),
                   (1.0 - tau) * l2h(1.0 + ch.p2 / (1.0 - tau))};
    }
    line.vertices.push_back(v);
  }
  return line;
}

double mac_sum_capacity(const Channel& ch) {
  if (!(ch.a >= 1.0 && ch.b >= 1.0)) {
    throw std::domain_error("mac_sum_capacity requires a >= 1 and b >= 1");
  }
  const double both = l2h(1.0 + ch.p1) + l2h(1.0 + ch.p2);
  const double rx1 = l2h(1.0 + ch.p1 + ch.a * ch.p2);
  const double rx2 = l2h(1.0 + ch.b * ch.p1 + ch.p2);
  return std::min({both, rx1, rx2});
}

RatePair mixed_achievable(const Channel& ch) {
  const MixedCondition cond = mixed_condition(ch);
  if (cond == MixedCondition::none) {
    throw std::domain_error("mixed_achievable requires the mixed condition "
                            "in one orientation");
  }
  RatePair p;
  double weak_rate, cross_rate;
  if (cond == MixedCondition::user1_strong) {
    p = RatePair{l2h(1.0 + ch.p1), l2h(1.0 + ch.p2 / (1.0 + ch.b * ch.p1))};
    weak_rate = p.r2;
    cross_rate = l2h(1.0 + ch.a * ch.p2 / (1.0 + ch.p1));
  } else {
    p = RatePair{l2h(1.0 + ch.p1 / (1.0 + ch.a * ch.p2)), l2h(1.0 + ch.p2)};
    weak_rate = p.r1;
    cross_rate = l2h(1.0 + ch.b * ch.p1 / (1.0 + ch.p2));
  }
  // The weak user's rate must be decodable at the strong receiver too; the
  // mixed condition makes this automatic, so a failure here is a defect.
  if (weak_rate > cross_rate + 1e-12 * std::max(1.0, cross_rate)) {
    throw std::logic_error("mixed scheme cross-decodability violated");
  }
  return p;
}

double best_inner_sum_rate(const Channel& ch) {
  double best = 0.0;
  constexpr int kBackoffGrid = 11;
  for (int i = 0; i < kBackoffGrid; ++i) {
    const double q1 = std::min(ch.p1, ch.p1 * i / (kBackoffGrid - 1));
    for (int j = 0; j < kBackoffGrid; ++j) {
      const double q2 = std::min(ch.p2, ch.p2 * j / (kBackoffGrid - 1));
      best = std::max(best, tin_rates(ch, q1, q2).sum());
    }
  }
  for (const RatePair& v : tdm_frontier(ch, 64).vertices) {
    best = std::max(best, v.sum());
  }
  return best;
}

}  // namespace icbounds::inner

#include "icbounds/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "icbounds/sumcap.hpp"

namespace icbounds {

namespace {

void require_field(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Channel make_channel(double a, double b, double p1, double p2) {
  require_field(std::isfinite(a) && a >= 0.0, "a must be finite and >= 0");
  require_field(std::isfinite(b) && b >= 0.0, "b must be finite and >= 0");
  require_field(std::isfinite(p1) && p1 > 0.0, "p1 must be finite and > 0");
  require_field(std::isfinite(p2) && p2 > 0.0, "p2 must be finite and > 0");
  return Channel{a, b, p1, p2};
}

bool is_noisy_interference(const Channel& ch) {
  return std::sqrt(ch.a) * (ch.b * ch.p1 + 1.0) +
             std::sqrt(ch.b) * (ch.a * ch.p2 + 1.0) <=
         1.0;
}

bool is_very_strong(const Channel& ch) {
  return ch.a > 1.0 && ch.b > 1.0 && ch.p1 <= ch.a - 1.0 &&
         ch.p2 <= ch.b - 1.0;
}

MixedCondition mixed_condition(const Channel& ch) {
  if (ch.a > 1.0 && ch.b > 0.0 && ch.b < 1.0 &&
      (1.0 - ch.a * ch.b) * ch.p1 <= ch.a - 1.0) {
    return MixedCondition::user1_strong;
  }
  if (ch.b > 1.0 && ch.a > 0.0 && ch.a < 1.0 &&
      (1.0 - ch.a * ch.b) * ch.p2 <= ch.b - 1.0) {
    return MixedCondition::user2_strong;
  }
  return MixedCondition::none;
}

const char* regime_name(RegimeLabel label) {
  switch (label) {
    case RegimeLabel::I: return "I";
    case RegimeLabel::II: return "II";
    case RegimeLabel::III: return "III";
    case RegimeLabel::IV: return "IV";
    case RegimeLabel::V: return "V";
    case RegimeLabel::VI: return "VI";
    case RegimeLabel::VII: return "VII";
  }
  return "?";
}

RegimeLabel classify_label(const Channel& ch) {
  const double ab = ch.a * ch.b;
  if (ch.a >= 1.0 && ch.b >= 1.0) return RegimeLabel::I;
  if (ab >= 1.0 && ch.a <= 1.0) return RegimeLabel::II;
  if (ab <= 1.0 && ch.b >= 1.0 &&
      (1.0 - ab) * ch.p2 <= ch.b - 1.0) {
    return RegimeLabel::III;
  }
  if (ab >= 1.0 && ch.b <= 1.0) return RegimeLabel::IV;
  if (ab <= 1.0 && ch.a >= 1.0 &&
      (1.0 - ab) * ch.p1 <= ch.a - 1.0) {
    return RegimeLabel::V;
  }
  if (std::sqrt(ch.a) + std::sqrt(ch.b) <= 1.0 && is_noisy_interference(ch)) {
    return RegimeLabel::VI;
  }
  return RegimeLabel::VII;
}

Regime classify(const Channel& ch) {
  Regime r;
  r.label = classify_label(ch);
  r.noisy = is_noisy_interference(ch);
  r.very_strong = is_very_strong(ch);
  r.mixed_solvable = mixed_condition(ch) != MixedCondition::none;
  const sumcap::SumCapResult cap = sumcap::table1_sum_capacity(ch);
  if (cap.status == sumcap::SumCapStatus::exact) {
    r.known_sum_capacity = cap.value;
  }
  return r;
}

double symmetric_noisy_threshold(double p) {
  if (!(std::isfinite(p) && p > 0.0)) {
    throw std::invalid_argument("p must be finite and > 0");
  }
  // f(s) = 2s(s^2 p + 1) - 1 is strictly increasing on (0, 1/2] with
  // f(0+) = -1 and f(1/2) = p/4 >= 0, so the root is unique. The returned
  // point is kept on the noisy side (f <= 0) so that (a*, a*, p, p) itself
  // satisfies the condition.
  const auto f = [p](double s) { return 2.0 * s * (s * s * p + 1.0) - 1.0; };
  double lo = 0.0;
  double hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm <= 0.0) {
      lo = mid;
      if (fm >= -1e-12) break;
    } else {
      hi = mid;
    }
  }
  return lo * lo;
}

}  // namespace icbounds

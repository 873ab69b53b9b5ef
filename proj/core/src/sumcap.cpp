#include "icbounds/sumcap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "icbounds/inner.hpp"

namespace icbounds::sumcap {

namespace {

double l2h(double x) { return 0.5 * std::log2(x); }

// Row II/III value: the swapped-orientation corner point.
double row23_value(const Channel& ch) {
  return l2h(1.0 + ch.p1 / (1.0 + ch.a * ch.p2)) + l2h(1.0 + ch.p2);
}

// Row IV/V value, identical to the mixed-interference formula.
double row45_value(const Channel& ch) {
  return l2h(1.0 + ch.p1) + l2h(1.0 + ch.p2 / (1.0 + ch.b * ch.p1));
}

}  // namespace

const char* sumcap_status_name(SumCapStatus s) {
  switch (s) {
    case SumCapStatus::exact: return "exact";
    case SumCapStatus::upper_only: return "upper_only";
  }
  return "?";
}

const char* sumcap_mechanism_name(SumCapMechanism m) {
  switch (m) {
    case SumCapMechanism::noisy_TIN: return "noisy_TIN";
    case SumCapMechanism::mixed: return "mixed";
    case SumCapMechanism::mac_row_I: return "mac_row_I";
    case SumCapMechanism::row_II_III: return "row_II_III";
    case SumCapMechanism::row_IV_V: return "row_IV_V";
    case SumCapMechanism::unknown: return "unknown";
  }
  return "?";
}

double noisy_sum_capacity(const Channel& ch) {
  if (!is_noisy_interference(ch)) {
    throw std::domain_error(
        "noisy_sum_capacity requires sqrt(a)(bP1+1)+sqrt(b)(aP2+1) <= 1");
  }
  return l2h(1.0 + ch.p1 / (1.0 + ch.a * ch.p2)) +
         l2h(1.0 + ch.p2 / (1.0 + ch.b * ch.p1));
}

outer::GeniePoint closed_form_genie(const Channel& ch) {
  if (!(ch.a > 0.0 && ch.b > 0.0)) {
    throw std::domain_error(
        "closed_form_genie requires a > 0 and b > 0 (use noisy_sum_capacity "
        "directly for Z-ICs)");
  }
  const double u = ch.b * (ch.a * ch.p2 + 1.0) * (ch.a * ch.p2 + 1.0);
  const double v = ch.a * (ch.b * ch.p1 + 1.0) * (ch.b * ch.p1 + 1.0);
  const double t1 = u - v + 1.0;
  const double t2 = v - u + 1.0;
  const double disc1 = t1 * t1 - 4.0 * u;
  const double disc2 = t2 * t2 - 4.0 * v;
  if (disc1 < 0.0) {
    throw std::domain_error(
        "infeasible genie: [b(aP2+1)^2-a(bP1+1)^2+1]^2 < 4b(aP2+1)^2");
  }
  if (disc2 < 0.0) {
    throw std::domain_error(
        "infeasible genie: [a(bP1+1)^2-b(aP2+1)^2+1]^2 < 4a(bP1+1)^2");
  }
  if (t1 < 0.0) {
    throw std::domain_error("infeasible genie: b(aP2+1)^2-a(bP1+1)^2+1 < 0");
  }
  if (t2 < 0.0) {
    throw std::domain_error("infeasible genie: a(bP1+1)^2-b(aP2+1)^2+1 < 0");
  }
  outer::GeniePoint g;
  g.sigma1_sq = (t1 + std::sqrt(disc1)) / (2.0 * ch.b);
  g.sigma2_sq = (t2 + std::sqrt(disc2)) / (2.0 * ch.a);
  const double r1sq = 1.0 - ch.a * g.sigma2_sq;
  const double r2sq = 1.0 - ch.b * g.sigma1_sq;
  if (r1sq < 0.0 || r2sq < 0.0) {
    throw std::domain_error("infeasible genie: correlation would exceed 1");
  }
  g.rho1 = std::sqrt(r1sq);
  g.rho2 = std::sqrt(r2sq);
  // The point sits exactly on the closed boundary sigma_i^2 = (1-rho_i^2)/
  // gain; rebuild the variances from the rounded correlations so the
  // feasibility comparisons downstream see the boundary bit-exactly.
  g.sigma1_sq = (1.0 - g.rho2 * g.rho2) / ch.b;
  g.sigma2_sq = (1.0 - g.rho1 * g.rho1) / ch.a;
  return g;
}

double mixed_sum_capacity(const Channel& ch) {
  switch (mixed_condition(ch)) {
    case MixedCondition::user1_strong:
      return row45_value(ch);
    case MixedCondition::user2_strong:
      return row23_value(ch);
    case MixedCondition::none:
      break;
  }
  throw std::domain_error("mixed_sum_capacity requires (1-ab)P1 <= a-1 with "
                          "a > 1 > b > 0, or the swapped condition");
}

SumCapResult table1_sum_capacity(const Channel& ch) {
  switch (classify_label(ch)) {
    case RegimeLabel::I:
      return {inner::mac_sum_capacity(ch), SumCapStatus::exact,
              SumCapMechanism::mac_row_I};
    case RegimeLabel::II:
    case RegimeLabel::III:
      return {row23_value(ch), SumCapStatus::exact,
              SumCapMechanism::row_II_III};
    case RegimeLabel::IV:
    case RegimeLabel::V:
      return {row45_value(ch), SumCapStatus::exact,
              SumCapMechanism::row_IV_V};
    case RegimeLabel::VI:
      return {noisy_sum_capacity(ch), SumCapStatus::exact,
              SumCapMechanism::noisy_TIN};
    case RegimeLabel::VII:
      break;
  }
  return {sum_rate_upper_bound(ch), SumCapStatus::upper_only,
          SumCapMechanism::unknown};
}

double sum_rate_upper_bound(const Channel& ch) {
  double best = l2h(1.0 + ch.p1) + l2h(1.0 + ch.p2);
  if (ch.b > 0.0 && ch.b < 1.0) {
    best = std::min(best, row45_value(ch));
  }
  if (ch.a > 0.0 && ch.a < 1.0) {
    best = std::min(best, row23_value(ch));
  }
  if (ch.a > 0.0 && ch.a < 1.0 && ch.b > 0.0 && ch.b < 1.0) {
    best = std::min(best, outer::etw_sum_bound(ch).value);
    best = std::min(best, outer::constraint1_bound(ch, 1.0).value);
  }
  return best;
}

}  // namespace icbounds::sumcap

#include "icbounds/outer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "icbounds/sumcap.hpp"

namespace icbounds::outer {

namespace {

constexpr double kSigmaInset = 1e-9;   // lower inset of the open sigma^2 ends
constexpr double kRhoInset = 1e-9;     // keeps rho away from the degenerate 1
constexpr double kCapMargin = 1e-3;    // relative margin past the P* = 0 cap

double log2_half(double x) {
  if (!(x > 0.0)) {
    throw std::logic_error("log argument <= 0 inside the feasible set");
  }
  return 0.5 * std::log2(x);
}

void check_rho(double rho, const char* name) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
  }
}

void check_sigma(double s, const char* name) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument(std::string(name) + " must be finite and > 0");
  }
}

}  // namespace

const char* bound_source_name(BoundSource s) {
  switch (s) {
    case BoundSource::thm1_constraint1: return "thm1_constraint1";
    case BoundSource::constraint2: return "constraint2";
    case BoundSource::constraint3: return "constraint3";
    case BoundSource::single_user1: return "single_user1";
    case BoundSource::single_user2: return "single_user2";
    case BoundSource::etw_point: return "etw_point";
    case BoundSource::kramer_parametric: return "kramer_parametric";
  }
  return "?";
}

double pstar1(const Channel& ch, double mu, double rho2, double sigma1_sq) {
  if (!(ch.b > 0.0)) throw std::domain_error("pstar1 requires b > 0");
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
  check_rho(rho2, "rho2");
  check_sigma(sigma1_sq, "sigma1_sq");

  const double r = 1.0 - rho2 * rho2;
  if (mu >= 1.0) {
    const double thr_hi = r / (ch.b * mu);
    const double thr_lo = std::max((1.0 / mu - 1.0) * ch.p1 + thr_hi, 0.0);
    if (sigma1_sq <= thr_lo) return ch.p1;
    if (sigma1_sq <= thr_hi) {
      return (r - ch.b * mu * sigma1_sq) / (ch.b * mu - ch.b);
    }
    return 0.0;
  }
  if (sigma1_sq > r / ch.b) {
    throw std::domain_error("sigma1_sq outside the feasible set for mu < 1");
  }
  return ch.p1;
}

double pstar2(const Channel& ch, double mu, double rho1, double sigma2_sq) {
  if (!(ch.a > 0.0)) throw std::domain_error("pstar2 requires a > 0");
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
  check_rho(rho1, "rho1");
  check_sigma(sigma2_sq, "sigma2_sq");

  const double r = 1.0 - rho1 * rho1;
  if (mu >= 1.0) {
    if (sigma2_sq > r / ch.a) {
      throw std::domain_error("sigma2_sq outside the feasible set for mu >= 1");
    }
    return ch.p2;
  }
  const double thr_hi = mu * r / ch.a;
  const double thr_lo = std::max((mu - 1.0) * ch.p2 + thr_hi, 0.0);
  if (sigma2_sq <= thr_lo) return ch.p2;
  if (sigma2_sq <= thr_hi) {
    return (mu * r - ch.a * sigma2_sq) / (ch.a - ch.a * mu);
  }
  return 0.0;
}

SigmaBox sigma_box(const Channel& ch, double mu, double rho1, double rho2) {
  if (!(ch.a > 0.0 && ch.b > 0.0)) {
    throw std::domain_error("sigma_box requires a > 0 and b > 0");
  }
  check_rho(rho1, "rho1");
  check_rho(rho2, "rho2");

  SigmaBox box;
  box.sigma1_lo = kSigmaInset;
  box.sigma2_lo = kSigmaInset;
  const double r1 = 1.0 - rho1 * rho1;
  const double r2 = 1.0 - rho2 * rho2;
  if (mu >= 1.0) {
    box.sigma1_hi = r2 / (ch.b * mu) * (1.0 + kCapMargin);
    box.sigma2_hi = r1 / ch.a;
  } else {
    box.sigma1_hi = r2 / ch.b;
    box.sigma2_hi = mu * r1 / ch.a * (1.0 + kCapMargin);
  }
  box.empty = !(box.sigma1_hi > box.sigma1_lo && box.sigma2_hi > box.sigma2_lo);
  return box;
}

double constraint1_objective(const Channel& ch, double mu,
                             const GeniePoint& g) {
  if (!(ch.a > 0.0 && ch.b > 0.0)) {
    throw std::domain_error("constraint1_objective requires a > 0 and b > 0");
  }
  check_rho(g.rho1, "rho1");
  check_rho(g.rho2, "rho2");
  check_sigma(g.sigma1_sq, "sigma1_sq");
  check_sigma(g.sigma2_sq, "sigma2_sq");

  const double p1s = pstar1(ch, mu, g.rho2, g.sigma1_sq);
  const double p2s = pstar2(ch, mu, g.rho1, g.sigma2_sq);
  const double sig1 = std::sqrt(g.sigma1_sq);
  const double sig2 = std::sqrt(g.sigma2_sq);

  const double u1 =
      log2_half(1.0 + p1s / g.sigma1_sq) -
      log2_half(ch.a * p2s + 1.0 - g.rho1 * g.rho1) +
      log2_half(1.0 + ch.p1 + ch.a * ch.p2 -
                (ch.p1 + g.rho1 * sig1) * (ch.p1 + g.rho1 * sig1) /
                    (ch.p1 + g.sigma1_sq));
  const double u2 =
      log2_half(1.0 + p2s / g.sigma2_sq) -
      log2_half(ch.b * p1s + 1.0 - g.rho2 * g.rho2) +
      log2_half(1.0 + ch.p2 + ch.b * ch.p1 -
                (ch.p2 + g.rho2 * sig2) * (ch.p2 + g.rho2 * sig2) /
                    (ch.p2 + g.sigma2_sq));
  return u1 + mu * u2;
}

namespace {

GeniePoint genie_from_coords(const Channel& ch, double mu,
                             std::span<const double> coords) {
  const double rho1 = coords[0];
  const double rho2 = coords[1];
  const SigmaBox sb = sigma_box(ch, mu, rho1, rho2);
  // t = 1 must land exactly on the cap; a hard-capped coordinate a hair
  // beyond it would be rejected as infeasible.
  const double s1 =
      std::min(sb.sigma1_lo + coords[2] * (sb.sigma1_hi - sb.sigma1_lo),
               sb.sigma1_hi);
  const double s2 =
      std::min(sb.sigma2_lo + coords[3] * (sb.sigma2_hi - sb.sigma2_lo),
               sb.sigma2_hi);
  return GeniePoint{rho1, rho2, s1, s2};
}

}  // namespace

GeniePoint Constraint1Problem::genie_at(std::span<const double> coords) const {
  return genie_from_coords(channel, mu, coords);
}

Constraint1Problem constraint1_problem(const Channel& ch, double mu) {
  if (!(ch.a > 0.0 && ch.b > 0.0)) {
    throw std::domain_error("constraint1_problem requires a > 0 and b > 0");
  }
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");

  Constraint1Problem prob;
  prob.channel = ch;
  prob.mu = mu;
  prob.box = optimize::make_box(
      {{0.0, 1.0 - kRhoInset}, {0.0, 1.0 - kRhoInset}, {0.0, 1.0}, {0.0, 1.0}});
  prob.objective = [ch, mu](std::span<const double> x) {
    return constraint1_objective(ch, mu, genie_from_coords(ch, mu, x));
  };
  return prob;
}

WeightedBound constraint1_bound(const Channel& ch, double mu) {
  const Constraint1Problem prob = constraint1_problem(ch, mu);
  optimize::MinResult res = optimize::grid_then_refine(prob.objective, prob.box);

  // Known feasible genies; each certifies a valid bound, so keeping the best
  // of them can only tighten the result.
  std::vector<GeniePoint> candidates;
  candidates.push_back(GeniePoint{0.0, 0.0, 1.0 / ch.b, 1.0 / ch.a});
  if (mu == 1.0 && is_noisy_interference(ch)) {
    candidates.push_back(sumcap::closed_form_genie(ch));
  }
  GeniePoint best_genie = prob.genie_at(res.point);
  double best_value = res.value;
  long evals = res.evaluations;
  for (const GeniePoint& g : candidates) {
    GeniePoint c = g;
    const SigmaBox sb = sigma_box(ch, mu, c.rho1, c.rho2);
    c.sigma1_sq = std::clamp(c.sigma1_sq, sb.sigma1_lo, sb.sigma1_hi);
    c.sigma2_sq = std::clamp(c.sigma2_sq, sb.sigma2_lo, sb.sigma2_hi);
    const double v = constraint1_objective(ch, mu, c);
    ++evals;
    if (v < best_value) {
      best_value = v;
      best_genie = c;
    }
  }

  WeightedBound wb;
  wb.weight = mu;
  wb.value = best_value;
  wb.source = BoundSource::thm1_constraint1;
  wb.witness = best_genie;
  wb.evaluations = evals;
  return wb;
}

std::pair<double, double> eta1_range(const Channel& ch) {
  if (!(ch.b > 0.0 && ch.b < 1.0)) {
    throw std::domain_error("eta1 range requires 0 < b < 1");
  }
  return {(1.0 + ch.b * ch.p1) / (ch.b + ch.b * ch.p1), 1.0 / ch.b};
}

std::pair<double, double> eta2_range(const Channel& ch) {
  if (!(ch.a > 0.0 && ch.a < 1.0)) {
    throw std::domain_error("eta2 range requires 0 < a < 1");
  }
  return {ch.a, (ch.a + ch.a * ch.p2) / (1.0 + ch.a * ch.p2)};
}

WeightedBound constraint2_bound(const Channel& ch, double eta1) {
  const auto [lo, hi] = eta1_range(ch);
  if (!(eta1 >= lo && eta1 <= hi)) {
    throw std::out_of_range("eta1 outside [(1+bP1)/(b+bP1), 1/b]");
  }
  const double b = ch.b;
  // q = b*eta1 - 1 <= 0 on the range; it can round to +eps at eta1 = 1/b,
  // where both correction terms vanish.
  const double q = b * eta1 - 1.0;
  double value = eta1 * log2_half(1.0 + b * ch.p1 + ch.p2);
  if (q < 0.0) {
    value += log2_half(1.0 + q / (b - b * eta1)) -
             eta1 * log2_half(1.0 + q / (1.0 - eta1));
  }
  return WeightedBound{eta1, value, BoundSource::constraint2,
                       pstar_eta1(ch, eta1)};
}

WeightedBound constraint3_bound(const Channel& ch, double eta2) {
  const auto [lo, hi] = eta2_range(ch);
  if (!(eta2 >= lo && eta2 <= hi)) {
    throw std::out_of_range("eta2 outside [a, (a+aP2)/(1+aP2)]");
  }
  const double a = ch.a;
  // At eta2 = a both correction terms vanish (the P2' = 0 endpoint).
  double value = log2_half(1.0 + ch.p1 + ch.a * ch.p2);
  double p2_prime = 0.0;
  if (eta2 > a) {
    value += -log2_half(1.0 + (a - eta2) / (eta2 - 1.0)) +
             eta2 * log2_half(1.0 + (a - eta2) / (a * eta2 - a));
    p2_prime = (a - eta2) / (a * eta2 - a);
  }
  return WeightedBound{eta2, value, BoundSource::constraint3, p2_prime};
}

KramerPoint kramer_parametric(const Channel& ch, double p2_prime) {
  if (!(ch.a > 0.0 && ch.a < 1.0)) {
    throw std::domain_error("kramer_parametric requires 0 < a < 1");
  }
  if (!(p2_prime >= 0.0 && p2_prime <= ch.p2)) {
    throw std::out_of_range("p2_prime must be in [0, p2]");
  }
  const double pool = ch.p1 / ch.a + ch.p2;
  const double p1_prime = pool - p2_prime;
  const double alpha =
      (ch.a + ch.a * p2_prime) / (1.0 + ch.a * p2_prime);
  const double r1 = log2_half(1.0 + p1_prime / (p2_prime + 1.0 / ch.a));
  const double r2 = log2_half(1.0 + p2_prime);
  return KramerPoint{alpha, r1 + alpha * r2};
}

WeightedBound etw_sum_bound(const Channel& ch) {
  if (!(ch.a > 0.0 && ch.b > 0.0)) {
    throw std::domain_error("etw_sum_bound requires a > 0 and b > 0");
  }
  const double value =
      log2_half(1.0 + ch.p1 + ch.a * ch.p2 -
                ch.p1 * ch.p1 / (ch.p1 + 1.0 / ch.b)) +
      log2_half(1.0 + ch.p2 + ch.b * ch.p1 -
                ch.p2 * ch.p2 / (ch.p2 + 1.0 / ch.a));
  WeightedBound wb;
  wb.weight = 1.0;
  wb.value = value;
  wb.source = BoundSource::etw_point;
  wb.witness = GeniePoint{0.0, 0.0, 1.0 / ch.b, 1.0 / ch.a};
  return wb;
}

double pstar_eta1(const Channel& ch, double eta1) {
  if (!(ch.b > 0.0 && ch.b < 1.0)) {
    throw std::domain_error("pstar_eta1 requires 0 < b < 1");
  }
  if (!(eta1 > 0.0)) throw std::invalid_argument("eta1 must be > 0");
  const double b = ch.b;
  if (eta1 <= (1.0 + b * ch.p1) / (b + b * ch.p1)) return ch.p1;
  if (eta1 >= 1.0 / b) return 0.0;
  return (b * eta1 - 1.0) / (b - b * eta1);
}

}  // namespace icbounds::outer

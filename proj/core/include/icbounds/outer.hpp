#pragma once

#include <variant>

#include "icbounds/channel.hpp"
#include "icbounds/optimize.hpp"

namespace icbounds::outer {

// Genie parameters of the weighted-sum outer bound: the genie hands receiver
// i the side information X_i + N_i where N_i has variance sigma_i^2 and
// correlation rho_i with the receiver noise Z_i.
struct GeniePoint {
  double rho1;
  double rho2;
  double sigma1_sq;
  double sigma2_sq;
};

enum class BoundSource {
  thm1_constraint1,
  constraint2,
  constraint3,
  single_user1,
  single_user2,
  etw_point,
  kramer_parametric,
};

const char* bound_source_name(BoundSource s);

// A certified bound R1 + weight*R2 <= value (bits/use) together with the
// parameters that produced it.
struct WeightedBound {
  double weight;
  double value;
  BoundSource source;
  std::variant<std::monostate, GeniePoint, double> witness;
  long evaluations = 0;
};

// Optimal per-letter power of user 1 in the extremal-inequality step, as a
// function of sigma1_sq. Piecewise for mu >= 1 with branch thresholds
// ((1/mu-1)p1 + (1-rho2^2)/(b mu))^+ and (1-rho2^2)/(b mu); at mu = 1 the
// middle branch is empty. For mu < 1 equals p1 on its domain
// sigma1_sq <= (1-rho2^2)/b and is a domain error beyond it.
double pstar1(const Channel& ch, double mu, double rho2, double sigma1_sq);

// Mirror of pstar1. For mu >= 1 equals p2 on sigma2_sq <= (1-rho1^2)/a
// (domain error beyond); for mu < 1 the mirrored three-branch form with
// thresholds ((mu-1)p2 + mu(1-rho1^2)/a)^+ and mu(1-rho1^2)/a.
double pstar2(const Channel& ch, double mu, double rho1, double sigma2_sq);

// Search intervals for (sigma1_sq, sigma2_sq) at fixed correlations. The
// coordinate the feasible set leaves unbounded is truncated at the threshold
// where the corresponding P* hits zero, times (1 + 1e-3); the hard-capped
// coordinate keeps its exact cap. Lower ends are inset to 1e-9.
struct SigmaBox {
  double sigma1_lo;
  double sigma1_hi;
  double sigma2_lo;
  double sigma2_hi;
  bool empty;
};

SigmaBox sigma_box(const Channel& ch, double mu, double rho1, double rho2);

// The six-term weighted-sum expression inside the minimization, bits/use.
double constraint1_objective(const Channel& ch, double mu,
                             const GeniePoint& g);

// The genie minimization posed over a fixed box in the coordinates
// (rho1, rho2, t1, t2), where t in [0, 1] spans the sigma intervals of
// sigma_box at the point's correlations. Every box point is feasible.
struct Constraint1Problem {
  Channel channel;
  double mu;
  optimize::Box box;
  optimize::Objective objective;

  GeniePoint genie_at(std::span<const double> coords) const;
};

Constraint1Problem constraint1_problem(const Channel& ch, double mu);

// Minimized first constraint for weight mu > 0, via grid_then_refine plus
// two known feasible candidates (the ETW point and, when applicable, the
// closed-form noisy-interference genie). Any feasible point certifies a
// valid bound, so the reported value is valid regardless of optimizer
// tolerance; the witness is the best genie found.
WeightedBound constraint1_bound(const Channel& ch, double mu);

// Closed range of admissible eta1 weights, [(1+b p1)/(b+b p1), 1/b].
// Requires 0 < b < 1.
std::pair<double, double> eta1_range(const Channel& ch);

// Closed range of admissible eta2 weights, [a, (a+a p2)/(1+a p2)].
// Requires 0 < a < 1.
std::pair<double, double> eta2_range(const Channel& ch);

// Closed-form second constraint, valid for 0 < b < 1 and eta1 in
// eta1_range. Range error outside, domain error for b = 0 or b >= 1.
WeightedBound constraint2_bound(const Channel& ch, double eta1);

// Closed-form third constraint, valid for 0 < a < 1 and eta2 in eta2_range.
WeightedBound constraint3_bound(const Channel& ch, double eta2);

// One point of the equivalent parametric (power-sharing) form of the third
// constraint: splits the pooled power p1/a + p2 as (p1', p2_prime) and
// returns the tangent-line weight alpha and the bound value R1 + alpha*R2.
struct KramerPoint {
  double alpha;
  double value;
};

KramerPoint kramer_parametric(const Channel& ch, double p2_prime);

// Sum-rate bound at the fixed genie (rho = 0, sigma1_sq = 1/b,
// sigma2_sq = 1/a); equals
// (1/2)log2(1+P1+aP2-P1^2/(P1+1/b)) + (1/2)log2(1+P2+bP1-P2^2/(P2+1/a)).
WeightedBound etw_sum_bound(const Channel& ch);

// Optimal user-1 power for the second constraint as a function of eta1:
// p1 below the range, (b*eta1-1)/(b-b*eta1) inside it, 0 above 1/b.
double pstar_eta1(const Channel& ch, double eta1);

}  // namespace icbounds::outer

#pragma once

#include <vector>

#include "icbounds/channel.hpp"

namespace icbounds::inner {

struct RatePair {
  double r1;  // bits/use, >= 0
  double r2;  // bits/use, >= 0

  double sum() const { return r1 + r2; }
};

// Piecewise-linear frontier, r1 nonincreasing and r2 nondecreasing along the
// vertex list.
struct Polyline {
  std::vector<RatePair> vertices;
};

// Treat-interference-as-noise rates at transmit powers q1 <= p1, q2 <= p2:
// r1 = (1/2)log2(1 + q1/(1 + a q2)), r2 = (1/2)log2(1 + q2/(1 + b q1)).
RatePair tin_rates(const Channel& ch, double q1, double q2);

// TDM/FDM reference frontier with bursty power P/tau, tau on a uniform grid
// of `steps` segments over (0, 1); the tau = 0 and tau = 1 endpoints are the
// single-user limits. Listed from the r1-heavy end.
Polyline tdm_frontier(const Channel& ch, int steps);

// Strong-interference sum capacity (a >= 1, b >= 1): the rate at which both
// receivers can decode both messages, i.e. the min of the two-user MAC sum
// constraints at each receiver and the interference-free sum.
double mac_sum_capacity(const Channel& ch);

// Mixed-interference scheme: the strong-side user transmits at its
// single-user rate, the other at the rate both receivers can decode.
// Requires mixed_condition(ch) != none (condition error otherwise); also
// asserts the cross-decodability inequality that the condition implies.
RatePair mixed_achievable(const Channel& ch);

// Best achievable sum rate among the library's schemes: TIN over an 11x11
// power-backoff grid and the TDM/FDM frontier.
double best_inner_sum_rate(const Channel& ch);

}  // namespace icbounds::inner

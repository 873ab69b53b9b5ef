#pragma once

#include <optional>
#include <string>

namespace icbounds {

// Two-user Gaussian interference channel in standard form:
//   Y1 = X1 + sqrt(a)*X2 + Z1,   Y2 = sqrt(b)*X1 + X2 + Z2,
// unit noise variances, power constraints p1, p2. The cross gains a, b are
// power gains. All rates produced anywhere in this library are in bits per
// channel use (every paper-style "1/2 log" is (1/2)*log2).
struct Channel {
  double a;   // cross power gain into receiver 1, >= 0
  double b;   // cross power gain into receiver 2, >= 0
  double p1;  // power constraint of user 1, > 0
  double p2;  // power constraint of user 2, > 0
};

// Validates and builds a Channel. Throws std::invalid_argument naming the
// offending field. a = 0 or b = 0 (Z-IC) is admitted.
Channel make_channel(double a, double b, double p1, double p2);

// Noisy-interference condition: sqrt(a)(b*p1+1) + sqrt(b)(a*p2+1) <= 1,
// boundary inclusive.
bool is_noisy_interference(const Channel& ch);

// Very strong interference: a > 1, b > 1 (strict), p1 <= a-1, p2 <= b-1
// (inclusive).
bool is_very_strong(const Channel& ch);

enum class MixedCondition { none, user1_strong, user2_strong };

// Mixed-interference solvability: user1_strong iff a > 1, 0 < b < 1 and
// (1-ab)*p1 <= a-1; user2_strong is the swapped condition. The two
// orientations are mutually exclusive.
MixedCondition mixed_condition(const Channel& ch);

enum class RegimeLabel { I, II, III, IV, V, VI, VII };

const char* regime_name(RegimeLabel label);

// First matching row of the sum-rate capacity table, rows tested in order
// I..VI with both their gain and power conditions; VII is the catch-all.
// Boundary channels (a = 1, b = 1, ab = 1) take the first matching row.
RegimeLabel classify_label(const Channel& ch);

struct Regime {
  RegimeLabel label;
  bool noisy;
  bool very_strong;
  bool mixed_solvable;
  // Present exactly when the matched row I..VI establishes the sum-rate
  // capacity (bits/use). Absent for VII.
  std::optional<double> known_sum_capacity;
};

Regime classify(const Channel& ch);

// Largest symmetric gain a* in (0, 1/4] for which (a, a, p, p) has noisy
// interference, i.e. the root of 2*sqrt(a)*(a*p + 1) = 1. Bisection on
// s = sqrt(a) over (0, 1/2]; the defining equation is met to |.| <= 1e-12.
double symmetric_noisy_threshold(double p);

}  // namespace icbounds

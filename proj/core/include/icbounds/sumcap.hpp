#pragma once

#include "icbounds/channel.hpp"
#include "icbounds/outer.hpp"

namespace icbounds::sumcap {

enum class SumCapStatus { exact, upper_only };

enum class SumCapMechanism {
  noisy_TIN,
  mixed,
  mac_row_I,
  row_II_III,
  row_IV_V,
  unknown,
};

const char* sumcap_status_name(SumCapStatus s);
const char* sumcap_mechanism_name(SumCapMechanism m);

struct SumCapResult {
  double value;  // bits/use; the capacity when exact, else an upper bound
  SumCapStatus status;
  SumCapMechanism mechanism;
};

// Noisy-interference sum capacity
// (1/2)log2(1 + p1/(1+a p2)) + (1/2)log2(1 + p2/(1+b p1)).
// Condition error unless is_noisy_interference(ch).
double noisy_sum_capacity(const Channel& ch);

// The closed-form genie that meets the noisy-interference sum capacity with
// equality at mu = 1 (the "+" root). Requires a > 0, b > 0 (domain error
// otherwise; Z-ICs take noisy_sum_capacity directly) and noisy interference:
// each of the four feasibility inequalities is checked and the first
// violated one is named in the error.
outer::GeniePoint closed_form_genie(const Channel& ch);

// Mixed-interference sum capacity
// (1/2)log2(1+p1) + (1/2)log2(1 + p2/(1+b p1)), or the swapped form.
// Condition error when mixed_condition(ch) is none.
double mixed_sum_capacity(const Channel& ch);

// Sum-rate capacity table dispatcher. Rows I..VI give exact values; the
// catch-all rowVII gives the tightest upper bound available from this
// library's bounds for the channel's gains.
SumCapResult table1_sum_capacity(const Channel& ch);

// Min over the valid closed-form/optimized sum-rate upper bounds for any
// channel: the single-user sum always, the eta1 = 1 bound for 0 < b < 1,
// its swapped form for 0 < a < 1, and constraint1/ETW when 0 < a, b < 1.
double sum_rate_upper_bound(const Channel& ch);

}  // namespace icbounds::sumcap

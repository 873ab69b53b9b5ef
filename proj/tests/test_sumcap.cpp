#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "icbounds/channel.hpp"
#include "icbounds/inner.hpp"
#include "icbounds/outer.hpp"
#include "icbounds/sumcap.hpp"

using namespace icbounds;
using namespace icbounds::sumcap;

TEST_CASE("noisy sum capacity") {
  CHECK(std::abs(noisy_sum_capacity(make_channel(0.09, 0.04, 10, 20)) -
                 3.0633785711429694) <= 1e-12);
  // Z-IC special case
  CHECK(std::abs(noisy_sum_capacity(make_channel(0, 0.5, 1, 1)) -
                 0.86848279708310308) <= 1e-12);
  CHECK_THROWS_AS(noisy_sum_capacity(make_channel(0.25, 0.25, 5, 5)),
                  std::domain_error);
}

TEST_CASE("closed-form genie values") {
  const outer::GeniePoint g = closed_form_genie(make_channel(0.04, 0.04, 5, 5));
  CHECK(std::abs(g.sigma1_sq - 23.465856099730654) <= 1e-9);
  CHECK(std::abs(g.sigma2_sq - 23.465856099730654) <= 1e-9);
  CHECK(std::abs(g.rho1 - 0.24772112548342304) <= 1e-9);
  CHECK(std::abs(g.rho2 - 0.24772112548342304) <= 1e-9);

  const outer::GeniePoint f = closed_form_genie(make_channel(0.09, 0.04, 10, 20));
  CHECK(std::abs(f.sigma1_sq - 16.677970767183403) <= 1e-9);
  CHECK(std::abs(f.sigma2_sq - 5.8879870076370679) <= 1e-9);
  CHECK(std::abs(f.rho1 - 0.68562465628991486) <= 1e-9);
  CHECK(std::abs(f.rho2 - 0.57695855077523887) <= 1e-9);
}

TEST_CASE("closed-form genie rejects infeasible channels") {
  CHECK_THROWS_WITH_AS(
      closed_form_genie(make_channel(0.25, 0.25, 5, 5)),
      "infeasible genie: [b(aP2+1)^2-a(bP1+1)^2+1]^2 < 4b(aP2+1)^2",
      std::domain_error);
  CHECK_THROWS_AS(closed_form_genie(make_channel(0, 0.5, 1, 1)),
                  std::domain_error);
  CHECK_THROWS_AS(closed_form_genie(make_channel(0.5, 0, 1, 1)),
                  std::domain_error);
}

TEST_CASE("genie meets the TIN sum rate exactly on noisy channels") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> us(0.02, 0.45);
  std::uniform_real_distribution<double> uf(0.0, 0.45);
  for (int i = 0; i < 200; ++i) {
    const double s = us(rng), t = us(rng);
    if (s + t >= 0.98) continue;
    const double a = s * s, b = t * t;
    const double budget = 1.0 - s - t;
    const double p1 = std::max(uf(rng) * budget / (b * s), 1e-3);
    const double p2 = std::max(uf(rng) * budget / (a * t), 1e-3);
    const Channel ch = make_channel(a, b, p1, p2);
    if (!is_noisy_interference(ch)) continue;
    const outer::GeniePoint g = closed_form_genie(ch);
    CHECK(g.rho1 >= 0.0);
    CHECK(g.rho1 <= 1.0);
    CHECK(g.rho2 >= 0.0);
    CHECK(g.rho2 <= 1.0);
    CHECK(std::abs(outer::constraint1_objective(ch, 1.0, g) -
                   noisy_sum_capacity(ch)) <= 1e-9);
  }
}

TEST_CASE("mixed sum capacity") {
  CHECK(std::abs(mixed_sum_capacity(make_channel(2, 0.3, 1, 1)) -
                 0.91156111895796036) <= 1e-12);
  // degraded (ab = 1) with large p1
  CHECK(std::abs(mixed_sum_capacity(make_channel(1.25, 0.8, 3, 1)) -
                 1.1859843886934789) <= 1e-12);
  // swapped orientation
  const Channel sw = make_channel(0.3, 2, 1, 1);
  CHECK(std::abs(mixed_sum_capacity(sw) -
                 (0.5 * std::log2(2.0) +
                  0.5 * std::log2(1.0 + 1.0 / 1.3))) <= 1e-12);
  CHECK_THROWS_AS(mixed_sum_capacity(make_channel(2, 0.3, 10, 1)),
                  std::domain_error);
}

TEST_CASE("mixed converse identity") {
  // (1/2)log2(1+P1) + (1/2)log2(1+bP1+P2) - (1/2)log2(1+bP1) equals the
  // mixed capacity formula identically.
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> ua(1.0 + 1e-3, 8.0);
  std::uniform_real_distribution<double> ub(1e-3, 1.0 - 1e-3);
  std::uniform_real_distribution<double> logp(std::log(0.1), std::log(100.0));
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double a = ua(rng), b = ub(rng);
    double p1 = std::exp(logp(rng));
    if (a * b < 1.0) p1 = std::max(frac(rng) * (a - 1.0) / (1.0 - a * b), 1e-6);
    const Channel ch = make_channel(a, b, p1, std::exp(logp(rng)));
    if (mixed_condition(ch) != MixedCondition::user1_strong) continue;
    const double converse = 0.5 * std::log2(1.0 + ch.p1) +
                            0.5 * std::log2(1.0 + ch.b * ch.p1 + ch.p2) -
                            0.5 * std::log2(1.0 + ch.b * ch.p1);
    CHECK(std::abs(converse - mixed_sum_capacity(ch)) <= 1e-12);
  }
}

TEST_CASE("table dispatcher rows") {
  const SumCapResult mac = table1_sum_capacity(make_channel(4, 4, 2, 2));
  CHECK(mac.status == SumCapStatus::exact);
  CHECK(mac.mechanism == SumCapMechanism::mac_row_I);
  CHECK(std::abs(mac.value - 1.5849625007211562) <= 1e-12);

  const SumCapResult noisy = table1_sum_capacity(make_channel(0.09, 0.04, 10, 20));
  CHECK(noisy.status == SumCapStatus::exact);
  CHECK(noisy.mechanism == SumCapMechanism::noisy_TIN);
  CHECK(std::abs(noisy.value - 3.0633785711429694) <= 1e-12);

  const SumCapResult open = table1_sum_capacity(make_channel(0.5, 0.6, 10, 10));
  CHECK(open.status == SumCapStatus::upper_only);
  CHECK(open.mechanism == SumCapMechanism::unknown);

  const SumCapResult row2 = table1_sum_capacity(make_channel(0.5, 3, 1, 1));
  CHECK(row2.mechanism == SumCapMechanism::row_II_III);
  const SumCapResult row4 = table1_sum_capacity(make_channel(3, 0.5, 1, 1));
  CHECK(row4.mechanism == SumCapMechanism::row_IV_V);
}

TEST_CASE("row II/IV duality") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> ua(0.05, 1.0);
  std::uniform_real_distribution<double> logp(std::log(0.1), std::log(100.0));
  std::uniform_real_distribution<double> mult(1.0, 4.0);
  for (int i = 0; i < 300; ++i) {
    const double a = ua(rng);
    const double b = mult(rng) / a;  // ab >= 1
    const double p1 = std::exp(logp(rng)), p2 = std::exp(logp(rng));
    const Channel fwd = make_channel(a, b, p1, p2);
    const Channel swp = make_channel(b, a, p2, p1);
    if (classify_label(fwd) != RegimeLabel::II) continue;
    CHECK(classify_label(swp) == RegimeLabel::IV);
    const SumCapResult f = table1_sum_capacity(fwd);
    const SumCapResult s = table1_sum_capacity(swp);
    CHECK(f.status == SumCapStatus::exact);
    CHECK(s.status == SumCapStatus::exact);
    CHECK(std::abs(f.value - s.value) <= 1e-12);
  }
}

TEST_CASE("exact results are achieved by a concrete scheme") {
  const auto check_achievable = [](const Channel& ch) {
    const SumCapResult cap = table1_sum_capacity(ch);
    if (cap.status != SumCapStatus::exact) return;
    double achieved = 0.0;
    switch (cap.mechanism) {
      case SumCapMechanism::noisy_TIN:
        achieved = inner::tin_rates(ch, ch.p1, ch.p2).sum();
        break;
      case SumCapMechanism::mac_row_I:
        achieved = inner::mac_sum_capacity(ch);
        break;
      default:
        achieved = inner::mixed_achievable(ch).sum();
        break;
    }
    CHECK(std::abs(achieved - cap.value) <= 1e-12);
  };
  check_achievable(make_channel(0.09, 0.04, 10, 20));
  check_achievable(make_channel(4, 4, 2, 2));
  check_achievable(make_channel(2, 0.3, 1, 1));
  check_achievable(make_channel(0.3, 2, 1, 1));
  check_achievable(make_channel(0.5, 3, 1, 1));
  check_achievable(make_channel(3, 0.5, 1, 1));
  check_achievable(make_channel(0.3, 2, 1, 2.4));
  check_achievable(make_channel(1.25, 0.8, 3, 1));
}

TEST_CASE("noisy exact value matches the optimized bound") {
  const Channel ch = make_channel(0.04, 0.04, 5, 5);
  const SumCapResult cap = table1_sum_capacity(ch);
  REQUIRE(cap.status == SumCapStatus::exact);
  CHECK(std::abs(outer::constraint1_bound(ch, 1.0).value - cap.value) <= 1e-4);
}

TEST_CASE("row VII upper bound is sane") {
  const Channel ch = make_channel(0.5, 0.6, 10, 10);
  const double ub = sum_rate_upper_bound(ch);
  CHECK(ub > 0.0);
  // never better than what the channel can actually do
  CHECK(ub >= inner::best_inner_sum_rate(ch) - 1e-9);
  // never worse than the interference-free sum
  CHECK(ub <= 0.5 * std::log2(11.0) + 0.5 * std::log2(11.0) + 1e-12);

  // catch-all channels outside 0 < a, b < 1 still get a valid bound
  const Channel fallthrough = make_channel(0.3, 2, 1, 2.6);
  const SumCapResult r = table1_sum_capacity(fallthrough);
  CHECK(r.status == SumCapStatus::upper_only);
  CHECK(r.value >= inner::best_inner_sum_rate(fallthrough) - 1e-9);
}

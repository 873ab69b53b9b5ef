#include "icbounds/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "icbounds/channel.hpp"
#include "icbounds/inner.hpp"
#include "icbounds/outer.hpp"
#include "icbounds/region.hpp"
#include "icbounds/sumcap.hpp"

namespace icbounds::selfcheck {

namespace {

std::string describe(const Channel& ch) {
  std::ostringstream os;
  os << "(a=" << ch.a << ", b=" << ch.b << ", p1=" << ch.p1
     << ", p2=" << ch.p2 << ")";
  return os.str();
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

CheckResult parametric_form_identity(std::mt19937_64& rng, double tol) {
  CheckResult r{"parametric_form_identity", true, 0.0, ""};
  std::uniform_real_distribution<double> ua(0.01, 0.99);
  std::uniform_real_distribution<double> ufrac(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const Channel ch = make_channel(ua(rng), 0.5, log_uniform(rng, 0.1, 100.0),
                                    log_uniform(rng, 0.1, 100.0));
    const double p2p = ufrac(rng) * ch.p2;
    const outer::KramerPoint kp = outer::kramer_parametric(ch, p2p);
    const double direct = outer::constraint3_bound(ch, kp.alpha).value;
    const double diff = std::abs(direct - kp.value);
    if (diff > r.worst) {
      r.worst = diff;
      r.detail = describe(ch);
    }
  }
  r.pass = r.worst <= tol;
  return r;
}

CheckResult noisy_genie_equality(std::mt19937_64& rng, double tol) {
  CheckResult r{"noisy_genie_equality", true, 0.0, ""};
  std::uniform_real_distribution<double> us(0.02, 0.45);
  std::uniform_real_distribution<double> uf(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    double s = us(rng), t = us(rng);
    if (s + t >= 0.98) {
      s *= 0.5;
      t *= 0.5;
    }
    const double a = s * s, b = t * t;
    const double budget = 1.0 - s - t;
    double f1 = uf(rng), f2 = uf(rng);
    const double total = f1 + f2;
    if (total > 0.95) {
      f1 *= 0.95 / total;
      f2 *= 0.95 / total;
    }
    const double p1 = std::max(f1 * budget / (b * s), 1e-3);
    const double p2 = std::max(f2 * budget / (a * t), 1e-3);
    const Channel ch = make_channel(a, b, p1, p2);
    if (!is_noisy_interference(ch)) continue;
    const outer::GeniePoint g = sumcap::closed_form_genie(ch);
    const double diff = std::abs(outer::constraint1_objective(ch, 1.0, g) -
                                 sumcap::noisy_sum_capacity(ch));
    if (diff > r.worst) {
      r.worst = diff;
      r.detail = describe(ch);
    }
  }
  r.pass = r.worst <= tol;
  return r;
}

CheckResult etw_dominance(std::mt19937_64& rng, double tol) {
  CheckResult r{"etw_dominance", true, -1e300, ""};
  std::uniform_real_distribution<double> ua(0.01, 0.99);
  for (int i = 0; i < 25; ++i) {
    const Channel ch = make_channel(ua(rng), ua(rng),
                                    log_uniform(rng, 0.1, 100.0),
                                    log_uniform(rng, 0.1, 100.0));
    const double excess = outer::constraint1_bound(ch, 1.0).value -
                          outer::etw_sum_bound(ch).value;
    if (excess > r.worst) {
      r.worst = excess;
      r.detail = describe(ch);
    }
  }
  r.pass = r.worst <= std::max(tol, 1e-6);
  return r;
}

CheckResult region_containment(std::mt19937_64& rng, double tol) {
  CheckResult r{"region_containment", true, 1e300, ""};
  std::uniform_real_distribution<double> ua(0.02, 0.98);
  std::vector<Channel> chans = {make_channel(0.09, 0.04, 10.0, 20.0)};
  for (int i = 0; i < 2; ++i) {
    chans.push_back(make_channel(ua(rng), ua(rng),
                                 log_uniform(rng, 0.1, 50.0),
                                 log_uniform(rng, 0.1, 50.0)));
  }
  const double slack_limit = std::max(tol, 1e-9);
  for (const Channel& ch : chans) {
    const region::RegionPolygon poly = region::outer_region(ch);
    auto slack_of = [&](const inner::RatePair& p) {
      double worst = 1e300;
      for (const region::HalfPlane& hp : poly.halfplanes) {
        double s = 0.0;
        switch (hp.kind) {
          case region::HalfPlane::Kind::weighted:
            s = hp.c - (p.r1 + hp.w * p.r2);
            break;
          case region::HalfPlane::Kind::cap_r1:
            s = hp.c - p.r1;
            break;
          case region::HalfPlane::Kind::cap_r2:
            s = hp.c - p.r2;
            break;
        }
        worst = std::min(worst, s);
      }
      return worst;
    };
    for (int i = 0; i < 11; ++i) {
      for (int j = 0; j < 11; ++j) {
        const double q1 = std::min(ch.p1, ch.p1 * i / 10.0);
        const double q2 = std::min(ch.p2, ch.p2 * j / 10.0);
        const double s = slack_of(inner::tin_rates(ch, q1, q2));
        if (s < r.worst) {
          r.worst = s;
          r.detail = describe(ch);
        }
      }
    }
    for (const inner::RatePair& v : inner::tdm_frontier(ch, 64).vertices) {
      const double s = slack_of(v);
      if (s < r.worst) {
        r.worst = s;
        r.detail = describe(ch);
      }
    }
  }
  r.pass = r.worst >= -slack_limit;
  return r;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<CheckResult> out;
  out.push_back(parametric_form_identity(rng, opts.tol));
  out.push_back(noisy_genie_equality(rng, opts.tol));
  out.push_back(etw_dominance(rng, opts.tol));
  out.push_back(region_containment(rng, opts.tol));
  return out;
}

}  // namespace icbounds::selfcheck

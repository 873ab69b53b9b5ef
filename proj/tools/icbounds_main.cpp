// Command-line front end: classify, bound, region, sweep, point-a, selfcheck.
// JSON/CSV outputs carry 12 significant digits; all rates are bits/use.
// Exit codes: 0 success, 1 selfcheck failure, 2 usage or domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icbounds/channel.hpp"
#include "icbounds/inner.hpp"
#include "icbounds/outer.hpp"
#include "icbounds/region.hpp"
#include "icbounds/selfcheck.hpp"
#include "icbounds/sumcap.hpp"

namespace {

using json = nlohmann::ordered_json;

// Rounds to 12 significant digits so serialized numbers match the documented
// output precision.
double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

json channel_json(const icbounds::Channel& ch) {
  json j;
  j["a"] = round12(ch.a);
  j["b"] = round12(ch.b);
  j["p1"] = round12(ch.p1);
  j["p2"] = round12(ch.p2);
  return j;
}

json genie_json(const icbounds::outer::GeniePoint& g) {
  json j;
  j["rho1"] = round12(g.rho1);
  j["rho2"] = round12(g.rho2);
  j["sigma1_sq"] = round12(g.sigma1_sq);
  j["sigma2_sq"] = round12(g.sigma2_sq);
  return j;
}

const char* mixed_name(icbounds::MixedCondition m) {
  switch (m) {
    case icbounds::MixedCondition::none: return "none";
    case icbounds::MixedCondition::user1_strong: return "user1_strong";
    case icbounds::MixedCondition::user2_strong: return "user2_strong";
  }
  return "?";
}

int cmd_classify(const icbounds::Channel& ch) {
  const icbounds::Regime regime = icbounds::classify(ch);
  const icbounds::sumcap::SumCapResult cap =
      icbounds::sumcap::table1_sum_capacity(ch);
  json j = channel_json(ch);
  j["regime"] = icbounds::regime_name(regime.label);
  j["noisy"] = regime.noisy;
  j["very_strong"] = regime.very_strong;
  j["mixed"] = mixed_name(icbounds::mixed_condition(ch));
  j["sum_capacity"] = {
      {"value", round12(cap.value)},
      {"units", "bits/use"},
      {"status", icbounds::sumcap::sumcap_status_name(cap.status)},
      {"mechanism", icbounds::sumcap::sumcap_mechanism_name(cap.mechanism)},
  };
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_bound(const icbounds::Channel& ch, double mu) {
  if (!(ch.a > 0.0 && ch.a < 1.0 && ch.b > 0.0 && ch.b < 1.0)) {
    throw std::domain_error("bound requires 0 < a < 1 and 0 < b < 1");
  }
  const icbounds::outer::WeightedBound wb =
      icbounds::outer::constraint1_bound(ch, mu);
  json j = channel_json(ch);
  j["mu"] = round12(mu);
  j["value"] = round12(wb.value);
  j["units"] = "bits/use";
  j["source"] = icbounds::outer::bound_source_name(wb.source);
  if (const auto* g = std::get_if<icbounds::outer::GeniePoint>(&wb.witness)) {
    j["witness"] = genie_json(*g);
  }
  j["evaluations"] = wb.evaluations;
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_region(const icbounds::Channel& ch, double wmin, double wmax,
               int wcount, const std::string& out_path) {
  if (!(wmin > 0.0 && wmax > wmin)) {
    throw std::invalid_argument("need 0 < weights-min < weights-max");
  }
  if (wcount < 3) throw std::invalid_argument("weights-count must be >= 3");

  std::vector<double> ws;
  for (int i = 0; i < wcount; ++i) {
    ws.push_back(wmin * std::pow(wmax / wmin,
                                 static_cast<double>(i) / (wcount - 1)));
  }
  const auto [e1lo, e1hi] = icbounds::outer::eta1_range(ch);
  const auto [e2lo, e2hi] = icbounds::outer::eta2_range(ch);
  ws.insert(ws.end(), {e1lo, e1hi, e2lo, e2hi});
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());

  const icbounds::region::RegionPolygon poly =
      icbounds::region::outer_region(ch, ws);

  json j = channel_json(ch);
  j["units"] = "bits/use";
  j["vertices"] = json::array();
  for (const auto& v : poly.vertices) {
    j["vertices"].push_back({round12(v.r1), round12(v.r2)});
  }
  j["halfplanes"] = json::array();
  for (const auto& hp : poly.halfplanes) {
    json h;
    h["kind"] = icbounds::region::halfplane_kind_name(hp.kind);
    if (hp.kind == icbounds::region::HalfPlane::Kind::weighted) {
      h["w"] = round12(hp.w);
    }
    h["c"] = round12(hp.c);
    h["source"] = icbounds::outer::bound_source_name(hp.source);
    j["halfplanes"].push_back(h);
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << j.dump(2) << "\n";
  std::cout << poly.vertices.size() << " vertices\n";
  return 0;
}

int cmd_sweep(double p, double a_min, double a_max, int steps,
              bool log_spaced, const std::string& out_path) {
  if (!(p > 0.0)) throw std::invalid_argument("p must be > 0");
  if (!(a_min > 0.0 && a_min < a_max && a_max < 1.0)) {
    throw std::invalid_argument("need 0 < a-min < a-max < 1");
  }
  if (steps < 2) throw std::invalid_argument("steps must be >= 2");

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << "a,lower,thm1,etw,exact\n";
  constexpr double kExactTol = 1e-4;
  for (int i = 0; i < steps; ++i) {
    const double f = static_cast<double>(i) / (steps - 1);
    const double a = log_spaced
                         ? a_min * std::pow(a_max / a_min, f)
                         : a_min + (a_max - a_min) * f;
    const icbounds::Channel ch = icbounds::make_channel(a, a, p, p);
    const double lower = icbounds::inner::best_inner_sum_rate(ch);
    const double thm1 = icbounds::outer::constraint1_bound(ch, 1.0).value;
    const double etw = icbounds::outer::etw_sum_bound(ch).value;
    const bool exact = std::abs(thm1 - lower) <= kExactTol;
    out << fmt12(a) << "," << fmt12(lower) << "," << fmt12(thm1) << ","
        << fmt12(etw) << "," << (exact ? 1 : 0) << "\n";
  }
  std::printf("a_star=%.6g\n", icbounds::symmetric_noisy_threshold(p));
  return 0;
}

int cmd_point_a(double p) {
  std::printf("%.6g\n", icbounds::symmetric_noisy_threshold(p));
  return 0;
}

int cmd_selfcheck(std::uint64_t seed, double tol) {
  icbounds::selfcheck::Options opts;
  opts.seed = seed;
  opts.tol = tol;
  const auto results = icbounds::selfcheck::run_selfcheck(opts);
  std::string first_fail;
  for (const auto& r : results) {
    json j;
    j["check"] = r.name;
    j["pass"] = r.pass;
    j["worst"] = round12(r.worst);
    if (!r.detail.empty()) j["detail"] = r.detail;
    std::cout << j.dump() << "\n";
    if (!r.pass && first_fail.empty()) first_fail = r.name;
  }
  if (!first_fail.empty()) {
    std::cerr << "selfcheck failed: " << first_fail << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds, capacities and rate regions for the two-user "
               "Gaussian interference channel in standard form"};
  app.require_subcommand(1);

  double a = 0, b = 0, p1 = 0, p2 = 0;
  auto add_channel_flags = [&](CLI::App* cmd) {
    cmd->add_option("--a", a, "cross gain into receiver 1")->required();
    cmd->add_option("--b", b, "cross gain into receiver 2")->required();
    cmd->add_option("--p1", p1, "power constraint of user 1")->required();
    cmd->add_option("--p2", p2, "power constraint of user 2")->required();
  };

  CLI::App* classify = app.add_subcommand(
      "classify", "regime label, condition flags and sum capacity as JSON");
  add_channel_flags(classify);

  double mu = 1.0;
  CLI::App* bound = app.add_subcommand(
      "bound", "minimized weighted-sum outer bound R1 + mu*R2 as JSON");
  add_channel_flags(bound);
  bound->add_option("--mu", mu, "weight on R2 (> 0)")->required();

  double wmin = 1.0 / 64, wmax = 64.0;
  int wcount = 129;
  std::string out_path;
  CLI::App* region = app.add_subcommand(
      "region", "outer region polygon and half-plane list as JSON");
  add_channel_flags(region);
  region->add_option("--weights-min", wmin, "smallest support weight");
  region->add_option("--weights-max", wmax, "largest support weight");
  region->add_option("--weights-count", wcount, "log-spaced weight count");
  region->add_option("--out", out_path, "output JSON file")->required();

  double p = 0, a_min = 0, a_max = 0;
  int steps = 0;
  bool log_spaced = false;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "symmetric-channel sum-rate bound sweep as CSV");
  sweep->add_option("--p", p, "common power P1 = P2")->required();
  sweep->add_option("--a-min", a_min, "smallest gain")->required();
  sweep->add_option("--a-max", a_max, "largest gain")->required();
  sweep->add_option("--steps", steps, "grid size")->required();
  sweep->add_flag("--log-spaced", log_spaced, "log-spaced gain grid");
  sweep->add_option("--out", out_path, "output CSV file")->required();

  double pa = 0;
  CLI::App* point_a = app.add_subcommand(
      "point-a", "largest symmetric gain with noisy interference");
  point_a->add_option("--p", pa, "common power")->required();

  std::uint64_t seed = 12345;
  double tol = 1e-9;
  CLI::App* selfcheck =
      app.add_subcommand("selfcheck", "cross-module identity suite");
  selfcheck->add_option("--seed", seed, "RNG seed for randomized draws");
  selfcheck->add_option("--tol", tol, "tolerance for the exact identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) return cmd_classify(icbounds::make_channel(a, b, p1, p2));
    if (*bound) return cmd_bound(icbounds::make_channel(a, b, p1, p2), mu);
    if (*region) {
      return cmd_region(icbounds::make_channel(a, b, p1, p2), wmin, wmax,
                        wcount, out_path);
    }
    if (*sweep) return cmd_sweep(p, a_min, a_max, steps, log_spaced, out_path);
    if (*point_a) return cmd_point_a(pa);
    if (*selfcheck) return cmd_selfcheck(seed, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "icbounds/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace icbounds::optimize {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long kRefineBudget = 10000;

double safe_eval(const Objective& f, std::span<const double> x) {
  double v;
  try {
    v = f(x);
  } catch (const std::exception&) {
    return kInf;
  }
  return std::isnan(v) ? kInf : v;
}

void check_box(const Box& box) {
  if (box.lo.size() != box.hi.size() || box.lo.empty() ||
      box.lo.size() > 4) {
    throw std::invalid_argument("box must have 1 to 4 dimensions");
  }
  for (std::size_t i = 0; i < box.lo.size(); ++i) {
    if (!(std::isfinite(box.lo[i]) && std::isfinite(box.hi[i]) &&
          box.lo[i] <= box.hi[i])) {
      throw std::invalid_argument("box intervals must be finite with lo <= hi");
    }
  }
}

void clip_to_box(std::vector<double>& x, const Box& box) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = std::clamp(x[i], box.lo[i], box.hi[i]);
  }
}

}  // namespace

Box make_box(std::initializer_list<std::pair<double, double>> intervals) {
  Box box;
  for (const auto& [lo, hi] : intervals) {
    box.lo.push_back(lo);
    box.hi.push_back(hi);
  }
  return box;
}

MinResult grid_minimize(const Objective& objective, const Box& box,
                        int resolution) {
  check_box(box);
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");

  const std::size_t dim = box.dimension();
  std::vector<std::vector<double>> axes(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    axes[d].resize(resolution);
    for (int k = 0; k < resolution; ++k) {
      axes[d][k] = box.lo[d] + (box.hi[d] - box.lo[d]) *
                                   (static_cast<double>(k) / (resolution - 1));
    }
    axes[d][resolution - 1] = box.hi[d];
  }

  MinResult best;
  best.value = kInf;
  best.point.assign(dim, 0.0);

  std::vector<int> idx(dim, 0);
  std::vector<double> x(dim);
  long count = 0;
  bool done = false;
  while (!done) {
    for (std::size_t d = 0; d < dim; ++d) x[d] = axes[d][idx[d]];
    const double v = safe_eval(objective, x);
    ++count;
    // Strict comparison in lexicographic visiting order keeps the first
    // (smallest-index) point on ties.
    if (v < best.value) {
      best.value = v;
      best.point = x;
    }
    // Advance the multi-index, last dimension fastest.
    done = true;
    for (std::size_t d = dim; d-- > 0;) {
      if (++idx[d] < resolution) {
        done = false;
        break;
      }
      idx[d] = 0;
    }
  }
  best.evaluations = count;
  return best;
}

MinResult grid_then_refine(const Objective& objective, const Box& box,
                           int coarse, double tol) {
  check_box(box);
  if (coarse < 5) throw std::invalid_argument("coarse resolution must be >= 5");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");

  MinResult best = grid_minimize(objective, box, coarse);
  long evals = best.evaluations;
  const std::size_t dim = box.dimension();

  if (!std::isfinite(best.value)) {
    return best;  // nothing feasible on the grid, refinement has no anchor
  }

  // Nelder-Mead with standard coefficients, candidates clipped to the box.
  const std::size_t n = dim;
  std::vector<std::vector<double>> pts(n + 1, best.point);
  std::vector<double> vals(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    double step = (box.hi[i - 1] - box.lo[i - 1]) / 16.0;
    if (step == 0.0) step = 1e-12;
    if (pts[i][i - 1] + step > box.hi[i - 1]) step = -step;
    pts[i][i - 1] += step;
    clip_to_box(pts[i], box);
  }
  long refine_evals = 0;
  auto eval = [&](std::span<const double> x) {
    ++refine_evals;
    return safe_eval(objective, x);
  };
  vals[0] = best.value;
  for (std::size_t i = 1; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  while (refine_evals < kRefineBudget) {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t lo = order[0], hi = order[n], nh = order[n - 1];
    if (vals[hi] - vals[lo] < tol) break;

    for (std::size_t d = 0; d < n; ++d) {
      double s = 0.0;
      for (std::size_t i = 0; i <= n; ++i) {
        if (i != hi) s += pts[i][d];
      }
      centroid[d] = s / static_cast<double>(n);
    }

    for (std::size_t d = 0; d < n; ++d) xr[d] = centroid[d] + (centroid[d] - pts[hi][d]);
    std::vector<double> xr_c = xr;
    clip_to_box(xr_c, box);
    const double fr = eval(xr_c);

    if (fr < vals[lo]) {
      for (std::size_t d = 0; d < n; ++d) xe[d] = centroid[d] + 2.0 * (centroid[d] - pts[hi][d]);
      std::vector<double> xe_c = xe;
      clip_to_box(xe_c, box);
      const double fe = eval(xe_c);
      if (fe < fr) {
        pts[hi] = xe_c;
        vals[hi] = fe;
      } else {
        pts[hi] = xr_c;
        vals[hi] = fr;
      }
    } else if (fr < vals[nh]) {
      pts[hi] = xr_c;
      vals[hi] = fr;
    } else {
      const bool outside = fr < vals[hi];
      const std::vector<double>& towards = outside ? xr_c : pts[hi];
      for (std::size_t d = 0; d < n; ++d) xc[d] = centroid[d] + 0.5 * (towards[d] - centroid[d]);
      std::vector<double> xc_c = xc;
      clip_to_box(xc_c, box);
      const double fc = eval(xc_c);
      if (fc < std::min(fr, vals[hi])) {
        pts[hi] = xc_c;
        vals[hi] = fc;
      } else {
        // Shrink towards the best vertex.
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == lo) continue;
          for (std::size_t d = 0; d < n; ++d) {
            pts[i][d] = pts[lo][d] + 0.5 * (pts[i][d] - pts[lo][d]);
          }
          clip_to_box(pts[i], box);
          vals[i] = eval(pts[i]);
          if (refine_evals >= kRefineBudget) break;
        }
      }
    }

    for (std::size_t i = 0; i <= n; ++i) {
      if (vals[i] < best.value) {
        best.value = vals[i];
        best.point = pts[i];
      }
    }
  }

  clip_to_box(best.point, box);
  best.value = safe_eval(objective, best.point);
  best.evaluations = evals + refine_evals + 1;
  return best;
}

}  // namespace icbounds::optimize

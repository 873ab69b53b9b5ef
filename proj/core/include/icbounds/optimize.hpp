#pragma once

#include <functional>
#include <span>
#include <vector>

namespace icbounds::optimize {

// Closed search box, 1 to 4 dimensions.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t dimension() const { return lo.size(); }
};

Box make_box(std::initializer_list<std::pair<double, double>> intervals);

struct MinResult {
  std::vector<double> point;
  double value = 0.0;
  long evaluations = 0;
};

// Objective values that are NaN or thrown errors are treated as +infinity,
// so slightly irregular feasible regions need no special casing.
using Objective = std::function<double(std::span<const double>)>;

// Full Cartesian grid with `resolution` points per dimension, endpoints
// included. Returns the minimizing grid point; ties go to the smallest
// lexicographic grid index. Evaluation count is exactly resolution^dim.
MinResult grid_minimize(const Objective& objective, const Box& box,
                        int resolution);

// Coarse grid followed by a Nelder-Mead simplex search clipped to the box.
// The refinement stops once the simplex value spread (the improvement still
// available to an iteration) drops below `tol`, or after 10,000 refinement
// evaluations. The returned value never exceeds the coarse-grid value, the
// returned point lies inside the box, and the value is the objective
// re-evaluated at that point. Deterministic for a deterministic objective.
MinResult grid_then_refine(const Objective& objective, const Box& box,
                           int coarse = 17, double tol = 1e-9);

}  // namespace icbounds::optimize

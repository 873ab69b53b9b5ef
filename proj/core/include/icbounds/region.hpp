#pragma once

#include <span>
#include <vector>

#include "icbounds/channel.hpp"
#include "icbounds/inner.hpp"
#include "icbounds/outer.hpp"

namespace icbounds::region {

// One supporting half-plane of the outer region: either R1 + w*R2 <= c, or a
// single-user axis cap R1 <= c / R2 <= c.
struct HalfPlane {
  enum class Kind { weighted, cap_r1, cap_r2 };
  Kind kind;
  double w;  // meaningful for Kind::weighted only
  double c;
  outer::BoundSource source;
};

const char* halfplane_kind_name(HalfPlane::Kind k);

// Upper-right frontier of the intersection of the generating half-planes
// with the nonnegative quadrant. Vertices are listed with r1 decreasing
// (r2 nondecreasing); the first and last vertices lie on the axes.
struct RegionPolygon {
  std::vector<inner::RatePair> vertices;
  std::vector<HalfPlane> halfplanes;
};

// Tightest available bound on R1 + w*R2: constraint 1 always, constraints
// 2/3 when w lies in their weight ranges. Requires 0 < a < 1, 0 < b < 1.
HalfPlane outer_support(const Channel& ch, double w);

// 129 log-spaced weights over [1/64, 64] plus the endpoints of both eta
// ranges, deduplicated and sorted.
std::vector<double> default_weight_grid(const Channel& ch);

RegionPolygon outer_region(const Channel& ch, std::span<const double> weights);

RegionPolygon outer_region(const Channel& ch);

// True iff p satisfies every generating half-plane (and nonnegativity) with
// slack >= -1e-9.
bool contains(const RegionPolygon& poly, const inner::RatePair& p);

// Area under the frontier (the region between the frontier and the axes).
double area(const RegionPolygon& poly);

}  // namespace icbounds::region

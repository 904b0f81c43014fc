#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qstar/gfun.hpp"

namespace qstar {

/// (x, y) ↦ (qx·x + bx, gy·y + dy); gy may be negative (orientation flip).
struct AffineMap2D {
  Rational qx, bx, gy, dy;
};

struct NonConstantSchedule : std::domain_error {
  using std::domain_error::domain_error;
};

struct DegenerateMap : std::domain_error {
  using std::domain_error::domain_error;
};

/// The three contractions φ_i with φ_i(Γ_f) = Γ_f ∩ (cylinder i × ℝ).
/// Defined only for constant schedules with all g_i nonzero.
std::array<AffineMap2D, 3> ifs_maps(const FunctionSpec& f);

/// Exact points (x, f(x)) at all rank-level cylinder left endpoints plus
/// (1, 1); 3^rank + 1 points sorted by x.
struct GraphSample {
  std::vector<std::pair<Rational, Rational>> points;
  bool exact = true;
};

GraphSample graph_sample(const FunctionSpec& f, std::size_t rank);

/// max |f(φ_i.x(x)) − φ_i.y(y)| over the sample and the three maps, with f
/// re-evaluated from scratch on the mapped abscissae. Self-affinity says
/// this is exactly 0.
Rational self_affine_residual(const FunctionSpec& f, const GraphSample& sample);

struct BoxDimension {
  double estimate;  // least-squares slope of log(count) against log(n)
  std::vector<std::pair<std::size_t, std::size_t>> per_scale;  // (n, occupied cells)
};

/// Occupied-cell counts of the n×n grid over [0,1]² against the exact graph:
/// cylinders are split until narrower than a cell, and their exact value
/// ranges mark the cells, so no oscillation is missed.
BoxDimension box_dimension(const FunctionSpec& f, const std::vector<std::size_t>& scales);

}  // namespace qstar

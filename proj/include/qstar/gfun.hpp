#pragma once

#include <cstddef>
#include <vector>

#include "qstar/digits.hpp"
#include "qstar/rational.hpp"
#include "qstar/repsys.hpp"
#include "qstar/schedule.hpp"

namespace qstar {

/// The control sequence (ε_k), each in [0,1], as preamble + repeating block.
class EpsilonSchedule {
 public:
  EpsilonSchedule(std::vector<Rational> preamble, std::vector<Rational> period);

  static EpsilonSchedule constant(Rational eps);

  const std::vector<Rational>& preamble() const noexcept { return preamble_; }
  const std::vector<Rational>& period() const noexcept { return period_; }

  /// ε_k, 1-indexed.
  const Rational& epsilon_at(std::size_t k) const;

  bool is_constant() const noexcept { return preamble_.empty() && period_.size() == 1; }

  friend bool operator==(const EpsilonSchedule&, const EpsilonSchedule&) = default;

 private:
  std::vector<Rational> preamble_;
  std::vector<Rational> period_;
};

/// Image-side weights and cut points induced by one ε:
/// g0 = g2 = (1+ε)/3, g1 = (1−2ε)/3; δ0 = 0, δ1 = g0, δ2 = g0+g1.
/// g1 may be zero or negative — that is the whole point.
struct GColumn {
  Rational g0, g1, g2;
  Rational d0, d1, d2;

  static GColumn from_epsilon(const Rational& eps);

  const Rational& g(Digit d) const;
  const Rational& delta(Digit d) const;
};

GColumn g_column_at(const EpsilonSchedule& e, std::size_t k);

/// Full parameterization of f: the domain-side matrix and the ε-sequence.
struct FunctionSpec {
  ColumnSchedule x_schedule;
  EpsilonSchedule eps;
};

/// f(x) = δ_{α₁1} + Σ_{k≥2} δ_{α_k k}·∏_{j<k} g_{α_j j}, exactly. Depends only
/// on the digits of x and the ε-schedule.
Rational eval_exact(const FunctionSpec& f, const DigitSeq& x);

/// Truncated evaluation at a floating point: digits come from encoding x
/// against the spec's matrix, the partial sum is exact, and the truncation
/// depth m = ⌈log tol / log (2/3)⌉ guarantees |result − f(x)| ≤ tol.
double eval_approx(const FunctionSpec& f, double x, double tol);

/// μ_f of the cylinder w: the product of the g-weights along w. Equals
/// f(right endpoint) − f(left endpoint).
Rational increment(const FunctionSpec& f, const DigitWord& w);

enum class EndpointTag { Left, Right };

struct CylinderRange {
  Rational lo, hi;
  EndpointTag argmin_at, argmax_at;
};

/// Exact image of a cylinder: f attains its extrema at the endpoints, so the
/// image is [f(left), f(right)] sorted. Zero increment gives the degenerate
/// range of a plateau.
CylinderRange range_on_cylinder(const FunctionSpec& f, const DigitWord& w);

/// ρ = f(dual form) − f(given form); well-definedness demands exactly 0.
/// Throws if x has no dual representation.
Rational dual_consistency(const FunctionSpec& f, const DigitSeq& x);

}  // namespace qstar

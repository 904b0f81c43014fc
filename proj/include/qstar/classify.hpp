#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qstar/gfun.hpp"

namespace qstar {

enum class RegimeTag { StrictlyIncreasing, CantorSingular, NowhereMonotone, Mixed };

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// Monotonicity regime of f, decided from the ε-schedule alone. per_index
/// holds the sign of g₁ at each schedule position (preamble then period),
/// which determines everything at all ranks.
struct Regime {
  RegimeTag tag;
  std::vector<Sign> per_index;
};

Regime classify_regime(const EpsilonSchedule& e);

/// Signs of the increments of the three children of w, in digit order.
std::array<Sign, 3> subcylinder_signs(const FunctionSpec& f, const DigitWord& w);

/// Every minimal cylinder of rank ≤ max_rank on which f is constant: words
/// whose last digit is 1 at a position with ε = 1/2, with no earlier zero
/// factor. Ordered by rank, then by digits.
std::vector<DigitWord> plateau_cylinders(const FunctionSpec& f, std::size_t max_rank);

/// Exact total length of those plateau cylinders.
Rational plateau_measure(const FunctionSpec& f, std::size_t max_rank);

/// r_k = ∏_{j≤k} g_{α_j j} / q_{α_j j} for k = 1..m: the ratio of f-increment
/// to cylinder length along the nested cylinders around x. Tends to 0 where
/// the derivative vanishes; |r_k| → ∞ flags unbounded difference quotients.
std::vector<Rational> derivative_ratios(const FunctionSpec& f, const DigitSeq& x, std::size_t m);

}  // namespace qstar

#pragma once

#include <cstddef>
#include <vector>

#include "qstar/gfun.hpp"

namespace qstar {

enum class Witness {
  SignChange,   // f − y0 flips sign across the cylinder: certified interior root
  EndpointHit,  // f equals y0 exactly at an endpoint (or on the whole plateau)
  RangeOnly     // y0 inside the exact range, no certificate yet
};

/// A cylinder certified to be the only places f can reach y0 at this depth.
struct SolutionRegion {
  DigitWord word;
  Rational x_left, x_right;
  Rational f_lo, f_hi;  // exact image of the cylinder, f_lo ≤ f_hi
  Witness witness;
};

/// Branch-and-bound over the cylinder tree: children whose exact image misses
/// y0 are discarded, plateaus at value y0 are returned whole, survivors are
/// refined to the requested depth. Sound: every solution of f(x) = y0 lies in
/// some returned region. Regions come back sorted by x. y0 outside [0,1]
/// yields the empty list.
std::vector<SolutionRegion> preimage_regions(const FunctionSpec& f, const Rational& y0,
                                             std::size_t depth);

/// Digit-by-digit inversion in the strictly increasing regime: the rank-depth
/// word whose cylinder image contains y0 (ties resolve to the higher digit).
DigitWord invert_monotone(const FunctionSpec& f, const Rational& y0, std::size_t depth);

/// Certified lower bound on |f⁻¹(y0)|: sign-change regions each contain an
/// interior root, plus the distinct endpoint values where f hits y0 exactly.
std::size_t root_count_lower_bound(const FunctionSpec& f, const Rational& y0,
                                   std::size_t depth);

}  // namespace qstar

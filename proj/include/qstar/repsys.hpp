#pragma once

#include <cstddef>
#include <optional>

#include "qstar/digits.hpp"
#include "qstar/rational.hpp"
#include "qstar/schedule.hpp"

namespace qstar {

/// The point named by an eventually periodic digit sequence:
/// x = β_{α₁1} + Σ_{k≥2} β_{α_k k}·∏_{j<k} q_{α_j j}, computed exactly.
Rational value_of(const ColumnSchedule& s, const DigitSeq& x);

struct CylinderInterval {
  Rational left;
  Rational length;
};

/// The closed interval of all points whose expansion starts with w.
CylinderInterval cylinder_interval(const ColumnSchedule& s, const DigitWord& w);

struct EncodeResult {
  DigitWord word;               // digits certain at the requested depth
  bool exact = false;           // true once the remainder state recurred
  std::optional<DigitSeq> full; // the whole expansion, canonical, when exact
};

/// Greedy digit extraction for x ∈ [0,1]. Ties at cut points take the higher
/// digit, so terminating points come out in tail-(0) form. Detects when the
/// (remainder, schedule phase) state recurs and reports the full periodic
/// expansion; `word` is then the pre-periodic prefix.
EncodeResult encode(const ColumnSchedule& s, const Rational& x, std::size_t depth);

}  // namespace qstar

#pragma once

#include <cstddef>
#include <vector>

#include "qstar/digits.hpp"
#include "qstar/rational.hpp"

namespace qstar {

/// One column of the stochastic matrix: three positive probabilities
/// summing to 1. The cut points β₀ = 0, β₁ = q0, β₂ = q0+q1 mark where the
/// three digit subintervals begin.
class MatrixColumn {
 public:
  MatrixColumn(Rational q0, Rational q1, Rational q2);

  const Rational& q0() const noexcept { return q0_; }
  const Rational& q1() const noexcept { return q1_; }
  const Rational& q2() const noexcept { return q2_; }

  const Rational& q(Digit d) const;
  Rational beta(Digit d) const;

  friend bool operator==(const MatrixColumn&, const MatrixColumn&) = default;

 private:
  Rational q0_, q1_, q2_;
};

Rational beta_of(const MatrixColumn& c, Digit d);

/// Finite description of the infinite matrix: explicit leading columns,
/// then a block repeated forever.
class ColumnSchedule {
 public:
  ColumnSchedule(std::vector<MatrixColumn> preamble, std::vector<MatrixColumn> period);

  static ColumnSchedule constant(MatrixColumn c);
  static ColumnSchedule uniform_thirds();

  const std::vector<MatrixColumn>& preamble() const noexcept { return preamble_; }
  const std::vector<MatrixColumn>& period() const noexcept { return period_; }

  /// Column k, 1-indexed.
  const MatrixColumn& column_at(std::size_t k) const;

  bool is_constant() const noexcept { return preamble_.empty() && period_.size() == 1; }

  friend bool operator==(const ColumnSchedule&, const ColumnSchedule&) = default;

 private:
  std::vector<MatrixColumn> preamble_;
  std::vector<MatrixColumn> period_;
};

const MatrixColumn& column_at(const ColumnSchedule& s, std::size_t k);

}  // namespace qstar

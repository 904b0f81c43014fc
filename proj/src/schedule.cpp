#include "qstar/schedule.hpp"

#include <stdexcept>

namespace qstar {

MatrixColumn::MatrixColumn(Rational q0, Rational q1, Rational q2)
    : q0_(std::move(q0)), q1_(std::move(q1)), q2_(std::move(q2)) {
  if (q0_.sign() <= 0 || q1_.sign() <= 0 || q2_.sign() <= 0) {
    throw std::invalid_argument("column entries must be positive");
  }
  if (q0_ + q1_ + q2_ != Rational(1)) {
    throw std::invalid_argument("column does not sum to 1");
  }
}

const Rational& MatrixColumn::q(Digit d) const {
  switch (d) {
    case 0: return q0_;
    case 1: return q1_;
    case 2: return q2_;
    default: throw std::invalid_argument("digit out of {0,1,2}");
  }
}

Rational MatrixColumn::beta(Digit d) const {
  switch (d) {
    case 0: return Rational(0);
    case 1: return q0_;
    case 2: return q0_ + q1_;
    default: throw std::invalid_argument("digit out of {0,1,2}");
  }
}

Rational beta_of(const MatrixColumn& c, Digit d) { return c.beta(d); }

ColumnSchedule::ColumnSchedule(std::vector<MatrixColumn> preamble,
                               std::vector<MatrixColumn> period)
    : preamble_(std::move(preamble)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("schedule period must be nonempty");
}

ColumnSchedule ColumnSchedule::constant(MatrixColumn c) {
  return ColumnSchedule({}, {std::move(c)});
}

ColumnSchedule ColumnSchedule::uniform_thirds() {
  const Rational third(1, 3);
  return constant(MatrixColumn(third, third, third));
}

const MatrixColumn& ColumnSchedule::column_at(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("columns are 1-indexed");
  if (k <= preamble_.size()) return preamble_[k - 1];
  return period_[(k - preamble_.size() - 1) % period_.size()];
}

const MatrixColumn& column_at(const ColumnSchedule& s, std::size_t k) {
  return s.column_at(k);
}

}  // namespace qstar

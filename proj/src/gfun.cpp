#include "qstar/gfun.hpp"

#include <cmath>
#include <stdexcept>

#include "series.hpp"

namespace qstar {

EpsilonSchedule::EpsilonSchedule(std::vector<Rational> preamble, std::vector<Rational> period)
    : preamble_(std::move(preamble)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("epsilon period must be nonempty");
  auto check = [](const Rational& e) {
    if (e.sign() < 0 || e > Rational(1)) throw std::invalid_argument("epsilon out of [0,1]");
  };
  for (const Rational& e : preamble_) check(e);
  for (const Rational& e : period_) check(e);
}

EpsilonSchedule EpsilonSchedule::constant(Rational eps) {
  return EpsilonSchedule({}, {std::move(eps)});
}

const Rational& EpsilonSchedule::epsilon_at(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("epsilon positions are 1-indexed");
  if (k <= preamble_.size()) return preamble_[k - 1];
  return period_[(k - preamble_.size() - 1) % period_.size()];
}

GColumn GColumn::from_epsilon(const Rational& eps) {
  const Rational third(1, 3);
  GColumn c;
  c.g0 = (Rational(1) + eps) * third;
  c.g1 = (Rational(1) - Rational(2) * eps) * third;
  c.g2 = c.g0;
  c.d0 = Rational(0);
  c.d1 = c.g0;
  c.d2 = c.g0 + c.g1;
  return c;
}

const Rational& GColumn::g(Digit d) const {
  switch (d) {
    case 0: return g0;
    case 1: return g1;
    case 2: return g2;
    default: throw std::invalid_argument("digit out of {0,1,2}");
  }
}

const Rational& GColumn::delta(Digit d) const {
  switch (d) {
    case 0: return d0;
    case 1: return d1;
    case 2: return d2;
    default: throw std::invalid_argument("digit out of {0,1,2}");
  }
}

GColumn g_column_at(const EpsilonSchedule& e, std::size_t k) {
  return GColumn::from_epsilon(e.epsilon_at(k));
}

Rational eval_exact(const FunctionSpec& f, const DigitSeq& x) {
  return detail::evaluate_periodic_series(
      f.eps.preamble().size(), f.eps.period().size(), x,
      [&](std::size_t k, Digit d) { return g_column_at(f.eps, k).delta(d); },
      [&](std::size_t k, Digit d) { return g_column_at(f.eps, k).g(d); });
}

double eval_approx(const FunctionSpec& f, double x, double tol) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("eval_approx: x outside [0,1]");
  if (!(tol > 0.0)) throw std::invalid_argument("eval_approx: tol must be positive");

  std::size_t m = 1;
  if (tol < 1.0) {
    m = static_cast<std::size_t>(std::ceil(std::log(tol) / std::log(2.0 / 3.0)));
  }

  const EncodeResult enc = encode(f.x_schedule, Rational::from_double(x), m);
  Rational sum(0), prod(1);
  for (std::size_t k = 1; k <= m; ++k) {
    const Digit d = enc.exact ? enc.full->at(k) : enc.word[k - 1];
    const GColumn col = g_column_at(f.eps, k);
    sum += col.delta(d) * prod;
    prod *= col.g(d);
  }
  return sum.to_double();
}

Rational increment(const FunctionSpec& f, const DigitWord& w) {
  Rational prod(1);
  for (std::size_t j = 0; j < w.size(); ++j) prod *= g_column_at(f.eps, j + 1).g(w[j]);
  return prod;
}

CylinderRange range_on_cylinder(const FunctionSpec& f, const DigitWord& w) {
  Rational base(0), mu(1);
  for (std::size_t j = 0; j < w.size(); ++j) {
    const GColumn col = g_column_at(f.eps, j + 1);
    base += col.delta(w[j]) * mu;
    mu *= col.g(w[j]);
  }
  if (mu.sign() > 0) return {base, base + mu, EndpointTag::Left, EndpointTag::Right};
  if (mu.sign() < 0) return {base + mu, base, EndpointTag::Right, EndpointTag::Left};
  return {base, base, EndpointTag::Left, EndpointTag::Left};
}

Rational dual_consistency(const FunctionSpec& f, const DigitSeq& x) {
  const auto dual = dual_representation(x);
  if (!dual) throw std::domain_error("dual_consistency: x has no dual representation");
  return eval_exact(f, *dual) - eval_exact(f, x);
}

}  // namespace qstar

#include "qstar/repsys.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "series.hpp"

namespace qstar {

Rational value_of(const ColumnSchedule& s, const DigitSeq& x) {
  return detail::evaluate_periodic_series(
      s.preamble().size(), s.period().size(), x,
      [&](std::size_t k, Digit d) { return s.column_at(k).beta(d); },
      [&](std::size_t k, Digit d) { return s.column_at(k).q(d); });
}

CylinderInterval cylinder_interval(const ColumnSchedule& s, const DigitWord& w) {
  Rational left(0), length(1);
  for (std::size_t j = 0; j < w.size(); ++j) {
    const MatrixColumn& col = s.column_at(j + 1);
    left += col.beta(w[j]) * length;
    length *= col.q(w[j]);
  }
  return {std::move(left), std::move(length)};
}

EncodeResult encode(const ColumnSchedule& s, const Rational& x, std::size_t depth) {
  if (x.sign() < 0 || x > Rational(1)) throw std::domain_error("encode: x outside [0,1]");
  if (depth == 0) throw std::invalid_argument("encode: depth must be positive");

  const std::size_t pre = s.preamble().size();
  const std::size_t per = s.period().size();
  std::map<std::pair<std::size_t, Rational>, std::size_t> seen;  // state -> position
  DigitWord digits;
  Rational rem = x;

  auto finish_exact = [&](std::size_t first) {
    // digits before `first` never recur; the rest cycle forever
    std::vector<Digit> p(digits.digits().begin(), digits.digits().begin() + (first - 1));
    std::vector<Digit> t(digits.digits().begin() + (first - 1), digits.digits().end());
    EncodeResult r;
    r.word = DigitWord(std::move(p));
    r.exact = true;
    r.full = canonicalize(DigitSeq(r.word, DigitWord(std::move(t))));
    return r;
  };

  for (std::size_t k = 1; k <= depth + 1; ++k) {
    if (k > pre) {
      const std::size_t phase = (k - pre - 1) % per;
      auto [it, fresh] = seen.try_emplace({phase, rem}, k);
      if (!fresh) return finish_exact(it->second);
    }
    if (k > depth) break;
    const MatrixColumn& col = s.column_at(k);
    Digit d = 2;
    while (d > 0 && col.beta(d) > rem) --d;
    rem = (rem - col.beta(d)) / col.q(d);
    digits.push_back(d);
  }
  return {std::move(digits), false, std::nullopt};
}

}  // namespace qstar

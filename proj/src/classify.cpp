#include "qstar/classify.hpp"

#include <stdexcept>

namespace qstar {

namespace {

Sign sign_of(const Rational& r) {
  const int s = r.sign();
  return s < 0 ? Sign::Negative : s > 0 ? Sign::Positive : Sign::Zero;
}

}  // namespace

Regime classify_regime(const EpsilonSchedule& e) {
  const Rational half(1, 2);
  Regime r;
  bool all_below = true, all_equal = true, all_above = true;
  auto visit = [&](const Rational& eps) {
    if (eps < half) {
      all_equal = all_above = false;
      r.per_index.push_back(Sign::Positive);
    } else if (eps == half) {
      all_below = all_above = false;
      r.per_index.push_back(Sign::Zero);
    } else {
      all_below = all_equal = false;
      r.per_index.push_back(Sign::Negative);
    }
  };
  for (const Rational& eps : e.preamble()) visit(eps);
  for (const Rational& eps : e.period()) visit(eps);
  r.tag = all_below   ? RegimeTag::StrictlyIncreasing
          : all_equal ? RegimeTag::CantorSingular
          : all_above ? RegimeTag::NowhereMonotone
                      : RegimeTag::Mixed;
  return r;
}

std::array<Sign, 3> subcylinder_signs(const FunctionSpec& f, const DigitWord& w) {
  const Rational mu = increment(f, w);
  const GColumn col = g_column_at(f.eps, w.size() + 1);
  return {sign_of(mu * col.g0), sign_of(mu * col.g1), sign_of(mu * col.g2)};
}

namespace {

// Walks the words with no zero g-factor yet; children with digit 1 at an
// ε = 1/2 position are exactly the minimal plateaus. `zero_beyond[r]` says
// whether any position in (r, max_rank] has ε = 1/2, so dead subtrees are
// skipped.
template <typename Emit>
void walk_plateaus(const FunctionSpec& f, std::size_t max_rank, Emit&& emit) {
  if (max_rank == 0) throw std::invalid_argument("max_rank must be positive");
  std::vector<bool> zero_at(max_rank + 1, false);
  const Rational half(1, 2);
  for (std::size_t k = 1; k <= max_rank; ++k) zero_at[k] = f.eps.epsilon_at(k) == half;
  std::vector<bool> zero_beyond(max_rank + 1, false);
  for (std::size_t r = max_rank; r-- > 0;) zero_beyond[r] = zero_beyond[r + 1] || zero_at[r + 1];

  struct Node {
    DigitWord w;
    Rational length;
  };
  std::vector<Node> frontier{{DigitWord{}, Rational(1)}};
  for (std::size_t rank = 1; rank <= max_rank && !frontier.empty(); ++rank) {
    std::vector<Node> next;
    const MatrixColumn& col = f.x_schedule.column_at(rank);
    for (const Node& node : frontier) {
      for (Digit d = 0; d <= 2; ++d) {
        if (d == 1 && zero_at[rank]) {
          emit(node.w + d, node.length * col.q(d));
          continue;
        }
        if (zero_beyond[rank]) next.push_back({node.w + d, node.length * col.q(d)});
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

std::vector<DigitWord> plateau_cylinders(const FunctionSpec& f, std::size_t max_rank) {
  std::vector<DigitWord> out;
  walk_plateaus(f, max_rank, [&](DigitWord w, const Rational&) { out.push_back(std::move(w)); });
  return out;
}

Rational plateau_measure(const FunctionSpec& f, std::size_t max_rank) {
  Rational total(0);
  walk_plateaus(f, max_rank, [&](const DigitWord&, const Rational& len) { total += len; });
  return total;
}

std::vector<Rational> derivative_ratios(const FunctionSpec& f, const DigitSeq& x, std::size_t m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  std::vector<Rational> out;
  out.reserve(m);
  Rational ratio(1);
  for (std::size_t k = 1; k <= m; ++k) {
    const Digit d = x.at(k);
    ratio *= g_column_at(f.eps, k).g(d) / f.x_schedule.column_at(k).q(d);
    out.push_back(ratio);
  }
  return out;
}

}  // namespace qstar

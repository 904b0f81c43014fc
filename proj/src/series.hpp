#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>

#include "qstar/digits.hpp"
#include "qstar/rational.hpp"

namespace qstar::detail {

/// Exact sum of cut(1, α₁) + Σ_{k≥2} cut(k, α_k)·∏_{j<k} weight(j, α_j) for an
/// eventually periodic digit sequence and column functions that are periodic
/// in k after `sched_preamble` with period `sched_period`. Past the head the
/// stream of (digit, column) pairs repeats every lcm(tail, period) positions,
/// so the remaining sum T satisfies T = block_sum + block_prod·T with
/// |block_prod| < 1.
template <typename Cut, typename Weight>
Rational evaluate_periodic_series(std::size_t sched_preamble, std::size_t sched_period,
                                  const DigitSeq& x, Cut&& cut, Weight&& weight) {
  const std::size_t head = std::max(x.prefix().size(), sched_preamble);
  Rational acc(0), prod(1);
  for (std::size_t k = 1; k <= head; ++k) {
    const Digit d = x.at(k);
    acc += cut(k, d) * prod;
    prod *= weight(k, d);
  }
  const std::size_t hyper = std::lcm(x.tail().size(), sched_period);
  Rational block_sum(0), block_prod(1);
  for (std::size_t i = 1; i <= hyper; ++i) {
    const std::size_t k = head + i;
    const Digit d = x.at(k);
    block_sum += cut(k, d) * block_prod;
    block_prod *= weight(k, d);
  }
  const Rational tail_sum = block_sum / (Rational(1) - block_prod);
  return acc + prod * tail_sum;
}

}  // namespace qstar::detail

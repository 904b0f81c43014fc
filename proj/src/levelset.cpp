#include "qstar/levelset.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "qstar/classify.hpp"

namespace qstar {

namespace {

struct Frame {
  DigitWord w;
  Rational x_left, x_len;
  Rational f_base, f_mu;  // f at the left endpoint; increment over the cylinder
};

void descend(const FunctionSpec& f, const Rational& y0, std::size_t depth, const Frame& at,
             std::vector<SolutionRegion>& out) {
  if (at.w.size() == depth) {
    const Rational fl = at.f_base, fr = at.f_base + at.f_mu;
    const bool left_hit = fl == y0, right_hit = fr == y0;
    Witness wit = Witness::RangeOnly;
    if (left_hit || right_hit) {
      wit = Witness::EndpointHit;
    } else if ((fl < y0) != (fr < y0)) {
      wit = Witness::SignChange;
    }
    const bool mu_neg = at.f_mu.sign() < 0;
    out.push_back({at.w, at.x_left, at.x_left + at.x_len, mu_neg ? fr : fl, mu_neg ? fl : fr,
                   wit});
    return;
  }
  const std::size_t rank = at.w.size() + 1;
  const MatrixColumn& col = f.x_schedule.column_at(rank);
  const GColumn gcol = g_column_at(f.eps, rank);
  for (Digit d = 0; d <= 2; ++d) {
    Frame child{at.w + d, at.x_left + col.beta(d) * at.x_len, at.x_len * col.q(d),
                at.f_base + gcol.delta(d) * at.f_mu, at.f_mu * gcol.g(d)};
    if (child.f_mu.is_zero()) {
      // plateau: constant value, whole cylinder is either in or out
      if (child.f_base == y0) {
        out.push_back({child.w, child.x_left, child.x_left + child.x_len, y0, y0,
                       Witness::EndpointHit});
      }
      continue;
    }
    const bool pos = child.f_mu.sign() > 0;
    const Rational lo = pos ? child.f_base : child.f_base + child.f_mu;
    const Rational hi = pos ? child.f_base + child.f_mu : child.f_base;
    if (y0 < lo || y0 > hi) continue;
    descend(f, y0, depth, child, out);
  }
}

}  // namespace

std::vector<SolutionRegion> preimage_regions(const FunctionSpec& f, const Rational& y0,
                                             std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("depth must be positive");
  std::vector<SolutionRegion> out;
  if (y0.sign() < 0 || y0 > Rational(1)) return out;
  descend(f, y0, depth, {DigitWord{}, Rational(0), Rational(1), Rational(0), Rational(1)}, out);
  return out;
}

DigitWord invert_monotone(const FunctionSpec& f, const Rational& y0, std::size_t depth) {
  if (classify_regime(f.eps).tag != RegimeTag::StrictlyIncreasing) {
    throw std::domain_error("invert_monotone requires the strictly increasing regime");
  }
  if (y0.sign() < 0 || y0 > Rational(1)) throw std::domain_error("y0 outside [0,1]");
  DigitWord w;
  Rational f_base(0), f_mu(1);
  for (std::size_t rank = 1; rank <= depth; ++rank) {
    const GColumn gcol = g_column_at(f.eps, rank);
    Digit d = 2;
    while (d > 0 && f_base + gcol.delta(d) * f_mu > y0) --d;
    f_base += gcol.delta(d) * f_mu;
    f_mu *= gcol.g(d);
    w.push_back(d);
  }
  return w;
}

std::size_t root_count_lower_bound(const FunctionSpec& f, const Rational& y0,
                                   std::size_t depth) {
  const auto regions = preimage_regions(f, y0, depth);
  std::size_t crossings = 0;
  std::set<Rational> hit_points;
  for (const SolutionRegion& r : regions) {
    switch (r.witness) {
      case Witness::SignChange:
        ++crossings;
        break;
      case Witness::EndpointHit: {
        const Rational mu = increment(f, r.word);
        if (mu.is_zero()) {  // plateau: both endpoints are solutions
          hit_points.insert(r.x_left);
          hit_points.insert(r.x_right);
        } else {
          const Rational fl = mu.sign() > 0 ? r.f_lo : r.f_hi;
          if (fl == y0) hit_points.insert(r.x_left);
          const Rational fr = mu.sign() > 0 ? r.f_hi : r.f_lo;
          if (fr == y0) hit_points.insert(r.x_right);
        }
        break;
      }
      case Witness::RangeOnly:
        break;
    }
  }
  return crossings + hit_points.size();
}

}  // namespace qstar

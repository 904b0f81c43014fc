#include "qstar/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qstar/classify.hpp"
#include "qstar/fractal.hpp"
#include "qstar/levelset.hpp"
#include "qstar/repsys.hpp"

namespace qstar {

namespace {

struct Reporter {
  std::ostream& os;
  bool all_ok = true;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    os << (ok ? "ok   " : "FAIL ") << name;
    if (!detail.empty()) os << ": " << detail;
    os << "\n";
    all_ok = all_ok && ok;
  }
};

std::vector<DigitWord> words_of_rank(std::size_t rank) {
  std::vector<DigitWord> out{DigitWord{}};
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<DigitWord> next;
    next.reserve(out.size() * 3);
    for (const DigitWord& w : out) {
      for (Digit d = 0; d <= 2; ++d) next.push_back(w + d);
    }
    out = std::move(next);
  }
  return out;
}

DigitSeq with_tail(const DigitWord& w, Digit t) {
  return DigitSeq(w, DigitWord(std::vector<Digit>{t}));
}

DigitWord random_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> digit(0, 2);
  DigitWord w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Digit>(digit(rng)));
  return w;
}

DigitSeq random_seq(std::mt19937_64& rng, std::size_t max_prefix, std::size_t max_tail) {
  std::uniform_int_distribution<std::size_t> plen(0, max_prefix), tlen(1, max_tail);
  return DigitSeq(random_word(rng, plen(rng)), random_word(rng, tlen(rng)));
}

Rational pow_rational(const Rational& b, std::size_t e) {
  Rational r(1);
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// f at the two endpoints of w, oriented (left, right)
std::pair<Rational, Rational> endpoint_values(const FunctionSpec& f, const DigitWord& w) {
  const CylinderRange r = range_on_cylinder(f, w);
  const Rational mu = increment(f, w);
  if (mu.sign() < 0) return {r.hi, r.lo};
  return {r.lo, r.hi};
}

}  // namespace

bool run_verification(const FunctionSpec& f, const VerifyOptions& opt, std::ostream& os) {
  Reporter rep{os};
  std::mt19937_64 rng(opt.seed);
  const ColumnSchedule& s = f.x_schedule;
  const std::size_t rank = std::max<std::size_t>(opt.rank, 1);

  // --- representation system ---
  {
    bool partition = true, nesting = true;
    for (std::size_t r = 0; r <= std::min<std::size_t>(rank, 5) && partition && nesting; ++r) {
      for (const DigitWord& w : words_of_rank(r)) {
        const CylinderInterval parent = cylinder_interval(s, w);
        Rational child_total(0);
        for (Digit d = 0; d <= 2; ++d) {
          const CylinderInterval child = cylinder_interval(s, w + d);
          child_total += child.length;
          nesting = nesting && child.left >= parent.left &&
                    child.left + child.length <= parent.left + parent.length;
        }
        partition = partition && child_total == parent.length;
      }
    }
    rep.check("cylinder lengths split exactly across children", partition);
    rep.check("child cylinders nest inside their parent", nesting);
  }
  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < 50 && ok; ++i) {
      const DigitSeq x = canonicalize(random_seq(rng, 6, 4));
      const std::size_t span = x.prefix().size() + s.preamble().size() +
                               2 * std::lcm(x.tail().size(), s.period().size()) + 8;
      const EncodeResult enc = encode(s, value_of(s, x), span);
      ok = enc.exact && *enc.full == x;
      if (!ok) bad = x.str();
    }
    rep.check("encode(value_of(x)) recovers x", ok, bad);
  }
  {
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      std::uniform_int_distribution<std::size_t> len(0, rank);
      std::uniform_int_distribution<int> digit(0, 2);
      const DigitSeq x = with_tail(random_word(rng, len(rng)) + static_cast<Digit>(digit(rng)),
                                   0);
      const auto dual = dual_representation(x);
      if (!dual) continue;
      ok = value_of(s, x) == value_of(s, *dual) && dual_consistency(f, x).is_zero();
    }
    rep.check("dual representations agree in value and under f", ok);
  }
  {
    bool ok = true;
    Rational prev(-1);
    for (const DigitWord& w : words_of_rank(std::min<std::size_t>(rank, 7))) {
      const Rational left = cylinder_interval(s, w).left;
      if (left <= prev) {
        ok = false;
        break;
      }
      prev = left;
    }
    rep.check("value_of is monotone in digit order", ok);
  }

  // --- the function family ---
  {
    bool increments = true, telescoping = true;
    for (std::size_t r = 0; r <= std::min<std::size_t>(rank, 6); ++r) {
      for (const DigitWord& w : words_of_rank(r)) {
        const Rational mu = increment(f, w);
        increments = increments &&
                     eval_exact(f, with_tail(w, 2)) - eval_exact(f, with_tail(w, 0)) == mu;
        Rational children(0);
        for (Digit d = 0; d <= 2; ++d) children += increment(f, w + d);
        telescoping = telescoping && children == mu;
      }
      if (!increments || !telescoping) break;
    }
    rep.check("increment equals the endpoint difference", increments);
    rep.check("increment telescopes over the three children", telescoping);
  }
  {
    bool ok = eval_exact(f, with_tail(DigitWord{}, 0)).is_zero() &&
              eval_exact(f, with_tail(DigitWord{}, 2)) == Rational(1);
    for (int i = 0; i < 100 && ok; ++i) {
      const Rational y = eval_exact(f, random_seq(rng, 8, 5));
      ok = y.sign() >= 0 && y <= Rational(1);
    }
    rep.check("f(0) = 0, f(1) = 1, values stay inside [0,1]", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      std::uniform_int_distribution<std::size_t> len(0, rank);
      const DigitWord w = random_word(rng, len(rng));
      const CylinderRange range = range_on_cylinder(f, w);
      Rational lo(2), hi(-1);
      const std::size_t extra = 4;
      for (const DigitWord& suffix : words_of_rank(extra)) {
        DigitWord u = w;
        for (std::size_t j = 0; j < suffix.size(); ++j) u.push_back(suffix[j]);
        const auto [fl, fr] = endpoint_values(f, u);
        lo = std::min({lo, fl, fr});
        hi = std::max({hi, fl, fr});
      }
      ok = lo == range.lo && hi == range.hi;
    }
    rep.check("cylinder extrema sit at the endpoints", ok);
  }
  {
    bool ok = true;
    const Rational bound_base(2, 3);
    for (int i = 0; i < 200 && ok; ++i) {
      std::uniform_int_distribution<std::size_t> mlen(1, 20);
      const std::size_t m = mlen(rng);
      const DigitWord shared = random_word(rng, m);
      const DigitSeq x(shared, random_word(rng, 3) + static_cast<Digit>(0));
      const DigitSeq y(shared, random_word(rng, 3) + static_cast<Digit>(2));
      ok = (eval_exact(f, x) - eval_exact(f, y)).abs() <= pow_rational(bound_base, m);
    }
    rep.check("shared m-digit prefixes bound |Δf| by (2/3)^m", ok);
  }
  {
    bool ok = true;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double tol = 1e-10;
    for (int i = 0; i < 100 && ok; ++i) {
      const double x = unit(rng);
      const double approx = eval_approx(f, x, tol);
      const EncodeResult enc = encode(s, Rational::from_double(x), 400);
      if (!enc.exact) continue;  // no finite expansion found at this budget
      const Rational err = (Rational::from_double(approx) - eval_exact(f, *enc.full)).abs();
      ok = err <= Rational::from_double(1.01e-10);
    }
    rep.check("eval_approx tracks eval_exact within tol", ok);
  }

  // --- classification ---
  const Regime regime = classify_regime(f.eps);
  {
    bool ok = true;
    const Rational half(1, 2);
    for (const DigitWord& w : words_of_rank(std::min<std::size_t>(rank, 6))) {
      bool zero_factor = false;
      for (std::size_t j = 0; j < w.size(); ++j) {
        zero_factor = zero_factor || (w[j] == 1 && f.eps.epsilon_at(j + 1) == half);
      }
      if (increment(f, w).is_zero() != zero_factor) {
        ok = false;
        break;
      }
    }
    rep.check("zero increments are exactly the epsilon-1/2 digit-1 factors", ok);
  }
  {
    const std::size_t max_rank = std::min<std::size_t>(rank + 6, 12);
    bool monotone = true, minimal = true, constant_on = true;
    Rational prev(0);
    for (std::size_t d = 1; d <= max_rank; ++d) {
      const Rational m = plateau_measure(f, d);
      monotone = monotone && m >= prev && m <= Rational(1);
      prev = m;
    }
    for (const DigitWord& w : plateau_cylinders(f, max_rank)) {
      DigitWord parent = w;
      parent.pop_back();
      minimal = minimal && increment(f, w).is_zero() && !increment(f, parent).is_zero();
      const auto [fl, fr] = endpoint_values(f, w);
      constant_on = constant_on && fl == fr;
    }
    rep.check("plateau measure grows monotonically within [0,1]", monotone);
    rep.check("plateau cylinders are minimal and f is constant on them", minimal && constant_on);
    if (regime.tag == RegimeTag::CantorSingular) {
      Rational expect(1), survive(1);
      for (std::size_t k = 1; k <= max_rank; ++k) {
        survive *= Rational(1) - s.column_at(k).q1();
      }
      expect -= survive;
      rep.check("plateau measure matches 1 - prod(1 - q1k)",
                plateau_measure(f, max_rank) == expect);
    }
  }
  if (regime.tag == RegimeTag::StrictlyIncreasing) {
    bool ok = true;
    Rational prev(-1);
    for (const DigitWord& w : words_of_rank(std::min<std::size_t>(rank, 6))) {
      const Rational y = endpoint_values(f, w).first;
      if (y <= prev) {
        ok = false;
        break;
      }
      prev = y;
    }
    ok = ok && prev < Rational(1);
    rep.check("f is strictly increasing across cylinder endpoints", ok);
  }
  if (regime.tag == RegimeTag::NowhereMonotone) {
    bool ok = true;
    for (std::size_t r = 0; r < std::min<std::size_t>(rank, 6) && ok; ++r) {
      for (const DigitWord& w : words_of_rank(r)) {
        const auto signs = subcylinder_signs(f, w);
        const bool pos = std::any_of(signs.begin(), signs.end(),
                                     [](Sign x) { return x == Sign::Positive; });
        const bool neg = std::any_of(signs.begin(), signs.end(),
                                     [](Sign x) { return x == Sign::Negative; });
        if (!(pos && neg)) {
          ok = false;
          break;
        }
      }
    }
    rep.check("every cylinder has children of both increment signs", ok);
  }

  // --- level sets ---
  {
    const std::size_t depth = std::min<std::size_t>(rank, 7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Rational> targets{Rational(0), Rational(1), Rational(1, 2)};
    targets.push_back(Rational(static_cast<long>(unit(rng) * 1000), 1000));
    bool sound = true, witnesses = true, sorted = true, refines = true;
    for (const Rational& y0 : targets) {
      const auto regions = preimage_regions(f, y0, depth);
      // words carry everything needed to re-derive coverage independently
      auto covered = [&](const DigitWord& w) {
        for (const SolutionRegion& reg : regions) {
          if (reg.word.size() > w.size()) continue;
          bool prefix = true;
          for (std::size_t j = 0; j < reg.word.size() && prefix; ++j) {
            prefix = reg.word[j] == w[j];
          }
          if (prefix) return true;
        }
        return false;
      };
      for (const DigitWord& w : words_of_rank(depth)) {
        const CylinderRange range = range_on_cylinder(f, w);
        const bool reachable = range.lo <= y0 && y0 <= range.hi;
        if (reachable != covered(w)) {
          sound = false;
          break;
        }
      }
      Rational prev_left(-1);
      for (const SolutionRegion& reg : regions) {
        sorted = sorted && reg.x_left > prev_left;
        prev_left = reg.x_left;
        witnesses = witnesses && reg.f_lo <= y0 && y0 <= reg.f_hi;
        const auto [fl, fr] = endpoint_values(f, reg.word);
        if (reg.witness == Witness::SignChange) {
          witnesses = witnesses && ((fl < y0 && y0 < fr) || (fr < y0 && y0 < fl));
        } else if (reg.witness == Witness::EndpointHit) {
          witnesses = witnesses && (fl == y0 || fr == y0);
        }
      }
      const auto coarse = preimage_regions(f, y0, depth > 1 ? depth - 1 : 1);
      for (const SolutionRegion& reg : regions) {
        bool inside = false;
        for (const SolutionRegion& big : coarse) {
          if (big.x_left <= reg.x_left && reg.x_right <= big.x_right) {
            inside = true;
            break;
          }
        }
        refines = refines && inside;
      }
    }
    rep.check("preimage regions cover exactly the reachable cylinders", sound);
    rep.check("region witnesses are certified by endpoint values", witnesses && sorted);
    rep.check("deeper preimage regions refine shallower ones", refines);
  }
  if (regime.tag == RegimeTag::StrictlyIncreasing) {
    bool ok = true;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 20 && ok; ++i) {
      const Rational y0(static_cast<long>(unit(rng) * 10000), 10000);
      const DigitWord w = invert_monotone(f, y0, 20);
      const CylinderRange range = range_on_cylinder(f, w);
      ok = range.lo <= y0 && y0 <= range.hi &&
           range.hi - range.lo <= pow_rational(Rational(2, 3), 20);
    }
    rep.check("monotone inversion encloses targets tightly", ok);
  }

  // --- fractal structure ---
  {
    const std::string name = "graph is exactly self-affine under the three maps";
    try {
      const auto maps = ifs_maps(f);
      const Rational resid =
          self_affine_residual(f, graph_sample(f, std::min<std::size_t>(rank, 4)));
      const bool tiles = maps[0].bx.is_zero() && maps[1].bx == maps[0].qx &&
                         maps[2].bx == maps[0].qx + maps[1].qx &&
                         maps[2].bx + maps[2].qx == Rational(1);
      rep.check(name, resid.is_zero() && tiles);
    } catch (const NonConstantSchedule&) {
      rep.check(name, true, "skipped: schedules not constant");
    } catch (const DegenerateMap&) {
      rep.check(name, true, "skipped: a g-weight vanishes");
    } catch (const std::domain_error& e) {
      rep.check(name, false, e.what());
    }
  }
  {
    const std::size_t r = std::min<std::size_t>(rank, 5);
    const GraphSample sample = graph_sample(f, r);
    std::size_t expect = 1;
    for (std::size_t i = 0; i < r; ++i) expect *= 3;
    bool ok = sample.points.size() == expect + 1;
    Rational prev(-1);
    for (const auto& [x, y] : sample.points) {
      ok = ok && x > prev;
      prev = x;
    }
    std::uniform_int_distribution<std::size_t> pick(0, sample.points.size() - 1);
    for (int i = 0; i < 50 && ok; ++i) {
      const auto& [x, y] = sample.points[pick(rng)];
      const EncodeResult enc = encode(s, x, 300);
      if (!enc.exact) continue;
      ok = eval_exact(f, *enc.full) == y;
    }
    rep.check("graph samples lie exactly on the graph", ok);
  }

  return rep.all_ok;
}

}  // namespace qstar

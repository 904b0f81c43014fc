#include "qstar/fractal.hpp"

#include <algorithm>
#include <cmath>

namespace qstar {

namespace {

constexpr std::size_t kMaxSampleRank = 13;  // 3^13 + 1 points ≈ 1.6M
constexpr std::size_t kMaxScale = 4096;

}  // namespace

std::array<AffineMap2D, 3> ifs_maps(const FunctionSpec& f) {
  if (!f.x_schedule.is_constant() || !f.eps.is_constant()) {
    throw NonConstantSchedule("ifs_maps requires constant matrix and epsilon schedules");
  }
  const MatrixColumn& col = f.x_schedule.period()[0];
  const GColumn gcol = GColumn::from_epsilon(f.eps.period()[0]);
  if (gcol.g1.is_zero()) {
    throw DegenerateMap("ifs_maps requires all g_i nonzero (epsilon = 1/2 collapses g1)");
  }
  std::array<AffineMap2D, 3> maps;
  for (Digit d = 0; d <= 2; ++d) {
    maps[d] = {col.q(d), col.beta(d), gcol.g(d), gcol.delta(d)};
  }
  return maps;
}

GraphSample graph_sample(const FunctionSpec& f, std::size_t rank) {
  if (rank == 0) throw std::invalid_argument("rank must be positive");
  if (rank > kMaxSampleRank) throw std::invalid_argument("rank exceeds the point budget");

  std::size_t total = 1;
  for (std::size_t i = 0; i < rank; ++i) total *= 3;
  GraphSample sample;
  sample.points.reserve(total + 1);

  // depth-first in digit order = increasing x
  auto rec = [&](auto&& self, const Rational& x, const Rational& x_len, const Rational& y,
                 const Rational& mu, std::size_t depth) -> void {
    if (depth == rank) {
      sample.points.emplace_back(x, y);
      return;
    }
    const std::size_t k = depth + 1;
    const MatrixColumn& col = f.x_schedule.column_at(k);
    const GColumn gcol = g_column_at(f.eps, k);
    for (Digit d = 0; d <= 2; ++d) {
      self(self, x + col.beta(d) * x_len, x_len * col.q(d), y + gcol.delta(d) * mu,
           mu * gcol.g(d), k);
    }
  };
  rec(rec, Rational(0), Rational(1), Rational(0), Rational(1), 0);
  sample.points.emplace_back(Rational(1), Rational(1));
  return sample;
}

Rational self_affine_residual(const FunctionSpec& f, const GraphSample& sample) {
  const auto maps = ifs_maps(f);
  Rational worst(0);
  for (const auto& [x, y] : sample.points) {
    for (const AffineMap2D& m : maps) {
      const Rational mapped_x = m.qx * x + m.bx;
      const Rational mapped_y = m.gy * y + m.dy;
      const EncodeResult enc = encode(f.x_schedule, mapped_x, 512);
      if (!enc.exact) throw std::domain_error("mapped sample point has no finite expansion");
      const Rational err = (eval_exact(f, *enc.full) - mapped_y).abs();
      if (err > worst) worst = err;
    }
  }
  return worst;
}

namespace {

// Accumulates occupied (column, cell) pairs for one grid size as per-column
// y-index intervals, merged at the end.
class CellCounter {
 public:
  explicit CellCounter(std::size_t n) : n_(n), columns_(n) {}

  void mark(long col_lo, long col_hi, const Rational& y_lo, const Rational& y_hi) {
    const long c_lo = clamp(floor_times(y_lo));
    const long c_hi = clamp(floor_times(y_hi));
    for (long c = std::max<long>(col_lo, 0); c <= std::min<long>(col_hi, long(n_) - 1); ++c) {
      columns_[static_cast<std::size_t>(c)].emplace_back(c_lo, c_hi);
    }
  }

  long floor_times(const Rational& v) const {
    return (v * Rational(static_cast<long>(n_))).floor_long();
  }

  long clamp(long c) const { return std::clamp<long>(c, 0, long(n_) - 1); }

  std::size_t count() {
    std::size_t total = 0;
    for (auto& spans : columns_) {
      std::sort(spans.begin(), spans.end());
      long covered_to = -1;
      for (const auto& [lo, hi] : spans) {
        const long from = std::max(lo, covered_to + 1);
        if (hi >= from) {
          total += static_cast<std::size_t>(hi - from + 1);
          covered_to = hi;
        }
      }
    }
    return total;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::pair<long, long>>> columns_;
};

void cover(const FunctionSpec& f, std::size_t n, CellCounter& cells, const Rational& x_left,
           const Rational& x_len, const Rational& f_base, const Rational& f_mu,
           std::size_t depth) {
  if (x_len * Rational(static_cast<long>(n)) <= Rational(1)) {
    const Rational x_right = x_left + x_len;
    const long col_lo = cells.clamp(cells.floor_times(x_left));
    // the right endpoint belongs to the next cylinder except at x = 1
    const Rational scaled = x_right * Rational(static_cast<long>(n));
    long col_hi = cells.clamp(scaled.is_integer() ? scaled.floor_long() - 1 : scaled.floor_long());
    const bool pos = f_mu.sign() >= 0;
    cells.mark(col_lo, col_hi, pos ? f_base : f_base + f_mu, pos ? f_base + f_mu : f_base);
    return;
  }
  const std::size_t k = depth + 1;
  const MatrixColumn& col = f.x_schedule.column_at(k);
  const GColumn gcol = g_column_at(f.eps, k);
  for (Digit d = 0; d <= 2; ++d) {
    cover(f, n, cells, x_left + col.beta(d) * x_len, x_len * col.q(d),
          f_base + gcol.delta(d) * f_mu, f_mu * gcol.g(d), k);
  }
}

}  // namespace

BoxDimension box_dimension(const FunctionSpec& f, const std::vector<std::size_t>& scales) {
  if (scales.empty()) throw std::invalid_argument("scales must be nonempty");
  for (std::size_t n : scales) {
    if (n < 2 || n > kMaxScale) throw std::invalid_argument("each scale must be in [2, 4096]");
  }

  BoxDimension result;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t n : scales) {
    CellCounter cells(n);
    cover(f, n, cells, Rational(0), Rational(1), Rational(0), Rational(1), 0);
    const std::size_t count = cells.count();
    result.per_scale.emplace_back(n, count);
    const double lx = std::log(static_cast<double>(n));
    const double ly = std::log(static_cast<double>(count));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(scales.size());
  const double denom = m * sxx - sx * sx;
  result.estimate = denom == 0 ? 0.0 : (m * sxy - sx * sy) / denom;
  return result;
}

}  // namespace qstar

#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "qstar/fractal.hpp"
#include "specs.hpp"

using namespace qstar;
using fixtures::cantor_spec;
using fixtures::identity_spec;
using fixtures::nonuniform_spec;
using fixtures::nowhere_spec;
using fixtures::uniform_spec;

TEST_CASE("ifs maps reproduce the cylinder geometry") {
  const auto id = ifs_maps(identity_spec());
  for (int i = 0; i < 3; ++i) {
    CHECK(id[static_cast<std::size_t>(i)].qx == Rational(1, 3));
    CHECK(id[static_cast<std::size_t>(i)].bx == Rational(i, 3));
    CHECK(id[static_cast<std::size_t>(i)].gy == Rational(1, 3));
    CHECK(id[static_cast<std::size_t>(i)].dy == Rational(i, 3));
  }
  const auto flip = ifs_maps(nowhere_spec());
  CHECK(flip[1].qx == Rational(1, 3));
  CHECK(flip[1].bx == Rational(1, 3));
  CHECK(flip[1].gy == Rational(-1, 3));
  CHECK(flip[1].dy == Rational(2, 3));
  CHECK(flip[0].gy == Rational(2, 3));
  CHECK(flip[2].dy == Rational(1, 3));
}

TEST_CASE("ifs maps refuse degenerate or varying specs") {
  CHECK_THROWS_AS(ifs_maps(cantor_spec()), DegenerateMap);
  CHECK_THROWS_AS(ifs_maps(nonuniform_spec()), NonConstantSchedule);
  const FunctionSpec preamble{
      ColumnSchedule::uniform_thirds(),
      EpsilonSchedule({Rational(0)}, {Rational(1)})};
  CHECK_THROWS_AS(ifs_maps(preamble), NonConstantSchedule);
  // DegenerateMap and NonConstantSchedule are both domain errors
  CHECK_THROWS_AS(ifs_maps(cantor_spec()), std::domain_error);
}

TEST_CASE("graph samples sit exactly on the graph") {
  const auto s = graph_sample(cantor_spec(), 2);
  REQUIRE(s.points.size() == 10);
  CHECK(s.exact);
  CHECK(s.points.front().first == Rational(0));
  CHECK(s.points.front().second == Rational(0));
  CHECK(s.points.back().first == Rational(1));
  CHECK(s.points.back().second == Rational(1));
  // the plateau endpoints are in the sample
  bool third = false, two_thirds = false;
  for (const auto& [x, y] : s.points) {
    if (x == Rational(1, 3)) {
      third = true;
      CHECK(y == Rational(1, 2));
    }
    if (x == Rational(2, 3)) {
      two_thirds = true;
      CHECK(y == Rational(1, 2));
    }
  }
  CHECK(third);
  CHECK(two_thirds);
  // strictly increasing abscissae, values re-derivable from the spec
  const FunctionSpec c = cantor_spec();
  for (std::size_t i = 0; i + 1 < s.points.size(); ++i) {
    CHECK(s.points[i].first < s.points[i + 1].first);
  }
  for (const auto& [x, y] : s.points) {
    const auto enc = encode(c.x_schedule, x, 64);
    REQUIRE(enc.exact);
    CHECK(eval_exact(c, *enc.full) == y);
  }
  CHECK(graph_sample(identity_spec(), 1).points.size() == 4);
  CHECK_THROWS_AS(graph_sample(identity_spec(), 0), std::invalid_argument);
  CHECK_THROWS_AS(graph_sample(identity_spec(), 40), std::invalid_argument);
}

TEST_CASE("the graph is exactly self-affine in every constant regime") {
  for (const auto& eps : {Rational(0), Rational(1, 4), Rational(3, 4), Rational(1)}) {
    const FunctionSpec f = uniform_spec(eps);
    const auto sample = graph_sample(f, 3);
    CHECK(self_affine_residual(f, sample) == Rational(0));
  }
}

TEST_CASE("box counts grow with the scale and give slope near 1 for a line") {
  const auto dim = box_dimension(identity_spec(), {27, 81, 243});
  REQUIRE(dim.per_scale.size() == 3);
  CHECK(dim.per_scale[0].first == 27);
  // a diagonal line crosses 2n-1 cells of an n-grid when columns are half-open
  CHECK(dim.per_scale[0].second == 53);
  CHECK(dim.per_scale[1].second == 161);
  CHECK(dim.per_scale[2].second == 485);
  CHECK(dim.estimate > 0.95);
  CHECK(dim.estimate < 1.05);
}

TEST_CASE("box counts for the Cantor and flipped graphs") {
  const auto cantor = box_dimension(cantor_spec(), {27, 81, 243});
  CHECK(cantor.estimate > 0.9);
  CHECK(cantor.estimate < 1.1);
  for (std::size_t i = 1; i < cantor.per_scale.size(); ++i) {
    CHECK(cantor.per_scale[i - 1].second < cantor.per_scale[i].second);
  }
  // the flipped graph oscillates: strictly more cells than the identity line
  const auto wild = box_dimension(nowhere_spec(), {27, 81});
  CHECK(wild.per_scale[0].second > 53);
  CHECK(wild.estimate > 1.0);
}

TEST_CASE("box dimension validates its scales") {
  CHECK_THROWS_AS(box_dimension(identity_spec(), {}), std::invalid_argument);
  CHECK_THROWS_AS(box_dimension(identity_spec(), {1}), std::invalid_argument);
  CHECK_THROWS_AS(box_dimension(identity_spec(), {27, 1 << 20}), std::invalid_argument);
}

#include <cmath>
#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "nicholson/degree.hpp"
#include "nicholson/errors.hpp"

using namespace nicholson;
using nicholson::testing::eq16;
using doctest::Approx;

namespace {

// Closed-form averaged map of the example: harmonic means drop out, leaving
// the offsets.
State g16_closed(double alpha, double beta, const State& x) {
  return {5.0 * x[0] / (4.0 + x[0]) - alpha * x[0] * std::exp(-x[0]) - 2.0 * x[1] / (2.0 + x[1]),
          4.0 * x[1] / (4.0 + x[1]) - beta * x[1] * std::exp(-x[1]) - 2.0 * x[0] / (3.0 + x[0])};
}

}  // namespace

TEST_CASE("averaged map matches the closed-form means") {
  const AveragedMap g(eq16(2.0, 2.0), 256);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> xs(0.01, 50.0);
  for (int i = 0; i < 100; ++i) {
    const State x{xs(rng), xs(rng)};
    const State got = eval_g(g, x);
    const State want = g16_closed(2.0, 2.0, x);
    CHECK(got[0] == Approx(want[0]).epsilon(1e-9));
    CHECK(got[1] == Approx(want[1]).epsilon(1e-9));
  }
}

TEST_CASE("averaged map pole guard") {
  const AveragedMap g(eq16(2.0, 2.0), 256);
  CHECK_THROWS_AS(g(State{-4.0, 1.0}), PoleError);
  CHECK_THROWS_AS(g(State{1.0, -2.0}), PoleError);
}

TEST_CASE("miranda certificate on the example rectangle") {
  const NicholsonSystem sys = eq16(2.0, 2.0);
  const BoundsReport bounds = build_rectangle(sys);
  const AveragedMap g(sys, 256);

  const MirandaCertificate cert = miranda_check(g, bounds.rect, 256);
  CHECK(cert.pattern_holds);
  CHECK(cert.min_abs_value_on_edges > 0.0);
  CHECK(cert.samples_per_edge == 256);
}

TEST_CASE("miranda rejects a pattern-free rectangle") {
  // x - (2,2) is strictly negative on [0,1]^2, so the right/top edges fail.
  const PlanarMap shift = [](const State& x) { return State{x[0] - 2.0, x[1] - 2.0}; };
  const MirandaCertificate cert = miranda_check(shift, Rectangle{0.0, 1.0}, 64);
  CHECK_FALSE(cert.pattern_holds);
}

TEST_CASE("degree of analytic maps") {
  const Rectangle box{-1.0, 1.0};
  const PlanarMap identity = [](const State& x) { return x; };
  const PlanarMap flip = [](const State& x) { return State{x[0], -x[1]}; };
  const PlanarMap square = [](const State& x) {
    return State{x[0] * x[0] - x[1] * x[1], 2.0 * x[0] * x[1]};
  };
  const PlanarMap shifted = [](const State& x) { return State{x[0] - 3.0, x[1] - 3.0}; };

  CHECK(brouwer_degree(identity, box) == 1);
  CHECK(brouwer_degree(flip, box) == -1);
  CHECK(brouwer_degree(square, box) == 2);       // complex z^2, double winding
  CHECK(brouwer_degree(shifted, box) == 0);      // origin outside the image
  CHECK(brouwer_degree(identity, box, 64) == 1);  // coarse start, adaptive refinement
}

TEST_CASE("zero on the boundary is rejected") {
  const PlanarMap identity = [](const State& x) { return x; };
  // The corner (0,0) of [0,1]^2 maps to the exact origin.
  CHECK_THROWS_AS(brouwer_degree(identity, Rectangle{0.0, 1.0}), ZeroOnBoundary);
}

TEST_CASE("degree +1 on the example rectangle") {
  const NicholsonSystem sys = eq16(2.0, 2.0);
  const BoundsReport bounds = build_rectangle(sys);
  const AveragedMap g(sys, 256);
  CHECK(brouwer_degree(g, bounds.rect) == 1);
}

TEST_CASE("find_root_g on an affine map") {
  const PlanarMap affine = [](const State& x) { return State{x[0] - 0.3, x[1] - 0.7}; };
  const State root = find_root_g(affine, Rectangle{0.0, 1.0});
  CHECK(root[0] == Approx(0.3).epsilon(1e-9));
  CHECK(root[1] == Approx(0.7).epsilon(1e-9));
}

TEST_CASE("find_root_g locates the interior zero of the example") {
  const NicholsonSystem sys = eq16(2.0, 2.0);
  const BoundsReport bounds = build_rectangle(sys);
  const AveragedMap g(sys, 256);

  const State root = find_root_g(g, bounds.rect);
  const State val = g(root);
  CHECK(std::abs(val[0]) < 1e-10);
  CHECK(std::abs(val[1]) < 1e-10);

  // Frozen from a damped-Newton oracle on the closed-form map.
  CHECK(root[0] == Approx(1.83732956).epsilon(1e-6));
  CHECK(root[1] == Approx(1.95497384).epsilon(1e-6));

  CHECK(root[0] > bounds.rect.lo);
  CHECK(root[0] < bounds.rect.hi);
  CHECK(root[1] > bounds.rect.lo);
  CHECK(root[1] < bounds.rect.hi);
}

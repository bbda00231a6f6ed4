#include <doctest.h>

#include <cmath>

#include "lmcf/blowup.hpp"
#include "lmcf/errors.hpp"
#include "lmcf/flow.hpp"
#include "lmcf/solitons.hpp"
#include "support.hpp"

using namespace lmcf;
using namespace lmcf::testing;

namespace {

FlowTrajectory collapsing_circle() {
  FlowConfig c;
  c.n = 2;
  c.boundary = Boundary::closed;
  c.spacing = 0.02;
  c.r_floor = 0.02;
  return evolve(circle(1.0, 314), c);
}

PlanarCurve cone_pair(int n, int k, double theta_bar, double r0, double r1, Eigen::Index count) {
  // c_{k-1} in from infinity to the origin region, then c_k back out
  const double lo = (theta_bar + (k - 1) * pi) / n, hi = (theta_bar + k * pi) / n;
  ComplexVector<double> nodes(2 * count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const double r = r1 + (r0 - r1) * double(i) / double(count - 1);
    nodes[i] = std::polar(r, lo);
    nodes[2 * count - 1 - i] = std::polar(r, hi);
  }
  return PlanarCurve(nodes, Topology::open_arc);
}

PlanarCurve sampled_special_lagrangian(int n, double B, int k, double theta_bar, Eigen::Index count, double frac) {
  const double edge = frac * pi / (2 * n);
  return sample_special_lagrangian_nodes(SolitonSpec::special_lagrangian(n, B, k, theta_bar), -edge, edge, count);
}

}  // namespace

TEST_CASE("type I rescalings of a collapsing circle are circles of radius sqrt(2n|s|)") {
  const auto traj = collapsing_circle();
  REQUIRE(traj.termination == Termination::singularity_trigger);
  const double T = 0.25;  // 1 / (2n) for the unit circle
  for (double s : {-1.0, -0.5}) {
    const double top = type1_max_scale(traj, T, s);
    CHECK(top > 5);
    const std::vector<double> scales{2.5, 3.5, 5, 0.9 * top};
    const auto curves = type1_rescale(traj, T, scales, s);
    REQUIRE(curves.size() == scales.size());
    for (const auto& c : curves) {
      const double R = std::sqrt(2 * 2 * -s);
      for (Eigen::Index i = 0; i < c.size(); ++i) CHECK(std::abs(std::abs(c[i]) - R) < 1e-2 * R);
    }
  }
}

TEST_CASE("type I rescaling needs a singular trajectory and admissible times") {
  const auto traj = collapsing_circle();
  CHECK_THROWS_AS(type1_rescale(traj, 0.25, {1.0}), DomainError);   // t = -0.75 precedes the start
  CHECK_THROWS_AS(type1_rescale(traj, 0.25, {-2.0}), DomainError);
  CHECK_THROWS_AS(type1_rescale(traj, 0.25, {3.0}, 0.5), DomainError);
  CHECK_THROWS_AS(type1_rescale(traj, 0.25, {10 * type1_max_scale(traj, 0.25)}), DomainError);
  CHECK_THROWS_AS(type1_max_scale(traj, traj.snapshots.back().t), DomainError);

  // a static special Lagrangian never becomes singular
  FlowConfig c;
  c.n = 2;
  c.boundary = Boundary::pinned_asymptotes;
  c.spacing = 0.05;
  c.t_max = 0.05;
  const auto still = evolve(remesh(sampled_special_lagrangian(2, 1, 0, 0, 200, 0.8), c), c);
  REQUIRE(still.termination == Termination::t_max_reached);
  CHECK_THROWS_AS(type1_rescale(still, 1.0, {2.0}), DomainError);
  CHECK_THROWS_AS(type1_max_scale(still, 1.0), DomainError);
  CHECK_THROWS_AS(type2_rescale(still, 1.0), DomainError);
}

TEST_CASE("type I rescalings of a shrinker reproduce its profile") {
  const auto sh = find_shrinker(1, 3, 2);
  FlowConfig c;
  c.n = 2;
  c.boundary = Boundary::closed;
  c.spacing = 0.01;  // at 0.02 the lobes are under-resolved and T drifts by 2%
  c.r_floor = 0.05;
  const auto init = remesh(sh.curve, c);
  const auto traj = evolve(init, c);
  REQUIRE(traj.termination == Termination::singularity_trigger);
  // the shrinker for lambda = 1 satisfies kappa = <x, N>, so it moves as sqrt(1 - 2t) gamma_0
  const double T = 0.5;
  const double top = type1_max_scale(traj, T);
  for (double lambda : {1.5, 2.0, 3.0, 0.8 * top}) {
    const auto curves = type1_rescale(traj, T, {lambda});
    const auto& g = curves.front();
    // at s = -1 the rescaled curve is sqrt(2) gamma_0 = the shrinker with lambda = 1/2
    CHECK(soliton_residual(g, 0.5, 2) < 5e-2);
    CHECK(hausdorff_distance(g, init.transformed(std::sqrt(2.0)), Disk<double>{{0, 0}, 10}) < 1e-2);
  }
}

TEST_CASE("exact cone pairs fit with zero residual") {
  const auto pair = cone_pair(2, 1, 0, 1, 20, 200);
  const auto fit = fit_cone_pair(pair, Annulus<double>{5, 10}, 2);
  CHECK(fit.theta_bar == doctest::Approx(0).epsilon(1e-12));
  CHECK(fit.residual < 1e-12);
  CHECK(fit.gap == doctest::Approx(pi / 2));
  // k labels the upper ray; together with theta_bar it fixes both
  CHECK(branch_label(fit.theta_bar, fit.k, 2) == doctest::Approx(branch_label(0, 1, 2)));

  for (int n : {2, 3})
    for (int k = 0; k < 2 * n; ++k)
      for (double tb : {0.0, 0.3, 1.1}) {
        const auto f = fit_cone_pair(cone_pair(n, k, tb, 1, 20, 100), Annulus<double>{5, 10}, n);
        CHECK(f.residual < 1e-10);
        CHECK(angle_distance(branch_label(f.theta_bar, f.k, n), branch_label(tb, k, n), 2 * pi * n) < 1e-10);
      }
}

TEST_CASE("a special Lagrangian far out looks like its asymptotic cones") {
  const auto l = sample_special_lagrangian(SolitonSpec::special_lagrangian(2, 1, 0, 0), -pi / 4 * (1 - 1e-6),
                                           pi / 4 * (1 - 1e-6), 0.05, 200);
  const auto fit = fit_cone_pair(l, Annulus<double>{50, 100}, 2);
  CHECK(angle_distance(fit.theta_bar, 0.0, pi) < 1e-3);
  // distance to the asymptote is 1/(2r) + O(r^-5), worst at the inner radius
  CHECK(fit.residual == doctest::Approx(1 / (2 * 50.0)).epsilon(1e-6));
  // asymptotes of l_{1,0,0} are c_{-1,0} and c_{0,0}
  CHECK(angle_distance(branch_label(fit.theta_bar, fit.k, 2), branch_label(0, 0, 2), 4 * pi) < 1e-3);
}

TEST_CASE("cone fits rotate with the curve") {
  const auto pair = cone_pair(3, 2, 0.4, 1, 20, 150);
  const auto base = fit_cone_pair(pair, Annulus<double>{5, 10}, 3);
  for (double phi : {0.1, 0.7, 2.0}) {
    const auto f = fit_cone_pair(pair.transformed(std::polar(1.0, phi)), Annulus<double>{5, 10}, 3);
    CHECK(angle_distance(f.theta_bar, base.theta_bar + 3 * phi, pi) < 1e-10);
    CHECK(f.residual < 1e-10);
  }
}

TEST_CASE("cone fits need two clusters") {
  CHECK_THROWS_AS(fit_cone_pair(ray(0.3, 1, 20, 100), Annulus<double>{5, 10}, 2), NoFitError);
  CHECK_THROWS_AS(fit_cone_pair(circle(1.0, 100), Annulus<double>{5, 10}, 2), NoFitError);
  CHECK_THROWS_AS(fit_cone_pair(cone_pair(2, 1, 0, 1, 20, 50), Annulus<double>{10, 5}, 2), DomainError);
}

TEST_CASE("special Lagrangian self-fit") {
  for (double B : {0.5, 1.0, 2.0, 5.0}) {
    const auto l = sampled_special_lagrangian(2, B, 0, 0, 4001, 0.9);
    const auto fit = fit_special_lagrangian(l, 2);
    CHECK(std::abs(fit.B - B) <= 1e-6 * B);
    CHECK(std::abs(fit.translation) < 1e-6);
    if (B == 2.0) CHECK(fit.residual <= 1e-8);
    CHECK(angle_distance(branch_label(fit.theta_bar, fit.k, 2), branch_label(0, 0, 2), 4 * pi) < 1e-6);
  }
}

TEST_CASE("special Lagrangian fits rotate with the curve") {
  const int n = 3;
  const auto l = sampled_special_lagrangian(n, 1.5, 1, 0.2, 3001, 0.9);
  const auto base = fit_special_lagrangian(l, n);
  CHECK(angle_distance(base.theta_bar, 0.2, pi) < 1e-6);
  for (double phi : {0.05, 0.5, 1.3}) {
    const auto f = fit_special_lagrangian(l.transformed(std::polar(1.0, phi)), n);
    CHECK(f.B == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(angle_distance(f.theta_bar, base.theta_bar + n * phi, pi) < 1e-6);
  }
}

TEST_CASE("special Lagrangian fit rejects curves that are not one") {
  CHECK_THROWS_AS(fit_special_lagrangian(circle(1.0, 400), 2), NoFitError);
  CHECK_THROWS_AS(fit_special_lagrangian(circle(5.0, 8), 2), NoFitError);  // one node near the peak
  CHECK_THROWS_AS(fit_special_lagrangian(sampled_special_lagrangian(2, 1, 0, 0, 200, 0.8), 1), DomainError);
}

TEST_CASE("blowdown consistency") {
  BlowupReport one, two;
  one.theta_bar = 0.3;
  one.k = 1;
  two.mode = BlowupMode::type_two;
  two.theta_bar = 0.31;
  two.k = 1;
  CHECK(blowdown_consistency(one, two, 2));
  two.theta_bar = 0.5;
  CHECK_FALSE(blowdown_consistency(one, two, 2));
  two.theta_bar = 0.3;
  two.k = 2;
  CHECK_FALSE(blowdown_consistency(one, two, 2));
  two.k = 0;
  CHECK_FALSE(blowdown_consistency(one, two, 2));
  // the label is periodic in k with period 2n
  two.k = 1 + 4;
  CHECK(blowdown_consistency(one, two, 2));
}

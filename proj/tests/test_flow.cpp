#include <doctest.h>

#include <cmath>

#include "lmcf/errors.hpp"
#include "lmcf/flow.hpp"
#include "lmcf/solitons.hpp"
#include "support.hpp"

using namespace lmcf;
using namespace lmcf::testing;

namespace {

FlowConfig closed_config(int n, double spacing) {
  FlowConfig c;
  c.n = n;
  c.boundary = Boundary::closed;
  c.spacing = spacing;
  return c;
}

PlanarCurve unit_special_lagrangian(int n, Eigen::Index count, double frac = 0.8) {
  const double edge = frac * pi / (2 * n);
  return sample_special_lagrangian_nodes(SolitonSpec::special_lagrangian(n, 1, 0, 0), -edge, edge, count);
}

double interior_max(const RealVector<double>& v) { return v.segment(1, v.size() - 2).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("config validation") {
  FlowConfig c;
  c.cfl = 0.9;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = FlowConfig{};
  c.t_max = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  CHECK_THROWS_AS(boundary_from_string("sticky"), DomainError);
  for (auto b : {Boundary::closed, Boundary::pinned_asymptotes, Boundary::free_ends})
    CHECK(boundary_from_string(to_string(b)) == b);
}

TEST_CASE("normal velocity") {
  const auto c = circle(1.0, 64);
  const auto v = normal_velocity(c, 2);
  CHECK((v.array() - 2).abs().maxCoeff() < 1e-12);
  CHECK(normal_velocity(ray(0.3, 1, 4, 20), 2).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(normal_velocity(ray(0.3, 1, 4, 20), 5).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(normal_velocity(circle(1.0, 64), 2, 1.5), SingularRadiusError);

  // special Lagrangians are static: second order at interior nodes
  double prev = 0;
  for (Eigen::Index count : {200, 400, 800}) {
    const double m = interior_max(normal_velocity(unit_special_lagrangian(3, count), 3));
    if (prev > 0) CHECK(prev / m == doctest::Approx(4).epsilon(0.15));
    prev = m;
  }
}

TEST_CASE("one step on a circle follows the radius ODE") {
  for (int n : {1, 2, 3}) {
    FlowConfig c = closed_config(n, 0.05);
    c.redistribution_period = 0;
    const auto s0 = make_state(circle(1.0, 128), n);
    const double dt = 1e-4;
    const auto s1 = step(s0, c, dt);
    const double r = std::sqrt(1 - 2 * n * dt);
    for (Eigen::Index i = 0; i < s1.curve.size(); ++i) CHECK(std::abs(std::abs(s1.curve[i]) - r) < 1e-10);  // local error O(dt^3)
    CHECK(s1.t == doctest::Approx(dt));
  }
}

TEST_CASE("one step barely moves a special Lagrangian") {
  FlowConfig c;
  c.n = 2;
  c.boundary = Boundary::pinned_asymptotes;
  c.spacing = 0.01;
  c.redistribution_period = 0;
  double prev = 0;
  for (Eigen::Index count : {200, 400, 800}) {
    const auto l = unit_special_lagrangian(2, count);
    const auto s1 = step(make_state(l, 2), c, 1e-5);
    const double moved = (s1.curve.nodes() - l.nodes()).cwiseAbs().maxCoeff() / 1e-5;
    if (prev > 0) CHECK(moved < prev / 3);
    prev = moved;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("grim reaper translates down at unit speed") {
  FlowConfig c;
  c.n = 1;
  c.boundary = Boundary::free_ends;
  c.r_floor = 0;
  c.spacing = 0.005;
  c.redistribution_period = 0;
  const auto g = grim_reaper(-1.2, 1.2, 0.005);
  const double dt = 1e-6;
  const auto s1 = step(make_state(g, 1), c, dt);
  // interior nodes move along the normal; compare heights at the same abscissa
  for (Eigen::Index i = g.size() / 4; i < 3 * g.size() / 4; ++i) {
    const double x = s1.curve[i].real();
    const double drop = std::log(std::cos(x)) - s1.curve[i].imag();
    CHECK(drop / dt == doctest::Approx(1).epsilon(1e-3));
  }
}

TEST_CASE("circle extinction") {
  FlowConfig c = closed_config(2, 0.02);
  c.r_floor = 0.02;
  const auto traj = evolve(circle(1.0, 314), c);
  CHECK(traj.termination == Termination::singularity_trigger);
  const auto rep = classify_singularity_rate(traj);
  CHECK(rep.T_est == doctest::Approx(0.25).epsilon(0.01));
  CHECK(std::abs(rep.location) < 0.05);
  CHECK(rep.sigma == doctest::Approx(0.5).epsilon(0.02));
  CHECK(rep.type_evidence == "I");
  const auto mon = monitor_estimates(traj);
  CHECK(mon.finite);
  // |H|^2 / (1 + 1/r^2) = n^2 / (r^2 + 1) on a circle of radius r
  CHECK(mon.h2_initial == doctest::Approx(2).epsilon(1e-9));
  // remeshing leaves the polygon off the circle by O(h^4), which shows at the last few radii
  CHECK(mon.h2_sup <= 4 * (1 + 1e-3));
  CHECK(mon.h2_sup == doctest::Approx(4 / (1 + std::pow(traj.summary.back().min_r, 2))).epsilon(1e-3));
}

TEST_CASE("curve shortening of a circle has rate one half") {
  FlowConfig c = closed_config(1, 0.02);
  c.r_floor = 0.02;
  const auto traj = evolve(circle(1.0, 314), c);
  const auto rep = classify_singularity_rate(traj);
  CHECK(rep.T_est == doctest::Approx(0.5).epsilon(0.01));
  CHECK(rep.sigma == doctest::Approx(0.5).epsilon(0.02));
  CHECK(rep.type_evidence == "I");
}

TEST_CASE("runs that reach t_max are inconclusive") {
  FlowConfig c = closed_config(2, 0.05);
  c.t_max = 0.05;
  const auto traj = evolve(circle(1.0, 126), c);
  CHECK(traj.termination == Termination::t_max_reached);
  CHECK(traj.snapshots.back().t == doctest::Approx(0.05));
  const auto rep = classify_singularity_rate(traj);
  CHECK_FALSE(rep.triggered);
  CHECK(rep.type_evidence == "inconclusive");
}

TEST_CASE("lagrangian angle obeys the maximum principle on closed runs") {
  // theta is a genuine function only when it returns to itself around the loop: a figure eight away from
  // the origin has turning number 0 and winds 0 times, so its lift closes up
  FlowConfig c = closed_config(2, 0.01);
  c.t_max = 0.02;
  const auto eight = remesh(
      sample<double>([](double t) { return std::complex<double>(4 + std::cos(t), std::sin(t) * std::cos(t)); }, 0.0,
                     2 * pi, 600, Topology::closed_loop),
      c);
  const auto th0 = lagrangian_angle(eight, 2).theta;
  CHECK(std::abs(th0[0] + wrap_angle(th0[0] - th0[th0.size() - 1]) - th0[th0.size() - 1]) < pi);
  const auto traj = evolve(eight, c);
  CHECK(traj.termination == Termination::t_max_reached);
  REQUIRE(traj.summary.size() > 10);
  for (std::size_t i = 1; i < traj.summary.size(); ++i) {
    CHECK(traj.summary[i].theta_max <= traj.summary[i - 1].theta_max + 1e-6);
    CHECK(traj.summary[i].theta_min >= traj.summary[i - 1].theta_min - 1e-6);
  }
  CHECK(traj.summary.back().theta_max < traj.summary.front().theta_max);
  CHECK(traj.summary.back().theta_min > traj.summary.front().theta_min);
}

TEST_CASE("special Lagrangian initial data is stationary") {
  FlowConfig c;
  c.n = 2;
  c.boundary = Boundary::pinned_asymptotes;
  c.spacing = 0.05;
  c.relative_spacing = 0.05;
  c.t_max = 1;
  const auto spec = SolitonSpec::special_lagrangian(2, 1, 0, 0);
  const auto init = remesh(sample_special_lagrangian(spec, -pi / 4 * (1 - 1e-9), pi / 4 * (1 - 1e-9), 0.05, 30), c);
  const auto traj = evolve(init, c);
  CHECK(traj.termination == Termination::t_max_reached);
  CHECK(hausdorff_distance(traj.snapshots.back().curve, init, Disk<double>{{0, 0}, 10}) < 1e-3);
  const auto mon = monitor_estimates(traj);
  CHECK(mon.h2_sup <= mon.h2_initial * (1 + 1e-3) + 1e-12);
}

TEST_CASE("Neves barrier") {
  const double beta = 0.6 * pi;
  const auto apex = neves_point(beta, beta / 2);
  CHECK(std::abs(apex) == doctest::Approx(1));
  CHECK(std::arg(apex) == doctest::Approx(beta / 2));
  const auto c = neves_initial(beta, 2, 400, 100);
  const auto w = wedge_hull(c);
  CHECK(w.span == doctest::Approx(beta).epsilon(1e-3));
  CHECK(w.bisector == doctest::Approx(beta / 2).epsilon(1e-9));
  // reflection across arg = beta / 2
  const auto mirror = std::polar(1.0, beta);
  for (Eigen::Index i = 0; i < c.size(); ++i) CHECK(std::abs(mirror * std::conj(c[i]) - c[c.size() - 1 - i]) < 1e-9);
  CHECK_THROWS_AS(neves_initial(pi, 2, 400), DomainError);
}

TEST_CASE("Neves barrier develops a singularity at the origin") {
  FlowConfig c;
  c.n = 2;
  c.boundary = Boundary::pinned_asymptotes;
  c.spacing = 2;
  c.relative_spacing = 0.1;
  c.collar_radius = 80;
  c.r_floor = 5e-3;
  c.t_max = 10;
  const auto traj = evolve(remesh(neves_initial(0.6 * pi, 2, 400, 100), c), c);
  CHECK(traj.termination == Termination::singularity_trigger);
  const auto rep = classify_singularity_rate(traj);
  CHECK(rep.location_confirmed);
  CHECK(std::abs(rep.location) < 1e-2);
  CHECK(std::isfinite(rep.T_est));
  const auto mon = monitor_estimates(traj);
  CHECK(mon.finite);
  CHECK_FALSE(mon.violation);
}

TEST_CASE("avoidance") {
  FlowConfig c = closed_config(2, 0.02);
  c.r_floor = 0.05;
  const auto inner = evolve(circle(1.0, 314), c);
  const auto outer = evolve(circle(2.0, 628), c);
  const auto a = avoidance_check(inner, outer);
  CHECK(a.disjoint);
  // the gap sqrt(4 - 4t) - sqrt(1 - 4t) is smallest at t = 0
  CHECK(a.min_separation == doctest::Approx(1).epsilon(1e-3));
  const auto same = avoidance_check(inner, inner);
  CHECK_FALSE(same.disjoint);
  CHECK(same.min_separation == 0);
}

#include <doctest.h>

#include <cmath>

#include "lmcf/errors.hpp"
#include "lmcf/solitons.hpp"
#include "support.hpp"

using namespace lmcf;
using namespace lmcf::testing;

TEST_CASE("spec invariants") {
  CHECK_THROWS_AS(SolitonSpec::special_lagrangian(2, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(SolitonSpec::special_lagrangian(2, -1, 0, 0), DomainError);
  CHECK(shrinker_admissible(1, 3, 2));
  CHECK_FALSE(shrinker_admissible(1, 2, 2));  // 1/2 = 1/sqrt(4), boundary
  CHECK_FALSE(shrinker_admissible(1, 4, 2));  // 1/4 = 1/(2n), boundary
  CHECK_FALSE(shrinker_admissible(2, 6, 2));  // not coprime
  CHECK_THROWS_AS(find_expander(pi / 2, 2), DomainError);
  CHECK_THROWS_AS(find_expander(0, 2), DomainError);
}

TEST_CASE("cones are rays at (theta_bar + k pi) / n") {
  const auto seg = sample_cone(SolitonSpec::cone(3, 0, 0), 1, 2, 0.1);
  CHECK(seg[0] == std::complex<double>(1, 0));
  CHECK(std::abs(seg[seg.size() - 1] - 2.0) < 1e-14);
  CHECK(seg.nodes().imag().cwiseAbs().maxCoeff() == 0);
  CHECK(cone_argument(SolitonSpec::cone(2, 1, 0)) == doctest::Approx(pi / 2));
  CHECK(cone_argument(SolitonSpec::cone(2, 0, pi / 2)) == doctest::Approx(pi / 4));
  const auto r = sample_cone(SolitonSpec::cone(2, 1, 0), 1, 3, 0.5);
  for (Eigen::Index i = 0; i < r.size(); ++i) CHECK(std::arg(r[i]) == doctest::Approx(pi / 2));
}

TEST_CASE("special Lagrangian closed form") {
  const auto spec = SolitonSpec::special_lagrangian(2, 1, 0, 0);
  const auto p0 = special_lagrangian_point(spec, 0);
  CHECK(p0.real() == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(p0.imag() == doctest::Approx(-std::sqrt(2.0) / 2));
  const auto p1 = special_lagrangian_point(spec, pi / 6);
  CHECK(std::abs(p1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(std::arg(p1) == doctest::Approx(-pi / 12));
  // apex distance is B, attained at alpha = 0
  for (int n : {2, 3, 5})
    for (int k : {0, 1})
      for (double tb : {0.0, 0.4}) {
        const auto s = SolitonSpec::special_lagrangian(n, 1.7, k, tb);
        CHECK(std::abs(special_lagrangian_point(s, 0)) == doctest::Approx(1.7));
        const auto c = sample_special_lagrangian_nodes(s, -0.7 * pi / (2 * n), 0.7 * pi / (2 * n), 301);
        CHECK(c.min_radius() >= 1.7 - 1e-12);
        CHECK(c.min_radius() == doctest::Approx(1.7).epsilon(1e-4));
      }
}

TEST_CASE("asymptotes of special Lagrangians") {
  auto [a, b] = asymptotes_of(SolitonSpec::special_lagrangian(2, 1, 0, 0));
  CHECK(angle_distance(cone_argument(a), -pi / 2, 2 * pi) < 1e-12);
  CHECK(angle_distance(cone_argument(b), 0.0, 2 * pi) < 1e-12);
  std::tie(a, b) = asymptotes_of(SolitonSpec::special_lagrangian(3, 2, 1, 0));
  CHECK(angle_distance(cone_argument(a), 0.0, 2 * pi) < 1e-12);
  CHECK(angle_distance(cone_argument(b), pi / 3, 2 * pi) < 1e-12);
  for (int n : {2, 3, 4})
    for (int k = 0; k < 2 * n; ++k) {
      const auto [lo, hi] = asymptotes_of(SolitonSpec::special_lagrangian(n, 1, k, 0.3));
      CHECK(angle_distance(cone_argument(hi) - cone_argument(lo), pi / n, 2 * pi) < 1e-12);
    }
}

TEST_CASE("shooting field") {
  // stationary circle sqrt(n / lambda) has curvature 1/R
  for (int n : {1, 2, 3}) {
    const double R = std::sqrt(n / 1.0);
    const ShootingState s{{R, 0}, {0, 1}, 0, 0};
    const auto d = soliton_rhs(s, 1, n);
    CHECK(std::abs(d.direction - std::complex<double>(-1 / R, 0)) < 1e-14);
  }
  // rays through the origin are straight
  const ShootingState ray_state{std::polar(2.0, 0.4), std::polar(1.0, 0.4), 0, 0};
  CHECK(std::abs(soliton_rhs(ray_state, 1, 2).direction) < 1e-15);
  CHECK_THROWS_AS(soliton_rhs(ShootingState{{1e-14, 0}, {0, 1}, 0, 0}, 1, 2), SingularRadiusError);
}

TEST_CASE("integrating from the stationary circle stays on it") {
  const double R = std::sqrt(2.0);
  const auto trace = integrate_soliton({{R, 0}, {0, 1}, 0, 0}, 1, 2, 2 * pi * R);
  CHECK(std::abs(trace.final_state.position - std::complex<double>(R, 0)) < 1e-8);
  for (Eigen::Index i = 0; i < trace.curve.size(); ++i) CHECK(std::abs(std::abs(trace.curve[i]) - R) < 1e-8);
}

TEST_CASE("static shooting reproduces the closed form") {
  // lambda = 0 from apsis B, perpendicular: r^n cos(n arg) = B^n, i.e. r'/r = tan(n alpha)
  for (int n : {2, 3}) {
    const double B = 1.3;
    const auto trace = integrate_soliton({{B, 0}, {0, 1}, 0, 0}, 0, n, 3.0);
    for (Eigen::Index i = 0; i < trace.curve.size(); ++i) {
      const double r = std::abs(trace.curve[i]), a = std::arg(trace.curve[i]);
      CHECK(std::pow(r, n) * std::cos(n * a) == doctest::Approx(std::pow(B, n)).epsilon(1e-7));
    }
    // against the sampled closed form, same branch (theta_bar = 0, k = 0 rotated so the apex is on the axis)
    auto spec = SolitonSpec::special_lagrangian(n, B, 0, 0);
    const auto rot = std::polar(1.0, -special_lagrangian_rotation(spec));
    const double top = std::arg(trace.curve[trace.curve.size() - 1]);
    const auto closed = sample_special_lagrangian_nodes(spec, 0, top, 8000).transformed(rot);
    CHECK(hausdorff_distance(trace.curve, closed, Disk<double>{{0, 0}, 2.5}) < 1e-6);
  }
}

TEST_CASE("period angle across the shrinker window") {
  for (int n : {1, 2, 3}) {
    const double edge = shrinker_window_edge(n);
    CHECK(edge == doctest::Approx(std::sqrt(double(n))));
    CHECK(period_angle(0.999 * edge, 1, n) == doctest::Approx(2 * pi / std::sqrt(2.0 * n)).epsilon(1e-4));
    // monotone in the apsis radius, approaching pi/n at the inner end
    double prev = 0;
    for (double f : {1e-4, 1e-3, 0.01, 0.05, 0.2, 0.5, 0.8, 0.95, 0.99}) {
      const double a = period_angle(f * edge, 1, n);
      CHECK(a > pi / n);
      CHECK(a < 2 * pi / std::sqrt(2.0 * n));
      CHECK(a > prev);
      prev = a;
    }
    CHECK(period_angle(1e-4 * edge, 1, n) - pi / n < 0.2);
  }
}

TEST_CASE("Anciaux shrinkers from the figure") {
  const auto s13 = find_shrinker(1, 3, 2);
  CHECK(s13.curve.closed());
  CHECK(s13.closure_gap < 1e-6);
  CHECK(winding_number(s13.curve) == 1);
  CHECK(curvature_maxima_count(s13.curve).count == 3);
  CHECK(soliton_residual(s13.curve, 1, 2) < 1e-2);

  const auto s613 = find_shrinker(6, 13, 2);
  CHECK(s613.closure_gap < 1e-6);
  CHECK(std::abs(winding_number(s613.curve)) == 6);
  CHECK(curvature_maxima_count(s613.curve).count == 13);

  const auto s513 = find_shrinker(5, 13, 2);
  CHECK(s513.closure_gap < 1e-6);
  CHECK(std::abs(winding_number(s513.curve)) == 5);
  CHECK(curvature_maxima_count(s513.curve).count == 13);

  CHECK_THROWS_AS(find_shrinker(1, 2, 2), DomainError);
}

TEST_CASE("Abresch-Langer curves for n = 1") {
  const auto al = find_shrinker(2, 3, 1);
  CHECK(al.closure_gap < 1e-6);
  CHECK(std::abs(winding_number(al.curve)) == 2);
  CHECK(curvature_maxima_count(al.curve).count == 3);
}

TEST_CASE("expanders re-measure their span") {
  for (double f : {0.2, 0.4, 0.5, 0.7}) {
    const double alpha = f * pi / 2;
    const auto e = find_expander(alpha, 2);
    CHECK(std::abs(e.measured_span - alpha) < 1e-6);
    CHECK_FALSE(e.curve.closed());
  }
  // span shrinks as the apsis grows, and opens to pi/n as it closes in
  double prev = pi / 2;
  for (double d : {0.01, 0.1, 0.3, 1.0, 2.0}) {
    const double s = expander_span(d, 2);
    CHECK(s < prev);
    prev = s;
  }
  CHECK(pi / 2 - expander_span(0.01, 2) < 1e-2);
  CHECK(find_expander(0.95 * pi / 2, 2).spec.r_apsis < find_expander(0.5 * pi / 2, 2).spec.r_apsis);
}

TEST_CASE("grim reaper") {
  CHECK(grim_reaper_point(0) == std::complex<double>(0, 0));
  const auto g = grim_reaper(-1.4, 1.4, 0.01);
  const Eigen::Index N = g.size();
  for (Eigen::Index i = 0; i < N; ++i) {
    CHECK(std::abs(g[i].imag() - std::log(std::cos(g[i].real()))) < 1e-14);
    CHECK(std::abs(g[i] - std::conj(-g[N - 1 - i]) ) < 1e-14);  // mirror across the imaginary axis
  }
}

TEST_CASE("soliton residual") {
  const auto spec = SolitonSpec::special_lagrangian(3, 1, 0, 0);
  double prev = 0;
  for (Eigen::Index count : {200, 400, 800}) {
    const double r = soliton_residual(sample_special_lagrangian_nodes(spec, -0.7 * pi / 6, 0.7 * pi / 6, count), 0, 3);
    if (prev > 0) CHECK(prev / r == doctest::Approx(4).epsilon(0.15));
    prev = r;
  }
  CHECK(soliton_residual(circle(std::sqrt(2.0), 300), 1, 2) < 1e-12);
  CHECK(soliton_residual(circle(1.0, 300), 0, 2) == doctest::Approx(2).epsilon(1e-3));
}

TEST_CASE("translators are obstructed beyond n = 1") {
  CHECK(translator_sweep(1).min_obstruction < 1e-12);
  CHECK(translator_sweep(2).min_obstruction > 1e-3);
}

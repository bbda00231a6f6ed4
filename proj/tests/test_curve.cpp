#include <doctest.h>

#include <cmath>

#include "lmcf/errors.hpp"
#include "lmcf/solitons.hpp"
#include "support.hpp"

using namespace lmcf;
using namespace lmcf::testing;

TEST_CASE("curve rejects degenerate node lists") {
  CHECK_THROWS_AS(circle(1.0, 5), MeshError);
  ComplexVector<double> nodes = circle(1.0, 12).nodes();
  nodes[3] = nodes[2];
  CHECK_THROWS_AS(PlanarCurve(nodes, Topology::closed_loop), MeshError);
  nodes = circle(1.0, 12).nodes();
  nodes[4] = 0;
  CHECK_THROWS_AS(PlanarCurve(nodes, Topology::closed_loop), MeshError);
  nodes = circle(1.0, 12).nodes();
  nodes[11] = nodes[0];
  CHECK_THROWS_AS(PlanarCurve(nodes, Topology::closed_loop), MeshError);
}

TEST_CASE("frame on the unit circle points inward") {
  const auto c = circle(1.0, 200);
  const auto fr = frame(c);
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    CHECK(std::abs(fr.tangent[i] - I * c[i]) < 1e-12);
    CHECK(std::abs(fr.normal[i] + c[i]) < 1e-12);
  }
}

TEST_CASE("frame on the positive real axis") {
  const auto r = ray(0, 1, 3, 20);
  const auto fr = frame(r);
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    CHECK(std::abs(fr.tangent[i] - 1.0) < 1e-14);
    CHECK(std::abs(fr.normal[i] - I) < 1e-14);
  }
}

TEST_CASE("tangent and normal are orthonormal on arbitrary curves") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto c = random_loop(seed, 300);
    const auto fr = frame(c);
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      CHECK(std::abs(std::real(std::conj(fr.tangent[i]) * fr.normal[i])) < 1e-14);
      CHECK(std::abs(std::abs(fr.tangent[i]) - 1) < 1e-14);
    }
  }
}

TEST_CASE("curvature and radial part on circles and rays") {
  for (double R : {1.0, 2.0}) {
    const auto d = curvature_and_radial(circle(R, 400));
    CHECK((d.kappa.array() - 1 / R).abs().maxCoeff() < 1e-11);  // stencil round-off ~ eps / h^2
    CHECK((d.radial.array() + R).abs().maxCoeff() < 1e-12);
    // clockwise flips both signs
    const auto e = curvature_and_radial(circle(R, 400).reversed());
    CHECK((e.kappa.array() + 1 / R).abs().maxCoeff() < 1e-11);  // stencil round-off ~ eps / h^2
    CHECK((e.radial.array() - R).abs().maxCoeff() < 1e-12);
  }
  const auto d = curvature_and_radial(ray(0, 0.5, 4, 30));
  CHECK(d.kappa.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(d.radial.cwiseAbs().maxCoeff() < 1e-12);
  const auto loop = random_loop(9, 200);
  const auto dl = curvature_and_radial(loop);
  CHECK(((dl.radial.cwiseAbs() - dl.r).array() <= 1e-14).all());
}

TEST_CASE("curvature is exact on circles and second order on an ellipse") {
  CHECK((curvature_and_radial(circle(1.0, 9)).kappa.array() - 1).abs().maxCoeff() < 1e-14);
  double prev = 0;
  for (Eigen::Index count : {100, 200, 400}) {
    const auto e = sample<double>([](double t) { return std::complex<double>(2 * std::cos(t), std::sin(t)); }, 0.0,
                                  2 * pi, count, Topology::closed_loop);
    const auto d = curvature_and_radial(e);
    double err = 0;
    for (Eigen::Index i = 0; i < count; ++i) {
      const double t = 2 * pi * i / count;
      const double exact = 2 / std::pow(4 * std::sin(t) * std::sin(t) + std::cos(t) * std::cos(t), 1.5);
      err = std::max(err, std::abs(d.kappa[i] - exact));
    }
    if (prev > 0) CHECK(prev / err == doctest::Approx(4).epsilon(0.1));
    prev = err;
  }
}

TEST_CASE("lagrangian angle of rays is n times their argument") {
  for (int n : {1, 2, 3, 4})
    for (double phi : {0.0, 0.3, 1.2, -2.0}) {
      const auto th = lagrangian_angle(ray(phi, 1, 5, 12), n).theta;
      for (Eigen::Index i = 0; i < th.size(); ++i) CHECK(angle_distance(th[i], n * phi, pi) < 1e-12);
    }
}

TEST_CASE("lagrangian angle on the unit circle, n = 2") {
  const auto c = circle(1.0, 360);
  const auto th = lagrangian_angle(c, 2).theta;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double s = 2 * pi * i / 360.0;
    CHECK(th[i] == doctest::Approx(pi / 2 + 2 * s).epsilon(1e-12));
  }
}

TEST_CASE("lagrangian angle is constant on the unit special Lagrangian") {
  for (int n : {2, 3, 4}) {
    const auto spec = SolitonSpec::special_lagrangian(n, 1, 0, 0);
    const double edge = 0.9 * pi / (2 * n);
    const auto c = sample_special_lagrangian_nodes(spec, -edge, edge, 2000);
    const auto th = lagrangian_angle(c, n).theta;
    for (Eigen::Index i = 0; i < th.size(); ++i) CHECK(angle_distance(th[i], 0.0, pi) < 1e-4);
  }
}

TEST_CASE("lagrangian angle mod pi ignores reparametrization") {
  const auto c = random_loop(4, 240);
  const auto a = lagrangian_angle(c, 3).theta;
  const auto b = lagrangian_angle(c.reseamed(17), 3).theta;
  for (Eigen::Index i = 0; i < c.size(); ++i) CHECK(angle_distance(a[(i + 17) % 240], b[i], pi) < 1e-12);
  // reversing the orientation turns T by pi
  const auto r = lagrangian_angle(c.reversed(), 3).theta;
  for (Eigen::Index i = 0; i < c.size(); ++i) CHECK(angle_distance(a[239 - i], r[i], pi) < 1e-12);
}

TEST_CASE("adjacent lifted angles stay within pi/2 on resolved meshes") {
  const auto th = lagrangian_angle(random_loop(5, 400), 2).theta;
  for (Eigen::Index i = 1; i < th.size(); ++i) CHECK(std::abs(th[i] - th[i - 1]) < pi / 2);
}

TEST_CASE("angle derivative identity") {
  CHECK(angle_derivative_check(ray(0, 1, 2, 20), 2) < 1e-12);
  double prev = 0;
  for (Eigen::Index count : {100, 200, 400}) {
    const double res = angle_derivative_check(circle(1.0, count), 2);
    if (prev > 0) CHECK(res < prev / 3);
    prev = res;
  }
  const auto spec = SolitonSpec::special_lagrangian(3, 1, 0, 0);
  const double edge = 0.8 * pi / 6;
  prev = 0;
  for (Eigen::Index count : {200, 400, 800}) {
    // the one-sided end stencils keep this at first order
    const double res = angle_derivative_check(sample_special_lagrangian_nodes(spec, -edge, edge, count), 3);
    if (prev > 0) CHECK(res < prev * 0.75);
    prev = res;
  }
}

TEST_CASE("winding number") {
  CHECK(winding_number(circle(1.0, 50)) == 1);
  CHECK(winding_number(circle(1.0, 50).reversed()) == -1);
  const auto twice =
      sample<double>([](double t) { return std::polar(1.0, t); }, 0.0, 4 * pi, 101, Topology::closed_loop);
  CHECK(winding_number(twice) == 2);
  CHECK(winding_number(circle(0.5, 40, {2.0, 0.0})) == 0);
  CHECK_THROWS_AS(winding_number(ray(0, 1, 2, 10)), DomainError);
}

TEST_CASE("curvature maxima: circle sentinel and ellipse") {
  const auto m = curvature_maxima_count(circle(1.0, 200));
  CHECK(m.circle);
  const auto ellipse =
      sample<double>([](double t) { return std::complex<double>(2 * std::cos(t), std::sin(t)); }, 0.0, 2 * pi, 400,
                     Topology::closed_loop);
  const auto e = curvature_maxima_count(ellipse);
  CHECK_FALSE(e.circle);
  CHECK(e.count == 2);
}

TEST_CASE("redistribution") {
  const auto c = circle(1.0, 64);
  const auto r = redistribute(c, c.length() / 64);
  REQUIRE(r.size() == 64);
  CHECK((r.nodes() - c.nodes()).cwiseAbs().maxCoeff() < 1e-12);

  ComplexVector<double> graded(25);
  for (int i = 0; i < 25; ++i) graded[i] = std::pow(1.1, i);
  const PlanarCurve g(graded, Topology::open_arc);
  const auto u = redistribute(g, 0.1);
  CHECK(u[0] == g[0]);
  CHECK(u[u.size() - 1] == g[g.size() - 1]);
  CHECK(u.max_spacing() - u.min_spacing() < 1e-12);
  CHECK(u.nodes().imag().cwiseAbs().maxCoeff() < 1e-14);

  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    const auto loop = random_loop(seed, 150);
    const auto moved = redistribute(loop, 0.05);
    CHECK(std::abs(moved.length() / loop.length() - 1) < 1e-3);
  }
}

TEST_CASE("wedge hull") {
  const auto w = wedge_hull(ray(0.7, 1, 3, 10));
  CHECK(w.span == doctest::Approx(0).epsilon(1e-14));
  CHECK(w.bisector == doctest::Approx(0.7));
  const auto spec = SolitonSpec::special_lagrangian(2, 1, 0, 0);
  const auto l = sample_special_lagrangian_nodes(spec, -pi / 6, pi / 6, 400);
  const auto wl = wedge_hull(l);
  CHECK(wl.span == doctest::Approx(pi / 3).epsilon(1e-12));
  CHECK(wl.bisector == doctest::Approx(-pi / 4).epsilon(1e-12));
  CHECK(wedge_hull(circle(1.0, 30)).span == doctest::Approx(2 * pi));
}

TEST_CASE("hausdorff distance") {
  const auto c = random_loop(3, 100);
  const Annulus<double> everywhere{0.1, 10};
  CHECK(hausdorff_distance(c, c, everywhere) == 0);
  const auto a = segment({1, 0}, {1, 5}, 30), b = segment({1.25, 0}, {1.25, 5}, 17);
  CHECK(hausdorff_distance(a, b, Annulus<double>{1.5, 4}) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("special Lagrangian approaches its rays like B^n r^(1-n) / n") {
  // for B = 1, n = 2 the gap to the nearer ray is 1/(2r) to leading order
  const auto spec = SolitonSpec::special_lagrangian(2, 1, 0, 0);
  const auto l = sample_special_lagrangian(spec, -0.9999 * pi / 4, 0.9999 * pi / 4, 0.01, 200);
  const auto [lo, hi] = asymptotes_of(spec);
  for (double r : {10.0, 20.0, 40.0}) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 0; i < l.size(); ++i)
      if (l[i].imag() > 0 && std::abs(std::abs(l[i]) - r) < std::abs(std::abs(l[best]) - r)) best = i;
    const double to_lo = detail::point_segment_distance(l[best], {0, 0}, std::polar(300.0, cone_argument(lo)));
    const double to_hi = detail::point_segment_distance(l[best], {0, 0}, std::polar(300.0, cone_argument(hi)));
    CHECK(std::min(to_lo, to_hi) == doctest::Approx(1 / (2 * std::abs(l[best]))).epsilon(0.02));
  }
}

TEST_CASE("curve core is generic in the scalar type") {
  const auto c = circle<long double>(1.0L, 100);
  const auto d = curvature_and_radial(c);
  CHECK(std::abs(d.radial[0] + 1.0L) < 1e-16L);
  CHECK(winding_number(c) == 1);
  const auto f = circle<float>(2.0f, 64);
  CHECK(std::abs(curvature_and_radial(f).kappa[5] - 0.5f) < 1e-5f);
}

#pragma once

// Discrete differential geometry of immersed curves in the profile plane.
//
// Points are complex numbers; the unit normal is always N = iT, so a
// counterclockwise circle has signed curvature +1/R and <gamma, N> = -R.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include <Eigen/Core>

#include "lmcf/errors.hpp"

namespace lmcf {

enum class Topology { closed_loop, open_arc };

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Wraps an angle into (-pi, pi].
template <typename Scalar>
Scalar wrap_angle(Scalar a) {
  constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  a = std::fmod(a, two_pi);
  if (a <= -std::numbers::pi_v<Scalar>) a += two_pi;
  if (a > std::numbers::pi_v<Scalar>) a -= two_pi;
  return a;
}

/// Reduces an angle into [0, period).
template <typename Scalar>
Scalar reduce_angle(Scalar a, Scalar period) {
  Scalar r = std::fmod(a, period);
  if (r < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

/// Distance between two angles on the circle of the given period.
template <typename Scalar>
Scalar angle_distance(Scalar a, Scalar b, Scalar period) {
  Scalar d = reduce_angle(a - b, period);
  return std::min(d, period - d);
}

/// Discrete immersed curve in C \ {0}; the state of the reduced flow.
template <typename Scalar>
class BasicPlanarCurve {
 public:
  using Point = std::complex<Scalar>;
  using Nodes = ComplexVector<Scalar>;

  static constexpr Eigen::Index min_nodes = 8;

  BasicPlanarCurve(Nodes nodes, Topology topology) : nodes_(std::move(nodes)), topology_(topology) {
    validate();
  }

  const Nodes& nodes() const noexcept { return nodes_; }
  Topology topology() const noexcept { return topology_; }
  bool closed() const noexcept { return topology_ == Topology::closed_loop; }
  Eigen::Index size() const noexcept { return nodes_.size(); }
  const Point& operator[](Eigen::Index i) const { return nodes_[i]; }

  /// Number of segments: N for a loop, N - 1 for an arc.
  Eigen::Index segments() const noexcept { return closed() ? size() : size() - 1; }

  Eigen::Index next(Eigen::Index i) const noexcept { return i + 1 == size() ? 0 : i + 1; }
  Eigen::Index prev(Eigen::Index i) const noexcept { return i == 0 ? size() - 1 : i - 1; }

  Scalar segment_length(Eigen::Index i) const { return std::abs(nodes_[next(i)] - nodes_[i]); }

  Scalar min_spacing() const {
    Scalar h = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index i = 0; i < segments(); ++i) h = std::min(h, segment_length(i));
    return h;
  }

  Scalar max_spacing() const {
    Scalar h = 0;
    for (Eigen::Index i = 0; i < segments(); ++i) h = std::max(h, segment_length(i));
    return h;
  }

  Scalar length() const {
    Scalar total = 0;
    for (Eigen::Index i = 0; i < segments(); ++i) total += segment_length(i);
    return total;
  }

  Scalar min_radius() const { return nodes_.cwiseAbs().minCoeff(); }
  Scalar max_radius() const { return nodes_.cwiseAbs().maxCoeff(); }

  /// Multiplies every node by a complex factor (rotation and scaling about the origin).
  BasicPlanarCurve transformed(Point factor) const { return {Nodes(nodes_ * factor), topology_}; }
  BasicPlanarCurve translated(Point offset) const {
    return {Nodes(nodes_.array() + offset), topology_};
  }
  BasicPlanarCurve reversed() const { return {Nodes(nodes_.reverse()), topology_}; }

  /// Cyclic relabeling of a loop so that node k becomes node 0.
  BasicPlanarCurve reseamed(Eigen::Index k) const {
    if (!closed()) throw DomainError("reseamed: open arcs have no seam");
    Nodes out(size());
    for (Eigen::Index i = 0; i < size(); ++i) out[i] = nodes_[(i + k) % size()];
    return {std::move(out), topology_};
  }

 private:
  void validate() const {
    if (nodes_.size() < min_nodes)
      throw MeshError("curve needs at least " + std::to_string(min_nodes) + " nodes, got " +
                      std::to_string(nodes_.size()));
    for (Eigen::Index i = 0; i < nodes_.size(); ++i) {
      if (!std::isfinite(nodes_[i].real()) || !std::isfinite(nodes_[i].imag()))
        throw MeshError("non-finite node " + std::to_string(i));
      if (nodes_[i] == Point(0)) throw MeshError("node " + std::to_string(i) + " sits at the origin");
    }
    for (Eigen::Index i = 0; i < segments(); ++i)
      if (!(segment_length(i) > 0))
        throw MeshError("coincident consecutive nodes at index " + std::to_string(i));
  }

  Nodes nodes_;
  Topology topology_;
};

using PlanarCurve = BasicPlanarCurve<double>;

template <typename Scalar>
struct Frame {
  ComplexVector<Scalar> tangent;
  ComplexVector<Scalar> normal;
};

template <typename Scalar>
struct CurveDiagnostics {
  RealVector<Scalar> kappa;      // signed curvature, 1/length
  RealVector<Scalar> radial;     // <gamma, N>
  RealVector<Scalar> r;          // |gamma|
  RealVector<Scalar> arclength;  // cumulative s from node 0
};

template <typename Scalar>
struct AngleProfile {
  RealVector<Scalar> theta;  // continuous lift along node order
  long branch_offset = 0;    // theta_0 - raw_0 in units of pi
};

template <typename Scalar>
struct Wedge {
  Scalar span = 0;
  Scalar bisector = 0;
};

template <typename Scalar>
struct Disk {
  std::complex<Scalar> center{};
  Scalar radius = 1;
  bool contains(std::complex<Scalar> z) const { return std::abs(z - center) <= radius; }
};

template <typename Scalar>
struct Annulus {
  Scalar inner = 0;
  Scalar outer = std::numeric_limits<Scalar>::infinity();
  bool contains(std::complex<Scalar> z) const {
    const Scalar r = std::abs(z);
    return r >= inner && r <= outer;
  }
};

/// Result of counting curvature maxima; `circle` flags (near-)constant curvature.
struct CurvatureMaxima {
  int count = 0;
  bool circle = false;
};

namespace detail {

/// Three-point derivatives with respect to chord-length parameter.
/// Open arcs use one-sided stencils at the two ends.
template <typename Scalar, typename Value>
void three_point(const BasicPlanarCurve<Scalar>& curve, const Eigen::Matrix<Value, Eigen::Dynamic, 1>& f,
                 std::type_identity_t<Eigen::Matrix<Value, Eigen::Dynamic, 1>>* d1,
                 std::type_identity_t<Eigen::Matrix<Value, Eigen::Dynamic, 1>>* d2) {
  const Eigen::Index n = curve.size();
  if (d1) d1->resize(n);
  if (d2) d2->resize(n);
  auto interior = [&](Eigen::Index i, Eigen::Index im, Eigen::Index ip) {
    const Scalar hm = curve.segment_length(im);
    const Scalar hp = curve.segment_length(i);
    const Value fm = f[im], f0 = f[i], fp = f[ip];
    if (d1) (*d1)[i] = (fp - f0) * (hm / (hp * (hp + hm))) + (f0 - fm) * (hp / (hm * (hp + hm)));
    if (d2) (*d2)[i] = ((fp - f0) / hp - (f0 - fm) / hm) * (Scalar(2) / (hp + hm));
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    if (curve.closed() || (i > 0 && i + 1 < n)) {
      interior(i, curve.prev(i), curve.next(i));
    }
  }
  if (!curve.closed()) {
    auto one_sided = [&](Eigen::Index i0, Eigen::Index i1, Eigen::Index i2, Scalar sign) {
      const Scalar h1 = std::abs(curve[i1] - curve[i0]);
      const Scalar h2 = std::abs(curve[i2] - curve[i1]);
      const Value f0 = f[i0], f1 = f[i1], f2 = f[i2];
      if (d1)
        (*d1)[i0] = sign * (f0 * (-(2 * h1 + h2) / (h1 * (h1 + h2))) + f1 * ((h1 + h2) / (h1 * h2)) +
                            f2 * (-h1 / (h2 * (h1 + h2))));
      if (d2)
        (*d2)[i0] = (f0 / (h1 * (h1 + h2)) - f1 / (h1 * h2) + f2 / (h2 * (h1 + h2))) * Scalar(2);
    };
    one_sided(0, 1, 2, Scalar(1));
    one_sided(n - 1, n - 2, n - 3, Scalar(-1));
  }
}

/// Hermite-cubic evaluation of the segment from node i to its successor at u in [0, 1].
template <typename Scalar>
std::complex<Scalar> hermite(const BasicPlanarCurve<Scalar>& curve, const ComplexVector<Scalar>& slope,
                             Eigen::Index i, Scalar u) {
  const Eigen::Index j = curve.next(i);
  const Scalar c = curve.segment_length(i);
  const Scalar u2 = u * u, u3 = u2 * u;
  const Scalar h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u, h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
  return curve[i] * h00 + slope[i] * (c * h10) + curve[j] * h01 + slope[j] * (c * h11);
}

/// Distance from p to the segment [a, b].
template <typename Scalar>
Scalar point_segment_distance(std::complex<Scalar> p, std::complex<Scalar> a, std::complex<Scalar> b) {
  const std::complex<Scalar> ab = b - a;
  const Scalar len2 = std::norm(ab);
  Scalar t = len2 > 0 ? std::real(std::conj(ab) * (p - a)) / len2 : Scalar(0);
  t = std::clamp(t, Scalar(0), Scalar(1));
  return std::abs(p - (a + ab * t));
}

}  // namespace detail

/// Unit tangent and normal N = iT at every node.
template <typename Scalar>
Frame<Scalar> frame(const BasicPlanarCurve<Scalar>& curve) {
  ComplexVector<Scalar> d1;
  detail::three_point<Scalar>(curve, curve.nodes(), &d1, nullptr);
  Frame<Scalar> out;
  out.tangent.resize(curve.size());
  const Scalar floor = curve.min_spacing() * Scalar(1e-9);
  for (Eigen::Index i = 0; i < curve.size(); ++i) {
    const Scalar len = std::abs(d1[i]);
    if (!(len > floor) || !(len > 0)) throw MeshError("degenerate tangent at node " + std::to_string(i));
    out.tangent[i] = d1[i] / len;
  }
  out.normal = out.tangent * std::complex<Scalar>(0, 1);
  return out;
}

/// Signed curvature, <gamma, N>, |gamma| and cumulative arclength at every node.
template <typename Scalar>
CurveDiagnostics<Scalar> curvature_and_radial(const BasicPlanarCurve<Scalar>& curve) {
  ComplexVector<Scalar> d1, d2;
  detail::three_point<Scalar>(curve, curve.nodes(), &d1, &d2);
  const Eigen::Index n = curve.size();
  CurveDiagnostics<Scalar> out;
  out.kappa.resize(n);
  out.radial.resize(n);
  out.r = curve.nodes().cwiseAbs();
  out.arclength.resize(n);
  Scalar s = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar speed = std::abs(d1[i]);
    if (!(speed > 0)) throw MeshError("degenerate tangent at node " + std::to_string(i));
    if (curve.closed() || (i > 0 && i + 1 < n)) {
      // circle through the node and its neighbours: exact on circles, second order on smooth meshes
      const std::complex<Scalar> a = curve[i] - curve[curve.prev(i)], b = curve[curve.next(i)] - curve[i];
      out.kappa[i] = 2 * std::imag(std::conj(a) * b) / (std::abs(a) * std::abs(b) * std::abs(a + b));
    } else {
      out.kappa[i] = std::imag(std::conj(d1[i]) * d2[i]) / (speed * speed * speed);
    }
    const std::complex<Scalar> normal = d1[i] * std::complex<Scalar>(0, 1) / speed;
    out.radial[i] = std::real(std::conj(normal) * curve[i]);
    out.arclength[i] = s;
    if (i + 1 < n) s += curve.segment_length(i);
  }
  return out;
}

/// arg(gamma') + (n - 1) arg(gamma), lifted continuously from a branch in [0, pi) at node 0.
template <typename Scalar>
AngleProfile<Scalar> lagrangian_angle(const BasicPlanarCurve<Scalar>& curve, int n) {
  if (n < 1) throw DomainError("lagrangian_angle: n must be >= 1");
  const Frame<Scalar> fr = frame(curve);
  const Eigen::Index count = curve.size();
  RealVector<Scalar> raw(count);
  for (Eigen::Index i = 0; i < count; ++i)
    raw[i] = std::arg(fr.tangent[i]) + Scalar(n - 1) * std::arg(curve[i]);
  AngleProfile<Scalar> out;
  out.theta.resize(count);
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  out.theta[0] = reduce_angle(raw[0], pi);
  out.branch_offset = std::lround((out.theta[0] - raw[0]) / pi);
  for (Eigen::Index i = 1; i < count; ++i) {
    const Scalar jump = wrap_angle(raw[i] - raw[i - 1]);
    if (std::abs(jump) >= pi / 2)
      throw MeshError("angle lift failed between nodes " + std::to_string(i - 1) + " and " +
                      std::to_string(i) + ": mesh under-resolved");
    out.theta[i] = out.theta[i - 1] + jump;
  }
  return out;
}

/// Max over interior nodes of |d theta/ds - (kappa + (n - 1) d arg(gamma)/ds)|.
template <typename Scalar>
Scalar angle_derivative_check(const BasicPlanarCurve<Scalar>& curve, int n) {
  const Frame<Scalar> fr = frame(curve);
  const CurveDiagnostics<Scalar> diag = curvature_and_radial(curve);
  const Eigen::Index count = curve.size();
  RealVector<Scalar> raw(count);
  for (Eigen::Index i = 0; i < count; ++i)
    raw[i] = std::arg(fr.tangent[i]) + Scalar(n - 1) * std::arg(curve[i]);
  Scalar worst = 0;
  for (Eigen::Index i = 0; i < count; ++i) {
    if (!curve.closed() && (i == 0 || i + 1 == count)) continue;
    const Eigen::Index im = curve.prev(i), ip = curve.next(i);
    const Scalar hm = curve.segment_length(im), hp = curve.segment_length(i);
    const Scalar dp = wrap_angle(raw[ip] - raw[i]), dm = wrap_angle(raw[i] - raw[im]);
    const Scalar dtheta = dp * (hm / (hp * (hp + hm))) + dm * (hp / (hm * (hp + hm)));
    const Scalar dalpha = std::imag(std::conj(curve[i]) * fr.tangent[i]) / std::norm(curve[i]);
    worst = std::max(worst, std::abs(dtheta - (diag.kappa[i] + Scalar(n - 1) * dalpha)));
  }
  return worst;
}

/// Total change of arg(gamma) over a loop, in turns.
template <typename Scalar>
int winding_number(const BasicPlanarCurve<Scalar>& curve) {
  if (!curve.closed()) throw DomainError("winding_number: curve is an open arc");
  Scalar total = 0;
  for (Eigen::Index i = 0; i < curve.size(); ++i)
    total += wrap_angle(std::arg(curve[curve.next(i)]) - std::arg(curve[i]));
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi_v<Scalar>)));
}

/// Strict local maxima of the signed curvature over one period of a loop, oriented so the
/// total turning is positive. Near-constant curvature reports the circle sentinel.
template <typename Scalar>
CurvatureMaxima curvature_maxima_count(const BasicPlanarCurve<Scalar>& curve) {
  if (!curve.closed()) throw DomainError("curvature_maxima_count: curve is an open arc");
  const CurveDiagnostics<Scalar> diag = curvature_and_radial(curve);
  RealVector<Scalar> kappa = diag.kappa;
  Scalar turning = 0;
  for (Eigen::Index i = 0; i < curve.size(); ++i)
    turning += kappa[i] * Scalar(0.5) * (curve.segment_length(i) + curve.segment_length(curve.prev(i)));
  if (turning < 0) kappa = -kappa;
  const Scalar scale = kappa.cwiseAbs().maxCoeff();
  if (kappa.maxCoeff() - kappa.minCoeff() < Scalar(1e-6) * scale) return {0, true};
  const Scalar tol = Scalar(1e-8) * scale;
  CurvatureMaxima out;
  for (Eigen::Index i = 0; i < curve.size(); ++i) {
    const Scalar k = kappa[i];
    if (k > kappa[curve.prev(i)] + tol && k > kappa[curve.next(i)] + tol) ++out.count;
  }
  return out;
}

namespace detail {

/// Cumulative mesh coordinate int ds / h(gamma) at every node boundary (Simpson per segment).
template <typename Scalar>
RealVector<Scalar> mesh_coordinate(const BasicPlanarCurve<Scalar>& curve, const ComplexVector<Scalar>& slope,
                                   const std::function<Scalar(std::complex<Scalar>)>& spacing) {
  const Eigen::Index segs = curve.segments();
  RealVector<Scalar> cumulative(segs + 1);
  cumulative[0] = 0;
  for (Eigen::Index i = 0; i < segs; ++i) {
    const auto mid = hermite(curve, slope, i, Scalar(0.5));
    const Scalar h = (spacing(curve[i]) + 4 * spacing(mid) + spacing(curve[curve.next(i)])) / 6;
    if (!(h > 0)) throw MeshError("redistribute: spacing must be positive");
    cumulative[i + 1] = cumulative[i] + curve.segment_length(i) / h;
  }
  return cumulative;
}

template <typename Scalar>
ComplexVector<Scalar> unit_slopes(const BasicPlanarCurve<Scalar>& curve) {
  ComplexVector<Scalar> slope;
  three_point<Scalar>(curve, curve.nodes(), &slope, nullptr);
  for (Eigen::Index i = 0; i < slope.size(); ++i) slope[i] /= std::abs(slope[i]);
  return slope;
}

template <typename Scalar>
BasicPlanarCurve<Scalar> place_nodes(const BasicPlanarCurve<Scalar>& curve, const ComplexVector<Scalar>& slope,
                                     const RealVector<Scalar>& cumulative, Eigen::Index count) {
  const Eigen::Index segs = curve.segments();
  const Eigen::Index intervals = curve.closed() ? count : count - 1;
  const Scalar total = cumulative[segs];
  ComplexVector<Scalar> out(count);
  Eigen::Index seg = 0;
  for (Eigen::Index j = 0; j < count; ++j) {
    const Scalar target = total * Scalar(j) / Scalar(intervals);
    while (seg + 1 < segs && cumulative[seg + 1] <= target) ++seg;
    const Scalar width = cumulative[seg + 1] - cumulative[seg];
    const Scalar u = std::clamp((target - cumulative[seg]) / width, Scalar(0), Scalar(1));
    out[j] = hermite(curve, slope, seg, u);
  }
  out[0] = curve[0];
  if (!curve.closed()) out[count - 1] = curve[curve.size() - 1];
  return {std::move(out), curve.topology()};
}

}  // namespace detail

/// Re-places nodes at equal increments of the mesh coordinate int ds / h(gamma), using
/// Hermite cubics through the old nodes. Loops keep node 0; arcs keep both endpoints.
template <typename Scalar>
BasicPlanarCurve<Scalar> redistribute(const BasicPlanarCurve<Scalar>& curve,
                                      const std::function<Scalar(std::complex<Scalar>)>& spacing,
                                      Eigen::Index min_count = 16) {
  const ComplexVector<Scalar> slope = detail::unit_slopes(curve);
  const RealVector<Scalar> cumulative = detail::mesh_coordinate(curve, slope, spacing);
  const Eigen::Index intervals = std::max<Eigen::Index>(curve.closed() ? min_count : min_count - 1,
                                                        std::llround(cumulative[curve.segments()]));
  return detail::place_nodes(curve, slope, cumulative, curve.closed() ? intervals : intervals + 1);
}

/// Like redistribute, but with a prescribed node count.
template <typename Scalar>
BasicPlanarCurve<Scalar> resample(const BasicPlanarCurve<Scalar>& curve,
                                  const std::function<Scalar(std::complex<Scalar>)>& spacing, Eigen::Index count) {
  if (count < BasicPlanarCurve<Scalar>::min_nodes) throw DomainError("resample: too few nodes");
  const ComplexVector<Scalar> slope = detail::unit_slopes(curve);
  return detail::place_nodes(curve, slope, detail::mesh_coordinate(curve, slope, spacing), count);
}

template <typename Scalar>
BasicPlanarCurve<Scalar> redistribute(const BasicPlanarCurve<Scalar>& curve, Scalar spacing,
                                      Eigen::Index min_count = 16) {
  if (!(spacing > 0)) throw DomainError("redistribute: spacing must be positive");
  return redistribute<Scalar>(
      curve, [spacing](std::complex<Scalar>) { return spacing; }, min_count);
}

/// Smallest closed wedge with apex at the origin that contains the curve.
template <typename Scalar>
Wedge<Scalar> wedge_hull(const BasicPlanarCurve<Scalar>& curve) {
  constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  if (curve.closed() && winding_number(curve) != 0) return {two_pi, wrap_angle(std::arg(curve[0]))};
  Scalar lifted = std::arg(curve[0]);
  Scalar lo = lifted, hi = lifted;
  for (Eigen::Index i = 1; i < curve.size(); ++i) {
    lifted += wrap_angle(std::arg(curve[i]) - std::arg(curve[i - 1]));
    lo = std::min(lo, lifted);
    hi = std::max(hi, lifted);
  }
  if (hi - lo >= two_pi) return {two_pi, wrap_angle((hi + lo) / 2)};
  return {hi - lo, wrap_angle((hi + lo) / 2)};
}

/// One-sided Hausdorff distance from the nodes of `a` inside `region` to the polyline `b`.
template <typename Scalar, typename Region>
Scalar directed_distance(const BasicPlanarCurve<Scalar>& a, const BasicPlanarCurve<Scalar>& b,
                         const Region& region, bool* any = nullptr) {
  Scalar worst = 0;
  bool found = false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!region.contains(a[i])) continue;
    found = true;
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index j = 0; j < b.segments(); ++j)
      best = std::min(best, detail::point_segment_distance(a[i], b[j], b[b.next(j)]));
    worst = std::max(worst, best);
  }
  if (any) *any = found;
  return worst;
}

/// Symmetric Hausdorff distance between the parts of two curves inside a region (annulus or disk).
template <typename Scalar, typename Region>
Scalar hausdorff_distance(const BasicPlanarCurve<Scalar>& a, const BasicPlanarCurve<Scalar>& b,
                          const Region& region) {
  bool any_a = false, any_b = false;
  const Scalar ab = directed_distance(a, b, region, &any_a);
  const Scalar ba = directed_distance(b, a, region, &any_b);
  if (!any_a || !any_b) throw DomainError("hausdorff_distance: a curve misses the region");
  return std::max(ab, ba);
}

template <typename Scalar>
struct Separation {
  Scalar distance = std::numeric_limits<Scalar>::infinity();
  Scalar local_spacing = 0;  // longer of the two segments meeting at the closest approach
};

/// Minimum node-to-segment distance between two polylines, both directions.
template <typename Scalar>
Separation<Scalar> separation(const BasicPlanarCurve<Scalar>& a, const BasicPlanarCurve<Scalar>& b) {
  Separation<Scalar> out;
  auto scan = [&out](const BasicPlanarCurve<Scalar>& from, const BasicPlanarCurve<Scalar>& to) {
    for (Eigen::Index i = 0; i < from.size(); ++i)
      for (Eigen::Index j = 0; j < to.segments(); ++j) {
        const Scalar d = detail::point_segment_distance(from[i], to[j], to[to.next(j)]);
        if (d < out.distance) {
          out.distance = d;
          Scalar own = from.closed() || i + 1 < from.size() ? from.segment_length(i) : Scalar(0);
          if (from.closed() || i > 0) own = std::max(own, from.segment_length(from.prev(i)));
          out.local_spacing = std::max(own, to.segment_length(j));
        }
      }
  };
  scan(a, b);
  scan(b, a);
  return out;
}

/// Samples a parametrized curve at `count` parameter values uniformly spaced in [t0, t1].
template <typename Scalar, typename Fn>
BasicPlanarCurve<Scalar> sample(Fn&& fn, Scalar t0, Scalar t1, Eigen::Index count, Topology topology) {
  ComplexVector<Scalar> nodes(count);
  const Eigen::Index intervals = topology == Topology::closed_loop ? count : count - 1;
  for (Eigen::Index i = 0; i < count; ++i) nodes[i] = fn(t0 + (t1 - t0) * Scalar(i) / Scalar(intervals));
  return {std::move(nodes), topology};
}

/// Counterclockwise circle of radius `radius` about `center`, starting at angle `phase`.
template <typename Scalar = double>
BasicPlanarCurve<Scalar> circle(Scalar radius, Eigen::Index count, std::complex<Scalar> center = {},
                                Scalar phase = 0) {
  return sample<Scalar>(
      [&](Scalar t) { return center + std::polar(radius, t); }, phase,
      phase + 2 * std::numbers::pi_v<Scalar>, count, Topology::closed_loop);
}

}  // namespace lmcf

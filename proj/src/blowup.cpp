#include "lmcf/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "lmcf/errors.hpp"

namespace lmcf {

namespace {

constexpr double pi = std::numbers::pi;

using cplx = std::complex<double>;

// Direction phi maximizing sum <w, e^{i phi}>^2, oriented toward the points.
double principal_direction(const std::vector<cplx>& pts) {
  Eigen::Matrix2d scatter = Eigen::Matrix2d::Zero();
  cplx mean{};
  for (const cplx& w : pts) {
    const Eigen::Vector2d v(w.real(), w.imag());
    scatter += v * v.transpose();
    mean += w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(scatter);
  const Eigen::Vector2d u = eig.eigenvectors().col(1);
  double phi = std::atan2(u.y(), u.x());
  if (std::real(mean * std::polar(1.0, -phi)) < 0) phi = wrap_angle(phi + pi);
  return phi;
}

double distance_to_ray_piece(cplx w, double phi, double r0, double r1) {
  const cplx dir = std::polar(1.0, phi);
  return detail::point_segment_distance(w, r0 * dir, r1 * dir);
}

int reduce_branch(long k, int n) {
  const long m = 2L * n;
  return static_cast<int>(((k % m) + m) % m);
}

// theta_bar in [0, pi) and k in [0, 2n) from the combined label theta_bar + k pi.
std::pair<double, int> split_label(double label, int n) {
  const double theta_bar = reduce_angle(label, pi);
  const long k = std::lround((label - theta_bar) / pi);
  // a label sitting just below a multiple of pi may reduce to ~pi; fold it back
  if (pi - theta_bar < 1e-14) return {0.0, reduce_branch(k + 1, n)};
  return {theta_bar, reduce_branch(k, n)};
}

cplx special_lagrangian_local(double B, int n, double alpha) {
  return std::polar(B * std::pow(std::cos(n * alpha), -1.0 / n), alpha);
}

// Signed algebraic distance to Re(u^n) = B^n, first-order exact near the curve.
struct ImplicitResidual {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  using QRSolver = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const std::vector<cplx>* pts;
  int n;

  int inputs() const { return 4; }
  int values() const { return static_cast<int>(pts->size()); }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const double B = std::exp(x[0]);
    const cplx rot = std::polar(1.0, -x[1]);
    const cplx shift(x[2], x[3]);
    const double Bn = std::pow(B, n);
    for (std::size_t i = 0; i < pts->size(); ++i) {
      const cplx u = rot * ((*pts)[i] - shift);
      const double r = std::abs(u);
      f[static_cast<Eigen::Index>(i)] = (std::real(std::pow(u, n)) - Bn) / (n * std::pow(r, n - 1));
    }
    return 0;
  }
};

}  // namespace

std::string to_string(BlowupMode mode) { return mode == BlowupMode::type_one ? "I" : "II"; }

double branch_label(double theta_bar, int k, int n) { return reduce_angle(theta_bar + k * pi, 2 * pi * n); }

BlowupReport make_report(const ConeFit& fit) {
  BlowupReport r;
  r.mode = BlowupMode::type_one;
  r.theta_bar = fit.theta_bar;
  r.k = fit.k;
  r.residual = fit.residual;
  r.gap = fit.gap;
  return r;
}

BlowupReport make_report(const SpecialLagrangianFit& fit) {
  BlowupReport r;
  r.mode = BlowupMode::type_two;
  r.theta_bar = fit.theta_bar;
  r.k = fit.k;
  r.B = fit.B;
  r.residual = fit.residual;
  r.translation = fit.translation;
  return r;
}

double type1_max_scale(const FlowTrajectory& traj, double T_est, double s) {
  if (traj.snapshots.empty()) throw DomainError("type1_max_scale: empty trajectory");
  if (traj.termination != Termination::singularity_trigger)
    throw DomainError("type1_max_scale: trajectory has no finite-time singularity");
  if (!(s < 0)) throw DomainError("type1_max_scale: rescaled time must be negative");
  const double gap = T_est - traj.snapshots.back().t;
  if (!(gap > 0)) throw DomainError("type1_max_scale: singular time not after the last snapshot");
  return std::sqrt(-s / gap);
}

std::vector<PlanarCurve> type1_rescale(const FlowTrajectory& traj, double T_est, const std::vector<double>& scales,
                                       double s) {
  if (traj.snapshots.empty()) throw DomainError("type1_rescale: empty trajectory");
  if (traj.termination != Termination::singularity_trigger)
    throw DomainError("type1_rescale: trajectory has no finite-time singularity");
  if (!(s < 0)) throw DomainError("type1_rescale: rescaled time must be negative");
  std::vector<PlanarCurve> out;
  out.reserve(scales.size());
  for (double lambda : scales) {
    if (!(lambda > 0)) throw DomainError("type1_rescale: scales must be positive");
    const double t = T_est + s / (lambda * lambda);
    if (t < traj.snapshots.front().t) throw DomainError("type1_rescale: requested time before trajectory start");
    if (t > traj.snapshots.back().t) throw DomainError("type1_rescale: requested time after the last snapshot");
    out.push_back(curve_at(traj, t).transformed(lambda));
  }
  return out;
}

ConeFit fit_cone_pair(const PlanarCurve& curve, const Annulus<double>& region, int n) {
  if (n < 1) throw DomainError("fit_cone_pair: n must be >= 1");
  if (!(region.inner > 0) || !(region.outer > region.inner))
    throw DomainError("fit_cone_pair: invalid annulus");

  // pieces of the curve inside the annulus, in node order
  std::vector<cplx> inside;
  int components = 0;
  bool prev_in = false;
  for (Eigen::Index i = 0; i < curve.size(); ++i) {
    const bool in = region.contains(curve[i]);
    if (in) {
      inside.push_back(curve[i]);
      if (!prev_in) ++components;
    }
    prev_in = in;
  }
  if (curve.closed() && components > 1 && region.contains(curve[0]) && region.contains(curve[curve.size() - 1]))
    --components;
  if (components < 2 || inside.size() < 4) throw NoFitError("fit_cone_pair: fewer than two ray clusters");

  // split by the two widest angular gaps
  std::vector<std::pair<double, std::size_t>> args;
  for (std::size_t i = 0; i < inside.size(); ++i) args.emplace_back(std::arg(inside[i]), i);
  std::sort(args.begin(), args.end());
  const std::size_t m = args.size();
  std::vector<std::pair<double, std::size_t>> gaps;  // gap after sorted position j
  for (std::size_t j = 0; j < m; ++j) {
    const double next = j + 1 < m ? args[j + 1].first : args[0].first + 2 * pi;
    gaps.emplace_back(next - args[j].first, j);
  }
  std::sort(gaps.begin(), gaps.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  const std::size_t cut_a = std::min(gaps[0].second, gaps[1].second);
  const std::size_t cut_b = std::max(gaps[0].second, gaps[1].second);
  std::vector<cplx> first, second;
  for (std::size_t j = 0; j < m; ++j) (j > cut_a && j <= cut_b ? first : second).push_back(inside[args[j].second]);
  if (first.size() < 2 || second.size() < 2) throw NoFitError("fit_cone_pair: fewer than two ray clusters");

  double phi_a = principal_direction(first);
  double phi_b = principal_direction(second);
  if (wrap_angle(phi_b - phi_a) < 0) {
    std::swap(phi_a, phi_b);
    std::swap(first, second);
  }

  ConeFit fit;
  fit.n = n;
  fit.lower_arg = phi_a;
  fit.upper_arg = phi_b;
  fit.gap = wrap_angle(phi_b - phi_a);
  fit.nodes_used = static_cast<int>(m);

  // constrained fit: the upper cluster rotated back by the fixed gap joins the lower one
  std::vector<cplx> merged = first;
  const cplx back = std::polar(1.0, -pi / n);
  for (const cplx& w : second) merged.push_back(w * back);
  const double phi = principal_direction(merged);
  const double upper = phi + pi / n;

  const auto [theta_bar, k] = split_label(n * phi + pi, n);
  fit.theta_bar = theta_bar;
  fit.k = k;

  double worst = 0;
  for (const cplx& w : inside)
    worst = std::max(worst, std::min(distance_to_ray_piece(w, phi, region.inner, region.outer),
                                     distance_to_ray_piece(w, upper, region.inner, region.outer)));
  constexpr int ray_samples = 400;
  for (double dir : {phi, upper})
    for (int j = 0; j <= ray_samples; ++j) {
      const double r = region.inner + (region.outer - region.inner) * j / ray_samples;
      const cplx p = std::polar(r, dir);
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < curve.segments(); ++i)
        best = std::min(best, detail::point_segment_distance(p, curve[i], curve[curve.next(i)]));
      worst = std::max(worst, best);
    }
  fit.residual = worst;
  return fit;
}

TypeTwoRescaling type2_rescale(const FlowTrajectory& traj, double T_est) {
  if (traj.termination != Termination::singularity_trigger)
    throw DomainError("type2_rescale: trajectory did not reach a singularity trigger");
  const FlowState* best = nullptr;
  double best_value = -1, best_kappa = 0;
  for (const FlowState& st : traj.snapshots) {
    if (!(st.t < T_est)) continue;
    const double kmax = st.diagnostics.kappa.cwiseAbs().maxCoeff();
    const double value = kmax * kmax * (T_est - st.t);
    if (value > best_value) {
      best_value = value;
      best = &st;
      best_kappa = kmax;
    }
  }
  if (!best || !(best_kappa > 0)) throw DomainError("type2_rescale: no snapshot before the singular time");

  TypeTwoRescaling out{best->curve.transformed(best_kappa), best_kappa, best->t, {}};
  Eigen::Index peak = 0;
  best->diagnostics.kappa.cwiseAbs().maxCoeff(&peak);
  out.peak = out.curve[peak];
  return out;
}

double distance_to_fit(const SpecialLagrangianFit& fit, cplx w) {
  const int n = fit.n;
  const cplx u = std::polar(1.0, -fit.rotation) * (w - fit.translation);
  const double edge = pi / (2 * n);
  auto dist2 = [&](double a) { return std::norm(u - special_lagrangian_local(fit.B, n, a)); };

  // coarse scan then golden section around the best sample
  constexpr int coarse = 200;
  const double lo = -edge * (1 - 1e-9), hi = edge * (1 - 1e-9);
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= coarse; ++j) {
    const double v = dist2(lo + (hi - lo) * j / coarse);
    if (v < best_value) best_value = v, best = j;
  }
  double a = lo + (hi - lo) * std::max(best - 1, 0) / coarse;
  double b = lo + (hi - lo) * std::min(best + 1, coarse) / coarse;
  const double g = (std::sqrt(5.0) - 1) / 2;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = dist2(c), fd = dist2(d);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - g * (b - a), fc = dist2(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + g * (b - a), fd = dist2(d);
    }
  }
  return std::sqrt(std::min({fc, fd, best_value}));
}

SpecialLagrangianFit fit_special_lagrangian(const PlanarCurve& curve, int n, double radius, double residual_cap) {
  if (n < 2) throw DomainError("fit_special_lagrangian: needs n >= 2");
  if (!(radius > 0)) throw DomainError("fit_special_lagrangian: radius must be positive");

  const auto diag = curvature_and_radial(curve);
  const Eigen::Index lo = curve.closed() ? 0 : 1;
  const Eigen::Index hi = curve.closed() ? curve.size() : curve.size() - 1;
  Eigen::Index peak = lo;
  for (Eigen::Index i = lo; i < hi; ++i)
    if (std::abs(diag.kappa[i]) > std::abs(diag.kappa[peak])) peak = i;

  const Disk<double> region{curve[peak], radius};
  std::vector<cplx> pts;
  for (Eigen::Index i = 0; i < curve.size(); ++i)
    if (region.contains(curve[i])) pts.push_back(curve[i]);
  if (pts.size() < 8) throw NoFitError("fit_special_lagrangian: too few nodes around the curvature peak");

  ImplicitResidual functor{&pts, n};
  Eigen::NumericalDiff<ImplicitResidual> numdiff(functor);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<ImplicitResidual>> lm(numdiff);
  lm.parameters.xtol = 1e-15;
  lm.parameters.ftol = 1e-15;
  lm.parameters.maxfev = 4000;
  Eigen::VectorXd x(4);
  x << std::log(std::abs(curve[peak])), std::arg(curve[peak]), 0.0, 0.0;
  lm.minimize(x);
  if (!x.allFinite()) throw NoFitError("fit_special_lagrangian: least squares diverged");

  SpecialLagrangianFit fit;
  fit.n = n;
  fit.B = std::exp(x[0]);
  fit.rotation = wrap_angle(x[1]);
  fit.translation = cplx(x[2], x[3]);
  fit.peak = curve[peak];
  fit.nodes_used = static_cast<int>(pts.size());
  const auto [theta_bar, k] = split_label(n * fit.rotation + pi / 2, n);
  fit.theta_bar = theta_bar;
  fit.k = k;

  double worst = 0;
  for (const cplx& w : pts) worst = std::max(worst, distance_to_fit(fit, w));
  fit.residual = worst;
  if (!(worst <= residual_cap)) throw NoFitError("fit_special_lagrangian: residual above cap");
  return fit;
}

bool blowdown_consistency(const BlowupReport& type_one, const BlowupReport& type_two, int n, double tolerance) {
  const double a = branch_label(type_one.theta_bar, type_one.k, n);
  const double b = branch_label(type_two.theta_bar, type_two.k, n);
  return angle_distance(a, b, 2 * pi * n) <= tolerance;
}

}  // namespace lmcf

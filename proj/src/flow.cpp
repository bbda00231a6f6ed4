#include "lmcf/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/NumericalDiff>

namespace lmcf {

namespace {

constexpr double pi = std::numbers::pi;
const std::complex<double> I{0, 1};

struct LineFit {
  double intercept = 0, slope = 0, r2 = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const Eigen::Index m = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd A(m, 2);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) A(i, 0) = 1, A(i, 1) = x[i], b[i] = y[i];
  const Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
  const double mean = b.mean();
  const double total = (b.array() - mean).square().sum();
  const double resid = (A * c - b).squaredNorm();
  return {c[0], c[1], total > 0 ? 1 - resid / total : 1.0};
}

// log r = log a + gamma log(T - t), with T = t_last + exp(u) kept past the last sample.
struct PowerLawResidual {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  using QRSolver = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  std::vector<double> t, log_r;
  double t_last = 0;

  int inputs() const { return 3; }
  int values() const { return static_cast<int>(t.size()); }
  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const double T = t_last + std::exp(x[2]);
    for (std::size_t i = 0; i < t.size(); ++i)
      f[static_cast<Eigen::Index>(i)] = x[0] + x[1] * std::log(T - t[i]) - log_r[i];
    return 0;
  }
};

}  // namespace

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::closed: return "closed";
    case Boundary::pinned_asymptotes: return "pinned-asymptotes";
    case Boundary::free_ends: return "free-ends";
  }
  return "unknown";
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::t_max_reached: return "t_max reached";
    case Termination::singularity_trigger: return "singularity trigger";
    case Termination::mesh_failure: return "mesh failure";
    case Termination::step_limit: return "step limit";
  }
  return "unknown";
}

Boundary boundary_from_string(const std::string& name) {
  for (auto b : {Boundary::closed, Boundary::pinned_asymptotes, Boundary::free_ends})
    if (to_string(b) == name) return b;
  throw DomainError("unknown boundary '" + name + "'");
}

void FlowConfig::validate() const {
  if (n < 1) throw DomainError("flow: n must be >= 1");
  if (!(cfl > 0 && cfl <= 0.5)) throw DomainError("flow: cfl must lie in (0, 0.5]");
  if (!(r_floor >= 0)) throw DomainError("flow: r_floor must be non-negative");
  if (!(spacing > 0)) throw DomainError("flow: spacing must be positive");
  if (!(relative_spacing >= 0)) throw DomainError("flow: relative_spacing must be non-negative");
  if (!(t_max > 0)) throw DomainError("flow: t_max must be positive");
  if (!(kappa_ceiling > 0)) throw DomainError("flow: kappa_ceiling must be positive");
  if (redistribution_period < 0) throw DomainError("flow: redistribution_period must be >= 0");
  if (!(collar_radius > 0)) throw DomainError("flow: collar_radius must be positive");
  if (!(snapshot_radius_ratio > 1)) throw DomainError("flow: snapshot_radius_ratio must exceed 1");
}

double FlowConfig::spacing_at(std::complex<double> z) const {
  if (relative_spacing <= 0) return spacing;
  return std::max(std::min(spacing, relative_spacing * std::abs(z)), 1e-12);
}

FlowState make_state(PlanarCurve curve, int n, double t, long step_index) {
  auto diag = curvature_and_radial(curve);
  auto theta = lagrangian_angle(curve, n);
  return {t, step_index, std::move(curve), std::move(diag), std::move(theta)};
}

RealVector<double> normal_velocity(const PlanarCurve& curve, int n, double r_floor) {
  const auto diag = curvature_and_radial(curve);
  RealVector<double> v(curve.size());
  for (Eigen::Index i = 0; i < curve.size(); ++i) {
    if (diag.r[i] < r_floor)
      throw SingularRadiusError("node " + std::to_string(i) + " at radius " + std::to_string(diag.r[i]) +
                                " is inside r_floor");
    v[i] = diag.kappa[i] - (n - 1) * diag.radial[i] / (diag.r[i] * diag.r[i]);
  }
  return v;
}

std::vector<bool> frozen_nodes(const PlanarCurve& curve, const FlowConfig& config) {
  std::vector<bool> frozen(static_cast<std::size_t>(curve.size()), false);
  if (config.boundary != Boundary::pinned_asymptotes) return frozen;
  if (curve.closed()) throw DomainError("pinned-asymptote boundary needs an open arc");
  frozen.front() = frozen.back() = true;
  for (Eigen::Index i = 0; i < curve.size(); ++i)
    if (std::abs(curve[i]) > config.collar_radius) frozen[static_cast<std::size_t>(i)] = true;
  return frozen;
}

double stable_dt(const PlanarCurve& curve, const FlowConfig& config) {
  const double h = curve.min_spacing();
  return config.cfl * h * h;
}

PlanarCurve remesh(const PlanarCurve& curve, const FlowConfig& config) {
  const std::function<double(std::complex<double>)> spacing = [&config](std::complex<double> z) {
    return config.spacing_at(z);
  };
  if (config.boundary != Boundary::pinned_asymptotes) return redistribute(curve, spacing);

  // only the part inside the collar is re-meshed; the frozen outer nodes stay put
  Eigen::Index first = -1, last = -1;
  for (Eigen::Index i = 0; i < curve.size(); ++i)
    if (std::abs(curve[i]) <= config.collar_radius) {
      if (first < 0) first = i;
      last = i;
    }
  if (first < 0) return curve;
  first = std::max<Eigen::Index>(first - 1, 0);
  last = std::min<Eigen::Index>(last + 1, curve.size() - 1);
  if (last - first + 1 < PlanarCurve::min_nodes) return curve;
  const PlanarCurve inner(curve.nodes().segment(first, last - first + 1), Topology::open_arc);
  const PlanarCurve fresh = redistribute(inner, spacing);
  ComplexVector<double> nodes(first + fresh.size() + (curve.size() - 1 - last));
  nodes << curve.nodes().head(first), fresh.nodes(), curve.nodes().tail(curve.size() - 1 - last);
  return {std::move(nodes), Topology::open_arc};
}

FlowState step(const FlowState& state, const FlowConfig& config, double dt) {
  if (dt <= 0) dt = stable_dt(state.curve, config);
  if (!(dt > 1e-300)) throw MeshError("time step underflow");
  const std::vector<bool> frozen = frozen_nodes(state.curve, config);
  auto displaced = [&](const PlanarCurve& at, double h) {
    const Frame<double> fr = frame(at);
    const CurveDiagnostics<double> diag = curvature_and_radial(at);
    ComplexVector<double> nodes = state.curve.nodes();
    for (Eigen::Index i = 0; i < nodes.size(); ++i) {
      if (frozen[static_cast<std::size_t>(i)]) continue;
      nodes[i] += h * (diag.kappa[i] - (config.n - 1) * diag.radial[i] / std::norm(at[i])) * fr.normal[i];
    }
    return PlanarCurve(std::move(nodes), state.curve.topology());
  };
  const PlanarCurve half = displaced(state.curve, dt / 2);
  PlanarCurve next = displaced(half, dt);
  const long index = state.step_index + 1;
  if (config.redistribution_period > 0 && index % config.redistribution_period == 0)
    next = remesh(next, config);
  return make_state(std::move(next), config.n, state.t + dt, index);
}

namespace {

SummaryRow summarize(const FlowState& s, int n) {
  SummaryRow row;
  row.t = s.t;
  row.nodes = s.curve.size();
  const auto& d = s.diagnostics;
  Eigen::Index imin = 0;
  row.min_r = d.r.minCoeff(&imin);
  row.min_r_point = s.curve[imin];
  row.max_kappa = d.kappa.cwiseAbs().maxCoeff();
  row.theta_min = s.theta.theta.minCoeff();
  row.theta_max = s.theta.theta.maxCoeff();
  for (Eigen::Index i = 0; i < s.curve.size(); ++i) {
    if (!s.curve.closed() && (i == 0 || i + 1 == s.curve.size())) continue;
    const double r2 = d.r[i] * d.r[i];
    const double v = d.kappa[i] - (n - 1) * d.radial[i] / r2;
    const double p = std::abs(d.radial[i]) / r2;
    const double weight = 1 + 1 / r2;
    row.h2_ratio = std::max(row.h2_ratio, v * v / weight);
    row.a2_ratio = std::max(row.a2_ratio, (d.kappa[i] * d.kappa[i] + 3 * (n - 1) * p * p) / weight);
  }
  return row;
}

}  // namespace

FlowTrajectory evolve(const PlanarCurve& initial, const FlowConfig& config) {
  config.validate();
  FlowTrajectory traj;
  traj.config = config;
  FlowState state = make_state(initial, config.n);
  traj.snapshots.push_back(state);
  traj.summary.push_back(summarize(state, config.n));
  double snapshot_r = traj.summary.back().min_r;
  bool last_saved = true;
  while (true) {
    const SummaryRow& row = traj.summary.back();
    if (row.min_r < config.r_floor || row.max_kappa > config.kappa_ceiling) {
      traj.termination = Termination::singularity_trigger;
      traj.message = row.min_r < config.r_floor ? "min radius below r_floor" : "curvature above ceiling";
      break;
    }
    if (state.t >= config.t_max * (1 - 1e-14)) {
      traj.termination = Termination::t_max_reached;
      break;
    }
    if (state.step_index >= config.max_steps) {
      traj.termination = Termination::step_limit;
      break;
    }
    try {
      const double dt = std::min(stable_dt(state.curve, config), config.t_max - state.t);
      state = step(state, config, dt);
    } catch (const Error& e) {
      traj.termination = Termination::mesh_failure;
      traj.message = e.what();
      break;
    }
    traj.summary.push_back(summarize(state, config.n));
    last_saved = false;
    const double r = traj.summary.back().min_r;
    if ((config.snapshot_every > 0 && state.step_index % config.snapshot_every == 0) ||
        r * config.snapshot_radius_ratio < snapshot_r) {
      traj.snapshots.push_back(state);
      snapshot_r = std::min(snapshot_r, r);
      last_saved = true;
    }
  }
  if (!last_saved) traj.snapshots.push_back(state);
  return traj;
}

PlanarCurve curve_at(const FlowTrajectory& traj, double t) {
  const auto& snaps = traj.snapshots;
  if (snaps.empty()) throw DomainError("curve_at: empty trajectory");
  if (t < snaps.front().t || t > snaps.back().t)
    throw DomainError("curve_at: time " + std::to_string(t) + " outside the trajectory");
  auto it = std::upper_bound(snaps.begin(), snaps.end(), t, [](double x, const FlowState& s) { return x < s.t; });
  if (it == snaps.end()) return snaps.back().curve;
  const FlowState& b = *it;
  const FlowState& a = *(it - 1);
  if (t == a.t) return a.curve;
  const double w = (t - a.t) / (b.t - a.t);
  const std::function<double(std::complex<double>)> spacing = [&traj](std::complex<double> z) {
    return traj.config.spacing_at(z);
  };
  const Eigen::Index m = std::max(a.curve.size(), b.curve.size());
  const PlanarCurve ra = resample(a.curve, spacing, m);
  const PlanarCurve rb = resample(b.curve, spacing, m);
  return {ComplexVector<double>((1 - w) * ra.nodes() + w * rb.nodes()), a.curve.topology()};
}

std::complex<double> neves_point(double beta, double s) {
  return std::polar(std::pow(std::sin(pi * s / beta), -beta / pi), s);
}

PlanarCurve neves_initial(double beta, int n, Eigen::Index samples, double r_max) {
  if (n < 1) throw DomainError("neves_initial: n must be >= 1");
  if (!(beta > 0 && beta < 2 * pi / n)) throw DomainError("neves_initial: beta must lie in (0, 2 pi / n)");
  if (!(r_max > 1)) throw DomainError("neves_initial: r_max must exceed the apex radius 1");
  if (samples < PlanarCurve::min_nodes) throw DomainError("neves_initial: too few samples");
  // log-uniform radii on each half, mirrored about the apex s = beta / 2
  const Eigen::Index half = samples / 2;
  ComplexVector<double> nodes(2 * half + 1);
  for (Eigen::Index j = 0; j <= half; ++j) {
    const double r = std::pow(r_max, 1 - double(j) / double(half));
    const double s = beta / pi * std::asin(std::pow(r, -pi / beta));
    nodes[j] = neves_point(beta, s);
    nodes[2 * half - j] = neves_point(beta, beta - s);
  }
  return {std::move(nodes), Topology::open_arc};
}

AvoidanceResult avoidance_check(const FlowTrajectory& a, const FlowTrajectory& b, int min_samples) {
  if (a.snapshots.empty() || b.snapshots.empty()) throw DomainError("avoidance_check: empty trajectory");
  const double t0 = std::max(a.snapshots.front().t, b.snapshots.front().t);
  const double t1 = std::min(a.snapshots.back().t, b.snapshots.back().t);
  if (t1 < t0) throw DomainError("avoidance_check: trajectories do not overlap in time");
  std::vector<double> times;
  for (int i = 0; i <= min_samples; ++i) times.push_back(t0 + (t1 - t0) * i / std::max(min_samples, 1));
  for (const auto* traj : {&a, &b})
    for (const auto& s : traj->snapshots)
      if (s.t >= t0 && s.t <= t1) times.push_back(s.t);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  AvoidanceResult out;
  for (double t : times) {
    const auto sep = separation(curve_at(a, t), curve_at(b, t));
    ++out.samples;
    if (sep.distance < out.min_separation) out.min_separation = sep.distance, out.time_of_min = t;
    if (!(sep.distance > sep.local_spacing)) out.disjoint = false;
  }
  return out;
}

MonitorReport monitor_estimates(const FlowTrajectory& traj, double C_fit) {
  MonitorReport out;
  if (traj.summary.empty()) return out;
  out.h2_initial = traj.summary.front().h2_ratio;
  out.a2_initial = traj.summary.front().a2_ratio;
  for (const auto& row : traj.summary) {
    out.finite = out.finite && std::isfinite(row.h2_ratio) && std::isfinite(row.a2_ratio);
    out.h2_sup = std::max(out.h2_sup, row.h2_ratio);
    out.a2_sup = std::max(out.a2_sup, row.a2_ratio);
  }
  out.violation = !out.finite || out.h2_sup > 10 * out.h2_initial || out.a2_sup > 10 * out.a2_initial;
  out.within_fit = out.h2_sup <= C_fit && out.a2_sup <= C_fit;
  return out;
}

SingularityReport classify_singularity_rate(const FlowTrajectory& traj) {
  SingularityReport rep;
  if (traj.termination != Termination::singularity_trigger) return rep;
  rep.triggered = true;
  const auto& rows = traj.summary;
  const double t_last = rows.back().t;

  // start from the Type I ansatz (min r^2 linear in t), then free the exponent of the r-fit
  auto fit_T = [&](double horizon_start) {
    std::vector<double> t, r2;
    for (const auto& row : rows)
      if (row.t >= horizon_start) t.push_back(row.t), r2.push_back(row.min_r * row.min_r);
    const LineFit f = fit_line(t, r2);
    return f.slope < 0 ? -f.intercept / f.slope : std::numeric_limits<double>::quiet_NaN();
  };
  double T = fit_T(rows.front().t + 0.7 * (t_last - rows.front().t));
  if (!std::isfinite(T) || T <= t_last) {
    // local slope of the last few samples
    const std::size_t m = rows.size();
    const std::size_t j = m > 10 ? m - 10 : 0;
    const double slope = (rows[m - 1].min_r * rows[m - 1].min_r - rows[j].min_r * rows[j].min_r) /
                         (rows[m - 1].t - rows[j].t);
    T = slope < 0 ? t_last - rows[m - 1].min_r * rows[m - 1].min_r / slope : t_last;
  }
  double gamma = 0.5, log_a = 0;
  for (int it = 0; it < 8 && T > t_last; ++it) {
    const double tau_last = T - t_last;
    PowerLawResidual fn;
    fn.t_last = t_last;
    // at most ~2000 samples, log-spaced in T - t over the decade
    double next_tau = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
      const double tau = T - row.t;
      if (tau > 10 * tau_last || tau > next_tau) continue;
      fn.t.push_back(row.t);
      fn.log_r.push_back(std::log(row.min_r));
      next_tau = tau / std::pow(10.0, 1.0 / 2000);
    }
    if (fn.t.size() < 5) break;
    Eigen::VectorXd x(3);
    x << log_a, gamma, std::log(tau_last);
    if (it == 0) x[0] = std::log(rows.back().min_r) - gamma * std::log(tau_last);
    Eigen::NumericalDiff<PowerLawResidual> numeric(fn);
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<PowerLawResidual>> lm(numeric);
    lm.minimize(x);
    if (!x.allFinite() || !(x[1] > 0)) break;
    const double next = t_last + std::exp(x[2]);
    log_a = x[0], gamma = x[1];
    const bool settled = std::abs(next - T) <= 1e-6 * (T - t_last);
    T = next;
    if (settled) break;
  }
  if (!std::isfinite(T) || T < t_last) T = t_last;
  rep.T_est = T;
  rep.location = rows.back().min_r_point;

  const double tau_last = T - t_last;
  std::vector<double> log_tau, log_kappa;
  // monotone trend of min r, judged on log-spaced samples so remeshing jitter does not count
  bool monotone = true;
  double prev_r = std::numeric_limits<double>::infinity(), prev_tau = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    const double tau = T - row.t;
    if (!(tau > tau_last) || tau > 10 * tau_last) continue;
    log_tau.push_back(std::log(tau));
    log_kappa.push_back(std::log(row.max_kappa));
    if (tau < prev_tau / std::pow(10.0, 1.0 / 20)) {
      if (row.min_r > prev_r) monotone = false;
      prev_r = row.min_r, prev_tau = tau;
    }
  }
  rep.decade_samples = static_cast<int>(log_tau.size());
  if (rep.decade_samples < 5) throw DomainError("classify_singularity_rate: too few samples in the final decade");
  const LineFit f = fit_line(log_tau, log_kappa);
  rep.sigma = -f.slope;
  rep.sigma_fit_r2 = f.r2;
  rep.location_confirmed = monotone && rows.back().min_r < rows.front().min_r;
  if (f.r2 < 0.9)
    rep.type_evidence = "inconclusive";
  else
    rep.type_evidence = rep.sigma <= 0.55 ? "I" : "II";
  return rep;
}

}  // namespace lmcf

#include "lmcf/solitons.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace lmcf {

namespace {

constexpr double pi = std::numbers::pi;
const std::complex<double> I{0, 1};

double radial_speed(const ShootingState& s) { return std::real(std::conj(s.position) * s.direction); }

// One RK4 step of a state-space field.
template <typename Field>
ShootingState rk4(const ShootingState& y, double h, Field&& f) {
  auto axpy = [](const ShootingState& a, const ShootingState& d, double c) {
    ShootingState out;
    out.position = a.position + c * d.position;
    out.direction = a.direction + c * d.direction;
    out.s = a.s + c * d.s;
    out.swept_angle = a.swept_angle + c * d.swept_angle;
    return out;
  };
  const ShootingState k1 = f(y);
  const ShootingState k2 = f(axpy(y, k1, h / 2));
  const ShootingState k3 = f(axpy(y, k2, h / 2));
  const ShootingState k4 = f(axpy(y, k3, h));
  ShootingState out = y;
  out.position += h / 6 * (k1.position + 2.0 * k2.position + 2.0 * k3.position + k4.position);
  out.direction += h / 6 * (k1.direction + 2.0 * k2.direction + 2.0 * k3.direction + k4.direction);
  out.direction /= std::abs(out.direction);
  out.s += h;
  out.swept_angle += h / 6 * (k1.swept_angle + 2 * k2.swept_angle + 2 * k3.swept_angle + k4.swept_angle);
  return out;
}

// Collects trace nodes, thinning to spacing * min(1, r) (or spacing * r when relative) when requested.
class Recorder {
 public:
  explicit Recorder(double spacing, bool relative = false) : spacing_(spacing), relative_(relative) {}
  void push(std::complex<double> p, bool force = false) {
    if (!points_.empty() && !force && spacing_ > 0) {
      since_ += std::abs(p - last_seen_);
      last_seen_ = p;
      const double r = std::abs(p);
      if (since_ < spacing_ * (relative_ ? r : std::min(1.0, r))) return;
    }
    points_.push_back(p);
    last_seen_ = p;
    since_ = 0;
  }
  void drop_tail_near(std::complex<double> p, double tol) {
    while (!points_.empty() && std::abs(points_.back() - p) < tol) points_.pop_back();
  }
  std::vector<std::complex<double>>& points() { return points_; }

 private:
  double spacing_;
  bool relative_;
  double since_ = 0;
  std::complex<double> last_seen_;
  std::vector<std::complex<double>> points_;
};

ComplexVector<double> to_nodes(const std::vector<std::complex<double>>& pts) {
  ComplexVector<double> out(static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) out[static_cast<Eigen::Index>(i)] = pts[i];
  return out;
}

struct ApsisSearch {
  ShootingState state;
  bool found = false;
};

// Marches from an inner apsis through `count` further inner apsides (radial speed crossing - to +).
template <typename Field>
ApsisSearch march_apsides(const ShootingState& start, int count, double step_factor, double max_length,
                          Field&& field, Recorder* recorder) {
  ShootingState y = start;
  int seen = 0;
  bool was_inward = false;
  while (y.s - start.s < max_length) {
    const double h = step_factor * std::abs(y.position);
    ShootingState next = rk4(y, h, field);
    const double rho = radial_speed(next);
    if (rho < 0) was_inward = true;
    if (was_inward && rho >= 0) {
      // bracket the crossing inside [0, h] and refine by Illinois false position
      double a = 0, b = h, fa = radial_speed(y), fb = rho;
      int side = 0;
      ShootingState at = next;
      for (int it = 0; it < 80 && b - a > 1e-15 * h; ++it) {
        const double c = (a * fb - b * fa) / (fb - fa);
        at = rk4(y, c, field);
        const double fc = radial_speed(at);
        if (fc == 0) { a = b = c; break; }
        if ((fc < 0) == (fa < 0)) {
          a = c, fa = fc;
          if (side == -1) fb /= 2;
          side = -1;
        } else {
          b = c, fb = fc;
          if (side == 1) fa /= 2;
          side = 1;
        }
      }
      const double c = (a + b) / 2;
      at = rk4(y, c, field);
      ++seen;
      was_inward = false;
      if (seen == count) return {at, true};
      next = at;
    }
    y = next;
    if (recorder) recorder->push(y.position);
  }
  return {y, false};
}

}  // namespace

std::string to_string(SolitonKind kind) {
  switch (kind) {
    case SolitonKind::cone: return "cone";
    case SolitonKind::special_lagrangian: return "special-lagrangian";
    case SolitonKind::shrinker: return "shrinker";
    case SolitonKind::expander: return "expander";
    case SolitonKind::grim_reaper: return "grim-reaper";
  }
  return "unknown";
}

SolitonKind soliton_kind_from_string(const std::string& name) {
  for (auto kind : {SolitonKind::cone, SolitonKind::special_lagrangian, SolitonKind::shrinker,
                    SolitonKind::expander, SolitonKind::grim_reaper})
    if (to_string(kind) == name) return kind;
  throw DomainError("unknown soliton kind '" + name + "'");
}

SolitonSpec SolitonSpec::cone(int n, int k, double theta_bar) {
  SolitonSpec s;
  s.kind = SolitonKind::cone;
  s.n = n, s.k = k, s.theta_bar = theta_bar;
  s.validate();
  return s;
}

SolitonSpec SolitonSpec::special_lagrangian(int n, double B, int k, double theta_bar) {
  SolitonSpec s;
  s.kind = SolitonKind::special_lagrangian;
  s.n = n, s.B = B, s.k = k, s.theta_bar = theta_bar;
  s.validate();
  return s;
}

bool shrinker_admissible(int p, int q, int n) {
  if (p <= 0 || q <= 0 || n < 1 || std::gcd(p, q) != 1) return false;
  const double ratio = double(p) / q;
  return ratio > 1.0 / (2 * n) && ratio < 1.0 / std::sqrt(2.0 * n);
}

void SolitonSpec::validate() const {
  if (n < 1) throw DomainError("n must be >= 1");
  switch (kind) {
    case SolitonKind::special_lagrangian:
      if (!(B > 0)) throw DomainError("special Lagrangian needs B > 0");
      break;
    case SolitonKind::shrinker:
      if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
        throw DomainError("shrinker needs coprime positive p, q");
      if (!shrinker_admissible(p, q, n))
        throw DomainError("shrinker ratio p/q = " + std::to_string(p) + "/" + std::to_string(q) +
                          " is outside the open interval (1/(2n), 1/sqrt(2n))");
      break;
    case SolitonKind::expander:
      if (!(alpha > 0 && alpha < pi / n)) throw DomainError("expander angle must lie in (0, pi/n)");
      break;
    default:
      break;
  }
}

double cone_argument(const SolitonSpec& spec) { return (spec.theta_bar + spec.k * pi) / spec.n; }

double special_lagrangian_rotation(const SolitonSpec& spec) {
  const double n = spec.n;
  return spec.theta_bar / n - pi / (2 * n) + spec.k * pi / n;
}

std::complex<double> special_lagrangian_point(const SolitonSpec& spec, double alpha) {
  const double n = spec.n;
  const double r = spec.B * std::pow(std::cos(n * alpha), -1.0 / n);
  return std::polar(r, alpha + special_lagrangian_rotation(spec));
}

std::complex<double> grim_reaper_point(double x) { return {x, std::log(std::cos(x))}; }

PlanarCurve sample_cone(const SolitonSpec& spec, double r_min, double r_max, double spacing) {
  if (!(r_min > 0 && r_max > r_min)) throw DomainError("sample_cone: need 0 < r_min < r_max");
  if (!(spacing > 0)) throw DomainError("sample_cone: spacing must be positive");
  const Eigen::Index count =
      std::max<Eigen::Index>(PlanarCurve::min_nodes, std::llround(std::ceil((r_max - r_min) / spacing)) + 1);
  const std::complex<double> dir = std::polar(1.0, cone_argument(spec));
  ComplexVector<double> nodes(count);
  for (Eigen::Index i = 0; i < count; ++i)
    nodes[i] = dir * (r_min + (r_max - r_min) * double(i) / double(count - 1));
  return {std::move(nodes), Topology::open_arc};
}

namespace {

// alpha advanced by arclength h along the special Lagrangian: d alpha/ds = cos(n alpha)^(1+1/n) / B.
double advance_alpha(double alpha, double h, double n, double B) {
  auto f = [&](double a) { return std::pow(std::max(std::cos(n * a), 0.0), 1 + 1 / n) / B; };
  constexpr int sub = 8;
  const double dh = h / sub;
  for (int i = 0; i < sub; ++i) {
    const double k1 = f(alpha), k2 = f(alpha + dh / 2 * k1), k3 = f(alpha + dh / 2 * k2),
                 k4 = f(alpha + dh * k3);
    alpha += dh / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return alpha;
}

std::pair<double, double> clip_alpha(const SolitonSpec& spec, double lo, double hi, double r_cap) {
  const double n = spec.n;
  const double edge = pi / (2 * n);
  if (!(lo < hi)) throw DomainError("special Lagrangian: empty alpha range");
  if (lo <= -edge || hi >= edge)
    throw DomainError("special Lagrangian: alpha range touches the singular endpoint +-pi/(2n)");
  if (!(spec.B > 0)) throw DomainError("special Lagrangian needs B > 0");
  if (spec.B >= r_cap) throw DomainError("special Lagrangian: apex lies beyond the radius cap");
  const double limit = std::acos(std::pow(spec.B / r_cap, n)) / n;
  lo = std::max(lo, -limit), hi = std::min(hi, limit);
  if (!(lo < hi)) throw DomainError("special Lagrangian: range empty after radius cap");
  return {lo, hi};
}

}  // namespace

PlanarCurve sample_special_lagrangian(const SolitonSpec& spec, double alpha_lo, double alpha_hi,
                                      double spacing, double r_cap) {
  if (!(spacing > 0)) throw DomainError("special Lagrangian: spacing must be positive");
  std::tie(alpha_lo, alpha_hi) = clip_alpha(spec, alpha_lo, alpha_hi, r_cap);
  std::vector<double> alphas{alpha_lo};
  while (true) {
    const double next = advance_alpha(alphas.back(), spacing, spec.n, spec.B);
    if (next >= alpha_hi) break;
    alphas.push_back(next);
  }
  const double tail = std::abs(special_lagrangian_point(spec, alpha_hi) -
                               special_lagrangian_point(spec, alphas.back()));
  if (alphas.size() > 1 && tail < 0.5 * spacing) alphas.pop_back();
  alphas.push_back(alpha_hi);
  if (alphas.size() < std::size_t(PlanarCurve::min_nodes))
    throw MeshError("special Lagrangian: spacing too coarse for the alpha range");
  ComplexVector<double> nodes(static_cast<Eigen::Index>(alphas.size()));
  for (std::size_t i = 0; i < alphas.size(); ++i)
    nodes[static_cast<Eigen::Index>(i)] = special_lagrangian_point(spec, alphas[i]);
  return {std::move(nodes), Topology::open_arc};
}

PlanarCurve sample_special_lagrangian_nodes(const SolitonSpec& spec, double alpha_lo, double alpha_hi,
                                            Eigen::Index count) {
  if (count < PlanarCurve::min_nodes) throw DomainError("special Lagrangian: too few nodes requested");
  std::tie(alpha_lo, alpha_hi) = clip_alpha(spec, alpha_lo, alpha_hi, 1e300);
  // arclength by composite Simpson on ds/dalpha = B cos(n alpha)^(-1-1/n)
  const double n = spec.n;
  auto speed = [&](double a) { return spec.B * std::pow(std::cos(n * a), -1 - 1 / n); };
  constexpr int panels = 20000;
  const double da = (alpha_hi - alpha_lo) / panels;
  double length = speed(alpha_lo) + speed(alpha_hi);
  for (int i = 1; i < panels; ++i) length += (i % 2 ? 4 : 2) * speed(alpha_lo + i * da);
  length *= da / 3;
  const double h = length / double(count - 1);
  ComplexVector<double> nodes(count);
  double alpha = alpha_lo;
  nodes[0] = special_lagrangian_point(spec, alpha);
  for (Eigen::Index i = 1; i + 1 < count; ++i) {
    alpha = advance_alpha(alpha, h, n, spec.B);
    nodes[i] = special_lagrangian_point(spec, alpha);
  }
  nodes[count - 1] = special_lagrangian_point(spec, alpha_hi);
  return {std::move(nodes), Topology::open_arc};
}

std::pair<SolitonSpec, SolitonSpec> asymptotes_of(const SolitonSpec& spec) {
  if (spec.kind != SolitonKind::special_lagrangian) throw DomainError("asymptotes_of: not a special Lagrangian");
  spec.validate();
  return {SolitonSpec::cone(spec.n, spec.k - 1, spec.theta_bar), SolitonSpec::cone(spec.n, spec.k, spec.theta_bar)};
}

PlanarCurve grim_reaper(double x_lo, double x_hi, double spacing) {
  if (!(x_lo < x_hi) || x_lo <= -pi / 2 || x_hi >= pi / 2)
    throw DomainError("grim_reaper: range must lie strictly inside (-pi/2, pi/2)");
  if (!(spacing > 0)) throw DomainError("grim_reaper: spacing must be positive");
  // arclength from x = 0 is the inverse Gudermannian; nodes at half-integer multiples of the spacing
  auto arclength = [](double x) { return std::asinh(std::tan(x)); };
  auto abscissa = [](double s) { return std::atan(std::sinh(s)); };
  const double s_lo = arclength(x_lo), s_hi = arclength(x_hi);
  std::vector<std::complex<double>> pts{grim_reaper_point(x_lo)};
  for (long j = std::lround(std::ceil(s_lo / spacing - 0.5)); (j + 0.5) * spacing < s_hi; ++j) {
    const double s = (j + 0.5) * spacing;
    if (s - s_lo < 0.5 * spacing || s_hi - s < 0.5 * spacing) continue;
    pts.push_back(grim_reaper_point(abscissa(s)));
  }
  pts.push_back(grim_reaper_point(x_hi));
  return {to_nodes(pts), Topology::open_arc};
}

ShootingState soliton_rhs(const ShootingState& state, double lambda, int n, double r_floor) {
  const double r2 = std::norm(state.position);
  if (!(std::sqrt(r2) > r_floor))
    throw SingularRadiusError("soliton_rhs: trajectory reached radius " + std::to_string(std::sqrt(r2)));
  const std::complex<double> normal = I * state.direction;
  const double radial = std::real(std::conj(normal) * state.position);
  const double kappa = -(lambda - (n - 1) / r2) * radial;
  ShootingState d;
  d.position = state.direction;
  d.direction = kappa * normal;
  d.s = 1;
  d.swept_angle = std::imag(std::conj(state.position) * state.direction) / r2;
  return d;
}

SolitonTrace integrate_soliton(const ShootingState& start, double lambda, int n, double max_length,
                               const IntegrationOptions& options) {
  if (!(max_length > 0)) throw DomainError("integrate_soliton: max_length must be positive");
  if (std::abs(std::abs(start.direction) - 1) > 1e-9) throw DomainError("integrate_soliton: direction not unit");
  if (start.position == std::complex<double>(0)) throw DomainError("integrate_soliton: start at the origin");
  auto field = [&](const ShootingState& y) { return soliton_rhs(y, lambda, n, options.r_floor); };
  Recorder rec(options.record_spacing);
  rec.push(start.position, true);
  ShootingState y = start;
  while (y.s - start.s < max_length) {
    const double h = std::min(options.step_factor * std::abs(y.position), max_length - (y.s - start.s));
    y = rk4(y, h, field);
    rec.push(y.position, y.s - start.s >= max_length);
  }
  return {PlanarCurve(to_nodes(rec.points()), Topology::open_arc), y};
}

double shrinker_window_edge(int n, double lambda) {
  if (!(lambda > 0)) throw DomainError("shrinker window needs lambda > 0");
  return std::sqrt(n / lambda);
}

double period_angle(double r_apsis, double lambda, int n, double step_factor) {
  const double edge = shrinker_window_edge(n, lambda);
  if (!(r_apsis > 0 && r_apsis < edge))
    throw DomainError("period_angle: apsis radius outside the oscillatory window (0, sqrt(n/lambda))");
  ShootingState start;
  start.position = {r_apsis, 0};
  start.direction = I;
  auto field = [&](const ShootingState& y) { return soliton_rhs(y, lambda, n); };
  const ApsisSearch hit = march_apsides(start, 1, step_factor, 1e3 * edge, field, nullptr);
  if (!hit.found) throw DomainError("period_angle: no returning apsis (non-oscillatory start)");
  return hit.state.swept_angle;
}

SolitonCurve find_shrinker(int p, int q, int n, double record_spacing) {
  SolitonSpec spec;
  spec.kind = SolitonKind::shrinker;
  spec.n = n, spec.p = p, spec.q = q, spec.lambda = 1;
  spec.validate();
  const double target = 2 * pi * p / q;
  const double edge = shrinker_window_edge(n);

  // period angle increases with the apsis radius across the window
  double hi = edge * (1 - 1e-6);
  if (!(period_angle(hi, 1, n) > target)) throw NoFitError("find_shrinker: target above the window's range");
  double lo = edge * 1e-2;
  while (period_angle(lo, 1, n) >= target) {
    lo /= 4;
    if (lo < 1e-12 * edge) throw NoFitError("find_shrinker: could not bracket the apsis radius");
  }
  while (hi - lo > std::min(1e-10, 1e-8 * lo)) {
    const double mid = (lo + hi) / 2;
    (period_angle(mid, 1, n) < target ? lo : hi) = mid;
  }
  spec.r_apsis = (lo + hi) / 2;

  ShootingState start;
  start.position = {spec.r_apsis, 0};
  start.direction = I;
  double step = 1e-3;
  for (int attempt = 0; attempt < 4; ++attempt, step /= 2) {
    Recorder rec(record_spacing);
    rec.push(start.position, true);
    auto field = [&](const ShootingState& y) { return soliton_rhs(y, 1, n); };
    const ApsisSearch hit = march_apsides(start, q, step, 1e4 * edge * q, field, &rec);
    if (!hit.found) throw NoFitError("find_shrinker: trajectory failed to close");
    const double gap = std::abs(hit.state.position - start.position);
    const double dgap = std::abs(hit.state.direction - start.direction);
    if (gap <= 1e-6 && dgap <= 1e-6) {
      rec.drop_tail_near(start.position, 0.3 * record_spacing * std::min(1.0, spec.r_apsis));
      return {spec, PlanarCurve(to_nodes(rec.points()), Topology::closed_loop), gap, dgap, 0};
    }
  }
  throw NoFitError("find_shrinker: closure gap above 1e-6 after refinement");
}

namespace {

ShootingState expander_branch(double d, int n, double step_factor, Recorder* rec) {
  ShootingState y;
  y.position = {d, 0};
  y.direction = I;
  if (rec) rec->push(y.position, true);
  auto field = [&](const ShootingState& s) { return soliton_rhs(s, -1, n); };
  const double r_out = 1e3 * d;
  while (std::abs(y.position) < r_out) {
    const double r = std::abs(y.position);
    const double radial = std::real(std::conj(I * y.direction) * y.position);
    // <gamma, N> decays like exp(-r^2/2); once it underflows the rest of the branch is straight
    if (std::abs(radial) < 1e-17 * r && std::real(std::conj(y.position) * y.direction) > 0) break;
    // explicit stability also needs h * r = O(1) because <gamma, N>' = -kappa <gamma, T>
    y = rk4(y, std::min(step_factor * r, 0.1 / r), field);
    if (rec) rec->push(y.position, std::abs(y.position) >= r_out);
  }
  if (std::abs(y.position) < r_out) {
    const double along = std::real(std::conj(y.direction) * y.position);
    const double reach = -along + std::sqrt(along * along - std::norm(y.position) + r_out * r_out);
    if (rec) {
      for (double t = 0.02 * std::abs(y.position); t < reach; t += 0.02 * std::abs(y.position + t * y.direction))
        rec->push(y.position + t * y.direction, true);
    }
    y.position += reach * y.direction;
    y.s += reach;
    if (rec) rec->push(y.position, true);
  }
  return y;
}

}  // namespace

double expander_span(double d, int n, double step_factor) {
  if (!(d > 0)) throw DomainError("expander_span: apsis distance must be positive");
  const ShootingState end = expander_branch(d, n, step_factor, nullptr);
  return 2 * std::arg(end.direction);
}

SolitonCurve find_expander(double alpha, int n) {
  SolitonSpec spec;
  spec.kind = SolitonKind::expander;
  spec.n = n, spec.alpha = alpha, spec.lambda = -1;
  spec.validate();
  // span decreases from pi/n (d -> 0) toward 0 (d -> infinity); bisect in log d
  double lo = 1e-4, hi = 1e3;
  if (!(expander_span(lo, n) > alpha && expander_span(hi, n) < alpha))
    throw NoFitError("find_expander: angle not bracketed by apsis distances in [1e-4, 1e3]");
  for (int it = 0; it < 200 && hi / lo - 1 > 1e-14; ++it) {
    const double mid = std::sqrt(lo * hi);
    (expander_span(mid, n) > alpha ? lo : hi) = mid;
  }
  spec.r_apsis = std::sqrt(lo * hi);
  Recorder rec(0.02, true);
  expander_branch(spec.r_apsis, n, 1e-3, &rec);
  const auto& upper = rec.points();
  std::vector<std::complex<double>> pts;
  for (auto it = upper.rbegin(); it + 1 != upper.rend(); ++it) pts.push_back(std::conj(*it));
  pts.insert(pts.end(), upper.begin(), upper.end());
  PlanarCurve curve(to_nodes(pts), Topology::open_arc);
  const double span = measure_asymptote_span(curve);
  return {spec, std::move(curve), 0, 0, span};
}

double measure_asymptote_span(const PlanarCurve& curve) {
  if (curve.closed()) throw DomainError("measure_asymptote_span: needs an open arc");
  const Eigen::Index last = curve.size() - 1;
  const std::complex<double> out_end = curve[last] - curve[last - 1];
  const std::complex<double> out_start = curve[0] - curve[1];
  return std::abs(std::arg(out_end / out_start));
}

double soliton_residual(const PlanarCurve& curve, double lambda, int n) {
  const auto diag = curvature_and_radial(curve);
  double worst = 0;
  for (Eigen::Index i = 0; i < curve.size(); ++i) {
    if (!curve.closed() && (i == 0 || i + 1 == curve.size())) continue;
    const double r2 = diag.r[i] * diag.r[i];
    worst = std::max(worst, std::abs(diag.kappa[i] + (lambda - (n - 1) / r2) * diag.radial[i]));
  }
  return worst;
}

SolitonTrace integrate_translator(const ShootingState& start, std::complex<double> velocity, int n,
                                  double max_length, double step_factor) {
  auto field = [&](const ShootingState& y) {
    const double r2 = std::norm(y.position);
    if (!(r2 > 1e-24)) throw SingularRadiusError("integrate_translator: trajectory hit the origin");
    const std::complex<double> normal = I * y.direction;
    const double radial = std::real(std::conj(normal) * y.position);
    const double kappa = std::real(std::conj(normal) * velocity) + (n - 1) * radial / r2;
    ShootingState d;
    d.position = y.direction;
    d.direction = kappa * normal;
    d.s = 1;
    d.swept_angle = std::imag(std::conj(y.position) * y.direction) / r2;
    return d;
  };
  std::vector<std::complex<double>> pts{start.position};
  ShootingState y = start;
  while (y.s - start.s < max_length) {
    y = rk4(y, std::min(step_factor * std::abs(y.position), max_length - (y.s - start.s)), field);
    pts.push_back(y.position);
  }
  return {PlanarCurve(to_nodes(pts), Topology::open_arc), y};
}

double translator_obstruction(const PlanarCurve& curve, std::complex<double> velocity, int n) {
  if (n == 1) return 0;
  const auto fr = frame(curve);
  double worst = 0;
  for (Eigen::Index i = 0; i < curve.size(); ++i) {
    const double planar = std::abs(std::real(std::conj(fr.normal[i]) * velocity));
    const double orbital = std::abs(std::imag(std::conj(velocity) * curve[i])) / std::abs(curve[i]);
    worst = std::max({worst, planar, orbital});
  }
  return worst;
}

TranslatorSweep translator_sweep(int n, int radial_samples, int angle_samples) {
  TranslatorSweep out;
  out.min_obstruction = std::numeric_limits<double>::infinity();
  for (int a = 0; a < radial_samples; ++a) {
    const double d = 0.5 * std::pow(2.0, a);
    for (int b = 0; b < angle_samples; ++b) {
      // tangent directions strictly between radial ones
      const double tau = pi * (b + 0.5) / angle_samples;
      for (int c = 0; c < angle_samples; ++c) {
        const double psi = 2 * pi * c / angle_samples;
        ShootingState start;
        start.position = {d, 0};
        start.direction = std::polar(1.0, tau);
        try {
          const auto trace = integrate_translator(start, std::polar(1.0, psi), n, 2.0);
          out.min_obstruction = std::min(out.min_obstruction, translator_obstruction(trace.curve, std::polar(1.0, psi), n));
          ++out.samples;
        } catch (const SingularRadiusError&) {
        }
      }
    }
  }
  return out;
}

}  // namespace lmcf

// One pass/fail line per acceptance criterion. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lmcf/blowup.hpp"
#include "lmcf/commands.hpp"
#include "lmcf/errors.hpp"
#include "lmcf/flow.hpp"
#include "lmcf/solitons.hpp"
#include "lmcf/symmetry.hpp"

using namespace lmcf;

namespace {

constexpr double pi = 3.14159265358979323846;
using cplx = std::complex<double>;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double interior_max(const RealVector<double>& v) { return v.segment(1, v.size() - 2).cwiseAbs().maxCoeff(); }

// ---- shared runs ----

FlowConfig neves_config() {
  FlowConfig c;
  c.n = 2;
  c.boundary = Boundary::pinned_asymptotes;
  c.spacing = 2;
  c.relative_spacing = 0.1;
  c.collar_radius = 80;
  c.r_floor = 2e-5;
  c.t_max = 10;
  return c;
}

FlowTrajectory neves_run() {
  const FlowConfig c = neves_config();
  return evolve(remesh(neves_initial(0.6 * pi, 2, 400, 100), c), c);
}

FlowConfig circle_config() {
  FlowConfig c;
  c.n = 2;
  c.boundary = Boundary::closed;
  c.spacing = 0.02;
  c.r_floor = 0.02;
  return c;
}

// ---- criteria ----

Outcome static_special_lagrangians() {
  bool ok = true;
  double worst_order = 1e9, worst_final = 0;
  for (int n : {2, 3, 4})
    for (double B : {0.5, 1.0, 2.0}) {
      const auto spec = SolitonSpec::special_lagrangian(n, B, 0, 0);
      const double edge = 0.8 * pi / (2 * n);
      double prev = 0;
      for (Eigen::Index count : {500, 1000, 2000}) {
        const double v = interior_max(normal_velocity(sample_special_lagrangian_nodes(spec, -edge, edge, count), n));
        if (prev > 0) {
          const double order = std::log2(prev / v);
          worst_order = std::min(worst_order, order);
          ok = ok && order >= 1.8;
        }
        prev = v;
      }
      worst_final = std::max(worst_final, prev);
      ok = ok && prev <= 1e-3;
    }
  return {ok, fmt("max interior |v| at 2000 nodes %.2e (<= 1e-3), worst observed order %.3f (>= 1.8)", worst_final,
                  worst_order)};
}

Outcome angle_constancy() {
  double worst_sl = 0, worst_cone = 0;
  for (int n : {2, 3, 4})
    for (int k = 0; k < 2 * n; ++k)
      for (double tb : {0.0, 0.3, 1.2}) {
        const auto spec = SolitonSpec::special_lagrangian(n, 1.0, k, tb);
        const double edge = 0.8 * pi / (2 * n);
        const auto th = lagrangian_angle(sample_special_lagrangian_nodes(spec, -edge, edge, 2000), n).theta;
        for (Eigen::Index i = 0; i < th.size(); ++i) worst_sl = std::max(worst_sl, angle_distance(th[i], tb, pi));
        const auto cone = SolitonSpec::cone(n, k, tb);
        const double abar = cone_argument(cone);
        const auto tc = lagrangian_angle(sample_cone(cone, 0.5, 3, 0.01), n).theta;
        for (Eigen::Index i = 0; i < tc.size(); ++i)
          worst_cone = std::max(worst_cone, angle_distance(tc[i], n * abar, pi));
      }
  return {worst_sl <= 1e-4 && worst_cone <= 1e-10,
          fmt("special Lagrangian |theta - theta_bar| %.2e (<= 1e-4), cone |theta - n alpha| %.2e (<= 1e-10)",
              worst_sl, worst_cone)};
}

struct CircleRuns {
  FlowTrajectory standard;
  std::vector<double> errors;  // radius error at t = 0.2 for N = 100, 200, 400
  std::vector<double> dts;
};

CircleRuns circle_runs() {
  CircleRuns out;
  out.standard = evolve(circle(1.0, 314), circle_config());
  // constant node count: spacing graded with r so the mesh shrinks with the circle
  for (int N : {100, 200, 400}) {
    FlowConfig c = circle_config();
    c.spacing = 2 * pi / N;
    c.relative_spacing = 2 * pi / N;
    c.r_floor = 0.01;
    c.t_max = 0.2;
    const auto traj = evolve(circle(1.0, N), c);
    const auto& cu = traj.snapshots.back().curve;
    double err = 0;
    for (Eigen::Index i = 0; i < cu.size(); ++i) err = std::max(err, std::abs(std::abs(cu[i]) - std::sqrt(1 - 0.8)));
    out.errors.push_back(err);
    out.dts.push_back(c.cfl * c.spacing * c.spacing);
  }
  return out;
}

Outcome circle_benchmark(const CircleRuns& runs) {
  const auto rep = classify_singularity_rate(runs.standard);
  const double rel = std::abs(rep.T_est - 0.25) / 0.25;
  std::vector<double> orders;
  for (std::size_t i = 1; i < runs.errors.size(); ++i)
    orders.push_back(std::log(runs.errors[i - 1] / runs.errors[i]) / std::log(runs.dts[i - 1] / runs.dts[i]));
  const bool ok = rep.triggered && rel <= 0.01 && orders.size() == 2 && orders[0] >= 1.8 && orders[1] >= 1.8;
  return {ok, fmt("T_est %.5f (rel err %.2e <= 1e-2); radius errors %.2e %.2e %.2e, observed order in dt %.3f %.3f "
                  "(>= 1.8)",
                  rep.T_est, rel, runs.errors[0], runs.errors[1], runs.errors[2], orders[0], orders[1])};
}

Outcome anciaux() {
  bool ok = true;
  std::string bad;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 3}, {6, 13}, {5, 13}}) {
    const auto s = find_shrinker(p, q, 2);
    const bool good = s.closure_gap <= 1e-6 && std::abs(winding_number(s.curve)) == p &&
                      curvature_maxima_count(s.curve).count == q;
    if (!good) bad += fmt(" (%d,%d)", p, q);
    ok = ok && good;
  }
  // the atlas against a brute-force enumeration of the window
  std::vector<std::pair<int, int>> expected;
  for (int q = 1; q <= 13; ++q)
    for (int p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1 && 4 * p > q && 2 * p < q) expected.emplace_back(p, q);
  const auto pairs = atlas_pairs(2, 13);
  const bool same = std::set(pairs.begin(), pairs.end()) == std::set(expected.begin(), expected.end()) &&
                    pairs.size() == expected.size();
  std::vector<std::future<bool>> jobs;
  for (auto [p, q] : pairs)
    jobs.push_back(std::async(std::launch::async, [p = p, q = q] {
      try {
        const auto s = find_shrinker(p, q, 2);
        return s.closure_gap <= 1e-6 && std::abs(winding_number(s.curve)) == p &&
               curvature_maxima_count(s.curve).count == q;
      } catch (const Error&) {
        return false;
      }
    }));
  int solved = 0;
  for (auto& j : jobs) solved += j.get();
  ok = ok && same && solved == int(pairs.size());
  return {ok, fmt("figure curves%s; atlas %zu pairs (expected %zu, identical: %s), %d reconstructed with matching "
                  "winding and maxima",
                  bad.empty() ? " ok" : (" failed:" + bad).c_str(), pairs.size(), expected.size(),
                  same ? "yes" : "no", solved)};
}

Outcome expanders() {
  double worst = 0;
  for (double f : {0.2, 0.4, 0.7}) {
    const double alpha = f * pi / 2;
    worst = std::max(worst, std::abs(find_expander(alpha, 2).measured_span - alpha));
  }
  return {worst <= 1e-6, fmt("worst span error %.2e (<= 1e-6)", worst)};
}

Outcome singularity_formation(const FlowTrajectory& traj) {
  const auto rep = classify_singularity_rate(traj);
  const auto& rows = traj.summary;
  const double final_r = rows.back().min_r;
  // last decade of min r: from the first row below 10x the final value onward
  std::size_t start = 0;
  while (start < rows.size() && rows[start].min_r >= 10 * final_r) ++start;
  // node-level jitter from remeshing, reported but not graded
  int rises = 0;
  double worst_rise = 0;
  for (std::size_t i = start + 1; i < rows.size(); ++i)
    if (rows[i].min_r > rows[i - 1].min_r)
      ++rises, worst_rise = std::max(worst_rise, rows[i].min_r / rows[i - 1].min_r - 1);
  // the trend: 20 log-spaced samples per decade of T - t across that stretch
  const double T = rep.T_est;
  const double g0 = T - rows[std::min(start, rows.size() - 1)].t, g1 = T - rows.back().t;
  bool monotone = g0 > g1 && g1 > 0;
  int samples = 0;
  double prev = std::numeric_limits<double>::infinity();
  std::size_t i = start;
  for (int j = 0; monotone; ++j) {
    const double gap = g0 * std::pow(10.0, -j / 20.0);
    if (gap < g1) break;
    while (i + 1 < rows.size() && T - rows[i].t > gap) ++i;
    if (rows[i].min_r > prev) monotone = false;
    prev = rows[i].min_r;
    ++samples;
  }
  const bool ok = traj.termination == Termination::singularity_trigger && final_r < 1e-2 && monotone &&
                  rep.location_confirmed && std::abs(rep.location) < 1e-2;
  return {ok, fmt("T_est %.5f, final min r %.2e (< 1e-2) at |x| %.2e; last decade: %s over %d log-spaced samples "
                  "(%zu steps, %d node-level rises up to %.1e relative); sigma %.3f, type %s",
                  rep.T_est, final_r, std::abs(rep.location), monotone ? "non-increasing" : "NOT monotone", samples,
                  rows.size() - start, rises, worst_rise, rep.sigma, rep.type_evidence.c_str())};
}

struct TypeOne {
  std::vector<ConeFit> fits;
  BlowupReport report;
};

TypeOne type_one_fits(const FlowTrajectory& traj) {
  const double T = classify_singularity_rate(traj).T_est;
  const double top = type1_max_scale(traj, T);
  TypeOne out;
  for (double f : {0.25, 0.5, 1.0}) {
    const auto c = type1_rescale(traj, T, {f * top}).front();
    out.fits.push_back(fit_cone_pair(c, Annulus<double>{5, 10}, 2));
  }
  out.report = make_report(out.fits.back());
  return out;
}

Outcome type_one_structure(const TypeOne& t1) {
  bool ok = true;
  std::string s;
  for (std::size_t i = 0; i < t1.fits.size(); ++i) {
    const auto& f = t1.fits[i];
    ok = ok && std::abs(f.gap - pi / 2) <= 0.02;
    if (i > 0) {
      ok = ok && f.residual < t1.fits[i - 1].residual;
      ok = ok && angle_distance(branch_label(f.theta_bar, f.k, 2),
                                branch_label(t1.fits[i - 1].theta_bar, t1.fits[i - 1].k, 2), 4 * pi) <= 0.02;
    }
    s += fmt("%s[gap-pi/2 %+.4f, theta_bar %.4f, k %d, residual %.4f]", i ? " " : "", f.gap - pi / 2, f.theta_bar, f.k,
             f.residual);
  }
  return {ok, "scales T/4, T/2, T: " + s};
}

Outcome type_two_structure(const FlowTrajectory& traj, const TypeOne& t1) {
  const double T = classify_singularity_rate(traj).T_est;
  const auto r2 = type2_rescale(traj, T);
  const auto fit = fit_special_lagrangian(r2.curve, 2);
  const bool consistent = blowdown_consistency(t1.report, make_report(fit), 2);
  return {fit.residual <= 5e-2 && consistent,
          fmt("B %.5f, theta_bar %.4f, k %d, residual %.2e (<= 5e-2), |translation| %.1e, consistency %s", fit.B,
              fit.theta_bar, fit.k, fit.residual, std::abs(fit.translation), consistent ? "true" : "false")};
}

Outcome avoidance(const FlowTrajectory& neves) {
  FlowConfig c = circle_config();
  c.r_floor = 0.02;
  const auto inner = evolve(circle(1.0, 314), c);
  c.t_max = 0.3;
  const auto outer = evolve(circle(2.0, 628), c);
  const auto circles = avoidance_check(inner, outer);

  // a special Lagrangian inside the barrier's wedge, asymptotic to rays at 0.05 pi and 0.55 pi
  FlowConfig s = neves_config();
  s.t_max = neves.snapshots.back().t;
  const auto spec = SolitonSpec::special_lagrangian(2, 2, 1, 0.1 * pi);
  const double edge = pi / 4 * (1 - 1e-9);
  const auto l = remesh(sample_special_lagrangian(spec, -edge, edge, 0.5, 80), s);
  const auto still = evolve(l, s);
  const auto pair = avoidance_check(neves, still);
  return {circles.disjoint && pair.disjoint && inner.termination == Termination::singularity_trigger,
          fmt("circles: min separation %.4f at t %.4f over %d samples; barrier vs special Lagrangian: min separation "
              "%.4f at t %.4f over %d samples",
              circles.min_separation, circles.time_of_min, circles.samples, pair.min_separation, pair.time_of_min,
              pair.samples)};
}

double worst_angle_violation(const FlowTrajectory& traj) {
  double worst = 0;  // largest rise of max theta or drop of min theta between steps
  for (std::size_t i = 1; i < traj.summary.size(); ++i) {
    const auto& a = traj.summary[i - 1];
    const auto& b = traj.summary[i];
    worst = std::max({worst, b.theta_max - a.theta_max, a.theta_min - b.theta_min});
  }
  return worst;
}

FlowTrajectory figure_eight_run(int n, double centre, double a, double b, double t_max) {
  FlowConfig c = circle_config();
  c.n = n;
  c.spacing = 0.01;
  c.t_max = t_max;
  const auto eight = remesh(sample<double>(
                                [=](double t) { return cplx(centre + a * std::cos(t), b * std::sin(t) * std::cos(t)); },
                                0.0, 2 * pi, 600, Topology::closed_loop),
                            c);
  return evolve(eight, c);
}

Outcome angle_maximum_principle(const FlowTrajectory& circle_run, const FlowTrajectory& neves) {
  // graded closed runs: turning number 0 and no winding about the origin, so the lift of theta closes up
  struct Run {
    std::string name;
    FlowTrajectory traj;
  };
  std::vector<Run> runs;
  runs.push_back({"figure eight n=2", figure_eight_run(2, 4, 1, 1, 0.05)});
  runs.push_back({"skew figure eight n=3", figure_eight_run(3, 3, 1.2, 0.7, 0.05)});
  bool ok = true;
  std::string s;
  for (const auto& r : runs) {
    const double w = worst_angle_violation(r.traj);
    const auto& first = r.traj.snapshots.front().curve;
    ok = ok && w <= 1e-6 && r.traj.termination == Termination::t_max_reached && winding_number(first) == 0;
    s += fmt("%s%s: %zu steps, worst violation %.1e", s.empty() ? "" : "; ", r.name.c_str(), r.traj.summary.size(), w);
  }
  s += " (<= 1e-6)";
  // not graded: the circle's lifted theta gains 2 pi n per circuit, so its max and min sit on the lift seam
  s += fmt("; ungraded: circle %.1e at the seam", worst_angle_violation(circle_run));
  const auto& f = neves.summary.front();
  const auto& b = neves.summary.back();
  s += fmt(", open barrier theta range [%.4f, %.4f] -> [%.4f, %.4f]", f.theta_min, f.theta_max, b.theta_min,
           b.theta_max);
  return {ok, s};
}

std::vector<GroupAction> presets_under_test() {
  return {so_action(2),    so_action(3),       so_action(4), so_action(5), torus_action(3), torus_action(4),
          torus_action(5), su2_sym3_action(), circle_so_so_action(3, 4)};
}

Outcome symmetry_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(-2, 2);
  double equi = 0, quad = 0, circ = 0;
  bool cyclic_ok = true;
  std::string cyclic;
  for (const auto& a : presets_under_test()) {
    for (int trial = 0; trial < 100; ++trial) {
      CVector z(a.n_ambient);
      for (int i = 0; i < a.n_ambient; ++i) z[i] = {g(rng), g(rng)};
      Eigen::VectorXd c(a.group_dim());
      for (int i = 0; i < a.group_dim(); ++i) c[i] = u(rng);
      equi = std::max(equi, equivariance_residual(a, z, c));
      const auto mu = moment(a, z).coefficients;
      const double scale = 1 + mu.cwiseAbs().maxCoeff();
      quad = std::max(quad, (moment(a, 1.9 * z).coefficients - 1.9 * 1.9 * mu).cwiseAbs().maxCoeff() / scale);
      circ = std::max(circ, (moment(a, std::polar(1.0, 2.3) * z).coefficients - mu).cwiseAbs().maxCoeff() / scale);
    }
    if (a.expected_m) {
      const int m = *a.expected_m;
      const auto w = cyclic_symmetry_order(a, a.base_point, m, seed);
      const bool good = w.witnessed && w.residual <= 1e-6 && (2 * a.n_ambient) % m == 0;
      cyclic_ok = cyclic_ok && good;
      cyclic += fmt("%s%s m=%d %s", cyclic.empty() ? "" : ", ", a.name.c_str(), m, good ? "ok" : "FAILED");
    }
  }
  // SO(3): zero level exactly when Re z and Im z are dependent
  const auto so3 = so_action(3);
  int agree = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Eigen::VectorXd x(3), y(3);
    for (int i = 0; i < 3; ++i) x[i] = g(rng);
    if (trial % 2)
      y = g(rng) * x;
    else
      for (int i = 0; i < 3; ++i) y[i] = g(rng);
    Eigen::MatrixXd m(3, 2);
    m << x, y;
    const bool dependent = m.jacobiSvd().singularValues()[1] <= 1e-10 * m.norm();
    const CVector z = x.cast<cplx>() + cplx(0, 1) * y.cast<cplx>();
    agree += zero_level_and_isotropic(so3, z) == dependent;
  }
  CVector su(4);
  su << 1, 0, 0, 1;
  const double su_mu = moment(su2_sym3_action(), su).max_abs();
  const bool ok = equi <= 1e-10 && quad <= 1e-13 && circ <= 1e-13 && agree == 1000 && su_mu == 0 && cyclic_ok;
  return {ok, fmt("equivariance %.1e (<= 1e-10), quadratic %.1e, circle %.1e (<= 1e-13), SO(3) zero level agrees on "
                  "%d/1000, SU(2) mu(1,0,0,1) = %g, cyclic: %s",
                  equi, quad, circ, agree, su_mu, cyclic.c_str())};
}

Outcome ambient_angle(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1);
  std::uniform_real_distribution<double> ang(0, 2 * pi), rad(0.2, 3), u(-2, 2);
  double worst = 0;
  for (const auto& a : presets_under_test())
    for (int trial = 0; trial < 100; ++trial) {
      Eigen::VectorXd c(a.group_dim());
      for (int i = 0; i < a.group_dim(); ++i) c[i] = u(rng);
      worst = std::max(worst, ambient_angle_check(a, std::polar(rad(rng), ang(rng)), std::polar(1.0, ang(rng)),
                                                  group_element(a, c)));
    }
  return {worst <= 1e-8, fmt("worst mod-pi residual %.1e over 100 points on each of %zu presets (<= 1e-8)", worst,
                             presets_under_test().size())};
}

double height_at_zero(const PlanarCurve& c) {
  for (Eigen::Index i = 0; i + 1 < c.size(); ++i) {
    const double a = c[i].real(), b = c[i + 1].real();
    if ((a <= 0 && b > 0) || (a > 0 && b <= 0)) return c[i].imag() + a / (a - b) * (c[i + 1].imag() - c[i].imag());
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// midpoint of the two crossings of a horizontal line: drifts only if the curve moves sideways
double level_midpoint(const PlanarCurve& c, double level) {
  std::vector<double> xs;
  for (Eigen::Index i = 0; i + 1 < c.size(); ++i) {
    const double a = c[i].imag() - level, b = c[i + 1].imag() - level;
    if ((a <= 0 && b > 0) || (a > 0 && b <= 0)) xs.push_back(c[i].real() + a / (a - b) * (c[i + 1].real() - c[i].real()));
  }
  return xs.size() == 2 ? 0.5 * (xs[0] + xs[1]) : std::numeric_limits<double>::quiet_NaN();
}

Outcome grim_reaper_translation() {
  FlowConfig c;
  c.n = 1;
  c.boundary = Boundary::free_ends;
  c.r_floor = 0;
  c.spacing = 0.01;
  c.t_max = 0.5;
  c.snapshot_every = 50;
  // ends far enough out (y = log cos 1.55) that their influence has not reached the middle by t = 0.5
  const auto traj = evolve(grim_reaper(-1.55, 1.55, c.spacing), c);
  double worst_y = 0, worst_x = 0;
  double pt = 0, py = 0, px = 0;
  for (int j = 0; j <= 10; ++j) {
    const double t = std::min(0.05 * j, traj.snapshots.back().t);
    const auto cu = curve_at(traj, t);
    const double y = height_at_zero(cu), x = level_midpoint(cu, y - 0.5);
    if (j > 0) {
      worst_y = std::max(worst_y, std::abs((y - py) / (t - pt) + 1));
      worst_x = std::max(worst_x, std::abs((x - px) / (t - pt)));
    }
    pt = t, py = y, px = x;
  }
  const bool ok = traj.termination == Termination::t_max_reached && std::isfinite(worst_y) && worst_y <= 1e-3 &&
                  worst_x <= 1e-3;
  return {ok, fmt("mid-curve velocity error |v_y + 1| %.1e, |v_x| %.1e over ten intervals of [0, 0.5] (<= 1e-3)",
                  worst_y, worst_x)};
}

Outcome curvature_monitor(const FlowTrajectory& circle_run, const FlowTrajectory& neves) {
  const auto a = monitor_estimates(circle_run);
  const auto b = monitor_estimates(neves);
  const bool ok = a.finite && b.finite && a.h2_sup < 10 * a.h2_initial && b.h2_sup < 10 * b.h2_initial;
  return {ok, fmt("circle sup/initial %.3f, barrier sup/initial %.3f (< 10); property evidence only, no constant fitted",
                  a.h2_sup / a.h2_initial, b.h2_sup / b.h2_initial)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::uint64_t seed = 7;
  app.add_option("--seed", seed, "seed for the sampled symmetry checks");
  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  auto neves_future = std::async(std::launch::async, neves_run);
  auto circle_future = std::async(std::launch::async, circle_runs);

  int passed = 0, total = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    ++total;
    passed += o.pass;
    std::printf("criterion %2d  %s  %-28s %s\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  };
  auto guarded = [&](int id, const char* name, auto&& body) {
    try {
      report(id, name, body());
    } catch (const std::exception& e) {
      report(id, name, Outcome{false, std::string("threw: ") + e.what()});
    }
  };

  guarded(1, "static special Lagrangians", static_special_lagrangians);
  guarded(2, "angle constancy", angle_constancy);
  const CircleRuns circles = circle_future.get();
  guarded(3, "circle benchmark", [&] { return circle_benchmark(circles); });
  guarded(4, "Anciaux reconstruction", anciaux);
  guarded(5, "expander self-consistency", expanders);
  const FlowTrajectory neves = neves_future.get();
  guarded(6, "singularity formation", [&] { return singularity_formation(neves); });
  TypeOne t1;
  guarded(7, "Type I structure", [&] {
    t1 = type_one_fits(neves);
    return type_one_structure(t1);
  });
  guarded(8, "Type II structure", [&] { return type_two_structure(neves, t1); });
  guarded(9, "avoidance", [&] { return avoidance(neves); });
  guarded(10, "maximum principle for theta", [&] { return angle_maximum_principle(circles.standard, neves); });
  guarded(11, "symmetry suite", [&] { return symmetry_suite(seed); });
  guarded(12, "ambient angle binding", [&] { return ambient_angle(seed); });
  guarded(13, "grim reaper", grim_reaper_translation);
  guarded(14, "curvature-estimate monitor", [&] { return curvature_monitor(circles.standard, neves); });

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::printf("acceptance: %d/%d passed in %.0f s\n", passed, total, secs);
  return passed == total ? 0 : 1;
}

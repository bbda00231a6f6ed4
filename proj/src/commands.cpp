#include "lmcf/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "lmcf/errors.hpp"

namespace lmcf {

namespace {

constexpr double pi = std::numbers::pi;

void note(const RunConfig& rc, const std::string& msg) {
  if (rc.verbose) std::cerr << "[lmcf] " << msg << '\n';
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

double finite_or(double v, double fallback) { return std::isfinite(v) ? v : fallback; }

double translator_residual(const PlanarCurve& curve, std::complex<double> velocity) {
  const auto fr = frame(curve);
  const auto diag = curvature_and_radial(curve);
  double worst = 0;
  for (Eigen::Index i = 1; i + 1 < curve.size(); ++i)
    worst = std::max(worst, std::abs(diag.kappa[i] - std::real(std::conj(velocity) * fr.normal[i])));
  return worst;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double view_of(const std::vector<PlanarCurve>& curves, double cap = std::numeric_limits<double>::infinity()) {
  double r = 0;
  for (const auto& c : curves) r = std::max(r, c.max_radius());
  return std::min(std::max(r * 1.1, 1e-12), cap);
}

}  // namespace

std::vector<std::pair<int, int>> atlas_pairs(int n, int q_max) {
  std::vector<std::pair<int, int>> out;
  for (int q = 1; q <= q_max; ++q)
    for (int p = 1; p < q; ++p)
      if (shrinker_admissible(p, q, n)) out.emplace_back(p, q);
  return out;
}

// ---------------------------------------------------------------- soliton

Json cmd_soliton(const RunConfig& rc, const fs::path& out) {
  const SolitonSection& x = rc.soliton;
  const SolitonKind kind = soliton_kind_from_string(x.kind);
  fs::create_directories(out);
  Json report{{"command", "soliton"}};
  PlanarCurve curve = circle(1.0, 16);
  double lambda = 0;
  std::vector<PlanarCurve> extra;
  switch (kind) {
    case SolitonKind::cone: {
      const auto spec = SolitonSpec::cone(x.n, x.k, x.theta_bar);
      curve = sample_cone(spec, x.r_min, x.r_max, x.spacing);
      report["spec"] = to_json(spec);
      report["argument"] = cone_argument(spec);
      break;
    }
    case SolitonKind::special_lagrangian: {
      const auto spec = SolitonSpec::special_lagrangian(x.n, x.B, x.k, x.theta_bar);
      const double edge = (1 - x.alpha_margin) * pi / (2 * x.n);
      curve = sample_special_lagrangian(spec, -edge, edge, x.spacing);
      report["spec"] = to_json(spec);
      const auto [lo, hi] = asymptotes_of(spec);
      report["asymptotes"] = Json::array({to_json(lo), to_json(hi)});
      for (const auto& cone : {lo, hi}) extra.push_back(sample_cone(cone, 1e-3, curve.max_radius(), curve.max_radius() / 64));
      break;
    }
    case SolitonKind::shrinker: {
      note(rc, "shooting shrinker (" + std::to_string(x.p) + "," + std::to_string(x.q) + ")");
      const auto sc = find_shrinker(x.p, x.q, x.n);
      curve = sc.curve;
      lambda = 1;
      report["spec"] = to_json(sc.spec);
      report["closure_gap"] = sc.closure_gap;
      report["direction_gap"] = sc.direction_gap;
      report["winding_number"] = winding_number(curve);
      const auto maxima = curvature_maxima_count(curve);
      report["curvature_maxima"] = maxima.count;
      break;
    }
    case SolitonKind::expander: {
      note(rc, "shooting expander");
      const auto sc = find_expander(x.alpha, x.n);
      curve = sc.curve;
      lambda = -1;
      report["spec"] = to_json(sc.spec);
      report["measured_span"] = sc.measured_span;
      report["span_error"] = sc.measured_span - x.alpha;
      break;
    }
    case SolitonKind::grim_reaper: {
      curve = grim_reaper(-x.x_max, x.x_max, x.spacing);
      report["spec"] = {{"kind", "grim-reaper"}, {"n", 1}};
      report["translator_residual"] = translator_residual(curve, {0, -1});
      break;
    }
  }
  if (kind != SolitonKind::grim_reaper) report["residual"] = soliton_residual(curve, lambda, x.n);
  report["nodes"] = curve.size();
  report["topology"] = to_string(curve.topology());
  write_curve_csv(out / "curve.csv", curve, kind == SolitonKind::grim_reaper ? 1 : x.n);
  if (x.figure) {
    std::vector<SvgLayer> layers{{{curve}, palette(0), 1.5, x.kind}};
    if (!extra.empty()) layers.push_back({extra, "#999999", 1.0, "asymptotes"});
    const double cap = kind == SolitonKind::expander ? 20 * finite_or(report["spec"].value("r_apsis", 1.0), 1.0) : 1e9;
    write_svg(out / "figure.svg", layers, view_of({curve}, cap), x.kind);
  }
  write_report(out, "report", report);
  return report;
}

// ---------------------------------------------------------------- flow

Boundary default_boundary(const FlowSection& s) {
  if (s.boundary_set) return s.config.boundary;
  if (s.initial == "neves" || s.initial == "special-lagrangian") return Boundary::pinned_asymptotes;
  if (s.initial == "grim-reaper") return Boundary::free_ends;
  if (s.initial == "file") return s.topology == "closed-loop" ? Boundary::closed : Boundary::free_ends;
  return Boundary::closed;
}

PlanarCurve flow_initial_curve(const FlowSection& s) {
  const int n = s.config.n;
  if (s.initial == "circle") return circle(s.radius, s.samples);
  if (s.initial == "neves") return neves_initial(s.beta, n, s.samples, s.r_max);
  if (s.initial == "special-lagrangian") {
    const auto spec = SolitonSpec::special_lagrangian(n, s.B, s.k, s.theta_bar);
    const double edge = pi / (2 * n) * (1 - 1e-9);
    return sample_special_lagrangian(spec, -edge, edge, s.config.spacing, s.r_max);
  }
  if (s.initial == "shrinker") return find_shrinker(s.p, s.q, n).curve;
  if (s.initial == "grim-reaper") return grim_reaper(-s.x_max, s.x_max, s.config.spacing);
  if (s.initial == "file") return read_curve_csv(fs::path(s.curve_file), topology_from_string(s.topology));
  throw DomainError("unknown initial curve '" + s.initial + "'");
}

std::vector<std::size_t> choose_snapshots(const FlowTrajectory& traj, int budget) {
  const std::size_t count = traj.snapshots.size();
  if (count <= static_cast<std::size_t>(std::max(budget, 2))) {
    std::vector<std::size_t> all(count);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  const double t0 = traj.snapshots.front().t, t1 = traj.snapshots.back().t;
  std::vector<double> times;
  for (const auto& s : traj.snapshots) times.push_back(s.t);
  auto nearest = [&times](double t) {
    const auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.end()) return times.size() - 1;
    if (it == times.begin()) return std::size_t(0);
    const std::size_t j = static_cast<std::size_t>(it - times.begin());
    return t - times[j - 1] < times[j] - t ? j - 1 : j;
  };
  std::set<std::size_t> pick{0, count - 1};
  const int half = std::max(1, (budget - 2) / 2);
  for (int i = 1; i <= half; ++i) pick.insert(nearest(t0 + (t1 - t0) * i / (half + 1)));
  // log-spaced in the time left before the end
  double smallest = t1 - t0;
  for (std::size_t j = 0; j + 1 < count; ++j)
    if (t1 - times[j] > 0) smallest = std::min(smallest, t1 - times[j]);
  const double lo = std::log(smallest), hi = std::log(std::max(t1 - t0, smallest));
  for (int i = 0; i < half; ++i) pick.insert(nearest(t1 - std::exp(hi + (lo - hi) * i / std::max(half - 1, 1))));
  return {pick.begin(), pick.end()};
}

void save_trajectory(const FlowTrajectory& traj, const fs::path& dir, int budget, const Json& extra) {
  fs::create_directories(dir / "snapshots");
  Json snaps = Json::array();
  for (std::size_t i : choose_snapshots(traj, budget)) {
    const FlowState& s = traj.snapshots[i];
    char name[64];
    std::snprintf(name, sizeof name, "snap_%06zu.csv", i);
    write_curve_csv(dir / "snapshots" / name, s.curve, traj.config.n);
    snaps.push_back({{"t", s.t}, {"step", s.step_index}, {"file", std::string("snapshots/") + name},
                     {"nodes", s.curve.size()}});
  }
  // summary thinned to at most about 20000 rows, keeping the final stretch intact
  std::ofstream sum(dir / "summary.csv", std::ios::binary);
  sum << "t,max_kappa,min_r,theta_min,theta_max,h2_ratio,a2_ratio,min_r_x,min_r_y,nodes\n";
  const std::size_t rows = traj.summary.size();
  const std::size_t stride = std::max<std::size_t>(1, rows / 20000);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i % stride != 0 && i + 2000 < rows) continue;
    const SummaryRow& r = traj.summary[i];
    sum << fmt(r.t) << ',' << fmt(r.max_kappa) << ',' << fmt(r.min_r) << ',' << fmt(r.theta_min) << ','
        << fmt(r.theta_max) << ',' << fmt(r.h2_ratio) << ',' << fmt(r.a2_ratio) << ',' << fmt(r.min_r_point.real())
        << ',' << fmt(r.min_r_point.imag()) << ',' << r.nodes << '\n';
  }
  Json meta = extra.is_object() ? extra : Json::object();
  meta["config"] = to_json(traj.config);
  meta["topology"] = to_string(traj.snapshots.front().curve.topology());
  meta["termination"] = to_string(traj.termination);
  meta["message"] = traj.message;
  meta["snapshots"] = snaps;
  meta["steps"] = rows ? static_cast<long>(rows - 1) : 0L;
  write_json(dir / "trajectory.json", meta);
}

FlowTrajectory load_trajectory(const fs::path& dir, Json* meta_out) {
  const fs::path file = dir / "trajectory.json";
  if (!fs::exists(file)) throw DomainError("no trajectory.json in " + dir.string());
  const Json meta = read_json(file);
  std::vector<std::string> failures;
  FlowTrajectory traj;
  traj.config = flow_config_from_json(meta.at("config"), failures);
  if (!failures.empty()) throw ValidationError(failures);
  const Topology topology = topology_from_string(meta.at("topology"));
  for (const Json& s : meta.at("snapshots")) {
    PlanarCurve c = read_curve_csv(dir / s.at("file").get<std::string>(), topology);
    traj.snapshots.push_back(make_state(std::move(c), traj.config.n, s.at("t"), s.at("step")));
  }
  const std::string term = meta.at("termination");
  for (auto t : {Termination::t_max_reached, Termination::singularity_trigger, Termination::mesh_failure,
                 Termination::step_limit})
    if (to_string(t) == term) traj.termination = t;
  traj.message = meta.value("message", "");
  std::ifstream sum(dir / "summary.csv", std::ios::binary);
  std::string line;
  std::getline(sum, line);
  while (std::getline(sum, line)) {
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> v;
    while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
    if (v.size() != 10) throw ValidationError({"summary.csv: malformed row"});
    SummaryRow r;
    r.t = v[0];
    r.max_kappa = v[1];
    r.min_r = v[2];
    r.theta_min = v[3];
    r.theta_max = v[4];
    r.h2_ratio = v[5];
    r.a2_ratio = v[6];
    r.min_r_point = {v[7], v[8]};
    r.nodes = static_cast<long>(v[9]);
    traj.summary.push_back(r);
  }
  if (meta_out) *meta_out = meta;
  return traj;
}

Json cmd_flow(const RunConfig& rc, const fs::path& out) {
  FlowSection s = rc.flow;
  s.config.boundary = default_boundary(s);
  PlanarCurve initial = flow_initial_curve(s);
  if (s.initial == "neves" || s.initial == "special-lagrangian" || s.initial == "shrinker")
    initial = remesh(initial, s.config);
  note(rc, "evolving " + s.initial + " with " + std::to_string(initial.size()) + " nodes");
  const FlowTrajectory traj = evolve(initial, s.config);
  note(rc, "finished: " + to_string(traj.termination));

  Json report{{"command", "flow"}, {"initial", s.initial}, {"termination", to_string(traj.termination)},
              {"message", traj.message}, {"steps", static_cast<long>(traj.summary.size()) - 1},
              {"final", to_json(traj.summary.back())}, {"config", to_json(s.config)}};
  if (traj.termination == Termination::singularity_trigger) {
    const SingularityReport sr = classify_singularity_rate(traj);
    report["singularity"] = to_json(sr);
  } else {
    report["singularity"] = to_json(SingularityReport{});
  }
  const MonitorReport mon = monitor_estimates(traj);
  report["monitor"] = {{"h2_initial", mon.h2_initial}, {"h2_sup", mon.h2_sup},   {"a2_initial", mon.a2_initial},
                       {"a2_sup", mon.a2_sup},         {"finite", mon.finite},   {"violation", mon.violation}};
  double th_lo = traj.summary.front().theta_min, th_hi = traj.summary.front().theta_max;
  for (const auto& r : traj.summary) th_lo = std::min(th_lo, r.theta_min), th_hi = std::max(th_hi, r.theta_max);
  report["theta_range"] = {th_lo, th_hi};

  save_trajectory(traj, out, s.max_snapshot_files,
                  {{"initial", s.initial}, {"singularity", report["singularity"]}});

  std::vector<PlanarCurve> mid;
  const auto idx = choose_snapshots(traj, 8);
  for (std::size_t i : idx) mid.push_back(traj.snapshots[i].curve);
  const double view = s.initial == "neves" || s.initial == "special-lagrangian" ? 4.0 : view_of({initial});
  write_svg(out / "figure.svg",
            {{{initial}, palette(0), 1.5, "initial"}, {mid, "#aaaaaa", 0.8, "snapshots"},
             {{traj.snapshots.back().curve}, palette(1), 1.5, "final"}},
            view, "flow: " + s.initial);
  write_report(out, "report", report);
  return report;
}

// ---------------------------------------------------------------- blowup

Json cmd_blowup(const RunConfig& rc, const fs::path& out) {
  const BlowupSection& b = rc.blowup;
  if (b.trajectory.empty()) throw DomainError("blowup: no trajectory directory given");
  Json meta;
  const FlowTrajectory traj = load_trajectory(b.trajectory, &meta);
  if (traj.termination != Termination::singularity_trigger)
    throw DomainError("blowup: trajectory ended without a singularity (" + to_string(traj.termination) + ")");
  const int n = traj.config.n;
  double T_est = std::numeric_limits<double>::quiet_NaN();
  if (meta.contains("singularity") && meta["singularity"]["T_est"].is_number()) T_est = meta["singularity"]["T_est"];
  if (!std::isfinite(T_est)) T_est = classify_singularity_rate(traj).T_est;
  if (!std::isfinite(T_est)) throw DomainError("blowup: no singular time estimate");
  fs::create_directories(out);

  Json report{{"command", "blowup"}, {"T_est", T_est}, {"n", n}};
  const double lmax = type1_max_scale(traj, T_est, b.s);
  std::vector<double> scales;
  for (double f : b.scale_fractions) scales.push_back(f * lmax);
  std::sort(scales.begin(), scales.end());
  const auto rescaled = type1_rescale(traj, T_est, scales, b.s);
  Json type_one = Json::array();
  std::optional<ConeFit> last_cone;
  std::vector<PlanarCurve> shown;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    // a shrinker moves as sqrt(1 - t/T) gamma_0, so its rescalings sit on sqrt(|s|/T) gamma_0
    const PlanarCurve family = traj.snapshots.front().curve.transformed(std::sqrt(-b.s / T_est));
    Json entry{{"scale", scales[i]},
               {"self_similar_residual", soliton_residual(rescaled[i], 1 / (2 * -b.s), n)},
               {"profile_distance", nullptr}};
    try {
      entry["profile_distance"] = hausdorff_distance(rescaled[i], family, Disk<double>{{0, 0}, b.annulus_outer});
    } catch (const DomainError&) {
    }
    try {
      const ConeFit fit = fit_cone_pair(rescaled[i], {b.annulus_inner, b.annulus_outer}, n);
      entry["fit"] = to_json(fit);
      entry["report"] = to_json(make_report(fit));
      last_cone = fit;
    } catch (const NoFitError& e) {
      entry["error"] = e.what();
    }
    char name[48];
    std::snprintf(name, sizeof name, "type1_%zu.csv", i);
    write_curve_csv(out / name, rescaled[i], n);
    shown.push_back(rescaled[i]);
    type_one.push_back(entry);
  }
  report["type_one"] = type_one;

  const TypeTwoRescaling t2 = type2_rescale(traj, T_est);
  write_curve_csv(out / "type2.csv", t2.curve, n);
  Json type_two{{"t", t2.t}, {"scale", t2.scale}, {"peak", complex_json(t2.peak)}};
  std::optional<SpecialLagrangianFit> sl;
  try {
    sl = fit_special_lagrangian(t2.curve, n, b.fit_radius, b.residual_cap);
    type_two["fit"] = to_json(*sl);
  } catch (const NoFitError& e) {
    type_two["error"] = e.what();
  }
  report["type_two"] = type_two;

  bool consistent = false;
  if (last_cone && sl) {
    BlowupReport one = make_report(*last_cone), two = make_report(*sl);
    consistent = blowdown_consistency(one, two, n, b.tolerance);
    one.consistency = two.consistency = consistent;
    report["reports"] = Json::array({to_json(one), to_json(two)});
  }
  report["consistency"] = consistent;

  std::vector<SvgLayer> layers{{shown, palette(0), 1.0, "Type I rescalings"}};
  write_svg(out / "type1.svg", layers, b.annulus_outer * 1.2, "Type I rescalings");
  write_svg(out / "type2.svg", {{{t2.curve}, palette(1), 1.5, "Type II rescaling"}}, 4.0, "Type II rescaling");
  write_report(out, "blowup", report);
  return report;
}

// ---------------------------------------------------------------- symmetry

Json cmd_symmetry(const RunConfig& rc, const fs::path& out) {
  const SymmetrySection& s = rc.symmetry;
  GroupAction action = s.basis_file.empty() ? preset(s.preset, s.n) : group_action_from_json(read_json(s.basis_file));
  action.validate();
  fs::create_directories(out);
  const int n = action.n_ambient;
  Json report{{"command", "symmetry"}, {"action", action.name}, {"n", n}, {"group_dim", action.group_dim()},
              {"expected_m", action.expected_m ? Json(*action.expected_m) : Json(nullptr)}};

  auto to_cvec = [n](const Eigen::VectorXd& v) {
    CVector z(n);
    for (int j = 0; j < n; ++j) z[j] = {v[j], v[n + j]};
    return z;
  };
  const auto zs = random_coordinates(2 * n, s.samples, rc.seed, 2.0);
  const auto gs = random_coordinates(action.group_dim(), s.samples, rc.seed + 1, pi);
  const auto ws = random_coordinates(4, s.samples, rc.seed + 2, 1.0);

  double equivariance = 0, scaling = 0, circle_inv = 0, angle = 0;
  std::set<int> dims_generic, dims_admissible;
  for (int i = 0; i < s.samples; ++i) {
    const CVector z = to_cvec(zs[i]);
    equivariance = std::max(equivariance, equivariance_residual(action, z, gs[i]));
    const auto mu = moment(action, z).coefficients;
    scaling = std::max(scaling, (moment(action, 1.7 * z).coefficients - 1.7 * 1.7 * mu).cwiseAbs().maxCoeff());
    circle_inv = std::max(circle_inv, (moment(action, std::polar(1.0, 0.9) * z).coefficients - mu).cwiseAbs().maxCoeff());
    dims_generic.insert(orbit_dimension(action, z));
    if (action.base_point.size() == n) {
      const std::complex<double> w(1.5 + ws[i][0], ws[i][1]);
      std::complex<double> t(ws[i][2], ws[i][3]);
      if (std::abs(t) < 1e-3) t = 1;
      const CMatrix g = group_element(action, gs[i]);
      dims_admissible.insert(orbit_dimension(action, g * (w * action.base_point)));
      angle = std::max(angle, ambient_angle_check(action, w, t, g));
    }
  }
  report["samples"] = s.samples;
  report["equivariance_max"] = equivariance;
  report["quadratic_scaling_max"] = scaling;
  report["circle_invariance_max"] = circle_inv;
  report["orbit_dims_random"] = std::vector<int>(dims_generic.begin(), dims_generic.end());

  if (action.base_point.size() == n) {
    const CVector& z0 = action.base_point;
    report["base_point"] = {{"moment_max", moment(action, z0).max_abs()},
                            {"orbit_dimension", orbit_dimension(action, z0)},
                            {"zero_level_isotropic", zero_level_and_isotropic(action, z0)}};
    report["orbit_dims_admissible"] = std::vector<int>(dims_admissible.begin(), dims_admissible.end());
    std::set<int> all = dims_generic;
    all.insert(dims_admissible.begin(), dims_admissible.end());
    report["orbit_dims_observed"] = std::vector<int>(all.begin(), all.end());
    report["ambient_angle_max"] = angle;
    if (orbit_dimension(action, z0) == n - 1) {
      report["decomposition_residual"] = orthogonal_decomposition_residual(action, z0);
      const LiftResult lift = lift_lagrangian(action, circle(1.0, 32), 8, rc.seed);
      report["lift"] = {{"points", lift.cloud.size()},
                        {"symplectic_residual", lift.symplectic_residual},
                        {"moment_drift", lift.moment_drift},
                        {"frame_rank", {lift.min_rank, lift.max_rank}}};
    }
    Json cyclic = Json::array();
    for (int m = 1; m <= 2 * n; ++m) {
      if ((2 * n) % m != 0) continue;
      const CyclicWitness w = cyclic_symmetry_order(action, z0, m, rc.seed);
      cyclic.push_back({{"m", m}, {"witnessed", w.witnessed}, {"residual", w.residual}, {"analytic", w.analytic}});
    }
    report["cyclic"] = cyclic;
    report["cyclic_mode"] = action.expected_m ? "check" : "exploratory";
  }
  write_json(out / "action.json", to_json(action));
  write_report(out, "symmetry", report);
  return report;
}

// ---------------------------------------------------------------- atlas

Json cmd_atlas(const RunConfig& rc, const fs::path& out) {
  const AtlasSection& a = rc.atlas;
  const auto pairs = atlas_pairs(a.n, a.q_max);
  fs::create_directories(out / "curves");
  std::vector<std::optional<SolitonCurve>> results(pairs.size());
  std::vector<std::string> errors(pairs.size());
  // fan out in fixed-size batches; results land in their own slot so ordering stays by (q, p)
  for (std::size_t start = 0; start < pairs.size(); start += static_cast<std::size_t>(a.workers)) {
    std::vector<std::future<void>> batch;
    for (std::size_t i = start; i < std::min(pairs.size(), start + a.workers); ++i)
      batch.push_back(std::async(std::launch::async, [&, i] {
        try {
          results[i] = find_shrinker(pairs[i].first, pairs[i].second, a.n);
        } catch (const Error& e) {
          errors[i] = e.what();
        }
      }));
    for (auto& f : batch) f.get();
  }
  Json records = Json::array();
  std::vector<PlanarCurve> curves;
  std::vector<std::string> captions;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    Json rec{{"p", p}, {"q", q}, {"ratio", double(p) / q}};
    if (!errors[i].empty()) {
      rec["error"] = errors[i];
    } else {
      const SolitonCurve& sc = *results[i];
      const std::string file = "curves/shrinker_" + std::to_string(p) + "_" + std::to_string(q) + ".csv";
      write_curve_csv(out / file, sc.curve, a.n);
      rec["file"] = file;
      rec["r_apsis"] = sc.spec.r_apsis;
      rec["closure_gap"] = sc.closure_gap;
      rec["winding_number"] = winding_number(sc.curve);
      rec["curvature_maxima"] = curvature_maxima_count(sc.curve).count;
      curves.push_back(sc.curve);
      captions.push_back("(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
    note(rc, "atlas (" + std::to_string(p) + "," + std::to_string(q) + ")");
    records.push_back(rec);
  }
  Json report{{"command", "atlas"},
              {"n", a.n},
              {"q_max", a.q_max},
              {"window", {1.0 / (2 * a.n), 1.0 / std::sqrt(2.0 * a.n)}},
              {"records", records}};
  if (a.figure && !curves.empty()) {
    std::ofstream svg(out / "gallery.svg", std::ios::binary);
    svg << render_gallery(curves, captions, std::min<int>(5, static_cast<int>(curves.size())));
  }
  write_report(out, "atlas", report);
  return report;
}

}  // namespace lmcf

#pragma once

// Reduced equivariant Lagrangian mean curvature flow of profile curves:
// the node velocity is v N with v = kappa - (n-1) <gamma, N> / r^2.

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lmcf/curve.hpp"

namespace lmcf {

enum class Boundary { closed, pinned_asymptotes, free_ends };
enum class Termination { t_max_reached, singularity_trigger, mesh_failure, step_limit };

std::string to_string(Boundary b);
std::string to_string(Termination t);
Boundary boundary_from_string(const std::string& name);

struct FlowConfig {
  int n = 2;
  double cfl = 0.2;
  int redistribution_period = 10;
  double r_floor = 1e-3;
  double kappa_ceiling = std::numeric_limits<double>::infinity();
  double t_max = 1;
  Boundary boundary = Boundary::closed;
  double spacing = 0.05;           // target (largest) node spacing
  double relative_spacing = 0;     // > 0 grades the mesh: h = min(spacing, relative_spacing * r)
  double collar_radius = std::numeric_limits<double>::infinity();  // pinned runs freeze nodes beyond this
  long snapshot_every = 200;       // steps between regular snapshots
  double snapshot_radius_ratio = 1.189207115002721;  // extra snapshot each time min r drops by this factor
  long max_steps = 50'000'000;

  void validate() const;
  /// Target spacing at a point.
  double spacing_at(std::complex<double> z) const;
};

struct FlowState {
  double t = 0;
  long step_index = 0;
  PlanarCurve curve;
  CurveDiagnostics<double> diagnostics;
  AngleProfile<double> theta;
};

/// Diagnostics and angle lift for a curve at time t.
FlowState make_state(PlanarCurve curve, int n, double t = 0, long step_index = 0);

struct SummaryRow {
  double t = 0;
  double max_kappa = 0;
  double min_r = 0;
  double theta_min = 0;
  double theta_max = 0;
  double h2_ratio = 0;  // max over interior nodes of v^2 / (1 + 1/r^2)
  double a2_ratio = 0;  // same for the proxy kappa^2 + 3 (n-1) p^2 (orbit block omitted)
  std::complex<double> min_r_point;
  long nodes = 0;
};

struct FlowTrajectory {
  FlowConfig config;
  std::vector<FlowState> snapshots;
  std::vector<SummaryRow> summary;
  Termination termination = Termination::t_max_reached;
  std::string message;
};

struct SingularityReport {
  bool triggered = false;
  double T_est = std::numeric_limits<double>::quiet_NaN();
  std::complex<double> location{};
  bool location_confirmed = false;
  double sigma = std::numeric_limits<double>::quiet_NaN();
  double sigma_fit_r2 = 0;
  int decade_samples = 0;
  std::string type_evidence = "inconclusive";
};

/// Per-node normal speed; throws SingularRadiusError if a node is inside r_floor.
RealVector<double> normal_velocity(const PlanarCurve& curve, int n, double r_floor = 0);

/// Nodes that do not move under the configured boundary treatment.
std::vector<bool> frozen_nodes(const PlanarCurve& curve, const FlowConfig& config);

/// Time step the explicit scheme would take on this curve.
double stable_dt(const PlanarCurve& curve, const FlowConfig& config);

/// One explicit midpoint step of size dt (or the stable step if dt <= 0), followed by
/// redistribution when step_index hits the redistribution period.
FlowState step(const FlowState& state, const FlowConfig& config, double dt = 0);

/// Mesh-conforming redistribution honouring the boundary treatment.
PlanarCurve remesh(const PlanarCurve& curve, const FlowConfig& config);

FlowTrajectory evolve(const PlanarCurve& initial, const FlowConfig& config);

/// Curve at time t, interpolated between bracketing snapshots on a common mesh.
PlanarCurve curve_at(const FlowTrajectory& traj, double t);

/// Neves' barrier sin(pi s / beta)^(-beta/pi) e^{is}, truncated at radius r_max.
PlanarCurve neves_initial(double beta, int n, Eigen::Index samples, double r_max = 100);
std::complex<double> neves_point(double beta, double s);

struct AvoidanceResult {
  double min_separation = std::numeric_limits<double>::infinity();
  double time_of_min = 0;
  bool disjoint = true;
  int samples = 0;
};

AvoidanceResult avoidance_check(const FlowTrajectory& a, const FlowTrajectory& b, int min_samples = 64);

struct MonitorReport {
  double h2_initial = 0, h2_sup = 0;
  double a2_initial = 0, a2_sup = 0;
  bool finite = true;
  bool violation = false;  // either sup grew by more than 10x over its initial value
  bool within_fit = true;  // both sups stay below the supplied constant
};

MonitorReport monitor_estimates(const FlowTrajectory& traj,
                                double C_fit = std::numeric_limits<double>::infinity());

/// Singular-time extrapolation and curvature blowup rate over the final decade of T - t.
SingularityReport classify_singularity_rate(const FlowTrajectory& traj);

}  // namespace lmcf

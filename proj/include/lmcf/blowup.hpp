#pragma once

// Type I / Type II rescalings of a singular trajectory and fits of the blowup models:
// a pair of special Lagrangian cones, resp. a special Lagrangian l_{B,k,theta_bar}.

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "lmcf/flow.hpp"
#include "lmcf/solitons.hpp"

namespace lmcf {

enum class BlowupMode { type_one, type_two };
std::string to_string(BlowupMode mode);

struct ConeFit {
  int n = 2;
  double theta_bar = 0;  // in [0, pi)
  int k = 0;             // in [0, 2n)
  double residual = 0;   // Hausdorff distance to the constrained ray pair inside the annulus
  double lower_arg = 0;  // freely fitted ray arguments, counterclockwise order
  double upper_arg = 0;
  double gap = 0;        // measured angle between the free rays
  int nodes_used = 0;
};

struct SpecialLagrangianFit {
  int n = 2;
  double B = 1;
  double theta_bar = 0;
  int k = 0;
  double rotation = 0;                // psi: exp(-i psi)(w - translation) solves Re(u^n) = B^n
  std::complex<double> translation{};
  double residual = 0;                // max distance of the region nodes to the fitted curve
  std::complex<double> peak{};
  int nodes_used = 0;

  SolitonSpec spec() const { return SolitonSpec::special_lagrangian(n, B, k, theta_bar); }
};

struct BlowupReport {
  BlowupMode mode = BlowupMode::type_one;
  double theta_bar = 0;
  int k = 0;
  double B = std::numeric_limits<double>::quiet_NaN();
  double residual = 0;
  bool consistency = false;
  double gap = std::numeric_limits<double>::quiet_NaN();
  std::complex<double> translation{};
};

BlowupReport make_report(const ConeFit& fit);
BlowupReport make_report(const SpecialLagrangianFit& fit);

/// theta_bar + k pi reduced mod 2 pi n: the label that fixes both rays.
double branch_label(double theta_bar, int k, int n);

/// Snapshots at T_est + s / lambda^2 (interpolated in time), scaled by lambda about the origin.
std::vector<PlanarCurve> type1_rescale(const FlowTrajectory& traj, double T_est, const std::vector<double>& scales,
                                       double s = -1);

/// Largest admissible Type I scale: lambda with T_est + s / lambda^2 equal to the last snapshot time.
double type1_max_scale(const FlowTrajectory& traj, double T_est, double s = -1);

ConeFit fit_cone_pair(const PlanarCurve& curve, const Annulus<double>& region, int n);

struct TypeTwoRescaling {
  PlanarCurve curve;
  double scale = 1;
  double t = 0;
  std::complex<double> peak{};  // highest-curvature node after scaling
};

/// Snapshot maximizing max|kappa|^2 (T_est - t), scaled about the origin so that max|kappa| = 1.
TypeTwoRescaling type2_rescale(const FlowTrajectory& traj, double T_est);

/// Least squares over (B, rotation, translation) on the disk of `radius` around the curvature peak.
SpecialLagrangianFit fit_special_lagrangian(const PlanarCurve& curve, int n, double radius = 1,
                                            double residual_cap = 0.2);

/// Distance from w to the closed-form special Lagrangian of the fit.
double distance_to_fit(const SpecialLagrangianFit& fit, std::complex<double> w);

/// True iff the two reports carry the same branch label within `tolerance` radians.
bool blowdown_consistency(const BlowupReport& type_one, const BlowupReport& type_two, int n,
                          double tolerance = 0.02);

}  // namespace lmcf

#pragma once

// Cones, special Lagrangians, Anciaux shrinkers/expanders and the grim reaper
// as profile curves.

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lmcf/curve.hpp"

namespace lmcf {

enum class SolitonKind { cone, special_lagrangian, shrinker, expander, grim_reaper };

std::string to_string(SolitonKind kind);
SolitonKind soliton_kind_from_string(const std::string& name);

struct SolitonSpec {
  SolitonKind kind = SolitonKind::cone;
  int n = 2;
  int k = 0;
  double theta_bar = 0;
  double B = 1;        // special Lagrangian apex distance
  int p = 0, q = 0;    // shrinker winding / petal count
  double alpha = 0;    // expander asymptote span
  double lambda = 0;   // +1 shrinker, -1 expander, 0 static
  double r_apsis = 0;  // shooting start radius, filled in by the finders

  static SolitonSpec cone(int n, int k, double theta_bar);
  static SolitonSpec special_lagrangian(int n, double B, int k, double theta_bar);

  /// Throws DomainError if the parameters violate the invariants of `kind`.
  void validate() const;
};

struct ShootingState {
  std::complex<double> position{1, 0};
  std::complex<double> direction{0, 1};
  double s = 0;
  double swept_angle = 0;
};

/// Argument of the ray c(r) = r exp(i (theta_bar + k pi) / n).
double cone_argument(const SolitonSpec& spec);

/// Rotation psi such that exp(-i psi) * l is the curve Re(w^n) = B^n with apex on the positive axis.
double special_lagrangian_rotation(const SolitonSpec& spec);

/// Closed-form point of the special Lagrangian at parameter alpha in (-pi/2n, pi/2n).
std::complex<double> special_lagrangian_point(const SolitonSpec& spec, double alpha);

std::complex<double> grim_reaper_point(double x);

PlanarCurve sample_cone(const SolitonSpec& spec, double r_min, double r_max, double spacing);

/// Nodes at equal arclength along the closed form; alpha range is clipped where r exceeds r_cap.
PlanarCurve sample_special_lagrangian(const SolitonSpec& spec, double alpha_lo, double alpha_hi,
                                      double spacing, double r_cap = 1e6);

/// Same, choosing the spacing so that the curve has `count` nodes.
PlanarCurve sample_special_lagrangian_nodes(const SolitonSpec& spec, double alpha_lo, double alpha_hi,
                                            Eigen::Index count);

std::pair<SolitonSpec, SolitonSpec> asymptotes_of(const SolitonSpec& spec);

/// Graph (x, log cos x) over [x_lo, x_hi] at roughly the given arclength spacing. Nodes are placed
/// symmetrically about the grid so that none lands on the origin.
PlanarCurve grim_reaper(double x_lo, double x_hi, double spacing);

/// Arclength derivative of the shooting state for kappa = -(lambda - (n-1)/r^2) <gamma, N>.
ShootingState soliton_rhs(const ShootingState& state, double lambda, int n, double r_floor = 1e-12);

struct SolitonTrace {
  PlanarCurve curve;
  ShootingState final_state;
};

struct IntegrationOptions {
  double step_factor = 1e-3;  // step <= step_factor * r
  double r_floor = 1e-12;
  double record_spacing = 0;  // 0 keeps every step; otherwise thin to roughly this spacing (relative to r)
};

/// Fixed-step RK4 trace of the soliton ODE for arclength max_length.
SolitonTrace integrate_soliton(const ShootingState& start, double lambda, int n, double max_length,
                               const IntegrationOptions& options = {});

/// Upper end of the inner-apsis window: the stationary circle radius sqrt(n / lambda).
double shrinker_window_edge(int n, double lambda = 1);

/// Swept arg(gamma) between consecutive inner apsides, starting perpendicular at r_apsis.
double period_angle(double r_apsis, double lambda, int n, double step_factor = 1e-3);

struct SolitonCurve {
  SolitonSpec spec;
  PlanarCurve curve;
  double closure_gap = 0;    // shrinkers: endpoint position gap after q petals
  double direction_gap = 0;  // shrinkers: endpoint tangent gap
  double measured_span = 0;  // expanders: span of the end tangents at r = 1e3 * apsis
};

/// True iff p/q lies strictly inside (1/(2n), 1/sqrt(2n)) and gcd(p, q) = 1.
bool shrinker_admissible(int p, int q, int n);

SolitonCurve find_shrinker(int p, int q, int n, double record_spacing = 0.01);

/// Asymptote span of the lambda = -1 shooting curve from apsis distance d.
double expander_span(double d, int n, double step_factor = 1e-3);

SolitonCurve find_expander(double alpha, int n);

/// Angle between the outward end tangents of an open arc.
double measure_asymptote_span(const PlanarCurve& curve);

/// Max over interior nodes of |kappa + (lambda - (n-1)/r^2) <gamma, N>|.
double soliton_residual(const PlanarCurve& curve, double lambda, int n);

/// Translator shooting: kappa = <V, N> + (n-1) <gamma, N> / r^2 in the profile plane.
SolitonTrace integrate_translator(const ShootingState& start, std::complex<double> velocity, int n,
                                  double max_length, double step_factor = 1e-3);

/// How far a planar translator is from lifting to an equivariant one. At the orbit point where the
/// profile plane has turned a quarter, the planar part of V drops out and V points along J(orbit);
/// both <V, N> and |Im(conj(V) w)| / |w| must then vanish. Zero for n = 1 (no orbit).
double translator_obstruction(const PlanarCurve& curve, std::complex<double> velocity, int n);

struct TranslatorSweep {
  double min_obstruction = 0;
  int samples = 0;
};

/// Minimum obstruction over a coarse sweep of non-radial starts and translation directions.
TranslatorSweep translator_sweep(int n, int radial_samples = 4, int angle_samples = 6);

}  // namespace lmcf

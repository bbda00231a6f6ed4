#pragma once

// Linear actions of compact subgroups of SU(n) on C^n: moment maps, orbits, profile-plane
// symmetry and the ambient lift of profile curves.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lmcf/curve.hpp"

namespace lmcf {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

struct GroupAction {
  std::string name;
  int n_ambient = 0;
  std::vector<CMatrix> basis;        // anti-Hermitian, trace-free, orthonormal under -tr(XY)
  std::optional<int> expected_m;
  CVector base_point;                // unit point of the zero level with (n-1)-dimensional orbit

  int group_dim() const { return static_cast<int>(basis.size()); }
  /// Every violated invariant, empty when the action is well formed.
  std::vector<std::string> invariant_failures() const;
  /// Throws ValidationError listing all failures.
  void validate() const;
};

GroupAction so_action(int n);
GroupAction torus_action(int n);
GroupAction su2_sym3_action();
/// SU(2) element [[a, -conj b], [b, conj a]] acting on binary cubics (4x4).
CMatrix su2_sym3_representation(std::complex<double> a, std::complex<double> b);
GroupAction circle_so_so_action(int p, int q);

/// "so(3)", "torus(4)", "su2-sym3", "s1-so-so(3,4)"; bare "so"/"torus" take `n`.
GroupAction preset(const std::string& name, int n = 3);
std::vector<std::string> preset_names();

/// Group element exp(sum c_a X_a).
CMatrix group_element(const GroupAction& action, const Eigen::VectorXd& coords);

/// Pairing of an algebra element with the basis: c_a = -tr(M X_a).
Eigen::VectorXd algebra_coordinates(const GroupAction& action, const CMatrix& m);

struct MomentValue {
  Eigen::VectorXd coefficients;
  double norm() const { return coefficients.norm(); }
  double max_abs() const { return coefficients.size() ? coefficients.cwiseAbs().maxCoeff() : 0.0; }
};

MomentValue moment(const GroupAction& action, const CVector& z);

/// |moment(g z) - Ad*_g moment(z)| for g = exp(sum c_a X_a).
double equivariance_residual(const GroupAction& action, const CVector& z, const Eigen::VectorXd& coords);

/// Infinitesimal action: columns -X_a z.
CMatrix orbit_vectors(const GroupAction& action, const CVector& z);

int orbit_dimension(const GroupAction& action, const CVector& z);

/// omega(u, v) = Im(u^* v).
double symplectic_form(const CVector& u, const CVector& v);

bool zero_level_and_isotropic(const GroupAction& action, const CVector& z, double tol = 1e-10);

double orthogonal_decomposition_residual(const GroupAction& action, const CVector& z);

struct CyclicWitness {
  bool witnessed = false;
  double residual = 0;
  bool analytic = false;  // the shipped closed-form element did the job
  CMatrix element;
};

/// Searches g in G with g z = exp(2 pi i / m) z; closed-form elements first, then 32 seeded starts.
CyclicWitness cyclic_symmetry_order(const GroupAction& action, const CVector& z, int m, std::uint64_t seed = 7);

/// Closed-form witness shipped with the presets, if one applies at z.
std::optional<CMatrix> analytic_witness(const GroupAction& action, const CVector& z, int m);

struct LiftedPoint {
  CVector point;
  CMatrix frame;  // orbit vectors followed by the pushed-forward profile tangent
};

struct LiftResult {
  std::vector<LiftedPoint> cloud;
  double symplectic_residual = 0;  // max |omega(u,v)| / (|u||v|) over frame pairs
  double moment_drift = 0;
  int min_rank = 0;
  int max_rank = 0;
};

/// L = G . (profile inside the plane spanned by the base point).
LiftResult lift_lagrangian(const GroupAction& action, const PlanarCurve& profile, int orbit_samples,
                           std::uint64_t seed = 7, double coord_radius = 3.14159265358979);

/// Real orthonormal basis (as complex columns) of the orbit tangent at z.
CMatrix orbit_tangent_basis(const GroupAction& action, const CVector& z);

/// Phase of the complex volume form on (orbit basis, tangent) at the point g w z0, mod pi,
/// against arg(tangent) + (n-1) arg(w) plus the constant fixed at w = 1 with radial tangent.
double ambient_angle_check(const GroupAction& action, std::complex<double> w, std::complex<double> tangent,
                           const CMatrix& g);
double ambient_angle_check(const GroupAction& action, std::complex<double> w, std::complex<double> tangent);

/// Raw phase arg det of the frame at g w z0 (mod pi, in [0, pi)).
double ambient_frame_phase(const GroupAction& action, std::complex<double> w, std::complex<double> tangent,
                           const CMatrix& g);

/// Uniform random coordinates in the ball of given radius (deterministic for a seed).
std::vector<Eigen::VectorXd> random_coordinates(int dim, int count, std::uint64_t seed, double radius);

}  // namespace lmcf

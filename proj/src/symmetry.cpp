#include "lmcf/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <regex>

#include <unsupported/Eigen/MatrixFunctions>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "lmcf/errors.hpp"

namespace lmcf {

namespace {

constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;
const cplx I1(0, 1);

double pairing(const CMatrix& a, const CMatrix& b) { return -(a * b).trace().real(); }

// Gram-Schmidt under -tr(XY); drops dependent directions.
std::vector<CMatrix> orthonormalize(const std::vector<CMatrix>& in) {
  std::vector<CMatrix> out;
  for (CMatrix x : in) {
    for (int pass = 0; pass < 2; ++pass)
      for (const CMatrix& e : out) x -= pairing(x, e) * e;
    const double nrm = std::sqrt(std::max(pairing(x, x), 0.0));
    if (nrm > 1e-12) out.push_back(x / nrm);
  }
  return out;
}

CMatrix skew(int n, int i, int j) {
  CMatrix x = CMatrix::Zero(n, n);
  x(i, j) = -1;
  x(j, i) = 1;
  return x;
}

// SU(2) acting on cubics in the basis {w1^3, sqrt3 w1^2 w2, sqrt3 w1 w2^2, w2^3}; g = [[a, -conj b], [b, conj a]].
CMatrix sym3(cplx a, cplx b) {
  const double s3 = std::sqrt(3.0);
  const cplx ab = std::conj(a), bb = std::conj(b);
  const double aa2 = std::norm(a), bb2 = std::norm(b);
  CMatrix m(4, 4);
  m << a * a * a, -s3 * a * a * bb, s3 * a * bb * bb, -bb * bb * bb,
      s3 * a * a * b, a * (aa2 - 2 * bb2), -bb * (2 * aa2 - bb2), s3 * ab * bb * bb,
      s3 * a * b * b, b * (2 * aa2 - bb2), ab * (aa2 - 2 * bb2), -s3 * ab * ab * bb,
      b * b * b, s3 * ab * b * b, s3 * ab * ab * b, ab * ab * ab;
  return m;
}

Eigen::MatrixXd realify(const CMatrix& m) {
  Eigen::MatrixXd out(2 * m.rows(), m.cols());
  out << m.real(), m.imag();
  return out;
}

double scale_of(const CVector& z) { return std::max(z.norm(), 1e-300); }

// Rotation by pi in the real plane spanned by d and a unit vector orthogonal to it.
Eigen::MatrixXd half_turn_through(const Eigen::VectorXd& d) {
  const Eigen::Index n = d.size();
  Eigen::Index j;
  d.cwiseAbs().minCoeff(&j);
  Eigen::VectorXd e = Eigen::VectorXd::Unit(n, j);
  e -= e.dot(d) * d;
  e.normalize();
  return Eigen::MatrixXd::Identity(n, n) - 2 * d * d.transpose() - 2 * e * e.transpose();
}

// Real unit direction d with v in C d, if v's real and imaginary parts are dependent.
std::optional<Eigen::VectorXd> real_direction(const CVector& v) {
  const Eigen::VectorXd re = v.real(), im = v.imag();
  const Eigen::VectorXd d = re.norm() >= im.norm() ? Eigen::VectorXd(re) : Eigen::VectorXd(im);
  if (d.norm() < 1e-14) return std::nullopt;
  const Eigen::VectorXd u = d.normalized();
  const CVector rest = v - u.cast<cplx>() * (u.cast<cplx>().dot(v));
  if (rest.norm() > 1e-10 * scale_of(v)) return std::nullopt;
  return u;
}

struct OrbitResidual {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  using QRSolver = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const GroupAction* action;
  CVector z;
  CVector target;

  int inputs() const { return action->group_dim(); }
  int values() const { return static_cast<int>(2 * z.size()); }
  int operator()(const Eigen::VectorXd& c, Eigen::VectorXd& f) const {
    const CVector d = group_element(*action, c) * z - target;
    f << d.real(), d.imag();
    return 0;
  }
};

enum class PresetKind { so, torus, su2_sym3, circle_so_so, other };

PresetKind kind_of(const GroupAction& a) {
  if (a.name.rfind("so(", 0) == 0) return PresetKind::so;
  if (a.name.rfind("torus(", 0) == 0) return PresetKind::torus;
  if (a.name == "su2-sym3") return PresetKind::su2_sym3;
  if (a.name.rfind("s1-so-so(", 0) == 0) return PresetKind::circle_so_so;
  return PresetKind::other;
}

}  // namespace

CMatrix su2_sym3_representation(std::complex<double> a, std::complex<double> b) { return sym3(a, b); }

std::vector<std::string> GroupAction::invariant_failures() const {
  std::vector<std::string> fail;
  if (name.empty()) fail.push_back("action has no name");
  if (n_ambient < 1) fail.push_back("ambient dimension must be >= 1");
  if (basis.empty()) fail.push_back("empty Lie algebra basis");
  bool shapes = n_ambient >= 1;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const CMatrix& x = basis[a];
    const std::string tag = "basis[" + std::to_string(a) + "]";
    if (x.rows() != n_ambient || x.cols() != n_ambient) {
      fail.push_back(tag + " is not " + std::to_string(n_ambient) + "x" + std::to_string(n_ambient));
      shapes = false;
      continue;
    }
    if (!x.allFinite()) fail.push_back(tag + " has non-finite entries");
    if ((x + x.adjoint()).cwiseAbs().maxCoeff() > 1e-12) fail.push_back(tag + " is not anti-Hermitian");
    if (std::abs(x.trace()) > 1e-12) fail.push_back(tag + " is not trace-free");
  }
  if (shapes) {
    double worst = 0;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        worst = std::max(worst, std::abs(pairing(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)));
    if (worst > 1e-10) fail.push_back("basis is not orthonormal under -tr(XY) (off by " + std::to_string(worst) + ")");
  }
  if (base_point.size() != 0 && base_point.size() != n_ambient) fail.push_back("base point has the wrong dimension");
  if (expected_m && (*expected_m < 1 || (2 * n_ambient) % *expected_m != 0))
    fail.push_back("expected_m must divide 2n");
  return fail;
}

void GroupAction::validate() const {
  auto fail = invariant_failures();
  if (!fail.empty()) throw ValidationError(std::move(fail));
}

GroupAction so_action(int n) {
  if (n < 2) throw DomainError("so_action: n must be >= 2");
  GroupAction a;
  a.name = "so(" + std::to_string(n) + ")";
  a.n_ambient = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.basis.push_back(skew(n, i, j) / std::sqrt(2.0));
  a.expected_m = 2;
  a.base_point = CVector::Unit(n, 0);
  return a;
}

GroupAction torus_action(int n) {
  if (n < 2) throw DomainError("torus_action: n must be >= 2");
  GroupAction a;
  a.name = "torus(" + std::to_string(n) + ")";
  a.n_ambient = n;
  for (int j = 1; j < n; ++j) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v.head(j).setOnes();
    v[j] = -j;
    v /= std::sqrt(double(j) * (j + 1));
    a.basis.push_back(CMatrix((I1 * v.cast<cplx>()).asDiagonal()));
  }
  a.expected_m = n;
  a.base_point = CVector::Constant(n, 1.0 / std::sqrt(double(n)));
  return a;
}

GroupAction su2_sym3_action() {
  GroupAction a;
  a.name = "su2-sym3";
  a.n_ambient = 4;
  // derivative at the identity of the representation along a = 1 + t alpha, b = t beta
  const double s3 = std::sqrt(3.0);
  auto tangent = [s3](cplx alpha, cplx beta) {
    const cplx ab = std::conj(alpha), bb = std::conj(beta);
    CMatrix d(4, 4);
    d << 3.0 * alpha, -s3 * bb, 0, 0,
        s3 * beta, alpha, -2.0 * bb, 0,
        0, 2.0 * beta, ab, -s3 * bb,
        0, 0, s3 * beta, 3.0 * ab;
    return d;
  };
  std::vector<CMatrix> raw{tangent(I1, 0), tangent(0, 1), tangent(0, I1)};
  a.basis = orthonormalize(raw);
  a.expected_m = 4;
  a.base_point = CVector::Zero(4);
  a.base_point[0] = a.base_point[3] = 1 / std::sqrt(2.0);
  return a;
}

GroupAction circle_so_so_action(int p, int q) {
  if (p < 2 || q < 2) throw DomainError("circle_so_so_action: p, q must be >= 2");
  const int n = p + q;
  GroupAction a;
  a.name = "s1-so-so(" + std::to_string(p) + "," + std::to_string(q) + ")";
  a.n_ambient = n;
  Eigen::VectorXd c(n);
  c.head(p).setConstant(q);
  c.tail(q).setConstant(-p);
  a.basis.push_back(CMatrix((I1 * c.cast<cplx>()).asDiagonal()) / std::sqrt(double(p) * q * n));
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) a.basis.push_back(skew(n, i, j) / std::sqrt(2.0));
  for (int i = p; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.basis.push_back(skew(n, i, j) / std::sqrt(2.0));
  a.base_point = CVector::Zero(n);
  a.base_point[0] = std::sqrt(double(p) / n);
  a.base_point[p] = std::sqrt(double(q) / n);
  return a;
}

GroupAction preset(const std::string& name, int n) {
  static const std::regex with_args(R"(([a-z0-9\-]+)\((\d+)(?:,(\d+))?\))");
  std::smatch m;
  std::string head = name;
  int arg1 = n, arg2 = -1;
  if (std::regex_match(name, m, with_args)) {
    head = m[1];
    arg1 = std::stoi(m[2]);
    if (m[3].matched) arg2 = std::stoi(m[3]);
  }
  if (head == "so") return so_action(arg1);
  if (head == "torus") return torus_action(arg1);
  if (head == "su2-sym3") return su2_sym3_action();
  if (head == "s1-so-so") {
    if (arg2 < 0) arg1 = arg2 = 3;
    return circle_so_so_action(arg1, arg2);
  }
  throw DomainError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"so(n)", "torus(n)", "su2-sym3", "s1-so-so(p,q)"}; }

CMatrix group_element(const GroupAction& action, const Eigen::VectorXd& coords) {
  if (coords.size() != action.group_dim()) throw DomainError("group_element: coordinate count mismatch");
  CMatrix x = CMatrix::Zero(action.n_ambient, action.n_ambient);
  for (int a = 0; a < action.group_dim(); ++a) x += coords[a] * action.basis[a];
  return x.exp();
}

Eigen::VectorXd algebra_coordinates(const GroupAction& action, const CMatrix& m) {
  Eigen::VectorXd c(action.group_dim());
  for (int a = 0; a < action.group_dim(); ++a) c[a] = pairing(m, action.basis[a]);
  return c;
}

MomentValue moment(const GroupAction& action, const CVector& z) {
  if (z.size() != action.n_ambient) throw DomainError("moment: dimension mismatch");
  MomentValue mv;
  mv.coefficients.resize(action.group_dim());
  for (int a = 0; a < action.group_dim(); ++a)
    mv.coefficients[a] = -0.5 * z.dot(action.basis[a] * z).imag();
  return mv;
}

double equivariance_residual(const GroupAction& action, const CVector& z, const Eigen::VectorXd& coords) {
  const CMatrix g = group_element(action, coords);
  const MomentValue at_z = moment(action, z);
  CMatrix m = CMatrix::Zero(action.n_ambient, action.n_ambient);
  for (int a = 0; a < action.group_dim(); ++a) m += at_z.coefficients[a] * action.basis[a];
  const Eigen::VectorXd moved = algebra_coordinates(action, g * m * g.adjoint());
  return (moment(action, g * z).coefficients - moved).norm();
}

CMatrix orbit_vectors(const GroupAction& action, const CVector& z) {
  CMatrix out(action.n_ambient, action.group_dim());
  for (int a = 0; a < action.group_dim(); ++a) out.col(a) = -(action.basis[a] * z);
  return out;
}

int orbit_dimension(const GroupAction& action, const CVector& z) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(realify(orbit_vectors(action, z)));
  const double thr = 1e-8 * scale_of(z);
  return static_cast<int>((svd.singularValues().array() > thr).count());
}

CMatrix orbit_tangent_basis(const GroupAction& action, const CVector& z) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(realify(orbit_vectors(action, z)), Eigen::ComputeThinU);
  const double thr = 1e-8 * scale_of(z);
  const int rank = static_cast<int>((svd.singularValues().array() > thr).count());
  const Eigen::Index n = z.size();
  CMatrix out(n, rank);
  for (int c = 0; c < rank; ++c)
    for (Eigen::Index i = 0; i < n; ++i) out(i, c) = cplx(svd.matrixU()(i, c), svd.matrixU()(n + i, c));
  return out;
}

double symplectic_form(const CVector& u, const CVector& v) { return u.dot(v).imag(); }

bool zero_level_and_isotropic(const GroupAction& action, const CVector& z, double tol) {
  const double s2 = std::max(z.squaredNorm(), 1e-300);
  const bool level = moment(action, z).max_abs() <= tol * std::max(s2, 1.0);
  const CMatrix v = orbit_vectors(action, z);
  double worst = 0;
  for (int a = 0; a < v.cols(); ++a)
    for (int b = a + 1; b < v.cols(); ++b) worst = std::max(worst, std::abs(symplectic_form(v.col(a), v.col(b))));
  const bool isotropic = worst <= tol * std::max(s2, 1.0);
  return level && isotropic;
}

double orthogonal_decomposition_residual(const GroupAction& action, const CVector& z) {
  const int n = action.n_ambient;
  const CMatrix tangent = orbit_tangent_basis(action, z);
  if (tangent.cols() != n - 1)
    throw DomainError("orthogonal_decomposition_residual: orbit dimension " + std::to_string(tangent.cols()) +
                      ", expected " + std::to_string(n - 1));
  const double nz = z.norm();
  if (nz == 0) throw DomainError("orthogonal_decomposition_residual: z = 0");

  // blocks: P_z, T O, J T O; each orthonormal inside itself
  CMatrix all(n, 2 * n);
  all.col(0) = z / nz;
  all.col(1) = I1 * z / nz;
  all.middleCols(2, n - 1) = tangent;
  all.middleCols(n + 1, n - 1) = I1 * tangent;
  const Eigen::MatrixXd gram = realify(all).transpose() * realify(all);
  auto block = [n](int c) { return c < 2 ? 0 : (c < n + 1 ? 1 : 2); };
  double worst = 0;
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b)
      if (block(a) != block(b)) worst = std::max(worst, std::abs(gram(a, b)));
  return worst;
}

std::optional<CMatrix> analytic_witness(const GroupAction& action, const CVector& z, int m) {
  const int n = action.n_ambient;
  if (m < 1 || z.size() != n) return std::nullopt;
  if (m == 1) return CMatrix::Identity(n, n);
  switch (kind_of(action)) {
    case PresetKind::so: {
      if (m != 2) return std::nullopt;
      auto d = real_direction(z);
      if (!d) return std::nullopt;
      return CMatrix(half_turn_through(*d).cast<cplx>());
    }
    case PresetKind::torus:
      if (n % m != 0) return std::nullopt;
      return CMatrix(std::polar(1.0, 2 * pi / m) * CMatrix::Identity(n, n));
    case PresetKind::su2_sym3: {
      if (m == 2) return CMatrix(-CMatrix::Identity(4, 4));
      if (m != 4) return std::nullopt;
      return sym3(cplx(0, 0), cplx(0, -1));
    }
    case PresetKind::circle_so_so: {
      // circle angle j pi/(p+q), combined with half-turns in either factor
      const std::string& s = action.name;
      const int p = std::stoi(s.substr(s.find('(') + 1));
      const int q = n - p;
      auto dz = real_direction(z.head(p));
      auto dw = real_direction(z.tail(q));
      if (!dz || !dw) return std::nullopt;
      const cplx target = std::polar(1.0, 2 * pi / m);
      for (int j = 0; j < 2 * n; ++j)
        for (int sa : {1, -1})
          for (int sb : {1, -1}) {
            const double t = pi * j / n;
            const cplx fz = double(sa) * std::polar(1.0, q * t);
            const cplx fw = double(sb) * std::polar(1.0, -p * t);
            if (std::abs(fz - target) > 1e-12 || std::abs(fw - target) > 1e-12) continue;
            CMatrix g = CMatrix::Zero(n, n);
            const Eigen::MatrixXd rz = sa > 0 ? Eigen::MatrixXd::Identity(p, p) : half_turn_through(*dz);
            const Eigen::MatrixXd rw = sb > 0 ? Eigen::MatrixXd::Identity(q, q) : half_turn_through(*dw);
            g.topLeftCorner(p, p) = std::polar(1.0, q * t) * rz.cast<cplx>();
            g.bottomRightCorner(q, q) = std::polar(1.0, -p * t) * rw.cast<cplx>();
            return g;
          }
      return std::nullopt;
    }
    case PresetKind::other:
      break;
  }
  return std::nullopt;
}

std::vector<Eigen::VectorXd> random_coordinates(int dim, int count, std::uint64_t seed, double radius) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd v(dim);
    for (int a = 0; a < dim; ++a) v[a] = normal(rng);
    const double nv = v.norm();
    if (nv > 0) v *= radius * std::pow(unit(rng), 1.0 / dim) / nv;
    out.push_back(v);
  }
  return out;
}

CyclicWitness cyclic_symmetry_order(const GroupAction& action, const CVector& z, int m, std::uint64_t seed) {
  if (m < 1) throw DomainError("cyclic_symmetry_order: m must be >= 1");
  const CVector target = std::polar(1.0, 2 * pi / m) * z;
  CyclicWitness best;
  best.residual = std::numeric_limits<double>::infinity();

  if (auto g = analytic_witness(action, z, m)) {
    const double r = (*g * z - target).norm();
    if (r <= 1e-6) return {true, r, true, *g};
    best = {false, r, true, *g};
  }

  OrbitResidual functor{&action, z, target};
  Eigen::NumericalDiff<OrbitResidual> numdiff(functor);
  for (const Eigen::VectorXd& start : random_coordinates(action.group_dim(), 32, seed, 2 * pi)) {
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<OrbitResidual>> lm(numdiff);
    lm.parameters.maxfev = 400 * (action.group_dim() + 1);
    Eigen::VectorXd c = start;
    lm.minimize(c);
    const CMatrix g = group_element(action, c);
    const double r = (g * z - target).norm();
    if (r < best.residual) best = {false, r, false, g};
    if (r <= 1e-10) break;
  }
  best.witnessed = best.residual <= 1e-6;
  return best;
}

LiftResult lift_lagrangian(const GroupAction& action, const PlanarCurve& profile, int orbit_samples,
                           std::uint64_t seed, double coord_radius) {
  const int n = action.n_ambient;
  const CVector& z0 = action.base_point;
  if (z0.size() != n) throw DomainError("lift_lagrangian: action has no base point");
  if (orbit_dimension(action, z0) != n - 1) throw DomainError("lift_lagrangian: base orbit is not (n-1)-dimensional");
  if (orbit_samples < 1) throw DomainError("lift_lagrangian: need at least one orbit sample");

  std::vector<CMatrix> elements{CMatrix::Identity(n, n)};
  for (const auto& c : random_coordinates(action.group_dim(), orbit_samples - 1, seed, coord_radius))
    elements.push_back(group_element(action, c));

  const auto fr = frame(profile);
  LiftResult out;
  out.min_rank = n;
  out.max_rank = 0;
  std::optional<Eigen::VectorXd> mu0;
  for (const CMatrix& g : elements)
    for (Eigen::Index i = 0; i < profile.size(); ++i) {
      LiftedPoint lp;
      lp.point = g * (profile[i] * z0);
      const CMatrix tangent = orbit_tangent_basis(action, lp.point);
      lp.frame.resize(n, tangent.cols() + 1);
      lp.frame.leftCols(tangent.cols()) = tangent;
      lp.frame.col(tangent.cols()) = g * (fr.tangent[i] * z0);
      for (Eigen::Index a = 0; a < lp.frame.cols(); ++a)
        for (Eigen::Index b = a + 1; b < lp.frame.cols(); ++b) {
          const double nn = lp.frame.col(a).norm() * lp.frame.col(b).norm();
          out.symplectic_residual =
              std::max(out.symplectic_residual, std::abs(symplectic_form(lp.frame.col(a), lp.frame.col(b))) / nn);
        }
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(realify(lp.frame));
      const int rank = static_cast<int>((svd.singularValues().array() > 1e-8 * svd.singularValues()[0]).count());
      out.min_rank = std::min(out.min_rank, rank);
      out.max_rank = std::max(out.max_rank, rank);
      const Eigen::VectorXd mu = moment(action, lp.point).coefficients;
      if (!mu0) mu0 = mu;
      out.moment_drift = std::max(out.moment_drift, (mu - *mu0).cwiseAbs().maxCoeff());
      out.cloud.push_back(std::move(lp));
    }
  return out;
}

double ambient_frame_phase(const GroupAction& action, std::complex<double> w, std::complex<double> tangent,
                           const CMatrix& g) {
  const int n = action.n_ambient;
  if (std::abs(w) == 0 || std::abs(tangent) == 0) throw DomainError("ambient_frame_phase: degenerate input");
  const CVector p = g * (w * action.base_point);
  const CMatrix basis = orbit_tangent_basis(action, p);
  if (basis.cols() != n - 1) throw DomainError("ambient_frame_phase: singular orbit frame");
  CMatrix m(n, n);
  m.leftCols(n - 1) = basis;
  m.col(n - 1) = g * ((tangent / std::abs(tangent)) * action.base_point);
  const cplx det = m.determinant();
  if (std::abs(det) < 1e-12) throw DomainError("ambient_frame_phase: singular frame");
  return reduce_angle(std::arg(det), pi);
}

double ambient_angle_check(const GroupAction& action, std::complex<double> w, std::complex<double> tangent,
                           const CMatrix& g) {
  const int n = action.n_ambient;
  const CMatrix id = CMatrix::Identity(n, n);
  const double offset = ambient_frame_phase(action, 1.0, 1.0, id);
  const double expected = std::arg(tangent) + (n - 1) * std::arg(w) + offset;
  return angle_distance(ambient_frame_phase(action, w, tangent, g), reduce_angle(expected, pi), pi);
}

double ambient_angle_check(const GroupAction& action, std::complex<double> w, std::complex<double> tangent) {
  return ambient_angle_check(action, w, tangent, CMatrix::Identity(action.n_ambient, action.n_ambient));
}

}  // namespace lmcf

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hrlab/form.hpp"
#include "hrlab/positivity.hpp"

namespace hrlab {

// r x r matrix of constant (p,q)-forms sharing (n, p, q): curvature-like F,
// Higgs fields theta, their adjoints.
class EndValuedForm {
 public:
  EndValuedForm(int r, int n, int p, int q);

  // theta = sum_a N_a dz^a for constant matrices N_1..N_n.
  static EndValuedForm from_matrices_10(const std::vector<Eigen::MatrixXcd>& n_a);

  int r() const { return r_; }
  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }

  Form& at(int j, int k) { return e_[j * r_ + k]; }
  const Form& at(int j, int k) const { return e_[j * r_ + k]; }

  double sup_norm() const;

  // i * F has hermitian matrix structure: F_{kj} = -conjugate(F_{jk}).
  bool is_ihermitian(double tol = 1e-10) const;

  EndValuedForm& operator+=(const EndValuedForm& other);
  EndValuedForm& operator-=(const EndValuedForm& other);
  EndValuedForm& operator*=(Complex s);
  friend EndValuedForm operator+(EndValuedForm a, const EndValuedForm& b) { return a += b; }
  friend EndValuedForm operator-(EndValuedForm a, const EndValuedForm& b) { return a -= b; }
  friend EndValuedForm operator*(Complex s, EndValuedForm a) { return a *= s; }

 private:
  int r_, n_, p_, q_;
  std::vector<Form> e_;
};

// (A ^ B)_{ik} = sum_j wedge(A_{ij}, B_{jk}).
EndValuedForm mv_wedge(const EndValuedForm& a, const EndValuedForm& b);

Form mv_trace(const EndValuedForm& a);

// Bundle transpose plus form conjugation: (psi*)_{kj} = conjugate(psi_{jk}).
EndValuedForm hermitian_adjoint(const EndValuedForm& psi);

// Graded commutator [A,B] = A^B - (-1)^{deg A deg B} B^A; for two odd-degree
// arguments this is A^B + B^A, so [theta,theta] = 2 theta^theta.
EndValuedForm graded_commutator(const EndValuedForm& a, const EndValuedForm& b);

// max over entries of |top_ratio(F_{jk} ^ omega0 ^ Omega0, omega0)|.
double check_primitive_mv(const EndValuedForm& f, const Form& omega0,
                          const Form& bigOmega0);

// Entrywise removal of the omega0 component along the primitivity functional.
EndValuedForm primitive_project_mv(const EndValuedForm& f, const Form& omega0,
                                   const Form& bigOmega0);

// Residual of the Hermitian-Einstein equation
// i F ^ omega0 ^ Omega0 = lambda Id omega0^2 ^ Omega0 at a point.
double he_residual(const EndValuedForm& f, const Form& omega0,
                   const Form& bigOmega0, double lambda);

// Pointwise Chern-Weil density of (2r c2 - (r-1) c1^2) ^ Omega0:
// (r/4pi^2) top_ratio(tr(F0 ^ F0) ^ Omega0, omega0) with F0 the trace-free
// part. Nonnegative for primitive F0 under a Hodge-Riemann Omega0.
double bmy_density(const EndValuedForm& f, const Form& omega0,
                   const Form& bigOmega0, bool allow_nonprimitive = false);

struct PairingResult {
  double raw = 0.0;       // top_ratio(tr(psi ^ psi*) ^ Omega0, omega0)
  double q_energy = 0.0;  // sum_{jk} Q(psi_{jk}, psi_{jk})
};

// Sign-definite square pairing tr(psi ^ psi*) ^ Omega0 for p+q = 2 inputs;
// requires Omega0 Hodge-Riemann for the bidegree of psi, and entrywise
// primitivity for (1,1) inputs.
PairingResult pairing_sq(const EndValuedForm& psi, const Form& omega0,
                         const Form& bigOmega0);

// Relative sup-norm residual of
// tr([[theta,theta*],theta] ^ theta*) = 1/2 tr([theta,theta] ^ [theta,theta]*),
// an exact algebraic identity for (1,0) inputs.
double jacobi_identity_check(const EndValuedForm& theta);

struct FlatnessParts {
  EndValuedForm c20, c11, c02;
};

// Bidegree components of (theta + theta*)^2: 1/2[theta,theta], [theta,theta*],
// 1/2[theta*,theta*]. The adjoint symmetry is hermitian_adjoint(c20) = -c02.
FlatnessParts flatness_decompose(const EndValuedForm& theta);

// 4-index real curvature tensor on R^m with the usual symmetries.
class CurvatureTensor {
 public:
  CurvatureTensor(int m, std::vector<double> r);

  int m() const { return m_; }
  double at(int i, int j, int k, int l) const {
    return r_[((static_cast<std::size_t>(i) * m_ + j) * m_ + k) * m_ + l];
  }
  const std::vector<double>& data() const { return r_; }

  // Pair symmetries, antisymmetries, and the first Bianchi identity.
  double symmetry_residual() const;
  void check_symmetries(double tol = 1e-12) const;

 private:
  int m_;
  std::vector<double> r_;
};

// R_{ijkl} = c (delta_{il} delta_{jk} - delta_{ik} delta_{jl}); sectional
// curvature K(X,Y) = R(X,Y,Y,X)/|X^Y|^2 equals c.
CurvatureTensor constant_curvature_tensor(int m, double c);

// Complex-multilinear extension evaluated at (Z, W, Wbar, Zbar); real by the
// symmetries.
double complexified_sectional(const CurvatureTensor& r, const Eigen::VectorXcd& z,
                              const Eigen::VectorXcd& w);

// du : R^{2n} -> R^m together with the standard complex structure J on R^{2n}
// (coordinates x1, y1, ..., xn, yn; J dx_l = dy_l).
struct DifferentialData {
  int n = 0;             // complex dimension of the source
  Eigen::MatrixXd du;    // m x 2n
};

// Real vector in R^{2n} realizing u in C^n; the realization of i*u is J
// applied to the realization of u.
Eigen::VectorXd realize(const Eigen::VectorXcd& u);

struct SiuSampsonDiagnostics {
  std::vector<std::string> warnings;
  std::vector<double> term_weights;      // mu_i'
  std::vector<double> term_curvatures;   // R(Z_i, W_i, Wbar_i, Zbar_i)
};

// Pointwise Sampson-Siu density sum_i mu_i' R(Z_i, W_i, Wbar_i, Zbar_i);
// nonpositive whenever R has nonpositive complexified sectional curvature.
double siu_sampson_density(const DifferentialData& d, const CurvatureTensor& r,
                           const StrongPositivityDecomposition& decomp,
                           const Form& omega0,
                           SiuSampsonDiagnostics* diag = nullptr);

}  // namespace hrlab

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hrlab/form.hpp"

namespace hrlab {

// c_{p,q} = i^{p-q} (-1)^{(p+q)(p+q-1)/2}, the phase making
// Q(a, b) = c_{p,q} * top_ratio(a ^ conj(b) ^ Omega0, omega0) hermitian for
// real Omega0.
Complex q_constant(int p, int q);

// Q(a, b) evaluated directly through top_ratio.
Complex q_value(const Form& a, const Form& b, const Form& omega0,
                const Form& bigOmega0);

struct QMatrix {
  int p = 0, q = 0;
  Eigen::MatrixXcd m;  // dim Lambda^{p,q} square, hermitian for real Omega0
};

QMatrix q_matrix(int p, int q, const Form& omega0, const Form& bigOmega0);

struct PrimitiveSpace {
  int p = 0, q = 0;
  // Orthonormal coefficient-space basis of P^{p,q}, one column per element.
  Eigen::MatrixXcd basis;
  int codim = 0;
  std::vector<Form> basis_forms(int n) const;
};

// Kernel of alpha -> top_ratio(alpha ^ omega0 ^ Omega0, omega0); supports
// p + q = 2 only. For (2,0)/(0,2) the functional vanishes and P = Lambda.
PrimitiveSpace primitive_space(int p, int q, const Form& omega0, const Form& bigOmega0);

enum class Verdict { Certified, Refuted, Degenerate };

std::string to_string(Verdict v);

struct HRReport {
  int p = 0, q = 0;
  bool decomposition_ok = false;
  std::vector<double> spectrum;  // Q restricted to P, ascending
  double min_eigenvalue = 0.0;
  Verdict verdict = Verdict::Degenerate;
  std::optional<Form> witness;  // Refuted only: alpha in P with Q(alpha,alpha) < -tol
  double tol = 0.0;
  std::string reason;

  bool certified() const { return verdict == Verdict::Certified; }
};

// Hodge-Riemann certification of Omega0 for degree (p,q), p + q = 2,
// with respect to omega0. tol < 0 selects 1e-9 * spectral radius of Q.
HRReport certify(const Form& omega0, const Form& bigOmega0, int p, int q,
                 double tol = -1.0);

// Omega0 = omega0^{n-p-q}.
HRReport certify_classical(const Form& omega0, int p, int q);

// Omega0 = wedge of n-(p+q) positive (1,1) factors.
HRReport certify_timorin(const Form& omega0, const std::vector<Form>& factors,
                         int p, int q);

// Omega0 = sum_{j=0}^{n-2} omega1^{n-2-j} ^ omega2^j.
HRReport certify_mixed_sum(const Form& omega0, const Form& omega1,
                           const Form& omega2, int p, int q);

Form mixed_sum_form(const Form& omega1, const Form& omega2);

struct CounterexampleHit {
  double a = 0.0;          // first refuting grid value
  double threshold = 0.0;  // bisection-refined onset of refutation
  HRReport report;
};

// Scans Omega0(a) = omega1^2 + a * omega2^2 on C^4 over the grid; returns the
// first refuted a (with a bisected threshold when a certified grid neighbour
// exists), or nullopt when every grid point certifies.
std::optional<CounterexampleHit> find_counterexample(
    const Form& omega1, const Form& omega2, const Form& omega0,
    const std::vector<double>& a_grid);

// 61 log-spaced points in [1e-3, 1e3].
std::vector<double> default_counterexample_grid();

struct HRTypeResult {
  Form omega;                       // michelsohn_root(omega0 ^ Omega0)
  std::array<HRReport, 3> reports;  // degrees (2,0), (1,1), (0,2)
  bool root_ok = false;
  std::string note;
};

// Checks the pointwise conditions of a balanced structure of Hodge-Riemann
// type: omega0 ^ Omega0 strictly positive with (n-1)-root omega, and Omega0
// Hodge-Riemann for every degree with p + q = 2. Closedness is automatic for
// constant forms and recorded in `note`.
HRTypeResult hr_type_check(const Form& omega0, const Form& bigOmega0);

}  // namespace hrlab

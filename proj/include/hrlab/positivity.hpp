#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hrlab/form.hpp"

namespace hrlab {

// n x n hermitian coefficient matrix A of the real (1,1)-form
// i sum A_{jk} dz^j ^ dzbar^k. Hermiticity is enforced at construction.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Eigen::MatrixXcd a, double tol = 1e-12);

  int n() const { return static_cast<int>(a_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return a_; }

  double min_eigenvalue() const;
  // Scale-invariant positivity: min eigenvalue > 1e-10 * (1 + largest |entry|).
  bool is_positive() const;

 private:
  Eigen::MatrixXcd a_;
};

Form form_from_matrix(const HermitianMatrix& a);
HermitianMatrix matrix_from_form(const Form& omega, double tol = 1e-10);

// A = G G^dagger + 1e-3 I with seeded gaussian G; deterministic per seed.
HermitianMatrix random_positive(int n, std::uint64_t seed);

// Coefficient matrix B with Phi = sum over (j,k) of the monomial slot
// (complement j | complement k), normalized so that for Phi =
// omega_A^{n-1}/(n-1)! one gets B = adj(A). Phi must be a real (n-1,n-1)-form.
Eigen::MatrixXcd top_coefficient_matrix(const Form& phi);

// Inverse of A -> omega_A^{n-1}/(n-1)!: recovers the positive (1,1)-form
// omega with power(omega, n-1)/(n-1)! = phi, via A = det(B)^{1/(n-1)} B^{-1}
// on the adjugate matrix B of phi. Throws if B is not positive definite.
Form michelsohn_root(const Form& phi);

struct SimpleTerm {
  double mu = 0.0;
  std::vector<Eigen::VectorXcd> alphas;  // n-2 covectors in C^n
};

struct StrongPositivityDecomposition {
  int n = 0;
  std::vector<SimpleTerm> terms;
};

// sum_i mu_i (i a_1 ^ abar_1) ^ ... ^ (i a_{n-2} ^ abar_{n-2}); requires
// mu_i >= 0 and linearly independent covectors within each term.
Form strongly_positive_form(const StrongPositivityDecomposition& d);

// Wedge product of n-1 positive (1,1)-forms (the omega_0 ^ ... ^ omega_{n-2}
// product of a multipolarization).
Form multipolarization_product(const std::vector<Form>& factors);

// The simple positive (1,1)-form i alpha ^ alphabar for a covector alpha.
Form simple_positive_form(int n, const Eigen::VectorXcd& alpha);

}  // namespace hrlab

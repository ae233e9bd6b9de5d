#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hrlab/multiindex.hpp"

namespace hrlab {

using Complex = std::complex<double>;

using BasisPair = std::pair<MultiIndex, MultiIndex>;

// Ordered basis of Lambda^{p,q}: pairs (I, J) with |I| = p, |J| = q,
// lexicographic, I major. Cached per (n, p, q).
const std::vector<BasisPair>& basis(int n, int p, int q);

// A constant (p,q)-form on C^n,
//   a = sum_{I,J} a_{I,J} dz^I wedge dzbar^J,
// dz^I = dz^{i1} ^ ... ^ dz^{ip} with i1 < ... < ip, coefficients stored in
// the canonical basis order. The monomial normal form puts every dz factor
// before every dzbar factor.
class Form {
 public:
  Form(int n, int p, int q);

  static Form scalar(int n, Complex value);
  static Form monomial(int n, const MultiIndex& I, const MultiIndex& J,
                       Complex value = Complex(1.0, 0.0));

  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return static_cast<int>(c_.size()); }

  const Eigen::VectorXcd& coeffs() const { return c_; }
  Eigen::VectorXcd& coeffs() { return c_; }

  int slot(const MultiIndex& I, const MultiIndex& J) const;
  Complex coeff(const MultiIndex& I, const MultiIndex& J) const;
  void set_coeff(const MultiIndex& I, const MultiIndex& J, Complex v);

  double sup_norm() const;
  bool is_zero(double tol = 0.0) const;

  // A form is real iff it equals its own conjugate.
  bool is_real(double tol = 1e-12) const;

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(Complex s);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Complex s, Form a) { return a *= s; }
  friend Form operator*(Form a, Complex s) { return a *= s; }

 private:
  int n_, p_, q_;
  Eigen::VectorXcd c_;
};

// Graded-commutative wedge product. Degree overflow past (n,n) yields the
// zero form of clamped bidegree.
Form wedge(const Form& a, const Form& b);

// Complex conjugation, (p,q) -> (q,p).
Form conjugate(const Form& a);

// k-fold wedge power; power(a, 0) is the scalar 1.
Form power(const Form& a, int k);

// The unique c with eta = c * omega0^n / n!; omega0 must be a
// nondegenerate real (1,1)-form and eta of top bidegree (n,n).
Complex top_ratio(const Form& eta, const Form& omega0, double tol = 1e-12);

// Coefficient of omega0^n / n! in the monomial normal form; throws
// domain_error when omega0 is degenerate. This is the normalization every
// top_ratio call divides by.
Complex top_volume(const Form& omega0, double tol = 1e-12);

// Reference wedge computed by naive expansion into generator sequences with
// explicit bubble-sort parities. Test oracle; shares no arithmetic with wedge.
Form brute_wedge(const Form& a, const Form& b);

}  // namespace hrlab

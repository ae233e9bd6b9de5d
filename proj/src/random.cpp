#include "hrlab/random.hpp"

#include <cmath>

namespace hrlab {

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  return Complex(gauss(rng), gauss(rng)) / std::sqrt(2.0);
}

Form random_positive_form(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      g(r, c) = Complex(gauss(rng), gauss(rng)) / std::sqrt(2.0);
    }
  }
  Eigen::MatrixXcd a = g * g.adjoint() + 1e-3 * Eigen::MatrixXcd::Identity(n, n);
  return form_from_matrix(HermitianMatrix(std::move(a)));
}

Form random_positive_form(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_positive_form(n, rng);
}

Form random_form(int n, int p, int q, Rng& rng) {
  Form f(n, p, q);
  for (int i = 0; i < f.dim(); ++i) f.coeffs()[i] = random_complex(rng);
  return f;
}

Form random_real_form(int n, int p, int q, Rng& rng) {
  Form g = random_form(n, p, q, rng);
  Form out = conjugate(g);
  out += g;
  return out;
}

Eigen::VectorXcd random_covector(int n, Rng& rng) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = random_complex(rng);
  return v;
}

EndValuedForm random_theta(int r, int n, Rng& rng) {
  std::vector<Eigen::MatrixXcd> mats;
  mats.reserve(n);
  for (int a = 0; a < n; ++a) {
    Eigen::MatrixXcd m(r, r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) m(i, j) = random_complex(rng);
    }
    mats.push_back(std::move(m));
  }
  return EndValuedForm::from_matrices_10(mats);
}

EndValuedForm random_ihermitian(int r, const Form& omega0, Rng& rng) {
  const int n = omega0.n();
  EndValuedForm f(r, n, 1, 1);
  const Complex i(0.0, 1.0);
  for (int j = 0; j < r; ++j) {
    Form diag = random_real_form(n, 1, 1, rng);
    diag *= -i;
    f.at(j, j) = std::move(diag);
    for (int k = j + 1; k < r; ++k) {
      Form b = random_form(n, 1, 1, rng);
      Form c = conjugate(b);
      c *= Complex(-1.0, 0.0);
      f.at(j, k) = std::move(b);
      f.at(k, j) = std::move(c);
    }
  }
  return f;
}

EndValuedForm random_primitive_traceless_ihermitian(int r, const Form& omega0,
                                                    const Form& bigOmega0, Rng& rng) {
  EndValuedForm f = random_ihermitian(r, omega0, rng);
  Form tr = mv_trace(f);
  tr *= Complex(1.0 / r, 0.0);
  for (int j = 0; j < r; ++j) f.at(j, j) -= tr;
  f = primitive_project_mv(f, omega0, bigOmega0);
  const double norm = f.sup_norm();
  if (norm > 0.0) f *= Complex(1.0 / norm, 0.0);
  return f;
}

StrongPositivityDecomposition random_decomposition(int n, int terms, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StrongPositivityDecomposition d;
  d.n = n;
  for (int t = 0; t < terms; ++t) {
    SimpleTerm term;
    term.mu = std::abs(gauss(rng));
    while (true) {
      term.alphas.clear();
      for (int j = 0; j < n - 2; ++j) term.alphas.push_back(random_covector(n, rng));
      if (n == 2) break;
      Eigen::MatrixXcd m(n - 2, n);
      for (int j = 0; j < n - 2; ++j) m.row(j) = term.alphas[j].transpose();
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
      if (svd.singularValues().minCoeff() >
          1e-6 * (1.0 + svd.singularValues()[0])) {
        break;
      }
    }
    d.terms.push_back(std::move(term));
  }
  return d;
}

}  // namespace hrlab

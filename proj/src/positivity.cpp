#include "hrlab/positivity.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hrlab {

namespace {

MultiIndex complement_of(int n, int j) {
  MultiIndex c;
  c.reserve(n - 1);
  for (int v = 1; v <= n; ++v) {
    if (v != j) c.push_back(v);
  }
  return c;
}

}  // namespace

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd a, double tol) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() < 1) {
    throw std::invalid_argument("HermitianMatrix: matrix must be square");
  }
  const double scale = 1.0 + a_.cwiseAbs().maxCoeff();
  if ((a_ - a_.adjoint().eval()).cwiseAbs().maxCoeff() > tol * scale) {
    throw std::invalid_argument("HermitianMatrix: matrix is not hermitian");
  }
  a_ = 0.5 * (a_ + a_.adjoint().eval());
}

double HermitianMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool HermitianMatrix::is_positive() const {
  return min_eigenvalue() > 1e-10 * (1.0 + a_.cwiseAbs().maxCoeff());
}

Form form_from_matrix(const HermitianMatrix& a) {
  const int n = a.n();
  Form w(n, 1, 1);
  const Complex i(0.0, 1.0);
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      w.set_coeff({j}, {k}, i * a.matrix()(j - 1, k - 1));
    }
  }
  return w;
}

HermitianMatrix matrix_from_form(const Form& omega, double tol) {
  if (omega.p() != 1 || omega.q() != 1) {
    throw std::invalid_argument("matrix_from_form: expected a (1,1)-form");
  }
  if (!omega.is_real(tol)) {
    throw std::invalid_argument("matrix_from_form: form is not real");
  }
  const int n = omega.n();
  Eigen::MatrixXcd a(n, n);
  const Complex i(0.0, 1.0);
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      a(j - 1, k - 1) = omega.coeff({j}, {k}) / i;
    }
  }
  return HermitianMatrix(std::move(a), tol);
}

HermitianMatrix random_positive(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_positive: need n >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      g(r, c) = Complex(gauss(rng), gauss(rng)) / std::sqrt(2.0);
    }
  }
  Eigen::MatrixXcd a = g * g.adjoint() + 1e-3 * Eigen::MatrixXcd::Identity(n, n);
  return HermitianMatrix(std::move(a));
}

Eigen::MatrixXcd top_coefficient_matrix(const Form& phi) {
  const int n = phi.n();
  if (n < 2 || phi.p() != n - 1 || phi.q() != n - 1) {
    throw std::invalid_argument("top_coefficient_matrix: expected an (n-1,n-1)-form, n >= 2");
  }
  const Complex i(0.0, 1.0);
  Eigen::MatrixXcd b(n, n);
  for (int j = 1; j <= n; ++j) {
    const MultiIndex rows = complement_of(n, j);
    for (int k = 1; k <= n; ++k) {
      const MultiIndex cols = complement_of(n, k);
      // Reordering sign of dz^{a_1} dzbar^{b_1} ... into normal form, fixed by
      // wedging the identity-matched monomials through the product itself.
      Form pattern = Form::scalar(n, 1.0);
      for (int t = 0; t < n - 1; ++t) {
        pattern = wedge(pattern, Form::monomial(n, {rows[t]}, {cols[t]}, i));
      }
      const Complex s = pattern.coeff(rows, cols);
      const Complex minor = phi.coeff(rows, cols) / s;
      const double cof = ((j + k) % 2 == 0) ? 1.0 : -1.0;
      b(k - 1, j - 1) = cof * minor;  // adj(A)_{kj} = (-1)^{j+k} minor_{jk}
    }
  }
  return b;
}

Form michelsohn_root(const Form& phi) {
  const int n = phi.n();
  if (n < 2) throw std::invalid_argument("michelsohn_root: need n >= 2");
  if (!phi.is_real(1e-9)) {
    throw std::invalid_argument("michelsohn_root: form is not real");
  }
  Eigen::MatrixXcd braw = top_coefficient_matrix(phi);
  const double scale = 1.0 + braw.cwiseAbs().maxCoeff();
  if ((braw - braw.adjoint().eval()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw std::domain_error("michelsohn_root: coefficient matrix is not hermitian");
  }
  Eigen::MatrixXcd b = 0.5 * (braw + braw.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b);
  const Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() <= 1e-10 * scale) {
    throw std::domain_error("michelsohn_root: form is not strictly positive");
  }
  double logdet = 0.0;
  for (int t = 0; t < n; ++t) logdet += std::log(ev[t]);
  const double root = std::exp(logdet / (n - 1));
  Eigen::VectorXd inv = ev.cwiseInverse() * root;
  Eigen::MatrixXcd a =
      es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
  return form_from_matrix(HermitianMatrix(std::move(a), 1e-8));
}

Form simple_positive_form(int n, const Eigen::VectorXcd& alpha) {
  if (alpha.size() != n) {
    throw std::invalid_argument("simple_positive_form: covector size mismatch");
  }
  Form w(n, 1, 1);
  const Complex i(0.0, 1.0);
  for (int l = 1; l <= n; ++l) {
    for (int m = 1; m <= n; ++m) {
      w.set_coeff({l}, {m}, i * alpha[l - 1] * std::conj(alpha[m - 1]));
    }
  }
  return w;
}

Form strongly_positive_form(const StrongPositivityDecomposition& d) {
  const int n = d.n;
  if (n < 2) throw std::invalid_argument("strongly_positive_form: need n >= 2");
  Form out(n, n - 2, n - 2);
  for (const auto& term : d.terms) {
    if (term.mu < 0.0) {
      throw std::invalid_argument("strongly_positive_form: negative weight");
    }
    if (static_cast<int>(term.alphas.size()) != n - 2) {
      throw std::invalid_argument("strongly_positive_form: expected n-2 covectors per term");
    }
    if (n > 2) {
      Eigen::MatrixXcd m(n - 2, n);
      for (int t = 0; t < n - 2; ++t) {
        if (term.alphas[t].size() != n) {
          throw std::invalid_argument("strongly_positive_form: covector size mismatch");
        }
        m.row(t) = term.alphas[t].transpose();
      }
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
      const double smax = svd.singularValues()[0];
      if (svd.singularValues().minCoeff() <= 1e-12 * (1.0 + smax)) {
        throw std::invalid_argument("strongly_positive_form: dependent covectors in a term");
      }
    }
    Form term_form = Form::scalar(n, term.mu);
    for (const auto& alpha : term.alphas) {
      term_form = wedge(term_form, simple_positive_form(n, alpha));
    }
    out += term_form;
  }
  return out;
}

Form multipolarization_product(const std::vector<Form>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("multipolarization_product: empty factor list");
  }
  const int n = factors.front().n();
  if (static_cast<int>(factors.size()) != n - 1) {
    throw std::invalid_argument("multipolarization_product: expected n-1 factors");
  }
  Form out = Form::scalar(n, 1.0);
  for (const auto& f : factors) {
    if (f.n() != n || f.p() != 1 || f.q() != 1) {
      throw std::invalid_argument("multipolarization_product: factors must be (1,1)-forms");
    }
    if (!matrix_from_form(f).is_positive()) {
      throw std::invalid_argument("multipolarization_product: factor is not positive");
    }
    out = wedge(out, f);
  }
  return out;
}

}  // namespace hrlab

#include "hrlab/pairings.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hrlab/hodge_riemann.hpp"

namespace hrlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_same_shape(const EndValuedForm& a, const EndValuedForm& b) {
  if (a.r() != b.r() || a.n() != b.n()) {
    throw std::invalid_argument("end-valued forms: rank or dimension mismatch");
  }
}

Complex primitivity_denominator(const Form& omega0, const Form& bigOmega0) {
  return top_ratio(wedge(wedge(omega0, omega0), bigOmega0), omega0);
}

}  // namespace

EndValuedForm::EndValuedForm(int r, int n, int p, int q)
    : r_(r), n_(n), p_(p), q_(q) {
  if (r < 1) throw std::invalid_argument("EndValuedForm: rank must be >= 1");
  e_.assign(static_cast<std::size_t>(r) * r, Form(n, p, q));
}

EndValuedForm EndValuedForm::from_matrices_10(const std::vector<Eigen::MatrixXcd>& n_a) {
  const int n = static_cast<int>(n_a.size());
  if (n < 1) throw std::invalid_argument("from_matrices_10: need one matrix per dz^a");
  const int r = static_cast<int>(n_a.front().rows());
  EndValuedForm theta(r, n, 1, 0);
  for (int a = 1; a <= n; ++a) {
    const auto& m = n_a[a - 1];
    if (m.rows() != r || m.cols() != r) {
      throw std::invalid_argument("from_matrices_10: ragged matrix list");
    }
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        theta.at(j, k) += Form::monomial(n, {a}, {}, m(j, k));
      }
    }
  }
  return theta;
}

double EndValuedForm::sup_norm() const {
  double m = 0.0;
  for (const auto& f : e_) m = std::max(m, f.sup_norm());
  return m;
}

bool EndValuedForm::is_ihermitian(double tol) const {
  if (p_ != 1 || q_ != 1) return false;
  const double scale = 1.0 + sup_norm();
  for (int j = 0; j < r_; ++j) {
    for (int k = 0; k < r_; ++k) {
      Form d = conjugate(at(j, k));
      d += at(k, j);
      if (d.sup_norm() > tol * scale) return false;
    }
  }
  return true;
}

EndValuedForm& EndValuedForm::operator+=(const EndValuedForm& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
  return *this;
}

EndValuedForm& EndValuedForm::operator-=(const EndValuedForm& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= other.e_[i];
  return *this;
}

EndValuedForm& EndValuedForm::operator*=(Complex s) {
  for (auto& f : e_) f *= s;
  return *this;
}

EndValuedForm mv_wedge(const EndValuedForm& a, const EndValuedForm& b) {
  check_same_shape(a, b);
  const int r = a.r();
  EndValuedForm out(r, a.n(), std::min(a.p() + b.p(), a.n()),
                    std::min(a.q() + b.q(), a.n()));
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < r; ++k) {
      for (int j = 0; j < r; ++j) {
        out.at(i, k) += wedge(a.at(i, j), b.at(j, k));
      }
    }
  }
  return out;
}

Form mv_trace(const EndValuedForm& a) {
  Form t(a.n(), a.p(), a.q());
  for (int j = 0; j < a.r(); ++j) t += a.at(j, j);
  return t;
}

EndValuedForm hermitian_adjoint(const EndValuedForm& psi) {
  EndValuedForm out(psi.r(), psi.n(), psi.q(), psi.p());
  for (int j = 0; j < psi.r(); ++j) {
    for (int k = 0; k < psi.r(); ++k) {
      out.at(k, j) = conjugate(psi.at(j, k));
    }
  }
  return out;
}

EndValuedForm graded_commutator(const EndValuedForm& a, const EndValuedForm& b) {
  EndValuedForm ab = mv_wedge(a, b);
  EndValuedForm ba = mv_wedge(b, a);
  const int da = a.p() + a.q();
  const int db = b.p() + b.q();
  if ((da * db) % 2 == 0) {
    ab -= ba;
  } else {
    ab += ba;
  }
  return ab;
}

double check_primitive_mv(const EndValuedForm& f, const Form& omega0,
                          const Form& bigOmega0) {
  if (f.p() != 1 || f.q() != 1) {
    throw std::invalid_argument("check_primitive_mv: expected a (1,1) end-valued form");
  }
  const Form pairing = wedge(omega0, bigOmega0);
  double worst = 0.0;
  for (int j = 0; j < f.r(); ++j) {
    for (int k = 0; k < f.r(); ++k) {
      worst = std::max(worst,
                       std::abs(top_ratio(wedge(f.at(j, k), pairing), omega0)));
    }
  }
  return worst;
}

EndValuedForm primitive_project_mv(const EndValuedForm& f, const Form& omega0,
                                   const Form& bigOmega0) {
  if (f.p() != 1 || f.q() != 1) {
    throw std::invalid_argument("primitive_project_mv: expected a (1,1) end-valued form");
  }
  const Complex denom = primitivity_denominator(omega0, bigOmega0);
  if (std::abs(denom) < 1e-13) {
    throw std::domain_error("primitive_project_mv: omega0^2 ^ Omega0 is degenerate");
  }
  const Form pairing = wedge(omega0, bigOmega0);
  EndValuedForm out = f;
  for (int j = 0; j < f.r(); ++j) {
    for (int k = 0; k < f.r(); ++k) {
      const Complex c = top_ratio(wedge(f.at(j, k), pairing), omega0) / denom;
      Form corr = omega0;
      corr *= c;
      out.at(j, k) -= corr;
    }
  }
  return out;
}

double he_residual(const EndValuedForm& f, const Form& omega0,
                   const Form& bigOmega0, double lambda) {
  if (f.p() != 1 || f.q() != 1) {
    throw std::invalid_argument("he_residual: expected a (1,1) end-valued form");
  }
  const Complex i(0.0, 1.0);
  const Complex denom = primitivity_denominator(omega0, bigOmega0);
  const Form pairing = wedge(omega0, bigOmega0);
  double worst = 0.0;
  for (int j = 0; j < f.r(); ++j) {
    for (int k = 0; k < f.r(); ++k) {
      Complex v = i * top_ratio(wedge(f.at(j, k), pairing), omega0);
      if (j == k) v -= lambda * denom;
      worst = std::max(worst, std::abs(v));
    }
  }
  return worst;
}

double bmy_density(const EndValuedForm& f, const Form& omega0,
                   const Form& bigOmega0, bool allow_nonprimitive) {
  if (!f.is_ihermitian(1e-8)) {
    throw std::invalid_argument("bmy_density: i*F must be hermitian");
  }
  const int r = f.r();
  EndValuedForm f0 = f;
  Form tr = mv_trace(f);
  tr *= Complex(1.0 / r, 0.0);
  for (int j = 0; j < r; ++j) f0.at(j, j) -= tr;
  if (!allow_nonprimitive) {
    const double residual = check_primitive_mv(f0, omega0, bigOmega0);
    const double scale =
        (1.0 + f0.sup_norm()) * (1.0 + std::abs(primitivity_denominator(omega0, bigOmega0)));
    if (residual > 1e-8 * scale) {
      throw std::domain_error("bmy_density: trace-free part is not primitive");
    }
  }
  const Form density_form = wedge(mv_trace(mv_wedge(f0, f0)), bigOmega0);
  const Complex v = top_ratio(density_form, omega0);
  return r / (4.0 * kPi * kPi) * v.real();
}

PairingResult pairing_sq(const EndValuedForm& psi, const Form& omega0,
                         const Form& bigOmega0) {
  if (psi.p() + psi.q() != 2) {
    throw std::invalid_argument("pairing_sq: psi must have total degree 2");
  }
  HRReport rep = certify(omega0, bigOmega0, psi.p(), psi.q());
  if (!rep.certified()) {
    throw std::domain_error("pairing_sq: Omega0 is not Hodge-Riemann for this degree");
  }
  if (psi.p() == 1 && psi.q() == 1) {
    const double residual = check_primitive_mv(psi, omega0, bigOmega0);
    if (residual > 1e-8 * (1.0 + psi.sup_norm())) {
      throw std::domain_error("pairing_sq: (1,1) input must be entrywise primitive");
    }
  }
  PairingResult out;
  const Form raw_form = wedge(mv_trace(mv_wedge(psi, hermitian_adjoint(psi))), bigOmega0);
  out.raw = top_ratio(raw_form, omega0).real();
  for (int j = 0; j < psi.r(); ++j) {
    for (int k = 0; k < psi.r(); ++k) {
      out.q_energy += q_value(psi.at(j, k), psi.at(j, k), omega0, bigOmega0).real();
    }
  }
  return out;
}

double jacobi_identity_check(const EndValuedForm& theta) {
  if (theta.p() != 1 || theta.q() != 0) {
    throw std::invalid_argument("jacobi_identity_check: theta must have bidegree (1,0)");
  }
  const EndValuedForm adj = hermitian_adjoint(theta);
  const EndValuedForm inner = graded_commutator(graded_commutator(theta, adj), theta);
  const Form lhs = mv_trace(mv_wedge(inner, adj));
  const EndValuedForm cc = graded_commutator(theta, theta);
  Form rhs = mv_trace(mv_wedge(cc, hermitian_adjoint(cc)));
  rhs *= Complex(0.5, 0.0);
  Form diff = lhs;
  diff -= rhs;
  const double scale = 1.0 + std::max(lhs.sup_norm(), rhs.sup_norm());
  return diff.sup_norm() / scale;
}

FlatnessParts flatness_decompose(const EndValuedForm& theta) {
  if (theta.p() != 1 || theta.q() != 0) {
    throw std::invalid_argument("flatness_decompose: theta must have bidegree (1,0)");
  }
  const EndValuedForm adj = hermitian_adjoint(theta);
  return FlatnessParts{mv_wedge(theta, theta), graded_commutator(theta, adj),
                       mv_wedge(adj, adj)};
}

CurvatureTensor::CurvatureTensor(int m, std::vector<double> r)
    : m_(m), r_(std::move(r)) {
  if (m < 2) throw std::invalid_argument("CurvatureTensor: need m >= 2");
  if (r_.size() != static_cast<std::size_t>(m) * m * m * m) {
    throw std::invalid_argument("CurvatureTensor: wrong data size");
  }
}

double CurvatureTensor::symmetry_residual() const {
  double worst = 0.0;
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      for (int k = 0; k < m_; ++k) {
        for (int l = 0; l < m_; ++l) {
          const double v = at(i, j, k, l);
          worst = std::max(worst, std::abs(v + at(j, i, k, l)));
          worst = std::max(worst, std::abs(v + at(i, j, l, k)));
          worst = std::max(worst, std::abs(v - at(k, l, i, j)));
          worst = std::max(worst,
                           std::abs(v + at(i, k, l, j) + at(i, l, j, k)));
        }
      }
    }
  }
  return worst;
}

void CurvatureTensor::check_symmetries(double tol) const {
  double scale = 0.0;
  for (double v : r_) scale = std::max(scale, std::abs(v));
  if (symmetry_residual() > tol * (1.0 + scale)) {
    throw std::invalid_argument("CurvatureTensor: curvature symmetries violated");
  }
}

CurvatureTensor constant_curvature_tensor(int m, double c) {
  std::vector<double> r(static_cast<std::size_t>(m) * m * m * m, 0.0);
  auto idx = [m](int i, int j, int k, int l) {
    return ((static_cast<std::size_t>(i) * m + j) * m + k) * m + l;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      r[idx(i, j, j, i)] += c;
      r[idx(i, j, i, j)] -= c;
    }
  }
  return CurvatureTensor(m, std::move(r));
}

double complexified_sectional(const CurvatureTensor& r, const Eigen::VectorXcd& z,
                              const Eigen::VectorXcd& w) {
  const int m = r.m();
  if (z.size() != m || w.size() != m) {
    throw std::invalid_argument("complexified_sectional: vector size mismatch");
  }
  r.check_symmetries();
  Complex acc(0.0, 0.0);
  for (int i = 0; i < m; ++i) {
    if (z[i] == Complex(0.0, 0.0)) continue;
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          const double rv = r.at(i, j, k, l);
          if (rv == 0.0) continue;
          acc += rv * z[i] * w[j] * std::conj(w[k]) * std::conj(z[l]);
        }
      }
    }
  }
  return acc.real();
}

Eigen::VectorXd realize(const Eigen::VectorXcd& u) {
  Eigen::VectorXd x(2 * u.size());
  for (int l = 0; l < u.size(); ++l) {
    x[2 * l] = u[l].real();
    x[2 * l + 1] = u[l].imag();
  }
  return x;
}

double siu_sampson_density(const DifferentialData& d, const CurvatureTensor& r,
                           const StrongPositivityDecomposition& decomp,
                           const Form& omega0,
                           SiuSampsonDiagnostics* diag) {
  const int n = d.n;
  const int m = r.m();
  if (decomp.n != n) {
    throw std::invalid_argument("siu_sampson_density: dimension mismatch");
  }
  if (d.du.cols() != 2 * n || d.du.rows() != m) {
    throw std::invalid_argument("siu_sampson_density: du must be m x 2n");
  }
  r.check_symmetries();

  // Spot-check the curvature sign hypothesis.
  {
    std::mt19937_64 rng(0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::VectorXcd z(m), w(m);
      for (int i = 0; i < m; ++i) {
        z[i] = Complex(gauss(rng), gauss(rng));
        w[i] = Complex(gauss(rng), gauss(rng));
      }
      const double v = complexified_sectional(r, z, w);
      if (v > 1e-10 * (1.0 + std::abs(v))) {
        if (diag != nullptr) {
          diag->warnings.push_back(
              "sampled complexified sectional curvature is positive");
        }
        break;
      }
    }
  }

  const Complex imag(0.0, 1.0);
  double density = 0.0;
  for (std::size_t t = 0; t < decomp.terms.size(); ++t) {
    const auto& term = decomp.terms[t];
    if (static_cast<int>(term.alphas.size()) != n - 2 || term.mu < 0.0) {
      throw std::invalid_argument("siu_sampson_density: malformed decomposition term");
    }
    Eigen::VectorXcd u, v;
    if (n == 2) {
      u = Eigen::VectorXcd::Zero(2);
      v = Eigen::VectorXcd::Zero(2);
      u[0] = 1.0;
      v[1] = 1.0;
    } else {
      Eigen::MatrixXcd a(n - 2, n);
      for (int j = 0; j < n - 2; ++j) a.row(j) = term.alphas[j].transpose();
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      const double smax = sv[0];
      int rank = 0;
      for (int j = 0; j < sv.size(); ++j) {
        if (sv[j] > 1e-12 * (1.0 + smax)) ++rank;
      }
      if (n - rank != 2) {
        throw std::invalid_argument(
            "siu_sampson_density: term " + std::to_string(t) +
            " has joint kernel of complex dimension != 2");
      }
      u = svd.matrixV().col(n - 2);
      v = svd.matrixV().col(n - 1);
    }

    const Eigen::VectorXd x = realize(u);
    const Eigen::VectorXd jx = realize((imag * u.array()).matrix());
    const Eigen::VectorXd y = realize(v);
    const Eigen::VectorXd jy = realize((imag * v.array()).matrix());
    const Eigen::VectorXcd z =
        (d.du * x).cast<Complex>() - imag * (d.du * jx).cast<Complex>();
    const Eigen::VectorXcd w =
        (d.du * y).cast<Complex>() - imag * (d.du * jy).cast<Complex>();

    // Weight relating this term wedged with the P-plane volume to dVol.
    Form term_form = Form::scalar(n, term.mu);
    for (const auto& alpha : term.alphas) {
      term_form = wedge(term_form, simple_positive_form(n, alpha));
    }
    const Form plane_vol = wedge(simple_positive_form(n, u.conjugate()),
                                 simple_positive_form(n, v.conjugate()));
    const double weight = top_ratio(wedge(term_form, plane_vol), omega0).real();

    const double curv = complexified_sectional(r, z, w);
    if (diag != nullptr) {
      diag->term_weights.push_back(weight);
      diag->term_curvatures.push_back(curv);
    }
    density += weight * curv;
  }
  return density;
}

}  // namespace hrlab

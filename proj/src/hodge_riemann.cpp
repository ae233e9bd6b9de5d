#include "hrlab/hodge_riemann.hpp"

#include <cmath>
#include <stdexcept>

#include "hrlab/positivity.hpp"

namespace hrlab {

namespace {

void check_certify_inputs(const Form& omega0, const Form& bigOmega0, int p, int q) {
  if (p + q != 2 || p < 0 || q < 0) {
    throw std::invalid_argument("certify: only degrees with p+q = 2 are supported");
  }
  const int n = omega0.n();
  if (omega0.p() != 1 || omega0.q() != 1 || !omega0.is_real(1e-9)) {
    throw std::invalid_argument("certify: omega0 must be a real (1,1)-form");
  }
  if (bigOmega0.n() != n || bigOmega0.p() != n - 2 || bigOmega0.q() != n - 2) {
    throw std::invalid_argument("certify: Omega0 must have bidegree (n-2,n-2)");
  }
  if (!bigOmega0.is_real(1e-9)) {
    throw std::invalid_argument("certify: Omega0 must be real");
  }
}

Form basis_monomial(int n, int p, int q, int slot) {
  const auto& b = basis(n, p, q);
  return Form::monomial(n, b[slot].first, b[slot].second);
}

}  // namespace

Complex q_constant(int p, int q) {
  Complex c;
  const int r = ((p - q) % 4 + 4) % 4;  // i^{p-q} as an exact unit
  switch (r) {
    case 0: c = Complex(1.0, 0.0); break;
    case 1: c = Complex(0.0, 1.0); break;
    case 2: c = Complex(-1.0, 0.0); break;
    default: c = Complex(0.0, -1.0); break;
  }
  const int k = p + q;
  if ((k * (k - 1) / 2) % 2 != 0) c = -c;
  return c;
}

Complex q_value(const Form& a, const Form& b, const Form& omega0,
                const Form& bigOmega0) {
  const Form t = wedge(wedge(a, conjugate(b)), bigOmega0);
  return q_constant(a.p(), a.q()) * top_ratio(t, omega0);
}

QMatrix q_matrix(int p, int q, const Form& omega0, const Form& bigOmega0) {
  const int n = omega0.n();
  if (bigOmega0.n() != n || bigOmega0.p() != n - p - q || bigOmega0.q() != n - p - q) {
    throw std::invalid_argument("q_matrix: Omega0 must have bidegree (n-p-q,n-p-q)");
  }
  const auto& bas = basis(n, p, q);
  const int dim = static_cast<int>(bas.size());
  const Complex c = q_constant(p, q);
  QMatrix out;
  out.p = p;
  out.q = q;
  out.m.resize(dim, dim);
  // Normalize against omega0^n / n! once; top_ratio would redo the power
  // chain for every entry.
  const Complex vol = top_volume(omega0);
  // Pre-wedge each conjugated basis monomial with Omega0 so the inner loop
  // pairs a monomial against one short form.
  std::vector<Form> cols;
  cols.reserve(dim);
  for (int t = 0; t < dim; ++t) {
    cols.push_back(wedge(conjugate(basis_monomial(n, p, q, t)), bigOmega0));
  }
  for (int s = 0; s < dim; ++s) {
    const Form es = basis_monomial(n, p, q, s);
    for (int t = 0; t < dim; ++t) {
      out.m(s, t) = c * wedge(es, cols[t]).coeffs()[0] / vol;
    }
  }
  return out;
}

std::vector<Form> PrimitiveSpace::basis_forms(int n) const {
  std::vector<Form> out;
  out.reserve(basis.cols());
  for (int c = 0; c < basis.cols(); ++c) {
    Form f(n, p, q);
    f.coeffs() = basis.col(c);
    out.push_back(std::move(f));
  }
  return out;
}

PrimitiveSpace primitive_space(int p, int q, const Form& omega0, const Form& bigOmega0) {
  check_certify_inputs(omega0, bigOmega0, p, q);
  const int n = omega0.n();
  const auto& bas = basis(n, p, q);
  const int dim = static_cast<int>(bas.size());
  PrimitiveSpace out;
  out.p = p;
  out.q = q;
  if (p != 1 || q != 1) {
    // alpha ^ omega0 ^ Omega0 overflows bidegree (n,n): every form is primitive.
    out.basis = Eigen::MatrixXcd::Identity(dim, dim);
    out.codim = 0;
    return out;
  }
  const Form pairing = wedge(omega0, bigOmega0);
  const Complex vol = top_volume(omega0);
  Eigen::RowVectorXcd v(dim);
  for (int s = 0; s < dim; ++s) {
    v[s] = wedge(basis_monomial(n, p, q, s), pairing).coeffs()[0] / vol;
  }
  const double vmax = v.cwiseAbs().maxCoeff();
  if (vmax <= 1e-13) {
    out.basis = Eigen::MatrixXcd::Identity(dim, dim);
    out.codim = 0;
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v, Eigen::ComputeFullV);
  out.basis = svd.matrixV().rightCols(dim - 1);
  out.codim = 1;
  return out;
}

HRReport certify(const Form& omega0, const Form& bigOmega0, int p, int q, double tol) {
  check_certify_inputs(omega0, bigOmega0, p, q);
  const int n = omega0.n();
  HRReport rep;
  rep.p = p;
  rep.q = q;

  const QMatrix qm = q_matrix(p, q, omega0, bigOmega0);
  // Q is conjugate-linear in its second slot, so the quadratic form on
  // coefficient vectors is x -> x^dagger M^T x; hermitize the transpose.
  const Eigen::MatrixXcd m =
      0.5 * (qm.m.transpose() + qm.m.conjugate()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> full(m, Eigen::EigenvaluesOnly);
  const double radius = full.eigenvalues().cwiseAbs().maxCoeff();
  rep.tol = (tol < 0.0) ? 1e-9 * radius : tol;

  if (p == 1 && q == 1) {
    const double directness =
        std::abs(top_ratio(wedge(wedge(omega0, omega0), bigOmega0), omega0));
    rep.decomposition_ok = directness > rep.tol;
  } else {
    rep.decomposition_ok = true;  // trivial C*omega0 summand outside Lambda^{1,1}
  }

  const PrimitiveSpace ps = primitive_space(p, q, omega0, bigOmega0);
  const Eigen::MatrixXcd k = ps.basis.adjoint() * m * ps.basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(k);
  rep.spectrum.assign(es.eigenvalues().data(),
                      es.eigenvalues().data() + es.eigenvalues().size());
  rep.min_eigenvalue = rep.spectrum.empty() ? 0.0 : rep.spectrum.front();

  if (!rep.decomposition_ok) {
    rep.verdict = Verdict::Degenerate;
    rep.reason = "decomposition C*omega0 + P is not direct";
  } else if (rep.spectrum.empty() || rep.min_eigenvalue > rep.tol) {
    rep.verdict = Verdict::Certified;
  } else if (rep.min_eigenvalue < -rep.tol) {
    rep.verdict = Verdict::Refuted;
    Form w(n, p, q);
    w.coeffs() = ps.basis * es.eigenvectors().col(0);
    w.coeffs().normalize();
    rep.witness = std::move(w);
    rep.reason = "negative Q direction on the primitive space";
  } else {
    rep.verdict = Verdict::Degenerate;
    rep.reason = "minimal eigenvalue within tolerance of zero";
  }
  return rep;
}

HRReport certify_classical(const Form& omega0, int p, int q) {
  const int n = omega0.n();
  return certify(omega0, power(omega0, n - p - q), p, q);
}

HRReport certify_timorin(const Form& omega0, const std::vector<Form>& factors,
                         int p, int q) {
  const int n = omega0.n();
  if (static_cast<int>(factors.size()) != n - (p + q)) {
    throw std::invalid_argument("certify_timorin: expected n-(p+q) factors");
  }
  Form big = Form::scalar(n, 1.0);
  for (const auto& f : factors) {
    if (f.n() != n || f.p() != 1 || f.q() != 1) {
      throw std::invalid_argument("certify_timorin: factors must be (1,1)-forms");
    }
    if (!matrix_from_form(f).is_positive()) {
      throw std::invalid_argument("certify_timorin: factor is not positive");
    }
    big = wedge(big, f);
  }
  return certify(omega0, big, p, q);
}

Form mixed_sum_form(const Form& omega1, const Form& omega2) {
  const int n = omega1.n();
  if (n < 3) throw std::invalid_argument("mixed_sum_form: need n >= 3");
  Form big(n, n - 2, n - 2);
  for (int j = 0; j <= n - 2; ++j) {
    big += wedge(power(omega1, n - 2 - j), power(omega2, j));
  }
  return big;
}

HRReport certify_mixed_sum(const Form& omega0, const Form& omega1,
                           const Form& omega2, int p, int q) {
  for (const Form* w : {&omega1, &omega2}) {
    if (!matrix_from_form(*w).is_positive()) {
      throw std::invalid_argument("certify_mixed_sum: summand form is not positive");
    }
  }
  return certify(omega0, mixed_sum_form(omega1, omega2), p, q);
}

std::vector<double> default_counterexample_grid() {
  std::vector<double> grid;
  grid.reserve(61);
  for (int i = 0; i < 61; ++i) {
    grid.push_back(std::pow(10.0, -3.0 + 6.0 * i / 60.0));
  }
  return grid;
}

std::optional<CounterexampleHit> find_counterexample(
    const Form& omega1, const Form& omega2, const Form& omega0,
    const std::vector<double>& a_grid) {
  if (omega0.n() != 4) {
    throw std::invalid_argument("find_counterexample: defined on C^4 only");
  }
  const Form sq1 = power(omega1, 2);
  const Form sq2 = power(omega2, 2);
  auto report_at = [&](double a) {
    Form big = sq1;
    big += Complex(a, 0.0) * sq2;
    return certify(omega0, big, 1, 1);
  };
  bool have_prev = false;
  double prev_a = 0.0;
  for (double a : a_grid) {
    HRReport rep = report_at(a);
    if (rep.verdict == Verdict::Refuted) {
      CounterexampleHit hit;
      hit.a = a;
      hit.threshold = a;
      if (have_prev) {
        double lo = prev_a, hi = a;  // certified at lo, refuted at hi
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (report_at(mid).min_eigenvalue < 0.0) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        hit.threshold = hi;
      }
      hit.report = std::move(rep);
      return hit;
    }
    have_prev = rep.verdict == Verdict::Certified;
    prev_a = a;
  }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Refuted: return "refuted";
    default: return "degenerate";
  }
}

HRTypeResult hr_type_check(const Form& omega0, const Form& bigOmega0) {
  const int n = omega0.n();
  HRTypeResult out{Form(n, 1, 1), {}, false,
                   "constant forms: closedness automatic"};
  const Form phi = wedge(omega0, bigOmega0);
  try {
    out.omega = michelsohn_root(phi);
    out.root_ok = true;
  } catch (const std::exception& e) {
    out.root_ok = false;
    out.note = std::string("root failed: ") + e.what() +
               "; constant forms: closedness automatic";
  }
  const std::array<std::pair<int, int>, 3> degrees{{{2, 0}, {1, 1}, {0, 2}}};
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (!out.root_ok) {
      HRReport rep;
      rep.p = degrees[i].first;
      rep.q = degrees[i].second;
      rep.verdict = Verdict::Degenerate;
      rep.reason = "omega0 ^ Omega0 is not strictly positive";
      out.reports[i] = std::move(rep);
    } else {
      out.reports[i] = certify(omega0, bigOmega0, degrees[i].first, degrees[i].second);
    }
  }
  return out;
}

}  // namespace hrlab

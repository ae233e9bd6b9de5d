#include <fstream>
#include <random>

#include "doctest.h"
#include "hrlab/hodge_riemann.hpp"
#include "hrlab/random.hpp"
#include "hrlab/serialize.hpp"

using namespace hrlab;

namespace {

const Complex kI(0.0, 1.0);

Form omega_std(int n) {
  Form w(n, 1, 1);
  for (int j = 1; j <= n; ++j) w.set_coeff({j}, {j}, kI);
  return w;
}

}  // namespace

TEST_CASE("q_constant") {
  CHECK(q_constant(1, 1) == Complex(-1.0, 0.0));
  CHECK(q_constant(2, 0) == Complex(1.0, 0.0));
  CHECK(q_constant(0, 2) == Complex(1.0, 0.0));
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 3; ++q) {
      CHECK(std::abs(std::abs(q_constant(p, q)) - 1.0) <= 1e-15);
    }
  }
}

TEST_CASE("q_value on C^2 with scalar Omega0") {
  const Form w = omega_std(2);
  const Form one = Form::scalar(2, 1.0);
  const Form e11 = Form::monomial(2, {1}, {1});
  const Form e22 = Form::monomial(2, {2}, {2});
  const Form e12 = Form::monomial(2, {1}, {2});
  const Form dz12 = Form::monomial(2, {1, 2}, {});

  CHECK(std::abs(q_value(e11, e11, w, one)) <= 1e-15);
  CHECK(std::abs(q_value(e11, e22, w, one) - Complex(-1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(q_value(e12, e12, w, one) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(q_value(w, w, w, one) - Complex(-2.0, 0.0)) <= 1e-15);
  CHECK(std::abs(q_value(dz12, dz12, w, one) - Complex(1.0, 0.0)) <= 1e-15);
}

TEST_CASE("q_matrix is hermitian for real Omega0") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> dim(2, 5);
    const int n = dim(rng);
    const Form w0 = random_positive_form(n, rng);
    const Form big = random_real_form(n, n - 2, n - 2, rng);
    for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 0}, std::pair{0, 2}}) {
      const QMatrix qm = q_matrix(p, q, w0, big);
      const double scale = qm.m.cwiseAbs().maxCoeff();
      CHECK((qm.m - qm.m.adjoint().eval()).cwiseAbs().maxCoeff() <=
            1e-10 * (1.0 + scale));
    }
  }
}

TEST_CASE("primitive_space dimensions") {
  const Form w2 = omega_std(2);
  PrimitiveSpace p11 = primitive_space(1, 1, w2, Form::scalar(2, 1.0));
  CHECK(p11.codim == 1);
  CHECK(p11.basis.cols() == 3);
  // Orthonormal columns.
  Eigen::MatrixXcd gram = p11.basis.adjoint() * p11.basis;
  CHECK((gram - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-13);
  // Every basis form is omega0-primitive.
  for (const Form& f : p11.basis_forms(2)) {
    Form t = wedge(f, w2);
    CHECK(std::abs(top_ratio(t, w2)) <= 1e-13);
  }

  PrimitiveSpace p20 = primitive_space(2, 0, w2, Form::scalar(2, 1.0));
  CHECK(p20.codim == 0);
  CHECK(p20.basis.cols() == 1);

  const Form w3 = omega_std(3);
  PrimitiveSpace p3 = primitive_space(1, 1, w3, w3);
  CHECK(p3.codim == 1);
  CHECK(p3.basis.cols() == 8);
}

TEST_CASE("automatic Q-orthogonality of primitives against omega0") {
  Rng rng(57);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> dim(2, 4);
    const int n = dim(rng);
    const Form w0 = random_positive_form(n, rng);
    const Form big = power(w0, n - 2);
    PrimitiveSpace ps = primitive_space(1, 1, w0, big);
    const QMatrix qm = q_matrix(1, 1, w0, big);
    const double scale = qm.m.cwiseAbs().maxCoeff();
    for (const Form& f : ps.basis_forms(n)) {
      CHECK(std::abs(q_value(f, w0, w0, big)) <= 1e-10 * (1.0 + scale));
      CHECK(std::abs(q_value(w0, f, w0, big)) <= 1e-10 * (1.0 + scale));
    }
  }
}

TEST_CASE("certify_classical on the standard form") {
  for (int n = 2; n <= 5; ++n) {
    const Form w = omega_std(n);
    for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 0}, std::pair{0, 2}}) {
      HRReport rep = certify_classical(w, p, q);
      CHECK(rep.certified());
      CHECK(rep.decomposition_ok);
      CHECK(rep.min_eigenvalue > 0.0);
    }
  }
  // n=2, (1,1): with the orthonormal primitive basis the restricted spectrum
  // is {1,1,1}.
  HRReport rep = certify_classical(omega_std(2), 1, 1);
  REQUIRE(rep.spectrum.size() == 3);
  for (double ev : rep.spectrum) CHECK(ev == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("certify_classical on random positive forms") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Form w = random_positive_form(n, seed);
      for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 0}, std::pair{0, 2}}) {
        CHECK(certify_classical(w, p, q).certified());
      }
    }
  }
}

TEST_CASE("witness quadratic value matches the reported minimum") {
  // Build a refuted report and confirm the witness reproduces min_eigenvalue
  // through direct Q evaluation.
  Rng rng(6);
  Form w1 = random_positive_form(4, rng);
  Form w2 = random_positive_form(4, rng);
  Form w0 = random_positive_form(4, rng);
  auto hit = find_counterexample(w1, w2, w0, default_counterexample_grid());
  REQUIRE(hit.has_value());
  REQUIRE(hit->report.witness.has_value());
  Form big = power(w1, 2);
  Form t = power(w2, 2);
  t *= Complex(hit->a, 0.0);
  big += t;
  const Complex qw = q_value(*hit->report.witness, *hit->report.witness, w0, big);
  CHECK(std::abs(qw.imag()) <= 1e-10);
  CHECK(qw.real() ==
        doctest::Approx(hit->report.min_eigenvalue).epsilon(1e-10));
}

TEST_CASE("certify_timorin") {
  Rng rng(11);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      Form w0 = random_positive_form(n, rng);
      std::vector<Form> factors;
      for (int i = 0; i < n - 2; ++i) factors.push_back(random_positive_form(n, rng));
      for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 0}, std::pair{0, 2}}) {
        CHECK(certify_timorin(w0, factors, p, q).certified());
      }
    }
  }
  // Wrong factor count / non-positive factor rejected.
  Form w0 = omega_std(3);
  CHECK_THROWS_AS(certify_timorin(w0, {}, 1, 1), std::invalid_argument);
  Form neg = omega_std(3);
  neg *= Complex(-1.0, 0.0);
  CHECK_THROWS_AS(certify_timorin(w0, {neg}, 1, 1), std::invalid_argument);
}

TEST_CASE("certify_mixed_sum") {
  Rng rng(13);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      Form w0 = random_positive_form(n, rng);
      Form w1 = random_positive_form(n, rng);
      Form w2 = random_positive_form(n, rng);
      for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 0}, std::pair{0, 2}}) {
        CHECK(certify_mixed_sum(w0, w1, w2, p, q).certified());
      }
    }
  }
}

TEST_CASE("proportional pair never refutes") {
  Rng rng(21);
  Form w1 = random_positive_form(4, rng);
  Form w0 = random_positive_form(4, rng);
  auto hit = find_counterexample(w1, w1, w0, default_counterexample_grid());
  CHECK(!hit.has_value());
}

TEST_CASE("frozen counterexample fixture re-verifies") {
  std::ifstream in(std::string(HRLAB_FIXTURE_DIR) + "/counterexample_c4.json");
  REQUIRE(in.good());
  Json j = Json::parse(in);
  const Form w0 = form_from_json(j["omega0"]);
  const Form w1 = form_from_json(j["omega1"]);
  const Form w2 = form_from_json(j["omega2"]);
  const Form witness = form_from_json(j["witness"]);
  const double a = j["a"].get<double>();
  const double tol = j["tol"].get<double>();
  const double frozen_q = j["q_witness"].get<double>();

  Form big = power(w1, 2);
  Form t = power(w2, 2);
  t *= Complex(a, 0.0);
  big += t;

  HRReport rep = certify(w0, big, 1, 1);
  CHECK(rep.verdict == Verdict::Refuted);
  CHECK(rep.min_eigenvalue <= -10.0 * tol);

  const Complex qw = q_value(witness, witness, w0, big);
  CHECK(std::abs(qw.real() - frozen_q) <= 1e-8 * std::abs(frozen_q));
  CHECK(std::abs(qw.imag()) <= 1e-10);
}

TEST_CASE("scaling invariance of verdicts") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> dim(2, 4);
    const int n = dim(rng);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    const double lambda = scale(rng), mu = scale(rng);
    const Form w0 = random_positive_form(n, rng);
    const Form big = power(random_positive_form(n, rng), n - 2);

    HRReport base = certify(w0, big, 1, 1);
    Form big_s = big;
    big_s *= Complex(lambda, 0.0);
    HRReport scaled = certify(w0, big_s, 1, 1);
    CHECK(scaled.verdict == base.verdict);
    REQUIRE(scaled.spectrum.size() == base.spectrum.size());
    for (std::size_t i = 0; i < base.spectrum.size(); ++i) {
      CHECK(scaled.spectrum[i] ==
            doctest::Approx(lambda * base.spectrum[i]).epsilon(1e-12));
    }

    Form w0_s = w0;
    w0_s *= Complex(mu, 0.0);
    CHECK(certify(w0_s, big, 1, 1).verdict == base.verdict);
  }
}

TEST_CASE("conjugation symmetry between (2,0) and (0,2)") {
  Rng rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> dim(2, 4);
    const int n = dim(rng);
    const Form w0 = random_positive_form(n, rng);
    const Form big = power(random_positive_form(n, rng), n - 2);
    HRReport r20 = certify(w0, big, 2, 0);
    HRReport r02 = certify(w0, big, 0, 2);
    CHECK(r20.verdict == r02.verdict);
    REQUIRE(r20.spectrum.size() == r02.spectrum.size());
    for (std::size_t i = 0; i < r20.spectrum.size(); ++i) {
      CHECK(r20.spectrum[i] == doctest::Approx(r02.spectrum[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("certify input validation") {
  const Form w = omega_std(3);
  CHECK_THROWS_AS(certify(w, w, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(certify(w, Form(3, 2, 1), 1, 1), std::invalid_argument);
  Form notreal(3, 1, 1);
  notreal.set_coeff({1}, {2}, Complex(1.0, 0.0));
  CHECK_THROWS_AS(certify(notreal, w, 1, 1), std::invalid_argument);
}

TEST_CASE("hr_type_check") {
  const Form w = omega_std(3);
  HRTypeResult res = hr_type_check(w, w);
  CHECK(res.root_ok);
  for (const auto& rep : res.reports) CHECK(rep.certified());
  CHECK(res.note.find("closedness automatic") != std::string::npos);

  // A refuting Omega0 on C^4: root may succeed but (1,1) refutes.
  Rng rng(6);
  Form w1 = random_positive_form(4, rng);
  Form w2 = random_positive_form(4, rng);
  Form w0 = random_positive_form(4, rng);
  auto hit = find_counterexample(w1, w2, w0, default_counterexample_grid());
  REQUIRE(hit.has_value());
  Form big = power(w1, 2);
  Form t = power(w2, 2);
  t *= Complex(hit->a, 0.0);
  big += t;
  HRTypeResult bad = hr_type_check(w0, big);
  CHECK(bad.reports[1].verdict == Verdict::Refuted);
}

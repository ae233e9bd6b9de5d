// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "hrlab/hodge_riemann.hpp"
#include "hrlab/pairings.hpp"
#include "hrlab/random.hpp"
#include "hrlab/serialize.hpp"

using namespace hrlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %-18s %s\n", ok ? "PASS" : "FAIL", idx, name,
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), f, a, b);
  return buf;
}

double rel_diff(const Form& a, const Form& b) {
  Form d = a;
  d -= b;
  return d.sup_norm() / (1.0 + std::max(a.sup_norm(), b.sup_norm()));
}

// 1. Classical HR certifies across degrees and dimensions within 60 s.
void criterion_classical() {
  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Form w0 = random_positive_form(n, seed);
      for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 0}, std::pair{0, 2}}) {
        if (!certify_classical(w0, p, q).certified()) ++failures;
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, "classical HR", failures == 0 && secs < 60.0,
         fmt("failures=%.0f elapsed=%.1fs (budget 60s)", failures, secs));
}

// 2. Timorin products certify for n in {3,4,5}.
void criterion_timorin() {
  int failures = 0;
  Rng rng(1001);
  for (int n : {3, 4, 5}) {
    for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 0}, std::pair{0, 2}}) {
      for (int trial = 0; trial < 100; ++trial) {
        const Form w0 = random_positive_form(n, rng);
        std::vector<Form> factors;
        for (int i = 0; i < n - 2; ++i) factors.push_back(random_positive_form(n, rng));
        if (!certify_timorin(w0, factors, p, q).certified()) ++failures;
      }
    }
  }
  report(2, "Timorin products", failures == 0, fmt("failures=%.0f", failures));
}

// 3. Mixed power sums certify for n in {3,4}.
void criterion_mixed_sum() {
  int failures = 0;
  Rng rng(2002);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Form w0 = random_positive_form(n, rng);
      const Form w1 = random_positive_form(n, rng);
      const Form w2 = random_positive_form(n, rng);
      for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 0}, std::pair{0, 2}}) {
        if (!certify_mixed_sum(w0, w1, w2, p, q).certified()) ++failures;
      }
    }
  }
  report(3, "mixed sums", failures == 0, fmt("failures=%.0f", failures));
}

// 4. Frozen C^4 counterexample re-verifies by direct Q evaluation.
void criterion_counterexample() {
  std::ifstream in(std::string(HRLAB_FIXTURE_DIR) + "/counterexample_c4.json");
  if (!in.good()) {
    report(4, "counterexample", false, "fixture missing");
    return;
  }
  const Json j = Json::parse(in);
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
  const HRReport rep = certify(w0, big, 1, 1);
  const Complex qw = q_value(witness, witness, w0, big);
  const bool ok = rep.verdict == Verdict::Refuted &&
                  rep.min_eigenvalue <= -10.0 * tol &&
                  std::abs(qw.real() - frozen_q) <= 1e-8 * std::abs(frozen_q) &&
                  std::abs(qw.imag()) <= 1e-8;
  report(4, "counterexample", ok,
         fmt("min_eig=%.3g Q(witness)=%.3g", rep.min_eigenvalue, qw.real()));
}

// 5. Michelsohn root round-trips to 1e-9 for n in {2..6}.
void criterion_root() {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    double fact = 1.0;
    for (int i = 2; i <= n - 1; ++i) fact *= i;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Form w = random_positive_form(n, seed);
      Form phi = power(w, n - 1);
      phi *= Complex(1.0 / fact, 0.0);
      worst = std::max(worst, rel_diff(michelsohn_root(phi), w));
    }
  }
  report(5, "Michelsohn root", worst <= 1e-9, fmt("max rel err=%.3g", worst));
}

// 6. BMY density nonnegative; worked C^2 value 2/pi^2 reproduced.
void criterion_bmy() {
  Form w2(2, 1, 1);
  w2.set_coeff({1}, {1}, Complex(0.0, 1.0));
  w2.set_coeff({2}, {2}, Complex(0.0, 1.0));
  Form alpha(2, 1, 1);
  alpha.set_coeff({1}, {1}, Complex(0.0, 1.0));
  alpha.set_coeff({2}, {2}, Complex(0.0, -1.0));
  EndValuedForm fw(2, 2, 1, 1);
  fw.at(0, 0) = Complex(0.0, -1.0) * Form(alpha);
  fw.at(1, 1) = Complex(0.0, 1.0) * Form(alpha);
  const double worked = bmy_density(fw, w2, Form::scalar(2, 1.0));
  const double worked_err = std::abs(worked - 2.0 / (kPi * kPi));

  double min_density = 0.0;
  Rng rng(3003);
  for (int n : {2, 3, 4}) {
    const Form w0 = random_positive_form(n, rng);
    const Form big = power(w0, n - 2);
    for (int trial = 0; trial < 500; ++trial) {
      const EndValuedForm f =
          random_primitive_traceless_ihermitian(2 + trial % 2, w0, big, rng);
      const double scale = 1.0 + f.sup_norm();
      min_density = std::min(min_density, bmy_density(f, w0, big) / scale);
    }
  }
  report(6, "BMY density", worked_err <= 1e-12 && min_density >= -1e-10,
         fmt("worked err=%.3g min scaled density=%.3g", worked_err, min_density));
}

// 7. Jacobi identity residual stays at rounding level over 1000 thetas.
void criterion_jacobi() {
  double worst = 0.0;
  Rng rng(4004);
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = 1 + trial % 3;
    const int n = 2 + trial % 3;
    worst = std::max(worst, jacobi_identity_check(random_theta(r, n, rng)));
  }
  report(7, "Jacobi identity", worst <= 1e-12, fmt("max residual=%.3g", worst));
}

// 8. Siu-Sampson density nonpositive for hyperbolic targets, zero for flat.
void criterion_siu_sampson() {
  Rng rng(5005);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const CurvatureTensor hyp = constant_curvature_tensor(5, -1.0);
  const CurvatureTensor flat = constant_curvature_tensor(5, 0.0);
  double max_scaled = -std::numeric_limits<double>::infinity();
  double max_flat = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    DifferentialData d;
    d.n = 4;
    d.du.resize(5, 8);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 8; ++j) d.du(i, j) = gauss(rng);
    const StrongPositivityDecomposition dec = random_decomposition(4, 3, rng);
    const Form w0 = random_positive_form(4, rng);
    const double v = siu_sampson_density(d, hyp, dec, w0);
    max_scaled = std::max(max_scaled, v / (1.0 + std::abs(v)));
    max_flat = std::max(max_flat, std::abs(siu_sampson_density(d, flat, dec, w0)));
  }
  report(8, "Siu-Sampson density", max_scaled <= 1e-10 && max_flat == 0.0,
         fmt("max scaled=%.3g flat max=%.3g", max_scaled, max_flat));
}

// 9. Fast wedge equals the brute-force oracle.
void criterion_oracle() {
  double worst = 0.0;
  Rng rng(6006);
  std::uniform_int_distribution<int> dim(2, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = dim(rng);
    std::uniform_int_distribution<int> deg(0, n);
    const Form a = random_form(n, deg(rng), deg(rng), rng);
    const Form b = random_form(n, deg(rng), deg(rng), rng);
    worst = std::max(worst, rel_diff(wedge(a, b), brute_wedge(a, b)));
  }
  report(9, "wedge oracle", worst <= 1e-13, fmt("max rel deviation=%.3g", worst));
}

// 10. Q hermiticity, (2,0)/(0,2) conjugation symmetry, scaling invariance.
void criterion_q_invariants() {
  Rng rng(7007);
  double herm_worst = 0.0, conj_worst = 0.0, scale_worst = 0.0;
  int verdict_mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> dim(2, 4);
    const int n = dim(rng);
    const Form w0 = random_positive_form(n, rng);
    const Form big = power(random_positive_form(n, rng), n - 2);

    for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 0}}) {
      const QMatrix qm = q_matrix(p, q, w0, big);
      const double scale = 1.0 + qm.m.cwiseAbs().maxCoeff();
      herm_worst = std::max(
          herm_worst, (qm.m - qm.m.adjoint().eval()).cwiseAbs().maxCoeff() / scale);
    }

    const HRReport r20 = certify(w0, big, 2, 0);
    const HRReport r02 = certify(w0, big, 0, 2);
    if (r20.verdict != r02.verdict) ++verdict_mismatches;
    for (std::size_t i = 0; i < r20.spectrum.size(); ++i) {
      conj_worst = std::max(conj_worst,
                            std::abs(r20.spectrum[i] - r02.spectrum[i]) /
                                (1.0 + std::abs(r20.spectrum[i])));
    }

    std::uniform_real_distribution<double> lam(0.1, 10.0);
    const double lambda = lam(rng);
    const HRReport base = certify(w0, big, 1, 1);
    Form bigs = big;
    bigs *= Complex(lambda, 0.0);
    const HRReport scaled = certify(w0, bigs, 1, 1);
    if (scaled.verdict != base.verdict) ++verdict_mismatches;
    for (std::size_t i = 0; i < base.spectrum.size(); ++i) {
      scale_worst = std::max(scale_worst,
                             std::abs(scaled.spectrum[i] - lambda * base.spectrum[i]) /
                                 (1.0 + std::abs(lambda * base.spectrum[i])));
    }
  }
  const bool ok = herm_worst <= 1e-10 && conj_worst <= 1e-10 &&
                  scale_worst <= 1e-12 && verdict_mismatches == 0;
  report(10, "Q invariants", ok,
         fmt("herm=%.3g conj/scale=%.3g", herm_worst,
             std::max(conj_worst, scale_worst)) +
             (verdict_mismatches ? " verdict mismatches!" : ""));
}

}  // namespace

int main() {
  criterion_classical();
  criterion_timorin();
  criterion_mixed_sum();
  criterion_counterexample();
  criterion_root();
  criterion_bmy();
  criterion_jacobi();
  criterion_siu_sampson();
  criterion_oracle();
  criterion_q_invariants();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}

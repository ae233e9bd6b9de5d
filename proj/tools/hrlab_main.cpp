// hrlab: batch front end for constant-form Hodge-Riemann certification.
//
// Usage: hrlab <command> [--input job.json] [--seed N] [--trials N]
//        [--tol X] [--out report.json] [--timing]
// Reads the job from stdin when --input is omitted. Exit codes:
//   0  everything certified / all sign checks passed
//   1  a refutation or sign violation was found (a result, not a crash)
//   2  schema violation, degeneracy, or internal error

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hrlab/hodge_riemann.hpp"
#include "hrlab/pairings.hpp"
#include "hrlab/random.hpp"
#include "hrlab/serialize.hpp"

namespace {

using namespace hrlab;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitPassed = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;

struct JobContext {
  Json job;            // effective job after CLI overrides
  std::uint64_t seed = 0;
  int trials = 0;      // 0: command default
  double tol = -1.0;   // <0: library default
};

int get_int_field(const Json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) {
    throw std::invalid_argument("job: field \"" + key + "\" must be an integer");
  }
  return j[key].get<int>();
}

std::pair<int, int> get_degree(const Json& job) {
  if (!job.contains("degree")) return {1, 1};
  const Json& d = job["degree"];
  if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() ||
      !d[1].is_number_integer()) {
    throw std::invalid_argument("job: \"degree\" must be [p, q]");
  }
  return {d[0].get<int>(), d[1].get<int>()};
}

Form job_omega0(const Json& job, int n, Rng& rng) {
  if (job.contains("omega0")) return form_from_json(job["omega0"]);
  return random_positive_form(n, rng);
}

int need_n(const Json& job) {
  if (job.contains("omega0")) return form_from_json(job["omega0"]).n();
  const int n = get_int_field(job, "n", 0);
  if (n < 2) throw std::invalid_argument("job: need \"n\" >= 2 or an explicit form");
  return n;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Certified: return kExitPassed;
    case Verdict::Refuted: return kExitRefuted;
    default: return kExitError;
  }
}

// ---------------------------------------------------------------------------

int run_certify(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job, {"command", "seed", "tol", "trials", "omega0", "Omega0", "degree"},
             "job");
  const auto [p, q] = get_degree(job);
  const Form omega0 = form_from_json(job.at("omega0"));
  const Form big = form_from_json(job.at("Omega0"));
  HRReport rep = certify(omega0, big, p, q, ctx.tol);
  results["report"] = hr_report_to_json(rep);
  return verdict_exit(rep.verdict);
}

int run_classical(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job, {"command", "seed", "tol", "trials", "omega0", "n", "degree"},
             "job");
  const auto [p, q] = get_degree(job);
  Rng rng(ctx.seed);
  const Form omega0 = job_omega0(job, need_n(job), rng);
  HRReport rep = certify_classical(omega0, p, q);
  results["omega0"] = form_to_json(omega0);
  results["report"] = hr_report_to_json(rep);
  return verdict_exit(rep.verdict);
}

int run_timorin(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job,
             {"command", "seed", "tol", "trials", "omega0", "factors", "n", "degree"},
             "job");
  const auto [p, q] = get_degree(job);
  const int n = need_n(job);
  Rng rng(ctx.seed);
  const Form omega0 = job_omega0(job, n, rng);
  std::vector<Form> factors;
  if (job.contains("factors")) {
    for (const auto& fj : job["factors"]) factors.push_back(form_from_json(fj));
  } else {
    for (int i = 0; i < n - (p + q); ++i) factors.push_back(random_positive_form(n, rng));
  }
  HRReport rep = certify_timorin(omega0, factors, p, q);
  results["omega0"] = form_to_json(omega0);
  Json fs = Json::array();
  for (const auto& f : factors) fs.push_back(form_to_json(f));
  results["factors"] = std::move(fs);
  results["report"] = hr_report_to_json(rep);
  return verdict_exit(rep.verdict);
}

int run_mixed_sum(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job,
             {"command", "seed", "tol", "trials", "omega0", "omega1", "omega2", "n",
              "degree"},
             "job");
  const auto [p, q] = get_degree(job);
  const int n = need_n(job);
  Rng rng(ctx.seed);
  const Form omega0 = job_omega0(job, n, rng);
  const Form omega1 = job.contains("omega1") ? form_from_json(job["omega1"])
                                             : random_positive_form(n, rng);
  const Form omega2 = job.contains("omega2") ? form_from_json(job["omega2"])
                                             : random_positive_form(n, rng);
  HRReport rep = certify_mixed_sum(omega0, omega1, omega2, p, q);
  results["omega0"] = form_to_json(omega0);
  results["omega1"] = form_to_json(omega1);
  results["omega2"] = form_to_json(omega2);
  results["report"] = hr_report_to_json(rep);
  return verdict_exit(rep.verdict);
}

int run_counterexample(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job,
             {"command", "seed", "tol", "trials", "omega0", "omega1", "omega2",
              "grid"},
             "job");
  Rng rng(ctx.seed);
  const Form omega1 = job.contains("omega1") ? form_from_json(job["omega1"])
                                             : random_positive_form(4, rng);
  const Form omega2 = job.contains("omega2") ? form_from_json(job["omega2"])
                                             : random_positive_form(4, rng);
  const Form omega0 = job.contains("omega0") ? form_from_json(job["omega0"])
                                             : random_positive_form(4, rng);
  std::vector<double> grid;
  if (!job.contains("grid") || (job["grid"].is_string() && job["grid"] == "default")) {
    grid = default_counterexample_grid();
  } else if (job["grid"].is_array()) {
    for (const auto& v : job["grid"]) grid.push_back(v.get<double>());
  } else {
    throw std::invalid_argument("job: \"grid\" must be \"default\" or an array");
  }
  auto hit = find_counterexample(omega1, omega2, omega0, grid);
  results["omega1"] = form_to_json(omega1);
  results["omega2"] = form_to_json(omega2);
  results["omega0"] = form_to_json(omega0);
  if (hit) {
    results["found"] = true;
    results["a"] = hit->a;
    results["threshold"] = hit->threshold;
    results["report"] = hr_report_to_json(hit->report);
    return kExitRefuted;
  }
  results["found"] = false;
  return kExitPassed;
}

int run_root(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job, {"command", "seed", "tol", "trials", "Phi"}, "job");
  const Form phi = form_from_json(job.at("Phi"));
  const Form omega = michelsohn_root(phi);
  results["omega"] = form_to_json(omega);
  return kExitPassed;
}

int run_hr_type(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job, {"command", "seed", "tol", "trials", "omega0", "Omega0"}, "job");
  const Form omega0 = form_from_json(job.at("omega0"));
  const Form big = form_from_json(job.at("Omega0"));
  HRTypeResult res = hr_type_check(omega0, big);
  results["root_ok"] = res.root_ok;
  results["note"] = res.note;
  if (res.root_ok) results["omega"] = form_to_json(res.omega);
  Json reports = Json::array();
  int exit_code = res.root_ok ? kExitPassed : kExitError;
  for (const auto& rep : res.reports) {
    reports.push_back(hr_report_to_json(rep));
    if (rep.verdict == Verdict::Refuted) exit_code = kExitRefuted;
  }
  results["reports"] = std::move(reports);
  return exit_code;
}

int run_bmy(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job,
             {"command", "seed", "tol", "trials", "F", "omega0", "Omega0", "n", "r",
              "allow_nonprimitive"},
             "job");
  const double tol = ctx.tol < 0.0 ? 1e-10 : ctx.tol;
  if (job.contains("F")) {
    const EndValuedForm f = end_valued_form_from_json(job["F"]);
    const Form omega0 = form_from_json(job.at("omega0"));
    const Form big = form_from_json(job.at("Omega0"));
    const bool allow = job.value("allow_nonprimitive", false);
    const double density = bmy_density(f, omega0, big, allow);
    results["density"] = density;
    return density >= -tol * (1.0 + f.sup_norm()) ? kExitPassed : kExitRefuted;
  }
  const int n = get_int_field(job, "n", 3);
  const int r = get_int_field(job, "r", 2);
  const int trials = ctx.trials > 0 ? ctx.trials : 100;
  Rng rng(ctx.seed);
  const Form omega0 = random_positive_form(n, rng);
  const Form big = power(omega0, n - 2);
  double min_density = 0.0;
  int violations = 0;
  Json densities = Json::array();
  for (int t = 0; t < trials; ++t) {
    const EndValuedForm f = random_primitive_traceless_ihermitian(r, omega0, big, rng);
    const double d = bmy_density(f, omega0, big);
    densities.push_back(d);
    min_density = std::min(min_density, d);
    if (d < -tol * (1.0 + f.sup_norm())) ++violations;
  }
  results["trials"] = trials;
  results["min_density"] = min_density;
  results["violations"] = violations;
  results["densities"] = std::move(densities);
  return violations == 0 ? kExitPassed : kExitRefuted;
}

int run_pairing(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job, {"command", "seed", "tol", "trials", "psi", "omega0", "Omega0"},
             "job");
  const EndValuedForm psi = end_valued_form_from_json(job.at("psi"));
  const Form omega0 = form_from_json(job.at("omega0"));
  const Form big = form_from_json(job.at("Omega0"));
  const PairingResult res = pairing_sq(psi, omega0, big);
  results["raw"] = res.raw;
  results["q_energy"] = res.q_energy;
  const double tol = ctx.tol < 0.0 ? 1e-10 : ctx.tol;
  if (psi.p() == 2 && res.q_energy < -tol * (1.0 + psi.sup_norm())) {
    return kExitRefuted;
  }
  return kExitPassed;
}

int run_jacobi(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job, {"command", "seed", "tol", "trials", "theta", "r", "n"}, "job");
  const double tol = ctx.tol < 0.0 ? 1e-12 : ctx.tol;
  if (job.contains("theta")) {
    const EndValuedForm theta = end_valued_form_from_json(job["theta"]);
    const double residual = jacobi_identity_check(theta);
    results["max_residual"] = residual;
    return residual <= tol ? kExitPassed : kExitRefuted;
  }
  const int r = get_int_field(job, "r", 2);
  const int n = get_int_field(job, "n", 3);
  const int trials = ctx.trials > 0 ? ctx.trials : 100;
  Rng rng(ctx.seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    worst = std::max(worst, jacobi_identity_check(random_theta(r, n, rng)));
  }
  results["trials"] = trials;
  results["max_residual"] = worst;
  return worst <= tol ? kExitPassed : kExitRefuted;
}

int run_flat_decompose(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job, {"command", "seed", "tol", "trials", "theta"}, "job");
  const EndValuedForm theta = end_valued_form_from_json(job.at("theta"));
  const FlatnessParts parts = flatness_decompose(theta);
  results["c20"] = end_valued_form_to_json(parts.c20);
  results["c11"] = end_valued_form_to_json(parts.c11);
  results["c02"] = end_valued_form_to_json(parts.c02);
  return kExitPassed;
}

int run_siu_sampson(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job,
             {"command", "seed", "tol", "trials", "du", "R", "decomposition",
              "omega0", "n", "m", "c"},
             "job");
  const double tol = ctx.tol < 0.0 ? 1e-10 : ctx.tol;
  if (job.contains("du")) {
    DifferentialData d;
    Eigen::MatrixXcd duc = matrix_from_json(job["du"]);
    d.du = duc.real();
    if (duc.imag().cwiseAbs().maxCoeff() > 0.0) {
      throw std::invalid_argument("job: \"du\" must be a real matrix");
    }
    d.n = static_cast<int>(d.du.cols()) / 2;
    const CurvatureTensor r = curvature_tensor_from_json(job.at("R"));
    const StrongPositivityDecomposition dec =
        decomposition_from_json(job.at("decomposition"));
    const Form omega0 = form_from_json(job.at("omega0"));
    SiuSampsonDiagnostics diag;
    const double density = siu_sampson_density(d, r, dec, omega0, &diag);
    results["density"] = density;
    results["warnings"] = diag.warnings;
    return density <= tol * (1.0 + std::abs(density)) ? kExitPassed : kExitRefuted;
  }
  const int n = get_int_field(job, "n", 4);
  const int m = get_int_field(job, "m", 5);
  const double c = job.contains("c") ? job["c"].get<double>() : -1.0;
  const int trials = ctx.trials > 0 ? ctx.trials : 100;
  Rng rng(ctx.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const CurvatureTensor r = constant_curvature_tensor(m, c);
  double max_density = -std::numeric_limits<double>::infinity();
  int violations = 0;
  for (int t = 0; t < trials; ++t) {
    DifferentialData d;
    d.n = n;
    d.du.resize(m, 2 * n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < 2 * n; ++j) d.du(i, j) = gauss(rng);
    StrongPositivityDecomposition dec = random_decomposition(n, 3, rng);
    const Form omega0 = random_positive_form(n, rng);
    const double density = siu_sampson_density(d, r, dec, omega0);
    max_density = std::max(max_density, density);
    if (c <= 0.0 && density > tol * (1.0 + std::abs(density))) ++violations;
  }
  results["trials"] = trials;
  results["max_density"] = max_density;
  results["violations"] = violations;
  return violations == 0 ? kExitPassed : kExitRefuted;
}

int run_campaign(const JobContext& ctx, Json& results) {
  const Json& job = ctx.job;
  check_keys(job,
             {"command", "seed", "tol", "trials", "task", "n", "degree", "omega0"},
             "job");
  if (!job.contains("task") || !job["task"].is_string()) {
    throw std::invalid_argument("job: campaign needs a \"task\" string");
  }
  const std::string task = job["task"].get<std::string>();
  const auto [p, q] = get_degree(job);
  const int n = get_int_field(job, "n", 3);
  const int trials = ctx.trials > 0 ? ctx.trials : 100;
  Rng rng(ctx.seed);
  int certified = 0, refuted = 0, degenerate = 0;
  Json items = Json::array();
  for (int t = 0; t < trials; ++t) {
    HRReport rep;
    if (task == "classical") {
      rep = certify_classical(random_positive_form(n, rng), p, q);
    } else if (task == "timorin") {
      const Form omega0 = random_positive_form(n, rng);
      std::vector<Form> factors;
      for (int i = 0; i < n - (p + q); ++i) {
        factors.push_back(random_positive_form(n, rng));
      }
      rep = certify_timorin(omega0, factors, p, q);
    } else if (task == "mixed-sum") {
      const Form omega0 = random_positive_form(n, rng);
      rep = certify_mixed_sum(omega0, random_positive_form(n, rng),
                              random_positive_form(n, rng), p, q);
    } else {
      throw std::invalid_argument("job: unknown campaign task \"" + task + "\"");
    }
    switch (rep.verdict) {
      case Verdict::Certified: ++certified; break;
      case Verdict::Refuted: ++refuted; break;
      default: ++degenerate; break;
    }
    Json item;
    item["trial"] = t;
    item["verdict"] = to_string(rep.verdict);
    item["min_eigenvalue"] = rep.min_eigenvalue;
    items.push_back(std::move(item));
  }
  results["trials"] = trials;
  results["certified"] = certified;
  results["refuted"] = refuted;
  results["degenerate"] = degenerate;
  results["items"] = std::move(items);
  if (degenerate > 0) return kExitError;
  return refuted == 0 ? kExitPassed : kExitRefuted;
}

// Schema-only validation of a JSON document; the document kind is inferred
// from its fields.
int run_validate(const Json& doc, Json& results) {
  std::vector<std::string> violations;
  std::string kind = "unknown";
  try {
    if (doc.is_object() && doc.contains("command")) {
      kind = "job";
      if (!doc["command"].is_string()) {
        throw std::invalid_argument("job: \"command\" must be a string");
      }
    } else if (doc.is_object() && doc.contains("coeffs")) {
      kind = "form";
      form_from_json(doc);
    } else if (doc.is_object() && doc.contains("terms")) {
      kind = "decomposition";
      decomposition_from_json(doc);
    } else if (doc.is_object() && doc.contains("entries")) {
      kind = "end_valued_form";
      end_valued_form_from_json(doc);
    } else if (doc.is_object() && doc.contains("R")) {
      kind = "curvature_tensor";
      curvature_tensor_from_json(doc);
    } else {
      throw std::invalid_argument("unrecognized document: no schema matches");
    }
  } catch (const std::exception& e) {
    violations.push_back(e.what());
  }
  results["kind"] = kind;
  results["violations"] = violations;
  results["ok"] = violations.empty();
  return violations.empty() ? kExitPassed : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-form Hodge-Riemann certification toolbox"};
  app.set_version_flag("--version", std::string("hrlab ") + kVersion);

  std::string command;
  app.add_option("command", command, "One of: certify classical timorin mixed-sum "
                                     "counterexample root hr-type bmy pairing jacobi "
                                     "flat-decompose siu-sampson campaign validate")
      ->required();
  std::string input_path, out_path;
  app.add_option("--input", input_path, "Job JSON file (stdin when omitted)");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  std::int64_t seed = -1;
  app.add_option("--seed", seed, "Override the job seed");
  int trials = 0;
  app.add_option("--trials", trials, "Override the job trial count");
  double tol = -1.0;
  app.add_option("--tol", tol, "Override the tolerance");
  bool timing = false;
  app.add_flag("--timing", timing,
               "Record wall-clock time (off by default: timed reports are not "
               "byte-reproducible)");

  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  Json report;
  report["tool"] = "hrlab";
  report["version"] = kVersion;
  int exit_code = kExitPassed;

  try {
    Json doc;
    if (!input_path.empty()) {
      std::ifstream in(input_path);
      if (!in.good()) throw std::runtime_error("cannot read " + input_path);
      doc = Json::parse(in);
    } else {
      doc = Json::parse(std::cin);
    }

    Json results;
    if (command == "validate") {
      report["job"] = Json{{"command", "validate"}};
      exit_code = run_validate(doc, results);
    } else {
      if (!doc.is_object()) throw std::invalid_argument("job: expected a JSON object");
      if (doc.contains("command") && doc["command"] != command) {
        throw std::invalid_argument("job: file command \"" +
                                    doc["command"].get<std::string>() +
                                    "\" does not match CLI command \"" + command + "\"");
      }
      doc["command"] = command;
      JobContext ctx;
      if (seed >= 0) doc["seed"] = seed;
      if (trials > 0) doc["trials"] = trials;
      if (tol >= 0.0) doc["tol"] = tol;
      ctx.job = doc;
      ctx.seed = static_cast<std::uint64_t>(get_int_field(doc, "seed", 0));
      ctx.trials = get_int_field(doc, "trials", 0);
      ctx.tol = doc.contains("tol") ? doc["tol"].get<double>() : -1.0;
      report["job"] = doc;

      if (command == "certify") exit_code = run_certify(ctx, results);
      else if (command == "classical") exit_code = run_classical(ctx, results);
      else if (command == "timorin") exit_code = run_timorin(ctx, results);
      else if (command == "mixed-sum") exit_code = run_mixed_sum(ctx, results);
      else if (command == "counterexample") exit_code = run_counterexample(ctx, results);
      else if (command == "root") exit_code = run_root(ctx, results);
      else if (command == "hr-type") exit_code = run_hr_type(ctx, results);
      else if (command == "bmy") exit_code = run_bmy(ctx, results);
      else if (command == "pairing") exit_code = run_pairing(ctx, results);
      else if (command == "jacobi") exit_code = run_jacobi(ctx, results);
      else if (command == "flat-decompose") exit_code = run_flat_decompose(ctx, results);
      else if (command == "siu-sampson") exit_code = run_siu_sampson(ctx, results);
      else if (command == "campaign") exit_code = run_campaign(ctx, results);
      else throw std::invalid_argument("unknown command \"" + command + "\"");
    }
    report["results"] = std::move(results);
  } catch (const std::exception& e) {
    report["error"] = e.what();
    exit_code = kExitError;
  }

  switch (exit_code) {
    case kExitPassed: report["verdict"] = "passed"; break;
    case kExitRefuted: report["verdict"] = "refuted"; break;
    default: report["verdict"] = "error"; break;
  }
  if (timing) {
    const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
    report["wall_clock_seconds"] = dt.count();
  } else {
    report["wall_clock_seconds"] = nullptr;
  }

  const std::string text = dump_deterministic(report) + "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out.good()) {
      std::fprintf(stderr, "hrlab: cannot write %s\n", out_path.c_str());
      return kExitError;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return exit_code;
}

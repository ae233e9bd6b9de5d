#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hrlab/hodge_riemann.hpp"
#include "hrlab/pairings.hpp"
#include "hrlab/random.hpp"
#include "hrlab/serialize.hpp"

namespace py = pybind11;
using namespace hrlab;

namespace {

Json parse_json(const std::string& text) { return Json::parse(text); }

}  // namespace

PYBIND11_MODULE(_hrlab, m) {
  m.doc() = "Constant (p,q)-form algebra and Hodge-Riemann certification";
  m.attr("__version__") = "0.1.0";

  py::class_<Form>(m, "Form")
      .def(py::init<int, int, int>(), py::arg("n"), py::arg("p"), py::arg("q"))
      .def_static("scalar", &Form::scalar, py::arg("n"), py::arg("value"))
      .def_static("monomial", &Form::monomial, py::arg("n"), py::arg("I"),
                  py::arg("J"), py::arg("coeff") = Complex(1.0, 0.0))
      .def_property_readonly("n", &Form::n)
      .def_property_readonly("p", &Form::p)
      .def_property_readonly("q", &Form::q)
      .def_property_readonly("dim", &Form::dim)
      .def("coeff", &Form::coeff, py::arg("I"), py::arg("J"))
      .def("set_coeff", &Form::set_coeff, py::arg("I"), py::arg("J"),
           py::arg("value"))
      .def("coeffs", [](const Form& f) { return f.coeffs(); })
      .def("sup_norm", &Form::sup_norm)
      .def("is_zero", &Form::is_zero, py::arg("tol") = 0.0)
      .def("is_real", &Form::is_real, py::arg("tol") = 1e-12)
      .def("__add__", [](Form a, const Form& b) { return a += b; })
      .def("__sub__", [](Form a, const Form& b) { return a -= b; })
      .def("__mul__", [](Form a, Complex s) { return a *= s; })
      .def("__rmul__", [](Form a, Complex s) { return a *= s; })
      .def("to_json", [](const Form& f) { return dump_deterministic(form_to_json(f)); })
      .def_static("from_json",
                  [](const std::string& s) { return form_from_json(parse_json(s)); })
      .def("__repr__", [](const Form& f) {
        return "Form(n=" + std::to_string(f.n()) + ", p=" + std::to_string(f.p()) +
               ", q=" + std::to_string(f.q()) + ")";
      });

  m.def("wedge", &wedge, py::arg("a"), py::arg("b"));
  m.def("brute_wedge", &brute_wedge, py::arg("a"), py::arg("b"));
  m.def("conjugate", &conjugate, py::arg("f"));
  m.def("power", &power, py::arg("f"), py::arg("k"));
  m.def("top_ratio", &top_ratio, py::arg("eta"), py::arg("omega0"),
        py::arg("tol") = 1e-12);

  m.def("form_from_matrix",
        [](const Eigen::MatrixXcd& a) { return form_from_matrix(HermitianMatrix(a)); },
        py::arg("a"));
  m.def("matrix_from_form",
        [](const Form& f) { return matrix_from_form(f).matrix(); }, py::arg("f"));
  m.def("michelsohn_root", &michelsohn_root, py::arg("phi"));
  m.def("random_positive_form",
        [](int n, std::uint64_t seed) { return random_positive_form(n, seed); },
        py::arg("n"), py::arg("seed"));

  py::enum_<Verdict>(m, "Verdict")
      .value("Certified", Verdict::Certified)
      .value("Refuted", Verdict::Refuted)
      .value("Degenerate", Verdict::Degenerate);

  py::class_<HRReport>(m, "HRReport")
      .def_readonly("p", &HRReport::p)
      .def_readonly("q", &HRReport::q)
      .def_readonly("decomposition_ok", &HRReport::decomposition_ok)
      .def_readonly("spectrum", &HRReport::spectrum)
      .def_readonly("min_eigenvalue", &HRReport::min_eigenvalue)
      .def_readonly("verdict", &HRReport::verdict)
      .def_readonly("witness", &HRReport::witness)
      .def_readonly("tol", &HRReport::tol)
      .def_readonly("reason", &HRReport::reason)
      .def("certified", &HRReport::certified)
      .def("to_json",
           [](const HRReport& r) { return dump_deterministic(hr_report_to_json(r)); });

  m.def("q_constant", &q_constant, py::arg("p"), py::arg("q"));
  m.def("q_value", &q_value, py::arg("a"), py::arg("b"), py::arg("omega0"),
        py::arg("Omega0"));
  m.def("certify", &certify, py::arg("omega0"), py::arg("Omega0"), py::arg("p"),
        py::arg("q"), py::arg("tol") = -1.0);
  m.def("certify_classical", &certify_classical, py::arg("omega0"), py::arg("p"),
        py::arg("q"));
  m.def("certify_timorin", &certify_timorin, py::arg("omega0"), py::arg("factors"),
        py::arg("p"), py::arg("q"));
  m.def("certify_mixed_sum", &certify_mixed_sum, py::arg("omega0"), py::arg("omega1"),
        py::arg("omega2"), py::arg("p"), py::arg("q"));
  m.def("default_counterexample_grid", &default_counterexample_grid);
  m.def("find_counterexample",
        [](const Form& w1, const Form& w2, const Form& w0,
           const std::vector<double>& grid) -> py::object {
          auto hit = find_counterexample(w1, w2, w0, grid);
          if (!hit) return py::none();
          return py::make_tuple(hit->a, hit->threshold, hit->report);
        },
        py::arg("omega1"), py::arg("omega2"), py::arg("omega0"), py::arg("a_grid"));

  py::class_<EndValuedForm>(m, "EndValuedForm")
      .def(py::init<int, int, int, int>(), py::arg("r"), py::arg("n"), py::arg("p"),
           py::arg("q"))
      .def_static("from_matrices_10", &EndValuedForm::from_matrices_10,
                  py::arg("matrices"))
      .def_property_readonly("r", &EndValuedForm::r)
      .def_property_readonly("n", &EndValuedForm::n)
      .def_property_readonly("p", &EndValuedForm::p)
      .def_property_readonly("q", &EndValuedForm::q)
      .def("at", [](const EndValuedForm& f, int j, int k) { return f.at(j, k); },
           py::arg("j"), py::arg("k"))
      .def("set_at",
           [](EndValuedForm& f, int j, int k, const Form& v) { f.at(j, k) = v; },
           py::arg("j"), py::arg("k"), py::arg("value"))
      .def("sup_norm", &EndValuedForm::sup_norm)
      .def("is_ihermitian", &EndValuedForm::is_ihermitian, py::arg("tol") = 1e-10);

  m.def("mv_wedge", &mv_wedge, py::arg("a"), py::arg("b"));
  m.def("mv_trace", &mv_trace, py::arg("a"));
  m.def("hermitian_adjoint", &hermitian_adjoint, py::arg("psi"));
  m.def("graded_commutator", &graded_commutator, py::arg("a"), py::arg("b"));
  m.def("bmy_density", &bmy_density, py::arg("F"), py::arg("omega0"),
        py::arg("Omega0"), py::arg("allow_nonprimitive") = false);
  m.def("pairing_sq",
        [](const EndValuedForm& psi, const Form& w0, const Form& big) {
          PairingResult r = pairing_sq(psi, w0, big);
          return py::make_tuple(r.raw, r.q_energy);
        },
        py::arg("psi"), py::arg("omega0"), py::arg("Omega0"));
  m.def("jacobi_identity_check", &jacobi_identity_check, py::arg("theta"));
  m.def("flatness_decompose",
        [](const EndValuedForm& theta) {
          FlatnessParts p = flatness_decompose(theta);
          return py::make_tuple(p.c20, p.c11, p.c02);
        },
        py::arg("theta"));
  m.def("random_theta",
        [](int r, int n, std::uint64_t seed) {
          Rng rng(seed);
          return random_theta(r, n, rng);
        },
        py::arg("r"), py::arg("n"), py::arg("seed"));

  py::class_<CurvatureTensor>(m, "CurvatureTensor")
      .def(py::init<int, std::vector<double>>(), py::arg("m"), py::arg("data"))
      .def_property_readonly("m", &CurvatureTensor::m)
      .def("at", &CurvatureTensor::at, py::arg("i"), py::arg("j"), py::arg("k"),
           py::arg("l"))
      .def("symmetry_residual", &CurvatureTensor::symmetry_residual);

  m.def("constant_curvature_tensor", &constant_curvature_tensor, py::arg("m"),
        py::arg("c"));
  m.def("complexified_sectional", &complexified_sectional, py::arg("R"), py::arg("Z"),
        py::arg("W"));

  py::class_<SimpleTerm>(m, "SimpleTerm")
      .def(py::init<>())
      .def_readwrite("mu", &SimpleTerm::mu)
      .def_readwrite("alphas", &SimpleTerm::alphas);

  py::class_<StrongPositivityDecomposition>(m, "StrongPositivityDecomposition")
      .def(py::init<>())
      .def_readwrite("n", &StrongPositivityDecomposition::n)
      .def_readwrite("terms", &StrongPositivityDecomposition::terms);

  m.def("strongly_positive_form", &strongly_positive_form, py::arg("decomposition"));
  m.def("random_decomposition",
        [](int n, int terms, std::uint64_t seed) {
          Rng rng(seed);
          return random_decomposition(n, terms, rng);
        },
        py::arg("n"), py::arg("terms"), py::arg("seed"));
  m.def("siu_sampson_density",
        [](const Eigen::MatrixXd& du, const CurvatureTensor& r,
           const StrongPositivityDecomposition& dec, const Form& omega0) {
          DifferentialData d;
          d.n = static_cast<int>(du.cols()) / 2;
          d.du = du;
          return siu_sampson_density(d, r, dec, omega0);
        },
        py::arg("du"), py::arg("R"), py::arg("decomposition"), py::arg("omega0"));
}

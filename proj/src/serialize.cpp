#include "hrlab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hrlab {

namespace {

Json complex_to_json(Complex v) { return Json::array({v.real(), v.imag()}); }

Complex complex_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(context + ": complex values are [re, im] pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

void require_key(const Json& j, const std::string& key, const std::string& context) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(context + ": missing field \"" + key + "\"");
  }
}

int get_int(const Json& j, const std::string& key, const std::string& context) {
  require_key(j, key, context);
  if (!j[key].is_number_integer()) {
    throw std::invalid_argument(context + ": field \"" + key + "\" must be an integer");
  }
  return j[key].get<int>();
}

void format_double(std::string& out, double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    out += buf;
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        out += Json(key).dump();
        out += ": ";
        dump_rec(value, out, indent, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_rec(value, out, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      format_double(out, j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

void check_keys(const Json& j, const std::vector<std::string>& allowed,
                const std::string& context) {
  if (!j.is_object()) {
    throw std::invalid_argument(context + ": expected a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const auto& a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw std::invalid_argument(context + ": unknown field \"" + key + "\"");
    }
  }
}

std::string dump_deterministic(const Json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  return out;
}

Json form_to_json(const Form& f) {
  Json j;
  j["n"] = f.n();
  j["p"] = f.p();
  j["q"] = f.q();
  Json coeffs = Json::array();
  for (int i = 0; i < f.dim(); ++i) coeffs.push_back(complex_to_json(f.coeffs()[i]));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Form form_from_json(const Json& j) {
  check_keys(j, {"n", "p", "q", "coeffs"}, "form");
  const int n = get_int(j, "n", "form");
  const int p = get_int(j, "p", "form");
  const int q = get_int(j, "q", "form");
  Form f(n, p, q);
  require_key(j, "coeffs", "form");
  const Json& coeffs = j["coeffs"];
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != f.dim()) {
    throw std::invalid_argument(
        "form: expected C(n,p)*C(n,q) = " + std::to_string(f.dim()) + " coefficients");
  }
  for (int i = 0; i < f.dim(); ++i) {
    f.coeffs()[i] = complex_from_json(coeffs[i], "form");
  }
  return f;
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("matrix: expected a nonempty array of rows");
  }
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) {
      throw std::invalid_argument("matrix: ragged rows");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c], "matrix");
  }
  return m;
}

Json decomposition_to_json(const StrongPositivityDecomposition& d) {
  Json j;
  j["n"] = d.n;
  Json terms = Json::array();
  for (const auto& t : d.terms) {
    Json term;
    term["mu"] = t.mu;
    Json alphas = Json::array();
    for (const auto& a : t.alphas) {
      Json cov = Json::array();
      for (int i = 0; i < a.size(); ++i) cov.push_back(complex_to_json(a[i]));
      alphas.push_back(std::move(cov));
    }
    term["alphas"] = std::move(alphas);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

StrongPositivityDecomposition decomposition_from_json(const Json& j) {
  check_keys(j, {"n", "terms"}, "decomposition");
  StrongPositivityDecomposition d;
  d.n = get_int(j, "n", "decomposition");
  require_key(j, "terms", "decomposition");
  for (const auto& tj : j["terms"]) {
    check_keys(tj, {"mu", "alphas"}, "decomposition term");
    require_key(tj, "mu", "decomposition term");
    SimpleTerm term;
    term.mu = tj["mu"].get<double>();
    require_key(tj, "alphas", "decomposition term");
    for (const auto& aj : tj["alphas"]) {
      if (!aj.is_array() || static_cast<int>(aj.size()) != d.n) {
        throw std::invalid_argument("decomposition: covectors must have n entries");
      }
      Eigen::VectorXcd a(d.n);
      for (int i = 0; i < d.n; ++i) a[i] = complex_from_json(aj[i], "decomposition");
      term.alphas.push_back(std::move(a));
    }
    d.terms.push_back(std::move(term));
  }
  return d;
}

Json end_valued_form_to_json(const EndValuedForm& f) {
  Json j;
  j["r"] = f.r();
  j["form"] = Json{{"n", f.n()}, {"p", f.p()}, {"q", f.q()}};
  Json entries = Json::array();
  for (int row = 0; row < f.r(); ++row) {
    Json rowj = Json::array();
    for (int col = 0; col < f.r(); ++col) {
      const Form& e = f.at(row, col);
      Json coeffs = Json::array();
      for (int i = 0; i < e.dim(); ++i) coeffs.push_back(complex_to_json(e.coeffs()[i]));
      rowj.push_back(std::move(coeffs));
    }
    entries.push_back(std::move(rowj));
  }
  j["entries"] = std::move(entries);
  return j;
}

EndValuedForm end_valued_form_from_json(const Json& j) {
  check_keys(j, {"r", "form", "entries"}, "end-valued form");
  const int r = get_int(j, "r", "end-valued form");
  require_key(j, "form", "end-valued form");
  check_keys(j["form"], {"n", "p", "q"}, "end-valued form bidegree");
  const int n = get_int(j["form"], "n", "end-valued form");
  const int p = get_int(j["form"], "p", "end-valued form");
  const int q = get_int(j["form"], "q", "end-valued form");
  EndValuedForm f(r, n, p, q);
  require_key(j, "entries", "end-valued form");
  const Json& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != r) {
    throw std::invalid_argument("end-valued form: entries must be an r x r array");
  }
  for (int row = 0; row < r; ++row) {
    if (!entries[row].is_array() || static_cast<int>(entries[row].size()) != r) {
      throw std::invalid_argument("end-valued form: entries must be an r x r array");
    }
    for (int col = 0; col < r; ++col) {
      Form& e = f.at(row, col);
      const Json& coeffs = entries[row][col];
      if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != e.dim()) {
        throw std::invalid_argument("end-valued form: wrong coefficient count in entry");
      }
      for (int i = 0; i < e.dim(); ++i) {
        e.coeffs()[i] = complex_from_json(coeffs[i], "end-valued form");
      }
    }
  }
  return f;
}

Json curvature_tensor_to_json(const CurvatureTensor& r) {
  Json j;
  j["m"] = r.m();
  j["convention"] = "sectional=R(X,Y,Y,X)";
  Json data = Json::array();
  const int m = r.m();
  for (int i = 0; i < m; ++i) {
    Json a = Json::array();
    for (int jj = 0; jj < m; ++jj) {
      Json b = Json::array();
      for (int k = 0; k < m; ++k) {
        Json c = Json::array();
        for (int l = 0; l < m; ++l) c.push_back(r.at(i, jj, k, l));
        b.push_back(std::move(c));
      }
      a.push_back(std::move(b));
    }
    data.push_back(std::move(a));
  }
  j["R"] = std::move(data);
  return j;
}

CurvatureTensor curvature_tensor_from_json(const Json& j) {
  check_keys(j, {"m", "R", "convention"}, "curvature tensor");
  const int m = get_int(j, "m", "curvature tensor");
  require_key(j, "R", "curvature tensor");
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(m) * m * m * m);
  const Json& rj = j["R"];
  if (static_cast<int>(rj.size()) != m) {
    throw std::invalid_argument("curvature tensor: wrong outer dimension");
  }
  for (const auto& a : rj) {
    for (const auto& b : a) {
      for (const auto& c : b) {
        if (static_cast<int>(c.size()) != m) {
          throw std::invalid_argument("curvature tensor: ragged data");
        }
        for (const auto& v : c) data.push_back(v.get<double>());
      }
    }
  }
  return CurvatureTensor(m, std::move(data));
}

Json hr_report_to_json(const HRReport& rep) {
  Json j;
  j["degree"] = Json::array({rep.p, rep.q});
  j["decomposition_ok"] = rep.decomposition_ok;
  j["spectrum"] = rep.spectrum;
  j["min_eigenvalue"] = rep.min_eigenvalue;
  j["verdict"] = to_string(rep.verdict);
  if (rep.witness.has_value()) {
    j["witness"] = form_to_json(*rep.witness);
  } else {
    j["witness"] = nullptr;
  }
  j["tol"] = rep.tol;
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  return j;
}

}  // namespace hrlab

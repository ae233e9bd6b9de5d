#include "hrlab/form.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hrlab {

namespace {

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

void check_degrees(int n, int p, int q) {
  if (n < 0 || p < 0 || q < 0 || p > n || q > n) {
    throw std::invalid_argument("form: bidegree out of range");
  }
}

}  // namespace

const std::vector<BasisPair>& basis(int n, int p, int q) {
  check_degrees(n, p, q);
  static std::map<std::tuple<int, int, int>, std::vector<BasisPair>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, p, q);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<BasisPair> b;
  const auto is = combinations(n, p);
  const auto js = combinations(n, q);
  b.reserve(is.size() * js.size());
  for (const auto& I : is) {
    for (const auto& J : js) {
      b.emplace_back(I, J);
    }
  }
  return cache.emplace(key, std::move(b)).first->second;
}

Form::Form(int n, int p, int q) : n_(n), p_(p), q_(q) {
  check_degrees(n, p, q);
  c_ = Eigen::VectorXcd::Zero(binomial(n, p) * binomial(n, q));
}

Form Form::scalar(int n, Complex value) {
  Form f(n, 0, 0);
  f.c_[0] = value;
  return f;
}

Form Form::monomial(int n, const MultiIndex& I, const MultiIndex& J, Complex value) {
  Form f(n, static_cast<int>(I.size()), static_cast<int>(J.size()));
  f.set_coeff(I, J, value);
  return f;
}

int Form::slot(const MultiIndex& I, const MultiIndex& J) const {
  return combination_rank(n_, I) * static_cast<int>(binomial(n_, q_)) +
         combination_rank(n_, J);
}

Complex Form::coeff(const MultiIndex& I, const MultiIndex& J) const {
  return c_[slot(I, J)];
}

void Form::set_coeff(const MultiIndex& I, const MultiIndex& J, Complex v) {
  c_[slot(I, J)] = v;
}

double Form::sup_norm() const {
  double m = 0.0;
  for (int i = 0; i < c_.size(); ++i) m = std::max(m, std::abs(c_[i]));
  return m;
}

bool Form::is_zero(double tol) const { return sup_norm() <= tol; }

bool Form::is_real(double tol) const {
  Form d = conjugate(*this);
  if (d.p() != p_ || d.q() != q_) return false;
  d -= *this;
  return d.sup_norm() <= tol * (1.0 + sup_norm());
}

Form& Form::operator+=(const Form& other) {
  if (n_ != other.n_ || p_ != other.p_ || q_ != other.q_) {
    throw std::invalid_argument("form: bidegree mismatch in addition");
  }
  c_ += other.c_;
  return *this;
}

Form& Form::operator-=(const Form& other) {
  if (n_ != other.n_ || p_ != other.p_ || q_ != other.q_) {
    throw std::invalid_argument("form: bidegree mismatch in subtraction");
  }
  c_ -= other.c_;
  return *this;
}

Form& Form::operator*=(Complex s) {
  c_ *= s;
  return *this;
}

Form wedge(const Form& a, const Form& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
  const int n = a.n();
  const int p = a.p() + b.p();
  const int q = a.q() + b.q();
  if (p > n || q > n) {
    return Form(n, std::min(p, n), std::min(q, n));  // degree overflow
  }
  Form out(n, p, q);
  const auto& ba = basis(n, a.p(), a.q());
  const auto& bb = basis(n, b.p(), b.q());
  // Moving dzbar^{J_a} past dz^{I_b} costs (-1)^{q_a * p_b}.
  const double cross = ((a.q() * b.p()) % 2 == 0) ? 1.0 : -1.0;
  MultiIndex mi, mj;
  for (std::size_t s = 0; s < ba.size(); ++s) {
    const Complex ca = a.coeffs()[static_cast<int>(s)];
    if (ca == Complex(0.0, 0.0)) continue;
    for (std::size_t t = 0; t < bb.size(); ++t) {
      const Complex cb = b.coeffs()[static_cast<int>(t)];
      if (cb == Complex(0.0, 0.0)) continue;
      const int si = merge_indices(ba[s].first, bb[t].first, mi);
      if (si == 0) continue;
      const int sj = merge_indices(ba[s].second, bb[t].second, mj);
      if (sj == 0) continue;
      out.coeffs()[out.slot(mi, mj)] += ca * cb * (si * sj * cross);
    }
  }
  return out;
}

Form conjugate(const Form& a) {
  Form out(a.n(), a.q(), a.p());
  const auto& ba = basis(a.n(), a.p(), a.q());
  const double sign = ((a.p() * a.q()) % 2 == 0) ? 1.0 : -1.0;
  for (std::size_t s = 0; s < ba.size(); ++s) {
    const Complex c = a.coeffs()[static_cast<int>(s)];
    if (c == Complex(0.0, 0.0)) continue;
    out.coeffs()[out.slot(ba[s].second, ba[s].first)] += sign * std::conj(c);
  }
  return out;
}

Form power(const Form& a, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  Form out = Form::scalar(a.n(), 1.0);
  for (int i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

Complex top_volume(const Form& omega0, double tol) {
  const int n = omega0.n();
  if (omega0.p() != 1 || omega0.q() != 1) {
    throw std::invalid_argument("top_volume: omega0 must be a (1,1)-form");
  }
  const Complex vol = power(omega0, n).coeffs()[0] / factorial(n);
  const double scale = std::pow(1.0 + omega0.sup_norm(), n);
  if (std::abs(vol) <= tol * scale) {
    throw std::domain_error("top_ratio: omega0 is degenerate");
  }
  return vol;
}

Complex top_ratio(const Form& eta, const Form& omega0, double tol) {
  const int n = eta.n();
  if (eta.p() != n || eta.q() != n) {
    throw std::invalid_argument("top_ratio: eta must have bidegree (n,n)");
  }
  if (omega0.n() != n) {
    throw std::invalid_argument("top_ratio: dimension mismatch");
  }
  return eta.coeffs()[0] / top_volume(omega0, tol);
}

Form brute_wedge(const Form& a, const Form& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
  const int n = a.n();
  const int p = a.p() + b.p();
  const int q = a.q() + b.q();
  if (p > n || q > n) {
    return Form(n, std::min(p, n), std::min(q, n));
  }
  Form out(n, p, q);
  const auto& ba = basis(n, a.p(), a.q());
  const auto& bb = basis(n, b.p(), b.q());
  std::vector<int> seq;
  for (std::size_t s = 0; s < ba.size(); ++s) {
    const Complex ca = a.coeffs()[static_cast<int>(s)];
    if (ca == Complex(0.0, 0.0)) continue;
    for (std::size_t t = 0; t < bb.size(); ++t) {
      const Complex cb = b.coeffs()[static_cast<int>(t)];
      if (cb == Complex(0.0, 0.0)) continue;
      // Generator ids: dz^i -> i, dzbar^j -> n + j; concatenate a then b.
      seq.clear();
      for (int v : ba[s].first) seq.push_back(v);
      for (int v : ba[s].second) seq.push_back(n + v);
      for (int v : bb[t].first) seq.push_back(v);
      for (int v : bb[t].second) seq.push_back(n + v);
      bool repeated = false;
      for (std::size_t i = 0; i < seq.size() && !repeated; ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
          if (seq[i] == seq[j]) {
            repeated = true;
            break;
          }
        }
      }
      if (repeated) continue;
      // Bubble sort, counting swaps.
      int swaps = 0;
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        for (std::size_t j = 0; j + 1 < seq.size() - i; ++j) {
          if (seq[j] > seq[j + 1]) {
            std::swap(seq[j], seq[j + 1]);
            ++swaps;
          }
        }
      }
      MultiIndex I, J;
      for (int v : seq) {
        if (v <= n) {
          I.push_back(v);
        } else {
          J.push_back(v - n);
        }
      }
      const double sign = (swaps % 2 == 0) ? 1.0 : -1.0;
      out.coeffs()[out.slot(I, J)] += ca * cb * sign;
    }
  }
  return out;
}

}  // namespace hrlab

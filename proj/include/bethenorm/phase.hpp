#ifndef BETHENORM_PHASE_HPP
#define BETHENORM_PHASE_HPP

// Phase functions of the chain t_1 > t_2 > ... > t_n (Verma module tensor
// the vector representation of sl(n+1)) and of sl(2) with l variables.
//
// The chain phase is
//   t_1^a_1 (1 - t_1)^b_1 prod_{j>=2} t_j^a_j (t_{j-1} - t_j)^b_j
// on 0 < t_n < ... < t_1 < 1. The differences are taken as t_{j-1} - t_j,
// which is positive on the domain; the signed form differs by a constant
// phase and has the same critical points and Hessian of the logarithm.

#include <bethenorm/algebra.hpp>
#include <bethenorm/factored.hpp>
#include <bethenorm/linalg.hpp>
#include <bethenorm/rational.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace bethenorm {

template <class Scalar>
using Point = std::vector<Scalar>;

template <class Scalar>
struct ChainPhase {
  int n = 0;
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;
};

/// Shifted tail sums Lambda_k = lambda_k + ... + lambda_n + n - k, k = 1..n
/// (returned 0-based).
inline std::vector<Rational> shifted_tail_sums(const Weight& lambda) {
  const int n = lambda.rank();
  std::vector<Rational> out(static_cast<std::size_t>(n));
  Rational tail(0);
  for (int k = n; k >= 1; --k) {
    tail += lambda[k];
    out[static_cast<std::size_t>(k - 1)] = tail + (n - k);
  }
  return out;
}

/// Exponents of Phi_n(lambda, kappa): alpha_j = -lambda_j / kappa, beta_j = -1 / kappa.
inline ChainPhase<Rational> chain_exponents(const Weight& lambda, const Rational& kappa) {
  if (kappa == 0) throw InputError("kappa must be nonzero");
  ChainPhase<Rational> p;
  p.n = lambda.rank();
  for (int j = 1; j <= p.n; ++j) {
    p.alpha.push_back(Rational(-lambda[j] / kappa));
    p.beta.push_back(Rational(-1 / kappa));
  }
  return p;
}

inline ChainPhase<double> to_float(const ChainPhase<Rational>& p) {
  ChainPhase<double> out{p.n, {}, {}};
  for (const auto& a : p.alpha) out.alpha.push_back(a.get_d());
  for (const auto& b : p.beta) out.beta.push_back(b.get_d());
  return out;
}

inline Point<double> to_float(const Point<Rational>& t) {
  Point<double> out;
  for (const auto& x : t) out.push_back(x.get_d());
  return out;
}

template <class Scalar>
bool in_chain_domain(const Point<Scalar>& t) {
  if (t.empty()) return false;
  if (!(t.front() < Scalar(1))) return false;
  for (std::size_t j = 1; j < t.size(); ++j)
    if (!(t[j] < t[j - 1])) return false;
  return Scalar(0) < t.back();
}

template <class Scalar>
void check_chain_point(const ChainPhase<Scalar>& p, const Point<Scalar>& t) {
  if (static_cast<int>(t.size()) != p.n) throw InputError("point dimension does not match the phase rank");
  if (static_cast<int>(p.alpha.size()) != p.n || static_cast<int>(p.beta.size()) != p.n)
    throw InputError("exponent vectors do not match the phase rank");
  if (!in_chain_domain(t)) throw DomainError("point outside the ordered simplex 0 < t_n < ... < t_1 < 1");
}

inline double log_phase(const ChainPhase<double>& p, const Point<double>& t) {
  check_chain_point(p, t);
  double s = p.beta[0] * std::log1p(-t[0]);
  for (int j = 0; j < p.n; ++j) {
    s += p.alpha[j] * std::log(t[j]);
    if (j > 0) s += p.beta[j] * std::log(t[j - 1] - t[j]);
  }
  return s;
}

template <class Scalar>
std::vector<Scalar> grad_log_phase(const ChainPhase<Scalar>& p, const Point<Scalar>& t) {
  check_chain_point(p, t);
  const int n = p.n;
  std::vector<Scalar> g(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Scalar gj = p.alpha[j] / t[j];
    if (j == 0) {
      gj -= p.beta[0] / (Scalar(1) - t[0]);
    } else {
      gj -= p.beta[j] / (t[j - 1] - t[j]);
    }
    if (j + 1 < n) gj += p.beta[j + 1] / (t[j] - t[j + 1]);
    g[j] = gj;
  }
  return g;
}

template <class Scalar>
Matrix<Scalar> hess_log_phase(const ChainPhase<Scalar>& p, const Point<Scalar>& t) {
  check_chain_point(p, t);
  const int n = p.n;
  Matrix<Scalar> h(n, n, Scalar(0));
  for (int j = 0; j < n; ++j) {
    Scalar d = -p.alpha[j] / (t[j] * t[j]);
    if (j == 0) {
      const Scalar u = Scalar(1) - t[0];
      d -= p.beta[0] / (u * u);
    } else {
      const Scalar u = t[j - 1] - t[j];
      d -= p.beta[j] / (u * u);
    }
    if (j + 1 < n) {
      const Scalar u = t[j] - t[j + 1];
      const Scalar off = p.beta[j + 1] / (u * u);
      d -= off;
      h(j, j + 1) = off;
      h(j + 1, j) = off;
    }
    h(j, j) = d;
  }
  return h;
}

template <class Scalar>
bool is_tridiagonal(const Matrix<Scalar>& h) {
  if (!h.is_square()) return false;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if ((i > j + 1 || j > i + 1) && !(h(i, j) == Scalar(0))) return false;
  return true;
}

/// Determinant of a tridiagonal matrix by the continuant recurrence
/// D_k = h_kk D_{k-1} - h_{k,k-1} h_{k-1,k} D_{k-2}.
template <class Scalar>
Scalar hess_det(const Matrix<Scalar>& h) {
  if (!is_tridiagonal(h)) throw InputError("hess_det expects a square tridiagonal matrix");
  Scalar prev(1);
  Scalar cur(1);
  for (std::size_t k = 0; k < h.rows(); ++k) {
    Scalar next = h(k, k) * cur;
    if (k > 0) next -= h(k, k - 1) * h(k - 1, k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Exact value of Phi_n(lambda, kappa)(t) at a rational point.
inline FactoredValue phase_value_factored(const Weight& lambda, const Rational& kappa, const Point<Rational>& t) {
  const ChainPhase<Rational> p = chain_exponents(lambda, kappa);
  check_chain_point(p, t);
  FactoredValue v = FactoredValue::power(Rational(1 - t[0]), p.beta[0]);
  for (int j = 0; j < p.n; ++j) {
    v *= FactoredValue::power(t[j], p.alpha[j]);
    if (j > 0) v *= FactoredValue::power(Rational(t[j - 1] - t[j]), p.beta[j]);
  }
  return v;
}

/// prod_k (Lambda_k + 1)^((Lambda_k + 1)/kappa) / Lambda_k^(Lambda_k/kappa).
inline FactoredValue phase_critical_value_closed(const Weight& lambda, const Rational& kappa) {
  if (kappa == 0) throw InputError("kappa must be nonzero");
  FactoredValue v;
  for (const Rational& L : shifted_tail_sums(lambda)) {
    if (L <= 0) throw DegenerateError("critical value needs every shifted tail sum positive, got " + to_string(L));
    const Rational L1 = L + 1;
    v *= FactoredValue::power(L1, Rational(L1 / kappa));
    v *= FactoredValue::power(L, Rational(-L / kappa));
  }
  return v;
}

/// sl(2) phase prod t_j^(-lam1/kappa) (1 - t_j)^(-lam2/kappa) prod_{i<j} |t_i - t_j|^(2/kappa).
struct SelbergPhase {
  int l = 1;
  double lam1 = 0.0;
  double lam2 = 0.0;
  double kappa = 1.0;

  SelbergPhase(int l_, double lam1_, double lam2_, double kappa_) : l(l_), lam1(lam1_), lam2(lam2_), kappa(kappa_) {
    if (l < 1) throw InputError("Selberg phase needs l >= 1");
    if (kappa == 0.0) throw InputError("kappa must be nonzero");
  }
};

namespace detail {

template <class T>
void check_selberg_point(const SelbergPhase& p, const Point<T>& t, bool real_domain) {
  if (static_cast<int>(t.size()) != p.l) throw InputError("point dimension does not match l");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (real_domain) {
      const double x = std::real(t[i]);
      if (!(x > 0.0 && x < 1.0)) throw DomainError("Selberg coordinate outside (0,1)");
    } else if (t[i] == T(0) || t[i] == T(1)) {
      throw DomainError("Selberg coordinate at a pole");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (t[i] == t[j]) throw DomainError("coincident Selberg coordinates");
  }
}

}  // namespace detail

inline double selberg_log_phase(const SelbergPhase& p, const Point<double>& t) {
  detail::check_selberg_point(p, t, true);
  double s = 0.0;
  for (int j = 0; j < p.l; ++j) {
    s += -(p.lam1 / p.kappa) * std::log(t[j]) - (p.lam2 / p.kappa) * std::log1p(-t[j]);
    for (int i = 0; i < j; ++i) s += (2.0 / p.kappa) * std::log(std::abs(t[i] - t[j]));
  }
  return s;
}

/// Bethe-equation left-hand side. T may be double (real points in (0,1)) or
/// std::complex<double> (complex critical points; only poles are rejected).
template <class T>
std::vector<T> selberg_grad(const SelbergPhase& p, const Point<T>& t) {
  constexpr bool real = std::is_floating_point_v<T>;
  detail::check_selberg_point(p, t, real);
  std::vector<T> g(t.size());
  for (int j = 0; j < p.l; ++j) {
    T gj = -p.lam1 / (p.kappa * t[j]) + p.lam2 / (p.kappa * (T(1) - t[j]));
    for (int k = 0; k < p.l; ++k)
      if (k != j) gj += (2.0 / p.kappa) / (t[j] - t[k]);
    g[j] = gj;
  }
  return g;
}

}  // namespace bethenorm

#endif  // BETHENORM_PHASE_HPP

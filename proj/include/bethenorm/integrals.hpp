#ifndef BETHENORM_INTEGRALS_HPP
#define BETHENORM_INTEGRALS_HPP

// Gamma-function evaluations of the chain and Selberg integrals, a nested
// adaptive quadrature over the ordered simplex used as their oracle, and
// the Laplace (stationary phase) approximation as kappa -> 0-.

#include <bethenorm/algebra.hpp>
#include <bethenorm/critical.hpp>
#include <bethenorm/phase.hpp>
#include <bethenorm/rational.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace bethenorm {

/// ln Gamma(x) for x > 0: upward recurrence to x >= 10, then the Stirling
/// series through the B_16 term (truncation error below 1e-17 there).
inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma needs a finite positive argument");
  double shift = 0.0;
  double prod = 1.0;
  while (x < 10.0) {
    prod *= x;
    x += 1.0;
    // keep the product well inside double range
    if (prod > 1e280) {
      shift += std::log(prod);
      prod = 1.0;
    }
  }
  shift += std::log(prod);
  // B_{2k} / (2k (2k-1)), k = 1..8
  static constexpr std::array<double, 8> coeffs = {
      1.0 / 12.0,          -1.0 / 360.0,      1.0 / 1260.0,     -1.0 / 1680.0,
      1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0,      -3617.0 / 122400.0,
  };
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double pw = inv;
  for (double c : coeffs) {
    series += c * pw;
    pw *= inv2;
  }
  constexpr double half_log_2pi = 0.91893853320467274178032973640562;
  return (x - 0.5) * std::log(x) - x + half_log_2pi + series - shift;
}

namespace detail {

inline double checked_log_gamma(double x, const char* what) {
  if (!(x > 0.0)) throw DomainError(std::string("nonpositive Gamma argument in ") + what);
  return log_gamma(x);
}

inline void check_lengths(const std::vector<double>& alpha, const std::vector<double>& beta) {
  if (alpha.empty() || alpha.size() != beta.size()) throw InputError("alpha and beta must have equal positive length");
}

}  // namespace detail

/// ln of prod_j Gamma(b_j+1) Gamma(A_j + B_{j+1} + n-j+1) / Gamma(A_j + B_j + n-j+2)
/// with A_j = a_j + ... + a_n, B_j = b_j + ... + b_n.
inline double chain_integral_gamma_log(const std::vector<double>& alpha, const std::vector<double>& beta) {
  detail::check_lengths(alpha, beta);
  const int n = static_cast<int>(alpha.size());
  double acc = 0.0;
  double a_tail = 0.0, b_tail = 0.0;
  for (int j = n; j >= 1; --j) {
    const double b_next = b_tail;  // B_{j+1}
    a_tail += alpha[j - 1];
    b_tail += beta[j - 1];
    acc += detail::checked_log_gamma(beta[j - 1] + 1.0, "chain integral");
    acc += detail::checked_log_gamma(a_tail + b_next + (n - j + 1), "chain integral");
    acc -= detail::checked_log_gamma(a_tail + b_tail + (n - j + 2), "chain integral");
  }
  return acc;
}

inline double chain_integral_gamma(const std::vector<double>& alpha, const std::vector<double>& beta) {
  return std::exp(chain_integral_gamma_log(alpha, beta));
}

inline double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Integrating out t_n gives I_n(a, b) = B(a_n+1, b_n+1) I_{n-1}(a', b') with
/// a' = (a_1, ..., a_{n-2}, a_{n-1} + a_n + b_n + 1) and b' = (b_1, ..., b_{n-1}).
inline bool gamma_recurrence_check(const std::vector<double>& alpha, const std::vector<double>& beta,
                                   double rel_tol = 1e-10) {
  detail::check_lengths(alpha, beta);
  const std::size_t n = alpha.size();
  if (n < 2) throw InputError("gamma_recurrence_check needs n >= 2");
  const double lhs = chain_integral_gamma_log(alpha, beta);
  const double an = alpha[n - 1], bn = beta[n - 1];
  std::vector<double> a2(alpha.begin(), alpha.end() - 1), b2(beta.begin(), beta.end() - 1);
  a2.back() += an + bn + 1.0;
  const double beta_fn = detail::checked_log_gamma(an + 1.0, "recurrence") +
                         detail::checked_log_gamma(bn + 1.0, "recurrence") -
                         detail::checked_log_gamma(an + bn + 2.0, "recurrence");
  const double rhs = beta_fn + chain_integral_gamma_log(a2, b2);
  // compare in value space: relative difference of exp(lhs) and exp(rhs)
  return std::abs(std::expm1(lhs - rhs)) <= rel_tol;
}

/// Selberg formula divided by l!, i.e. the integral over 0 < t_1 < ... < t_l < 1.
inline double selberg_integral_gamma_log(double lam1, double lam2, double kappa, int l) {
  if (l < 1) throw InputError("l must be >= 1");
  if (kappa == 0.0) throw InputError("kappa must be nonzero");
  double acc = 0.0;
  for (int j = 0; j < l; ++j) {
    acc += detail::checked_log_gamma((-lam1 + j) / kappa + 1.0, "Selberg");
    acc += detail::checked_log_gamma((-lam2 + j) / kappa + 1.0, "Selberg");
    acc += detail::checked_log_gamma((j + 1) / kappa + 1.0, "Selberg");
    acc -= detail::checked_log_gamma((-lam1 - lam2 + (2 * l - j - 2)) / kappa + 2.0, "Selberg");
    acc -= detail::checked_log_gamma(1.0 / kappa + 1.0, "Selberg");
  }
  return acc - log_gamma(l + 1.0);
}

inline double selberg_integral_gamma(double lam1, double lam2, double kappa, int l) {
  return std::exp(selberg_integral_gamma_log(lam1, lam2, kappa, l));
}

struct QuadResult {
  double value = 0.0;
  double est_error = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

namespace detail {

// Gauss-Kronrod 10/21 nodes and weights on [-1, 1] (QUADPACK qk21).
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452252, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
inline constexpr std::array<double, 5> kWg = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                                              0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                                              0.295524224714752870173892994651338};

struct Estimate {
  double value = 0.0;
  double error = 0.0;  // includes errors carried by the integrand values
};

// f returns (value, error of that value)
using NestedIntegrand = std::function<Estimate(double)>;

struct Interval {
  double a, b;
  Estimate est;
  bool operator<(const Interval& o) const { return est.error < o.est.error; }
};

inline Estimate gk21(const NestedIntegrand& f, double a, double b) {
  const double center = 0.5 * (a + b), half = 0.5 * (b - a);
  const Estimate fc = f(center);
  double kronrod = kWgk[10] * fc.value;
  double gauss = 0.0;
  double carried = kWgk[10] * fc.error;
  for (int k = 0; k < 10; ++k) {
    const double dx = half * kXgk[k];
    const Estimate f1 = f(center - dx), f2 = f(center + dx);
    kronrod += kWgk[k] * (f1.value + f2.value);
    carried += kWgk[k] * (f1.error + f2.error);
    if (k % 2 == 1) gauss += kWg[k / 2] * (f1.value + f2.value);
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half) + carried * std::abs(half)};
}

struct Budget {
  std::int64_t used = 0;
  std::int64_t limit = 0;
  bool exhausted() const { return used >= limit; }
};

/// Global adaptive bisection on (a, b); the interval with the largest error
/// is split first. Nodes are interior, so integrable endpoint singularities
/// never get evaluated.
inline Estimate adaptive(const NestedIntegrand& f, double a, double b, double rel_tol, double abs_tol, Budget& budget,
                         bool* ok = nullptr) {
  std::priority_queue<Interval> heap;
  Interval first{a, b, gk21(f, a, b)};
  double value = first.est.value, error = first.est.error;
  heap.push(first);
  constexpr int kMaxIntervals = 2000;
  int intervals = 1;
  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (budget.exhausted() || intervals >= kMaxIntervals) {
      if (ok) *ok = false;
      return {value, error};
    }
    const Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {  // interval cannot be split further
      if (ok) *ok = false;
      return {value, error};
    }
    Interval left{worst.a, mid, gk21(f, worst.a, mid)};
    Interval right{mid, worst.b, gk21(f, mid, worst.b)};
    ++intervals;
    value += left.est.value + right.est.value - worst.est.value;
    error = std::max(0.0, error + left.est.error + right.est.error - worst.est.error);
    heap.push(left);
    heap.push(right);
  }
  if (ok) *ok = true;
  return {value, error};
}

}  // namespace detail

/// Integral of F over 0 < t_n < ... < t_1 < 1 through t_1 = u_1,
/// t_j = t_{j-1} u_j (Jacobian t_1 ... t_{n-1}), with nested adaptive
/// Gauss-Kronrod quadrature in each u_j. Inner integrals run at a tenth of
/// the outer tolerance and their error estimates are carried outward.
inline QuadResult quad_simplex(const std::function<double(const Point<double>&)>& F, int n, double rel_tol,
                               std::int64_t max_evaluations = 10'000'000) {
  if (n < 1) throw InputError("dimension must be >= 1");
  if (!(rel_tol > 0.0)) throw InputError("rel_tol must be positive");
  detail::Budget budget{0, max_evaluations};
  Point<double> t(static_cast<std::size_t>(n));
  bool all_ok = true;

  std::function<detail::Estimate(int, double, double)> level;
  // level(d, prev, jac): integrate over u_d given t_{d-1} = prev and the
  // accumulated Jacobian; returns the inner estimate.
  level = [&](int d, double prev, double jac) -> detail::Estimate {
    const double tol = rel_tol * std::pow(0.1, d);
    detail::NestedIntegrand inner = [&, d, prev, jac](double u) -> detail::Estimate {
      const double tj = prev * u;
      t[static_cast<std::size_t>(d)] = tj;
      if (d + 1 == n) {
        ++budget.used;
        return {F(t) * jac, 0.0};
      }
      return level(d + 1, tj, jac * tj);
    };
    bool ok = true;
    const detail::Estimate e = detail::adaptive(inner, 0.0, 1.0, tol, 1e-300, budget, &ok);
    all_ok = all_ok && ok;
    return e;
  };
  const detail::Estimate e = level(0, 1.0, 1.0);
  QuadResult r{e.value, e.error, budget.used, all_ok && e.error <= rel_tol * std::abs(e.value)};
  return r;
}

/// Phi~_n(alpha, beta) as a callable integrand on the chain domain.
inline std::function<double(const Point<double>&)> chain_integrand(std::vector<double> alpha,
                                                                   std::vector<double> beta) {
  detail::check_lengths(alpha, beta);
  return [alpha = std::move(alpha), beta = std::move(beta)](const Point<double>& t) {
    double v = std::pow(1.0 - t[0], beta[0]);
    for (std::size_t j = 0; j < t.size(); ++j) {
      v *= std::pow(t[j], alpha[j]);
      if (j > 0) v *= std::pow(t[j - 1] - t[j], beta[j]);
    }
    return v;
  };
}

/// Selberg integrand on 0 < t_1 < ... < t_l < 1, written in chain
/// coordinates s_1 > ... > s_l (s_k = t_{l+1-k}) so that quad_simplex applies.
inline std::function<double(const Point<double>&)> selberg_integrand(double lam1, double lam2, double kappa) {
  if (kappa == 0.0) throw InputError("kappa must be nonzero");
  return [=](const Point<double>& s) {
    double v = 1.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      v *= std::pow(s[j], -lam1 / kappa) * std::pow(1.0 - s[j], -lam2 / kappa);
      for (std::size_t i = 0; i < j; ++i) v *= std::pow(std::abs(s[i] - s[j]), 2.0 / kappa);
    }
    return v;
  };
}

/// ln of (2 pi |kappa|)^(n/2) exp(S(t)/kappa) det(H_S(t))^(-1/2), S = ln Phi_n(lambda, 1),
/// t the closed-form critical point. With kappa < 0 the integrand exp(S/kappa)
/// peaks at t because S is convex there, so H_S is taken positive definite
/// and |kappa| replaces kappa under the square root.
inline double laplace_approx_log(const Weight& lambda, const Rational& kappa) {
  if (!(kappa < 0)) throw InputError("laplace_approx needs kappa < 0");
  for (const Rational& c : lambda.coords())
    if (c <= 0) throw InputError("laplace_approx needs lambda_i > 0");
  const int n = lambda.rank();
  const Matrix<Rational> h = hess_log_phase(chain_exponents(lambda, Rational(1)), critical_point_closed(lambda));
  // leading principal minors from the continuant recurrence
  Rational prev(1), cur(1);
  for (int k = 0; k < n; ++k) {
    Rational next = h(k, k) * cur;
    if (k > 0) next -= h(k, k - 1) * h(k - 1, k) * prev;
    prev = cur;
    cur = next;
    if (cur <= 0) throw DegenerateError("Hessian of ln Phi at the critical point is not positive definite");
  }
  const double s_crit = phase_critical_value_closed(lambda, Rational(1)).log_abs();
  const double k = kappa.get_d();
  return 0.5 * n * std::log(2.0 * std::numbers::pi * std::abs(k)) + s_crit / k - 0.5 * std::log(cur.get_d());
}

inline double laplace_approx(const Weight& lambda, const Rational& kappa) {
  return std::exp(laplace_approx_log(lambda, kappa));
}

/// Gamma-formula value of the integral of Phi_n(lambda, kappa) in log form.
inline double chain_integral_log_for(const Weight& lambda, const Rational& kappa) {
  const ChainPhase<double> p = to_float(chain_exponents(lambda, kappa));
  return chain_integral_gamma_log(p.alpha, p.beta);
}

/// Ratios exact / Laplace for each kappa (negative, decreasing in magnitude).
inline std::vector<double> asymptotics_scan(const Weight& lambda, const std::vector<Rational>& kappas) {
  if (kappas.empty()) throw InputError("asymptotics_scan needs at least one kappa");
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    if (!(kappas[i] < 0)) throw InputError("asymptotics kappas must be negative");
    if (i > 0 && !(abs(kappas[i]) < abs(kappas[i - 1])))
      throw InputError("asymptotics kappas must decrease in magnitude");
  }
  std::vector<double> ratios;
  for (const Rational& k : kappas) ratios.push_back(std::exp(chain_integral_log_for(lambda, k) - laplace_approx_log(lambda, k)));
  return ratios;
}

}  // namespace bethenorm

#endif  // BETHENORM_INTEGRALS_HPP

#ifndef BETHENORM_CRITICAL_HPP
#define BETHENORM_CRITICAL_HPP

// Critical points: the closed form for the chain phase, the symmetric
// function description for sl(2), and a damped Newton solver with a seeded
// multistart scan used as an independent numerical check.

#include <bethenorm/algebra.hpp>
#include <bethenorm/phase.hpp>
#include <bethenorm/rational.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace bethenorm {

/// t_j = prod_{i<=j} Lambda_i / (Lambda_i + 1).
inline Point<Rational> critical_point_closed(const Weight& lambda) {
  const std::vector<Rational> tails = shifted_tail_sums(lambda);
  Point<Rational> t;
  Rational acc(1);
  for (const Rational& L : tails) {
    if (L == 0 || L + 1 == 0)
      throw DegenerateError("critical point undefined: shifted tail sum " + to_string(L) + " for lambda=" +
                            lambda.to_string());
    acc *= L / (L + 1);
    t.push_back(acc);
  }
  return t;
}

/// Checks t_n = lambda_n/(lambda_n+1) t_{n-1} and
/// t_k(lambda) = t_k(lambda_1, ..., lambda_{n-2}, lambda_{n-1} + lambda_n + 1), k < n.
inline bool critical_recurrence_check(const Weight& lambda) {
  const int n = lambda.rank();
  if (n < 2) throw InputError("critical_recurrence_check needs rank >= 2");
  const Point<Rational> t = critical_point_closed(lambda);
  const Rational& ln = lambda[n];
  if (ln + 1 == 0) throw DegenerateError("lambda_n = -1");
  bool ok = t[n - 1] == Rational(ln / (ln + 1)) * t[n - 2];
  std::vector<Rational> merged(lambda.coords().begin(), lambda.coords().end() - 1);
  merged.back() += ln + 1;
  const Point<Rational> reduced = critical_point_closed(Weight(merged));
  for (int k = 0; k < n - 1; ++k) ok = ok && t[k] == reduced[k];
  return ok;
}

struct CriticalReport {
  Point<double> point;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
  bool singular = false;  // a singular Hessian stopped the iteration
};

/// Gradient system for Newton: grad, its Jacobian, and the open domain.
struct GradHess {
  std::function<std::vector<double>(const Point<double>&)> grad;
  std::function<Matrix<double>(const Point<double>&)> hess;
  std::function<bool(const Point<double>&)> in_domain;
};

inline GradHess chain_grad_hess(ChainPhase<double> p) {
  return {[p](const Point<double>& t) { return grad_log_phase(p, t); },
          [p](const Point<double>& t) { return hess_log_phase(p, t); },
          [](const Point<double>& t) { return in_chain_domain(t); }};
}

inline double sup_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Damped Newton on grad = 0. Steps are halved until the trial point lies in
/// the domain and lowers the sup-norm residual; stagnation ends the run.
inline CriticalReport newton_refine(const GradHess& gh, Point<double> start, double tol = 1e-12, int max_iter = 100) {
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  if (!gh.in_domain(start)) throw DomainError("Newton start outside the domain");
  CriticalReport rep;
  rep.point = std::move(start);
  std::vector<double> g = gh.grad(rep.point);
  rep.residual = sup_norm(g);
  const std::size_t n = rep.point.size();
  while (rep.residual > tol && rep.iterations < max_iter) {
    const Matrix<double> h = gh.hess(rep.point);
    Eigen::MatrixXd hm(n, n);
    Eigen::VectorXd gv(n);
    for (std::size_t i = 0; i < n; ++i) {
      gv(i) = g[i];
      for (std::size_t j = 0; j < n; ++j) hm(i, j) = h(i, j);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(hm);
    if (!lu.isInvertible()) {
      rep.singular = true;
      break;
    }
    const Eigen::VectorXd step = lu.solve(-gv);
    double scale = 1.0;
    bool accepted = false;
    Point<double> trial(n);
    std::vector<double> trial_g;
    for (int halving = 0; halving < 60; ++halving, scale *= 0.5) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = rep.point[i] + scale * step(i);
      if (!gh.in_domain(trial)) continue;
      trial_g = gh.grad(trial);
      if (sup_norm(trial_g) < rep.residual) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    ++rep.iterations;
    rep.point = trial;
    g = std::move(trial_g);
    rep.residual = sup_norm(g);
  }
  rep.converged = rep.residual <= tol;
  return rep;
}

/// Uniform double in the open interval (0,1) from the top 53 bits.
inline double open_unit_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Sorted uniforms: a uniform point of 0 < t_n < ... < t_1 < 1.
inline Point<double> sample_ordered_simplex(std::mt19937_64& rng, int n) {
  Point<double> t(static_cast<std::size_t>(n));
  do {
    for (auto& x : t) x = open_unit_uniform(rng);
    std::sort(t.begin(), t.end(), std::greater<>());
  } while (!in_chain_domain(t));
  return t;
}

struct MultistartResult {
  std::vector<Point<double>> points;  // distinct converged points, in order of discovery
  std::vector<int> cluster_sizes;
  std::vector<double> residuals;      // best residual per cluster
  int non_converged = 0;
  int starts = 0;
};

/// Newton from num_starts seeded sorted-uniform starts (std::mt19937_64),
/// converged points merged when closer than dedup_tol.
inline MultistartResult multistart_scan(const GradHess& gh, int n, int num_starts, std::uint64_t seed,
                                        double tol = 1e-12, double dedup_tol = 1e-8, int max_iter = 100) {
  if (num_starts < 1) throw InputError("multistart needs at least one start");
  if (n < 1) throw InputError("dimension must be >= 1");
  std::mt19937_64 rng(seed);
  MultistartResult res;
  res.starts = num_starts;
  for (int s = 0; s < num_starts; ++s) {
    const CriticalReport rep = newton_refine(gh, sample_ordered_simplex(rng, n), tol, max_iter);
    if (!rep.converged) {
      ++res.non_converged;
      continue;
    }
    bool merged = false;
    for (std::size_t c = 0; c < res.points.size() && !merged; ++c) {
      double d2 = 0.0;
      for (int i = 0; i < n; ++i) d2 += (res.points[c][i] - rep.point[i]) * (res.points[c][i] - rep.point[i]);
      if (std::sqrt(d2) < dedup_tol) {
        ++res.cluster_sizes[c];
        res.residuals[c] = std::min(res.residuals[c], rep.residual);
        merged = true;
      }
    }
    if (!merged) {
      res.points.push_back(rep.point);
      res.cluster_sizes.push_back(1);
      res.residuals.push_back(rep.residual);
    }
  }
  return res;
}

/// Elementary symmetric functions of the sl(2) critical point:
/// sigma_k = C(l,k) prod_{j<=k} (lam1 - l + j) / (lam1 + lam2 - 2l + j + 1).
inline std::vector<Rational> sl2_sigma_closed(const Rational& lam1, const Rational& lam2, int l) {
  if (l < 1) throw InputError("l must be >= 1");
  std::vector<Rational> sigma;
  Rational prod(1);
  Rational binom(1);
  for (int k = 1; k <= l; ++k) {
    const Rational den = lam1 + lam2 - 2 * l + k + 1;
    if (den == 0) throw DegenerateError("sl(2) symmetric-function formula has a zero denominator at k=" +
                                        std::to_string(k));
    prod *= (lam1 - l + k) / den;
    binom = binom * (l - k + 1) / k;
    sigma.push_back(binom * prod);
  }
  return sigma;
}

/// Roots of x^l - s_1 x^(l-1) + s_2 x^(l-2) - ... via companion-matrix
/// eigenvalues, polished by complex Newton, sorted by (real, imag).
inline std::vector<std::complex<double>> sl2_point_from_sigma(const std::vector<double>& sigma) {
  const int l = static_cast<int>(sigma.size());
  if (l < 1) throw InputError("empty sigma");
  // monic coefficients, highest first: c[0] = 1, c[k] = (-1)^k sigma_k
  std::vector<double> c(static_cast<std::size_t>(l + 1));
  c[0] = 1.0;
  for (int k = 1; k <= l; ++k) c[k] = (k % 2 ? -1.0 : 1.0) * sigma[k - 1];
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(l, l);
  for (int i = 1; i < l; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < l; ++i) comp(i, l - 1) = -c[l - i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < l; ++i) roots.push_back(es.eigenvalues()(i));

  auto eval = [&](std::complex<double> x, std::complex<double>& deriv) {
    std::complex<double> p = c[0], d = 0.0;
    for (int k = 1; k <= l; ++k) {
      d = d * x + p;
      p = p * x + c[k];
    }
    deriv = d;
    return p;
  };
  for (auto& r : roots) {
    for (int it = 0; it < 8; ++it) {
      std::complex<double> d;
      const std::complex<double> p = eval(r, d);
      if (p == 0.0 || d == 0.0) break;
      const std::complex<double> next = r - p / d;
      std::complex<double> dn;
      if (std::abs(eval(next, dn)) >= std::abs(p)) break;
      r = next;
    }
    // Clean tiny imaginary parts left by the eigensolver on real roots.
    if (std::abs(r.imag()) <= 1e-14 * std::max(1.0, std::abs(r.real()))) r = {r.real(), 0.0};
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

}  // namespace bethenorm

#endif  // BETHENORM_CRITICAL_HPP

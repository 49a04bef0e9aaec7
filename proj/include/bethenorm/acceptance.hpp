#ifndef BETHENORM_ACCEPTANCE_HPP
#define BETHENORM_ACCEPTANCE_HPP

// The verification grid behind `bethenorm all` and the acceptance suite.
// Every tolerance and grid is fixed here.

#include <bethenorm/bethe.hpp>
#include <bethenorm/critical.hpp>
#include <bethenorm/integrals.hpp>
#include <bethenorm/phase.hpp>
#include <bethenorm/report.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace bethenorm::acceptance {

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  bool pass() const {
    for (const auto& c : checks)
      if (c.status != Status::pass) return false;
    return !checks.empty();
  }
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

inline std::vector<Rational> norm_grid_values() {
  return {make_rational(1, 2), make_rational(1), make_rational(3, 2), make_rational(2),
          make_rational(5, 2), make_rational(3), make_rational(7)};
}

/// Every tuple over `values` of length n, lexicographic in value index.
template <class T>
std::vector<std::vector<T>> full_grid(const std::vector<T>& values, int n) {
  std::vector<std::vector<T>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<T> tuple;
    for (std::size_t i : idx) tuple.push_back(values[i]);
    out.push_back(std::move(tuple));
    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == values.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

/// The full grid when it has at most `count` tuples, otherwise `count`
/// distinct tuples drawn with a seeded std::mt19937_64.
inline std::vector<std::vector<Rational>> weight_grid(const std::vector<Rational>& values, int n, std::size_t count,
                                                      std::uint64_t seed) {
  const double full = std::pow(static_cast<double>(values.size()), n);
  if (full <= static_cast<double>(count)) return full_grid(values, n);
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<Rational>> out;
  while (out.size() < count) {
    std::vector<std::size_t> idx;
    for (int i = 0; i < n; ++i) idx.push_back(static_cast<std::size_t>(rng() % values.size()));
    if (!seen.insert(idx).second) continue;
    std::vector<Rational> tuple;
    for (std::size_t i : idx) tuple.push_back(values[i]);
    out.push_back(std::move(tuple));
  }
  return out;
}

inline std::string count_note(std::size_t bad, std::size_t total, const std::string& first_bad) {
  std::string s = std::to_string(total - bad) + "/" + std::to_string(total) + " cases pass";
  if (bad) s += "; first failure " + first_bad;
  return s;
}

/// Runs `body` and turns exceptions into an error check.
inline void guarded(Criterion& c, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.checks.push_back(error_check(name, e.what()));
  }
}

}  // namespace detail

/// Shapovalov norm = Hessian determinant = closed product, n = 1..5.
/// n = 1 has only 7 tuples over the value set; the full 7^2 grid is used at n = 2 and 20 seeded tuples for n >= 3.
inline Criterion criterion_norm_identity() {
  Criterion c{1, "exact norm identity B(X,X) = det Hess ln Phi = closed product", {}, 0};
  const auto t0 = detail::Clock::now();
  const auto values = detail::norm_grid_values();
  for (int n = 1; n <= 5; ++n) {
    const std::string name = "n=" + std::to_string(n) + " three-way equality";
    detail::guarded(c, name, [&] {
      const auto grid = detail::weight_grid(values, n, n <= 2 ? 49 : 20, 1000 + n);
      std::size_t bad = 0, dim_bad = 0;
      std::string first;
      for (const auto& coords : grid) {
        const NormReport r = verify_norm_identity(Weight(coords));
        const bool ok = r.all_equal && r.singular && r.solution_dimension == 1;
        if (!ok && bad++ == 0) first = r.lambda.to_string();
        if (r.solution_dimension != 1) ++dim_bad;
      }
      const std::size_t required = n == 1 ? 7 : 20;
      c.checks.push_back(bool_check(name, bad == 0 && grid.size() >= required,
                                    detail::count_note(bad, grid.size(), first) +
                                        (dim_bad ? "; solution dimension != 1 seen" : "")));
    });
  }
  c.elapsed_ms = detail::ms_since(t0);
  c.checks.push_back(bound_check("runtime (s)", c.elapsed_ms / 1000.0, 60.0));
  return c;
}

inline Criterion criterion_spot_values() {
  Criterion c{2, "spot values lambda=(2), lambda=(1,1)", {}, 0};
  const auto t0 = detail::Clock::now();
  detail::guarded(c, "lambda=(2)", [&] {
    const NormReport r = verify_norm_identity(Weight({make_rational(2)}));
    const Rational want = make_rational(27, 2);
    c.checks.push_back(exact_check("lambda=(2) Shapovalov norm", r.shapovalov_norm, want));
    c.checks.push_back(exact_check("lambda=(2) Hessian determinant", r.hessian_det, want));
    c.checks.push_back(exact_check("lambda=(2) closed product", r.closed_form, want));
  });
  detail::guarded(c, "lambda=(1,1)", [&] {
    const Weight w({make_rational(1), make_rational(1)});
    const NormReport r = verify_norm_identity(w);
    const Rational want = make_rational(8192, 27);
    c.checks.push_back(exact_check("lambda=(1,1) Shapovalov norm", r.shapovalov_norm, want));
    c.checks.push_back(exact_check("lambda=(1,1) Hessian determinant", r.hessian_det, want));
    c.checks.push_back(exact_check("lambda=(1,1) closed product", r.closed_form, want));
    const Point<Rational> t = critical_point_closed(w);
    c.checks.push_back(exact_check("lambda=(1,1) t_1", t[0], make_rational(3, 4)));
    c.checks.push_back(exact_check("lambda=(1,1) t_2", t[1], make_rational(3, 8)));
    c.checks.push_back(exact_check("lambda=(1,1) a^2 = a_coeff", a_coeff(w), make_rational(32, 3)));
    c.checks.push_back(exact_check("lambda=(1,1) a^2 = omega_first(t)", omega_first(t), make_rational(32, 3)));
    const TensorVector x = singular_vector(w);
    c.checks.push_back(exact_check("lambda=(1,1) coefficient of v (x) w_2", x.coefficient(Word{}, 2),
                                   make_rational(32, 3)));
  });
  c.elapsed_ms = detail::ms_since(t0);
  return c;
}

/// Gamma product vs quadrature over alpha, beta in {1,2,3}^n, n <= 3.
inline Criterion criterion_chain_integral() {
  Criterion c{3, "chain integral: Gamma product vs nested quadrature", {}, 0};
  const auto t0 = detail::Clock::now();
  constexpr double quad_tol = 1e-10;
  constexpr double agree_tol = 1e-8;
  for (int n = 1; n <= 3; ++n) {
    const std::string name = "n=" + std::to_string(n) + " max relative difference";
    detail::guarded(c, name, [&] {
      const auto exps = detail::full_grid(std::vector<double>{1.0, 2.0, 3.0}, n);
      double worst = 0.0;
      std::size_t bad = 0, total = 0, unconverged = 0;
      std::string first;
      for (const auto& alpha : exps)
        for (const auto& beta : exps) {
          ++total;
          const double g = chain_integral_gamma(alpha, beta);
          const QuadResult q = quad_simplex(chain_integrand(alpha, beta), n, quad_tol);
          const double d = relative_difference(g, q.value);
          worst = std::max(worst, d);
          if (!q.converged) ++unconverged;
          if (d > agree_tol && bad++ == 0)
            first = "alpha[0]=" + format_double(alpha[0]) + " beta[0]=" + format_double(beta[0]);
        }
      c.checks.push_back(bound_check(name, worst, agree_tol, detail::count_note(bad, total, first)));
      c.checks.push_back(bool_check("n=" + std::to_string(n) + " quadrature reached its tolerance", unconverged == 0,
                                    std::to_string(unconverged) + " unconverged"));
    });
  }
  detail::guarded(c, "alpha=beta=(1,1) = 1/180", [&] {
    const QuadResult q = quad_simplex(chain_integrand({1, 1}, {1, 1}), 2, quad_tol);
    const double exact = 1.0 / 180.0;
    c.checks.push_back(bound_check("alpha=beta=(1,1) quadrature vs 1/180 (relative)", relative_difference(q.value, exact),
                                   quad_tol));
    c.checks.push_back(bound_check("alpha=beta=(1,1) Gamma product vs 1/180 (relative)",
                                   relative_difference(chain_integral_gamma({1, 1}, {1, 1}), exact), 1e-12));
  });
  c.elapsed_ms = detail::ms_since(t0);
  c.checks.push_back(bound_check("runtime (s)", c.elapsed_ms / 1000.0, 120.0));
  return c;
}

inline Criterion criterion_selberg() {
  Criterion c{4, "Selberg formula vs quadrature", {}, 0};
  const auto t0 = detail::Clock::now();
  constexpr double quad_tol = 1e-9;
  constexpr double agree_tol = 1e-6;
  detail::guarded(c, "Selberg grid", [&] {
    double worst = 0.0;
    std::size_t bad = 0, total = 0, unconverged = 0;
    std::string first;
    for (int l = 1; l <= 3; ++l)
      for (double lam1 : {-1.0, -2.0})
        for (double lam2 : {-1.0, -2.0}) {
          ++total;
          const double g = selberg_integral_gamma(lam1, lam2, 1.0, l);
          const QuadResult q = quad_simplex(selberg_integrand(lam1, lam2, 1.0), l, quad_tol);
          const double d = relative_difference(g, q.value);
          worst = std::max(worst, d);
          if (!q.converged) ++unconverged;
          if (d > agree_tol && bad++ == 0)
            first = "l=" + std::to_string(l) + " lambda=(" + format_double(lam1) + "," + format_double(lam2) + ")";
        }
    c.checks.push_back(bound_check("l<=3, lambda in {-1,-2}^2, kappa=1: max relative difference", worst, agree_tol,
                                   detail::count_note(bad, total, first)));
    c.checks.push_back(bool_check("Selberg quadrature reached its tolerance", unconverged == 0,
                                  std::to_string(unconverged) + " unconverged"));
  });
  detail::guarded(c, "l=2 lambda=(-1,-1) = 1/720", [&] {
    const double exact = 1.0 / 720.0;
    c.checks.push_back(bound_check("l=2 lambda=(-1,-1) Gamma formula vs 1/720 (relative)",
                                   relative_difference(selberg_integral_gamma(-1, -1, 1, 2), exact), 1e-12));
    const QuadResult q = quad_simplex(selberg_integrand(-1, -1, 1), 2, quad_tol);
    c.checks.push_back(bound_check("l=2 lambda=(-1,-1) quadrature vs 1/720 (relative)",
                                   relative_difference(q.value, exact), quad_tol));
  });
  c.elapsed_ms = detail::ms_since(t0);
  c.checks.push_back(bound_check("runtime (s)", c.elapsed_ms / 1000.0, 120.0));
  return c;
}

/// One Newton cluster from 100 seeded starts on every lambda in {1/2,1,2,3,5}^n, n <= 4.
inline Criterion criterion_uniqueness() {
  Criterion c{5, "multistart uniqueness of the chain critical point", {}, 0};
  const auto t0 = detail::Clock::now();
  constexpr double tol = 1e-12;
  constexpr double match_tol = 1e-8;
  const std::vector<Rational> values = {make_rational(1, 2), make_rational(1), make_rational(2), make_rational(3),
                                        make_rational(5)};
  for (int n = 1; n <= 4; ++n) {
    const std::string name = "n=" + std::to_string(n) + " single cluster at the closed form";
    detail::guarded(c, name, [&] {
      std::size_t bad = 0, total = 0;
      int non_converged = 0;
      double worst_res = 0.0, worst_dist = 0.0;
      std::string first;
      for (const auto& coords : detail::full_grid(values, n)) {
        ++total;
        const Weight w(coords);
        const MultistartResult ms = multistart_scan(chain_grad_hess(to_float(chain_exponents(w, Rational(1)))), n,
                                                    100, 42, tol);
        non_converged += ms.non_converged;
        bool ok = ms.points.size() == 1;
        if (ok) {
          const Point<double> t = to_float(critical_point_closed(w));
          double d2 = 0.0;
          for (int i = 0; i < n; ++i) d2 += (ms.points[0][i] - t[i]) * (ms.points[0][i] - t[i]);
          worst_dist = std::max(worst_dist, std::sqrt(d2));
          worst_res = std::max(worst_res, ms.residuals[0]);
          ok = std::sqrt(d2) <= match_tol && ms.residuals[0] <= tol;
        }
        if (!ok && bad++ == 0) first = w.to_string() + " clusters=" + std::to_string(ms.points.size());
      }
      c.checks.push_back(bool_check(name, bad == 0,
                                    detail::count_note(bad, total, first) + "; max residual " +
                                        format_double(worst_res) + "; max distance " + format_double(worst_dist) +
                                        "; non-converged starts " + std::to_string(non_converged)));
    });
  }
  c.elapsed_ms = detail::ms_since(t0);
  c.checks.push_back(bound_check("runtime (s)", c.elapsed_ms / 1000.0, 30.0));
  return c;
}

/// Bethe residual for sl(2) at the roots of the symmetric-function polynomial.
inline double sl2_residual(const Rational& lam1, const Rational& lam2, int l, bool* real_distinct = nullptr) {
  std::vector<double> sigma;
  for (const Rational& s : sl2_sigma_closed(lam1, lam2, l)) sigma.push_back(s.get_d());
  const auto roots = sl2_point_from_sigma(sigma);
  if (real_distinct) {
    bool ok = true;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      ok = ok && roots[i].imag() == 0.0 && roots[i].real() > 0.0 && roots[i].real() < 1.0;
      if (i > 0) ok = ok && roots[i].real() != roots[i - 1].real();
    }
    *real_distinct = ok;
  }
  const SelbergPhase p(l, lam1.get_d(), lam2.get_d(), 1.0);
  double res = 0.0;
  for (const auto& g : selberg_grad(p, roots)) res = std::max(res, std::abs(g));
  return res;
}

inline Criterion criterion_sl2() {
  Criterion c{6, "sl(2) critical point from symmetric functions", {}, 0};
  const auto t0 = detail::Clock::now();
  constexpr double tol = 1e-8;
  detail::guarded(c, "sigma for lambda=(-2,-2), l=2", [&] {
    const auto s = sl2_sigma_closed(make_rational(-2), make_rational(-2), 2);
    c.checks.push_back(exact_check("lambda=(-2,-2) l=2 sigma_1", s[0], make_rational(1)));
    c.checks.push_back(exact_check("lambda=(-2,-2) l=2 sigma_2", s[1], make_rational(1, 5)));
  });
  const std::vector<Rational> lams = {make_rational(-2), make_rational(-3), make_rational(-5), make_rational(-9, 2)};
  for (int l = 1; l <= 5; ++l) {
    const std::string name = "l=" + std::to_string(l) + " real critical points: max Bethe residual";
    detail::guarded(c, name, [&] {
      double worst = 0.0;
      std::size_t real_cases = 0;
      for (const auto& a : lams)
        for (const auto& b : lams) {
          bool real = false;
          const double r = sl2_residual(a, b, l, &real);
          if (!real) continue;
          ++real_cases;
          worst = std::max(worst, r);
        }
      c.checks.push_back(bound_check(name, real_cases ? worst : 1.0, tol,
                                     std::to_string(real_cases) + " (lambda_1, lambda_2) pairs with real distinct roots"));
    });
  }
  detail::guarded(c, "lambda=(10,10) l=2 complex pair", [&] {
    bool real = true;
    const double r = sl2_residual(make_rational(10), make_rational(10), 2, &real);
    c.checks.push_back(bool_check("lambda=(10,10) l=2 roots are a complex pair", !real));
    c.checks.push_back(bound_check("lambda=(10,10) l=2 Bethe residual", r, tol));
  });
  c.elapsed_ms = detail::ms_since(t0);
  return c;
}

inline Criterion criterion_recurrences() {
  Criterion c{7, "proof recurrences on random grids", {}, 0};
  const auto t0 = detail::Clock::now();
  detail::guarded(c, "Gamma recurrence", [&] {
    std::mt19937_64 rng(7);
    std::size_t bad = 0;
    std::string first;
    for (int s = 0; s < 100; ++s) {
      const int n = 2 + static_cast<int>(rng() % 4);
      std::vector<double> a, b;
      for (int i = 0; i < n; ++i) {
        a.push_back(0.1 + 4.9 * open_unit_uniform(rng));
        b.push_back(0.1 + 4.9 * open_unit_uniform(rng));
      }
      if (!gamma_recurrence_check(a, b, 1e-10) && bad++ == 0) first = "sample " + std::to_string(s);
    }
    c.checks.push_back(bool_check("Gamma recurrence, 100 random (alpha, beta), n in 2..5, rel 1e-10", bad == 0,
                                  detail::count_note(bad, 100, first)));
  });
  detail::guarded(c, "critical recurrence", [&] {
    std::mt19937_64 rng(8);
    std::size_t bad = 0;
    std::string first;
    for (int s = 0; s < 100; ++s) {
      const int n = 2 + static_cast<int>(rng() % 4);
      std::vector<Rational> coords;
      for (int i = 0; i < n; ++i)
        coords.push_back(make_rational(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 10)));
      const Weight w(coords);
      if (!critical_recurrence_check(w) && bad++ == 0) first = w.to_string();
    }
    c.checks.push_back(bool_check("critical-point recurrence, 100 random rational lambda, n in 2..5, exact", bad == 0,
                                  detail::count_note(bad, 100, first)));
  });
  c.elapsed_ms = detail::ms_since(t0);
  return c;
}

inline Criterion criterion_stationary_phase() {
  Criterion c{8, "stationary phase vs Gamma product as kappa -> 0-", {}, 0};
  const auto t0 = detail::Clock::now();
  const std::vector<Rational> kappas = {make_rational(-1, 10), make_rational(-1, 20), make_rational(-1, 40),
                                        make_rational(-1, 100)};
  for (const Weight& w : {Weight({make_rational(1)}), Weight({make_rational(1), make_rational(1)})}) {
    detail::guarded(c, "lambda=" + w.to_string(), [&] {
      const auto ratios = asymptotics_scan(w, kappas);
      bool monotone = true;
      std::string seq;
      for (std::size_t i = 0; i < ratios.size(); ++i) {
        seq += (i ? ", " : "") + format_double(ratios[i]);
        if (i > 0 && std::abs(ratios[i] - 1) > std::abs(ratios[i - 1] - 1)) monotone = false;
      }
      c.checks.push_back(bound_check("lambda=" + w.to_string() + " |ratio - 1| at kappa=-1/100",
                                     std::abs(ratios.back() - 1), 0.02));
      c.checks.push_back(bool_check("lambda=" + w.to_string() + " |ratio - 1| non-increasing", monotone,
                                    "ratios " + seq));
    });
  }
  c.elapsed_ms = detail::ms_since(t0);
  return c;
}

inline Criterion criterion_consistency() {
  Criterion c{9, "a = omega_first, |b| = |omega_last|, component norm, norm recursion", {}, 0};
  const auto t0 = detail::Clock::now();
  const auto values = detail::norm_grid_values();
  for (int n = 1; n <= 5; ++n) {
    const std::string prefix = "n=" + std::to_string(n) + " ";
    detail::guarded(c, prefix + "consistency", [&] {
      const auto grid = detail::weight_grid(values, n, 20, 2000 + n);
      std::size_t bad_a = 0, bad_b = 0, bad_comp = 0, bad_rec = 0, sign_flips = 0;
      for (const auto& coords : grid) {
        const Weight w(coords);
        const Point<Rational> t = critical_point_closed(w);
        if (a_coeff(w) != omega_first(t)) ++bad_a;
        const Rational b = b_coeff(w), om = omega_last(t);
        if (abs(b) != abs(om)) ++bad_b;
        if (b == -om) ++sign_flips;
        if (!component_norm_check(w)) ++bad_comp;
        if (n >= 2 && !(norm_recursion_check(w) && norm_recursion_check_constructed(w))) ++bad_rec;
      }
      const std::size_t total = grid.size();
      c.checks.push_back(bool_check(prefix + "a_coeff = omega_first(t)", bad_a == 0, detail::count_note(bad_a, total, "")));
      c.checks.push_back(bool_check(prefix + "|b_coeff| = |omega_last(t)|", bad_b == 0,
                                    detail::count_note(bad_b, total, "") + "; b_coeff = -omega_last(t) in " +
                                        std::to_string(sign_flips) + " cases"));
      c.checks.push_back(bool_check(prefix + "B(x_n,x_n) = B(X,X)/(lambda_1+...+lambda_n+n)", bad_comp == 0,
                                    detail::count_note(bad_comp, total, "")));
      if (n >= 2)
        c.checks.push_back(bool_check(prefix + "norm recursion (closed forms and constructed vectors)", bad_rec == 0,
                                      detail::count_note(bad_rec, total, "")));
    });
  }
  c.elapsed_ms = detail::ms_since(t0);
  return c;
}

inline std::vector<std::function<Criterion()>> all_criteria() {
  return {criterion_norm_identity, criterion_spot_values, criterion_chain_integral,
          criterion_selberg,       criterion_uniqueness,  criterion_sl2,
          criterion_recurrences,   criterion_stationary_phase, criterion_consistency};
}

}  // namespace bethenorm::acceptance

#endif  // BETHENORM_ACCEPTANCE_HPP

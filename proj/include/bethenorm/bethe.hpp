#ifndef BETHENORM_BETHE_HPP
#define BETHENORM_BETHE_HPP

// The singular (Bethe) vector of weight lambda + omega - (alpha_1 + ... + alpha_n)
// in V_lambda (x) V_omega, its Shapovalov norm, and the closed-form products
// it is compared against.
//
//   X = x_0 (x) w_n + x_1 (x) w_{n-1} + ... + x_n (x) w_0,  w_m = f_m ... f_1 v_0,
//
// where x_k lies in the Verma weight space of content {n-k+1, ..., n}.
// e_i X = 0 splits along w_m into e_i x_{n-m} + [i = m+1] x_{n-m-1} = 0.

#include <bethenorm/algebra.hpp>
#include <bethenorm/critical.hpp>
#include <bethenorm/linalg.hpp>
#include <bethenorm/phase.hpp>
#include <bethenorm/rational.hpp>

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace bethenorm {

namespace detail {

inline std::vector<Rational> nondegenerate_tails(const Weight& lambda) {
  std::vector<Rational> tails = shifted_tail_sums(lambda);
  for (const Rational& L : tails)
    if (L == 0 || L + 1 == 0)
      throw DegenerateError("degenerate weight " + lambda.to_string() + ": shifted tail sum " + to_string(L));
  return tails;
}

inline void require_positive(const Weight& lambda) {
  for (const Rational& c : lambda.coords())
    if (c <= 0) throw InputError("weight " + lambda.to_string() + " must have all coordinates positive");
}

inline std::vector<int> interval(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace detail

/// (-1)^n prod_k (Lambda_k + 1)^(n-k+1) / Lambda_k^(n-k).
inline Rational a_coeff(const Weight& lambda) {
  const std::vector<Rational> tails = detail::nondegenerate_tails(lambda);
  const int n = lambda.rank();
  Rational a(n % 2 ? -1 : 1);
  for (int k = 1; k <= n; ++k) {
    const Rational& L = tails[k - 1];
    a *= ipow(Rational(L + 1), n - k + 1) / ipow(L, n - k);
  }
  return a;
}

/// (-1)^(n-1) a / (lambda_1 + ... + lambda_n + n) * prod_k (Lambda_k + 1) / Lambda_k,
/// with a = a_coeff(lambda).
inline Rational b_coeff(const Weight& lambda) {
  const std::vector<Rational> tails = detail::nondegenerate_tails(lambda);
  const int n = lambda.rank();
  Rational b = a_coeff(lambda) / (tails[0] + 1);
  if ((n - 1) % 2) b = -b;
  for (const Rational& L : tails) b *= (L + 1) / L;
  return b;
}

/// 1/(t_1 - 1) prod_{i<n} 1/(t_{i+1} - t_i).
inline Rational omega_first(const Point<Rational>& t) {
  if (t.empty()) throw InputError("empty point");
  Rational den = t[0] - 1;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) den *= t[i + 1] - t[i];
  if (den == 0) throw DomainError("omega_first evaluated at a pole");
  return 1 / den;
}

/// 1/t_n prod_{i<n} 1/(t_i - t_{i+1}).
inline Rational omega_last(const Point<Rational>& t) {
  if (t.empty()) throw InputError("empty point");
  Rational den = t.back();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) den *= t[i] - t[i + 1];
  if (den == 0) throw DomainError("omega_last evaluated at a pole");
  return 1 / den;
}

/// prod_k (Lambda_k + 1)^(2(n-k)+3) / Lambda_k^(2(n-k)+1).
inline Rational norm_closed(const Weight& lambda) {
  const std::vector<Rational> tails = detail::nondegenerate_tails(lambda);
  const int n = lambda.rank();
  Rational v(1);
  for (int k = 1; k <= n; ++k) {
    const Rational& L = tails[k - 1];
    v *= ipow(Rational(L + 1), 2 * (n - k) + 3) / ipow(L, 2 * (n - k) + 1);
  }
  return v;
}

/// The constructed singular vector with the data used to build it.
struct BetheVector {
  TensorVector vector;
  std::size_t solution_dimension = 0;
  std::vector<std::size_t> gram_dims;  // basis size of the space of x_k, k = 0..n
};

/// Solves e_i X = 0 over word bases of the component weight spaces and
/// scales the solution so that x_0 = a_coeff(lambda) v_lambda.
inline BetheVector construct_singular_vector(ShapovalovForm& form) {
  const Weight& lambda = form.weight();
  detail::require_positive(lambda);
  detail::nondegenerate_tails(lambda);
  const int n = lambda.rank();

  // spaces[k] holds x_k, content {n-k+1..n}
  std::vector<WeightSpace> spaces;
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (int k = 0; k <= n; ++k) {
    spaces.push_back(make_weight_space(form, detail::interval(n - k + 1, n)));
    offset.push_back(unknowns);
    unknowns += spaces.back().basis.size();
  }

  std::vector<std::vector<Rational>> rows;
  for (int m = 0; m < n; ++m) {
    const int k = n - m;  // x_k sits on w_m
    for (int i = m + 1; i <= n; ++i) {
      std::vector<int> target = detail::interval(m + 1, n);
      target.erase(target.begin() + (i - m - 1));
      const WeightSpace tspace = make_weight_space(form, target);
      for (const Word& u : tspace.basis) {
        std::vector<Rational> row(unknowns, Rational(0));
        const Word fu = u.prepend(i);
        // B(e_i x, u) = B(x, f_i u)
        for (std::size_t b = 0; b < spaces[k].basis.size(); ++b)
          row[offset[k] + b] = form.pair(spaces[k].basis[b], fu);
        if (i == m + 1)
          for (std::size_t b = 0; b < spaces[k - 1].basis.size(); ++b)
            row[offset[k - 1] + b] += form.pair(spaces[k - 1].basis[b], u);
        rows.push_back(std::move(row));
      }
    }
  }

  RationalMatrix system(rows.size(), unknowns, Rational(0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = rows[r][c];
  const std::vector<std::vector<Rational>> kernel = nullspace(system);
  if (kernel.size() != 1)
    throw DegenerateError("solution space dimension " + std::to_string(kernel.size()) + " != 1 for lambda=" +
                          lambda.to_string());
  const std::vector<Rational>& sol = kernel.front();
  if (sol[offset[0]] == 0) throw DegenerateError("singular vector has no v_lambda (x) w_n component");
  const Rational scale = a_coeff(lambda) / sol[offset[0]];

  BetheVector out{TensorVector(lambda), kernel.size(), {}};
  for (int k = 0; k <= n; ++k) {
    out.gram_dims.push_back(spaces[k].basis.size());
    for (std::size_t b = 0; b < spaces[k].basis.size(); ++b)
      out.vector.add(spaces[k].basis[b], LinRepIndex(n - k, n), sol[offset[k] + b] * scale);
  }
  return out;
}

inline TensorVector singular_vector(const Weight& lambda) {
  ShapovalovForm form(lambda);
  return construct_singular_vector(form).vector;
}

/// True iff e_i X = 0 for every i, each V_lambda component zero-tested by
/// Gram pairings.
inline bool is_singular(ShapovalovForm& form, const TensorVector& x) {
  const int n = x.weight().rank();
  for (int i = 1; i <= n; ++i) {
    const TensorVector ex = apply_e(i, x);
    for (int m = 0; m <= n; ++m)
      if (!is_zero(form, ex.component(m))) return false;
  }
  return true;
}

struct NormReport {
  Weight lambda;
  Rational shapovalov_norm;
  Rational hessian_det;
  Rational closed_form;
  bool all_equal = false;
  std::vector<std::size_t> gram_dims;
  std::size_t solution_dimension = 0;
  bool singular = false;             // e_i X = 0 re-verified after construction
  Rational component_norm;           // B(x_n, x_n), the (x) v_0 component
};

/// Hessian determinant of ln Phi_n(lambda, 1) at the closed-form critical point.
inline Rational hessian_det_at_critical(const Weight& lambda) {
  return hess_det(hess_log_phase(chain_exponents(lambda, Rational(1)), critical_point_closed(lambda)));
}

inline NormReport verify_norm_identity(ShapovalovForm& form) {
  const Weight& lambda = form.weight();
  const BetheVector bv = construct_singular_vector(form);
  NormReport rep{lambda, shapovalov_pair(form, bv.vector, bv.vector), hessian_det_at_critical(lambda),
                 norm_closed(lambda), false, bv.gram_dims, bv.solution_dimension, is_singular(form, bv.vector),
                 Rational(0)};
  const VermaVector xn = bv.vector.component(0);
  rep.component_norm = form.pair(xn, xn);
  rep.all_equal = rep.shapovalov_norm == rep.hessian_det && rep.hessian_det == rep.closed_form;
  return rep;
}

inline NormReport verify_norm_identity(const Weight& lambda) {
  ShapovalovForm form(lambda);
  return verify_norm_identity(form);
}

/// B(x_n, x_n) = B(X, X) / (lambda_1 + ... + lambda_n + n), x_n the (x) v_0 component.
inline bool component_norm_check(const NormReport& rep) {
  const Rational denom = shifted_tail_sums(rep.lambda)[0] + 1;
  return rep.component_norm == rep.shapovalov_norm / denom;
}

inline bool component_norm_check(const Weight& lambda) { return component_norm_check(verify_norm_identity(lambda)); }

/// B(X^n(lambda)) = (a^n(lambda)/a^{n-1}(lambda'))^2 B(X^{n-1}(lambda')) + B(x_n^n),
/// with every term taken from its closed form.
inline bool norm_recursion_check(const Weight& lambda) {
  if (lambda.rank() < 2) throw InputError("norm_recursion_check needs rank >= 2");
  const Weight reduced = lambda.drop_first();
  const Rational ratio = a_coeff(lambda) / a_coeff(reduced);
  const Rational norm = norm_closed(lambda);
  const Rational component = norm / (shifted_tail_sums(lambda)[0] + 1);
  return norm == ratio * ratio * norm_closed(reduced) + component;
}

/// The same recursion with constructed vectors: the components of X^n(lambda)
/// on w_1..w_n carry (a^n/a^{n-1}(lambda'))^2 times the norm of X^{n-1}(lambda').
inline bool norm_recursion_check_constructed(const Weight& lambda) {
  if (lambda.rank() < 2) throw InputError("norm_recursion_check needs rank >= 2");
  const int n = lambda.rank();
  ShapovalovForm form(lambda);
  const BetheVector big = construct_singular_vector(form);
  Rational upper(0);
  for (int m = 1; m <= n; ++m) {
    const VermaVector x = big.vector.component(m);
    upper += form.pair(x, x);
  }
  const VermaVector xn = big.vector.component(0);
  const Rational total = upper + form.pair(xn, xn);

  const Weight reduced = lambda.drop_first();
  ShapovalovForm small_form(reduced);
  const BetheVector small = construct_singular_vector(small_form);
  const Rational small_norm = shapovalov_pair(small_form, small.vector, small.vector);
  const Rational ratio = a_coeff(lambda) / a_coeff(reduced);
  return upper == ratio * ratio * small_norm && total == shapovalov_pair(form, big.vector, big.vector);
}

}  // namespace bethenorm

#endif  // BETHENORM_BETHE_HPP

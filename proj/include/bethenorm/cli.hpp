#ifndef BETHENORM_CLI_HPP
#define BETHENORM_CLI_HPP

// Command-line harness: argument parsing, dispatch to the verifications and
// report emission. Exit codes: 0 all checks pass, 1 a check failed,
// 2 invalid input, 3 internal error (degenerate Gram, non-convergence).

#include <bethenorm/acceptance.hpp>
#include <bethenorm/bethe.hpp>
#include <bethenorm/critical.hpp>
#include <bethenorm/integrals.hpp>
#include <bethenorm/phase.hpp>
#include <bethenorm/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bethenorm::cli {

enum class Command { verify_norm, critical, multistart, integral, selberg, sl2_critical, asymptotics, all };

inline const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names = {
      {"verify-norm", Command::verify_norm}, {"critical", Command::critical},
      {"multistart", Command::multistart},   {"integral", Command::integral},
      {"selberg", Command::selberg},         {"sl2-critical", Command::sl2_critical},
      {"asymptotics", Command::asymptotics}, {"all", Command::all}};
  return names;
}

inline std::string command_name(Command c) {
  for (const auto& [name, cmd] : command_names())
    if (cmd == c) return name;
  return "?";
}

struct RunConfig {
  Command command = Command::all;
  std::optional<int> n;
  std::vector<Rational> lambda;
  Rational kappa{1};
  int l = 1;
  int starts = 100;
  std::uint64_t seed = 42;
  double tol = 1e-12;
  std::optional<std::string> json_path;
  std::vector<Rational> kappas;  // asymptotics only
};

/// Bad command line; maps to exit code 2.
struct UsageError : InputError {
  using InputError::InputError;
};

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

inline RunConfig parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"bethenorm: critical points, Bethe vectors and Shapovalov norms for sl(n+1)"};
  std::string command, lambda_text, kappa_text = "1", kappas_text, json;
  int n = 0, l = 1, starts = 100;
  std::uint64_t seed = 42;
  double tol = 1e-12;
  app.add_option("command", command, "verify-norm | critical | multistart | integral | selberg | sl2-critical | "
                                     "asymptotics | all")
      ->required();
  auto* n_opt = app.add_option("--n", n, "rank n");
  app.add_option("--lambda", lambda_text, "comma-separated rationals p/q or integers");
  app.add_option("--kappa", kappa_text, "rational kappa (default 1)");
  app.add_option("--kappas", kappas_text, "asymptotics: comma-separated negative kappas");
  app.add_option("--l", l, "number of sl(2) variables");
  app.add_option("--starts", starts, "multistart: number of starts");
  app.add_option("--seed", seed, "multistart: seed");
  app.add_option("--tol", tol, "Newton tolerance on the gradient sup-norm");
  auto* json_opt = app.add_option("--json", json, "write a JSON report to FILE");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg;
  const auto it = command_names().find(command);
  if (it == command_names().end()) throw UsageError("unknown command '" + command + "'");
  cfg.command = it->second;
  if (!lambda_text.empty()) cfg.lambda = parse_rational_list(lambda_text);
  cfg.kappa = parse_rational(kappa_text);
  if (cfg.kappa == 0) throw UsageError("--kappa must be nonzero");
  if (!kappas_text.empty()) cfg.kappas = parse_rational_list(kappas_text);
  if (n_opt->count()) {
    if (n < 1) throw UsageError("--n must be >= 1");
    cfg.n = n;
  }
  if (l < 1) throw UsageError("--l must be >= 1");
  if (starts < 1) throw UsageError("--starts must be >= 1");
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  cfg.l = l;
  cfg.starts = starts;
  cfg.seed = seed;
  cfg.tol = tol;
  if (json_opt->count()) cfg.json_path = json;

  const bool chain = cfg.command == Command::verify_norm || cfg.command == Command::critical ||
                     cfg.command == Command::multistart || cfg.command == Command::integral ||
                     cfg.command == Command::asymptotics;
  const bool sl2 = cfg.command == Command::selberg || cfg.command == Command::sl2_critical;
  if ((chain || sl2) && cfg.lambda.empty()) throw UsageError("--lambda is required for " + command);
  if (chain && cfg.n && *cfg.n != static_cast<int>(cfg.lambda.size()))
    throw UsageError("--n does not match the number of --lambda entries");
  if (sl2 && cfg.lambda.size() != 2) throw UsageError(command + " takes --lambda lambda_1,lambda_2");
  return cfg;
}

namespace detail {

inline std::string point_string(const Point<Rational>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + to_string(t[i]);
  return s + ")";
}

inline std::string point_string(const Point<double>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + format_double(t[i]);
  return s + ")";
}

inline nlohmann::ordered_json rational_list(const std::vector<Rational>& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

inline double distance(const Point<double>& a, const Point<double>& b) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d2 += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(d2);
}

inline void require_positive(const Weight& w) {
  for (const auto& c : w.coords())
    if (c <= 0) throw InputError("this command needs every lambda_i > 0, got " + w.to_string());
}

inline void run_verify_norm(const RunConfig& cfg, Report& rep, std::ostream& os) {
  const Weight w(cfg.lambda);
  require_positive(w);
  const NormReport r = verify_norm_identity(w);
  os << "shapovalov = " << to_string(r.shapovalov_norm) << "\n"
     << "hessian    = " << to_string(r.hessian_det) << "\n"
     << "closed     = " << to_string(r.closed_form) << "\n";
  std::string dims;
  for (std::size_t d : r.gram_dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
  rep.add(exact_check("shapovalov_norm = hessian_det", r.shapovalov_norm, r.hessian_det, "component basis sizes " + dims));
  rep.add(exact_check("hessian_det = closed_form", r.hessian_det, r.closed_form));
  rep.add(bool_check("solution space is one-dimensional", r.solution_dimension == 1,
                     "dimension " + std::to_string(r.solution_dimension)));
  rep.add(bool_check("e_i X = 0 for all i", r.singular));
  const Point<Rational> t = critical_point_closed(w);
  rep.add(exact_check("a_coeff = omega_first(t)", a_coeff(w), omega_first(t)));
  const Rational b = b_coeff(w), om = omega_last(t);
  rep.add(exact_check("|b_coeff| = |omega_last(t)|", Rational(abs(b)), Rational(abs(om)),
                      "signed: b_coeff=" + to_string(b) + ", omega_last=" + to_string(om)));
  const Rational denom = shifted_tail_sums(w)[0] + 1;
  rep.add(exact_check("B(x_n,x_n) = B(X,X)/(lambda_1+...+lambda_n+n)", r.component_norm,
                      Rational(r.shapovalov_norm / denom), "denominator index read as k=1"));
  if (w.rank() >= 2) {
    rep.add(bool_check("norm recursion (closed forms)", norm_recursion_check(w)));
    rep.add(bool_check("norm recursion (constructed vectors)", norm_recursion_check_constructed(w)));
    for (int k = 1; k < w.rank(); ++k)
      rep.add(bool_check("rank reduction k=" + std::to_string(k), verify_norm_identity(w.truncate(k)).all_equal,
                         "lambda=" + w.truncate(k).to_string()));
  }
}

inline void run_critical(const RunConfig& cfg, Report& rep, std::ostream& os) {
  const Weight w(cfg.lambda);
  const Point<Rational> t = critical_point_closed(w);
  os << "t = " << point_string(t) << "\n";
  const ChainPhase<Rational> p = chain_exponents(w, cfg.kappa);
  if (!in_chain_domain(t)) {
    rep.add(bool_check("closed-form point lies in the ordered simplex", false, point_string(t)));
    return;
  }
  const std::vector<Rational> g = grad_log_phase(p, t);
  bool zero = true;
  for (const auto& x : g) zero = zero && x == 0;
  rep.add(bool_check("grad ln Phi vanishes exactly at t", zero, "t=" + point_string(t)));
  if (w.rank() >= 2) rep.add(bool_check("critical-point recurrences", critical_recurrence_check(w)));
  rep.add(bool_check("phase value at t = closed product",
                     phase_value_factored(w, cfg.kappa, t) == phase_critical_value_closed(w, cfg.kappa),
                     phase_critical_value_closed(w, cfg.kappa).to_string()));
  std::mt19937_64 rng(cfg.seed);
  const Point<double> start = sample_ordered_simplex(rng, w.rank());
  const CriticalReport nr = newton_refine(chain_grad_hess(to_float(p)), start, cfg.tol);
  os << "newton: " << point_string(nr.point) << " residual " << format_double(nr.residual) << " after "
     << nr.iterations << " iterations\n";
  if (!nr.converged)
    throw ConvergenceError("Newton did not reach residual " + format_double(cfg.tol) + " (best " +
                           format_double(nr.residual) + ")");
  rep.add(bound_check("Newton residual", nr.residual, cfg.tol, std::to_string(nr.iterations) + " iterations"));
  rep.add(bound_check("Newton point vs closed form (distance)", distance(nr.point, to_float(t)), 1e-8));
}

inline void run_multistart(const RunConfig& cfg, Report& rep, std::ostream& os) {
  const Weight w(cfg.lambda);
  require_positive(w);
  const Point<Rational> t = critical_point_closed(w);
  const MultistartResult ms =
      multistart_scan(chain_grad_hess(to_float(chain_exponents(w, cfg.kappa))), w.rank(), cfg.starts, cfg.seed, cfg.tol);
  os << "clusters: " << ms.points.size() << ", non-converged starts: " << ms.non_converged << "\n";
  for (std::size_t i = 0; i < ms.points.size(); ++i)
    os << "  " << point_string(ms.points[i]) << " x" << ms.cluster_sizes[i] << "\n";
  if (ms.points.empty()) throw ConvergenceError("no start converged");
  rep.add(bool_check("exactly one critical-point cluster", ms.points.size() == 1,
                     std::to_string(ms.points.size()) + " clusters, " + std::to_string(ms.non_converged) +
                         " non-converged of " + std::to_string(ms.starts)));
  rep.add(bound_check("cluster vs closed form (distance)", distance(ms.points[0], to_float(t)), 1e-8));
  rep.add(bound_check("cluster residual", ms.residuals[0], cfg.tol));
}

inline void run_integral(const RunConfig& cfg, Report& rep, std::ostream& os) {
  const Weight w(cfg.lambda);
  const ChainPhase<double> p = to_float(chain_exponents(w, cfg.kappa));
  for (std::size_t j = 0; j < p.alpha.size(); ++j)
    if (!(p.alpha[j] > -1.0) || !(p.beta[j] > -1.0))
      throw InputError("integral needs exponents -lambda_j/kappa and -1/kappa above -1");
  const double g = chain_integral_gamma(p.alpha, p.beta);
  constexpr double quad_tol = 1e-10;
  const QuadResult q = quad_simplex(chain_integrand(p.alpha, p.beta), p.n, quad_tol);
  os << "gamma = " << format_double(g) << "\nquad  = " << format_double(q.value) << " (est. error "
     << format_double(q.est_error) << ", " << q.evaluations << " evaluations)\n";
  if (!q.converged) throw ConvergenceError("quadrature did not reach its tolerance");
  rep.add(bound_check("Gamma product vs quadrature (relative)", relative_difference(g, q.value), 1e-8,
                      "alpha=-lambda/kappa, beta=-1/kappa"));
  if (p.n >= 2) rep.add(bool_check("Gamma recurrence (rel 1e-10)", gamma_recurrence_check(p.alpha, p.beta)));
}

inline void run_selberg(const RunConfig& cfg, Report& rep, std::ostream& os) {
  const double lam1 = cfg.lambda[0].get_d(), lam2 = cfg.lambda[1].get_d(), kappa = cfg.kappa.get_d();
  const double g = selberg_integral_gamma(lam1, lam2, kappa, cfg.l);
  constexpr double quad_tol = 1e-9;
  const QuadResult q = quad_simplex(selberg_integrand(lam1, lam2, kappa), cfg.l, quad_tol);
  os << "gamma = " << format_double(g) << "\nquad  = " << format_double(q.value) << " (est. error "
     << format_double(q.est_error) << ", " << q.evaluations << " evaluations)\n";
  if (!q.converged) throw ConvergenceError("quadrature did not reach its tolerance");
  rep.add(bound_check("Selberg formula vs quadrature (relative)", relative_difference(g, q.value), 1e-6));
}

inline void run_sl2(const RunConfig& cfg, Report& rep, std::ostream& os) {
  const std::vector<Rational> sigma = sl2_sigma_closed(cfg.lambda[0], cfg.lambda[1], cfg.l);
  std::vector<double> sd;
  for (const auto& s : sigma) sd.push_back(s.get_d());
  const auto roots = sl2_point_from_sigma(sd);
  os << "sigma = " << point_string(sigma) << "\nroots:";
  for (const auto& r : roots) os << " " << format_double(r.real()) << (r.imag() < 0 ? "-" : "+") << format_double(std::abs(r.imag())) << "i";
  os << "\n";
  const SelbergPhase p(cfg.l, cfg.lambda[0].get_d(), cfg.lambda[1].get_d(), cfg.kappa.get_d());
  double res = 0.0;
  for (const auto& g : selberg_grad(p, roots)) res = std::max(res, std::abs(g));
  bool real = true;
  for (const auto& r : roots) real = real && r.imag() == 0.0;
  rep.add(bound_check("sl(2) Bethe residual at the roots", res, 1e-8, real ? "real roots" : "complex roots"));
}

inline void run_asymptotics(const RunConfig& cfg, Report& rep, std::ostream& os) {
  const Weight w(cfg.lambda);
  const std::vector<Rational> kappas =
      cfg.kappas.empty() ? std::vector<Rational>{make_rational(-1, 10), make_rational(-1, 20), make_rational(-1, 40),
                                                 make_rational(-1, 100)}
                         : cfg.kappas;
  const std::vector<double> ratios = asymptotics_scan(w, kappas);
  bool monotone = true;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    os << "kappa=" << to_string(kappas[i]) << " ratio=" << format_double(ratios[i]) << "\n";
    if (i > 0 && std::abs(ratios[i] - 1) > std::abs(ratios[i - 1] - 1)) monotone = false;
  }
  rep.add(bool_check("|ratio - 1| non-increasing", monotone));
  rep.add(bound_check("|ratio - 1| at the smallest |kappa|", std::abs(ratios.back() - 1), 0.02,
                      "kappa=" + to_string(kappas.back())));
}

inline void run_all(Report& rep, std::ostream& os) {
  for (const auto& criterion : acceptance::all_criteria()) {
    const acceptance::Criterion c = criterion();
    os << "criterion " << c.id << " (" << c.title << "): " << (c.pass() ? "PASS" : "FAIL") << "\n";
    for (Check ch : c.checks) {
      ch.name = "criterion " + std::to_string(c.id) + ": " + ch.name;
      rep.add(std::move(ch));
    }
  }
}

}  // namespace detail

/// Executes the configured command; prints a check table to `os` and writes
/// the JSON report when requested.
inline int run(const RunConfig& cfg, std::ostream& os) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = command_name(cfg.command);
  rep.inputs["n"] = cfg.n ? *cfg.n : static_cast<int>(cfg.lambda.size());
  rep.inputs["lambda"] = detail::rational_list(cfg.lambda);
  rep.inputs["kappa"] = to_string(cfg.kappa);
  rep.inputs["l"] = cfg.l;
  rep.inputs["starts"] = cfg.starts;
  rep.inputs["seed"] = cfg.seed;
  rep.inputs["tol"] = format_double(cfg.tol);
  if (!cfg.kappas.empty()) rep.inputs["kappas"] = detail::rational_list(cfg.kappas);

  int code = kExitPass;
  try {
    switch (cfg.command) {
      case Command::verify_norm: detail::run_verify_norm(cfg, rep, os); break;
      case Command::critical: detail::run_critical(cfg, rep, os); break;
      case Command::multistart: detail::run_multistart(cfg, rep, os); break;
      case Command::integral: detail::run_integral(cfg, rep, os); break;
      case Command::selberg: detail::run_selberg(cfg, rep, os); break;
      case Command::sl2_critical: detail::run_sl2(cfg, rep, os); break;
      case Command::asymptotics: detail::run_asymptotics(cfg, rep, os); break;
      case Command::all: detail::run_all(rep, os); break;
    }
    code = rep.any_error() ? kExitInternal : rep.all_pass() ? kExitPass : kExitFail;
  } catch (const InputError& e) {
    rep.add(error_check("invalid input", e.what()));
    code = kExitUsage;
  } catch (const DomainError& e) {
    rep.add(error_check("invalid input", e.what()));
    code = kExitUsage;
  } catch (const std::exception& e) {
    rep.add(error_check("internal error", e.what()));
    code = kExitInternal;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.print_table(os);
  if (cfg.json_path) {
    std::ofstream f(*cfg.json_path);
    if (!f) {
      os << "cannot write " << *cfg.json_path << "\n";
      return kExitInternal;
    }
    f << rep.to_json().dump(2) << "\n";
  }
  return code;
}

/// parse_args + run with usage errors mapped to exit code 2.
inline int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(argv);
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(cfg, out);
}

}  // namespace bethenorm::cli

#endif  // BETHENORM_CLI_HPP

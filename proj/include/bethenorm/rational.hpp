#ifndef BETHENORM_RATIONAL_HPP
#define BETHENORM_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bethenorm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Malformed user input (bad rational literal, wrong vector length, ...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A point or parameter outside the open domain of a formula.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Non-generic weight: a zero denominator or a singular Gram matrix.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An iterative method failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p", "p/q" with decimal integers; q must be nonzero.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || (slash != std::string_view::npos && (den.front() == '-' || den.front() == '+')))
    throw InputError("malformed rational: '" + std::string(text) + "'");
  Integer p(strip_plus(num), 10);
  Integer q(strip_plus(den), 10);
  if (q == 0) throw InputError("zero denominator in rational: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) throw InputError("empty rational list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Canonical "p/q" rendering (integers render without the denominator).
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Exact integer power.
inline Rational ipow(const Rational& base, long e) {
  Rational acc(1);
  Rational b = base;
  if (e < 0) {
    if (b == 0) throw DegenerateError("zero raised to a negative power");
    b = 1 / b;
    e = -e;
  }
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace bethenorm

#endif  // BETHENORM_RATIONAL_HPP

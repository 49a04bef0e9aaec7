#ifndef BETHENORM_FACTORED_HPP
#define BETHENORM_FACTORED_HPP

#include <bethenorm/rational.hpp>

#include <cmath>
#include <map>
#include <optional>
#include <string>

namespace bethenorm {

/// Exact carrier for products of rational powers of rationals,
/// sign * prod p^e with p prime and e a nonzero Rational.
/// The representation is canonical, so equality is structural.
class FactoredValue {
 public:
  FactoredValue() = default;

  /// base^exponent for a positive rational base.
  static FactoredValue power(const Rational& base, const Rational& exponent) {
    if (base <= 0) throw DomainError("FactoredValue::power needs a positive base, got " + bethenorm::to_string(base));
    FactoredValue out;
    if (exponent == 0) return out;
    out.accumulate(base.get_num(), exponent);
    out.accumulate(base.get_den(), Rational(-exponent));
    return out;
  }

  static FactoredValue of(const Rational& value) {
    if (value == 0) throw DomainError("FactoredValue cannot represent zero");
    FactoredValue out = power(value < 0 ? Rational(-value) : value, Rational(1));
    out.negative_ = value < 0;
    return out;
  }

  FactoredValue& operator*=(const FactoredValue& other) {
    for (const auto& [p, e] : other.exponents_) add_exponent(p, e);
    negative_ = negative_ != other.negative_;
    return *this;
  }

  friend FactoredValue operator*(FactoredValue a, const FactoredValue& b) { return a *= b; }

  FactoredValue inverse() const {
    FactoredValue out = *this;
    for (auto& [p, e] : out.exponents_) e = -e;
    return out;
  }

  friend FactoredValue operator/(FactoredValue a, const FactoredValue& b) { return a *= b.inverse(); }

  /// value^e for a positive value.
  FactoredValue pow(const Rational& e) const {
    if (negative_) throw DomainError("rational power of a negative FactoredValue");
    FactoredValue out;
    if (e == 0) return out;
    for (const auto& [p, x] : exponents_) out.exponents_.emplace(p, Rational(x * e));
    return out;
  }

  friend bool operator==(const FactoredValue&, const FactoredValue&) = default;

  bool negative() const { return negative_; }
  const std::map<Integer, Rational>& exponents() const { return exponents_; }

  /// ln |value|.
  double log_abs() const {
    double acc = 0.0;
    for (const auto& [p, e] : exponents_) acc += e.get_d() * std::log(p.get_d());
    return acc;
  }

  /// Exact value when every exponent is an integer.
  std::optional<Rational> to_rational() const {
    Rational acc(negative_ ? -1 : 1);
    for (const auto& [p, e] : exponents_) {
      if (e.get_den() != 1) return std::nullopt;
      acc *= ipow(Rational(p), e.get_num().get_si());
    }
    return acc;
  }

  /// "2^10 * 3^-3"; "1" for the empty product.
  std::string to_string() const {
    std::string out = negative_ ? "-" : "";
    if (exponents_.empty()) return out + "1";
    bool first = true;
    for (const auto& [p, e] : exponents_) {
      if (!first) out += " * ";
      first = false;
      out += p.get_str() + "^" + (e.get_den() == 1 ? e.get_str() : "(" + e.get_str() + ")");
    }
    return out;
  }

 private:
  void add_exponent(const Integer& p, const Rational& e) {
    auto [it, inserted] = exponents_.try_emplace(p, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) exponents_.erase(it);
    }
  }

  // Trial division; the bases in this library are small.
  void accumulate(Integer n, const Rational& e) {
    for (Integer d = 2; d * d <= n; ++d) {
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
        add_exponent(d, e);
        n /= d;
      }
    }
    if (n > 1) add_exponent(n, e);
  }

  bool negative_ = false;
  std::map<Integer, Rational> exponents_;
};

}  // namespace bethenorm

#endif  // BETHENORM_FACTORED_HPP

#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace lrq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact sparse Laurent polynomial in one variable t. Coefficients are
/// exact rationals so that inner-product intermediates (1/z(mu) factors)
/// stay exact; public results are asserted integral where the theory
/// guarantees it (see require_integral).
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(int exp, Rat coeff);

  /// 1 + t^step + t^{2 step} + ... + t^{(count-1) step}
  static LaurentPoly geometric(int step, int count);

  const std::map<int, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;  // throws on zero
  int max_degree() const;  // throws on zero
  Rat coeff(int exp) const;

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator*(const Rat& scalar) const;

  bool operator==(const LaurentPoly&) const = default;

  /// t -> t^{-1}: negates every exponent.
  LaurentPoly bar() const;

  /// t -> t^2: doubles every exponent.
  LaurentPoly substitute_t_squared() const;

  /// Multiplies by t^shift.
  LaurentPoly shifted(int shift) const;

  Rat eval_at_one() const;

  bool is_integral() const;

  /// Throws std::logic_error with the given context if any coefficient
  /// is non-integral. Returns *this for chaining.
  const LaurentPoly& require_integral(const char* context) const;

  /// Symmetric unimodal: bar-invariant, support in one parity class
  /// from -l to l, and coefficients weakly increasing toward exponent 0.
  bool is_symmetric_unimodal() const;

  /// Canonical text: ascending exponents, explicit '*', e.g.
  /// "2 + 5*t + 7*t^2" or "t^-4 + t^-2 + 2 + t^2 + t^4". Zero is "0".
  std::string to_string() const;

  /// JSON object {exponent (string): coefficient (decimal string)}.
  /// Requires integral coefficients; exact round-trip with from_json.
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void insert(int exp, const Rat& coeff);

  std::map<int, Rat> terms_;  // no zero coefficients stored
};

/// Balanced (bar-invariant) Gaussian binomial, symmetric about the
/// origin; at t=1 equals the ordinary binomial C(x, y). Requires
/// 0 <= y <= x.
LaurentPoly quantum_binomial(int x, int y);

/// One-sided Gaussian binomial with nonnegative exponents,
/// prod_{i=0}^{y-1} (1-t^{x-i}) / (1-t^{i+1}) expanded exactly.
LaurentPoly gaussian_binomial(int x, int y);

}  // namespace lrq

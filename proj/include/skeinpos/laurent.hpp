#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include <json.hpp>

namespace skeinpos {

using Integer = boost::multiprecision::cpp_int;

/**
 * Exact element of Z[q, q^-1].
 *
 * Terms are kept in a sorted map from exponent to a nonzero arbitrary
 * precision coefficient, so two values compare equal iff their term maps do.
 */
class LaurentPoly {
public:
  using TermMap = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& constant);

  static LaurentPoly monomial(const Integer& coeff, int exponent);
  /// q^exponent
  static LaurentPoly q(int exponent = 1);
  static LaurentPoly from_terms(const TermMap& terms);

  const TermMap& terms() const { return terms_; }
  Integer coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  /// Adds coeff * q^exponent in place.
  void add_term(const Integer& coeff, int exponent);

  /// Multiplies by q^shift.
  LaurentPoly shifted(int shift) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Human readable form, exponents ascending, e.g. "-q^-2 - q^2".
  std::string to_string() const;

private:
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

/// True iff every coefficient is >= 0, i.e. membership in Z_+[q, q^-1].
bool is_positive(const LaurentPoly& a);

/// Specialization at q = 1.
Integer eval_q1(const LaurentPoly& a);

/// Value of a trivial loop, -q^2 - q^-2.
const LaurentPoly& trivial_loop_value();

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// JSON: {"<exponent>": <coefficient>, ...} with exponents ascending.
// Coefficients that do not fit in 64 bits are written as decimal strings.
nlohmann::ordered_json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::ordered_json integer_to_json(const Integer& value);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace skeinpos

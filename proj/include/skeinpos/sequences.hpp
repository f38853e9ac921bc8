#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeinpos/laurent.hpp"

namespace skeinpos {

/// Polynomial in t with Laurent coefficients; coeffs()[i] multiplies t^i.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<LaurentPoly> coeffs);
  UniPoly(const LaurentPoly& constant);  // NOLINT(google-explicit-constructor)

  static UniPoly t();
  static UniPoly monomial(const LaurentPoly& coeff, int degree);

  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  LaurentPoly coeff(int degree) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const LaurentPoly& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<LaurentPoly> coeffs_;
};

/// T_0 = 1, T_1 = t, T_n = t T_{n-1} - T_{n-2}.
UniPoly chebyshev(int n);
/// t^n
UniPoly power(int n);

/**
 * A normalized sequence of polynomials: the n-th entry is monic of degree n
 * and the 0-th entry is 1.
 *
 * Custom sequences hold an explicit table. Entries beyond the table, or left
 * empty, fall back to the optional base sequence; without a base they are an
 * error to access.
 */
class SequenceSpec {
public:
  enum class Kind { Chebyshev, Power, Custom };

  static SequenceSpec chebyshev();
  static SequenceSpec power();
  /// Throws std::invalid_argument if any supplied entry is not normalized.
  static SequenceSpec custom(std::vector<std::optional<UniPoly>> table,
                             std::optional<Kind> base = std::nullopt);

  Kind kind() const { return kind_; }
  std::optional<Kind> base() const { return base_; }
  const std::vector<std::optional<UniPoly>>& table() const { return table_; }

  /// Throws std::out_of_range when a custom entry is unavailable.
  UniPoly at(int n) const;
  UniPoly operator[](int n) const { return at(n); }
  /// Highest index available, or nullopt when unbounded.
  std::optional<int> max_index() const;

  std::string name() const;

private:
  explicit SequenceSpec(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::vector<std::optional<UniPoly>> table_;
  std::optional<Kind> base_;
};

/// Coefficients c_k with p = sum c_k seq[k]; length deg(p) + 1.
std::vector<LaurentPoly> to_basis(const UniPoly& p, const SequenceSpec& seq);
/// Inverse of to_basis.
UniPoly from_basis(const std::vector<LaurentPoly>& coeffs, const SequenceSpec& seq);
/// seq[m] * seq[n] expanded in seq.
std::vector<LaurentPoly> product_in_basis(const SequenceSpec& seq, int m, int n);

/*
 * JSON forms.
 *
 * A polynomial is an array of coefficients in ascending degree; each
 * coefficient is an integer or a Laurent polynomial object.
 *
 * A sequence file is either such an array of polynomials, or an object
 *   {"polynomials": [...], "base": "chebyshev" | "power"}
 * where null entries and indices past the end come from the base.
 */
nlohmann::ordered_json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const SequenceSpec& seq);
SequenceSpec sequence_from_json(const nlohmann::json& j);
/// "chebyshev", "power", or a path to a JSON sequence file.
SequenceSpec parse_sequence(const std::string& selector);

}  // namespace skeinpos

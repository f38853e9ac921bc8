#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "skeinpos/laurent.hpp"
#include "skeinpos/sequences.hpp"
#include "skeinpos/skein.hpp"

namespace skeinpos {

/**
 * Formal basis symbols appearing when P_1(z') P_n(z) is expanded on a
 * surface containing two simple closed curves z, z' meeting once.
 * z_{1,k} is z' with its passage through the annulus around z replaced by
 * theta_k. These curves are pairwise non-isotopic and nontrivial, which is
 * taken as given.
 */
struct Eq6Symbol {
  enum class Kind { Unit, PnZ, P1ZPrime, P1ZPos, P1ZNeg };
  Kind kind = Kind::Unit;
  int k = 0;  // >= 1 for P1ZPos / P1ZNeg

  static Eq6Symbol unit() { return {Kind::Unit, 0}; }
  static Eq6Symbol pn_z() { return {Kind::PnZ, 0}; }
  static Eq6Symbol p1_zprime() { return {Kind::P1ZPrime, 0}; }
  static Eq6Symbol p1_zpos(int k);
  static Eq6Symbol p1_zneg(int k);

  friend auto operator<=>(const Eq6Symbol&, const Eq6Symbol&) = default;
};

std::string describe(const Eq6Symbol& s);

using Eq6Expansion = std::map<Eq6Symbol, LaurentPoly>;

/**
 * Coefficients of P_1(z') P_n(z) with P_1 = t + a and P_n = sum c_k T_k:
 *
 *   a P_n(z) + c_0 P_1(z') + sum_k c_k (q^k P_1(z_{1,k}) + q^-k P_1(z_{1,-k})) + d
 *   d = -a c_0 - sum_{k>=1} a c_k (q^k + q^-k)
 *
 * Zero coefficients are omitted. Requires c of length n + 1 >= 2 with
 * c_n = 1; throws std::invalid_argument otherwise.
 */
Eq6Expansion eq6_expand(const LaurentPoly& a, const std::vector<LaurentPoly>& c);

struct Constraint {
  std::string label;
  LaurentPoly value;
  bool satisfied = false;  // value lies in Z_+[q, q^-1] (Z_+ after specialization)
};

/// Cross-check of x^k y_n = q^-kn z_{k,n} (mod I) against the state sum.
struct DiagramCheck {
  int k = 0;
  int n = 0;
  SkeinVector engine;
  SkeinVector expected;
  bool agrees = false;
};

enum class Conclusion { Consistent, Contradiction };

/**
 * Necessary conditions that positivity imposes on a sequence. A consistent
 * report only says none of these conditions is violated; it does not claim
 * the sequence is positive.
 */
struct ConstraintReport {
  std::string kind;  // "minimality", "arc", "d1"
  std::string sequence;
  int n = 0;
  LaurentPoly a;
  std::vector<LaurentPoly> c;
  std::vector<std::pair<std::string, LaurentPoly>> coefficients;
  std::vector<Constraint> constraints;
  std::vector<DiagramCheck> diagram_checks;
  Conclusion conclusion = Conclusion::Consistent;
  std::vector<std::string> derived;
  bool specialized_q1 = false;

  bool passed() const;
  /// First violated constraint, or nullptr.
  const Constraint* first_violation() const;
};

/// Report built directly from a and the Chebyshev coordinates c of P_n.
ConstraintReport eq6_constraints(const LaurentPoly& a, const std::vector<LaurentPoly>& c);

/// Loop-sequence conditions: a from seq[1] = t + a, c from seq[n] in the Chebyshev basis.
ConstraintReport minimality_constraints(const SequenceSpec& seq, int n);

/**
 * Arc-sequence conditions on D_n: Q_n(x) y_n = sum c_k q^-kn z_{k,n} mod the
 * ideal of gamma_0..gamma_{n-1}, with c the power-basis coordinates of Q_n.
 * When verify is set, each q^-kn z_{k,n} term for 1 <= k <= k_max is
 * recomputed by the state sum. Requires 1 <= k_max <= n.
 */
ConstraintReport q_constraints(const SequenceSpec& seq, int n, int k_max, bool verify = true,
                               const ResolveOptions& options = {});

/// Q_1(x) Q_1(y) = a Q_1(x) + a Q_1(y) - a^2 mod the boundary ideal of D_1, with xy from the state sum.
ConstraintReport d1_constraints(const SequenceSpec& seq, const ResolveOptions& options = {});

/// Re-evaluates a report over Z at q = 1.
ConstraintReport specialize_q1(const ConstraintReport& r);

struct AuditRow {
  int m = 0;
  int n = 0;
  bool all_positive = true;
  std::vector<std::pair<int, LaurentPoly>> negatives;  // basis index, coefficient
};

/// Structure constants seq[m] seq[n] for 0 <= m, n <= max_n on the annulus,
/// judged in Z_+[q, q^-1], or in Z_+ after setting q = 1 when at_q1 is set.
std::vector<AuditRow> structure_constant_audit(const SequenceSpec& seq, int max_n, bool at_q1 = false);

std::string to_string(Conclusion c);
nlohmann::ordered_json to_json(const ConstraintReport& r);
nlohmann::ordered_json to_json(const std::vector<AuditRow>& rows);

}  // namespace skeinpos

#include "skeinpos/positivity.hpp"

#include <stdexcept>

namespace skeinpos {

Eq6Symbol Eq6Symbol::p1_zpos(int k) {
  if (k < 1) throw std::invalid_argument("winding symbols need k >= 1");
  return {Kind::P1ZPos, k};
}

Eq6Symbol Eq6Symbol::p1_zneg(int k) {
  if (k < 1) throw std::invalid_argument("winding symbols need k >= 1");
  return {Kind::P1ZNeg, k};
}

std::string describe(const Eq6Symbol& s) {
  switch (s.kind) {
    case Eq6Symbol::Kind::Unit: return "1";
    case Eq6Symbol::Kind::PnZ: return "P_n(z)";
    case Eq6Symbol::Kind::P1ZPrime: return "P_1(z')";
    case Eq6Symbol::Kind::P1ZPos: return "P_1(z_{1," + std::to_string(s.k) + "})";
    case Eq6Symbol::Kind::P1ZNeg: return "P_1(z_{1,-" + std::to_string(s.k) + "})";
  }
  return "?";
}

Eq6Expansion eq6_expand(const LaurentPoly& a, const std::vector<LaurentPoly>& c) {
  if (c.size() < 2) throw std::invalid_argument("eq6_expand needs n >= 1 (at least two coefficients)");
  if (c.back() != LaurentPoly(1)) throw std::invalid_argument("eq6_expand needs a monic P_n (c_n = 1)");
  const int n = static_cast<int>(c.size()) - 1;
  Eq6Expansion out;
  auto put = [&out](const Eq6Symbol& s, const LaurentPoly& v) {
    if (!v.is_zero()) out[s] = v;
  };
  put(Eq6Symbol::pn_z(), a);
  put(Eq6Symbol::p1_zprime(), c[0]);
  LaurentPoly d = -(a * c[0]);
  for (int k = 1; k <= n; ++k) {
    const LaurentPoly& ck = c[static_cast<std::size_t>(k)];
    put(Eq6Symbol::p1_zpos(k), ck.shifted(k));
    put(Eq6Symbol::p1_zneg(k), ck.shifted(-k));
    d -= a * ck * (LaurentPoly::q(k) + LaurentPoly::q(-k));
  }
  put(Eq6Symbol::unit(), d);
  return out;
}

bool ConstraintReport::passed() const {
  if (conclusion != Conclusion::Consistent) return false;
  for (const auto& check : diagram_checks)
    if (!check.agrees) return false;
  return true;
}

const Constraint* ConstraintReport::first_violation() const {
  for (const auto& c : constraints)
    if (!c.satisfied) return &c;
  return nullptr;
}

namespace {

Constraint require_positive(std::string label, LaurentPoly value) {
  const bool ok = is_positive(value);
  return {std::move(label), std::move(value), ok};
}

void conclude(ConstraintReport& r) {
  r.conclusion = r.first_violation() == nullptr ? Conclusion::Consistent : Conclusion::Contradiction;
}

void fill_eq6(ConstraintReport& r) {
  const Eq6Expansion expansion = eq6_expand(r.a, r.c);
  for (const auto& [symbol, value] : expansion) {
    if (symbol.kind == Eq6Symbol::Kind::Unit) continue;
    r.coefficients.emplace_back(describe(symbol), value);
    r.constraints.push_back(require_positive("coefficient of " + describe(symbol), value));
  }
  auto it = expansion.find(Eq6Symbol::unit());
  const LaurentPoly d = it == expansion.end() ? LaurentPoly() : it->second;
  r.coefficients.emplace_back("1", d);
  r.constraints.push_back(require_positive("d (constant term)", d));
  // Given a, c_k in R_+, -d = a (c_0 + sum c_k (q^k + q^-k)) is in R_+ as well.
  r.constraints.push_back(require_positive("-d", -d));
  conclude(r);
  if (r.conclusion == Conclusion::Consistent) {
    r.derived = {"d = 0", "a = 0, so P_1(t) = t", "c_k in R_+ for every k: P_n is an R_+-combination of T_0..T_n"};
  }
}

}  // namespace

ConstraintReport eq6_constraints(const LaurentPoly& a, const std::vector<LaurentPoly>& c) {
  ConstraintReport r;
  r.kind = "minimality";
  r.sequence = "explicit";
  r.n = static_cast<int>(c.size()) - 1;
  r.a = a;
  r.c = c;
  fill_eq6(r);
  return r;
}

ConstraintReport minimality_constraints(const SequenceSpec& seq, int n) {
  if (n < 1) throw std::invalid_argument("minimality_constraints needs n >= 1");
  const UniPoly p1 = seq.at(1);
  ConstraintReport r;
  r.kind = "minimality";
  r.sequence = seq.name();
  r.n = n;
  r.a = p1.coeff(0);
  r.c = to_basis(seq.at(n), SequenceSpec::chebyshev());
  fill_eq6(r);
  return r;
}

ConstraintReport q_constraints(const SequenceSpec& seq, int n, int k_max, bool verify, const ResolveOptions& options) {
  if (n < 1) throw std::invalid_argument("q_constraints needs n >= 1");
  if (k_max < 1 || k_max > n) throw std::invalid_argument("q_constraints needs 1 <= k_max <= n");
  ConstraintReport r;
  r.kind = "arc";
  r.sequence = seq.name();
  r.n = n;
  r.c = to_basis(seq.at(n), SequenceSpec::power());
  r.a = seq.at(1).coeff(0);
  for (int k = 0; k <= k_max; ++k) {
    const LaurentPoly& ck = r.c[static_cast<std::size_t>(k)];
    r.coefficients.emplace_back("z_{" + std::to_string(k) + "," + std::to_string(n) + "}", ck.shifted(-k * n));
    r.constraints.push_back(require_positive("c_" + std::to_string(k), ck));
  }
  if (verify) {
    const IdealSpec ideal = IdealSpec::gammas(n);
    for (int k = 1; k <= k_max; ++k) {
      DiagramCheck check;
      check.k = k;
      check.n = n;
      check.engine = resolve_all_mod(build_xk_yn(k, n), ideal, options);
      auto target = normal_form(build_zkn(k, n));
      if (target) check.expected = SkeinVector(target->basis, target->coeff.shifted(-k * n));
      check.agrees = check.engine == check.expected;
      r.diagram_checks.push_back(std::move(check));
    }
  }
  conclude(r);
  if (r.conclusion == Conclusion::Consistent)
    r.derived = {"c_k in R_+ for k <= " + std::to_string(k_max) + ": Q_n is an R_+-combination of 1, t, ..., t^n"};
  return r;
}

ConstraintReport d1_constraints(const SequenceSpec& seq, const ResolveOptions& options) {
  const Diagram xy = build_d1_xy();
  const UniPoly q1 = seq.at(1);
  ConstraintReport r;
  r.kind = "d1";
  r.sequence = seq.name();
  r.n = 1;
  r.a = q1.coeff(0);
  r.c = to_basis(q1, SequenceSpec::power());

  DiagramCheck check;
  check.k = 1;
  check.n = 1;
  check.engine = resolve_all_mod(xy, IdealSpec::boundary(xy.surface), options);
  check.agrees = check.engine.is_zero();
  r.diagram_checks.push_back(check);

  // (x + a)(y + a) = xy + a Q_1(x) + a Q_1(y) - a^2, and xy vanishes mod the boundary ideal.
  const LaurentPoly a2 = r.a * r.a;
  r.coefficients = {{"Q_1(x)", r.a}, {"Q_1(y)", r.a}, {"1", -a2}};
  r.constraints.push_back(require_positive("coefficient of Q_1(x)", r.a));
  r.constraints.push_back(require_positive("coefficient of Q_1(y)", r.a));
  r.constraints.push_back(require_positive("constant term -a^2", -a2));
  conclude(r);
  if (r.conclusion == Conclusion::Consistent) r.derived = {"a^2 and -a^2 in R_+, so a = 0 and Q_1(t) = t"};
  return r;
}

ConstraintReport specialize_q1(const ConstraintReport& r) {
  ConstraintReport s = r;
  s.specialized_q1 = true;
  s.a = LaurentPoly(eval_q1(r.a));
  for (auto& x : s.c) x = LaurentPoly(eval_q1(x));
  for (auto& [label, value] : s.coefficients) value = LaurentPoly(eval_q1(value));
  for (auto& c : s.constraints) {
    c.value = LaurentPoly(eval_q1(c.value));
    c.satisfied = is_positive(c.value);
  }
  for (auto& check : s.diagram_checks) {
    check.engine = specialize_q1(check.engine);
    check.expected = specialize_q1(check.expected);
  }
  conclude(s);
  if (s.conclusion != r.conclusion) s.derived.clear();
  return s;
}

std::vector<AuditRow> structure_constant_audit(const SequenceSpec& seq, int max_n, bool at_q1) {
  if (max_n < 1) throw std::invalid_argument("audit needs max_n >= 1");
  std::vector<AuditRow> rows;
  for (int m = 0; m <= max_n; ++m) {
    for (int n = 0; n <= max_n; ++n) {
      AuditRow row{m, n, true, {}};
      const auto coeffs = product_in_basis(seq, m, n);
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const LaurentPoly value = at_q1 ? LaurentPoly(eval_q1(coeffs[k])) : coeffs[k];
        if (is_positive(value)) continue;
        row.all_positive = false;
        row.negatives.emplace_back(static_cast<int>(k), value);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string to_string(Conclusion c) { return c == Conclusion::Consistent ? "consistent" : "contradiction"; }

nlohmann::ordered_json to_json(const ConstraintReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = r.kind;
  j["sequence"] = r.sequence;
  j["n"] = r.n;
  j["q1"] = r.specialized_q1;
  j["a"] = to_json(r.a);
  j["c"] = nlohmann::ordered_json::array();
  for (const auto& x : r.c) j["c"].push_back(to_json(x));
  j["coefficients"] = nlohmann::ordered_json::array();
  for (const auto& [label, value] : r.coefficients) j["coefficients"].push_back({{"symbol", label}, {"value", to_json(value)}});
  j["constraints"] = nlohmann::ordered_json::array();
  for (const auto& c : r.constraints)
    j["constraints"].push_back(
        {{"label", c.label}, {"value", to_json(c.value)}, {"required", "R_+"}, {"satisfied", c.satisfied}});
  j["diagram_checks"] = nlohmann::ordered_json::array();
  for (const auto& d : r.diagram_checks)
    j["diagram_checks"].push_back({{"k", d.k},
                                   {"n", d.n},
                                   {"engine", to_json(d.engine)},
                                   {"expected", to_json(d.expected)},
                                   {"agrees", d.agrees}});
  j["conclusion"] = to_string(r.conclusion);
  j["derived"] = r.derived;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<AuditRow>& rows) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json negatives = nlohmann::ordered_json::array();
    for (const auto& [k, v] : row.negatives) negatives.push_back({{"index", k}, {"coeff", to_json(v)}});
    j.push_back({{"m", row.m}, {"n", row.n}, {"all_positive", row.all_positive}, {"negatives", negatives}});
  }
  return j;
}

}  // namespace skeinpos

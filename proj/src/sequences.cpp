#include "skeinpos/sequences.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace skeinpos {

UniPoly::UniPoly(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const LaurentPoly& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

UniPoly UniPoly::t() { return monomial(1, 1); }

UniPoly UniPoly::monomial(const LaurentPoly& coeff, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<LaurentPoly> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool UniPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == LaurentPoly(1); }

LaurentPoly UniPoly::coeff(int degree) const {
  if (degree < 0 || degree > this->degree()) return {};
  return coeffs_[static_cast<std::size_t>(degree)];
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const LaurentPoly& s, const UniPoly& p) {
  std::vector<LaurentPoly> c = p.coeffs_;
  for (auto& x : c) x = s * x;
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const LaurentPoly& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative_monomial = c.is_monomial() && c.terms().begin()->second < 0;
    if (!first) os << (negative_monomial ? " - " : " + ");
    else if (negative_monomial) os << '-';
    first = false;
    if (negative_monomial) cs = (-c).to_string();
    if (d == 0) {
      os << (c.is_monomial() ? cs : "(" + cs + ")");
      continue;
    }
    if (cs != "1") os << (c.is_monomial() ? cs : "(" + cs + ")") << "·";
    os << var;
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

UniPoly chebyshev(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev: negative index");
  if (n == 0) return UniPoly(LaurentPoly(1));
  if (n == 1) return UniPoly::t();
  // T_2 = t^2 - 2 comes from the recursion with the type-1 seed 2 in place of T_0.
  UniPoly prev = UniPoly(LaurentPoly(2));
  UniPoly cur = UniPoly::t();
  for (int k = 2; k <= n; ++k) {
    UniPoly next = UniPoly::t() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly power(int n) {
  if (n < 0) throw std::invalid_argument("power: negative index");
  return UniPoly::monomial(1, n);
}

namespace {

UniPoly builtin(SequenceSpec::Kind kind, int n) {
  switch (kind) {
    case SequenceSpec::Kind::Chebyshev: return chebyshev(n);
    case SequenceSpec::Kind::Power: return power(n);
    case SequenceSpec::Kind::Custom: break;
  }
  throw std::logic_error("custom sequence has no builtin entries");
}

const char* kind_name(SequenceSpec::Kind kind) {
  switch (kind) {
    case SequenceSpec::Kind::Chebyshev: return "chebyshev";
    case SequenceSpec::Kind::Power: return "power";
    case SequenceSpec::Kind::Custom: return "custom";
  }
  return "?";
}

SequenceSpec::Kind kind_from_name(const std::string& s) {
  if (s == "chebyshev") return SequenceSpec::Kind::Chebyshev;
  if (s == "power") return SequenceSpec::Kind::Power;
  throw std::invalid_argument("unknown base sequence '" + s + "' (expected chebyshev or power)");
}

}  // namespace

SequenceSpec SequenceSpec::chebyshev() { return SequenceSpec(Kind::Chebyshev); }
SequenceSpec SequenceSpec::power() { return SequenceSpec(Kind::Power); }

SequenceSpec SequenceSpec::custom(std::vector<std::optional<UniPoly>> table, std::optional<Kind> base) {
  if (base == Kind::Custom) throw std::invalid_argument("custom sequence base must be builtin");
  for (std::size_t n = 0; n < table.size(); ++n) {
    if (!table[n]) {
      if (!base) throw std::invalid_argument("custom sequence entry " + std::to_string(n) + " missing and no base");
      continue;
    }
    const UniPoly& p = *table[n];
    if (p.degree() != static_cast<int>(n) || !p.is_monic())
      throw std::invalid_argument("custom sequence entry " + std::to_string(n) + " = " + p.to_string() +
                                  " is not monic of degree " + std::to_string(n));
  }
  // Monic of degree 0 already pins entry 0 to the constant 1.
  SequenceSpec s(Kind::Custom);
  s.table_ = std::move(table);
  s.base_ = base;
  return s;
}

UniPoly SequenceSpec::at(int n) const {
  if (n < 0) throw std::out_of_range("sequence index must be nonnegative");
  if (kind_ != Kind::Custom) return builtin(kind_, n);
  auto idx = static_cast<std::size_t>(n);
  if (idx < table_.size() && table_[idx]) return *table_[idx];
  if (base_) return builtin(*base_, n);
  throw std::out_of_range("custom sequence has no entry " + std::to_string(n));
}

std::optional<int> SequenceSpec::max_index() const {
  if (kind_ != Kind::Custom || base_) return std::nullopt;
  return static_cast<int>(table_.size()) - 1;
}

std::string SequenceSpec::name() const {
  if (kind_ != Kind::Custom) return kind_name(kind_);
  return base_ ? std::string("custom(base=") + kind_name(*base_) + ")" : "custom";
}

std::vector<LaurentPoly> to_basis(const UniPoly& p, const SequenceSpec& seq) {
  std::vector<LaurentPoly> out(static_cast<std::size_t>(p.degree() + 1));
  UniPoly rest = p;
  // Each seq[k] is monic of degree k, so peeling the top coefficient is exact.
  for (int k = p.degree(); k >= 0; --k) {
    LaurentPoly c = rest.coeff(k);
    if (c.is_zero()) continue;
    out[static_cast<std::size_t>(k)] = c;
    rest -= c * seq.at(k);
  }
  if (!rest.is_zero()) throw std::logic_error("to_basis: non-normalized sequence");
  return out;
}

UniPoly from_basis(const std::vector<LaurentPoly>& coeffs, const SequenceSpec& seq) {
  UniPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) p += coeffs[k] * seq.at(static_cast<int>(k));
  return p;
}

std::vector<LaurentPoly> product_in_basis(const SequenceSpec& seq, int m, int n) {
  return to_basis(seq.at(m) * seq.at(n), seq);
}

nlohmann::ordered_json to_json(const UniPoly& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_json(c));
  return j;
}

UniPoly unipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of coefficients");
  std::vector<LaurentPoly> c;
  for (const auto& x : j) c.push_back(laurent_from_json(x));
  return UniPoly(std::move(c));
}

nlohmann::ordered_json to_json(const SequenceSpec& seq) {
  if (seq.kind() != SequenceSpec::Kind::Custom) return kind_name(seq.kind());
  nlohmann::ordered_json polys = nlohmann::ordered_json::array();
  for (const auto& e : seq.table()) polys.push_back(e ? to_json(*e) : nlohmann::ordered_json(nullptr));
  nlohmann::ordered_json j;
  j["polynomials"] = polys;
  if (seq.base()) j["base"] = kind_name(*seq.base());
  return j;
}

SequenceSpec sequence_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    return kind_from_name(j.get<std::string>()) == SequenceSpec::Kind::Chebyshev ? SequenceSpec::chebyshev()
                                                                                : SequenceSpec::power();
  }
  const nlohmann::json* polys = &j;
  std::optional<SequenceSpec::Kind> base;
  if (j.is_object()) {
    if (!j.contains("polynomials")) throw std::invalid_argument("sequence object needs a \"polynomials\" array");
    polys = &j.at("polynomials");
    if (j.contains("base")) base = kind_from_name(j.at("base").get<std::string>());
  }
  if (!polys->is_array()) throw std::invalid_argument("sequence polynomials must be an array");
  std::vector<std::optional<UniPoly>> table;
  for (const auto& p : *polys) {
    if (p.is_null()) table.emplace_back(std::nullopt);
    else table.emplace_back(unipoly_from_json(p));
  }
  return SequenceSpec::custom(std::move(table), base);
}

SequenceSpec parse_sequence(const std::string& selector) {
  if (selector == "chebyshev") return SequenceSpec::chebyshev();
  if (selector == "power") return SequenceSpec::power();
  std::ifstream in(selector);
  if (!in) throw std::invalid_argument("cannot open sequence file '" + selector + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("sequence file '" + selector + "': " + e.what());
  }
  return sequence_from_json(j);
}

}  // namespace skeinpos

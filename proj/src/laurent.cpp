#include "skeinpos/laurent.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace skeinpos {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::q(int exponent) { return monomial(1, exponent); }

LaurentPoly LaurentPoly::from_terms(const TermMap& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(c, e);
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(const Integer& coeff, int exponent) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea + eb);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result(1);
  LaurentPoly b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

bool is_positive(const LaurentPoly& a) {
  for (const auto& [e, c] : a.terms())
    if (c < 0) return false;
  return true;
}

Integer eval_q1(const LaurentPoly& a) {
  Integer sum = 0;
  for (const auto& [e, c] : a.terms()) sum += c;
  return sum;
}

const LaurentPoly& trivial_loop_value() {
  static const LaurentPoly value = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  return value;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

nlohmann::ordered_json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
    return static_cast<long long>(value);
  return value.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw std::invalid_argument("malformed integer string: " + s);
    return Integer(s);
  }
  throw std::invalid_argument("expected an integer coefficient, got " + j.dump());
}

nlohmann::ordered_json to_json(const LaurentPoly& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = integer_to_json(c);
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (j.is_number_integer() || j.is_string()) return LaurentPoly(integer_from_json(j));
  if (!j.is_object()) throw std::invalid_argument("expected a Laurent polynomial object, got " + j.dump());
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int exponent = 0;
    try {
      exponent = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw std::invalid_argument("malformed exponent key: " + key);
    p.add_term(integer_from_json(value), exponent);
  }
  return p;
}

}  // namespace skeinpos

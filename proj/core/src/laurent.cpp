#include "lrq/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace lrq {

LaurentPoly LaurentPoly::monomial(int exp, Rat coeff) {
  LaurentPoly p;
  p.insert(exp, coeff);
  return p;
}

LaurentPoly LaurentPoly::geometric(int step, int count) {
  LaurentPoly p;
  for (int i = 0; i < count; ++i) p.insert(i * step, 1);
  return p;
}

void LaurentPoly::insert(int exp, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(exp, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

Rat LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rat(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) insert(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) insert(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out += rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out -= rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      out.insert(e1 + e2, c1 * c2);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator*(const Rat& scalar) const {
  LaurentPoly out;
  if (scalar == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::substitute_t_squared() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(2 * e, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

Rat LaurentPoly::eval_at_one() const {
  Rat sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

bool LaurentPoly::is_integral() const {
  for (const auto& [e, c] : terms_) {
    if (denominator(c) != 1) return false;
  }
  return true;
}

const LaurentPoly& LaurentPoly::require_integral(const char* context) const {
  if (!is_integral()) {
    throw std::logic_error(std::string("non-integral coefficients in ") +
                           context + ": " + to_string());
  }
  return *this;
}

bool LaurentPoly::is_symmetric_unimodal() const {
  if (terms_.empty()) return true;
  if (*this != bar()) return false;
  int l = max_degree();  // bar-invariance gives min_degree() == -l
  for (const auto& [e, c] : terms_) {
    if (((e - l) % 2) != 0) return false;
  }
  for (int e = -l; e < 0; e += 2) {
    if (coeff(e) > coeff(e + 2)) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1) && e != 0;
    if (!unit) out << a;
    if (e != 0) {
      if (!unit) out << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

nlohmann::json LaurentPoly::to_json() const {
  require_integral("LaurentPoly::to_json");
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : terms_) {
    j[std::to_string(e)] = numerator(c).str();
  }
  return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    p.insert(std::stoi(key), Rat(Int(value.get<std::string>())));
  }
  return p;
}

LaurentPoly gaussian_binomial(int x, int y) {
  if (y < 0 || y > x) {
    throw std::invalid_argument("gaussian_binomial: need 0 <= y <= x");
  }
  // Pascal recurrence [x y]_t = [x-1 y-1]_t + t^y [x-1 y]_t, division-free.
  std::vector<LaurentPoly> row(y + 1);
  row[0] = LaurentPoly::one();
  for (int n = 1; n <= x; ++n) {
    for (int m = std::min(n, y); m >= 1; --m) {
      row[m] = (m == n) ? LaurentPoly::one()
                        : row[m - 1] + row[m].shifted(m);
    }
  }
  return row[y];
}

LaurentPoly quantum_binomial(int x, int y) {
  // Balanced form: the one-sided binomial in t^2, recentered about 0.
  return gaussian_binomial(x, y).substitute_t_squared().shifted(-y * (x - y));
}

}  // namespace lrq

#include "klazar/polynomial.hpp"

#include <stdexcept>

namespace klazar {

Polynomial::Polynomial(Rational c) {
  c.canonicalize();
  if (c != 0) terms_[{0, 0}] = c;
}

Polynomial Polynomial::monomial(Rational c, int ey, int ez) {
  if (ey < 0 || ez < 0) throw std::invalid_argument("polynomial: negative exponent");
  Polynomial p;
  c.canonicalize();
  if (c != 0) p.terms_[{ey, ez}] = c;
  return p;
}

Rational Polynomial::coefficient(int ey, int ez) const {
  auto it = terms_.find({ey, ez});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

int Polynomial::degree(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

Rational Polynomial::evaluate(const Rational& y, const Rational& z) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < e[0]; ++i) term *= y;
    for (int i = 0; i < e[1]; ++i) term *= z;
    total += term;
  }
  return total;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("polynomial: negative power");
  Polynomial r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (&o == this) return *this *= Polynomial(2);
  for (const auto& [e, c] : o.terms_) {
    Rational& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (&o == this) return *this = Polynomial();
  for (const auto& [e, c] : o.terms_) {
    Rational& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.terms_[{ea[0] + eb[0], ea[1] + eb[1]}] += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.get_str();
    if (!out.empty()) {
      if (c < 0) {
        out += " - ";
        coeff = Rational(-c).get_str();
      } else {
        out += " + ";
      }
    }
    std::string mono;
    if (e[0]) mono += e[0] == 1 ? "y" : "y^" + std::to_string(e[0]);
    if (e[1]) mono += std::string(mono.empty() ? "" : "*") + (e[1] == 1 ? "z" : "z^" + std::to_string(e[1]));
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else if (coeff == "-1") {
      out += "-" + mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace klazar

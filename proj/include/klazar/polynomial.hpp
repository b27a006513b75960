#pragma once

#include <array>
#include <map>
#include <string>

#include "klazar/bigint.hpp"

namespace klazar {

/// Sparse polynomial in the markers y, z over the rationals.
class Polynomial {
 public:
  using Exponents = std::array<int, 2>;

  Polynomial() = default;
  Polynomial(Rational c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}
  static Polynomial monomial(Rational c, int ey, int ez = 0);
  static Polynomial y() { return monomial(1, 1); }
  static Polynomial z() { return monomial(1, 0, 1); }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coefficient(int ey, int ez = 0) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const { return coefficient(0, 0); }
  /// Highest exponent of y (index 0) or z (index 1); -1 for zero.
  int degree(int var) const;

  Rational evaluate(const Rational& y, const Rational& z = 0) const;
  Polynomial pow(int e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a) { return Polynomial(-1) * a; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  std::map<Exponents, Rational> terms_;  // no zero coefficients
};

}  // namespace klazar

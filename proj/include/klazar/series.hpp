#pragma once

#include <string>
#include <vector>

#include "klazar/polynomial.hpp"

namespace klazar {

/// Exponential generating function sum_{m<=N} c_m x^m/m! truncated at order
/// N, with polynomial coefficients in `markers` variables (0, 1 = y, 2 = y,z).
class TruncatedEgf {
 public:
  TruncatedEgf(int order, int markers);
  /// The series with the given coefficients of x^m/m!, m = 0..N.
  static TruncatedEgf from_coefficients(int markers, std::vector<Polynomial> coeffs);
  static TruncatedEgf constant(int order, int markers, const Polynomial& c);
  /// c * x.
  static TruncatedEgf linear(int order, int markers, const Polynomial& c);

  int order() const { return order_; }
  int markers() const { return markers_; }
  const Polynomial& operator[](int m) const { return coeffs_.at(m); }
  Polynomial& operator[](int m) { return coeffs_.at(m); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }

  /// Every coefficient with y and z replaced by the given values; the result
  /// has no markers.
  TruncatedEgf substitute(const Rational& y, const Rational& z = 0) const;
  /// Replaces markers by a polynomial per coefficient: y -> py, z -> pz.
  TruncatedEgf substitute(const Polynomial& py, const Polynomial& pz, int markers) const;

  TruncatedEgf& operator+=(const TruncatedEgf& o);
  TruncatedEgf& operator-=(const TruncatedEgf& o);
  friend TruncatedEgf operator+(TruncatedEgf a, const TruncatedEgf& b) { return a += b; }
  friend TruncatedEgf operator-(TruncatedEgf a, const TruncatedEgf& b) { return a -= b; }
  friend TruncatedEgf operator*(const TruncatedEgf& a, const TruncatedEgf& b);
  friend TruncatedEgf operator*(const Polynomial& c, const TruncatedEgf& f);
  friend bool operator==(const TruncatedEgf&, const TruncatedEgf&) = default;

 private:
  void require_compatible(const TruncatedEgf& o) const;

  int order_;
  int markers_;
  std::vector<Polynomial> coeffs_;
};

TruncatedEgf series_mul(const TruncatedEgf& f, const TruncatedEgf& g);
/// exp(f); f must have zero constant term.
TruncatedEgf series_exp(const TruncatedEgf& f);
/// p with p^2 g = 1; g must have constant term 1.
TruncatedEgf series_inv_sqrt(const TruncatedEgf& g);
/// p with p^2 = g; g must have constant term 1.
TruncatedEgf series_sqrt(const TruncatedEgf& g);
/// 1/f; f must have a nonzero scalar constant term.
TruncatedEgf series_inverse(const TruncatedEgf& f);

// ---- generating functions -------------------------------------------------
// Each gf_* below equals prefactor * series_inv_sqrt(radicand) for the
// radicand returned by the matching radicand_* function.

/// 2 e^{-x} - 1. Counts w12(n).
TruncatedEgf radicand_w12(int N);
TruncatedEgf gf_w12(int N);
/// 1 - 2y sum c^{m-1} x^m/m!, c = 1 - 2y. Leaves of shapes weighted by w12.
TruncatedEgf radicand_leaves(int N);
TruncatedEgf gf_leaves(int N);
/// 1 - y sum 2^m (1-y)^{m-1} x^m/m!. Bad vertices, y^(#bad + 1).
TruncatedEgf radicand_Fstarstar(int N);
TruncatedEgf gf_Fstarstar(int N);
/// 1 - 2z sum c^{m-1} x^m/m!, c = 1 + y - 2z. y: violators, z: non-descent-
/// terminator leaves.
TruncatedEgf radicand_trivariate(int N);
TruncatedEgf gf_trivariate(int N);
/// 1 - 2 sum (y-1)^{m-1} x^m/m!. y: violators.
TruncatedEgf radicand_kv(int N);
TruncatedEgf gf_kv(int N);
/// 1 - w^2, w = sum y^{m-1} x^m/m!; the gf carries the prefactor e^{xy}.
/// y: odd-to-even matches of no-upline matchings.
TruncatedEgf radicand_even_odd(int N);
TruncatedEgf gf_even_odd(int N);
/// 1 - 2x; the gf carries the prefactor e^{x(y-1)}. y: vertical lines.
TruncatedEgf radicand_vertical(int N);
TruncatedEgf gf_vertical(int N);

/// Names accepted by gf_by_name: w12, leaves, Fstarstar, trivariate, kv,
/// even-odd, vertical.
const std::vector<std::string>& gf_names();
TruncatedEgf gf_by_name(const std::string& name, int N);
TruncatedEgf radicand_by_name(const std::string& name, int N);

}  // namespace klazar

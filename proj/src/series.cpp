#include "klazar/series.hpp"

#include <functional>
#include <stdexcept>

#include "klazar/counting.hpp"

namespace klazar {

TruncatedEgf::TruncatedEgf(int order, int markers) : order_(order), markers_(markers) {
  if (order < 0) throw std::invalid_argument("series: negative order");
  if (markers < 0 || markers > 2) throw std::invalid_argument("series: at most two markers");
  coeffs_.resize(order + 1);
}

namespace {

void require_markers(const Polynomial& c, int markers) {
  if ((markers < 1 && c.degree(0) > 0) || (markers < 2 && c.degree(1) > 0)) {
    throw std::invalid_argument("series: coefficient " + c.to_string() + " uses an undeclared marker");
  }
}

}  // namespace

TruncatedEgf TruncatedEgf::from_coefficients(int markers, std::vector<Polynomial> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("series: no coefficients");
  TruncatedEgf f(static_cast<int>(coeffs.size()) - 1, markers);
  for (const auto& c : coeffs) require_markers(c, markers);
  f.coeffs_ = std::move(coeffs);
  return f;
}

TruncatedEgf TruncatedEgf::constant(int order, int markers, const Polynomial& c) {
  require_markers(c, markers);
  TruncatedEgf f(order, markers);
  f.coeffs_[0] = c;
  return f;
}

TruncatedEgf TruncatedEgf::linear(int order, int markers, const Polynomial& c) {
  require_markers(c, markers);
  TruncatedEgf f(order, markers);
  if (order >= 1) f.coeffs_[1] = c;
  return f;
}

void TruncatedEgf::require_compatible(const TruncatedEgf& o) const {
  if (order_ != o.order_) {
    throw std::invalid_argument("series: orders differ (" + std::to_string(order_) + " vs " +
                                std::to_string(o.order_) + ")");
  }
  if (markers_ != o.markers_) throw std::invalid_argument("series: marker sets differ");
}

TruncatedEgf TruncatedEgf::substitute(const Rational& y, const Rational& z) const {
  TruncatedEgf f(order_, 0);
  for (int m = 0; m <= order_; ++m) f.coeffs_[m] = coeffs_[m].evaluate(y, z);
  return f;
}

TruncatedEgf TruncatedEgf::substitute(const Polynomial& py, const Polynomial& pz, int markers) const {
  TruncatedEgf f(order_, markers);
  for (int m = 0; m <= order_; ++m) {
    for (const auto& [e, c] : coeffs_[m].terms()) f.coeffs_[m] += Polynomial(c) * py.pow(e[0]) * pz.pow(e[1]);
  }
  return f;
}

TruncatedEgf& TruncatedEgf::operator+=(const TruncatedEgf& o) {
  require_compatible(o);
  for (int m = 0; m <= order_; ++m) coeffs_[m] += o.coeffs_[m];
  return *this;
}

TruncatedEgf& TruncatedEgf::operator-=(const TruncatedEgf& o) {
  require_compatible(o);
  for (int m = 0; m <= order_; ++m) coeffs_[m] -= o.coeffs_[m];
  return *this;
}

namespace {

Rational choose(int n, int k) { return Rational(binomial(n, k)); }

}  // namespace

TruncatedEgf operator*(const TruncatedEgf& a, const TruncatedEgf& b) {
  a.require_compatible(b);
  TruncatedEgf r(a.order_, a.markers_);
  for (int m = 0; m <= a.order_; ++m) {
    for (int i = 0; i <= m; ++i) {
      if (a.coeffs_[i].is_zero() || b.coeffs_[m - i].is_zero()) continue;
      r.coeffs_[m] += Polynomial(choose(m, i)) * a.coeffs_[i] * b.coeffs_[m - i];
    }
  }
  return r;
}

TruncatedEgf operator*(const Polynomial& c, const TruncatedEgf& f) {
  TruncatedEgf r = f;
  for (auto& p : r.coeffs_) p = c * p;
  return r;
}

TruncatedEgf series_mul(const TruncatedEgf& f, const TruncatedEgf& g) { return f * g; }

TruncatedEgf series_exp(const TruncatedEgf& f) {
  if (!f[0].is_zero()) throw std::invalid_argument("exp: constant term must be zero");
  const int N = f.order();
  TruncatedEgf h(N, f.markers());
  h[0] = 1;
  for (int m = 0; m < N; ++m) {
    Polynomial next;
    for (int i = 0; i <= m; ++i) next += Polynomial(choose(m, i)) * f[i + 1] * h[m - i];
    h[m + 1] = next;
  }
  return h;
}

namespace {

void require_unit_constant(const TruncatedEgf& g, const char* what) {
  if (g[0] != Polynomial(1)) throw std::invalid_argument(std::string(what) + ": constant term must be 1");
}

}  // namespace

TruncatedEgf series_inv_sqrt(const TruncatedEgf& g) {
  require_unit_constant(g, "inv_sqrt");
  const int N = g.order();
  TruncatedEgf p(N, g.markers()), sq(N, g.markers());
  p[0] = 1;
  sq[0] = 1;
  // Coefficient m of p^2 g equals 2 p_m plus terms in p_0..p_{m-1}.
  for (int m = 1; m <= N; ++m) {
    Polynomial sq_rest;
    for (int i = 1; i < m; ++i) sq_rest += Polynomial(choose(m, i)) * p[i] * p[m - i];
    Polynomial q = sq_rest + g[m];
    for (int l = 1; l < m; ++l) q += Polynomial(choose(m, l)) * sq[l] * g[m - l];
    p[m] = Polynomial(Rational(-1, 2)) * q;
    sq[m] = sq_rest + Polynomial(2) * p[m];
  }
  return p;
}

TruncatedEgf series_sqrt(const TruncatedEgf& g) {
  require_unit_constant(g, "sqrt");
  const int N = g.order();
  TruncatedEgf p(N, g.markers());
  p[0] = 1;
  for (int m = 1; m <= N; ++m) {
    Polynomial rest = g[m];
    for (int i = 1; i < m; ++i) rest -= Polynomial(choose(m, i)) * p[i] * p[m - i];
    p[m] = Polynomial(Rational(1, 2)) * rest;
  }
  return p;
}

TruncatedEgf series_inverse(const TruncatedEgf& f) {
  if (!f[0].is_constant() || f[0].is_zero()) {
    throw std::invalid_argument("inverse: constant term must be a nonzero scalar");
  }
  const Rational inv_c = 1 / f[0].constant_term();
  const int N = f.order();
  TruncatedEgf r(N, f.markers());
  r[0] = inv_c;
  for (int m = 1; m <= N; ++m) {
    Polynomial s;
    for (int i = 1; i <= m; ++i) s += Polynomial(choose(m, i)) * f[i] * r[m - i];
    r[m] = Polynomial(-inv_c) * s;
  }
  return r;
}

// ---------------------------------------------------------------------------
// generating functions

namespace {

// 1 + sum_{m>=1} term(m) x^m/m!.
TruncatedEgf one_plus(int N, int markers, const std::function<Polynomial(int)>& term) {
  TruncatedEgf g(N, markers);
  g[0] = 1;
  for (int m = 1; m <= N; ++m) g[m] = term(m);
  return g;
}

Polynomial poly_y() { return Polynomial::y(); }
Polynomial poly_z() { return Polynomial::z(); }

}  // namespace

TruncatedEgf radicand_w12(int N) {
  return one_plus(N, 0, [](int m) { return Polynomial(m % 2 ? -2 : 2); });
}
TruncatedEgf gf_w12(int N) { return series_inv_sqrt(radicand_w12(N)); }

TruncatedEgf radicand_leaves(int N) {
  const Polynomial c = Polynomial(1) - Polynomial(2) * poly_y();
  return one_plus(N, 1, [&](int m) { return Polynomial(-2) * poly_y() * c.pow(m - 1); });
}
TruncatedEgf gf_leaves(int N) { return series_inv_sqrt(radicand_leaves(N)); }

TruncatedEgf radicand_Fstarstar(int N) {
  const Polynomial d = Polynomial(1) - poly_y();
  return one_plus(N, 1, [&](int m) { return -Polynomial(Rational(power(2, m))) * poly_y() * d.pow(m - 1); });
}
TruncatedEgf gf_Fstarstar(int N) { return series_inv_sqrt(radicand_Fstarstar(N)); }

TruncatedEgf radicand_trivariate(int N) {
  const Polynomial c = Polynomial(1) + poly_y() - Polynomial(2) * poly_z();
  return one_plus(N, 2, [&](int m) { return Polynomial(-2) * poly_z() * c.pow(m - 1); });
}
TruncatedEgf gf_trivariate(int N) { return series_inv_sqrt(radicand_trivariate(N)); }

TruncatedEgf radicand_kv(int N) {
  const Polynomial d = poly_y() - Polynomial(1);
  return one_plus(N, 1, [&](int m) { return Polynomial(-2) * d.pow(m - 1); });
}
TruncatedEgf gf_kv(int N) { return series_inv_sqrt(radicand_kv(N)); }

TruncatedEgf radicand_even_odd(int N) {
  TruncatedEgf w(N, 1);
  for (int m = 1; m <= N; ++m) w[m] = poly_y().pow(m - 1);
  return TruncatedEgf::constant(N, 1, 1) - w * w;
}
TruncatedEgf gf_even_odd(int N) {
  return series_exp(TruncatedEgf::linear(N, 1, poly_y())) * series_inv_sqrt(radicand_even_odd(N));
}

TruncatedEgf radicand_vertical(int N) {
  return TruncatedEgf::constant(N, 1, 1) - TruncatedEgf::linear(N, 1, 2);
}
TruncatedEgf gf_vertical(int N) {
  return series_exp(TruncatedEgf::linear(N, 1, poly_y() - Polynomial(1))) * series_inv_sqrt(radicand_vertical(N));
}

const std::vector<std::string>& gf_names() {
  static const std::vector<std::string> names{"w12", "leaves", "Fstarstar", "trivariate", "kv", "even-odd", "vertical"};
  return names;
}

TruncatedEgf gf_by_name(const std::string& name, int N) {
  if (name == "w12") return gf_w12(N);
  if (name == "leaves") return gf_leaves(N);
  if (name == "Fstarstar") return gf_Fstarstar(N);
  if (name == "trivariate") return gf_trivariate(N);
  if (name == "kv") return gf_kv(N);
  if (name == "even-odd") return gf_even_odd(N);
  if (name == "vertical") return gf_vertical(N);
  throw std::invalid_argument("unknown generating function \"" + name + "\"");
}

TruncatedEgf radicand_by_name(const std::string& name, int N) {
  if (name == "w12") return radicand_w12(N);
  if (name == "leaves") return radicand_leaves(N);
  if (name == "Fstarstar") return radicand_Fstarstar(N);
  if (name == "trivariate") return radicand_trivariate(N);
  if (name == "kv") return radicand_kv(N);
  if (name == "even-odd") return radicand_even_odd(N);
  if (name == "vertical") return radicand_vertical(N);
  throw std::invalid_argument("unknown generating function \"" + name + "\"");
}

}  // namespace klazar

#pragma once

// Extraction of rational linear factors of bivariate polynomials.
//
// A linear factor a0 + a1 x1 + a2 x2 of p has its direction a1 x1 + a2 x2
// dividing the leading form of p, so candidate directions are rational roots
// of the dehomogenized leading form. For each direction the offset a0 is a
// common root of the coefficients of p restricted to the parametrized line.

#include <bivar/poly.hpp>
#include <bivar/univariate.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace bivar {

struct LinearFactorization {
  Scalar scalar = 1;
  /// With multiplicity, sorted.
  std::vector<LinearForm> factors;
  /// Has no rational linear factor; leading coefficient 1.
  Poly residual = Poly(1);

  bool complete() const { return residual.degree() == 0; }
};

namespace detail {

/// Coefficients of a polynomial in (s = x1, c = x2), grouped by powers of s,
/// as univariate polynomials in c; returns their monic gcd.
inline UPoly gcd_of_slices(const Poly& in_s_c) {
  std::map<unsigned, std::vector<Scalar>> slices;
  for (const auto& [m, c] : in_s_c.terms()) {
    auto& v = slices[m.e1];
    if (v.size() <= m.e2) v.resize(m.e2 + 1);
    v[m.e2] += c;
  }
  UPoly g;
  for (auto& [e, v] : slices) {
    g = gcd(g, UPoly(std::move(v)));
    if (g.degree() == 0) break;
  }
  return g;
}

inline std::optional<LinearForm> find_linear_factor(const Poly& p) {
  Poly lf = leading_form(p);
  int d = *p.degree();
  Poly s = Poly::x1(), c = Poly::x2();

  // Directions a1 x1 + x2: LF(1, -a1) = 0.
  std::vector<Scalar> dehom(d + 1);
  for (const auto& [m, coef] : lf.terms()) dehom[m.e2] = coef;
  for (const Scalar& root : rational_roots(UPoly(dehom))) {
    Scalar a1 = -root;
    UPoly g = gcd_of_slices(compose(p, s, -(s * a1) - c));
    if (g.degree() < 1) continue;
    auto offsets = rational_roots(g);
    if (!offsets.empty()) return LinearForm{offsets.front(), a1, 1};
  }
  // Direction x1: LF has no pure x2^d term.
  if (is_zero(lf.coeff({0, static_cast<unsigned>(d)}))) {
    UPoly g = gcd_of_slices(compose(p, -c, s));
    if (g.degree() >= 1) {
      auto offsets = rational_roots(g);
      if (!offsets.empty()) return LinearForm{offsets.front(), 1, 0};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Complete factorization of p into rational linear factors times a residual
/// without such factors: p = scalar * prod(factors) * residual exactly.
/// Factors are normalized to take the value 1 at z when z is given and the
/// factor does not vanish there; otherwise to the canonical line form.
inline LinearFactorization linear_factors(const Poly& p, const std::optional<Point>& z = std::nullopt) {
  if (p.is_zero()) throw DomainError("linear_factors of the zero polynomial");
  LinearFactorization out;
  Poly residual = p;
  while (residual.degree() > 0) {
    auto k = detail::find_linear_factor(residual);
    if (!k) break;
    auto q = divide_by_linear(residual, *k);
    if (!q) throw InternalError("extracted linear factor does not divide");
    residual = std::move(*q);
    LinearForm norm = k->normalized();
    if (z) {
      Scalar at = norm(*z);
      if (!is_zero(at)) norm = norm * (1 / at);
    }
    out.factors.push_back(norm);
  }
  std::sort(out.factors.begin(), out.factors.end());

  Poly product(1);
  for (const auto& f : out.factors) product *= f.to_poly();
  Scalar lead_res = residual.leading_term().second;
  out.residual = residual * (1 / lead_res);
  out.scalar = p.leading_term().second / (product * out.residual).leading_term().second;
  if (!(product * out.residual * out.scalar == p))
    throw InternalError("linear factorization does not multiply back");
  return out;
}

}  // namespace bivar

#pragma once

// Sparse bivariate polynomials over the rationals.
//
// Monomials are ordered by total degree, and within one degree by
// x1-exponent descending: 1, x1, x2, x1^2, x1 x2, x2^2, ...
// This is the single canonical order used for storage, printing, matrix
// columns and serialization. As a monomial order it is graded lex with
// x2 > x1, so the leading term of a polynomial is its last stored term.

#include <bivar/scalar.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace bivar {

struct Monomial {
  unsigned e1 = 0;
  unsigned e2 = 0;

  constexpr int degree() const { return static_cast<int>(e1 + e2); }

  constexpr bool divides(const Monomial& other) const {
    return e1 <= other.e1 && e2 <= other.e2;
  }

  friend constexpr Monomial operator*(Monomial a, Monomial b) {
    return {a.e1 + b.e1, a.e2 + b.e2};
  }
  /// Requires b.divides(a).
  friend constexpr Monomial operator/(Monomial a, Monomial b) {
    return {a.e1 - b.e1, a.e2 - b.e2};
  }

  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return b.e1 <=> a.e1;
  }
};

/// All monomials of total degree exactly d, in canonical order.
inline std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  for (int e2 = 0; e2 <= d; ++e2)
    out.push_back({static_cast<unsigned>(d - e2), static_cast<unsigned>(e2)});
  return out;
}

/// All monomials of total degree <= n, in canonical order.
inline std::vector<Monomial> monomials_up_to(int n) {
  std::vector<Monomial> out;
  for (int d = 0; d <= n; ++d)
    for (auto m : monomials_of_degree(d)) out.push_back(m);
  return out;
}

/// Degree of a polynomial. The zero polynomial has no degree (std::nullopt),
/// which compares below every integer, so `deg(p) <= n` holds for p = 0.
using Degree = std::optional<int>;

struct Point {
  Scalar x1;
  Scalar x2;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x1 == b.x1 && a.x2 == b.x2;
  }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x1 != b.x1) return a.x1 < b.x1;
    return a.x2 < b.x2;
  }
};

inline std::string to_string(const Point& p) {
  return "(" + to_string(p.x1) + ", " + to_string(p.x2) + ")";
}

class Poly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Poly() = default;
  Poly(const Scalar& c) {  // NOLINT(google-explicit-constructor)
    if (!bivar::is_zero(c)) terms_.emplace(Monomial{}, c);
  }
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Scalar(c)) {}   // NOLINT(google-explicit-constructor)

  static Poly term(const Scalar& c, Monomial m) {
    Poly p;
    if (!bivar::is_zero(c)) p.terms_.emplace(m, c);
    return p;
  }
  static Poly x1() { return term(1, {1, 0}); }
  static Poly x2() { return term(1, {0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Degree degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }

  Scalar coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Largest monomial in the canonical order with its coefficient.
  /// Requires a nonzero polynomial.
  const std::pair<const Monomial, Scalar>& leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  /// Adds c * m in place.
  void add_term(Monomial m, const Scalar& c) {
    if (bivar::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (bivar::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Homogeneous component of degree d.
  Poly homogeneous(int d) const {
    Poly out;
    auto lo = terms_.lower_bound(Monomial{static_cast<unsigned>(d), 0});
    for (auto it = lo; it != terms_.end() && it->first.degree() == d; ++it)
      out.terms_.emplace_hint(out.terms_.end(), it->first, it->second);
    return out;
  }

  Poly& operator+=(const Poly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    if (bivar::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator-(Poly p) {
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  friend Poly operator*(Poly p, const Scalar& s) { return p *= s; }
  friend Poly operator*(const Scalar& s, Poly p) { return p *= s; }

  friend Poly operator*(const Poly& p, const Poly& q) {
    Poly out;
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) out.add_term(mp * mq, cp * cq);
    return out;
  }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  /// Multiplies by a monomial with coefficient.
  Poly shifted(Monomial m, const Scalar& c) const {
    Poly out;
    if (bivar::is_zero(c)) return out;
    for (const auto& [mp, cp] : terms_)
      out.terms_.emplace_hint(out.terms_.end(), mp * m, cp * c);
    return out;
  }

  friend bool operator==(const Poly& p, const Poly& q) { return p.terms_ == q.terms_; }

 private:
  Terms terms_;
};

inline Poly pow(const Poly& p, unsigned e) {
  Poly result(1);
  for (unsigned i = 0; i < e; ++i) result *= p;
  return result;
}

inline Scalar evaluate(const Poly& p, const Point& pt) {
  if (p.is_zero()) return 0;
  int d = *p.degree();
  std::vector<Scalar> pw1(d + 1), pw2(d + 1);
  pw1[0] = 1;
  pw2[0] = 1;
  for (int i = 1; i <= d; ++i) {
    pw1[i] = pw1[i - 1] * pt.x1;
    pw2[i] = pw2[i - 1] * pt.x2;
  }
  Scalar sum = 0;
  for (const auto& [m, c] : p.terms()) sum += c * pw1[m.e1] * pw2[m.e2];
  return sum;
}

/// p(q1, q2): substitutes polynomials for both variables.
inline Poly compose(const Poly& p, const Poly& q1, const Poly& q2) {
  if (p.is_zero()) return {};
  int d = *p.degree();
  std::vector<Poly> pw1(d + 1), pw2(d + 1);
  pw1[0] = Poly(1);
  pw2[0] = Poly(1);
  for (int i = 1; i <= d; ++i) {
    pw1[i] = pw1[i - 1] * q1;
    pw2[i] = pw2[i - 1] * q2;
  }
  Poly out;
  for (const auto& [m, c] : p.terms()) out += (pw1[m.e1] * pw2[m.e2]) * c;
  return out;
}

/// Homogeneous component of top degree.
inline Poly leading_form(const Poly& p) {
  if (p.is_zero()) throw DomainError("no leading form: zero polynomial");
  return p.homogeneous(*p.degree());
}

/// Exact division. Returns the quotient when q divides p, std::nullopt
/// otherwise. A single polynomial is a Groebner basis of the ideal it
/// generates, so leading-term division decides divisibility.
inline std::optional<Poly> divide_exact(Poly p, const Poly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& [lm, lc] = q.leading_term();
  Poly quotient;
  while (!p.is_zero()) {
    auto [m, c] = p.leading_term();
    if (!lm.divides(m)) return std::nullopt;
    Monomial qm = m / lm;
    Scalar qc = c / lc;
    quotient.add_term(qm, qc);
    p -= q.shifted(qm, qc);
  }
  return quotient;
}

/// Affine linear polynomial a0 + a1 x1 + a2 x2.
struct LinearForm {
  Scalar a0;
  Scalar a1;
  Scalar a2;

  bool is_constant() const { return bivar::is_zero(a1) && bivar::is_zero(a2); }

  Scalar operator()(const Point& p) const { return a0 + a1 * p.x1 + a2 * p.x2; }

  Poly to_poly() const {
    Poly p(a0);
    p.add_term({1, 0}, a1);
    p.add_term({0, 1}, a2);
    return p;
  }

  /// Canonical representative of the line: first nonzero among
  /// (a1, a2, a0) scaled to 1.
  LinearForm normalized() const {
    const Scalar& lead = !bivar::is_zero(a1) ? a1 : (!bivar::is_zero(a2) ? a2 : a0);
    if (bivar::is_zero(lead)) return *this;
    return {a0 / lead, a1 / lead, a2 / lead};
  }

  LinearForm operator*(const Scalar& s) const { return {a0 * s, a1 * s, a2 * s}; }
  LinearForm operator-(const Scalar& s) const { return {a0 - s, a1, a2}; }

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.a0 == b.a0 && a.a1 == b.a1 && a.a2 == b.a2;
  }
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    if (a.a1 != b.a1) return a.a1 < b.a1;
    if (a.a2 != b.a2) return a.a2 < b.a2;
    return a.a0 < b.a0;
  }

  static LinearForm from_poly(const Poly& p) {
    if (p.degree() > 1) throw DomainError("polynomial of degree > 1 is not a linear form");
    return {p.coeff({0, 0}), p.coeff({1, 0}), p.coeff({0, 1})};
  }

  /// The line through two distinct points.
  static LinearForm through(const Point& p, const Point& q) {
    if (p == q) throw DomainError("a line needs two distinct points");
    Scalar d1 = q.x1 - p.x1, d2 = q.x2 - p.x2;
    return {p.x1 * d2 - p.x2 * d1, -d2, d1};
  }
};

/// Lines as sets: same zero set iff normalized forms agree.
inline bool same_line(const LinearForm& a, const LinearForm& b) {
  return a.normalized() == b.normalized();
}

/// Point of the line k = 0 with parameter s: x1 = s unless the line is
/// vertical, in which case x2 = s.
inline Point point_on_line(const LinearForm& k, const Scalar& s) {
  if (k.is_constant()) throw DomainError("point_on_line: constant linear form");
  if (is_zero(k.a2)) return {-k.a0 / k.a1, s};
  return {s, -(k.a0 + k.a1 * s) / k.a2};
}

/// Intersection of two lines, or std::nullopt when they are parallel.
inline std::optional<Point> intersect(const LinearForm& a, const LinearForm& b) {
  Scalar det = a.a1 * b.a2 - a.a2 * b.a1;
  if (is_zero(det)) return std::nullopt;
  return Point{(a.a2 * b.a0 - a.a0 * b.a2) / det, (a.a0 * b.a1 - a.a1 * b.a0) / det};
}

/// q with p = k q, or std::nullopt when k does not divide p.
inline std::optional<Poly> divide_by_linear(const Poly& p, const LinearForm& k) {
  if (k.is_constant()) throw DomainError("division by a constant linear form");
  return divide_exact(p, k.to_poly());
}

inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && m.degree() > 0;
    if (!unit) os << to_string(mag);
    bool need_star = !unit;
    auto var = [&](const char* name, unsigned e) {
      if (e == 0) return;
      if (need_star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      need_star = true;
    };
    var("x1", m.e1);
    var("x2", m.e2);
  }
  return os.str();
}

inline std::string to_string(const LinearForm& k) { return to_string(k.to_poly()); }

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const LinearForm& k) { return os << to_string(k); }
inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

}  // namespace bivar

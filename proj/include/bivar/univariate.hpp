#pragma once

// Dense univariate polynomials over the rationals, with exact rational root
// finding. Used by linear factor extraction.

#include <bivar/scalar.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace bivar {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients in ascending powers.
  explicit UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& lead() const { return c_.back(); }
  Scalar coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Scalar(0); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Scalar> m = c_;
    Scalar l = lead();
    for (auto& x : m) x /= l;
    return UPoly(std::move(m));
  }

  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<Scalar> r = a.c_;
    for (auto& x : r) x = -x;
    return UPoly(std::move(r));
  }

  /// (quotient, remainder) of Euclidean division.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("univariate division by zero");
    std::vector<Scalar> rem = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Scalar> q(a.degree() - db + 1);
    for (int i = a.degree(); i >= db; --i) {
      if (is_zero_s(rem[i])) continue;
      Scalar f = rem[i] / b.lead();
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  static bool is_zero_s(const Scalar& s) { return sgn(s) == 0; }
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace detail {

inline int sign_changes(const std::vector<UPoly>& seq, const Scalar& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline Scalar floor_q(const Scalar& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Scalar(q);
}

/// Rational with the smallest denominator in the closed interval [lo, hi].
inline Scalar simplest_between(const Scalar& lo, const Scalar& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  Scalar fl = floor_q(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  Scalar inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return fl + 1 / inner;
}

}  // namespace detail

/// All distinct rational roots of a nonzero polynomial, ascending.
///
/// Real roots of the squarefree part are isolated with a Sturm sequence.
/// A rational root a/b in lowest terms has b dividing the leading coefficient
/// L of the integer-scaled polynomial, so two candidate roots differ by at
/// least 1/L^2; once an isolating interval is narrower than that, the
/// rational of least denominator inside it is the only possible rational
/// root and is tested exactly.
inline std::vector<Scalar> rational_roots(const UPoly& f) {
  if (f.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<Scalar> roots;
  if (f.degree() == 0) return roots;

  UPoly g = divmod(f, gcd(f, f.derivative())).first;
  if (g.degree() == 1) {
    roots.push_back(-g.coeff(0) / g.coeff(1));
    return roots;
  }

  Integer den_lcm = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Scalar scaled_lead = abs(g.lead() * den_lcm);
  Integer lead_int = scaled_lead.get_num();
  Scalar resolution = Scalar(1) / (Scalar(lead_int) * Scalar(lead_int));

  Scalar bound = 0;
  for (int i = 0; i < g.degree(); ++i) bound = std::max(bound, Scalar(abs(g.coeff(i) / g.lead())));
  bound += 1;

  std::vector<UPoly> sturm{g, g.derivative()};
  while (sturm.back().degree() > 0) {
    auto r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
    if (r.is_zero()) break;
    sturm.push_back(-r);
  }

  auto try_root = [&](const Scalar& x) {
    if (sgn(g(x)) == 0) {
      roots.push_back(x);
      return true;
    }
    return false;
  };

  // Split point strictly inside (lo, hi) where g does not vanish. Exact
  // roots met on the way are recorded.
  auto split_point = [&](const Scalar& lo, const Scalar& hi) {
    static const int fractions[][2] = {{1, 2}, {1, 3}, {2, 3}, {1, 5}, {4, 5}, {2, 7}, {5, 7}, {3, 11}};
    for (const auto& fr : fractions) {
      Scalar mid = lo + (hi - lo) * Scalar(fr[0], fr[1]);
      if (!try_root(mid)) return mid;
    }
    throw InternalError("no root-free split point found");
  };

  struct Interval {
    Scalar lo, hi;
    int count;
  };
  std::vector<Interval> work{{-bound, bound, detail::sign_changes(sturm, -bound) - detail::sign_changes(sturm, bound)}};
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    if (iv.count == 0) continue;
    if (iv.count > 1) {
      Scalar mid = split_point(iv.lo, iv.hi);
      int vm = detail::sign_changes(sturm, mid);
      int left = detail::sign_changes(sturm, iv.lo) - vm;
      work.push_back({iv.lo, mid, left});
      work.push_back({mid, iv.hi, iv.count - left});
      continue;
    }
    // One simple root in (lo, hi]; g changes sign across it.
    Scalar lo = iv.lo, hi = iv.hi;
    if (try_root(hi)) continue;
    int slo = sgn(g(lo));
    while (true) {
      Scalar cand = detail::simplest_between(lo, hi);
      if (cand != lo && cand != hi && try_root(cand)) break;
      if (hi - lo < resolution) break;
      Scalar mid = (lo + hi) / 2;
      int sm = sgn(g(mid));
      if (sm == 0) {
        roots.push_back(mid);
        break;
      }
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace bivar

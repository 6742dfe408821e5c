#pragma once

// Node sets, the evaluation map on total-degree spaces, poisedness, Lagrange
// bases, interpolation and error projectors.

#include <bivar/linalg.hpp>
#include <bivar/poly.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bivar {

/// dim of the space of polynomials of total degree <= n.
inline int dim_pi(int n) {
  if (n < 0) throw DomainError("dim_pi: negative degree " + std::to_string(n));
  return (n + 1) * (n + 2) / 2;
}

/// Ordered list of pairwise distinct points. Index order is significant for
/// every matrix and basis built from the set; equality ignores order.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::vector<Point> sorted = pts_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw DomainError("duplicate node " + to_string(*dup));
  }

  const std::vector<Point>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  std::optional<std::size_t> index_of(const Point& p) const {
    auto it = std::find(pts_.begin(), pts_.end(), p);
    if (it == pts_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - pts_.begin());
  }
  bool contains(const Point& p) const { return index_of(p).has_value(); }

  friend bool operator==(const NodeSet& a, const NodeSet& b) {
    if (a.size() != b.size()) return false;
    auto sa = a.pts_, sb = b.pts_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

 private:
  std::vector<Point> pts_;
};

/// a followed by b; the sets must be disjoint.
inline NodeSet concat(const NodeSet& a, const NodeSet& b) {
  std::vector<Point> pts = a.points();
  pts.insert(pts.end(), b.begin(), b.end());
  return NodeSet(std::move(pts));
}

/// Nodes of a not in b, order of a kept.
inline NodeSet difference(const NodeSet& a, const NodeSet& b) {
  std::vector<Point> pts;
  for (const auto& p : a)
    if (!b.contains(p)) pts.push_back(p);
  return NodeSet(std::move(pts));
}

/// Rows are nodes, columns the monomials of degree <= n in canonical order.
inline QMatrix vandermonde(const NodeSet& y, int n) {
  auto monos = monomials_up_to(n);
  QMatrix v(y.size(), monos.size());
  for (std::size_t r = 0; r < y.size(); ++r) {
    std::vector<Scalar> p1(n + 1), p2(n + 1);
    p1[0] = p2[0] = 1;
    for (int i = 1; i <= n; ++i) {
      p1[i] = p1[i - 1] * y[r].x1;
      p2[i] = p2[i - 1] * y[r].x2;
    }
    for (std::size_t c = 0; c < monos.size(); ++c) v(r, c) = p1[monos[c].e1] * p2[monos[c].e2];
  }
  return v;
}

/// Every node admits a fundamental polynomial of degree <= n.
inline bool is_independent(const NodeSet& y, int n) {
  if (y.empty()) return true;
  if (n < 0) return false;
  if (static_cast<int>(y.size()) > dim_pi(n)) return false;
  return rank(vandermonde(y, n)) == y.size();
}

inline bool is_poised(const NodeSet& y, int n) {
  if (n < 0) return y.empty();
  if (static_cast<int>(y.size()) != dim_pi(n)) return false;
  return rank(vandermonde(y, n)) == y.size();
}

/// Fundamental polynomials of a poised set; polys[i] belongs to nodes[i].
struct LagrangeBasis {
  int degree = 0;
  NodeSet nodes;
  std::vector<Poly> polys;

  const Poly& operator[](std::size_t i) const { return polys[i]; }
  const Poly& at(const Point& p) const {
    auto i = nodes.index_of(p);
    if (!i) throw DomainError("node " + to_string(p) + " not in basis");
    return polys[*i];
  }
  std::size_t size() const { return polys.size(); }
};

/// Polynomial with coefficient vector c over the monomials of degree <= n.
inline Poly poly_from_coeffs(const std::vector<Monomial>& monos, const QMatrix& c, std::size_t col) {
  Poly p;
  for (std::size_t r = 0; r < monos.size(); ++r) p.add_term(monos[r], c(r, col));
  return p;
}

/// Solves V C = I once; column j of C holds the coefficients of l_j.
inline LagrangeBasis lagrange_basis(const NodeSet& y, int n) {
  if (n < 0) {
    if (!y.empty()) throw DomainError("not poised: nonempty set for negative degree");
    return {n, y, {}};
  }
  int dim = dim_pi(n);
  if (static_cast<int>(y.size()) != dim)
    throw DomainError("not poised: " + std::to_string(y.size()) + " nodes but dim Pi_" + std::to_string(n) +
                      " = " + std::to_string(dim));
  QMatrix v = vandermonde(y, n);
  auto c = solve(v, QMatrix::identity(y.size()));
  if (!c) {
    std::size_t r = rank(v);
    throw DomainError("not poised: Vandermonde rank " + std::to_string(r) + " < " + std::to_string(y.size()) +
                      " (rank defect " + std::to_string(y.size() - r) + ")");
  }
  auto monos = monomials_up_to(n);
  LagrangeBasis out{n, y, {}};
  out.polys.reserve(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) out.polys.push_back(poly_from_coeffs(monos, *c, j));
  return out;
}

/// Checks l_y(y') = delta exactly.
inline bool kronecker_holds(const LagrangeBasis& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.degree >= 0 && basis[i].degree() > basis.degree) return false;
    for (std::size_t j = 0; j < basis.nodes.size(); ++j)
      if (evaluate(basis[i], basis.nodes[j]) != (i == j ? 1 : 0)) return false;
  }
  return true;
}

inline Poly interpolate(const LagrangeBasis& basis, const std::vector<Scalar>& values) {
  if (values.size() != basis.size())
    throw DomainError("interpolate: expected " + std::to_string(basis.size()) + " values, got " +
                      std::to_string(values.size()));
  Poly out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!is_zero(values[i])) out += basis[i] * values[i];
  return out;
}

inline Poly interpolate(const NodeSet& y, int n, const std::vector<Scalar>& values) {
  return interpolate(lagrange_basis(y, n), values);
}

inline Poly interpolate(const NodeSet& y, int n, const std::map<Point, Scalar>& values) {
  std::vector<Scalar> v;
  for (const auto& p : y) {
    auto it = values.find(p);
    if (it == values.end()) throw DomainError("interpolate: missing value for node " + to_string(p));
    v.push_back(it->second);
  }
  return interpolate(y, n, v);
}

/// L_Y[p]: interpolant of the values of p on the nodes.
inline Poly interpolant_of(const LagrangeBasis& basis, const Poly& p) {
  std::vector<Scalar> values;
  values.reserve(basis.size());
  for (const auto& y : basis.nodes) values.push_back(evaluate(p, y));
  return interpolate(basis, values);
}

/// E_Y[p] = p - L_Y[p]; vanishes on Y.
inline Poly error_operator(const LagrangeBasis& basis, const Poly& p) { return p - interpolant_of(basis, p); }

inline Poly error_operator(const NodeSet& y, int n, const Poly& p) {
  return error_operator(lagrange_basis(y, n), p);
}

}  // namespace bivar

#pragma once

// H-bases of the vanishing ideal I(Y) of a poised set Y of degree n. Any n+2
// polynomials spanning Pi_{n+1} ∩ I(Y) form one, and reduction modulo such a
// basis splits every polynomial as an ideal member plus its interpolant.

#include <bivar/berzolari_radon.hpp>
#include <bivar/linalg.hpp>
#include <bivar/nodes.hpp>
#include <bivar/poly.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bivar {

enum class HBasisOrigin { BRExtension, ErrorMonomials, Lattice, Factorizable, Reconstructed, Witness };

inline std::string to_string(HBasisOrigin o) {
  switch (o) {
    case HBasisOrigin::BRExtension: return "BR-extension";
    case HBasisOrigin::ErrorMonomials: return "error-monomials";
    case HBasisOrigin::Lattice: return "lattice";
    case HBasisOrigin::Factorizable: return "factorizable";
    case HBasisOrigin::Reconstructed: return "reconstructed";
    case HBasisOrigin::Witness: return "witness";
  }
  return "unknown";
}

struct HBasis {
  int degree = 0;
  std::vector<Poly> elements;
  HBasisOrigin origin = HBasisOrigin::Reconstructed;

  std::size_t size() const { return elements.size(); }
  const Poly& operator[](std::size_t i) const { return elements[i]; }
};

/// Coefficients of `polys` as columns, rows indexed by `monos`.
inline QMatrix coefficient_matrix(const std::vector<Poly>& polys, const std::vector<Monomial>& monos) {
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t i = 0; i < monos.size(); ++i) row_of[monos[i]] = i;
  QMatrix m(monos.size(), polys.size(), Scalar(0));
  for (std::size_t j = 0; j < polys.size(); ++j)
    for (const auto& [mono, c] : polys[j].terms()) {
      auto it = row_of.find(mono);
      if (it == row_of.end()) throw DomainError("coefficient_matrix: monomial outside the given range");
      m(it->second, j) = c;
    }
  return m;
}

inline int max_degree(const std::vector<Poly>& polys) {
  int d = 0;
  for (const auto& p : polys)
    if (p.degree()) d = std::max(d, *p.degree());
  return d;
}

/// M with targets[i] = sum_j M(i, j) basis[j], or std::nullopt if some
/// target is outside the span. Unique when the basis is independent.
inline std::optional<QMatrix> express_in(const std::vector<Poly>& targets, const std::vector<Poly>& basis) {
  auto monos = monomials_up_to(std::max(max_degree(targets), max_degree(basis)));
  auto x = solve(coefficient_matrix(basis, monos), coefficient_matrix(targets, monos));
  if (!x) return std::nullopt;
  return x->transposed();
}

/// rows of M applied to polys: out[i] = sum_j M(i, j) polys[j].
inline std::vector<Poly> combine(const QMatrix& m, const std::vector<Poly>& polys) {
  if (m.cols() != polys.size()) throw DomainError("combine: dimension mismatch");
  std::vector<Poly> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) out[i] += polys[j] * m(i, j);
  return out;
}

/// True iff P ⊂ Pi_{n+1} ∩ I(Y) and P spans that (n+2)-dimensional space.
inline bool is_hbasis(const std::vector<Poly>& elements, const NodeSet& yn, int n) {
  if (n < 0 || !is_poised(yn, n)) return false;
  for (const auto& p : elements) {
    if (p.degree() > n + 1) return false;
    for (const auto& y : yn)
      if (!is_zero(evaluate(p, y))) return false;
  }
  return rank(coefficient_matrix(elements, monomials_up_to(n + 1))) == static_cast<std::size_t>(n + 2);
}

inline bool is_hbasis(const HBasis& h, const NodeSet& yn) { return is_hbasis(h.elements, yn, h.degree); }

/// (l_{t,Y_{n+1}} : t in Y_{n+1} \ Y_n) in the node order of Y_{n+1}.
inline HBasis hbasis_from_extension(const NodeSet& yn, const NodeSet& yn1, int n) {
  if (!is_poised(yn, n)) throw DomainError("hbasis_from_extension: Y_n is not poised for degree " + std::to_string(n));
  for (const auto& y : yn)
    if (!yn1.contains(y)) throw DomainError("hbasis_from_extension: node " + to_string(y) + " of Y_n missing from Y_{n+1}");
  if (!is_poised(yn1, n + 1))
    throw DomainError("hbasis_from_extension: Y_{n+1} is not poised for degree " + std::to_string(n + 1));
  auto basis = lagrange_basis(yn1, n + 1);
  HBasis h{n, {}, HBasisOrigin::BRExtension};
  for (std::size_t i = 0; i < yn1.size(); ++i)
    if (!yn.contains(yn1[i])) h.elements.push_back(basis[i]);
  if (!is_hbasis(h, yn)) throw InternalError("hbasis_from_extension: result is not an H-basis");
  return h;
}

inline HBasis hbasis_from_extension(const BRExtension& ext) {
  HBasis h{ext.base.degree, {}, HBasisOrigin::BRExtension};
  for (std::size_t i = 0; i < ext.step.points.size(); ++i) h.elements.push_back(ext.h(i));
  return h;
}

/// h_j = E_Y[x1^{n+1-j} x2^j], j = 0..n+1.
inline HBasis hbasis_error_monomials(const LagrangeBasis& basis) {
  const int n = basis.degree;
  if (n < 0) throw DomainError("hbasis_error_monomials: negative degree");
  HBasis h{n, {}, HBasisOrigin::ErrorMonomials};
  for (auto m : monomials_of_degree(n + 1)) h.elements.push_back(error_operator(basis, Poly::term(1, m)));
  return h;
}

inline HBasis hbasis_error_monomials(const NodeSet& yn, int n) { return hbasis_error_monomials(lagrange_basis(yn, n)); }

struct Reduction {
  std::vector<Poly> coefficients;
  Poly remainder;
};

/// Reduction modulo a fixed H-basis. The basis is first changed to g = B h
/// whose leading forms are exactly the monomials of degree n+1; each step then
/// cancels the whole leading form of the working polynomial.
class Reducer {
 public:
  explicit Reducer(const HBasis& h) : h_(h) {
    const int n = h.degree;
    auto top = monomials_of_degree(n + 1);
    if (h.size() != top.size())
      throw DomainError("reduce: H-basis of degree " + std::to_string(n) + " needs " + std::to_string(top.size()) +
                        " elements, got " + std::to_string(h.size()));
    QMatrix c(top.size(), top.size(), Scalar(0));
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h[j].degree() > n + 1) throw DomainError("reduce: element " + std::to_string(j) + " has degree > n+1");
      for (std::size_t a = 0; a < top.size(); ++a) c(j, a) = h[j].coeff(top[a]);
    }
    auto b = inverse(c);
    if (!b) throw DomainError("reduce: leading forms of the basis are dependent, not an H-basis");
    b_ = *b;
    g_ = combine(b_, h.elements);
  }

  Reduction operator()(const Poly& p) const {
    const int n = h_.degree;
    const unsigned top = static_cast<unsigned>(n + 1);
    std::vector<Poly> cg(g_.size());
    Poly r = p;
    while (r.degree() && *r.degree() > n) {
      const int d = *r.degree();
      const Poly lead = r.homogeneous(d);
      for (const auto& [mono, c] : lead.terms()) {
        unsigned a1 = std::min(mono.e1, top);
        unsigned a = top - a1;
        Monomial q{mono.e1 - a1, mono.e2 - a};
        cg[a].add_term(q, c);
        r -= g_[a].shifted(q, c);
      }
      if (r.degree() && *r.degree() >= d) throw InternalError("reduce: leading form did not cancel");
    }
    Reduction out{std::vector<Poly>(h_.size()), r};
    for (std::size_t a = 0; a < cg.size(); ++a)
      for (std::size_t j = 0; j < h_.size(); ++j)
        if (!cg[a].is_zero() && !is_zero(b_(a, j))) out.coefficients[j] += cg[a] * b_(a, j);
    return out;
  }

 private:
  HBasis h_;
  QMatrix b_;
  std::vector<Poly> g_;
};

/// p = sum_j c_j h_j + r with deg c_j <= deg p - (n+1) and r in Pi_n.
inline Reduction reduce(const Poly& p, const HBasis& h) { return Reducer(h)(p); }

/// Membership by reduction, cross-checked against evaluation on Y.
inline bool ideal_membership(const Poly& p, const NodeSet& yn, const HBasis& h) {
  bool by_reduction = reduce(p, h).remainder.is_zero();
  bool by_evaluation = true;
  for (const auto& y : yn) by_evaluation = by_evaluation && is_zero(evaluate(p, y));
  if (by_reduction != by_evaluation)
    throw InternalError("ideal_membership: reduction and evaluation disagree, H is not an H-basis of I(Y)");
  return by_reduction;
}

/// Bounded certificate that sum_t c_t(k) h_t = 0 with deg c_t <= bound forces
/// c = 0: the family {k^j h_t} is linearly independent.
inline bool check_rk_independence(const std::vector<Poly>& h, const LinearForm& k, int bound) {
  if (bound < 0) throw DomainError("check_rk_independence: negative degree bound");
  if (k.is_constant()) throw DomainError("check_rk_independence: constant k");
  std::vector<Poly> family;
  Poly kp = k.to_poly();
  for (const auto& ht : h) {
    Poly f = ht;
    for (int j = 0; j <= bound; ++j) {
      family.push_back(f);
      f *= kp;
    }
  }
  auto monos = monomials_up_to(max_degree(family));
  return rank(coefficient_matrix(family, monos)) == family.size();
}

inline bool check_rk_independence(const HBasis& h, const LinearForm& k, std::optional<int> bound = std::nullopt) {
  return check_rk_independence(h.elements, k, bound ? *bound : h.degree + 1);
}

/// M with to = M from, both bases of the same space; std::nullopt otherwise.
inline std::optional<QMatrix> basis_change(const HBasis& from, const HBasis& to) {
  if (from.size() != to.size()) return std::nullopt;
  auto m = express_in(to.elements, from.elements);
  if (!m || !inverse(*m)) return std::nullopt;
  return m;
}

}  // namespace bivar

#pragma once

// Linear syzygies of H-bases. For an H-basis H of I(Y), Y poised of degree n,
// the syzygies with entries in Pi_1 form a space of dimension n+1; stacked as
// rows they give an (n+1) x (n+2) matrix S with S H = 0 whose signed maximal
// minors recover H up to one scalar.

#include <bivar/berzolari_radon.hpp>
#include <bivar/hbasis.hpp>
#include <bivar/linalg.hpp>
#include <bivar/poly.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bivar {

using Syzygy = std::vector<Poly>;
using SyzygyMatrix = Matrix<Poly>;

inline bool annihilates(const Syzygy& s, const std::vector<Poly>& h) {
  if (s.size() != h.size()) throw DomainError("annihilates: syzygy length differs from basis size");
  Poly sum;
  for (std::size_t i = 0; i < h.size(); ++i) sum += s[i] * h[i];
  return sum.is_zero();
}

inline bool annihilates(const SyzygyMatrix& s, const std::vector<Poly>& h) {
  for (std::size_t r = 0; r < s.rows(); ++r)
    if (!annihilates(s.row(r), h)) return false;
  return true;
}

/// Scalar matrix as a constant polynomial matrix.
inline SyzygyMatrix lift(const QMatrix& q) {
  SyzygyMatrix out(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) out(i, j) = Poly(q(i, j));
  return out;
}

inline SyzygyMatrix from_rows(const std::vector<Syzygy>& rows, std::size_t cols) {
  SyzygyMatrix s(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("syzygy matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) s(r, c) = rows[r][c];
  }
  return s;
}

/// Coefficients of a row of linear polynomials, three per entry in the order
/// (x1, x2, 1).
inline std::vector<Scalar> linear_vector(const Syzygy& row) {
  std::vector<Scalar> v;
  v.reserve(3 * row.size());
  for (const auto& p : row) {
    if (p.degree() > 1) throw DomainError("syzygy entry of degree > 1: " + to_string(p));
    v.push_back(p.coeff({1, 0}));
    v.push_back(p.coeff({0, 1}));
    v.push_back(p.coeff({0, 0}));
  }
  return v;
}

inline Syzygy from_linear_vector(const std::vector<Scalar>& v) {
  Syzygy s(v.size() / 3);
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i].add_term({1, 0}, v[3 * i]);
    s[i].add_term({0, 1}, v[3 * i + 1]);
    s[i].add_term({0, 0}, v[3 * i + 2]);
  }
  return s;
}

/// Unique reduced row echelon form of the coefficient vectors; zero rows are
/// dropped.
inline SyzygyMatrix canonical_form(const std::vector<std::vector<Scalar>>& vectors, std::size_t cols) {
  if (vectors.empty()) return SyzygyMatrix(0, cols);
  QMatrix m(vectors.size(), 3 * cols);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < 3 * cols; ++c) m(r, c) = vectors[r][c];
  Echelon e = row_reduce(m);
  std::vector<Syzygy> rows;
  for (std::size_t r = 0; r < e.rank(); ++r) rows.push_back(from_linear_vector(e.rref.row(r)));
  return from_rows(rows, cols);
}

inline SyzygyMatrix canonical_form(const SyzygyMatrix& s) {
  std::vector<std::vector<Scalar>> vectors;
  for (std::size_t r = 0; r < s.rows(); ++r) vectors.push_back(linear_vector(s.row(r)));
  return canonical_form(vectors, s.cols());
}

/// Basis of S_1(H) in canonical form, from the nullspace of the linear system
/// sum_i (a_i x1 + b_i x2 + c_i) h_i = 0.
inline std::vector<Syzygy> linear_syzygies(const std::vector<Poly>& h) {
  std::vector<Poly> shifted;
  shifted.reserve(3 * h.size());
  const Poly x1 = Poly::x1(), x2 = Poly::x2();
  for (const auto& hi : h) {
    shifted.push_back(x1 * hi);
    shifted.push_back(x2 * hi);
    shifted.push_back(hi);
  }
  auto ns = nullspace(coefficient_matrix(shifted, monomials_up_to(max_degree(shifted))));
  SyzygyMatrix canon = canonical_form(ns, h.size());
  std::vector<Syzygy> out;
  for (std::size_t r = 0; r < canon.rows(); ++r) {
    out.push_back(canon.row(r));
    if (!annihilates(out.back(), h)) throw InternalError("linear_syzygies: nullspace vector is not a syzygy");
  }
  return out;
}

inline std::vector<Syzygy> linear_syzygies(const HBasis& h) { return linear_syzygies(h.elements); }

/// S_1(H) stacked as a matrix; requires dim S_1(H) = n+1.
inline SyzygyMatrix syzygy_matrix(const HBasis& h) {
  auto rows = linear_syzygies(h);
  if (static_cast<int>(rows.size()) != h.degree + 1)
    throw DomainError("syzygy_matrix: dim S_1(H) = " + std::to_string(rows.size()) + ", expected n+1 = " +
                      std::to_string(h.degree + 1));
  return from_rows(rows, h.size());
}

/// Explicit syzygy Sigma_{t_i, t_j} of the H-basis (l_{t,Y_{n+1}} : t in T)
/// of a BR extension:
///
///   sigma_s   = -k c_s,                                 s != t_i, t_j,
///   sigma_t_i = -k c_t_i - d_t_i(t_i) (m - m(t_i)),
///   sigma_t_j = -k c_t_j + d_t_j(t_j) (m - m(t_j)),
///
/// c_s = sum_y (d_t_i(y) (m(s) - m(t_i)) - d_t_j(y) (m(s) - m(t_j))) l_y(s) / k(y).
/// Expanding the closed form of l_t shows the k c terms carry a minus sign.
inline Syzygy explicit_br_syzygy(const BRExtension& ext, std::size_t i, std::size_t j) {
  const auto& tpts = ext.step.points;
  const auto& yn = ext.base.nodes;
  if (i >= tpts.size() || j >= tpts.size()) throw DomainError("explicit_br_syzygy: point index out of range");
  Syzygy sigma(tpts.size());
  if (i == j) return sigma;

  const LinearForm& k = ext.step.k;
  const LinearForm& m = ext.step.m;
  const Point& ti = tpts[i];
  const Point& tj = tpts[j];
  Poly di = d_poly(tpts, m, ti), dj = d_poly(tpts, m, tj);
  std::vector<Scalar> wi(yn.size()), wj(yn.size());
  for (std::size_t y = 0; y < yn.size(); ++y) {
    Scalar ky = k(yn[y]);
    wi[y] = evaluate(di, yn[y]) / ky;
    wj[y] = evaluate(dj, yn[y]) / ky;
  }
  const Poly kp = k.to_poly();
  for (std::size_t s = 0; s < tpts.size(); ++s) {
    const Point& ts = tpts[s];
    Scalar ai = m(ts) - m(ti), aj = m(ts) - m(tj);
    Scalar c = 0;
    for (std::size_t y = 0; y < yn.size(); ++y) c += (wi[y] * ai - wj[y] * aj) * evaluate(ext.base[y], ts);
    sigma[s] = kp * (-c);
  }
  sigma[i] -= (m - m(ti)).to_poly() * evaluate(di, ti);
  sigma[j] += (m - m(tj)).to_poly() * evaluate(dj, tj);
  if (!annihilates(sigma, hbasis_from_extension(ext).elements))
    throw InternalError("explicit_br_syzygy: result does not annihilate H");
  return sigma;
}

/// Rows Sigma_{t_0, t_i}, i = 1..n+1.
inline SyzygyMatrix br_syzygy_matrix(const BRExtension& ext) {
  std::vector<Syzygy> rows;
  for (std::size_t i = 1; i < ext.step.points.size(); ++i) rows.push_back(explicit_br_syzygy(ext, 0, i));
  return from_rows(rows, ext.step.points.size());
}

/// Rank over the field of rational functions.
inline std::size_t rank_rational(const SyzygyMatrix& s) { return bareiss_rank(s); }

/// det of S with column j removed.
inline Poly minor(const SyzygyMatrix& s, std::size_t j) {
  if (s.cols() != s.rows() + 1) throw DomainError("minor: matrix must be (r) x (r+1)");
  if (j >= s.cols()) throw DomainError("minor: column index " + std::to_string(j) + " out of range");
  if (s.rows() == 0) return Poly(1);
  SyzygyMatrix sub(s.rows(), s.rows());
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0, k = 0; c < s.cols(); ++c)
      if (c != j) sub(r, k++) = s(r, c);
  return bareiss_determinant(sub);
}

/// h_j = (-1)^j det S_j, the basis determined by S with w = 1.
inline HBasis hbasis_from_minors(const SyzygyMatrix& s) {
  HBasis h{static_cast<int>(s.rows()) - 1, {}, HBasisOrigin::Reconstructed};
  for (std::size_t j = 0; j < s.cols(); ++j) {
    Poly mj = minor(s, j);
    h.elements.push_back(j % 2 ? -mj : mj);
  }
  return h;
}

struct ReconstructionResult {
  Scalar w;
  HBasis basis;
};

/// The scalar w with reference_j = (-1)^j w det S_j for every j.
inline ReconstructionResult reconstruct_hbasis(const SyzygyMatrix& s, const HBasis& reference) {
  if (s.cols() != reference.size() || s.rows() + 1 != s.cols())
    throw DomainError("reconstruct_hbasis: matrix shape does not match the basis");
  if (rank_rational(s) != s.rows()) throw DomainError("reconstruct_hbasis: syzygy matrix is rank deficient");
  if (!annihilates(s, reference.elements)) throw DomainError("reconstruct_hbasis: matrix does not annihilate the basis");
  HBasis unit = hbasis_from_minors(s);
  std::optional<Scalar> w;
  for (std::size_t j = 0; j < s.cols() && !w; ++j) {
    if (reference[j].is_zero() || unit[j].is_zero()) continue;
    const auto& [mono, c] = unit[j].leading_term();
    w = reference[j].coeff(mono) / c;
  }
  if (!w || is_zero(*w)) throw DomainError("reconstruct_hbasis: no nonzero scalar fits");
  ReconstructionResult out{*w, {reference.degree, {}, HBasisOrigin::Reconstructed}};
  for (std::size_t j = 0; j < s.cols(); ++j) {
    out.basis.elements.push_back(unit[j] * *w);
    if (out.basis.elements.back() != reference[j])
      throw DomainError("reconstruct_hbasis: no single w fits column " + std::to_string(j));
  }
  return out;
}

struct Equivalence {
  QMatrix a;
  QMatrix b;
};

/// Nonsingular scalar A, B with s2 = A s B, normalized so the first nonzero
/// entry of A is 1; std::nullopt when no such pair exists.
inline std::optional<Equivalence> equivalence_transform(const SyzygyMatrix& s, const SyzygyMatrix& s2) {
  if (s.rows() != s2.rows() || s.cols() != s2.cols()) return std::nullopt;
  if (rank_rational(s) != s.rows() || rank_rational(s2) != s2.rows())
    throw DomainError("equivalence_transform: both matrices need full row rank");
  HBasis h = hbasis_from_minors(s), h2 = hbasis_from_minors(s2);
  // H = B H2 turns S H = 0 into (S B) H2 = 0, so the rows of S B are
  // syzygies of H2 and therefore combinations A' S2 of its rows.
  auto b = express_in(h.elements, h2.elements);
  if (!b || !inverse(*b)) return std::nullopt;
  SyzygyMatrix sb = s * lift(*b);

  const std::size_t len = 3 * s.cols();
  QMatrix rows2(len, s2.rows()), target(len, sb.rows());
  for (std::size_t r = 0; r < s2.rows(); ++r) {
    auto v = linear_vector(s2.row(r));
    for (std::size_t c = 0; c < len; ++c) rows2(c, r) = v[c];
  }
  for (std::size_t r = 0; r < sb.rows(); ++r) {
    auto v = linear_vector(sb.row(r));
    for (std::size_t c = 0; c < len; ++c) target(c, r) = v[c];
  }
  auto x = solve(rows2, target);
  if (!x) return std::nullopt;
  auto a = inverse(x->transposed());
  if (!a) return std::nullopt;

  Equivalence eq{*a, *b};
  Scalar lead = 0;
  for (std::size_t i = 0; i < eq.a.rows() && is_zero(lead); ++i)
    for (std::size_t j = 0; j < eq.a.cols() && is_zero(lead); ++j) lead = eq.a(i, j);
  for (std::size_t i = 0; i < eq.a.rows(); ++i)
    for (std::size_t j = 0; j < eq.a.cols(); ++j) eq.a(i, j) /= lead;
  for (std::size_t i = 0; i < eq.b.rows(); ++i)
    for (std::size_t j = 0; j < eq.b.cols(); ++j) eq.b(i, j) *= lead;

  if (!(lift(eq.a) * s * lift(eq.b) == s2)) throw InternalError("equivalence_transform: A S B does not reproduce the target");
  return eq;
}

}  // namespace bivar

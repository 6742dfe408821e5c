#pragma once

// Maximal lines of a poised set Y of degree n, i.e. lines holding n+1 nodes.
// They are found geometrically by counting, and algebraically as columns of
// the shape k(x) v in a syzygy matrix of some H-basis of I(Y).

#include <bivar/berzolari_radon.hpp>
#include <bivar/factor.hpp>
#include <bivar/hbasis.hpp>
#include <bivar/nodes.hpp>
#include <bivar/syzygy.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bivar {

struct LineIncidence {
  LinearForm line;  // normalized
  NodeSet nodes_on_line;
  std::size_t count = 0;
};

/// Every line through at least two nodes, keyed by its normalized equation.
inline std::vector<LineIncidence> line_incidences(const NodeSet& y) {
  std::map<LinearForm, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j) {
      LinearForm k = LinearForm::through(y[i], y[j]).normalized();
      if (seen.count(k)) continue;
      auto& on = seen[k];
      for (std::size_t r = 0; r < y.size(); ++r)
        if (is_zero(k(y[r]))) on.push_back(r);
    }
  std::vector<LineIncidence> out;
  for (const auto& [k, idx] : seen) {
    std::vector<Point> pts;
    for (auto r : idx) pts.push_back(y[r]);
    out.push_back({k, NodeSet(std::move(pts)), idx.size()});
  }
  return out;
}

/// Lines holding exactly n+1 nodes.
inline std::vector<LineIncidence> geometric_maximal_lines(const NodeSet& y, int n) {
  std::vector<LineIncidence> out;
  for (auto& inc : line_incidences(y))
    if (static_cast<int>(inc.count) == n + 1) out.push_back(std::move(inc));
  return out;
}

/// The line k when every nonzero entry of `entries` is a multiple of the same
/// nonconstant linear polynomial k.
inline std::optional<LinearForm> common_line(const std::vector<Poly>& entries) {
  std::optional<LinearForm> k;
  for (const auto& e : entries) {
    if (e.is_zero()) continue;
    if (e.degree() != 1) return std::nullopt;
    LinearForm f = LinearForm::from_poly(e);
    if (f.is_constant()) return std::nullopt;
    LinearForm nf = f.normalized();
    if (!k) {
      k = nf;
    } else if (!(*k == nf)) {
      return std::nullopt;
    }
  }
  return k;
}

struct DetectedLine {
  std::size_t column;
  LinearForm line;  // normalized
};

/// Columns of the shape k(x) v with k nonconstant. Row operations keep this
/// shape, so the answer depends only on the column basis.
inline std::vector<DetectedLine> column_line_detect(const SyzygyMatrix& s) {
  if (rank_rational(s) != s.rows()) throw DomainError("column_line_detect: syzygy matrix is rank deficient");
  std::vector<DetectedLine> out;
  for (std::size_t c = 0; c < s.cols(); ++c) {
    std::vector<Poly> col;
    for (std::size_t r = 0; r < s.rows(); ++r) col.push_back(s(r, c));
    if (auto k = common_line(col)) out.push_back({c, *k});
  }
  return out;
}

struct Witness {
  LinearForm line;
  /// g_j = k h_{t_j}, j = 0..n, and g_{n+1} = -(m - m(t_0)) h_{t_0}.
  HBasis basis;
  /// Block matrix whose last column is k e_{n+1}.
  SyzygyMatrix matrix;
  /// Extension of Y \ K by the nodes on K.
  BRExtension extension;
};

/// H-basis and syzygy matrix certifying that K is a maximal line of Y.
inline Witness witness_matrix(const NodeSet& yn, int n, const LinearForm& k) {
  if (n < 0) throw DomainError("witness_matrix: negative degree");
  if (k.is_constant()) throw DomainError("witness_matrix: constant line equation");
  if (!is_poised(yn, n)) throw DomainError("witness_matrix: node set is not poised for degree " + std::to_string(n));
  std::vector<Point> on, off;
  for (const auto& y : yn) (is_zero(k(y)) ? on : off).push_back(y);
  if (static_cast<int>(on.size()) != n + 1)
    throw DomainError("witness_matrix: line holds " + std::to_string(on.size()) + " nodes, a maximal line needs n+1 = " +
                      std::to_string(n + 1));

  NodeSet rest(std::move(off));
  LagrangeBasis base{-1, NodeSet(), {}};
  if (n > 0) {
    try {
      base = lagrange_basis(rest, n - 1);
    } catch (const DomainError&) {
      throw InternalError("witness_matrix: Y minus a maximal line is not poised");
    }
  }
  BRExtension ext = br_extend(base, BRStep::make(k, NodeSet(std::move(on))));
  const Poly kp = k.to_poly();
  const LinearForm& m = ext.step.m;
  const Point& t0 = ext.step.points[0];

  HBasis g{n, {}, HBasisOrigin::Witness};
  for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) g.elements.push_back(kp * ext.h(j));
  g.elements.push_back(-((m - m(t0)).to_poly() * ext.h(0)));

  const std::size_t cols = static_cast<std::size_t>(n) + 2;
  SyzygyMatrix w(cols - 1, cols, Poly());
  if (n > 0) {
    SyzygyMatrix upper = br_syzygy_matrix(ext);
    for (std::size_t r = 0; r < upper.rows(); ++r)
      for (std::size_t c = 0; c < upper.cols(); ++c) w(r, c) = upper(r, c);
  }
  w(cols - 2, 0) = (m - m(t0)).to_poly();
  w(cols - 2, cols - 1) = kp;

  if (!annihilates(w, g.elements)) throw InternalError("witness_matrix: matrix does not annihilate the witness basis");
  if (rank_rational(w) != cols - 1) throw InternalError("witness_matrix: matrix is rank deficient");
  return {k, std::move(g), std::move(w), std::move(ext)};
}

struct LineTransform {
  LinearForm line;  // normalized
  std::size_t column;
  /// Column transform: S B has column `column` equal to k v.
  QMatrix b;
  /// Row transform: A S B is the witness matrix, with column k e_{n+1}.
  QMatrix a;
  SyzygyMatrix transformed;
};

/// For each geometric maximal line of Y, the scalar transforms turning S into
/// the witness matrix of that line. S must be a full-rank linear syzygy matrix
/// of an H-basis of I(Y).
inline std::vector<LineTransform> transform_search(const SyzygyMatrix& s, const NodeSet& y, int n) {
  if (s.rows() != static_cast<std::size_t>(n + 1) || s.cols() != static_cast<std::size_t>(n + 2))
    throw DomainError("transform_search: matrix must be (n+1) x (n+2)");
  if (rank_rational(s) != s.rows()) throw DomainError("transform_search: syzygy matrix is rank deficient");
  HBasis h = hbasis_from_minors(s);
  if (!is_hbasis(h, y)) throw DomainError("transform_search: matrix is not a syzygy matrix of an H-basis of I(Y)");

  std::vector<LineTransform> out;
  const std::size_t len = 3 * s.cols();
  for (const auto& inc : geometric_maximal_lines(y, n)) {
    Witness wit = witness_matrix(y, n, inc.line);
    // H = B G, so S B annihilates G and equals A' W for a scalar A'.
    auto b = express_in(h.elements, wit.basis.elements);
    if (!b) throw InternalError("transform_search: witness basis does not span the ideal");
    SyzygyMatrix sb = s * lift(*b);
    QMatrix wv(len, wit.matrix.rows()), target(len, sb.rows());
    for (std::size_t r = 0; r < wit.matrix.rows(); ++r) {
      auto v = linear_vector(wit.matrix.row(r));
      for (std::size_t c = 0; c < len; ++c) wv(c, r) = v[c];
    }
    for (std::size_t r = 0; r < sb.rows(); ++r) {
      auto v = linear_vector(sb.row(r));
      for (std::size_t c = 0; c < len; ++c) target(c, r) = v[c];
    }
    auto x = solve(wv, target);
    if (!x) throw InternalError("transform_search: S B is not a row transform of the witness matrix");
    auto a = inverse(x->transposed());
    if (!a) throw InternalError("transform_search: singular row transform");
    SyzygyMatrix asb = lift(*a) * sb;
    if (!(asb == wit.matrix)) throw InternalError("transform_search: A S B differs from the witness matrix");

    const std::size_t col = s.cols() - 1;
    std::vector<Poly> column;
    for (std::size_t r = 0; r < sb.rows(); ++r) column.push_back(sb(r, col));
    auto k = common_line(column);
    if (!k || !(*k == inc.line)) throw InternalError("transform_search: transformed column is not k v");
    out.push_back({inc.line, col, *b, *a, std::move(asb)});
  }
  return out;
}

/// Every fundamental polynomial is a product of n linear factors.
inline bool is_gc_set(const LagrangeBasis& basis) {
  for (const auto& l : basis.polys) {
    auto f = linear_factors(l);
    if (!f.complete() || static_cast<int>(f.factors.size()) != basis.degree) return false;
  }
  return true;
}

inline bool is_gc_set(const NodeSet& y, int n) { return is_gc_set(lagrange_basis(y, n)); }

}  // namespace bivar

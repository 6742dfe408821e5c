#pragma once

// GC configurations with closed-form Lagrange bases: natural lattices
// (pairwise intersections of n+2 lines in general position) and generalized
// principal lattices (triple intersections of three pencils of n+1 lines).
// Also the H-basis made of products of linear factors that every GC set has.

#include <bivar/berzolari_radon.hpp>
#include <bivar/factor.hpp>
#include <bivar/hbasis.hpp>
#include <bivar/maximal_line.hpp>
#include <bivar/nodes.hpp>
#include <bivar/random.hpp>
#include <bivar/syzygy.hpp>

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bivar {

struct Lattice {
  NodeSet nodes;
  LagrangeBasis basis;
  /// Index label of each node: (i, j) for natural lattices, beta for GPLs.
  std::vector<std::vector<int>> labels;
};

namespace detail {

inline std::string label_string(const std::vector<int>& label) {
  std::string s = "(";
  for (std::size_t i = 0; i < label.size(); ++i) s += (i ? "," : "") + std::to_string(label[i]);
  return s + ")";
}

inline Poly product(const std::vector<LinearForm>& lines) {
  Poly p(1);
  for (const auto& k : lines) p *= k.to_poly();
  return p;
}

/// Normalized product with value 1 at `at`.
inline Poly normalized_product(const std::vector<LinearForm>& lines, const Point& at) {
  Scalar v = 1;
  for (const auto& k : lines) v *= k(at);
  if (is_zero(v)) throw InternalError("lattice: product vanishes at its own node");
  return product(lines) * (1 / v);
}

inline void cross_check(const Lattice& lat, const char* what) {
  auto oracle = lagrange_basis(lat.nodes, lat.basis.degree);
  if (oracle.polys != lat.basis.polys) throw InternalError(std::string(what) + ": closed form differs from the Vandermonde solve");
}

}  // namespace detail

struct NaturalLatticeSpec {
  std::vector<LinearForm> lines;
  std::optional<LinearForm> extension;
};

/// Nodes x_ij = K_i ∩ K_j, i < j, with l_ij = prod_{r != i,j} k_r / k_r(x_ij).
inline Lattice natural_lattice(const NaturalLatticeSpec& spec, int n) {
  if (n < 0) throw DomainError("natural_lattice: negative degree");
  const auto& lines = spec.lines;
  if (static_cast<int>(lines.size()) != n + 2)
    throw DomainError("natural_lattice: degree " + std::to_string(n) + " needs n+2 = " + std::to_string(n + 2) +
                      " lines, got " + std::to_string(lines.size()));
  for (std::size_t r = 0; r < lines.size(); ++r)
    if (lines[r].is_constant()) throw DomainError("natural_lattice: line " + std::to_string(r) + " is constant");
  std::map<Point, std::vector<int>> seen;
  std::vector<Point> pts;
  Lattice lat;
  for (int i = 0; i < n + 2; ++i)
    for (int j = i + 1; j < n + 2; ++j) {
      auto x = intersect(lines[i], lines[j]);
      if (!x) throw DomainError("natural_lattice: lines " + std::to_string(i) + " and " + std::to_string(j) + " are parallel");
      auto [it, fresh] = seen.try_emplace(*x, std::vector<int>{i, j});
      if (!fresh)
        throw DomainError("natural_lattice: intersections " + detail::label_string(it->second) + " and " +
                          detail::label_string({i, j}) + " coincide at " + to_string(*x));
      pts.push_back(*x);
      lat.labels.push_back({i, j});
    }
  lat.nodes = NodeSet(pts);
  lat.basis = {n, lat.nodes, {}};
  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    std::vector<LinearForm> others;
    for (int r = 0; r < n + 2; ++r)
      if (r != lat.labels[idx][0] && r != lat.labels[idx][1]) others.push_back(lines[r]);
    lat.basis.polys.push_back(detail::normalized_product(others, pts[idx]));
  }
  detail::cross_check(lat, "natural_lattice");
  return lat;
}

/// Nodes x_{i,n+2} where the extension line meets K_0..K_{n+1}.
inline std::vector<Point> extension_points(const NaturalLatticeSpec& spec, const NodeSet& nodes) {
  if (!spec.extension) throw DomainError("natural lattice H-basis: no extension line K_{n+2}");
  const LinearForm& ext = *spec.extension;
  if (ext.is_constant()) throw DomainError("natural lattice H-basis: extension line is constant");
  for (const auto& y : nodes)
    if (is_zero(ext(y))) throw DomainError("natural lattice H-basis: extension line passes through node " + to_string(y));
  std::vector<Point> pts;
  for (std::size_t r = 0; r < spec.lines.size(); ++r) {
    auto x = intersect(spec.lines[r], ext);
    if (!x) throw DomainError("natural lattice H-basis: extension line is parallel to line " + std::to_string(r));
    if (std::find(pts.begin(), pts.end(), *x) != pts.end())
      throw DomainError("natural lattice H-basis: extension line meets two lines at " + to_string(*x));
    pts.push_back(*x);
  }
  return pts;
}

/// h_i = prod_{r != i} k_r, i = 0..n+1.
inline HBasis natural_lattice_hbasis(const NaturalLatticeSpec& spec, int n) {
  Lattice lat = natural_lattice(spec, n);
  extension_points(spec, lat.nodes);
  HBasis h{n, {}, HBasisOrigin::Lattice};
  for (int i = 0; i < n + 2; ++i) {
    std::vector<LinearForm> others;
    for (int r = 0; r < n + 2; ++r)
      if (r != i) others.push_back(spec.lines[r]);
    h.elements.push_back(detail::product(others));
  }
  if (!is_hbasis(h, lat.nodes)) throw InternalError("natural_lattice_hbasis: products are not an H-basis");
  return h;
}

/// Syzygy rows k_0 e_0 - k_i e_i, i = 1..n+1, of the product basis.
inline SyzygyMatrix natural_lattice_pattern(const NaturalLatticeSpec& spec, int n) {
  if (static_cast<int>(spec.lines.size()) != n + 2) throw DomainError("natural_lattice_pattern: wrong number of lines");
  SyzygyMatrix s(n + 1, n + 2, Poly());
  for (int i = 1; i <= n + 1; ++i) {
    s(i - 1, 0) = spec.lines[0].to_poly();
    s(i - 1, i) = -spec.lines[i].to_poly();
  }
  return s;
}

struct GPLSpec {
  std::array<std::vector<LinearForm>, 3> pencils;
};

/// Multi-indices |beta| = n in the order beta_0 ascending, then beta_1.
inline std::vector<std::array<int, 3>> gpl_indices(int n) {
  std::vector<std::array<int, 3>> out;
  for (int b0 = 0; b0 <= n; ++b0)
    for (int b1 = 0; b0 + b1 <= n; ++b1) out.push_back({b0, b1, n - b0 - b1});
  return out;
}

/// Nodes x_beta = K_{beta_0,0} ∩ K_{beta_1,1} ∩ K_{beta_2,2} with the
/// triple-product Lagrange polynomials.
inline Lattice generalized_principal_lattice(const GPLSpec& spec, int n) {
  if (n < 0) throw DomainError("generalized_principal_lattice: negative degree");
  for (int p = 0; p < 3; ++p) {
    if (static_cast<int>(spec.pencils[p].size()) != n + 1)
      throw DomainError("generalized_principal_lattice: pencil " + std::to_string(p) + " needs n+1 = " +
                        std::to_string(n + 1) + " lines, got " + std::to_string(spec.pencils[p].size()));
    for (const auto& k : spec.pencils[p])
      if (k.is_constant()) throw DomainError("generalized_principal_lattice: constant line in pencil " + std::to_string(p));
  }
  Lattice lat;
  std::vector<Point> pts;
  std::map<Point, std::vector<int>> seen;
  for (const auto& beta : gpl_indices(n)) {
    std::vector<int> label{beta[0], beta[1], beta[2]};
    const auto& k0 = spec.pencils[0][beta[0]];
    const auto& k1 = spec.pencils[1][beta[1]];
    const auto& k2 = spec.pencils[2][beta[2]];
    auto x = intersect(k0, k1);
    if (!x || !is_zero(k2(*x)))
      throw DomainError("generalized_principal_lattice: lines of beta = " + detail::label_string(label) +
                        " do not meet in one point");
    auto [it, fresh] = seen.try_emplace(*x, label);
    if (!fresh)
      throw DomainError("generalized_principal_lattice: nodes " + detail::label_string(it->second) + " and " +
                        detail::label_string(label) + " coincide at " + to_string(*x));
    pts.push_back(*x);
    lat.labels.push_back(label);
  }
  lat.nodes = NodeSet(pts);
  lat.basis = {n, lat.nodes, {}};
  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    std::vector<LinearForm> lines;
    for (int p = 0; p < 3; ++p)
      for (int g = 0; g < lat.labels[idx][p]; ++g) lines.push_back(spec.pencils[p][g]);
    lat.basis.polys.push_back(detail::normalized_product(lines, pts[idx]));
  }
  detail::cross_check(lat, "generalized_principal_lattice");
  return lat;
}

/// The two pencils used when `omitted` is left out, in increasing order.
inline std::array<int, 2> gpl_used_pencils(int omitted) {
  if (omitted < 0 || omitted > 2) throw DomainError("gpl: omitted pencil must be 0, 1 or 2");
  if (omitted == 0) return {1, 2};
  if (omitted == 1) return {0, 2};
  return {0, 1};
}

/// h_j = prod_{g < j} k_{g,a} prod_{g < n+1-j} k_{g,b}, j = 0..n+1.
inline HBasis gpl_hbasis(const GPLSpec& spec, int n, int omitted) {
  auto [a, b] = gpl_used_pencils(omitted);
  Lattice lat = generalized_principal_lattice(spec, n);
  HBasis h{n, {}, HBasisOrigin::Lattice};
  for (int j = 0; j <= n + 1; ++j) {
    std::vector<LinearForm> lines;
    for (int g = 0; g < j; ++g) lines.push_back(spec.pencils[a][g]);
    for (int g = 0; g < n + 1 - j; ++g) lines.push_back(spec.pencils[b][g]);
    h.elements.push_back(detail::product(lines));
  }
  if (!is_hbasis(h, lat.nodes)) throw InternalError("gpl_hbasis: products are not an H-basis");
  return h;
}

/// Bidiagonal syzygy rows k_{i,a} e_i - k_{n-i,b} e_{i+1}, i = 0..n.
inline SyzygyMatrix gpl_pattern(const GPLSpec& spec, int n, int omitted) {
  auto [a, b] = gpl_used_pencils(omitted);
  SyzygyMatrix s(n + 1, n + 2, Poly());
  for (int i = 0; i <= n; ++i) {
    s(i, i) = spec.pencils[a][i].to_poly();
    s(i, i + 1) = -spec.pencils[b][n - i].to_poly();
  }
  return s;
}

/// Pencils x1 = i/n, x2 = i/n and x1 + x2 = (n-i)/n, i = 0..n; the node of
/// beta is (beta_0/n, beta_1/n).
inline GPLSpec classical_principal_lattice(int n) {
  if (n < 0) throw DomainError("classical_principal_lattice: negative degree");
  GPLSpec spec;
  Scalar step = n == 0 ? Scalar(0) : Scalar(1, n);
  for (int i = 0; i <= n; ++i) {
    spec.pencils[0].push_back({-step * i, 1, 0});
    spec.pencils[1].push_back({-step * i, 0, 1});
    spec.pencils[2].push_back({-step * (n - i), 1, 1});
  }
  return spec;
}

/// First point of a grid around the centroid of Y where no fundamental
/// polynomial vanishes; the grid spirals outward ring by ring.
inline Point choose_normalization_point(const LagrangeBasis& basis, int max_radius = 40) {
  Point c{0, 0};
  for (const auto& y : basis.nodes) c = {c.x1 + y.x1, c.x2 + y.x2};
  if (!basis.nodes.empty()) c = {c.x1 / long(basis.nodes.size()), c.x2 / long(basis.nodes.size())};
  const Scalar step(1, 7);
  for (int r = 0; r <= max_radius; ++r)
    for (int i = -r; i <= r; ++i)
      for (int j = -r; j <= r; ++j) {
        if (std::max(std::abs(i), std::abs(j)) != r) continue;
        Point z{c.x1 + step * i, c.x2 + step * j};
        bool ok = true;
        for (const auto& l : basis.polys) ok = ok && !is_zero(evaluate(l, z));
        if (ok) return z;
      }
  throw DomainError("choose_normalization_point: no admissible z found within the search grid");
}

/// H-basis of products of linear factors: greedy extraction from
/// {m l_t : t in Y \ Yprev, m a normalized factor of some l_y, m(t) = 0}.
inline HBasis factorizable_hbasis(const NodeSet& y, int n, const NodeSet& yprev, std::optional<Point> z = std::nullopt) {
  if (n < 0) throw DomainError("factorizable_hbasis: negative degree");
  LagrangeBasis basis = lagrange_basis(y, n);
  if (!is_gc_set(basis)) throw DomainError("factorizable_hbasis: node set is not GC");
  for (const auto& p : yprev)
    if (!y.contains(p)) throw DomainError("factorizable_hbasis: " + to_string(p) + " of Yprev is not a node of Y");
  if (!is_poised(yprev, n - 1) && !(n == 0 && yprev.empty()))
    throw DomainError("factorizable_hbasis: Yprev is not poised for degree " + std::to_string(n - 1));
  Point zz = z ? *z : choose_normalization_point(basis);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (is_zero(evaluate(basis[i], zz)))
      throw DomainError("factorizable_hbasis: l_y vanishes at z for y = " + to_string(y[i]));

  std::set<LinearForm> factors;
  for (const auto& l : basis.polys)
    for (const auto& k : linear_factors(l, zz).factors) factors.insert(k);

  HBasis h{n, {}, HBasisOrigin::Factorizable};
  const auto monos = monomials_up_to(n + 1);
  std::size_t current_rank = 0;
  for (std::size_t i = 0; i < y.size() && static_cast<int>(h.size()) < n + 2; ++i) {
    if (yprev.contains(y[i])) continue;
    const Point& t = y[i];
    std::vector<LinearForm> through;
    for (const auto& k : factors)
      if (is_zero(k(t))) through.push_back(k);
    bool two_directions = false;
    for (std::size_t a = 0; a < through.size() && !two_directions; ++a)
      for (std::size_t b = a + 1; b < through.size(); ++b)
        two_directions = two_directions || !is_zero(through[a].a1 * through[b].a2 - through[a].a2 * through[b].a1);
    if (!two_directions)
      throw InternalError("factorizable_hbasis: fewer than two independent factor lines through " + to_string(t));
    for (const auto& k : through) {
      h.elements.push_back(k.to_poly() * basis[i]);
      std::size_t r = rank(coefficient_matrix(h.elements, monos));
      if (r > current_rank) {
        current_rank = r;
        if (static_cast<int>(h.size()) == n + 2) break;
      } else {
        h.elements.pop_back();
      }
    }
  }
  if (static_cast<int>(h.size()) != n + 2 || !is_hbasis(h, y))
    throw InternalError("factorizable_hbasis: candidate set does not contain an H-basis");
  return h;
}

/// Yprev = Y minus its first maximal line, which is poised of degree n-1.
inline NodeSet default_previous_set(const NodeSet& y, int n) {
  if (n == 0) return NodeSet();
  auto lines = geometric_maximal_lines(y, n);
  if (lines.empty()) throw DomainError("factorizable_hbasis: no maximal line to split off a Yprev");
  return br_restrict(y, n, lines.front().line);
}

/// Lines in general position: no two parallel, no three concurrent.
inline std::vector<LinearForm> random_general_lines(Rng& rng, int count) {
  std::vector<LinearForm> lines;
  std::set<Point> crossings;
  while (static_cast<int>(lines.size()) < count) {
    LinearForm k = random_line(rng);
    bool ok = true;
    std::vector<Point> fresh;
    for (const auto& l : lines) {
      auto x = intersect(k, l);
      if (!x || crossings.count(*x) || std::find(fresh.begin(), fresh.end(), *x) != fresh.end()) {
        ok = false;
        break;
      }
      fresh.push_back(*x);
    }
    if (!ok) continue;
    lines.push_back(k);
    crossings.insert(fresh.begin(), fresh.end());
  }
  return lines;
}

inline NaturalLatticeSpec random_natural_lattice(Rng& rng, int n, bool with_extension = false) {
  auto lines = random_general_lines(rng, n + 2 + (with_extension ? 1 : 0));
  NaturalLatticeSpec spec;
  if (with_extension) {
    spec.extension = lines.back();
    lines.pop_back();
  }
  spec.lines = std::move(lines);
  return spec;
}

/// Image of the classical principal lattice under a random nonsingular
/// projective map (affine about half the time) keeping every node finite.
inline GPLSpec random_gpl(Rng& rng, int n) {
  GPLSpec base = classical_principal_lattice(n);
  auto nodes = gpl_indices(n);
  while (true) {
    QMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = rng.uniform(-3, 3);
    if (rng.uniform(0, 1) == 0) m(2, 0) = 0, m(2, 1) = 0, m(2, 2) = 1;
    auto inv = inverse(m);
    if (!inv) continue;
    // Homogeneous node (x1, x2, 1) maps to m (x1, x2, 1)^T.
    bool finite = true;
    Scalar step = n == 0 ? Scalar(0) : Scalar(1, n);
    for (const auto& beta : nodes) {
      Scalar w = m(2, 0) * step * beta[0] + m(2, 1) * step * beta[1] + m(2, 2);
      finite = finite && !is_zero(w);
    }
    if (!finite) continue;
    // A line (a1, a2, a0) as a row vector maps to (a1, a2, a0) m^{-1}.
    GPLSpec out;
    for (int p = 0; p < 3; ++p)
      for (const auto& k : base.pencils[p]) {
        Scalar row[3] = {k.a1, k.a2, k.a0};
        Scalar img[3];
        for (int j = 0; j < 3; ++j) img[j] = row[0] * (*inv)(0, j) + row[1] * (*inv)(1, j) + row[2] * (*inv)(2, j);
        out.pencils[p].push_back(LinearForm{img[2], img[0], img[1]}.normalized());
      }
    return out;
  }
}

/// BR chain along n+1 lines in general position: line i receives its
/// crossings with lines 0..i-1 plus one free point that lies on no other
/// line. Every line ends up holding n+1 nodes and the set is GC.
inline BRChain random_free_point_chain(Rng& rng, int n) {
  auto lines = random_general_lines(rng, n + 1);
  std::set<Point> used;
  for (int i = 0; i <= n; ++i)
    for (int r = 0; r < i; ++r) used.insert(*intersect(lines[i], lines[r]));
  std::vector<std::pair<LinearForm, NodeSet>> steps;
  for (int i = 0; i <= n; ++i) {
    std::vector<Point> pts;
    for (int r = 0; r < i; ++r) pts.push_back(*intersect(lines[i], lines[r]));
    while (true) {
      Point f = point_on_line(lines[i], rng.rational(6, 2));
      bool ok = !used.count(f);
      for (int r = 0; r <= n && ok; ++r)
        if (r != i) ok = !is_zero(lines[r](f));
      if (!ok) continue;
      used.insert(f);
      pts.push_back(f);
      break;
    }
    steps.emplace_back(lines[i], NodeSet(std::move(pts)));
  }
  return br_chain(steps);
}

}  // namespace bivar

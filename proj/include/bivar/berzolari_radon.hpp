#pragma once

// Berzolari-Radon construction: a poised set of degree n plus n+2 distinct
// points on a line K avoiding it is poised of degree n+1. The fundamental
// polynomials of the extended set are built from the old ones in closed form:
//
//   l_{y,Y+}  = k / k(y) * l_{y,Y},                                  y in Y,
//   l_{t,Y+}  = q_t - k * sum_y q_t(y) / k(y) * l_{y,Y},             t in T,
//
// with q_t = d_t / d_t(t) and d_t = prod_{s in T, s != t} (m - m(s)), where m
// completes {1, k} to a basis of the linear polynomials.

#include <bivar/nodes.hpp>
#include <bivar/poly.hpp>
#include <bivar/random.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bivar {

/// Companion m with {1, k, m} a basis of linear polynomials. Deterministic:
/// the other coordinate for axis-parallel gradients, else x1 - x2 when
/// independent of k, else x1 + x2.
inline LinearForm choose_m(const LinearForm& k) {
  if (k.is_constant()) throw DomainError("choose_m: constant linear form");
  if (is_zero(k.a2)) return {0, 0, 1};
  if (is_zero(k.a1)) return {0, 1, 0};
  if (!is_zero(k.a1 + k.a2)) return {0, 1, -1};
  return {0, 1, 1};
}

/// det of the coefficient matrix of {1, k, m}.
inline Scalar basis_determinant(const LinearForm& k, const LinearForm& m) { return k.a1 * m.a2 - k.a2 * m.a1; }

/// d_t = prod over s in T \ {t} of (m - m(s)).
inline Poly d_poly(const NodeSet& points, const LinearForm& m, const Point& t) {
  if (!points.contains(t)) throw DomainError("d_poly: " + to_string(t) + " is not in T");
  Poly d(1);
  Poly mp = m.to_poly();
  for (const auto& s : points) {
    if (s == t) continue;
    d *= mp - Poly(m(s));
  }
  if (is_zero(evaluate(d, t)))
    throw DomainError("d_poly: d_t(t) = 0 at " + to_string(t) + " (points share a value of m)");
  return d;
}

/// One extension step: the line, its companion and the points on it.
struct BRStep {
  LinearForm k;
  LinearForm m;
  NodeSet points;

  /// Validates the step; m defaults to choose_m(k).
  static BRStep make(const LinearForm& k, NodeSet points, std::optional<LinearForm> m = std::nullopt) {
    if (k.is_constant()) throw DomainError("BR step: line equation is constant");
    LinearForm comp = m ? *m : choose_m(k);
    if (is_zero(basis_determinant(k, comp))) throw DomainError("BR step: {1, k, m} is not a basis");
    for (const auto& t : points)
      if (!is_zero(k(t))) throw DomainError("BR step: point " + to_string(t) + " is not on the line");
    return {k, comp, std::move(points)};
  }
};

/// Result of br_extend. Keeps the base data that explicit syzygies and
/// maximal-line witnesses are built from.
struct BRExtension {
  LagrangeBasis base;
  BRStep step;
  LagrangeBasis result;

  int degree() const { return result.degree; }
  /// d_{t_i}(t_i).
  Scalar d_at(std::size_t i) const {
    const Point& t = step.points[i];
    return evaluate(d_poly(step.points, step.m, t), t);
  }
  /// Fundamental polynomial l_{t_i, Y_{n+1}}; these form an H-basis of I(Y_n).
  const Poly& h(std::size_t i) const { return result.polys[base.size() + i]; }
};

/// Extends a poised set along a line. `base` may be the empty set with
/// degree -1, which starts a chain with one point.
inline BRExtension br_extend(const LagrangeBasis& base, const BRStep& step) {
  const int n = base.degree;
  const auto& tpts = step.points;
  if (static_cast<int>(tpts.size()) != n + 2)
    throw DomainError("br_extend: line carries " + std::to_string(tpts.size()) + " points, expected n+2 = " +
                      std::to_string(n + 2));
  for (const auto& y : base.nodes)
    if (is_zero(step.k(y))) throw DomainError("br_extend: line passes through node " + to_string(y));

  BRExtension ext{base, step, {n + 1, concat(base.nodes, tpts), {}}};
  const Poly kp = step.k.to_poly();
  std::vector<Scalar> k_at(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) k_at[i] = step.k(base.nodes[i]);

  auto& polys = ext.result.polys;
  polys.reserve(ext.result.nodes.size());
  for (std::size_t i = 0; i < base.size(); ++i) polys.push_back(kp * base[i] * (1 / k_at[i]));
  for (const auto& t : tpts) {
    Poly d = d_poly(tpts, step.m, t);
    Scalar inv_dt = 1 / evaluate(d, t);
    Poly correction;
    for (std::size_t i = 0; i < base.size(); ++i) {
      Scalar w = evaluate(d, base.nodes[i]) / k_at[i];
      if (!is_zero(w)) correction += base[i] * w;
    }
    polys.push_back((d - kp * correction) * inv_dt);
  }
  if (!kronecker_holds(ext.result)) throw InternalError("br_extend: Kronecker conditions fail on the extension");
  return ext;
}

inline BRExtension br_extend(const NodeSet& yn, int n, const BRStep& step) {
  return br_extend(lagrange_basis(yn, n), step);
}

/// Removes the n1+1 nodes on K from a poised set of degree n1; the rest is
/// poised of degree n1-1.
inline NodeSet br_restrict(const NodeSet& yn1, int n1, const LinearForm& k) {
  if (k.is_constant()) throw DomainError("br_restrict: constant line equation");
  if (!is_poised(yn1, n1)) throw DomainError("br_restrict: input set is not poised for degree " + std::to_string(n1));
  std::vector<Point> off;
  for (const auto& y : yn1)
    if (!is_zero(k(y))) off.push_back(y);
  std::size_t on = yn1.size() - off.size();
  if (static_cast<int>(on) != n1 + 1)
    throw DomainError("br_restrict: line contains " + std::to_string(on) + " nodes, expected n+1 = " +
                      std::to_string(n1 + 1));
  NodeSet rest(std::move(off));
  if (!is_poised(rest, n1 - 1)) throw InternalError("br_restrict: remaining set is not poised");
  return rest;
}

struct BRChain {
  std::vector<BRStep> steps;
  /// Poised set of degree steps.size() - 1 with its Lagrange basis.
  LagrangeBasis result;
  /// The final step, including the basis of the set before it.
  std::optional<BRExtension> last;

  int degree() const { return result.degree; }
  const NodeSet& nodes() const { return result.nodes; }
};

/// Builds a poised set line by line; step i must supply i+1 points.
inline BRChain br_chain(const std::vector<std::pair<LinearForm, NodeSet>>& steps) {
  if (steps.empty()) throw DomainError("br_chain: no steps");
  BRChain chain;
  chain.result = LagrangeBasis{-1, NodeSet(), {}};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      BRStep step = BRStep::make(steps[i].first, steps[i].second);
      BRExtension ext = br_extend(chain.result, step);
      chain.steps.push_back(step);
      chain.result = ext.result;
      chain.last = std::move(ext);
    } catch (const DomainError& e) {
      throw DomainError("br_chain step " + std::to_string(i) + ": " + e.what());
    }
  }
  return chain;
}

/// Random nonconstant line with small integer slope data.
inline LinearForm random_line(Rng& rng, long coeff_range = 3, long offset_range = 5, long den_range = 2) {
  LinearForm k;
  do {
    k = {rng.rational(offset_range, den_range), rng.uniform(-coeff_range, coeff_range),
         rng.uniform(-coeff_range, coeff_range)};
  } while (k.is_constant());
  return k;
}

/// Seeded BR chain of the given degree: each line avoids all earlier nodes
/// and carries i+1 random points.
inline BRChain random_br_chain(Rng& rng, int degree) {
  if (degree < 0) throw DomainError("random_br_chain: negative degree");
  std::vector<std::pair<LinearForm, NodeSet>> steps;
  std::vector<Point> nodes;
  for (int i = 0; i <= degree; ++i) {
    LinearForm k;
    bool clear;
    do {
      k = random_line(rng);
      clear = true;
      for (const auto& y : nodes) clear = clear && !is_zero(k(y));
    } while (!clear);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < i + 1) {
      Point p = point_on_line(k, rng.rational(6, 2));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    nodes.insert(nodes.end(), pts.begin(), pts.end());
    steps.emplace_back(k, NodeSet(std::move(pts)));
  }
  return br_chain(steps);
}

}  // namespace bivar

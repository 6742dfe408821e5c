// Acceptance suite: one PASS/FAIL line per criterion, every check exact.
// Usage: acceptance <path to the bivar CLI>

#include <bivar/bivar.hpp>
#include <bivar/json_io.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace bivar {
namespace {

/// Records the first failed check of a criterion.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::size_t count() const { return count_; }

 private:
  std::string failure_;
  std::size_t count_ = 0;
};

std::string at(int n, int seed) { return " (degree " + std::to_string(n) + ", seed " + std::to_string(seed) + ")"; }

Poly random_poly(Rng& rng, int degree) {
  Poly p;
  for (auto m : monomials_up_to(degree))
    if (rng.uniform(0, 2) != 0) p.add_term(m, rng.rational(5, 3));
  return p;
}

bool kronecker(const LagrangeBasis& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (evaluate(b[i], b.nodes[j]) != (i == j ? 1 : 0)) return false;
  return true;
}

void poisedness_and_lagrange(Check& c) {
  for (int n = 1; n <= 8; ++n)
    for (int seed = 1; seed <= 3; ++seed) {
      Rng rng = Rng::stream(101, n * 10 + seed);
      auto chain = random_br_chain(rng, n);
      c.require(is_poised(chain.nodes(), n), "BR chain not poised" + at(n, seed));
      LagrangeBasis solved = lagrange_basis(chain.nodes(), n);
      c.require(kronecker(solved), "Vandermonde basis is not Kronecker" + at(n, seed));
      c.require(kronecker(chain.result), "BR basis is not Kronecker" + at(n, seed));
    }
  c.require(!is_poised(NodeSet({{0, 0}, {1, 1}, {2, 2}}), 1), "collinear triple reported poised");
  c.require(!is_poised(NodeSet({{0, 0}, {1, 0}, {Scalar(5, 2), 0}}), 1), "collinear triple reported poised");
}

void reduction(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    Rng rng = Rng::stream(202, n);
    auto chain = random_br_chain(rng, n + 1);
    const auto& ext = *chain.last;
    const NodeSet& y = ext.base.nodes;
    HBasis h = hbasis_from_extension(ext);
    Reducer reducer(h);
    auto test = [&](const Poly& p, const std::string& label) {
      auto r = reducer(p);
      std::map<Point, Scalar> values;
      bool vanishes = true;
      for (const auto& node : y) {
        values[node] = evaluate(p, node);
        vanishes = vanishes && is_zero(values[node]);
      }
      c.require(r.remainder == interpolate(y, n, values), "remainder differs from the interpolant" + label);
      Poly back = r.remainder;
      for (std::size_t j = 0; j < h.size(); ++j) {
        back += r.coefficients[j] * h[j];
        if (!r.coefficients[j].is_zero() && p.degree())
          c.require(*r.coefficients[j].degree() <= *p.degree() - (n + 1), "coefficient degree bound" + label);
      }
      c.require(back == p, "reduction does not reconstruct p" + label);
      c.require(r.remainder.is_zero() == vanishes, "remainder = 0 disagrees with evaluation" + label);
    };
    for (int i = 0; i < 50; ++i) test(random_poly(rng, n + 4), " (degree " + std::to_string(n) + ", poly " + std::to_string(i) + ")");
    // Members, so that both sides of the equivalence occur.
    for (int i = 0; i < 10; ++i) {
      Poly m;
      for (std::size_t j = 0; j < h.size(); ++j) m += random_poly(rng, 3) * h[j];
      test(m, " (degree " + std::to_string(n) + ", member " + std::to_string(i) + ")");
    }
  }
}

void br_against_vandermonde(Check& c) {
  for (int n = 1; n <= 6; ++n)
    for (int seed = 1; seed <= 2; ++seed) {
      Rng rng = Rng::stream(303, n * 10 + seed);
      auto chain = random_br_chain(rng, n);
      const auto& ext = *chain.last;
      LagrangeBasis oracle = lagrange_basis(ext.result.nodes, n);
      c.require(oracle.polys == ext.result.polys, "BR fundamental polynomials differ from the Vandermonde solve" + at(n, seed));
      for (std::size_t i = 0; i < ext.base.size(); ++i)
        c.require(divide_by_linear(ext.result.polys[i], ext.step.k).has_value(),
                  "k does not divide an old-node fundamental polynomial" + at(n, seed));
    }
}

void syzygy_dimension(Check& c) {
  for (int n = 1; n <= 6; ++n) {
    Rng rng = Rng::stream(404, n);
    auto chain = random_br_chain(rng, n + 1);
    std::vector<std::pair<std::string, HBasis>> bases;
    bases.emplace_back("BR", hbasis_from_extension(*chain.last));
    bases.emplace_back("error-monomial", hbasis_error_monomials(chain.last->base));
    bases.emplace_back("natural-lattice", natural_lattice_hbasis(random_natural_lattice(rng, n, true), n));
    bases.emplace_back("GPL", gpl_hbasis(random_gpl(rng, n), n, 0));
    NodeSet gc = generalized_principal_lattice(random_gpl(rng, n), n).nodes;
    bases.emplace_back("factorizable", factorizable_hbasis(gc, n, default_previous_set(gc, n)));
    for (const auto& [name, h] : bases)
      c.require(linear_syzygies(h).size() == static_cast<std::size_t>(n + 1),
                "dim S1 != n+1 for the " + name + " basis" + at(n, 404));
  }
}

void explicit_syzygies(Check& c) {
  for (int seed = 1; seed <= 3; ++seed) {
    Rng rng = Rng::stream(505, seed);
    auto chain = random_br_chain(rng, 4);
    const auto& ext = *chain.last;
    HBasis h = hbasis_from_extension(ext);
    auto basis = linear_syzygies(h);
    const std::size_t N = h.size();
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Syzygy sij = explicit_br_syzygy(ext, i, j);
        c.require(annihilates(sij, h.elements), "explicit syzygy does not annihilate H" + at(3, seed));
        auto with = basis;
        with.push_back(sij);
        c.require(canonical_form(from_rows(with, N)).rows() == basis.size(), "explicit syzygy outside S1" + at(3, seed));
        if (i == j) c.require(sij == Syzygy(N), "Sigma_{t,t} != 0" + at(3, seed));
        Syzygy sji = explicit_br_syzygy(ext, j, i);
        for (std::size_t col = 0; col < N; ++col) c.require(sij[col] == -sji[col], "antisymmetry" + at(3, seed));
        for (std::size_t l = 0; l < N; ++l) {
          Syzygy sjl = explicit_br_syzygy(ext, j, l), sil = explicit_br_syzygy(ext, i, l);
          for (std::size_t col = 0; col < N; ++col) c.require(sij[col] + sjl[col] == sil[col], "cocycle" + at(3, seed));
        }
      }
  }
}

/// h_j = (-1)^j w det S_j for one w, recomputed here from the minors.
void check_minor_identity(Check& c, const SyzygyMatrix& s, const HBasis& h, const std::string& label,
                          std::optional<Scalar> expected_w) {
  auto r = reconstruct_hbasis(s, h);
  for (std::size_t j = 0; j < s.cols(); ++j) {
    Poly m = minor(s, j);
    c.require(!m.is_zero() && m.degree() == static_cast<int>(s.rows()), "minor of wrong degree" + label);
    Scalar sign = j % 2 == 0 ? 1 : -1;
    c.require(h[j] == m * (sign * r.w), "h_j != (-1)^j w det S_j" + label);
  }
  if (expected_w) c.require(r.w == *expected_w, "w != 1 / prod d_t(t)" + label);
}

void reconstruction(Check& c) {
  for (int n = 1; n <= 5; ++n)
    for (int seed = 1; seed <= 2; ++seed) {
      Rng rng = Rng::stream(606, n * 10 + seed);
      auto chain = random_br_chain(rng, n + 1);
      const auto& ext = *chain.last;
      HBasis h = hbasis_from_extension(ext);
      Scalar prod = 1;
      for (std::size_t i = 0; i < ext.step.points.size(); ++i) prod *= ext.d_at(i);
      check_minor_identity(c, br_syzygy_matrix(ext), h, " BR" + at(n, seed), 1 / prod);
      check_minor_identity(c, syzygy_matrix(h), h, " canonical" + at(n, seed), std::nullopt);
      HBasis em = hbasis_error_monomials(ext.base);
      check_minor_identity(c, syzygy_matrix(em), em, " error-monomial" + at(n, seed), std::nullopt);
    }
}

std::set<LinearForm> geometric(const NodeSet& y, int n) {
  std::set<LinearForm> out;
  for (const auto& inc : geometric_maximal_lines(y, n)) out.insert(inc.line);
  return out;
}

void maximal_line_criterion(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    Rng rng = Rng::stream(707, n);
    auto spec = random_natural_lattice(rng, n, true);
    auto lat = natural_lattice(spec, n);
    std::set<LinearForm> defining;
    for (const auto& k : spec.lines) defining.insert(k.normalized());
    auto geo = geometric(lat.nodes, n);
    HBasis h = natural_lattice_hbasis(spec, n);
    for (const auto& s : {natural_lattice_pattern(spec, n), syzygy_matrix(h)}) {
      std::set<LinearForm> detected;
      for (const auto& d : column_line_detect(s)) {
        detected.insert(d.line);
        c.require(geo.count(d.line) == 1, "detected line is not geometrically maximal" + at(n, 707));
      }
      c.require(detected == defining, "column detection differs from the n+2 defining lines" + at(n, 707));
    }
  }
  for (int i = 0; i < 50; ++i) {
    int n = 1 + i % 5;
    Rng rng = Rng::stream(708, i);
    LagrangeBasis b = generate_gc_set(kGCGenerators[i % 3], rng, n);
    for (const auto& inc : geometric_maximal_lines(b.nodes, n)) {
      Witness w = witness_matrix(b.nodes, n, inc.line);
      const std::size_t last = w.matrix.cols() - 1;
      for (std::size_t r = 0; r + 1 < w.matrix.rows(); ++r)
        c.require(w.matrix(r, last).is_zero(), "witness last column is not k e_{n+1}" + at(n, i));
      c.require(w.matrix(w.matrix.rows() - 1, last) == inc.line.to_poly(), "witness corner entry is not k" + at(n, i));
      c.require(rank_rational(w.matrix) == static_cast<std::size_t>(n + 1), "witness rank != n+1" + at(n, i));
      c.require(annihilates(w.matrix, w.basis.elements), "witness matrix does not annihilate" + at(n, i));
      c.require(is_hbasis(w.basis, b.nodes), "witness basis is not an H-basis" + at(n, i));
    }
  }
}

void lattice_patterns(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    Rng rng = Rng::stream(808, n);
    auto nspec = random_natural_lattice(rng, n, true);
    c.require(canonical_form(natural_lattice_pattern(nspec, n)) == syzygy_matrix(natural_lattice_hbasis(nspec, n)),
              "natural-lattice pattern" + at(n, 808));
    auto gspec = random_gpl(rng, n);
    auto lat = generalized_principal_lattice(gspec, n);
    for (int omitted = 0; omitted < 3; ++omitted)
      c.require(canonical_form(gpl_pattern(gspec, n, omitted)) == syzygy_matrix(gpl_hbasis(gspec, n, omitted)),
                "GPL pattern, omitted pencil " + std::to_string(omitted) + at(n, 808));
    SyzygyMatrix s = syzygy_matrix(gpl_hbasis(gspec, n, 0));
    std::set<LinearForm> columns;
    for (const auto& d : column_line_detect(s)) columns.insert(d.line);
    std::set<LinearForm> expected{gspec.pencils[1][0].normalized(), gspec.pencils[2][0].normalized()};
    c.require(columns == expected, "columns do not detect K_{0,1} and K_{0,2}" + at(n, 808));
    std::set<LinearForm> searched;
    for (const auto& t : transform_search(s, lat.nodes, n)) searched.insert(t.line);
    c.require(searched.count(gspec.pencils[0][0].normalized()) == 1, "transform search misses K_{0,0}" + at(n, 808));
  }
}

void factorizable(Check& c) {
  for (int n = 2; n <= 5; ++n) {
    Rng rng = Rng::stream(909, n);
    std::vector<std::pair<std::string, NodeSet>> sets{
        {"natural lattice", natural_lattice(random_natural_lattice(rng, n), n).nodes},
        {"GPL", generalized_principal_lattice(random_gpl(rng, n), n).nodes},
        {"classical lattice", generalized_principal_lattice(classical_principal_lattice(n), n).nodes}};
    for (const auto& [name, y] : sets) {
      HBasis h = factorizable_hbasis(y, n, default_previous_set(y, n));
      c.require(is_hbasis(h, y), "factorizable basis is not an H-basis on a " + name + at(n, 909));
      for (const auto& e : h.elements) {
        auto f = linear_factors(e);
        c.require(f.complete() && f.factors.size() == static_cast<std::size_t>(n + 1),
                  "element does not split into n+1 linear factors on a " + name + at(n, 909));
      }
    }
  }
}

void gm_sweep(Check& c) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  SweepReport r = gasca_maeztu_sweep(5, 1000, 1, threads);
  for (const auto& d : r.degrees) {
    c.require(d.trials == 1000, "degree " + std::to_string(d.degree) + " ran " + std::to_string(d.trials) + " trials");
    c.require(d.skipped == 0, "degree " + std::to_string(d.degree) + " skipped " + std::to_string(d.skipped) + " sets");
  }
  if (!r.clean()) {
    std::cerr << "Gasca-Maeztu violations:\n" << format_json(to_json(r)["violations"]);
    c.require(false, std::to_string(r.violations.size()) + " GC sets without a maximal line");
  }
}

std::string capture(const std::string& command, int& status) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

void determinism(Check& c, const std::string& cli) {
  const std::vector<std::string> commands = {
      "br --random --degree 5 --seed 3 --lagrange",
      "lattice natural --random --degree 4 --seed 3 --hbasis --lagrange",
      "lattice gpl --random --degree 4 --seed 3 --hbasis",
      "gm-sweep --max-degree 5 --trials 10 --seed 1 --threads 1",
  };
  for (const auto& cmd : commands) {
    int s1 = 0, s2 = 0;
    std::string a = capture("\"" + cli + "\" " + cmd, s1);
    std::string b = capture("\"" + cli + "\" " + cmd, s2);
    c.require(s1 == 0 && s2 == 0 && !a.empty(), "'" + cmd + "' did not succeed");
    c.require(a == b, "'" + cmd + "' is not byte-identical across runs");
  }
  int s1 = 0, s2 = 0;
  std::string one = capture("\"" + cli + "\" gm-sweep --max-degree 4 --trials 12 --seed 2 --threads 1", s1);
  std::string many = capture("\"" + cli + "\" gm-sweep --max-degree 4 --trials 12 --seed 2 --threads 4", s2);
  c.require(s1 == 0 && s2 == 0 && one == many, "gm-sweep output depends on the thread count");
}

}  // namespace
}  // namespace bivar

int main(int argc, char** argv) {
  using namespace bivar;
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to the bivar CLI>\n";
    return 2;
  }
  const std::string cli = argv[1];
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"poisedness and Kronecker property of BR chains, degrees 1..8", poisedness_and_lagrange},
      {"reduction remainder equals the interpolant, degrees 1..5", reduction},
      {"BR fundamental polynomials equal the Vandermonde solve, degrees 1..6", br_against_vandermonde},
      {"dim S1(H) = n+1 for five H-basis families, degrees 1..6", syzygy_dimension},
      {"explicit BR syzygies: annihilation, span, antisymmetry, cocycle", explicit_syzygies},
      {"minor reconstruction with a single w; BR w = 1/prod d_t(t)", reconstruction},
      {"maximal lines from syzygy columns and witness matrices", maximal_line_criterion},
      {"natural-lattice and GPL syzygy patterns and GPL line detection", lattice_patterns},
      {"factorizable H-bases of lattices, degrees 2..5", factorizable},
      {"Gasca-Maeztu sweep, 1000 GC sets per degree 1..5", gm_sweep},
      {"byte-identical CLI output for identical seeds", [&](Check& c) { determinism(c, cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (c.ok() ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].name << " (" << c.count() << " checks, "
         << static_cast<int>(secs * 10) / 10.0 << " s)";
    if (!c.ok()) line << ": " << c.failure();
    std::cout << line.str() << std::endl;
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

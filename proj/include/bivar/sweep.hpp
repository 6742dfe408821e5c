#pragma once

// Empirical check that seeded GC sets of low degree contain a maximal line.
// The generators cover natural lattices, generalized principal lattices and
// free-point BR chains; they are far from exhaustive.

#include <bivar/lattices.hpp>
#include <bivar/maximal_line.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace bivar {

enum class GCGenerator { NaturalLattice, PrincipalLattice, FreePointChain };

inline std::string to_string(GCGenerator g) {
  switch (g) {
    case GCGenerator::NaturalLattice: return "natural-lattice";
    case GCGenerator::PrincipalLattice: return "principal-lattice";
    case GCGenerator::FreePointChain: return "free-point-chain";
  }
  return "unknown";
}

inline constexpr GCGenerator kGCGenerators[] = {GCGenerator::NaturalLattice, GCGenerator::PrincipalLattice,
                                                GCGenerator::FreePointChain};

/// A GC candidate with its Lagrange basis, as produced by one trial.
inline LagrangeBasis generate_gc_set(GCGenerator g, Rng& rng, int n) {
  switch (g) {
    case GCGenerator::NaturalLattice: return natural_lattice(random_natural_lattice(rng, n), n).basis;
    case GCGenerator::PrincipalLattice: return generalized_principal_lattice(random_gpl(rng, n), n).basis;
    case GCGenerator::FreePointChain: return random_free_point_chain(rng, n).result;
  }
  throw InternalError("generate_gc_set: unknown generator");
}

struct TrialOutcome {
  int degree = 0;
  std::uint64_t trial = 0;
  GCGenerator generator = GCGenerator::NaturalLattice;
  bool skipped = false;
  std::string skip_reason;
  std::size_t maximal_lines = 0;
  NodeSet nodes;

  bool operator==(const TrialOutcome&) const = default;
};

/// Stream index of a trial; distinct for every (degree, trial) pair.
inline std::uint64_t trial_stream(int degree, std::uint64_t trial) {
  return (static_cast<std::uint64_t>(degree) << 40) | trial;
}

/// One trial, a pure function of (seed, degree, trial).
inline TrialOutcome run_trial(std::uint64_t seed, int degree, std::uint64_t trial) {
  TrialOutcome out;
  out.degree = degree;
  out.trial = trial;
  out.generator = kGCGenerators[trial % 3];
  Rng rng = Rng::stream(seed, trial_stream(degree, trial));
  LagrangeBasis basis;
  try {
    basis = generate_gc_set(out.generator, rng, degree);
  } catch (const DomainError& e) {
    out.skipped = true;
    out.skip_reason = e.what();
    return out;
  }
  out.nodes = basis.nodes;
  if (!is_gc_set(basis)) {
    out.skipped = true;
    out.skip_reason = "generated set is not GC";
    return out;
  }
  out.maximal_lines = geometric_maximal_lines(basis.nodes, degree).size();
  return out;
}

struct GeneratorTally {
  std::size_t trials = 0;
  std::size_t skipped = 0;
  std::size_t min_maximal_lines = 0;
  std::size_t max_maximal_lines = 0;

  bool operator==(const GeneratorTally&) const = default;
};

struct DegreeReport {
  int degree = 0;
  std::size_t trials = 0;
  std::size_t gc_sets = 0;
  std::size_t skipped = 0;
  std::size_t with_maximal_line = 0;
  std::vector<GeneratorTally> generators = std::vector<GeneratorTally>(3);

  bool operator==(const DegreeReport&) const = default;
};

struct SweepReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  int max_degree = 0;
  std::vector<DegreeReport> degrees;
  std::vector<TrialOutcome> violations;
  std::vector<std::string> skip_reasons;

  bool clean() const { return violations.empty(); }
  bool operator==(const SweepReport&) const = default;
};

/// Folds outcomes into a report; the result does not depend on their order.
inline SweepReport merge_outcomes(std::uint64_t seed, std::size_t trials, int max_degree,
                                  std::vector<TrialOutcome> outcomes) {
  std::sort(outcomes.begin(), outcomes.end(), [](const TrialOutcome& a, const TrialOutcome& b) {
    return std::pair(a.degree, a.trial) < std::pair(b.degree, b.trial);
  });
  SweepReport report{seed, trials, max_degree, {}, {}, {}};
  for (int n = 1; n <= max_degree; ++n) report.degrees.push_back(DegreeReport{n});
  for (auto& o : outcomes) {
    DegreeReport& d = report.degrees.at(o.degree - 1);
    GeneratorTally& g = d.generators[static_cast<std::size_t>(o.generator)];
    ++d.trials;
    ++g.trials;
    if (o.skipped) {
      ++d.skipped;
      ++g.skipped;
      report.skip_reasons.push_back("degree " + std::to_string(o.degree) + " trial " + std::to_string(o.trial) + ": " +
                                    o.skip_reason);
      continue;
    }
    ++d.gc_sets;
    std::size_t counted = g.trials - g.skipped;
    g.min_maximal_lines = counted == 1 ? o.maximal_lines : std::min(g.min_maximal_lines, o.maximal_lines);
    g.max_maximal_lines = std::max(g.max_maximal_lines, o.maximal_lines);
    if (o.maximal_lines > 0) {
      ++d.with_maximal_line;
    } else {
      report.violations.push_back(std::move(o));
    }
  }
  return report;
}

/// Runs `trials` seeded trials for every degree 1..max_degree on up to
/// `threads` worker threads.
inline SweepReport gasca_maeztu_sweep(int max_degree, std::size_t trials, std::uint64_t seed, unsigned threads = 1) {
  if (max_degree < 1 || max_degree > 5) throw DomainError("gm-sweep: degrees must lie in 1..5");
  const std::size_t total = trials * static_cast<std::size_t>(max_degree);
  std::vector<TrialOutcome> outcomes(total);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(total);
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        outcomes[i] = run_trial(seed, static_cast<int>(i / trials) + 1, i % trials);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return merge_outcomes(seed, trials, max_degree, std::move(outcomes));
}

}  // namespace bivar

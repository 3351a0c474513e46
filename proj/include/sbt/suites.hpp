#pragma once

// Verification suites shared by the CLI, the unit tests and the acceptance run.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sbt/singular.hpp"

namespace sbt {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> results;

  void add(std::string name, bool pass, std::string detail = {});
  void append(const Report& other);
  int failures() const;
  bool all_pass() const { return failures() == 0; }
  /// Failures only unless verbose.
  std::string to_string(bool verbose = false) const;
};

/// Random combination of a few basis terms with small coefficients.
AlgebraElement random_element(int n, int terms, std::mt19937_64& rng);
BasisKey random_key(int n, std::mt19937_64& rng);
/// Random word over sigma, sigma^-1, tau with at most max_tau singular tokens.
Word random_singular_word(int n, int len, int max_tau, std::mt19937_64& rng);

/// Every defining relation of B_n, SB_n, TB_n, TSB_n (under rho~ and varrho~)
/// and of E_n(u,v), over all admissible indices.
Report check_defining_relations(int n);
/// Relations of SE_n(u,v) under S -> x + ywR + zw^{-1}R^{-1}, element level and
/// graded-trace level.
Report check_sbt_relations(int n);

/// Rules (i)-(iii) on random elements up to max_level, plus cyclicity.
Report check_trace_axioms(int samples, int max_level, std::uint64_t seed);
Report check_cyclicity(int samples, int max_level, std::uint64_t seed);
/// All reduction-choice variants agree on random basis terms.
Report check_trace_well_defined(int samples, int max_level, std::uint64_t seed);
/// Conjugation and stabilization leave both invariants unchanged.
Report check_markov(int samples, int max_n, int max_len, int max_tau, std::uint64_t seed);
/// Graded equivalence and upsilon-hat agreement on random graded words.
Report check_graded(int samples, int max_n, int max_d, std::uint64_t seed);
/// Skein rules on random braid-encoded triples, including partition bookkeeping.
Report check_skein(int samples, std::uint64_t seed);
/// Union with a tied unknot multiplies by b/(aw).
Report check_union_tie(int samples, std::uint64_t seed);

/// Component-partition bookkeeping of a crossing between the strands at
/// positions i-1, i after the prefix alpha in the word alpha sigma_i beta.
struct CrossingComponents {
  int ci = 0;  // smaller component index in the closure of alpha sigma_i beta
  int cj = 0;
};
CrossingComponents crossing_components(const Word& alpha, int i, const Word& plus_word);

/// Re-expresses a partition produced by the skein operations (numbered as in
/// the skein notation) on the canonical components of the smoothed word.
SetPartition relabel_smoothed(const Word& plus_word, const Word& zero_word, const SetPartition& skein_partition,
                              const CrossingComponents& cc);

}  // namespace sbt

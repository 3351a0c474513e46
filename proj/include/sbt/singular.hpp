#pragma once

// Graded trace of the singular bt-algebra SE_n(u,v), reached through words.

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "sbt/invariant.hpp"

namespace sbt {

enum class GKind : std::uint8_t { R, Rinv, E, S };

struct GTok {
  GKind kind = GKind::R;
  int index = 1;

  friend bool operator==(const GTok&, const GTok&) = default;
  friend auto operator<=>(const GTok&, const GTok&) = default;
  std::string to_string() const;
};

struct GradedWord {
  int n = 1;
  std::vector<GTok> toks;

  int degree() const;
  friend bool operator==(const GradedWord&, const GradedWord&) = default;
  friend auto operator<=>(const GradedWord&, const GradedWord&) = default;
  std::string to_string() const;
};

/// Resolution vector entry: 0, 1 or -1.
using XVector = std::vector<int>;

/// The k-th term replaces the k-th S by R^r (r = 0 deletes it). Throws for d = 0.
std::vector<GradedWord> theta(const GradedWord& alpha, int r);

struct Resolution {
  GradedWord word;
  Scalar content;
};
/// u(alpha) and the content lambda_u = x^{e0} y^{e1} z^{e-1} w^{e1 - e-1}.
Resolution u_substitute(const GradedWord& alpha, const XVector& u);

/// pi: sigma -> R, sigma^{-1} -> R^{-1}, tau -> S, e -> E.
GradedWord graded_from_word(const Word& word);
/// Word with the inverse correspondence.
Word word_from_graded(const GradedWord& alpha);

/// Degree-zero words as elements of E_n(u,v).
AlgebraElement evaluate_plain(const GradedWord& alpha);
/// S_i -> x + y w R_i + z w^{-1} R_i^{-1}.
AlgebraElement evaluate_singular(const GradedWord& alpha);

/// E_{p,q} as the word R_p ... R_{q-2} E_{q-1} R_{q-2}^{-1} ... R_p^{-1} (1-based p < q).
std::vector<GTok> tie_word(int p, int q);
/// Tie tokens realizing a strand partition.
std::vector<GTok> ties_prefix(const SetPartition& ties);

class GradedTraceEngine {
 public:
  explicit GradedTraceEngine(TraceEngine& trace = TraceEngine::shared()) : trace_(trace) {}

  /// tr^(d) by the literal theta recursion, memoized on words.
  Scalar graded_trace(const GradedWord& alpha, Exec exec);
  Scalar graded_trace(const GradedWord& alpha) { return graded_trace(alpha, default_exec()); }
  void clear();

 private:
  Scalar recurse(const GradedWord& alpha);

  TraceEngine& trace_;
  std::shared_mutex mutex_;
  std::map<GradedWord, Scalar> memo_;
};

GradedTraceEngine& shared_graded_engine();

Scalar graded_trace(const GradedWord& alpha);

/// (1/(aw))^{n-1} w^{eps} tr^(d)(pi(alpha)) / d!, eps the sigma exponent sum
/// (pi carries no w on crossings, unlike rho).
Scalar upsilon_hat(const Word& word, const std::optional<SetPartition>& components_partition);

/// tr^(d)(alpha) == d! Tr(evaluate_singular(alpha)).
bool verify_equivalence(const GradedWord& alpha);

/// Sum over u in X^d of lambda_u Tr(u(alpha)).
Scalar multiplication_principle_sum(const GradedWord& alpha);

GradedWord random_graded_word(int n, int len, int d, std::uint64_t seed);

}  // namespace sbt

#pragma once

// Invariants of (tied) singular links from closed braid words.

#include <optional>

#include "sbt/btalgebra.hpp"
#include "sbt/trace.hpp"

namespace sbt {

enum class InvariantMode { upsilon, upsilon_prime };
enum class Specialization { psi, psi_prime };

ReprMode repr_mode(InvariantMode mode);

/// (1/(a w))^{n-1}.
Scalar normalization(int n);

/// Strand ties realizing a partition of the closure components. Inside each
/// block the smallest strand of every component is tied to the next one, so
/// the discrete partition gives no ties at all.
SetPartition strand_ties(const Word& word, const SetPartition& components_partition);

/// The partition of closure components induced by ties on the top strands
/// together with the word's own tie tokens.
SetPartition induced_component_partition(const Word& word, const SetPartition& top_ties);

/// (1/(aw))^{n-1} Tr(E_J repr(word)). Tie tokens in the word are allowed and
/// act through E_i. Throws ValidationError when the partition size does not
/// match the component count.
Scalar invariant(const Word& word, const std::optional<SetPartition>& components_partition,
                 InvariantMode mode, TraceEngine& engine = TraceEngine::shared());

/// Same with explicit strand ties.
Scalar invariant_with_strand_ties(const Word& word, const SetPartition& strand_ties,
                                  InvariantMode mode, TraceEngine& engine = TraceEngine::shared());

Bindings specialization_bindings(Specialization which);
Scalar specialize(const Scalar& value, Specialization which);

}  // namespace sbt

#include "sbt/invariant.hpp"

namespace sbt {

ReprMode repr_mode(InvariantMode mode) {
  return mode == InvariantMode::upsilon ? ReprMode::rho : ReprMode::varrho;
}

Scalar normalization(int n) {
  static const Scalar base = (Scalar::variable(Var::a) * Scalar::w()).inverse();
  return base.pow(n - 1);
}

SetPartition strand_ties(const Word& word, const SetPartition& components_partition) {
  const Components comps = closure_components(word);
  if (components_partition.size() != comps.count)
    throw ValidationError("partition has " + std::to_string(components_partition.size()) +
                          " points but the closure has " + std::to_string(comps.count) +
                          " components");
  // Components are numbered by their smallest strand, so that strand is the
  // first one met in increasing order.
  std::vector<int> rep(comps.count, -1);
  for (int s = 0; s < word.n; ++s) {
    if (rep[comps.strand_to_component[s]] < 0) rep[comps.strand_to_component[s]] = s;
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& block : components_partition.blocks()) {
    if (block.size() < 2) continue;
    std::vector<int> strands;
    for (int c : block) strands.push_back(rep[c]);
    blocks.push_back(std::move(strands));
  }
  return SetPartition::from_blocks(word.n, blocks);
}

SetPartition induced_component_partition(const Word& word, const SetPartition& top_ties) {
  const Components comps = closure_components(word);
  std::vector<int> labels(comps.count);
  for (int c = 0; c < comps.count; ++c) labels[c] = c;
  SetPartition part = SetPartition::singletons(comps.count);
  for (const auto& block : top_ties.blocks()) {
    for (std::size_t k = 1; k < block.size(); ++k)
      part = part.merge(comps.strand_to_component[block[0]], comps.strand_to_component[block[k]]);
  }
  // A tie e_i placed after the prefix p joins the top strands p(i-1), p(i).
  Permutation prefix = Permutation::identity(word.n);
  for (const auto& t : word.toks) {
    if (t.kind == TokKind::tie) {
      part = part.merge(comps.strand_to_component[prefix(t.index - 1)],
                        comps.strand_to_component[prefix(t.index)]);
    } else {
      prefix = prefix.times_simple(t.index);
    }
  }
  return part;
}

Scalar invariant_with_strand_ties(const Word& word, const SetPartition& ties, InvariantMode mode,
                                  TraceEngine& engine) {
  if (ties.size() != word.n) throw ValidationError("strand ties do not match the strand count");
  AlgebraElement x = repr(word, repr_mode(mode));
  if (!ties.is_discrete()) x = gen_ties(ties) * x;
  return normalization(word.n) * engine.trace(x);
}

Scalar invariant(const Word& word, const std::optional<SetPartition>& components_partition,
                 InvariantMode mode, TraceEngine& engine) {
  const SetPartition ties = components_partition ? strand_ties(word, *components_partition)
                                                 : SetPartition::singletons(word.n);
  return invariant_with_strand_ties(word, ties, mode, engine);
}

Bindings specialization_bindings(Specialization which) {
  Bindings b;
  b[Var::z] = RationalFunction(0);
  if (which == Specialization::psi) {
    b[Var::v] = RationalFunction(Polynomial::variable(Var::u));
  } else {
    const Polynomial s = Polynomial::variable(Var::s);
    b[Var::u] = RationalFunction(1);
    b[Var::v] = RationalFunction(s + Polynomial(1)) - RationalFunction::fraction(Polynomial(1), s);
  }
  return b;
}

Scalar specialize(const Scalar& value, Specialization which) {
  return value.substitute(specialization_bindings(which));
}

}  // namespace sbt

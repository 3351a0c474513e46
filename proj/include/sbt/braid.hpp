#pragma once

// Words in the (tied, singular) braid monoid. Words are never reduced here.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sbt/partition.hpp"

namespace sbt {

enum class TokKind : std::uint8_t { sigma, sigma_inv, tau, tie };

struct GenTok {
  TokKind kind = TokKind::sigma;
  int index = 1;  // 1-based generator index

  friend bool operator==(const GenTok&, const GenTok&) = default;
  std::string to_string() const;
};

struct Word {
  int n = 1;
  std::vector<GenTok> toks;

  Word() = default;
  Word(int strands, std::vector<GenTok> tokens);

  bool is_classical() const;
  bool has_ties() const;
  int singular_count() const;
  /// Exponent sum of the sigma tokens.
  int exponent_sum() const;
  /// Same tokens over more strands.
  Word with_strands(int strands) const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  std::string to_string() const;
};

GenTok sigma(int i);
GenTok sigma_inv(int i);
GenTok tau(int i);
GenTok tie(int i);

Permutation underlying_permutation(const Word& w);

struct Components {
  int count = 0;
  std::vector<int> strand_to_component;  // numbered by smallest strand
};
Components closure_components(const Word& w);

Word random_word(int n, int len, const std::set<TokKind>& alphabet, std::uint64_t seed);

/// Cyclic rotation moving the first k tokens to the end.
Word conjugate(const Word& w, int k);
/// Appends sigma_n^{+1} or sigma_n^{-1} on n+1 strands.
Word stabilize(const Word& w, bool positive);

/// Tokens `s<i>`, `s<i>^-1`, `t<i>`, `e<i>`; strands defaults to 1 + max index.
Word parse_word(std::string_view text, int strands = 0);
Word parse_word(const std::vector<std::string>& tokens, int strands = 0);

}  // namespace sbt

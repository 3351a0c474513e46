#pragma once

// Set partitions of {0..n-1} as restricted-growth strings, and permutations
// acting on them. Points are 0-based; generator indices (s_i, E_i, R_i) are
// 1-based, s_i swapping points i-1 and i.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sbt/errors.hpp"

namespace sbt {

inline constexpr int kMaxPoints = 12;

class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  /// Simple transposition s_i, 1 <= i <= n-1.
  static Permutation simple(int n, int i);
  static Permutation from_images(const std::vector<int>& images);

  int size() const { return n_; }
  int operator()(int point) const { return img_[point]; }
  bool is_identity() const;

  /// (w * v)(i) = w(v(i)).
  friend Permutation operator*(const Permutation& w, const Permutation& v);
  Permutation inverse() const;
  /// w * s_i without building s_i.
  Permutation times_simple(int i) const;
  /// Number of inversions.
  int length() const;
  /// True when l(w s_i) < l(w), i.e. w(i-1) > w(i).
  bool has_right_descent(int i) const { return img_[i - 1] > img_[i]; }
  /// Reduced word (generator indices) with w = s_{r[0]} s_{r[1]} ...
  std::vector<int> reduced_word() const;
  /// Same permutation on n+k points fixing the new ones.
  Permutation extended(int n) const;
  /// Drops the last point, which must be fixed.
  Permutation restricted() const;
  std::vector<int> images() const { return {img_.begin(), img_.begin() + n_}; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxPoints> img_{};
};

class SetPartition {
 public:
  SetPartition() = default;
  /// The partition into singletons (the identity of the join monoid).
  static SetPartition singletons(int n);
  /// Everything in one block.
  static SetPartition single_block(int n);
  /// Any labelling of points; relabelled to the restricted-growth form.
  static SetPartition from_labels(const std::vector<int>& labels);
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// The generator mu_{i,j}: unique non-singleton block {i, j} (0-based points).
  static SetPartition pair(int n, int i, int j);

  int size() const { return n_; }
  int label(int point) const { return code_[point]; }
  bool same_block(int i, int j) const { return code_[i] == code_[j]; }
  int num_blocks() const;
  bool is_discrete() const { return num_blocks() == n_; }
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_of(int point) const;
  std::vector<int> code() const { return {code_.begin(), code_.begin() + n_}; }

  SetPartition join(const SetPartition& other) const;
  /// Blocks mapped elementwise by w.
  SetPartition apply(const Permutation& w) const;
  /// True when every block of *this lies inside a block of coarser.
  bool refines(const SetPartition& coarser) const;

  /// I^+: adds the singleton {n}.
  SetPartition plus() const;
  /// I_{i,j}: joins the blocks of i and j.
  SetPartition merge(int i, int j) const;
  /// Omits point j and renumbers (tilde I_{i,j}, i < j).
  SetPartition drop(int j) const;
  /// tilde I_{i,i}: a new point n joined to the block of i.
  SetPartition attach(int i) const;
  /// I*_{i,j}: drop(j) for i < j, plus() for i == j.
  SetPartition star(int i, int j) const;
  /// Removes the last point from its block (I^- in the trace reduction).
  SetPartition restricted() const;
  /// Same blocks on n points, new points as singletons.
  SetPartition extended(int n) const;

  static std::vector<SetPartition> enumerate(int n);

  /// `1,2|4,6` with 1-based points; singletons may be omitted; `-` or empty
  /// means no blocks.
  static SetPartition parse(std::string_view text, int n);
  /// Non-singleton blocks, or `-` when there are none.
  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxPoints> code_{};
};

}  // namespace sbt

#pragma once

// The Markov trace on E_n(u,v), computed by strand reduction on basis terms.

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "sbt/btalgebra.hpp"

namespace sbt {

/// Choices inside the reduction. Every combination computes the same trace.
struct TraceOptions {
  bool case2_max = true;        // tie partner j = max(B \ {n}), else min
  bool alt_conjugator = false;  // compose the conjugator with the longest element of S_{n-2}
  bool left_coset = false;      // split T_w = T_A R_{n-1} T_B on the left instead of the right
  bool case3_top_max = true;    // strand used to re-tie across R_{n-1}

  std::string to_string() const;
};

class TraceEngine {
 public:
  explicit TraceEngine(TraceOptions options = {});
  TraceEngine(const TraceEngine&) = delete;
  TraceEngine& operator=(const TraceEngine&) = delete;

  /// Engine with default options shared by the whole process.
  static TraceEngine& shared();

  const TraceOptions& options() const { return options_; }

  Scalar trace(const AlgebraElement& x);
  Scalar trace(const AlgebraElement& x, Exec exec);
  /// Trace of a single basis element (memoized).
  Scalar trace_key(const BasisKey& key);
  /// Fills the table for every key at level n (and below).
  void build_level(int n, Exec exec);
  std::size_t table_size(int n);
  void clear();

 private:
  struct Level {
    std::shared_mutex mutex;
    std::map<BasisKey, Scalar> table;
  };

  Level& level(int n);
  Scalar compute(const BasisKey& key);
  Scalar reduce_fixed(const BasisKey& key);
  Scalar reduce_moving(const BasisKey& key);
  /// Tr(E_J T_v R_{n-1}) for v fixing the last strand.
  Scalar trace_times_last_R(const SetPartition& ties, const Permutation& v);

  TraceOptions options_;
  std::mutex levels_mutex_;
  std::vector<std::unique_ptr<Level>> levels_;
};

/// Tr with the shared engine.
Scalar trace(const AlgebraElement& x);

}  // namespace sbt

#pragma once

// The bt-algebra E_n(u,v) on the basis E_I T_w.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sbt/braid.hpp"
#include "sbt/partition.hpp"
#include "sbt/scalar.hpp"

namespace sbt {

/// Serial reference path or OpenMP path. Both give identical results.
enum class Exec { serial, parallel };

void set_default_exec(Exec exec);
Exec default_exec();

struct BasisKey {
  SetPartition ties;
  Permutation perm;

  static BasisKey unit(int n) { return {SetPartition::singletons(n), Permutation::identity(n)}; }
  int level() const { return perm.size(); }

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
  std::string to_string() const;
};

/// All Bell(n) * n! keys in a fixed order.
std::vector<BasisKey> all_basis_keys(int n);

class AlgebraElement {
 public:
  using Terms = std::map<BasisKey, Scalar>;

  AlgebraElement() = default;
  explicit AlgebraElement(int n) : n_(n) {}
  AlgebraElement(int n, Terms terms);
  static AlgebraElement unit(int n) { return scalar(n, Scalar(1)); }
  static AlgebraElement scalar(int n, const Scalar& c);
  static AlgebraElement basis(const BasisKey& key, const Scalar& c = Scalar(1));

  int level() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a key (zero when absent).
  Scalar coeff(const BasisKey& key) const;

  void add_term(const BasisKey& key, const Scalar& c);
  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement l, const AlgebraElement& r) { return l += r; }
  friend AlgebraElement operator-(AlgebraElement l, const AlgebraElement& r) { return l -= r; }
  AlgebraElement scaled(const Scalar& c) const;
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& x) { return x.scaled(c); }

  friend AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs);
  AlgebraElement multiply(const AlgebraElement& rhs, Exec exec) const;

  /// Image under the inclusion E_n -> E_m (m >= n).
  AlgebraElement extended(int m) const;
  /// Inverse of the inclusion; throws if some key moves or ties the last strand.
  AlgebraElement restricted() const;

  friend bool operator==(const AlgebraElement& lhs, const AlgebraElement& rhs);
  std::string to_string() const;

 private:
  int n_ = 1;
  Terms terms_;
};

/// One term of T_w T_v = sum coeff * E_K T_p; coeff is a polynomial in u, v.
struct TTTerm {
  SetPartition ties;
  Permutation perm;
  Polynomial coeff;
};

/// Memoized expansion of T_w T_v (thread safe).
const std::vector<TTTerm>& tt_product(const Permutation& w, const Permutation& v);
/// Uncached expansion, for tests and benchmarks.
std::vector<TTTerm> tt_product_uncached(const Permutation& w, const Permutation& v);
void clear_algebra_caches();

// Generators (1-based index i, 1 <= i <= n-1).
AlgebraElement gen_R(int n, int i);
AlgebraElement gen_E(int n, int i);
AlgebraElement gen_Rinv(int n, int i);
/// E_I for an arbitrary partition.
AlgebraElement gen_ties(const SetPartition& ties);
/// T_w and its inverse.
AlgebraElement gen_T(const Permutation& w);
AlgebraElement gen_T_inverse(const Permutation& w);

enum class ReprMode { rho, varrho };

/// Multiplicative image of a (tied, singular) braid word.
AlgebraElement repr(const Word& word, ReprMode mode);
AlgebraElement repr_token(int n, const GenTok& tok, ReprMode mode);

/// The coefficient w^{-1} = w a u / (a + b - v b).
Scalar w_inverse();

}  // namespace sbt

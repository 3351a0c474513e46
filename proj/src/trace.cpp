#include "sbt/trace.hpp"

#include <algorithm>

namespace sbt {

namespace {

const Scalar& var_a() {
  static const Scalar a = Scalar::variable(Var::a);
  return a;
}

const Scalar& var_b() {
  static const Scalar b = Scalar::variable(Var::b);
  return b;
}

// s_first s_{first+1} ... s_last (generator indices, empty when first > last).
Permutation ascending_product(int n, int first, int last) {
  Permutation p = Permutation::identity(n);
  for (int g = first; g <= last; ++g) p = p.times_simple(g);
  return p;
}

// s_first s_{first-1} ... s_last with first >= last.
Permutation descending_product(int n, int first, int last) {
  Permutation p = Permutation::identity(n);
  for (int g = first; g >= last; --g) p = p.times_simple(g);
  return p;
}

// Longest element of S_k acting on the first k points of n.
Permutation longest_prefix(int n, int k) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i < k ? k - 1 - i : i;
  return Permutation::from_images(images);
}

}  // namespace

std::string TraceOptions::to_string() const {
  std::string s;
  s += case2_max ? "case2=max" : "case2=min";
  s += alt_conjugator ? ",conj=alt" : ",conj=std";
  s += left_coset ? ",coset=left" : ",coset=right";
  s += case3_top_max ? ",retie=max" : ",retie=min";
  return s;
}

TraceEngine::TraceEngine(TraceOptions options) : options_(options) {}

TraceEngine& TraceEngine::shared() {
  static TraceEngine engine;
  return engine;
}

TraceEngine::Level& TraceEngine::level(int n) {
  std::lock_guard lock(levels_mutex_);
  while (static_cast<int>(levels_.size()) <= n) levels_.push_back(std::make_unique<Level>());
  return *levels_[n];
}

void TraceEngine::clear() {
  std::lock_guard lock(levels_mutex_);
  levels_.clear();
}

std::size_t TraceEngine::table_size(int n) {
  Level& lv = level(n);
  std::shared_lock lock(lv.mutex);
  return lv.table.size();
}

Scalar TraceEngine::trace(const AlgebraElement& x) { return trace(x, default_exec()); }

Scalar TraceEngine::trace(const AlgebraElement& x, Exec exec) {
  const std::vector<std::pair<BasisKey, Scalar>> terms(x.terms().begin(), x.terms().end());
  std::vector<Scalar> values(terms.size());
  if (exec == Exec::parallel && terms.size() > 1) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < terms.size(); ++i) values[i] = terms[i].second * trace_key(terms[i].first);
  } else {
    for (std::size_t i = 0; i < terms.size(); ++i) values[i] = terms[i].second * trace_key(terms[i].first);
  }
  Scalar sum;
  for (const auto& v : values) sum += v;
  return sum;
}

Scalar TraceEngine::trace_key(const BasisKey& key) {
  const int n = key.level();
  if (n <= 1) return Scalar(1);
  Level& lv = level(n);
  {
    std::shared_lock lock(lv.mutex);
    auto it = lv.table.find(key);
    if (it != lv.table.end()) return it->second;
  }
  Scalar value = compute(key);
  std::unique_lock lock(lv.mutex);
  return lv.table.try_emplace(key, std::move(value)).first->second;
}

void TraceEngine::build_level(int n, Exec exec) {
  for (int m = 2; m < n; ++m) build_level(m, exec);
  const std::vector<BasisKey> keys = all_basis_keys(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < keys.size(); ++i) trace_key(keys[i]);
  } else {
    for (const auto& k : keys) trace_key(k);
  }
}

Scalar TraceEngine::compute(const BasisKey& key) {
  const int last = key.level() - 1;
  if (key.perm(last) == last) return reduce_fixed(key);
  return reduce_moving(key);
}

Scalar TraceEngine::reduce_fixed(const BasisKey& key) {
  const int n = key.level();
  const int last = n - 1;
  std::vector<int> block = key.ties.block_of(last);
  if (block.size() == 1) return trace_key({key.ties.restricted(), key.perm.restricted()});

  // E_I = E_{I'} E_{j,n}, E_{j,n} = T_c E_{n-1} T_c^{-1}; by cyclicity
  // Tr(E_I T_w) = Tr(Z E_{n-1}) = b Tr(Z) with Z = T_c^{-1} T_w E_{I'} T_c.
  block.pop_back();
  const int j = options_.case2_max ? block.back() : block.front();
  const SetPartition rest = key.ties.restricted().plus();
  Permutation c = ascending_product(n, j + 1, n - 2);
  if (options_.alt_conjugator && n >= 3) c = c * longest_prefix(n, n - 2);

  const AlgebraElement middle = AlgebraElement::basis({rest.apply(key.perm), key.perm});
  const AlgebraElement z = gen_T_inverse(c) * middle * gen_T(c);
  return var_b() * trace(z.restricted());
}

Scalar TraceEngine::reduce_moving(const BasisKey& key) {
  const int n = key.level();
  const int last = n - 1;
  const Permutation& w = key.perm;
  // T_w = T_A R_{n-1} T_B with A, B fixing the last strand and lengths adding up.
  Permutation a;
  Permutation b;
  if (!options_.left_coset) {
    const int m = w.inverse()(last) + 1;  // generator-index form of w^{-1}(n)
    b = descending_product(n, n - 2, m);
    const Permutation tail = Permutation::simple(n, n - 1) * b;
    a = w * tail.inverse();
  } else {
    const int p = w(last) + 1;
    a = ascending_product(n, p, n - 2);
    const Permutation head = a * Permutation::simple(n, n - 1);
    b = head.inverse() * w;
  }
  // Tr(E_I T_A R_{n-1} T_B) = Tr(E_{B(I)} T_B T_A R_{n-1}).
  const SetPartition moved = key.ties.apply(b);
  Scalar total;
  for (const auto& t : tt_product(b, a)) {
    const SetPartition ties = t.ties.is_discrete() ? moved : moved.join(t.ties);
    const Scalar tr = trace_times_last_R(ties, t.perm);
    if (tr.is_zero()) continue;
    total += t.coeff.is_constant() && t.coeff.constant_value() == 1 ? tr : Scalar(t.coeff) * tr;
  }
  return total;
}

Scalar TraceEngine::trace_times_last_R(const SetPartition& ties, const Permutation& v) {
  const int n = ties.size();
  const int last = n - 1;
  std::vector<int> block = ties.block_of(last);
  const Permutation v_small = v.restricted();
  if (block.size() == 1) return var_a() * trace_key({ties.restricted(), v_small});
  block.pop_back();
  const SetPartition rest = ties.restricted();
  if (std::find(block.begin(), block.end(), v(n - 2)) != block.end()) {
    // E_{v(n-1),n} T_v = T_v E_{n-1}, and Tr(X E_{n-1} R_{n-1}) = a Tr(X).
    return var_a() * trace_key({rest, v_small});
  }
  // E_{j,n} T_v R_{n-1} = T_v R_{n-1} E_{j'',n-1} with j'' = v^{-1}(j); rotate the tie.
  const int j = options_.case3_top_max ? block.back() : block.front();
  const int jj = v.inverse()(j);
  const SetPartition tied = rest.join(SetPartition::pair(n - 1, jj, n - 2));
  return var_a() * trace_key({tied, v_small});
}

Scalar trace(const AlgebraElement& x) { return TraceEngine::shared().trace(x); }

}  // namespace sbt

#include "sbt/btalgebra.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>

namespace sbt {

namespace {

std::atomic<Exec> g_exec{Exec::parallel};

struct TTCache {
  std::shared_mutex mutex;
  std::map<std::pair<Permutation, Permutation>, std::vector<TTTerm>> table;
};

TTCache& tt_cache() {
  static TTCache cache;
  return cache;
}

const Polynomial& u_minus_one() {
  static const Polynomial p = Polynomial::variable(Var::u) - Polynomial(1);
  return p;
}

const Polynomial& v_minus_one() {
  static const Polynomial p = Polynomial::variable(Var::v) - Polynomial(1);
  return p;
}

void check_level(int n, int i) {
  if (i < 1 || i >= n)
    throw ValidationError("generator index " + std::to_string(i) + " out of range at level " +
                          std::to_string(n));
}

}  // namespace

void set_default_exec(Exec exec) { g_exec = exec; }
Exec default_exec() { return g_exec; }

std::string BasisKey::to_string() const { return "E{" + ties.to_string() + "}T" + perm.to_string(); }

std::vector<BasisKey> all_basis_keys(int n) {
  std::vector<Permutation> perms;
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  do {
    perms.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  std::vector<BasisKey> keys;
  for (const auto& p : SetPartition::enumerate(n)) {
    for (const auto& w : perms) keys.push_back({p, w});
  }
  return keys;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(int n, Terms terms) : n_(n) {
  for (auto& [k, c] : terms) {
    if (k.level() != n) throw ValidationError("basis key level mismatch");
    if (!c.is_zero()) terms_.emplace(k, std::move(c));
  }
}

AlgebraElement AlgebraElement::scalar(int n, const Scalar& c) {
  AlgebraElement x(n);
  x.add_term(BasisKey::unit(n), c);
  return x;
}

AlgebraElement AlgebraElement::basis(const BasisKey& key, const Scalar& c) {
  AlgebraElement x(key.level());
  x.add_term(key, c);
  return x;
}

Scalar AlgebraElement::coeff(const BasisKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar() : it->second;
}

void AlgebraElement::add_term(const BasisKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  if (rhs.n_ != n_ && !rhs.is_zero() && !is_zero()) throw ValidationError("level mismatch in sum");
  if (is_zero()) n_ = rhs.n_;
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  if (rhs.n_ != n_ && !rhs.is_zero() && !is_zero()) throw ValidationError("level mismatch in difference");
  if (is_zero()) n_ = rhs.n_;
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement x(n_);
  if (c.is_zero()) return x;
  for (const auto& [k, v] : terms_) x.terms_.emplace_hint(x.terms_.end(), k, v * c);
  return x;
}

AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  return lhs.multiply(rhs, default_exec());
}

AlgebraElement AlgebraElement::multiply(const AlgebraElement& rhs, Exec exec) const {
  if (n_ != rhs.n_) throw ValidationError("level mismatch in product");
  const std::vector<std::pair<BasisKey, Scalar>> left(terms_.begin(), terms_.end());
  const std::vector<std::pair<BasisKey, Scalar>> right(rhs.terms_.begin(), rhs.terms_.end());
  std::vector<Terms> partial(left.size());

  auto kernel = [&](std::size_t i) {
    const auto& [lk, lc] = left[i];
    Terms& local = partial[i];
    for (const auto& [rk, rc] : right) {
      // E_I T_w E_J T_v = E_{I v w(J)} T_w T_v
      const SetPartition fused = lk.ties.join(rk.ties.apply(lk.perm));
      const Scalar c = lc * rc;
      for (const auto& t : tt_product(lk.perm, rk.perm)) {
        BasisKey key{t.ties.is_discrete() ? fused : fused.join(t.ties), t.perm};
        Scalar val = t.coeff.is_constant() && t.coeff.constant_value() == 1 ? c : c * Scalar(t.coeff);
        auto [it, inserted] = local.try_emplace(key, val);
        if (!inserted) it->second += val;
      }
    }
  };

  if (exec == Exec::parallel && left.size() > 1) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < left.size(); ++i) kernel(i);
  } else {
    for (std::size_t i = 0; i < left.size(); ++i) kernel(i);
  }

  // Fixed-order reduction keeps the result independent of scheduling.
  AlgebraElement out(n_);
  for (const auto& local : partial) {
    for (const auto& [k, c] : local) out.add_term(k, c);
  }
  return out;
}

AlgebraElement AlgebraElement::extended(int m) const {
  AlgebraElement x(m);
  for (const auto& [k, c] : terms_) x.terms_.emplace(BasisKey{k.ties.extended(m), k.perm.extended(m)}, c);
  return x;
}

AlgebraElement AlgebraElement::restricted() const {
  AlgebraElement x(n_ - 1);
  for (const auto& [k, c] : terms_) {
    if (k.perm(n_ - 1) != n_ - 1 || k.ties.block_of(n_ - 1).size() != 1)
      throw ValidationError("element does not lie in the smaller algebra");
    x.terms_.emplace(BasisKey{k.ties.restricted(), k.perm.restricted()}, c);
  }
  return x;
}

bool operator==(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  auto li = lhs.terms_.begin();
  for (auto ri = rhs.terms_.begin(); ri != rhs.terms_.end(); ++ri, ++li) {
    if (!(li->first == ri->first) || !(li->second == ri->second)) return false;
  }
  return true;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + k.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// T_w T_v

std::vector<TTTerm> tt_product_uncached(const Permutation& w, const Permutation& v) {
  const int n = w.size();
  if (v.size() != n) throw ValidationError("level mismatch in T_w T_v");
  std::map<std::pair<SetPartition, Permutation>, Polynomial> cur;
  cur.emplace(std::pair{SetPartition::singletons(n), w}, Polynomial(1));
  for (int j : v.reduced_word()) {
    std::map<std::pair<SetPartition, Permutation>, Polynomial> next;
    auto add = [&next](const SetPartition& k, const Permutation& p, const Polynomial& c) {
      auto [it, inserted] = next.try_emplace({k, p}, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) next.erase(it);
      }
    };
    for (const auto& [key, c] : cur) {
      const auto& [ties, p] = key;
      const Permutation ps = p.times_simple(j);
      if (!p.has_right_descent(j)) {
        add(ties, ps, c);
      } else {
        // T_p R_j = T_{ps} + (u-1) E_pi T_{ps} + (v-1) E_pi T_p, pi = {p(j-1), p(j)}
        const SetPartition tied = ties.join(SetPartition::pair(n, p(j - 1), p(j)));
        add(ties, ps, c);
        add(tied, ps, c * u_minus_one());
        add(tied, p, c * v_minus_one());
      }
    }
    cur = std::move(next);
  }
  std::vector<TTTerm> out;
  out.reserve(cur.size());
  for (auto& [key, c] : cur) out.push_back({key.first, key.second, std::move(c)});
  return out;
}

const std::vector<TTTerm>& tt_product(const Permutation& w, const Permutation& v) {
  TTCache& cache = tt_cache();
  const auto key = std::pair{w, v};
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  std::vector<TTTerm> terms = tt_product_uncached(w, v);
  std::unique_lock lock(cache.mutex);
  return cache.table.try_emplace(key, std::move(terms)).first->second;
}

void clear_algebra_caches() {
  TTCache& cache = tt_cache();
  std::unique_lock lock(cache.mutex);
  cache.table.clear();
}

// ---------------------------------------------------------------------------
// Generators and representations

AlgebraElement gen_R(int n, int i) {
  check_level(n, i);
  return AlgebraElement::basis({SetPartition::singletons(n), Permutation::simple(n, i)});
}

AlgebraElement gen_E(int n, int i) {
  check_level(n, i);
  return AlgebraElement::basis({SetPartition::pair(n, i - 1, i), Permutation::identity(n)});
}

AlgebraElement gen_Rinv(int n, int i) {
  check_level(n, i);
  // R_i^{-1} = R_i + (1-v)/u E_i + (1/u - 1) E_i R_i
  const Scalar u = Scalar::variable(Var::u);
  const Scalar v = Scalar::variable(Var::v);
  const SetPartition tie = SetPartition::pair(n, i - 1, i);
  const Permutation s = Permutation::simple(n, i);
  AlgebraElement x(n);
  x.add_term({SetPartition::singletons(n), s}, Scalar(1));
  x.add_term({tie, Permutation::identity(n)}, (Scalar(1) - v) / u);
  x.add_term({tie, s}, Scalar(1) / u - Scalar(1));
  return x;
}

AlgebraElement gen_ties(const SetPartition& ties) {
  return AlgebraElement::basis({ties, Permutation::identity(ties.size())});
}

AlgebraElement gen_T(const Permutation& w) {
  return AlgebraElement::basis({SetPartition::singletons(w.size()), w});
}

AlgebraElement gen_T_inverse(const Permutation& w) {
  const int n = w.size();
  AlgebraElement x = AlgebraElement::unit(n);
  const std::vector<int> word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = x * gen_Rinv(n, *it);
  return x;
}

Scalar w_inverse() {
  static const Scalar inv = Scalar::w().inverse();
  return inv;
}

AlgebraElement repr_token(int n, const GenTok& tok, ReprMode mode) {
  const int i = tok.index;
  switch (tok.kind) {
    case TokKind::sigma: return gen_R(n, i).scaled(Scalar::w());
    case TokKind::sigma_inv: return gen_Rinv(n, i).scaled(w_inverse());
    case TokKind::tie: return gen_E(n, i);
    case TokKind::tau: {
      const Scalar x = Scalar::variable(Var::x);
      const Scalar yw = Scalar::variable(Var::y) * Scalar::w();
      if (mode == ReprMode::rho) {
        const Scalar zw = Scalar::variable(Var::z) * w_inverse();
        return AlgebraElement::scalar(n, x) + gen_R(n, i).scaled(yw) + gen_Rinv(n, i).scaled(zw);
      }
      const AlgebraElement e = gen_E(n, i);
      return e.scaled(x) + (e * gen_R(n, i)).scaled(yw);
    }
  }
  throw std::logic_error("unknown token kind");
}

AlgebraElement repr(const Word& word, ReprMode mode) {
  AlgebraElement x = AlgebraElement::unit(word.n);
  for (const auto& t : word.toks) x = x * repr_token(word.n, t, mode);
  return x;
}

}  // namespace sbt

#include "sbt/singular.hpp"

#include <algorithm>
#include <random>

namespace sbt {

std::string GTok::to_string() const {
  const std::string i = std::to_string(index);
  switch (kind) {
    case GKind::R: return "R" + i;
    case GKind::Rinv: return "R" + i + "^-1";
    case GKind::E: return "E" + i;
    case GKind::S: return "S" + i;
  }
  return {};
}

int GradedWord::degree() const {
  return static_cast<int>(
      std::count_if(toks.begin(), toks.end(), [](const GTok& t) { return t.kind == GKind::S; }));
}

std::string GradedWord::to_string() const {
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out += ' ';
    out += t.to_string();
  }
  return out.empty() ? "1" : out;
}

std::vector<GradedWord> theta(const GradedWord& alpha, int r) {
  if (r < -1 || r > 1) throw ValidationError("theta index must be 0, 1 or -1");
  std::vector<GradedWord> out;
  for (std::size_t pos = 0; pos < alpha.toks.size(); ++pos) {
    if (alpha.toks[pos].kind != GKind::S) continue;
    GradedWord term = alpha;
    if (r == 0) {
      term.toks.erase(term.toks.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      term.toks[pos].kind = r == 1 ? GKind::R : GKind::Rinv;
    }
    out.push_back(std::move(term));
  }
  if (out.empty()) throw ValidationError("theta needs a word of positive degree");
  return out;
}

Resolution u_substitute(const GradedWord& alpha, const XVector& u) {
  if (static_cast<int>(u.size()) != alpha.degree())
    throw ValidationError("resolution vector length differs from the degree");
  Resolution res{GradedWord{alpha.n, {}}, Scalar(1)};
  int e[3] = {0, 0, 0};  // exponents of x, y, z
  std::size_t k = 0;
  for (const auto& t : alpha.toks) {
    if (t.kind != GKind::S) {
      res.word.toks.push_back(t);
      continue;
    }
    const int r = u[k++];
    if (r == 1) {
      res.word.toks.push_back({GKind::R, t.index});
      ++e[1];
    } else if (r == -1) {
      res.word.toks.push_back({GKind::Rinv, t.index});
      ++e[2];
    } else if (r == 0) {
      ++e[0];
    } else {
      throw ValidationError("resolution entries must be 0, 1 or -1");
    }
  }
  res.content = Scalar::variable(Var::x).pow(e[0]) * Scalar::variable(Var::y).pow(e[1]) *
                Scalar::variable(Var::z).pow(e[2]) * Scalar::w().pow(e[1] - e[2]);
  return res;
}

GradedWord graded_from_word(const Word& word) {
  GradedWord g{word.n, {}};
  for (const auto& t : word.toks) {
    switch (t.kind) {
      case TokKind::sigma: g.toks.push_back({GKind::R, t.index}); break;
      case TokKind::sigma_inv: g.toks.push_back({GKind::Rinv, t.index}); break;
      case TokKind::tau: g.toks.push_back({GKind::S, t.index}); break;
      case TokKind::tie: g.toks.push_back({GKind::E, t.index}); break;
    }
  }
  return g;
}

Word word_from_graded(const GradedWord& alpha) {
  std::vector<GenTok> toks;
  for (const auto& t : alpha.toks) {
    switch (t.kind) {
      case GKind::R: toks.push_back(sigma(t.index)); break;
      case GKind::Rinv: toks.push_back(sigma_inv(t.index)); break;
      case GKind::S: toks.push_back(tau(t.index)); break;
      case GKind::E: toks.push_back(tie(t.index)); break;
    }
  }
  return Word(alpha.n, std::move(toks));
}

namespace {

AlgebraElement evaluate(const GradedWord& alpha, bool allow_singular) {
  const int n = alpha.n;
  AlgebraElement x = AlgebraElement::unit(n);
  for (const auto& t : alpha.toks) {
    switch (t.kind) {
      case GKind::R: x = x * gen_R(n, t.index); break;
      case GKind::Rinv: x = x * gen_Rinv(n, t.index); break;
      case GKind::E: x = x * gen_E(n, t.index); break;
      case GKind::S:
        if (!allow_singular) throw ValidationError("singular token in a degree-zero evaluation");
        x = x * repr_token(n, tau(t.index), ReprMode::rho);
        break;
    }
  }
  return x;
}

}  // namespace

AlgebraElement evaluate_plain(const GradedWord& alpha) { return evaluate(alpha, false); }
AlgebraElement evaluate_singular(const GradedWord& alpha) { return evaluate(alpha, true); }

std::vector<GTok> tie_word(int p, int q) {
  std::vector<GTok> toks;
  for (int g = p; g <= q - 2; ++g) toks.push_back({GKind::R, g});
  toks.push_back({GKind::E, q - 1});
  for (int g = q - 2; g >= p; --g) toks.push_back({GKind::Rinv, g});
  return toks;
}

std::vector<GTok> ties_prefix(const SetPartition& ties) {
  std::vector<GTok> toks;
  for (const auto& block : ties.blocks()) {
    for (std::size_t k = 1; k < block.size(); ++k) {
      auto part = tie_word(block[k - 1] + 1, block[k] + 1);
      toks.insert(toks.end(), part.begin(), part.end());
    }
  }
  return toks;
}

// ---------------------------------------------------------------------------

void GradedTraceEngine::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

Scalar GradedTraceEngine::graded_trace(const GradedWord& alpha, Exec exec) {
  const int d = alpha.degree();
  if (d == 0 || exec == Exec::serial) return recurse(alpha);
  // Top-level branches in parallel; combination order is fixed.
  std::vector<GradedWord> branches;
  for (int r : {0, 1, -1}) {
    auto terms = theta(alpha, r);
    branches.insert(branches.end(), terms.begin(), terms.end());
  }
  std::vector<Scalar> values(branches.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < branches.size(); ++i) values[i] = recurse(branches[i]);
  const Scalar weights[3] = {Scalar::variable(Var::x), Scalar::variable(Var::y) * Scalar::w(),
                             Scalar::variable(Var::z) * w_inverse()};
  Scalar total;
  for (int r = 0; r < 3; ++r) {
    Scalar part;
    for (int k = 0; k < d; ++k) part += values[r * d + k];
    total += weights[r] * part;
  }
  return total;
}

Scalar GradedTraceEngine::recurse(const GradedWord& alpha) {
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
  }
  Scalar value;
  if (alpha.degree() == 0) {
    value = trace_.trace(evaluate_plain(alpha));
  } else {
    // tr^(d)(a) = tr^(d-1)(x th_0(a) + y w th_1(a) + z w^{-1} th_{-1}(a))
    Scalar s0;
    Scalar s1;
    Scalar s2;
    for (const auto& t : theta(alpha, 0)) s0 += recurse(t);
    for (const auto& t : theta(alpha, 1)) s1 += recurse(t);
    for (const auto& t : theta(alpha, -1)) s2 += recurse(t);
    value = Scalar::variable(Var::x) * s0 + Scalar::variable(Var::y) * Scalar::w() * s1 +
            Scalar::variable(Var::z) * w_inverse() * s2;
  }
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(alpha, std::move(value)).first->second;
}

GradedTraceEngine& shared_graded_engine() {
  static GradedTraceEngine engine;
  return engine;
}

Scalar graded_trace(const GradedWord& alpha) { return shared_graded_engine().graded_trace(alpha); }

namespace {

Scalar factorial(int d) {
  long f = 1;
  for (int k = 2; k <= d; ++k) f *= k;
  return Scalar(f);
}

}  // namespace

Scalar upsilon_hat(const Word& word, const std::optional<SetPartition>& components_partition) {
  GradedWord alpha{word.n, {}};
  if (components_partition) alpha.toks = ties_prefix(strand_ties(word, *components_partition));
  const GradedWord body = graded_from_word(word);
  alpha.toks.insert(alpha.toks.end(), body.toks.begin(), body.toks.end());
  const int d = alpha.degree();
  return normalization(word.n) * Scalar::w().pow(word.exponent_sum()) * graded_trace(alpha) /
         factorial(d);
}

bool verify_equivalence(const GradedWord& alpha) {
  const Scalar lhs = graded_trace(alpha);
  const Scalar rhs = factorial(alpha.degree()) * trace(evaluate_singular(alpha));
  return lhs == rhs;
}

Scalar multiplication_principle_sum(const GradedWord& alpha) {
  const int d = alpha.degree();
  XVector u(d, -1);
  Scalar total;
  while (true) {
    const Resolution res = u_substitute(alpha, u);
    total += res.content * trace(evaluate_plain(res.word));
    int k = d - 1;
    while (k >= 0 && u[k] == 1) u[k--] = -1;
    if (k < 0) break;
    ++u[k];
  }
  return total;
}

GradedWord random_graded_word(int n, int len, int d, std::uint64_t seed) {
  if (n < 2) throw ValidationError("graded words need at least two strands");
  if (d > len) throw ValidationError("degree exceeds word length");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_index(1, n - 1);
  std::uniform_int_distribution<int> pick_kind(0, 2);
  std::vector<int> positions(len);
  for (int i = 0; i < len; ++i) positions[i] = i;
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<bool> singular(len, false);
  for (int k = 0; k < d; ++k) singular[positions[k]] = true;
  GradedWord g{n, {}};
  for (int i = 0; i < len; ++i) {
    GKind kind = GKind::S;
    if (!singular[i]) {
      const int c = pick_kind(rng);
      kind = c == 0 ? GKind::R : (c == 1 ? GKind::Rinv : GKind::E);
    }
    g.toks.push_back({kind, pick_index(rng)});
  }
  return g;
}

}  // namespace sbt

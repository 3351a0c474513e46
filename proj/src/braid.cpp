#include "sbt/braid.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace sbt {

std::string GenTok::to_string() const {
  const std::string i = std::to_string(index);
  switch (kind) {
    case TokKind::sigma: return "s" + i;
    case TokKind::sigma_inv: return "s" + i + "^-1";
    case TokKind::tau: return "t" + i;
    case TokKind::tie: return "e" + i;
  }
  return {};
}

GenTok sigma(int i) { return {TokKind::sigma, i}; }
GenTok sigma_inv(int i) { return {TokKind::sigma_inv, i}; }
GenTok tau(int i) { return {TokKind::tau, i}; }
GenTok tie(int i) { return {TokKind::tie, i}; }

Word::Word(int strands, std::vector<GenTok> tokens) : n(strands), toks(std::move(tokens)) {
  if (n < 1 || n > kMaxPoints) throw ValidationError("strand count out of range");
  for (const auto& t : toks) {
    if (t.index < 1 || t.index >= n)
      throw ValidationError("generator index " + std::to_string(t.index) + " out of range for " +
                            std::to_string(n) + " strands");
  }
}

bool Word::is_classical() const {
  return std::all_of(toks.begin(), toks.end(), [](const GenTok& t) {
    return t.kind == TokKind::sigma || t.kind == TokKind::sigma_inv;
  });
}

bool Word::has_ties() const {
  return std::any_of(toks.begin(), toks.end(), [](const GenTok& t) { return t.kind == TokKind::tie; });
}

int Word::singular_count() const {
  return static_cast<int>(
      std::count_if(toks.begin(), toks.end(), [](const GenTok& t) { return t.kind == TokKind::tau; }));
}

int Word::exponent_sum() const {
  int e = 0;
  for (const auto& t : toks) {
    if (t.kind == TokKind::sigma) ++e;
    if (t.kind == TokKind::sigma_inv) --e;
  }
  return e;
}

Word Word::with_strands(int strands) const { return Word(strands, toks); }

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<GenTok> toks = lhs.toks;
  toks.insert(toks.end(), rhs.toks.begin(), rhs.toks.end());
  return Word(std::max(lhs.n, rhs.n), std::move(toks));
}

std::string Word::to_string() const {
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out += ' ';
    out += t.to_string();
  }
  return out;
}

Permutation underlying_permutation(const Word& w) {
  Permutation p = Permutation::identity(w.n);
  for (const auto& t : w.toks) {
    if (t.kind != TokKind::tie) p = p.times_simple(t.index);
  }
  return p;
}

Components closure_components(const Word& w) {
  const Permutation p = underlying_permutation(w);
  Components c;
  c.strand_to_component.assign(w.n, -1);
  for (int start = 0; start < w.n; ++start) {
    if (c.strand_to_component[start] >= 0) continue;
    for (int i = start; c.strand_to_component[i] < 0; i = p(i)) c.strand_to_component[i] = c.count;
    ++c.count;
  }
  return c;
}

Word random_word(int n, int len, const std::set<TokKind>& alphabet, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random word needs at least one strand");
  Word w(n, {});
  if (n == 1 || alphabet.empty()) return w;
  std::mt19937_64 rng(seed);
  const std::vector<TokKind> kinds(alphabet.begin(), alphabet.end());
  std::uniform_int_distribution<std::size_t> pick_kind(0, kinds.size() - 1);
  std::uniform_int_distribution<int> pick_index(1, n - 1);
  for (int k = 0; k < len; ++k) {
    const TokKind kind = kinds[pick_kind(rng)];
    w.toks.push_back({kind, pick_index(rng)});
  }
  return w;
}

Word conjugate(const Word& w, int k) {
  Word out = w;
  if (w.toks.empty()) return out;
  k %= static_cast<int>(w.toks.size());
  std::rotate(out.toks.begin(), out.toks.begin() + k, out.toks.end());
  return out;
}

Word stabilize(const Word& w, bool positive) {
  Word out = w.with_strands(w.n + 1);
  out.toks.push_back(positive ? sigma(w.n) : sigma_inv(w.n));
  return out;
}

namespace {

GenTok parse_token(const std::string& tok) {
  auto fail = [&]() -> GenTok { throw ParseError("unknown token '" + tok + "'"); };
  if (tok.size() < 2) return fail();
  TokKind kind;
  switch (tok[0]) {
    case 's': kind = TokKind::sigma; break;
    case 't': kind = TokKind::tau; break;
    case 'e': kind = TokKind::tie; break;
    default: return fail();
  }
  std::size_t pos = 1;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
  if (pos == 1 || pos - 1 > 3) return fail();
  const int index = std::stoi(tok.substr(1, pos - 1));
  const std::string rest = tok.substr(pos);
  if (rest == "^-1") {
    if (kind != TokKind::sigma) return fail();
    kind = TokKind::sigma_inv;
  } else if (!rest.empty() && rest != "^1") {
    return fail();
  }
  if (index < 1) throw ValidationError("generator index must be positive in '" + tok + "'");
  return {kind, index};
}

}  // namespace

Word parse_word(const std::vector<std::string>& tokens, int strands) {
  std::vector<GenTok> toks;
  int max_index = 0;
  for (const auto& t : tokens) {
    toks.push_back(parse_token(t));
    max_index = std::max(max_index, toks.back().index);
  }
  if (strands <= 0) strands = max_index + 1;
  if (max_index >= strands)
    throw ValidationError("generator index " + std::to_string(max_index) + " needs more than " +
                          std::to_string(strands) + " strands");
  return Word(strands, std::move(toks));
}

Word parse_word(std::string_view text, int strands) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return parse_word(tokens, strands);
}

}  // namespace sbt

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sbt/braid.hpp"

using namespace sbt;

TEST_CASE("underlying permutation") {
  CHECK(underlying_permutation(parse_word("s1")) == Permutation::simple(2, 1));
  CHECK(underlying_permutation(parse_word("t1 s1^-1")).is_identity());
  CHECK(underlying_permutation(parse_word("e1 e2", 3)).is_identity());
  const auto p = underlying_permutation(parse_word("s1 s2"));
  CHECK(p == Permutation::simple(3, 1) * Permutation::simple(3, 2));
  CHECK(p.length() == 2);
  CHECK(p(2) == 0);
}

TEST_CASE("permutation is a homomorphism") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto u = random_word(4, 5, {TokKind::sigma, TokKind::tau, TokKind::tie}, seed);
    const auto v = random_word(4, 6, {TokKind::sigma_inv, TokKind::tau}, seed + 100);
    CHECK(underlying_permutation(u * v) == underlying_permutation(u) * underlying_permutation(v));
  }
}

TEST_CASE("closure components") {
  CHECK(closure_components(Word(1, {})).count == 1);
  CHECK(closure_components(parse_word("s1 s1 s1")).count == 1);
  CHECK(closure_components(parse_word("t1 s1^-1")).count == 2);
  const auto c = closure_components(parse_word("s2", 4));
  CHECK(c.count == 3);
  CHECK(c.strand_to_component == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("random words") {
  CHECK(random_word(2, 0, {TokKind::sigma}, 7).toks.empty());
  const std::set<TokKind> alphabet{TokKind::sigma, TokKind::sigma_inv, TokKind::tau};
  CHECK(random_word(3, 6, alphabet, 42) == random_word(3, 6, alphabet, 42));
  const auto w = random_word(3, 6, alphabet, 42);
  CHECK(w.toks.size() == 6);
  CHECK_FALSE(w.has_ties());
  for (const auto& t : w.toks) CHECK((t.index >= 1 && t.index <= 2));
}

TEST_CASE("Markov moves keep the component count") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = random_word(3, 7, {TokKind::sigma, TokKind::sigma_inv, TokKind::tau}, seed);
    const int c = closure_components(w).count;
    for (int k = 0; k <= 7; ++k) CHECK(closure_components(conjugate(w, k)).count == c);
    CHECK(closure_components(stabilize(w, true)).count == c);
    CHECK(closure_components(stabilize(w, false)).count == c);
    CHECK(stabilize(w, false).n == 4);
  }
}

TEST_CASE("word grammar") {
  const auto w = parse_word("s1 s2^-1 t3 e1");
  CHECK(w.n == 4);
  CHECK(w.to_string() == "s1 s2^-1 t3 e1");
  CHECK(w.singular_count() == 1);
  CHECK(w.exponent_sum() == 0);
  CHECK(parse_word("", 3).n == 3);
  CHECK(parse_word("s1", 5).n == 5);
  CHECK_THROWS_AS(parse_word("x y"), ParseError);
  CHECK_THROWS_AS(parse_word("s0"), ValidationError);
  CHECK_THROWS_AS(parse_word("s3", 3), ValidationError);
  CHECK_THROWS_AS(parse_word("t1^-1"), ParseError);
}

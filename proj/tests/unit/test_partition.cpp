#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "sbt/partition.hpp"

using namespace sbt;

namespace {

SetPartition P(const char* text, int n) { return SetPartition::parse(text, n); }

// Brute-force join: the finest enumerated partition coarser than both.
SetPartition brute_join(const SetPartition& x, const SetPartition& y) {
  SetPartition best;
  bool found = false;
  for (const auto& k : SetPartition::enumerate(x.size())) {
    if (!x.refines(k) || !y.refines(k)) continue;
    if (!found || k.refines(best)) best = k;
    found = true;
  }
  return best;
}

long bell(int n) {
  std::vector<std::vector<long>> t(n + 1);
  t[0] = {1};
  for (int i = 1; i <= n; ++i) {
    t[i] = {t[i - 1].back()};
    for (long v : t[i - 1]) t[i].push_back(t[i].back() + v);
  }
  return t[n][0];
}

}  // namespace

TEST_CASE("join examples") {
  CHECK(P("1,2", 3).join(P("2,3", 3)) == P("1,2,3", 3));
  CHECK(P("1,2", 3).join(SetPartition::singletons(3)) == P("1,2", 3));
  CHECK(P("1,2|4,5", 5).join(P("2,4", 5)) == P("1,2,4,5", 5));
  CHECK_THROWS(P("1,2", 3).join(P("1,2", 4)));
}

TEST_CASE("generator relation mu_ij mu_jk = mu_ik mu_jk") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          const auto ij = SetPartition::pair(n, i, j);
          const auto jk = SetPartition::pair(n, j, k);
          const auto ik = SetPartition::pair(n, i, k);
          CHECK(ij.join(jk) == ik.join(jk));
          CHECK(ij.join(ij) == ij);
        }
}

TEST_CASE("join is the least common coarsening") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = SetPartition::enumerate(n);
    for (const auto& x : all)
      for (const auto& y : all) {
        const auto j = x.join(y);
        CHECK(j == brute_join(x, y));
        CHECK(j == y.join(x));
        CHECK(x.refines(j));
      }
  }
}

TEST_CASE("join is associative") {
  const auto all = SetPartition::enumerate(4);
  for (std::size_t p = 0; p < all.size(); p += 2)
    for (std::size_t q = 0; q < all.size(); q += 3)
      for (std::size_t r = 0; r < all.size(); r += 5)
        CHECK(all[p].join(all[q]).join(all[r]) == all[p].join(all[q].join(all[r])));
}

TEST_CASE("permutation action") {
  CHECK(P("1,3", 3).apply(Permutation::simple(3, 1)) == P("2,3", 3));
  CHECK(P("1,3", 3).apply(Permutation::identity(3)) == P("1,3", 3));
  const auto s2s1 = Permutation::simple(3, 2) * Permutation::simple(3, 1);
  CHECK(P("2,3", 3).apply(s2s1) == P("1,2", 3));
  // action law and automorphism property
  const auto perms = std::vector<Permutation>{Permutation::simple(4, 1), Permutation::simple(4, 3),
                                              Permutation::from_images({2, 0, 3, 1})};
  for (const auto& w : perms)
    for (const auto& v : perms)
      for (const auto& x : SetPartition::enumerate(4)) {
        CHECK(x.apply(w * v) == x.apply(v).apply(w));
        for (const auto& y : {P("1,2", 4), P("2,4", 4)}) CHECK(x.join(y).apply(w) == x.apply(w).join(y.apply(w)));
      }
}

TEST_CASE("skein operations") {
  CHECK(P("1,2", 2).plus() == P("1,2", 3));
  CHECK(P("1,2", 2).plus().size() == 3);
  CHECK(P("1,2", 3).merge(0, 2) == P("1,2,3", 3));
  CHECK(P("1,2|3,4", 4).drop(1) == P("2,3", 3));
  CHECK(P("1,2", 3).attach(2) == P("1,2|3,4", 4));
  CHECK(P("1,2", 3).star(0, 0) == P("1,2", 4));
  CHECK(P("1,2|3,4", 4).star(0, 1) == P("2,3", 3));
  CHECK(P("1,4", 4).restricted() == SetPartition::singletons(3));
}

TEST_CASE("Bell numbers") {
  for (int n = 0; n <= 6; ++n) {
    const auto all = SetPartition::enumerate(n);
    CHECK(static_cast<long>(all.size()) == bell(n));
    CHECK(std::set<SetPartition>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("text form") {
  CHECK(P("1,2|4,6", 6).to_string() == "1,2|4,6");
  CHECK(P("-", 3).to_string() == "-");
  CHECK(P("", 3) == SetPartition::singletons(3));
  CHECK(P("1|2", 2) == SetPartition::singletons(2));
  CHECK(P("3,1", 3) == P("1,3", 3));
  CHECK_THROWS_AS(P("1,4", 3), ValidationError);
  CHECK_THROWS_AS(P("1,,2", 3), ParseError);
  CHECK_THROWS_AS(P("1,2|2,3", 3), ValidationError);
}

TEST_CASE("restricted growth code") {
  const auto x = SetPartition::from_labels({7, 3, 7, 9});
  CHECK(x.code() == std::vector<int>{0, 1, 0, 2});
  CHECK(x.num_blocks() == 3);
}

TEST_CASE("permutations") {
  const auto w = Permutation::from_images({2, 0, 3, 1});
  CHECK(w * w.inverse() == Permutation::identity(4));
  CHECK(w.length() == 3);
  Permutation p = Permutation::identity(4);
  for (int i : w.reduced_word()) p = p.times_simple(i);
  CHECK(p == w);
  CHECK(static_cast<int>(w.reduced_word().size()) == w.length());
  CHECK(Permutation::simple(3, 1).has_right_descent(1));
  CHECK(w.extended(6).restricted().restricted() == w);
}

// Acceptance run: one PASS/FAIL line per criterion. `--criterion N` runs one.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "oracle/one_parameter.hpp"
#include "sbt/suites.hpp"

using namespace sbt;

namespace {

// Pinned limits. All comparisons are exact; only runtimes carry a tolerance.
constexpr double kUnknotSeconds = 1.0;
constexpr double kTraceSuiteSeconds = 300.0;
constexpr double kRelationSuiteSeconds = 300.0;
constexpr double kGradedSuiteSeconds = 600.0;
constexpr double kCaseSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Scalar var(Var v) { return Scalar::variable(v); }

// 1/(aw) written out as w u / (a + (1-v) b), independent of normalization().
Scalar inverse_aw() {
  const RationalFunction u = Polynomial::variable(Var::u);
  const RationalFunction v = Polynomial::variable(Var::v);
  const RationalFunction a = Polynomial::variable(Var::a);
  const RationalFunction b = Polynomial::variable(Var::b);
  return Scalar(RationalFunction(), u / (a + (RationalFunction(1) - v) * b));
}

Outcome summarize(const Report& r, const std::string& what) {
  std::ostringstream out;
  out << what << ' ' << (r.results.size() - r.failures()) << '/' << r.results.size();
  if (!r.all_pass()) {
    out << "; first failures:";
    int shown = 0;
    for (const auto& c : r.results) {
      if (c.pass) continue;
      out << ' ' << c.name << ';';
      if (++shown == 4) break;
    }
  }
  return {r.all_pass(), out.str()};
}

Outcome with_limit(Outcome o, Clock::time_point start, double limit) {
  const double t = seconds_since(start);
  if (t >= limit) {
    o.pass = false;
    o.detail += "; over time limit";
  }
  return o;
}

Outcome c1_unknot() {
  const auto start = Clock::now();
  const Scalar v = invariant(Word(1, {}), std::nullopt, InvariantMode::upsilon);
  return with_limit({v.is_one(), "invariant(empty word, 1 strand) = " + v.to_string()}, start, kUnknotSeconds);
}

Outcome c2_unlinks() {
  bool ok = true;
  std::string detail;
  Scalar expected(1);
  for (int n = 1; n <= 5; ++n) {
    const Scalar got = invariant(Word(n, {}), std::nullopt, InvariantMode::upsilon);
    const bool hit = got == expected;
    ok = ok && hit;
    detail += "n=" + std::to_string(n) + (hit ? " ok " : " MISMATCH ");
    expected *= inverse_aw();
  }
  return {ok, detail};
}

Outcome c3_trace_axioms() {
  const auto start = Clock::now();
  Report r = check_trace_axioms(200, 4, kSeed);
  r.append(check_cyclicity(200, 4, kSeed + 1));
  return with_limit(summarize(r, "trace rules and cyclicity"), start, kTraceSuiteSeconds);
}

Outcome c4_relations() {
  const auto start = Clock::now();
  return with_limit(summarize(check_defining_relations(4), "defining relations at n=4"), start,
                    kRelationSuiteSeconds);
}

Outcome c5_markov() {
  return summarize(check_markov(100, 4, 8, 2, kSeed + 2), "Markov moves on 100 words");
}

Outcome c6_closed_forms() {
  const Scalar x = var(Var::x);
  const Scalar y = var(Var::y);
  const Scalar z = var(Var::z);
  const Scalar b = var(Var::b);
  const Word t1 = parse_word("t1");
  const Word unknot_plus = parse_word("s1");
  const Word unknot_minus = parse_word("s1^-1");
  const Word unlink2(2, {});
  const SetPartition tied = SetPartition::parse("1,2", 2);

  const Scalar want = x * inverse_aw() + y + z;
  const Scalar want_prime = x * b * inverse_aw() + y;
  const Scalar trace_route = invariant(t1, std::nullopt, InvariantMode::upsilon);
  const Scalar trace_route_prime = invariant(t1, std::nullopt, InvariantMode::upsilon_prime);
  const Scalar desing_route = x * invariant(unlink2, std::nullopt, InvariantMode::upsilon) +
                              y * invariant(unknot_plus, std::nullopt, InvariantMode::upsilon) +
                              z * invariant(unknot_minus, std::nullopt, InvariantMode::upsilon);
  const Scalar desing_route_prime = x * invariant(unlink2, tied, InvariantMode::upsilon_prime) +
                                    y * invariant(unknot_plus, std::nullopt, InvariantMode::upsilon_prime);
  const bool ok = trace_route == want && desing_route == want && trace_route_prime == want_prime &&
                  desing_route_prime == want_prime;
  std::ostringstream out;
  out << "Y trace " << (trace_route == want) << " desing " << (desing_route == want) << "; Y' trace "
      << (trace_route_prime == want_prime) << " desing " << (desing_route_prime == want_prime);
  return {ok, out.str()};
}

Outcome c7_graded() {
  const auto start = Clock::now();
  return with_limit(summarize(check_graded(50, 4, 3, kSeed + 3), "graded equivalence and Yhat"), start,
                    kGradedSuiteSeconds);
}

Outcome c8_skein() { return summarize(check_skein(50, kSeed + 4), "skein rules on 50 triples"); }

Outcome c9_tie_discrimination() {
  const Word w = parse_word("t1 s1^-1");
  const SetPartition loose = SetPartition::parse("1|2", 2);
  const SetPartition tied = SetPartition::parse("1,2", 2);
  const bool y_distinct = !(invariant(w, loose, InvariantMode::upsilon) == invariant(w, tied, InvariantMode::upsilon));
  const bool yp_equal =
      invariant(w, loose, InvariantMode::upsilon_prime) == invariant(w, tied, InvariantMode::upsilon_prime);
  return {y_distinct && yp_equal, std::string("Y distinct: ") + (y_distinct ? "yes" : "no") +
                                      ", Y' equal: " + (yp_equal ? "yes" : "no")};
}

Outcome c10_union_tie() { return summarize(check_union_tie(10, kSeed + 5), "union with a tied circle"); }

Outcome c11_well_defined() {
  return summarize(check_trace_well_defined(100, 4, kSeed + 6), "reduction variants on 100 keys");
}

Outcome c12_bell() {
  const std::size_t want[] = {1, 1, 2, 5, 15, 52};
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 5; ++n) {
    const std::size_t got = SetPartition::enumerate(n).size();
    ok = ok && got == want[n];
    detail += std::to_string(got) + ' ';
  }
  return {ok, "sizes " + detail};
}

Outcome c13_specialization() {
  std::mt19937_64 rng(kSeed + 7);
  int agree = 0;
  std::string first_bad;
  for (int s = 0; s < 30; ++s) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const int len = std::uniform_int_distribution<int>(0, 8)(rng);
    const Word w = random_word(n, len, {TokKind::sigma, TokKind::sigma_inv}, rng());
    const Scalar main = specialize(invariant(w, std::nullopt, InvariantMode::upsilon), Specialization::psi);
    if (main == oracle::invariant(w)) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = "; first mismatch [" + w.to_string() + "]";
    }
  }
  return {agree == 30, std::to_string(agree) + "/30 classical words agree with the one-parameter oracle" + first_bad};
}

Outcome c14_performance() {
  std::mt19937_64 rng(kSeed + 8);
  double worst = 0;
  std::string worst_case;
  for (int s = 0; s < 12; ++s) {
    const int d = s % 4;
    const Word w = random_singular_word(4, 10, d, rng);
    const auto time = [&](const std::function<void()>& f, const std::string& tag) {
      const auto start = Clock::now();
      f();
      const double t = seconds_since(start);
      if (t > worst) {
        worst = t;
        worst_case = tag + " [" + w.to_string() + "]";
      }
    };
    time([&] { invariant(w, std::nullopt, InvariantMode::upsilon); }, "Y");
    time([&] { invariant(w, std::nullopt, InvariantMode::upsilon_prime); }, "Y'");
    time([&] { upsilon_hat(w, std::nullopt); }, "Yhat");
  }
  std::ostringstream out;
  out << "slowest case " << worst << " s (" << worst_case << ")";
  return {worst < kCaseSeconds, out.str()};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> all = {
      {"unknot normalization", c1_unknot},
      {"unlink ladder", c2_unlinks},
      {"trace axiom suite", c3_trace_axioms},
      {"relation suite", c4_relations},
      {"Markov invariance", c5_markov},
      {"closed forms", c6_closed_forms},
      {"graded equivalence", c7_graded},
      {"skein suite", c8_skein},
      {"tie discrimination", c9_tie_discrimination},
      {"union/tie factor", c10_union_tie},
      {"trace well-definedness", c11_well_defined},
      {"Bell counts", c12_bell},
      {"specialization consistency", c13_specialization},
      {"performance envelope", c14_performance},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-14)")->check(CLI::Range(1, 14));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (std::size_t k = 0; k < criteria().size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (only != 0 && id != only) continue;
    const auto& [name, run] = criteria()[k];
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << id << ' ' << (o.pass ? "PASS" : "FAIL") << " | " << name << " | " << o.detail << " | "
         << seconds_since(start) << " s";
    std::cout << line.str() << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}

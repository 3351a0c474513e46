#include "sbt/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "sbt/suites.hpp"

namespace sbt {

namespace {

struct ConsistencyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { upsilon, upsilon_prime, upsilon_hat };

Mode parse_mode(const std::string& text) {
  if (text == "upsilon") return Mode::upsilon;
  if (text == "upsilon_prime") return Mode::upsilon_prime;
  if (text == "upsilon_hat") return Mode::upsilon_hat;
  throw ParseError("unknown mode '" + text + "'");
}

Specialization parse_spec(const std::string& text) {
  if (text == "psi") return Specialization::psi;
  if (text == "psi_prime") return Specialization::psi_prime;
  throw ParseError("unknown specialization '" + text + "'");
}

Bindings parse_bindings(const std::vector<std::string>& sets) {
  Bindings b;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("expected var=expr in '" + s + "'");
    const auto var = parse_var(s.substr(0, eq));
    if (!var) throw ParseError("unknown variable in '" + s + "'");
    const Scalar value = parse_scalar(s.substr(eq + 1));
    if (value.has_w()) throw ParseError("substituted values may not contain w");
    b[*var] = value.rational_part();
  }
  return b;
}

struct Request {
  Word word;
  std::optional<SetPartition> ties;
  Mode mode = Mode::upsilon;
};

Request make_request(const std::vector<std::string>& tokens, int strands, const std::string& ties,
                     const std::string& mode, bool big) {
  Request r;
  r.word = parse_word(tokens, strands);
  if (!big && r.word.n > 6) throw ValidationError("more than 6 strands needs --big");
  if (!big && r.word.singular_count() > 4) throw ValidationError("more than 4 singular crossings needs --big");
  if (!ties.empty()) r.ties = SetPartition::parse(ties, closure_components(r.word).count);
  r.mode = parse_mode(mode);
  return r;
}

Scalar evaluate(const Request& r) {
  switch (r.mode) {
    case Mode::upsilon: return invariant(r.word, r.ties, InvariantMode::upsilon);
    case Mode::upsilon_prime: return invariant(r.word, r.ties, InvariantMode::upsilon_prime);
    case Mode::upsilon_hat: return upsilon_hat(r.word, r.ties);
  }
  return {};
}

// Recomputes a request with every trace-reduction variant and, for the
// singular-link invariant, through the graded route.
void verify(const Request& r, const Scalar& value) {
  if (r.mode == Mode::upsilon_hat) {
    if (!(invariant(r.word, r.ties, InvariantMode::upsilon) == value))
      throw ConsistencyFailure("graded route disagrees with the trace route");
    return;
  }
  const InvariantMode mode = r.mode == Mode::upsilon ? InvariantMode::upsilon : InvariantMode::upsilon_prime;
  for (int mask = 1; mask < 16; ++mask) {
    TraceOptions o;
    o.case2_max = !(mask & 1);
    o.alt_conjugator = mask & 2;
    o.left_coset = mask & 4;
    o.case3_top_max = !(mask & 8);
    TraceEngine engine(o);
    if (!(invariant(r.word, r.ties, mode, engine) == value))
      throw ConsistencyFailure("trace variant " + o.to_string() + " disagrees");
  }
  if (r.mode == Mode::upsilon && !(upsilon_hat(r.word, r.ties) == value))
    throw ConsistencyFailure("graded route disagrees with the trace route");
}

Scalar finish(const Scalar& value, const std::string& spec, const std::vector<std::string>& sets) {
  Scalar out = value;
  if (!spec.empty()) out = specialize(out, parse_spec(spec));
  if (!sets.empty()) out = out.substitute(parse_bindings(sets));
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

int run_corpus(const std::string& path, bool big, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open corpus file '" + path + "'");
  std::string line;
  int line_no = 0;
  int failures = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto fields = split(t, ';');
    if (fields.size() != 4) throw ParseError("corpus line " + std::to_string(line_no) + ": expected 4 fields");
    std::istringstream words(fields[0]);
    std::vector<std::string> tokens;
    int strands = 0;
    for (std::string w; words >> w;) {
      if (w.rfind("n=", 0) == 0) {
        strands = std::stoi(w.substr(2));
      } else {
        tokens.push_back(w);
      }
    }
    const std::string ties = fields[1] == "-" ? "" : fields[1];
    const Request r = make_request(tokens, strands, ties, fields[2], big);
    const Scalar value = evaluate(r);
    std::string verdict = "recorded";
    if (fields[3] != "?") {
      const bool ok = parse_scalar(fields[3]) == value;
      verdict = ok ? "ok" : "MISMATCH";
      failures += !ok;
    }
    out << verdict << " | " << fields[0] << " ; " << fields[1] << " ; " << fields[2] << " ; " << value.to_string()
        << '\n';
  }
  return failures == 0 ? kExitOk : kExitConsistency;
}

Report run_check(const std::string& scope, std::uint64_t seed, int samples) {
  Report report;
  const bool all = scope == "all";
  if (all || scope == "relations") report.append(check_defining_relations(4));
  if (scope == "sbt") report.append(check_sbt_relations(3));
  if (all || scope == "trace") {
    report.append(check_trace_axioms(samples, 4, seed));
    report.append(check_cyclicity(samples, 4, seed + 1));
    report.append(check_trace_well_defined(samples, 4, seed + 2));
  }
  if (all || scope == "markov") report.append(check_markov(samples, 4, 8, 2, seed + 3));
  if (all || scope == "graded") report.append(check_graded(samples, 4, 3, seed + 4));
  if (all || scope == "skein") {
    report.append(check_skein(samples, seed + 5));
    report.append(check_union_tie(samples, seed + 6));
  }
  if (!all && report.results.empty()) throw ParseError("unknown check scope '" + scope + "'");
  return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of tied singular links from closed braid words", "sbt"};
  app.require_subcommand(1);

  int threads = 0;
  bool serial = false;
  bool big = false;
  app.add_option("--threads", threads, "OpenMP thread count (0 keeps the default)");
  app.add_flag("--serial", serial, "use the serial reference kernels");
  app.add_flag("--big", big, "lift the resource guards on strands and singular crossings");

  std::vector<std::string> tokens;
  int strands = 0;
  std::string ties;
  std::string mode = "upsilon";
  std::string spec;
  std::vector<std::string> sets;
  bool verify_flag = false;

  auto* inv = app.add_subcommand("invariant", "invariant of the closure of a word");
  inv->add_option("word", tokens, "tokens s<i>, s<i>^-1, t<i>, e<i>");
  inv->add_option("--strands", strands, "strand count (default 1 + max index)");
  inv->add_option("--ties", ties, "partition of the closure components, e.g. \"1,2|3\"");
  inv->add_option("--mode", mode, "upsilon, upsilon_prime or upsilon_hat");
  inv->add_option("--spec", spec, "psi or psi_prime");
  inv->add_option("--set", sets, "substitution var=expr (repeatable)");
  inv->add_flag("--verify", verify_flag, "cross-check with every trace variant and the graded route");

  auto* graded = app.add_subcommand("graded", "graded trace tr^(d) of the word read in SE_n(u,v)");
  graded->add_option("word", tokens, "tokens s<i>, s<i>^-1, t<i>, e<i>");
  graded->add_option("--strands", strands, "strand count");
  graded->add_flag("--verify", verify_flag, "check tr^(d) = d! Tr(rho~)");

  std::string scope = "all";
  std::uint64_t seed = 1;
  int samples = 20;
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("scope", scope, "relations, trace, markov, graded, skein, all, or sbt (not part of all)");
  check->add_option("--seed", seed, "random seed");
  check->add_option("--samples", samples, "samples per randomized suite");
  bool verbose = false;
  check->add_flag("-v,--verbose", verbose, "list passing checks too");

  std::string expr;
  auto* spec_cmd = app.add_subcommand("specialize", "apply a specialization to a scalar expression");
  spec_cmd->add_option("expr", expr, "scalar expression")->required();
  spec_cmd->add_option("--spec", spec, "psi or psi_prime");
  spec_cmd->add_option("--set", sets, "substitution var=expr (repeatable)");

  std::string word_a;
  std::string word_b;
  std::string ties_a;
  std::string ties_b;
  int strands_a = 0;
  int strands_b = 0;
  auto* cmp = app.add_subcommand("compare", "exact equality of two invariant values");
  cmp->add_option("--a", word_a, "first word")->required();
  cmp->add_option("--b", word_b, "second word")->required();
  cmp->add_option("--ties-a", ties_a, "partition for the first link");
  cmp->add_option("--ties-b", ties_b, "partition for the second link");
  cmp->add_option("--strands-a", strands_a, "strand count of the first word");
  cmp->add_option("--strands-b", strands_b, "strand count of the second word");
  cmp->add_option("--mode", mode, "upsilon, upsilon_prime or upsilon_hat");

  std::string corpus_path;
  auto* corpus = app.add_subcommand("corpus", "evaluate a corpus file `word ; ties ; mode ; expected`");
  corpus->add_option("file", corpus_path, "corpus path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  if (threads > 0) omp_set_num_threads(threads);
  set_default_exec(serial ? Exec::serial : Exec::parallel);

  try {
    if (*inv) {
      const Request r = make_request(tokens, strands, ties, mode, big);
      const Scalar value = evaluate(r);
      if (verify_flag) verify(r, value);
      out << finish(value, spec, sets).to_string() << '\n';
    } else if (*graded) {
      const Word w = parse_word(tokens, strands);
      if (!big && w.singular_count() > 4) throw ValidationError("more than 4 singular crossings needs --big");
      const GradedWord alpha = graded_from_word(w);
      const Scalar value = graded_trace(alpha);
      if (verify_flag && !verify_equivalence(alpha))
        throw ConsistencyFailure("graded trace differs from d! Tr(rho~)");
      out << value.to_string() << '\n';
    } else if (*check) {
      const Report report = run_check(scope, seed, samples);
      out << report.to_string(verbose);
      return report.all_pass() ? kExitOk : kExitConsistency;
    } else if (*spec_cmd) {
      out << finish(parse_scalar(expr), spec, sets).to_string() << '\n';
    } else if (*cmp) {
      auto split_words = [](const std::string& s) {
        std::istringstream in(s);
        std::vector<std::string> v;
        for (std::string t; in >> t;) v.push_back(t);
        return v;
      };
      const Request a = make_request(split_words(word_a), strands_a, ties_a, mode, big);
      const Request b = make_request(split_words(word_b), strands_b, ties_b, mode, big);
      out << (evaluate(a) == evaluate(b) ? "equal" : "distinct") << '\n';
    } else if (*corpus) {
      return run_corpus(corpus_path, big, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ConsistencyFailure& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const DivisionByZero& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace sbt

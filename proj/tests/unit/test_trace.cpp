#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sbt/suites.hpp"

using namespace sbt;

namespace {
Scalar var(Var v) { return Scalar::variable(v); }
}  // namespace

TEST_CASE("small traces") {
  CHECK(trace(AlgebraElement::unit(3)).is_one());
  CHECK(trace(gen_E(2, 1)) == var(Var::b));
  CHECK(trace(gen_R(2, 1)) == var(Var::a));
  CHECK(trace(gen_E(2, 1) * gen_R(2, 1)) == var(Var::a));
  const Scalar u = var(Var::u);
  const Scalar v = var(Var::v);
  CHECK(trace(gen_R(2, 1) * gen_R(2, 1)) == Scalar(1) + (u - Scalar(1)) * var(Var::b) + (v - Scalar(1)) * var(Var::a));
  CHECK(trace(AlgebraElement::scalar(1, var(Var::x))) == var(Var::x));
}

TEST_CASE("ties far apart factor") {
  // Tr(E_1 E_3) = b^2 and Tr(R_1 R_3) = a^2 on four strands.
  CHECK(trace(gen_E(4, 1) * gen_E(4, 3)) == var(Var::b) * var(Var::b));
  CHECK(trace(gen_R(4, 1) * gen_R(4, 3)) == var(Var::a) * var(Var::a));
  CHECK(trace(gen_R(3, 1) * gen_R(3, 2)) == var(Var::a) * var(Var::a));
}

TEST_CASE("trace axioms") {
  const Report r = check_trace_axioms(60, 4, 101);
  for (const auto& c : r.results) CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("cyclicity") {
  const Report r = check_cyclicity(60, 4, 102);
  for (const auto& c : r.results) CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("reduction variants agree on every key up to level 4") {
  TraceEngine reference;
  for (int mask = 1; mask < 16; ++mask) {
    TraceOptions o;
    o.case2_max = !(mask & 1);
    o.alt_conjugator = mask & 2;
    o.left_coset = mask & 4;
    o.case3_top_max = !(mask & 8);
    TraceEngine engine(o);
    for (int n = 2; n <= 4; ++n)
      for (const auto& k : all_basis_keys(n)) CHECK_MESSAGE(engine.trace_key(k) == reference.trace_key(k), k.to_string());
  }
}

TEST_CASE("serial and parallel table builds agree") {
  TraceEngine serial;
  TraceEngine parallel;
  serial.build_level(4, Exec::serial);
  parallel.build_level(4, Exec::parallel);
  CHECK(serial.table_size(4) == 15u * 24u);
  CHECK(parallel.table_size(4) == serial.table_size(4));
  for (const auto& k : all_basis_keys(4)) CHECK(serial.trace_key(k).to_string() == parallel.trace_key(k).to_string());
}

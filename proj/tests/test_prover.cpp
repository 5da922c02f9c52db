#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sel/generate.hpp"
#include "sel/prover.hpp"
#include "sel/reduction.hpp"
#include "sel/syntax.hpp"

using namespace sel;

namespace {

const Signature S2 = Signature::sigma2();

Machine machine(const char* text) { return parse_machine(text); }

}  // namespace

TEST_CASE("a, ~a in one decide") {
  const Sequent s = parse_sequent("|- a, ~a");
  const SearchOutcome out = prove_focused(S2, s, {4});
  REQUIRE(out.proved());
  CHECK(decide_count(*out.proof) == 1);
  CHECK(to_sexpr(*out.proof) == "(decide 0\n (finit (kept 0)))\n");
}

TEST_CASE("tensor against two negated atoms") {
  const Sequent s = parse_sequent("|- (a * b), ~a, ~b");
  const SearchOutcome out = prove_focused(S2, s, {4});
  REQUIRE(out.proved());
  CHECK(decide_count(*out.proof) == 1);
  CHECK(check_focused(S2, unfocused(s), *out.proof).ok());
  CHECK(search_unfocused(S2, s, {}).has_value());
}

TEST_CASE("unprovable goals are exhausted") {
  CHECK_FALSE(prove_focused(S2, parse_sequent("|- a"), {8}).proved());
  CHECK_FALSE(prove_focused(S2, parse_sequent("|- a, ~b"), {8}).proved());
  CHECK_FALSE(prove_focused(S2, parse_sequent("|- 0, 1"), {8}).proved());
  CHECK_FALSE(prove_focused(S2, parse_sequent("|- ?a ~x, x, x"), {8}).proved());
  CHECK_FALSE(prove_focused(S2, parse_sequent("|- ?inf ~x, x, x"), {8}).proved());
  CHECK(prove_focused(S2, parse_sequent("|- ?inf ~x, (x * x)"), {8}).proved());
  CHECK_FALSE(prove_focused(S2, parse_sequent("|- ?a ~x, (x * x)"), {8}).proved());
}

TEST_CASE("a looping machine is exhausted at twelve decides") {
  const Machine m = machine("states: q0 q1 star\nhalting: star\nq0 incra q1\nq1 decra q0\n");
  const ReductionBundle b = encode_halting(m, {"q0", 0, 0});
  const SearchOutcome out = prove_focused(b.sigma2, b.goal, {12});
  CHECK_FALSE(out.proved());
  CHECK_FALSE(out.stats.node_limit_hit);
  CHECK(out.stats.bound_hit);
}

TEST_CASE("incra then halt is proved") {
  const Machine m = machine("states: q0 q1 star\nhalting: star\nq0 incra q1\nq1 halt\n");
  const ReductionBundle b = encode_halting(m, {"q0", 0, 0});
  const SearchOutcome out = prove_focused(b.sigma2, b.goal, {8});
  REQUIRE(out.proved());
  CHECK(check_focused(b.sigma2, unfocused(b.goal), *out.proof).ok());
  CHECK(decide_count(*out.proof) == 7);
}

TEST_CASE("node cap") {
  const Machine m = machine("states: q0 q1 star\nhalting: star\nq0 incra q1\nq1 decra q0\n");
  const ReductionBundle b = encode_halting(m, {"q0", 0, 0});
  const SearchOutcome out = prove_focused(b.sigma2, b.goal, {40, 100});
  CHECK_FALSE(out.proved());
  CHECK(out.stats.node_limit_hit);
  CHECK(out.stats.nodes_expanded == 101);
}

TEST_CASE("unknown labels never prove") {
  CHECK_FALSE(prove_focused(S2, parse_sequent("|- ?zz 1, 1"), {8}).proved());
}

TEST_CASE("focused goals") {
  FocusedSequent g{parse_sequent("|- ~ra, ?inf p").context, Formula::atom("ra")};
  CHECK(prove_focused(S2, g, {2}).proved());
  g.focus = Formula::neg_atom("ra");
  CHECK_FALSE(prove_focused(S2, g, {6}).proved());
}

TEST_CASE("proofs check, are minimal in decide depth, and are stable") {
  Rng rng(41);
  int proved = 0;
  for (int i = 0; i < 250; ++i) {
    const Sequent s = random_sequent(rng, {});
    const SearchOutcome out = prove_focused(S2, s, {8});
    if (!out.proved()) continue;
    ++proved;
    const FocusedProof& p = *out.proof;
    CHECK(check_focused(S2, unfocused(s), p).ok());

    const std::size_t d = decide_depth(p);
    CHECK(d <= 8);
    if (d > 1) CHECK_FALSE(prove_focused(S2, s, {d - 1}).proved());
    if (d >= 1) CHECK(prove_focused(S2, s, {d}).proof == out.proof);

    // monotone in the budget, and the same certificate every time
    CHECK(prove_focused(S2, s, {12}).proof == out.proof);
    CHECK(prove_focused(S2, s, {8}).proof == out.proof);
  }
  CHECK(proved > 50);
}

TEST_CASE("memoization does not change the certificate") {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const Sequent s = random_sequent(rng, {});
    CHECK(prove_focused(S2, s, {8, 2'000'000, false}).proof == prove_focused(S2, s, {8}).proof);
  }
  const Machine m = machine(
      "states: q0 q1 q2 star\nhalting: star\nq0 decra q1\nq0 isza q2\nq1 iszb q0\nq2 halt\n");
  const ReductionBundle b = encode_halting(m, {"q0", 2, 0});
  const SearchOutcome plain = prove_focused(b.sigma2, b.goal, {10, 2'000'000, false});
  const SearchOutcome memo = prove_focused(b.sigma2, b.goal, {10, 2'000'000, true});
  CHECK(plain.proved());
  CHECK(memo.proof == plain.proof);
  CHECK(memo.stats.nodes_expanded <= plain.stats.nodes_expanded);
}

TEST_CASE("unfocused proofs have focused counterparts") {
  Rng rng(47);
  int both = 0;
  for (int i = 0; i < 200; ++i) {
    const Sequent s = random_sequent(rng, {});
    const bool u = search_unfocused(S2, s, {}).has_value();
    const SearchOutcome f = prove_focused(S2, s, {8});
    if (u) {
      CHECK(f.proved());
      ++both;
    }
    if (f.proved()) CHECK(check_unfocused(S2, s, defocus(S2, unfocused(s), *f.proof)).ok());
  }
  CHECK(both > 40);
}

TEST_CASE("other signatures") {
  const Signature sig = Signature::close({"l", "m", "u"}, {"u"}, {{"l", "m"}, {"m", "u"}});
  CHECK(prove_focused(sig, parse_sequent("|- ?u ~x, ?m ~y, !l (x * y)"), {8}).proved());
  CHECK_FALSE(prove_focused(sig, parse_sequent("|- ?l ~x, !m x"), {8}).proved());
  CHECK(prove_focused(sig, parse_sequent("|- ?m ~x, !l x"), {8}).proved());
}

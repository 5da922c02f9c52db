#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sel/generate.hpp"
#include "sel/minsky.hpp"
#include "sel/syntax.hpp"

using namespace sel;

namespace {

Machine with_entries(std::vector<Entry> entries) {
  Machine m;
  m.states = {"q0", "q1", "q2", "star"};
  m.halting = "star";
  m.entries = std::move(entries);
  return m;
}

using K = ValidationError::Kind;

std::optional<K> kind(const Machine& m) {
  auto e = validate_machine(m);
  if (!e) return std::nullopt;
  return e->kind;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_FALSE(kind(with_entries({{"q0", Instruction::DecrA, "q1"}, {"q0", Instruction::IszA, "q2"}})));
  CHECK(kind(with_entries({{"q0", Instruction::IncrA, "q1"}, {"q0", Instruction::IncrB, "q2"}})) ==
        K::NondeterministicState);
  CHECK(kind(with_entries({{"q0", Instruction::IncrA, "q0"}})) == K::SelfLoop);
  CHECK(kind(with_entries({{"star", Instruction::Halt, ""}})) == K::HaltFromHalting);
  CHECK(kind(with_entries({{"star", Instruction::IncrA, "q0"}})) == K::HaltFromHalting);
  CHECK(kind(with_entries({{"q9", Instruction::Halt, ""}})) == K::UnknownState);
  CHECK(kind(with_entries({{"q0", Instruction::IncrA, "q9"}})) == K::UnknownState);
  // a zero test on a and a decrement on b can both fire
  CHECK(kind(with_entries({{"q0", Instruction::IszA, "q1"}, {"q0", Instruction::DecrB, "q2"}})) ==
        K::NondeterministicState);
  CHECK(kind(with_entries({{"q0", Instruction::DecrA, "q1"}, {"q0", Instruction::DecrA, "q2"}})) ==
        K::NondeterministicState);
  CHECK(kind(with_entries({{"q0", Instruction::Halt, ""}, {"q0", Instruction::IszB, "q2"}})) ==
        K::NondeterministicState);
}

TEST_CASE("guard overlap is symmetric and matches enabledness") {
  for (Instruction x : kAllInstructions) {
    for (Instruction y : kAllInstructions) {
      CHECK(guards_overlap(x, y) == guards_overlap(y, x));
      bool witness = false;
      for (std::uint64_t a = 0; a < 3; ++a)
        for (std::uint64_t b = 0; b < 3; ++b) {
          const Configuration c{"q", a, b};
          witness |= enabled(x, c) && enabled(y, c);
        }
      CHECK(guards_overlap(x, y) == witness);
    }
  }
}

TEST_CASE("step") {
  const Machine halt = with_entries({{"q0", Instruction::Halt, ""}});
  auto s = step(halt, {"q0", 5, 2});
  REQUIRE(s);
  CHECK(s->instruction == Instruction::Halt);
  CHECK(s->next == Configuration{"star", 0, 0});

  CHECK_FALSE(step(with_entries({{"q0", Instruction::DecrA, "q1"}}), {"q0", 0, 0}));

  auto t = step(with_entries({{"q0", Instruction::IncrB, "q1"}}), {"q0", 1, 0});
  REQUIRE(t);
  CHECK(t->next == Configuration{"q1", 1, 1});

  auto u = step(with_entries({{"q0", Instruction::DecrB, "q1"}, {"q0", Instruction::IszB, "q2"}}), {"q0", 4, 0});
  REQUIRE(u);
  CHECK(u->instruction == Instruction::IszB);
  CHECK(u->next == Configuration{"q2", 4, 0});
}

TEST_CASE("run") {
  const Machine m = with_entries({{"q0", Instruction::IncrA, "q1"}, {"q1", Instruction::Halt, ""}});
  const RunResult r = run(m, {"q0", 0, 0}, 10);
  REQUIRE(std::holds_alternative<Halted>(r));
  CHECK(trace_of(r) == Trace{Instruction::IncrA, Instruction::Halt});

  const Machine loop = with_entries({{"q0", Instruction::IncrA, "q1"}, {"q1", Instruction::DecrA, "q0"}});
  const RunResult l = run(loop, {"q0", 0, 0}, 100);
  REQUIRE(std::holds_alternative<OutOfFuel>(l));
  CHECK(trace_of(l).size() == 100);

  const RunResult e = run(m, {"star", 0, 0}, 0);
  REQUIRE(std::holds_alternative<Halted>(e));
  CHECK(trace_of(e).empty());

  const RunResult st = run(with_entries({{"q0", Instruction::DecrA, "q1"}}), {"q0", 0, 0}, 10);
  REQUIRE(std::holds_alternative<Stuck>(st));
  CHECK(std::get<Stuck>(st).at == Configuration{"q0", 0, 0});

  // reaching * with registers left over is not halting
  const RunResult left = run(with_entries({{"q0", Instruction::IncrA, "star"}}), {"q0", 0, 0}, 10);
  CHECK(std::holds_alternative<Stuck>(left));
}

TEST_CASE("random runs: deterministic, registers stay sane, halt lands on the halting configuration") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const Machine m = random_machine(rng);
    REQUIRE_FALSE(validate_machine(m));
    for (const Configuration& c0 : m.inits) {
      const RunResult r1 = run(m, c0, 60);
      const RunResult r2 = run(m, c0, 60);
      CHECK(trace_of(r1) == trace_of(r2));
      CHECK(r1.index() == r2.index());

      Configuration c = c0;
      for (Instruction ins : trace_of(r1)) {
        auto s = step(m, c);
        REQUIRE(s);
        CHECK(s->instruction == ins);
        if (ins == Instruction::Halt) CHECK(s->next == halting_configuration(m));
        // unsigned registers: a decrement below zero would wrap around
        CHECK(s->next.a <= c.a + 1);
        CHECK(s->next.b <= c.b + 1);
        c = s->next;
      }
      if (std::holds_alternative<Halted>(r1)) CHECK(c == halting_configuration(m));
    }
  }
}

TEST_CASE("machine files") {
  const char* text =
      "# drain\n"
      "states: q0 q1 q2 star\n"
      "halting: star\n"
      "init: q0 a=3\n"
      "init: q0 b=1 a=0\n"
      "q0 decra q1   # take one\n"
      "q0 isza q2\n"
      "q1 iszb q0\n"
      "q2 halt\n";
  const Machine m = parse_machine(text);
  CHECK(m.states.size() == 4);
  CHECK(m.inits == std::vector<Configuration>{{"q0", 3, 0}, {"q0", 0, 1}});
  CHECK(m.entries.size() == 4);
  CHECK(m.entries[3] == Entry{"q2", Instruction::Halt, ""});
  CHECK(parse_machine(to_string(m)) == m);

  CHECK_THROWS_AS(parse_machine("states: q0\nq0 jump q1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_machine("states: q0 star\nhalting: star\nq0 halt star\n"), SyntaxError);
  CHECK_THROWS_AS(parse_machine("halting: star\n"), SyntaxError);
  CHECK_THROWS_AS(parse_machine("states: q0\nhalting: q0\ninit: q0 c=1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_machine("states: q0\nhalting: q0\ninit: q0 a=1 a=2\n"), SyntaxError);
  try {
    parse_machine("states: q0 star\nhalting: star\n\nq0 incra\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("traces and configurations as text") {
  const Trace t{Instruction::IncrA, Instruction::IszB, Instruction::Halt};
  CHECK(to_string(t) == "incra\niszb\nhalt\n");
  CHECK(parse_trace(to_string(t)) == t);
  CHECK(parse_trace("incra iszb\n# done\nhalt") == t);
  CHECK(to_inline_string(t) == "incra iszb halt");
  CHECK_THROWS_AS(parse_trace("incr"), SyntaxError);
  CHECK(parse_configuration("q3 b=2") == Configuration{"q3", 0, 2});
  CHECK(to_string(Configuration{"q3", 1, 2}) == "q3 a=1 b=2");
}

TEST_CASE("random machines survive print then parse") {
  Rng rng(100);
  for (int i = 0; i < 100; ++i) {
    const Machine m = random_machine(rng);
    REQUIRE(parse_machine(to_string(m)) == m);
  }
}

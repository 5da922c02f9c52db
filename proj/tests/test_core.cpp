#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sel/generate.hpp"
#include "sel/syntax.hpp"

using namespace sel;

namespace {

using Pairs = std::vector<LabelPair>;

Pairs sorted(Pairs p) {
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_CASE("closing the sigma2 base order") {
  const Signature s = Signature::close({"inf", "a", "b"}, {"inf"}, {{"a", "inf"}, {"b", "inf"}});
  CHECK(sorted(s.order()) == sorted({{"a", "a"}, {"b", "b"}, {"inf", "inf"}, {"a", "inf"}, {"b", "inf"}}));
  CHECK(s == Signature::sigma2());
  CHECK_FALSE(s.leq("a", "b"));
  CHECK_FALSE(s.leq("inf", "a"));
  CHECK(s.is_unbounded("inf"));
  CHECK_FALSE(s.is_unbounded("a"));
}

TEST_CASE("single label closes reflexively") {
  const Signature s = Signature::close({"u"}, {}, {});
  CHECK(s.order() == Pairs{{"u", "u"}});
}

TEST_CASE("unbounded below bounded is rejected") {
  try {
    Signature::close({"a", "b"}, {"a"}, {{"a", "b"}});
    FAIL("expected UpwardClosureViolation");
  } catch (const SignatureError& e) {
    CHECK(e.kind() == SignatureError::Kind::UpwardClosureViolation);
  }
}

TEST_CASE("undeclared labels are rejected") {
  CHECK_THROWS_AS(Signature::close({"a"}, {"z"}, {}), SignatureError);
  CHECK_THROWS_AS(Signature::close({"a"}, {}, {{"a", "z"}}), SignatureError);
  CHECK_THROWS_AS(Signature::sigma2().leq("a", "z"), SignatureError);
  try {
    Signature::close({"a", "a"}, {}, {});
    FAIL("expected DuplicateLabel");
  } catch (const SignatureError& e) {
    CHECK(e.kind() == SignatureError::Kind::DuplicateLabel);
  }
}

TEST_CASE("closure is a pre-order and idempotent") {
  Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const Signature s = random_signature(rng, 6);
    const auto& ls = s.labels();
    for (const auto& u : ls) {
      CHECK(s.leq(u, u));
      for (const auto& v : ls)
        for (const auto& w : ls)
          if (s.leq(u, v) && s.leq(v, w)) CHECK(s.leq(u, w));
      // upward closure of the unbounded set
      if (s.is_unbounded(u))
        for (const auto& v : ls)
          if (s.leq(u, v)) CHECK(s.is_unbounded(v));
    }
    CHECK(Signature::close(ls, s.unbounded(), s.order()) == s);
  }
}

TEST_CASE("dual follows the de Morgan table") {
  const Formula a = Formula::atom("a"), b = Formula::atom("b");
  CHECK(dual(a) == Formula::neg_atom("a"));
  CHECK(dual(Formula::tensor(a, b)) == Formula::par(dual(a), dual(b)));
  CHECK(dual(Formula::plus(a, b)) == Formula::with(dual(a), dual(b)));
  CHECK(dual(Formula::one()) == Formula::bot());
  CHECK(dual(Formula::zero()) == Formula::top());
  CHECK(dual(Formula::bang("u", a)) == Formula::qm("u", dual(a)));

  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Formula f = random_formula(rng, {});
    CHECK(dual(dual(f)) == f);
    CHECK(is_positive(f) != is_positive(dual(f)));
  }
}

TEST_CASE("polarity") {
  for (const char* text : {"a", "(a * b)", "1", "(a + b)", "0", "!a x"}) CHECK(is_positive(parse_formula(text)));
  for (const char* text : {"~a", "(a | b)", "bot", "(a & b)", "top", "?a x"}) CHECK(is_negative(parse_formula(text)));
}

TEST_CASE("formula text") {
  const Formula f = parse_formula("((q * !a ra) * ~r)");
  CHECK(f.is(Connective::Tensor));
  CHECK(f.left().right() == Formula::bang("a", Formula::atom("ra")));
  CHECK(to_string(f) == "((q * !a ra) * ~r)");
  CHECK(to_string(parse_formula("  ?inf   (q  | bot) ")) == "?inf (q | bot)");
  CHECK(parse_formula("top") == Formula::top());
  CHECK(parse_formula("topx") == Formula::atom("topx"));
  CHECK(parse_formula("!b ~r") == Formula::bang("b", Formula::neg_atom("r")));
}

TEST_CASE("formula syntax errors carry positions") {
  try {
    parse_formula("(a * b");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_formula("(a ^ b)"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("~bot"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("A"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("a b"), SyntaxError);
  CHECK_THROWS_AS(parse_formula(""), SyntaxError);
}

TEST_CASE("sequents in both layouts") {
  const Sequent s = parse_sequent("|- ?a ~ra, ~q");
  const Sequent t = parse_sequent("# goal\n?a ~ra\n\n~q   # state\n");
  CHECK(s == t);
  CHECK(to_string(s) == "?a ~ra\n~q\n");
  CHECK(to_inline_string(s.context) == "|- ?a ~ra, ~q");
  CHECK_THROWS_AS(parse_sequent(""), SyntaxError);
  CHECK_THROWS_AS(parse_sequent("a b\n"), SyntaxError);

  try {
    parse_sequent("a\n(b *\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("signature text") {
  const Signature s = parse_signature("labels: inf a b\nunbounded: inf\norder: a <= inf, b <= inf\n");
  CHECK(s == Signature::sigma2());
  CHECK(parse_signature(to_string(s)) == s);
  CHECK_THROWS_AS(parse_signature("labels: a\nlabels: b\n"), SyntaxError);
  CHECK_THROWS_AS(parse_signature("labels: a\norder: a < a\n"), SyntaxError);
  CHECK_THROWS_AS(parse_signature("labels: a b\nunbounded: a\norder: a <= b\n"), SignatureError);
}

TEST_CASE("multiset equality ignores order only") {
  const Formula a = Formula::atom("a"), b = Formula::atom("b");
  CHECK(multiset_equal({a, b, a}, {a, a, b}));
  CHECK_FALSE(multiset_equal({a, b}, {a, a, b}));
  CHECK_FALSE(multiset_equal({a, b, b}, {a, a, b}));
  CHECK(canonical_key({a, b}) == canonical_key({b, a}));
}

TEST_CASE("print then parse is the identity") {
  Rng rng(2024);
  FormulaShape wide;
  wide.max_connectives = 12;
  wide.atoms = {"p", "q0", "ra", "x_1", "topx", "botany"};
  wide.labels = {"inf", "a", "b", "u1"};
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_formula(rng, wide);
    REQUIRE(parse_formula(to_string(f)) == f);
  }
  for (int i = 0; i < 200; ++i) {
    const Sequent s = random_sequent(rng, wide);
    CHECK(parse_sequent(to_string(s)) == s);
    CHECK(parse_sequent(to_inline_string(s.context)) == s);
  }
  for (int i = 0; i < 100; ++i) {
    const Signature s = random_signature(rng, 6);
    REQUIRE(parse_signature(to_string(s)) == s);
  }
}

TEST_CASE("interning gives one handle per formula") {
  const Formula x = parse_formula("(a * !u (b | ~c))");
  const Formula y = Formula::tensor(Formula::atom("a"),
                                    Formula::bang("u", Formula::par(Formula::atom("b"), Formula::neg_atom("c"))));
  CHECK(x == y);
  CHECK(x.id() == y.id());
  CHECK(x.size() == 6);
  CHECK(connective_count(x) == 3);
}

#include "sel/minsky.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "scanner.hpp"

namespace sel {

std::string_view mnemonic(Instruction i) noexcept {
  switch (i) {
    case Instruction::Halt: return "halt";
    case Instruction::IncrA: return "incra";
    case Instruction::IncrB: return "incrb";
    case Instruction::DecrA: return "decra";
    case Instruction::DecrB: return "decrb";
    case Instruction::IszA: return "isza";
    case Instruction::IszB: return "iszb";
  }
  return "?";
}

std::optional<Instruction> parse_mnemonic(std::string_view text) noexcept {
  for (Instruction i : kAllInstructions)
    if (mnemonic(i) == text) return i;
  return std::nullopt;
}

bool Machine::has_state(std::string_view q) const {
  return std::find(states.begin(), states.end(), q) != states.end();
}

std::string describe(const ValidationError& error) {
  std::string kind;
  switch (error.kind) {
    case ValidationError::Kind::NondeterministicState: kind = "NondeterministicState"; break;
    case ValidationError::Kind::SelfLoop: kind = "SelfLoop"; break;
    case ValidationError::Kind::HaltFromHalting: kind = "HaltFromHalting"; break;
    case ValidationError::Kind::UnknownState: kind = "UnknownState"; break;
    case ValidationError::Kind::DuplicateState: kind = "DuplicateState"; break;
  }
  std::string out = kind + "(" + error.state + ")";
  if (!error.detail.empty()) out += ": " + error.detail;
  return out;
}

namespace {

// Guard on one register: no constraint, v >= 1, or v = 0.
enum class Guard { Any, Positive, Zero };

Guard guard_a(Instruction i) {
  return i == Instruction::DecrA ? Guard::Positive : i == Instruction::IszA ? Guard::Zero : Guard::Any;
}

Guard guard_b(Instruction i) {
  return i == Instruction::DecrB ? Guard::Positive : i == Instruction::IszB ? Guard::Zero : Guard::Any;
}

bool compatible(Guard x, Guard y) {
  return !((x == Guard::Positive && y == Guard::Zero) || (x == Guard::Zero && y == Guard::Positive));
}

bool holds(Guard g, std::uint64_t v) {
  return g == Guard::Any || (g == Guard::Positive ? v >= 1 : v == 0);
}

std::string entry_text(const Entry& e) {
  std::string out = e.source + " " + std::string(mnemonic(e.instruction));
  if (e.instruction != Instruction::Halt) out += " " + e.target;
  return out;
}

}  // namespace

bool guards_overlap(Instruction x, Instruction y) noexcept {
  return compatible(guard_a(x), guard_a(y)) && compatible(guard_b(x), guard_b(y));
}

bool enabled(Instruction i, const Configuration& c) noexcept {
  return holds(guard_a(i), c.a) && holds(guard_b(i), c.b);
}

std::optional<ValidationError> validate_machine(const Machine& m) {
  using Kind = ValidationError::Kind;
  for (std::size_t i = 0; i < m.states.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m.states[i] == m.states[j]) return ValidationError{Kind::DuplicateState, m.states[i], {}};
  if (!m.has_state(m.halting)) return ValidationError{Kind::UnknownState, m.halting, "halting state"};
  for (const Configuration& c : m.inits)
    if (!m.has_state(c.state)) return ValidationError{Kind::UnknownState, c.state, "init"};

  for (const Entry& e : m.entries) {
    if (!m.has_state(e.source)) return ValidationError{Kind::UnknownState, e.source, entry_text(e)};
    if (e.source == m.halting) return ValidationError{Kind::HaltFromHalting, e.source, entry_text(e)};
    if (e.instruction == Instruction::Halt) continue;
    if (!m.has_state(e.target)) return ValidationError{Kind::UnknownState, e.target, entry_text(e)};
    if (e.target == e.source) return ValidationError{Kind::SelfLoop, e.source, entry_text(e)};
  }
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Entry& x = m.entries[j];
      const Entry& y = m.entries[i];
      if (x.source == y.source && guards_overlap(x.instruction, y.instruction))
        return ValidationError{Kind::NondeterministicState, x.source, entry_text(x) + " / " + entry_text(y)};
    }
  }
  return std::nullopt;
}

std::optional<Step> step(const Machine& m, const Configuration& c) {
  const Entry* chosen = nullptr;
  for (const Entry& e : m.entries) {
    if (e.source != c.state || !enabled(e.instruction, c)) continue;
    if (chosen) throw std::logic_error("two entries enabled at " + to_string(c));
    chosen = &e;
  }
  if (!chosen) return std::nullopt;

  Configuration next{m.target_of(*chosen), c.a, c.b};
  switch (chosen->instruction) {
    case Instruction::Halt: next.a = next.b = 0; break;
    case Instruction::IncrA: ++next.a; break;
    case Instruction::IncrB: ++next.b; break;
    case Instruction::DecrA: --next.a; break;
    case Instruction::DecrB: --next.b; break;
    case Instruction::IszA:
    case Instruction::IszB: break;
  }
  return Step{chosen->instruction, std::move(next)};
}

RunResult run(const Machine& m, const Configuration& c0, std::size_t max_steps) {
  const Configuration done = halting_configuration(m);
  Configuration c = c0;
  Trace trace;
  while (true) {
    if (c == done) return Halted{std::move(trace)};
    if (trace.size() >= max_steps) return OutOfFuel{std::move(c), std::move(trace)};
    auto s = step(m, c);
    if (!s) return Stuck{std::move(c), std::move(trace)};
    trace.push_back(s->instruction);
    c = std::move(s->next);
  }
}

const Trace& trace_of(const RunResult& r) {
  return std::visit([](const auto& x) -> const Trace& { return x.trace; }, r);
}

namespace {

using detail::Scanner;

std::uint64_t number(Scanner& in) {
  std::string digits;
  while (!in.at_end() && in.peek() >= '0' && in.peek() <= '9') digits.push_back(in.get());
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    in.fail("expected a register value");
  return v;
}

bool end_of_line(const Scanner& in) { return in.at_end() || in.peek() == '\n'; }

Configuration configuration(Scanner& in) {
  Configuration c;
  c.state = in.identifier("state");
  in.skip_space(false);
  bool seen_a = false, seen_b = false;
  while (!end_of_line(in)) {
    std::string reg = in.identifier("'a=' or 'b='");
    if (reg != "a" && reg != "b") in.fail("expected register a or b");
    bool& seen = reg == "a" ? seen_a : seen_b;
    if (seen) in.fail("register " + reg + " given twice");
    seen = true;
    in.skip_space(false);
    in.expect("=");
    in.skip_space(false);
    (reg == "a" ? c.a : c.b) = number(in);
    in.skip_space(false);
  }
  return c;
}

}  // namespace

Machine parse_machine(std::string_view text) {
  Machine m;
  bool seen_states = false, seen_halting = false;
  Scanner in(text);
  while (true) {
    in.skip_space();
    if (in.at_end()) break;
    const int line = in.line(), column = in.column();
    std::string first = in.identifier("state or key");
    in.skip_space(false);
    if (in.accept(":")) {
      in.skip_space(false);
      if (first == "states") {
        if (seen_states) throw SyntaxError(line, column, "duplicate 'states:' line");
        seen_states = true;
        while (!end_of_line(in)) {
          m.states.push_back(in.identifier("state"));
          in.skip_space(false);
        }
      } else if (first == "halting") {
        if (seen_halting) throw SyntaxError(line, column, "duplicate 'halting:' line");
        seen_halting = true;
        m.halting = in.identifier("state");
        in.skip_space(false);
      } else if (first == "init") {
        m.inits.push_back(configuration(in));
      } else {
        throw SyntaxError(line, column, "unknown key '" + first + "'");
      }
    } else {
      Entry e;
      e.source = std::move(first);
      const int il = in.line(), ic = in.column();
      std::string word = in.identifier("instruction");
      auto instr = parse_mnemonic(word);
      if (!instr) throw SyntaxError(il, ic, "unknown instruction '" + word + "'");
      e.instruction = *instr;
      in.skip_space(false);
      if (e.instruction != Instruction::Halt) {
        e.target = in.identifier("target state");
        in.skip_space(false);
      }
      m.entries.push_back(std::move(e));
    }
    if (!end_of_line(in)) in.fail("unexpected input at end of line");
  }
  if (!seen_states) throw SyntaxError(in.line(), in.column(), "missing 'states:' line");
  if (!seen_halting) throw SyntaxError(in.line(), in.column(), "missing 'halting:' line");
  return m;
}

std::string to_string(const Machine& m) {
  std::string out = "states:";
  for (const auto& q : m.states) out += " " + q;
  out += "\nhalting: " + m.halting + "\n";
  for (const auto& c : m.inits) out += "init: " + to_string(c) + "\n";
  for (const auto& e : m.entries) out += entry_text(e) + "\n";
  return out;
}

Configuration parse_configuration(std::string_view text) {
  Scanner in(text);
  in.skip_space();
  Configuration c = configuration(in);
  in.skip_space();
  if (!in.at_end()) in.fail("trailing input after configuration");
  return c;
}

std::string to_string(const Configuration& c) {
  return c.state + " a=" + std::to_string(c.a) + " b=" + std::to_string(c.b);
}

Trace parse_trace(std::string_view text) {
  Trace t;
  Scanner in(text);
  while (true) {
    in.skip_space();
    if (in.at_end()) break;
    const int line = in.line(), column = in.column();
    std::string word = in.identifier("instruction");
    auto i = parse_mnemonic(word);
    if (!i) throw SyntaxError(line, column, "unknown instruction '" + word + "'");
    t.push_back(*i);
  }
  return t;
}

std::string to_string(const Trace& t) {
  std::string out;
  for (Instruction i : t) out += std::string(mnemonic(i)) + "\n";
  return out;
}

std::string to_inline_string(const Trace& t) {
  std::string out;
  for (Instruction i : t) {
    if (!out.empty()) out += ' ';
    out += mnemonic(i);
  }
  return out;
}

}  // namespace sel

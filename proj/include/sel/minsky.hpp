// Two-register Minsky machines: model, validation, simulator and text IO.

#ifndef SEL_MINSKY_HPP_
#define SEL_MINSKY_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sel {

enum class Instruction { Halt, IncrA, IncrB, DecrA, DecrB, IszA, IszB };

inline constexpr Instruction kAllInstructions[] = {
    Instruction::Halt, Instruction::IncrA, Instruction::IncrB, Instruction::DecrA,
    Instruction::DecrB, Instruction::IszA, Instruction::IszB,
};

std::string_view mnemonic(Instruction i) noexcept;
std::optional<Instruction> parse_mnemonic(std::string_view text) noexcept;

// For halt, `target` is ignored and the machine's halting state is used.
struct Entry {
  std::string source;
  Instruction instruction = Instruction::Halt;
  std::string target;

  friend bool operator==(const Entry&, const Entry&) = default;
};

struct Configuration {
  std::string state;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct Machine {
  std::vector<std::string> states;
  std::string halting;
  std::vector<Entry> entries;
  std::vector<Configuration> inits;  // from `init:` lines, in file order

  bool has_state(std::string_view q) const;
  std::string target_of(const Entry& e) const { return e.instruction == Instruction::Halt ? halting : e.target; }

  friend bool operator==(const Machine&, const Machine&) = default;
};

using Trace = std::vector<Instruction>;

struct ValidationError {
  enum class Kind { NondeterministicState, SelfLoop, HaltFromHalting, UnknownState, DuplicateState };
  Kind kind;
  std::string state;
  std::string detail;
};

std::string describe(const ValidationError& error);

// Ok iff every state is declared, no entry loops on its own state, nothing
// leaves the halting state, and no two entries from one state can both be
// enabled.
std::optional<ValidationError> validate_machine(const Machine& m);

// True when some valuation enables both instructions.
bool guards_overlap(Instruction x, Instruction y) noexcept;
bool enabled(Instruction i, const Configuration& c) noexcept;

struct Step {
  Instruction instruction;
  Configuration next;
};

// The unique enabled entry applied to c, or nullopt if none is enabled.
std::optional<Step> step(const Machine& m, const Configuration& c);

inline Configuration halting_configuration(const Machine& m) { return {m.halting, 0, 0}; }

struct Halted {
  Trace trace;
};
struct Stuck {
  Configuration at;
  Trace trace;
};
struct OutOfFuel {
  Configuration at;
  Trace trace;
};
using RunResult = std::variant<Halted, Stuck, OutOfFuel>;

RunResult run(const Machine& m, const Configuration& c0, std::size_t max_steps);

const Trace& trace_of(const RunResult& r);

// Machine file:
//   states: q0 q1 qf
//   halting: qf
//   init: q0 a=2 b=0
//   q0 decra q1
//   q1 halt
// `#` starts a comment. Throws SyntaxError.
Machine parse_machine(std::string_view text);
std::string to_string(const Machine& m);

// `q0 a=2 b=0`; register fields are optional and default to 0.
Configuration parse_configuration(std::string_view text);
std::string to_string(const Configuration& c);

// One mnemonic per line.
Trace parse_trace(std::string_view text);
std::string to_string(const Trace& t);
// Space-separated, for reports.
std::string to_inline_string(const Trace& t);

}  // namespace sel

#endif  // SEL_MINSKY_HPP_

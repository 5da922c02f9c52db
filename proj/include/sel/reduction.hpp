// Encoding of two-register machines into subexponential logic over the
// signature Σ₂ = {inf, a, b} (a, b <= inf, inf unbounded), and the two
// translations between halting traces and proofs of the encoded sequent.
//
// A configuration ⟨q, a:m, b:n⟩ becomes m copies of ?a ~ra, n copies of
// ?b ~rb and ~q. Each entry of the machine becomes one element of the table
// Π; the goal is ⊢ ?inf Π, ⟦c0⟧.

#ifndef SEL_REDUCTION_HPP_
#define SEL_REDUCTION_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sel/focused.hpp"
#include "sel/formula.hpp"
#include "sel/minsky.hpp"
#include "sel/signature.hpp"
#include "sel/unfocused.hpp"

namespace sel {

// Reserved atoms. Machines must not use them as state names.
inline constexpr const char* kHaltAtom = "h";
inline constexpr const char* kRegisterA = "ra";
inline constexpr const char* kRegisterB = "rb";

class ReductionError : public std::runtime_error {
 public:
  enum class Kind { AtomClash, InvalidMachine, TraceMismatch, MalformedCertificate };

  ReductionError(Kind kind, const std::string& message);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// What a table element stands for.
struct PiRole {
  enum class Kind {
    Entry,     // machine entry `entry`
    CleanupA,  // ((h * !a ra) * ~h)
    CleanupB,  // ((h * !b rb) * ~h)
    Final,     // (h * !inf 1)
    Accept,    // (* * !inf 1), see encode_halting
  };
  Kind kind = Kind::Entry;
  std::size_t entry = 0;

  friend bool operator==(const PiRole&, const PiRole&) = default;
};

struct ReductionBundle {
  Signature sigma2 = Signature::sigma2();
  Context pi;
  std::vector<PiRole> roles;  // parallel to pi
  Sequent goal;
  std::map<std::string, std::string> atom_map;  // states, registers, halt -> atom
};

Context encode_config(const Configuration& c);

// One element per entry; the three h-elements are shared and appear once,
// after the per-entry elements, when the machine has any halt entry.
Context encode_machine(const Machine& m);

// Π is encode_machine(m), plus an accept element (* * !inf 1) when c0 is
// already the halting configuration or some non-halt entry targets *. In
// both cases the run can end at ⟨*, 0, 0⟩ without a halt instruction, and
// nothing else in Π could consume ~*.
//
// Throws ReductionError: AtomClash for a state named h, ra, rb (or one that
// is not an atom name), InvalidMachine if validation fails or c0.state is
// not a state of m.
ReductionBundle encode_halting(const Machine& m, const Configuration& c0);

// The role of `element` (a member of bundle.pi), if any.
std::optional<PiRole> role_of(const ReductionBundle& bundle, Formula element);

// One derived block per instruction, then the h-cleanup. Throws
// ReductionError::TraceMismatch unless run(m, c0, |t|) halts with trace t.
UnfocusedProof proof_from_trace(const ReductionBundle& bundle, const Machine& m, const Configuration& c0,
                                const Trace& t);

// Walks the main branch of a focused proof of bundle.goal and reads the
// instruction of every udecide on a table element. Stops at the first halt
// (or accept) element. Throws ReductionError::MalformedCertificate when the
// proof does not have that shape.
Trace trace_from_proof(const ReductionBundle& bundle, const Machine& m, const FocusedProof& p);

}  // namespace sel

#endif  // SEL_REDUCTION_HPP_

// Cut-free one-sided sequent calculus: proof certificates, checker and a
// bounded backward search used as a test oracle.
//
// Context bookkeeping is positional. Every rule except contr and tensor
// builds its premise context by deleting the principal formula and appending
// the new formulas at the end, in order:
//
//   par i      Γ, A|B        ->  Γ, A, B
//   bot i      Γ, bot        ->  Γ
//   plus1/2 i  Γ, A+B        ->  Γ, A      /  Γ, B
//   with i     Γ, A&B        ->  Γ, A   and   Γ, B
//   qm i       Γ, ?u A       ->  Γ, A
//   bang i     ?v Γ, !u C    ->  ?v Γ, C          (u <= every v)
//   weak i     Γ, ?u A       ->  Γ                (u unbounded)
//   contr i    Γ             ->  Γ, Γ[i]          (Γ[i] = ?u A, u unbounded)
//   tensor i L Γ, A*B        ->  Γ|L, A   and   Γ|rest, B
//
// where Γ|L keeps the positions listed in L in their original order.

#ifndef SEL_UNFOCUSED_HPP_
#define SEL_UNFOCUSED_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sel/check.hpp"
#include "sel/formula.hpp"
#include "sel/signature.hpp"

namespace sel {

enum class UnfocusedRule {
  Init,
  Tensor,
  One,
  Plus1,
  Plus2,
  Par,
  Bot,
  With,
  Top,
  Qm,
  Bang,
  Weak,
  Contr,
};

inline constexpr UnfocusedRule kAllUnfocusedRules[] = {
    UnfocusedRule::Init, UnfocusedRule::Tensor, UnfocusedRule::One,  UnfocusedRule::Plus1,
    UnfocusedRule::Plus2, UnfocusedRule::Par,   UnfocusedRule::Bot,  UnfocusedRule::With,
    UnfocusedRule::Top,  UnfocusedRule::Qm,     UnfocusedRule::Bang, UnfocusedRule::Weak,
    UnfocusedRule::Contr,
};

std::string_view rule_name(UnfocusedRule rule) noexcept;
std::size_t arity(UnfocusedRule rule) noexcept;

struct UnfocusedProof {
  UnfocusedRule rule = UnfocusedRule::Init;
  std::size_t principal = 0;
  std::size_t partner = 0;        // init: position of the negated atom
  std::vector<std::size_t> left;  // tensor: sorted positions sent left
  std::vector<UnfocusedProof> premises;

  friend bool operator==(const UnfocusedProof&, const UnfocusedProof&) = default;
};

std::size_t node_count(const UnfocusedProof& proof);
std::size_t count_rule(const UnfocusedProof& proof, UnfocusedRule rule);

CheckResult check_unfocused(const Signature& sig, const Sequent& goal, const UnfocusedProof& proof);

// Premise contexts of one node. Throws CheckFailure (path relative to the
// node) when the node does not instantiate its rule.
std::vector<Context> unfocused_premises(const Signature& sig, const Context& ctx,
                                        const UnfocusedProof& node);

// Re-addresses `proof`, written for context X, to a permuted context Y with
// Y[k] = X[source[k]].
UnfocusedProof reindex(const UnfocusedProof& proof, std::span<const std::size_t> source);

struct UnfocusedBudget {
  std::size_t max_rules = 40;         // logical rule applications (weak/contr excluded)
  std::size_t max_contractions = 6;   // uses of an unbounded ?-formula
};

// Bounded backward search. A returned proof always passes check_unfocused;
// nullopt means no proof was found within the budget.
std::optional<UnfocusedProof> search_unfocused(const Signature& sig, const Sequent& goal,
                                               UnfocusedBudget budget);

// Certificate text: (rule principal extras premises...).
std::string to_sexpr(const UnfocusedProof& proof);
UnfocusedProof parse_unfocused_proof(std::string_view text);

}  // namespace sel

#endif  // SEL_UNFOCUSED_HPP_

// Focused sequent calculus: focused sequents, certificates, checker and the
// erasure of focused proofs into unfocused ones.
//
// Premise bookkeeping (U = positions of unbounded ?-formulas):
//
//   decide i      Ω          ->  Ω - i, [Ω[i]]
//   ldecide i     Ω          ->  Ω - i, [A]       Ω[i] = ?u A, u bounded
//   udecide i     Ω          ->  Ω, [A]           Ω[i] = ?u A, u unbounded
//   blur          Ω, [N]     ->  Ω, N
//   ftensor L     Ω, [B*C]   ->  Ω|(U+L), [B]  and  Ω|(U+rest), [C]
//   fplus1/2      Ω, [B+C]   ->  Ω, [B]  /  Ω, [C]
//   fbang K       Ω, [!u C]  ->  Ω|K, C
//   finit (j)     Ω, [a]        Ω[j] = ~a, everything else unbounded
//   f1 ()         Ω, [1]        everything unbounded
//
// par, bot, with and top act on unfocused sequents exactly as in the
// unfocused calculus.

#ifndef SEL_FOCUSED_HPP_
#define SEL_FOCUSED_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sel/check.hpp"
#include "sel/formula.hpp"
#include "sel/signature.hpp"
#include "sel/unfocused.hpp"

namespace sel {

struct FocusedSequent {
  Context context;
  std::optional<Formula> focus;

  friend bool operator==(const FocusedSequent&, const FocusedSequent&) = default;
};

inline FocusedSequent unfocused(const Sequent& s) { return {s.context, std::nullopt}; }

enum class FocusedRule {
  FInit,
  FTensor,
  FOne,
  FPlus1,
  FPlus2,
  FBang,
  Blur,
  Par,
  Bot,
  With,
  Top,
  Decide,
  LDecide,
  UDecide,
};

inline constexpr FocusedRule kAllFocusedRules[] = {
    FocusedRule::FInit, FocusedRule::FTensor, FocusedRule::FOne,   FocusedRule::FPlus1,
    FocusedRule::FPlus2, FocusedRule::FBang,  FocusedRule::Blur,   FocusedRule::Par,
    FocusedRule::Bot,   FocusedRule::With,    FocusedRule::Top,    FocusedRule::Decide,
    FocusedRule::LDecide, FocusedRule::UDecide,
};

std::string_view rule_name(FocusedRule rule) noexcept;
std::size_t arity(FocusedRule rule) noexcept;
bool is_decide(FocusedRule rule) noexcept;
// True for rules that act on the focus rather than on a context position.
bool acts_on_focus(FocusedRule rule) noexcept;
// True for rules carrying a position list (left for ftensor, kept otherwise).
bool has_positions(FocusedRule rule) noexcept;

struct FocusedProof {
  FocusedRule rule = FocusedRule::Decide;
  std::size_t principal = 0;           // decide family and par/bot/with/top
  std::vector<std::size_t> positions;  // ftensor: left; finit/f1/fbang: kept
  std::vector<FocusedProof> premises;

  friend bool operator==(const FocusedProof&, const FocusedProof&) = default;
};

std::size_t node_count(const FocusedProof& proof);
std::size_t count_rule(const FocusedProof& proof, FocusedRule rule);
std::size_t decide_count(const FocusedProof& proof);
// Largest number of decide-family nodes on a root-to-leaf path.
std::size_t decide_depth(const FocusedProof& proof);

// Every member is positive, a negated atom, or a ?-formula.
bool is_neutral(const Context& ctx) noexcept;

CheckResult check_focused(const Signature& sig, const FocusedSequent& goal, const FocusedProof& proof);

// Premises of one node; throws CheckFailure when the node does not fit.
std::vector<FocusedSequent> focused_premises(const Signature& sig, const FocusedSequent& goal,
                                             const FocusedProof& node);

// Erases focusing. The unfocused image of ⊢ Ω, [A] is ⊢ Ω, A with A last.
// Precondition: check_focused(sig, goal, proof) is ok.
UnfocusedProof defocus(const Signature& sig, const FocusedSequent& goal, const FocusedProof& proof);

std::string to_sexpr(const FocusedProof& proof);
FocusedProof parse_focused_proof(std::string_view text);

}  // namespace sel

#endif  // SEL_FOCUSED_HPP_

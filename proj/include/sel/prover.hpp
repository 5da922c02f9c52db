// Bounded backward search in the focused calculus.
//
// The outer loop deepens the per-branch decide bound from 1 up to
// max_decides; inside one bound the search is plain depth-first
// backtracking with a fixed expansion order, so equal inputs give equal
// certificates.

#ifndef SEL_PROVER_HPP_
#define SEL_PROVER_HPP_

#include <cstddef>
#include <optional>

#include "sel/focused.hpp"
#include "sel/formula.hpp"
#include "sel/signature.hpp"

namespace sel {

struct SearchBudget {
  std::size_t max_decides = 8;       // decide-family nodes along any branch
  std::size_t max_nodes = 2'000'000; // total expansions over all rounds
  // Remember neutral sequents that failed with a given number of decides
  // left. Only prunes subtrees that already failed, so the certificate found
  // is the same either way; without it, register cleanup revisits the same
  // multisets in every order.
  bool memoize = true;
};

struct SearchStats {
  std::size_t nodes_expanded = 0;
  std::size_t max_depth = 0;      // most decides used on one branch
  std::size_t rounds = 0;         // decide bounds tried
  bool node_limit_hit = false;
  bool bound_hit = false;         // last round was cut by the decide bound
};

struct SearchOutcome {
  std::optional<FocusedProof> proof;  // set iff Proved
  SearchStats stats;

  bool proved() const noexcept { return proof.has_value(); }
};

SearchOutcome prove_focused(const Signature& sig, const Sequent& goal, const SearchBudget& budget);

// Also accepts a goal that is already focused, ⊢ Ω, [A].
SearchOutcome prove_focused(const Signature& sig, const FocusedSequent& goal, const SearchBudget& budget);

}  // namespace sel

#endif  // SEL_PROVER_HPP_

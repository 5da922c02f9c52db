// Seeded random generators for formulas, sequents, signatures and machines.
// Used by the property tests and by `sel selftest`.

#ifndef SEL_GENERATE_HPP_
#define SEL_GENERATE_HPP_

#include <random>
#include <string>
#include <vector>

#include "sel/formula.hpp"
#include "sel/minsky.hpp"
#include "sel/signature.hpp"

namespace sel {

using Rng = std::mt19937_64;

struct FormulaShape {
  std::vector<std::string> atoms = {"q", "r", "ra", "rb"};
  std::vector<std::string> labels = {"inf", "a", "b"};
  std::size_t max_connectives = 6;  // units count as connectives, atoms do not
};

// Number of connectives in f, units included.
std::size_t connective_count(Formula f);

Formula random_formula(Rng& rng, const FormulaShape& shape);

// One to three formulas sharing a connective budget; with probability 1/3
// the sequent is A, dual(A) instead.
Sequent random_sequent(Rng& rng, const FormulaShape& shape);

// Up to `max_labels` labels with a random pre-order and an upward-closed
// unbounded set.
Signature random_signature(Rng& rng, std::size_t max_labels = 5);

// A valid machine with states q0.. and halting state `star`, plus one or two
// initial configurations.
Machine random_machine(Rng& rng, std::size_t max_states = 5);

}  // namespace sel

#endif  // SEL_GENERATE_HPP_

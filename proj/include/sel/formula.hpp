// Formulas of propositional subexponential logic in negation normal form.

#ifndef SEL_FORMULA_HPP_
#define SEL_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sel {

enum class Connective : std::uint8_t {
  Atom,
  NegAtom,
  Tensor,
  One,
  Plus,
  Zero,
  Par,
  Bot,
  With,
  Top,
  Bang,
  Qm,
};

enum class Polarity : std::uint8_t { Positive, Negative };

namespace detail {
struct FormulaNode;
}

// Immutable, hash-consed formula handle. Two handles compare equal iff the
// formulas are syntactically identical, so equality is a pointer compare.
// Negation only ever appears on atoms; `dual` computes the De Morgan dual.
class Formula {
 public:
  static Formula atom(std::string_view name);
  static Formula neg_atom(std::string_view name);
  static Formula tensor(Formula lhs, Formula rhs);
  static Formula par(Formula lhs, Formula rhs);
  static Formula plus(Formula lhs, Formula rhs);
  static Formula with(Formula lhs, Formula rhs);
  static Formula one();
  static Formula bot();
  static Formula zero();
  static Formula top();
  static Formula bang(std::string_view label, Formula body);
  static Formula qm(std::string_view label, Formula body);

  Connective connective() const noexcept;

  // Atom name for Atom/NegAtom, subexponential label for Bang/Qm.
  const std::string& name() const noexcept;
  const std::string& label() const noexcept { return name(); }

  // Operands of binary connectives; body() is the operand of Bang/Qm.
  Formula left() const noexcept;
  Formula right() const noexcept;
  Formula body() const noexcept { return left(); }

  // Dense identifier assigned at interning time; stable for the process.
  std::uint32_t id() const noexcept;
  std::size_t size() const noexcept;  // number of connectives and atoms

  bool is(Connective c) const noexcept { return connective() == c; }

  friend bool operator==(Formula a, Formula b) noexcept { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(Formula a, Formula b) noexcept {
    return a.id() <=> b.id();
  }

 private:
  explicit Formula(const detail::FormulaNode* node) noexcept : node_(node) {}
  static Formula make(Connective c, std::string_view name, const detail::FormulaNode* lhs,
                      const detail::FormulaNode* rhs);

  const detail::FormulaNode* node_;
};

Formula dual(Formula f);
Polarity polarity(Formula f) noexcept;

inline bool is_positive(Formula f) noexcept { return polarity(f) == Polarity::Positive; }
inline bool is_negative(Formula f) noexcept { return polarity(f) == Polarity::Negative; }

// Ordered list with multiset semantics; proofs address members by position.
using Context = std::vector<Formula>;

bool multiset_equal(const Context& a, const Context& b);

// Context sorted by formula id: equal keys iff multiset-equal contexts.
std::vector<std::uint32_t> canonical_key(const Context& ctx);

struct Sequent {
  Context context;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

}  // namespace sel

template <>
struct std::hash<sel::Formula> {
  std::size_t operator()(sel::Formula f) const noexcept { return f.id(); }
};

#endif  // SEL_FORMULA_HPP_

// Outcome type shared by the unfocused and focused proof checkers.

#ifndef SEL_CHECK_HPP_
#define SEL_CHECK_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sel {

enum class CheckReason {
  ArityMismatch,        // premise count does not match the rule
  PositionOutOfRange,   // principal / split / kept position invalid
  PrincipalMismatch,    // principal formula has the wrong connective
  ContextMismatch,      // leaf context or split does not fit the rule
  PromotionBlocked,     // ! rule with a non-? formula or a label not >= u
  StructuralOnBounded,  // weak/contr on a bounded ?-formula
  NotNeutral,           // decide rule under a non-neutral context
  FocusOnNegative,      // decide on a negative formula
  LingeringLinear,      // finit/f1/f!/f* discarding a bounded formula
  WrongDecideFlavor,    // ldecide on unbounded or udecide on bounded label
  FocusExpected,        // focused rule applied to an unfocused sequent
  FocusUnexpected,      // unfocused rule applied to a focused sequent
  UnknownLabel,         // label not in the signature
};

std::string_view to_string(CheckReason reason) noexcept;

// Node path from the root: the i-th entry selects premise i.
struct CheckError {
  std::vector<std::size_t> path;
  CheckReason reason;
  std::string detail;
};

std::string format_path(const std::vector<std::size_t>& path);
std::string describe(const CheckError& error);

struct CheckResult {
  std::optional<CheckError> error;

  bool ok() const noexcept { return !error.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

// Thrown by the premise-computation helpers when a node does not fit its rule.
class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(CheckError error)
      : std::runtime_error(describe(error)), error_(std::move(error)) {}
  const CheckError& error() const noexcept { return error_; }

 private:
  CheckError error_;
};

}  // namespace sel

#endif  // SEL_CHECK_HPP_

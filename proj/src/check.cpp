#include "sel/check.hpp"

namespace sel {

std::string_view to_string(CheckReason reason) noexcept {
  switch (reason) {
    case CheckReason::ArityMismatch: return "ArityMismatch";
    case CheckReason::PositionOutOfRange: return "PositionOutOfRange";
    case CheckReason::PrincipalMismatch: return "PrincipalMismatch";
    case CheckReason::ContextMismatch: return "ContextMismatch";
    case CheckReason::PromotionBlocked: return "PromotionBlocked";
    case CheckReason::StructuralOnBounded: return "StructuralOnBounded";
    case CheckReason::NotNeutral: return "NotNeutral";
    case CheckReason::FocusOnNegative: return "FocusOnNegative";
    case CheckReason::LingeringLinear: return "LingeringLinear";
    case CheckReason::WrongDecideFlavor: return "WrongDecideFlavor";
    case CheckReason::FocusExpected: return "FocusExpected";
    case CheckReason::FocusUnexpected: return "FocusUnexpected";
    case CheckReason::UnknownLabel: return "UnknownLabel";
  }
  return "?";
}

std::string format_path(const std::vector<std::size_t>& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string(path[i]);
  }
  return out;
}

std::string describe(const CheckError& error) {
  std::string out = "RuleMismatch at " + format_path(error.path) + ": " +
                    std::string(to_string(error.reason));
  if (!error.detail.empty()) out += " (" + error.detail + ")";
  return out;
}

}  // namespace sel

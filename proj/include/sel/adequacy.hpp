// One machine, one initial configuration, the whole pipeline: simulate,
// encode, search, check, extract, synthesize. Shared by the CLI and the
// acceptance suite.

#ifndef SEL_ADEQUACY_HPP_
#define SEL_ADEQUACY_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "sel/minsky.hpp"
#include "sel/prover.hpp"
#include "sel/reduction.hpp"

namespace sel {

// v(a) + v(b) of the configuration the cleanup starts from: the one entering
// halt for halting runs, the last one reached otherwise.
std::uint64_t register_sum(const Machine& m, const Configuration& c0, const RunResult& r);

// trace length + register_sum + 3.
std::size_t adequacy_budget(const Machine& m, const Configuration& c0, const RunResult& r);

struct CaseOptions {
  std::size_t max_steps = 200;
  std::optional<std::size_t> max_decides;  // default: adequacy_budget
  std::size_t max_nodes = 2'000'000;
  bool memoize = true;
};

struct CaseReport {
  RunResult run = Halted{};
  bool halted = false;
  std::size_t budget = 0;
  SearchOutcome search;
  bool agree = false;               // halted == proved
  bool certificate_ok = false;      // focused proof checks (vacuous if none)
  bool defocus_ok = false;          // its defocused image checks (vacuous if none)
  std::optional<Trace> extracted;   // from the focused proof
  bool trace_match = false;         // extracted == simulator trace (vacuous if none)
  bool synthesized_ok = false;      // proof_from_trace checks (vacuous if not halted)
  std::string error;                // first unexpected exception, if any

  bool ok() const noexcept {
    return error.empty() && agree && certificate_ok && defocus_ok && trace_match && synthesized_ok;
  }
};

CaseReport run_case(const Machine& m, const Configuration& c0, const CaseOptions& options = {});

}  // namespace sel

#endif  // SEL_ADEQUACY_HPP_

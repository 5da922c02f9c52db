#include "sel/adequacy.hpp"

#include <exception>

namespace sel {

std::uint64_t register_sum(const Machine& m, const Configuration& c0, const RunResult& r) {
  Configuration c = c0;
  for (Instruction i : trace_of(r)) {
    if (i == Instruction::Halt) return c.a + c.b;
    c = step(m, c)->next;
  }
  return c.a + c.b;
}

std::size_t adequacy_budget(const Machine& m, const Configuration& c0, const RunResult& r) {
  return trace_of(r).size() + register_sum(m, c0, r) + 3;
}

CaseReport run_case(const Machine& m, const Configuration& c0, const CaseOptions& options) {
  CaseReport rep;
  try {
    rep.run = run(m, c0, options.max_steps);
    rep.halted = std::holds_alternative<Halted>(rep.run);
    rep.budget = options.max_decides.value_or(adequacy_budget(m, c0, rep.run));

    const ReductionBundle bundle = encode_halting(m, c0);
    rep.search = prove_focused(bundle.sigma2, bundle.goal, {rep.budget, options.max_nodes, options.memoize});
    rep.agree = rep.halted == rep.search.proved();

    rep.certificate_ok = rep.defocus_ok = rep.trace_match = true;
    if (rep.search.proof) {
      const FocusedSequent goal = unfocused(bundle.goal);
      rep.certificate_ok = check_focused(bundle.sigma2, goal, *rep.search.proof).ok();
      rep.defocus_ok = check_unfocused(bundle.sigma2, bundle.goal,
                                       defocus(bundle.sigma2, goal, *rep.search.proof))
                           .ok();
      rep.extracted = trace_from_proof(bundle, m, *rep.search.proof);
      rep.trace_match = rep.halted && *rep.extracted == trace_of(rep.run);
    }

    rep.synthesized_ok = true;
    if (rep.halted) {
      const UnfocusedProof p = proof_from_trace(bundle, m, c0, trace_of(rep.run));
      rep.synthesized_ok = check_unfocused(bundle.sigma2, bundle.goal, p).ok();
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  return rep;
}

}  // namespace sel

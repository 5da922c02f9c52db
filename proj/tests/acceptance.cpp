// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Usage: acceptance CORPUS_DIR

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sel/adequacy.hpp"
#include "sel/generate.hpp"
#include "sel/reduction.hpp"
#include "sel/syntax.hpp"
#include "support/mutation.hpp"

namespace fs = std::filesystem;
using namespace sel;

namespace {

struct Case {
  std::string name;
  Machine machine;
  Configuration c0;
};

std::vector<Case> load_corpus(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".2rm") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Case> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    const Machine m = parse_machine(ss.str());
    for (const auto& c : m.inits) out.push_back({f.stem().string() + " [" + to_string(c) + "]", m, c});
  }
  return out;
}

bool any_failed = false;

void report(int n, bool ok, const std::string& detail) {
  any_failed |= !ok;
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1 and 2 share the same runs.
std::vector<CaseReport> adequacy(const std::vector<Case>& corpus) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<CaseReport> reports;
  std::size_t agree = 0, halting = 0;
  std::string bad;
  for (const Case& c : corpus) {
    reports.push_back(run_case(c.machine, c.c0));
    const CaseReport& r = reports.back();
    halting += r.halted;
    const bool ok = r.error.empty() && r.agree && !r.search.stats.node_limit_hit;
    agree += ok;
    if (!ok && bad.empty()) bad = " first disagreement: " + c.name + (r.error.empty() ? "" : " " + r.error);
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/" << corpus.size() << " cases agree (" << halting << " halting), " << secs << "s" << bad;
  report(1, corpus.size() >= 10 && agree == corpus.size() && secs < 60.0, d.str());

  std::size_t halted = 0, matched = 0;
  for (const CaseReport& r : reports) {
    if (!r.halted) continue;
    ++halted;
    matched += r.extracted && *r.extracted == trace_of(r.run);
  }
  std::ostringstream d2;
  d2 << matched << "/" << halted << " extracted traces equal the simulator trace";
  report(2, halted > 0 && matched == halted, d2.str());
  return reports;
}

void soundness(const std::vector<Case>& corpus) {
  // Certificates from both producers over the corpus and random halting machines.
  struct Pooled {
    Signature sig;
    Sequent goal;
    std::optional<FocusedProof> focused;
    std::optional<UnfocusedProof> unfocused;
  };
  std::vector<Pooled> pool;
  std::size_t emitted = 0, checked = 0;

  auto add = [&](const Machine& m, const Configuration& c0) {
    const RunResult r = run(m, c0, 200);
    if (!std::holds_alternative<Halted>(r)) return;
    const ReductionBundle b = encode_halting(m, c0);
    const SearchOutcome out = prove_focused(b.sigma2, b.goal, {adequacy_budget(m, c0, r)});
    if (out.proof) {
      ++emitted;
      checked += check_focused(b.sigma2, unfocused(b.goal), *out.proof).ok();
      pool.push_back({b.sigma2, b.goal, out.proof, std::nullopt});
    }
    const UnfocusedProof u = proof_from_trace(b, m, c0, trace_of(r));
    ++emitted;
    checked += check_unfocused(b.sigma2, b.goal, u).ok();
    pool.push_back({b.sigma2, b.goal, std::nullopt, u});
  };
  for (const Case& c : corpus) add(c.machine, c.c0);
  Rng rng(2024);
  for (int i = 0; i < 400 && pool.size() < 80; ++i) {
    const Machine m = random_machine(rng, 4);
    for (const auto& c0 : m.inits) {
      const RunResult r = run(m, c0, 10);
      if (std::holds_alternative<Halted>(r) && trace_of(r).size() + c0.a + c0.b <= 6) add(m, c0);
    }
  }
  // Random sequents too, so the sample is not all reduction proofs.
  const Signature s2 = Signature::sigma2();
  for (int i = 0; i < 200 && pool.size() < 120; ++i) {
    const Sequent s = random_sequent(rng, {});
    const SearchOutcome out = prove_focused(s2, s, {8});
    if (!out.proof) continue;
    ++emitted;
    checked += check_focused(s2, unfocused(s), *out.proof).ok();
    pool.push_back({s2, s, out.proof, std::nullopt});
  }

  std::shuffle(pool.begin(), pool.end(), rng);
  testing::MutationTally tally;
  std::size_t sampled = 0, nf = 0, nu = 0;
  for (const Pooled& p : pool) {
    if (sampled == 50) break;
    // keep the sample balanced between the two calculi
    if (p.focused && nf >= 25) continue;
    if (p.unfocused && nu >= 25) continue;
    ++sampled;
    if (p.focused) {
      ++nf;
      tally.add(testing::mutate_all(p.sig, unfocused(p.goal), *p.focused));
    } else {
      ++nu;
      tally.add(testing::mutate_all(p.sig, p.goal, *p.unfocused));
    }
  }
  std::ostringstream d;
  d << checked << "/" << emitted << " certificates check; " << sampled << " sampled (" << nf << " focused, " << nu
    << " unfocused): " << tally.mutants << " mutants, " << tally.rejected << " rejected, " << tally.aliases
    << " aliases, " << tally.escaped << " escaped";
  if (!tally.escapes.empty()) d << "; first escape " << tally.escapes.front();
  report(3, checked == emitted && sampled == 50 && tally.escaped == 0 && tally.mutants > 0, d.str());
}

void focusing_agreement() {
  const Signature s2 = Signature::sigma2();
  Rng rng(4);
  std::size_t u_proved = 0, f_proved = 0, forward_ok = 0, raised = 0, raised_ok = 0, defocus_ok = 0;
  for (int i = 0; i < 500; ++i) {
    const Sequent s = random_sequent(rng, {});
    const bool u = search_unfocused(s2, s, {40, 6}).has_value();
    const SearchOutcome f = prove_focused(s2, s, {8});
    u_proved += u;
    f_proved += f.proved();
    if (u) forward_ok += f.proved();
    if (f.proof) {
      defocus_ok += check_unfocused(s2, s, defocus(s2, unfocused(s), *f.proof)).ok();
      if (!u) {
        ++raised;
        for (std::size_t k = 2; k <= 16; k *= 2) {
          if (search_unfocused(s2, s, {40 * k, 6 * k})) {
            ++raised_ok;
            break;
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << "500 sequents; unfocused proved " << u_proved << ", focused also proved " << forward_ok
    << "; focused proved " << f_proved << ", defocused and checked " << defocus_ok << "; " << raised
    << " needed a raised unfocused budget, " << raised_ok << " then proved";
  report(4, forward_ok == u_proved && defocus_ok == f_proved && raised_ok == raised, d.str());
}

void ldecide_failure(const std::vector<Case>& corpus) {
  std::size_t forced = 0, exhausted = 0, goals_with_registers = 0;
  std::string bad;
  for (const Case& c : corpus) {
    const ReductionBundle b = encode_halting(c.machine, c.c0);
    const FocusedSequent goal = unfocused(b.goal);
    bool any = false;
    for (std::size_t i = 0; i < goal.context.size(); ++i) {
      const Formula f = goal.context[i];
      if (!f.is(Connective::Qm) || (f.label() != "a" && f.label() != "b")) continue;
      any = true;
      FocusedProof node;
      node.rule = FocusedRule::LDecide;
      node.principal = i;
      node.premises.resize(1);
      const FocusedSequent premise = focused_premises(b.sigma2, goal, node).at(0);
      const SearchOutcome out = prove_focused(b.sigma2, premise, {6});
      ++forced;
      const bool ok = !out.proved() && !out.stats.node_limit_hit;
      exhausted += ok;
      if (!ok && bad.empty()) bad = "; first failure " + c.name + " at " + std::to_string(i);
    }
    goals_with_registers += any;
  }
  std::ostringstream d;
  d << exhausted << "/" << forced << " forced ldecide premises exhausted over " << goals_with_registers
    << " goals with register formulas" << bad;
  report(5, forced > 0 && exhausted == forced, d.str());
}

void promotion_examples() {
  const Signature s2 = Signature::sigma2();
  int ok = 0;

  const CheckResult blocked =
      check_unfocused(s2, parse_sequent("|- ?a ~ra, !b ~r"), parse_unfocused_proof("(bang 1 (init 1 0))"));
  ok += !blocked.ok() && blocked.error->reason == CheckReason::PromotionBlocked && blocked.error->path.empty();

  FocusedSequent g{parse_sequent("|- ?inf p, ?b ~rb").context, parse_formula("!b ~r")};
  const FocusedProof bang = parse_focused_proof("(fbang (kept 0 1) (top 0))");
  const auto premises = focused_premises(s2, g, bang);
  ok += premises.size() == 1 && premises[0].context == parse_sequent("|- ?inf p, ?b ~rb, ~r").context &&
        !premises[0].focus;

  FocusedSequent i{parse_sequent("|- ?a ~ra").context, Formula::atom("q")};
  const CheckResult lingering = check_focused(s2, i, parse_focused_proof("(finit (kept))"));
  ok += !lingering.ok() && lingering.error->reason == CheckReason::LingeringLinear;

  report(6, ok == 3, std::to_string(ok) + "/3 promotion examples behave as labeled");
}

void round_trips() {
  Rng rng(7);
  int formulas = 0, machines = 0, signatures = 0;
  FormulaShape shape;
  for (int i = 0; i < 1000; ++i) {
    shape.max_connectives = 1 + i % 12;
    const Formula f = random_formula(rng, shape);
    formulas += parse_formula(to_string(f)) == f;
  }
  for (int i = 0; i < 100; ++i) {
    const Machine m = random_machine(rng);
    machines += parse_machine(to_string(m)) == m;
  }
  for (int i = 0; i < 100; ++i) {
    const Signature s = random_signature(rng);
    signatures += parse_signature(to_string(s)) == s;
  }
  std::ostringstream d;
  d << formulas << "/1000 formulas, " << machines << "/100 machines, " << signatures << "/100 signatures";
  report(7, formulas == 1000 && machines == 100 && signatures == 100, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance CORPUS_DIR\n";
    return 2;
  }
  try {
    const std::vector<Case> corpus = load_corpus(argv[1]);
    adequacy(corpus);
    soundness(corpus);
    focusing_agreement();
    ldecide_failure(corpus);
    promotion_examples();
    round_trips();
  } catch (const std::exception& e) {
    std::cout << "acceptance: aborted: " << e.what() << "\n";
    return 1;
  }
  return any_failed ? 1 : 0;
}

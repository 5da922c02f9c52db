// sel: command-line front end.
//
// Reports are `key: value` lines on stdout. Exit status: 0 success,
// 1 logical negative (exhausted, rejected, did not halt, mismatch),
// 2 usage or parse error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sel/adequacy.hpp"
#include "sel/focused.hpp"
#include "sel/generate.hpp"
#include "sel/minsky.hpp"
#include "sel/prover.hpp"
#include "sel/reduction.hpp"
#include "sel/syntax.hpp"
#include "sel/unfocused.hpp"

namespace fs = std::filesystem;
using namespace sel;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write");
  out << text;
}

// Runs a parser, prefixing syntax errors with the file name.
template <typename F>
auto parse_file(const std::string& path, F parse) {
  const std::string text = slurp(path);
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    throw InputError(path + ":" + e.what());
  }
}

Machine load_machine(const std::string& path) {
  Machine m = parse_file(path, [](std::string_view t) { return parse_machine(t); });
  if (auto err = validate_machine(m)) throw InputError(path + ": " + describe(*err));
  return m;
}

Configuration initial(const Machine& m, const std::string& init_text) {
  if (!init_text.empty()) {
    try {
      return parse_configuration(init_text);
    } catch (const SyntaxError& e) {
      throw InputError(std::string("--init:") + e.what());
    }
  }
  if (m.inits.empty()) throw InputError("machine has no init: line and no --init was given");
  return m.inits.front();
}

void kv(const std::string& key, const std::string& value) { std::cout << key << ": " << value << "\n"; }
void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }

std::string outcome_name(const RunResult& r) {
  if (std::holds_alternative<Halted>(r)) return "halted";
  if (std::holds_alternative<Stuck>(r)) return "stuck";
  return "out-of-fuel";
}

void print_stats(const SearchStats& s) {
  kv("nodes-expanded", s.nodes_expanded);
  kv("max-depth", s.max_depth);
  kv("rounds", s.rounds);
  kv("node-limit-hit", s.node_limit_hit ? "yes" : "no");
}

struct Options {
  std::string machine, signature, sequent, proof, trace, out, init, emit, corpus;
  std::size_t max_steps = 200;
  std::size_t max_decides = 0;  // 0: command-specific default
  std::size_t max_nodes = 2'000'000;
  std::size_t samples = 100;
  bool stats = false;
  bool focused = false;
  bool no_memo = false;
};

int cmd_simulate(const Options& o) {
  const Machine m = load_machine(o.machine);
  const Configuration c0 = initial(m, o.init);
  const RunResult r = run(m, c0, o.max_steps);
  kv("outcome", outcome_name(r));
  kv("steps", trace_of(r).size());
  kv("trace", to_inline_string(trace_of(r)));
  if (const auto* s = std::get_if<Stuck>(&r)) kv("at", to_string(s->at));
  if (const auto* s = std::get_if<OutOfFuel>(&r)) kv("at", to_string(s->at));
  return std::holds_alternative<Halted>(r) ? 0 : 1;
}

int cmd_encode(const Options& o) {
  const Machine m = load_machine(o.machine);
  const ReductionBundle b = encode_halting(m, initial(m, o.init));
  const std::string sig_path = o.out + ".sig", seq_path = o.out + ".seq";
  spit(sig_path, to_string(b.sigma2));
  spit(seq_path, to_string(b.goal));
  kv("signature", sig_path);
  kv("sequent", seq_path);
  kv("pi-size", b.pi.size());
  kv("goal-size", b.goal.context.size());
  return 0;
}

int cmd_prove(const Options& o) {
  const Signature sig = parse_file(o.signature, [](std::string_view t) { return parse_signature(t); });
  const Sequent goal = parse_file(o.sequent, [](std::string_view t) { return parse_sequent(t); });
  const SearchBudget budget{o.max_decides ? o.max_decides : 8, o.max_nodes, !o.no_memo};
  const SearchOutcome out = prove_focused(sig, goal, budget);
  kv("outcome", out.proved() ? "proved" : "exhausted");
  if (out.proof) {
    kv("proof-decides", decide_count(*out.proof));
    kv("proof-nodes", node_count(*out.proof));
    if (!o.emit.empty()) spit(o.emit, to_sexpr(*out.proof));
  }
  if (o.stats) print_stats(out.stats);
  return out.proved() ? 0 : 1;
}

int cmd_check(const Options& o) {
  const Signature sig = parse_file(o.signature, [](std::string_view t) { return parse_signature(t); });
  const Sequent goal = parse_file(o.sequent, [](std::string_view t) { return parse_sequent(t); });
  CheckResult res;
  if (o.focused) {
    const FocusedProof p = parse_file(o.proof, [](std::string_view t) { return parse_focused_proof(t); });
    res = check_focused(sig, unfocused(goal), p);
  } else {
    const UnfocusedProof p = parse_file(o.proof, [](std::string_view t) { return parse_unfocused_proof(t); });
    res = check_unfocused(sig, goal, p);
  }
  kv("result", res ? "ok" : describe(*res.error));
  return res ? 0 : 1;
}

int cmd_extract(const Options& o) {
  const Machine m = load_machine(o.machine);
  const ReductionBundle b = encode_halting(m, initial(m, o.init));
  const FocusedProof p = parse_file(o.proof, [](std::string_view t) { return parse_focused_proof(t); });
  if (auto res = check_focused(b.sigma2, unfocused(b.goal), p); !res) {
    kv("result", describe(*res.error));
    return 1;
  }
  try {
    kv("trace", to_inline_string(trace_from_proof(b, m, p)));
  } catch (const ReductionError& e) {
    kv("result", std::string("MalformedCertificate: ") + e.what());
    return 1;
  }
  return 0;
}

int cmd_synthesize(const Options& o) {
  const Machine m = load_machine(o.machine);
  const Configuration c0 = initial(m, o.init);
  const ReductionBundle b = encode_halting(m, c0);
  const Trace t = parse_file(o.trace, [](std::string_view s) { return parse_trace(s); });
  UnfocusedProof p;
  try {
    p = proof_from_trace(b, m, c0, t);
  } catch (const ReductionError& e) {
    kv("result", std::string("TraceMismatch: ") + e.what());
    return 1;
  }
  const CheckResult res = check_unfocused(b.sigma2, b.goal, p);
  kv("result", res ? "ok" : describe(*res.error));
  kv("proof-nodes", node_count(p));
  kv("contractions", count_rule(p, UnfocusedRule::Contr));
  if (!o.emit.empty()) spit(o.emit, to_sexpr(p));
  return res ? 0 : 1;
}

int cmd_roundtrip(const Options& o) {
  const Machine m = load_machine(o.machine);
  const Configuration c0 = initial(m, o.init);
  const RunResult r = run(m, c0, o.max_steps);
  const bool halted = std::holds_alternative<Halted>(r);
  kv("simulate", outcome_name(r));
  kv("trace", to_inline_string(trace_of(r)));

  // Encode through the text formats so the emitted artifacts are what gets proved.
  const ReductionBundle b = encode_halting(m, c0);
  const Signature sig = parse_signature(to_string(b.sigma2));
  const Sequent goal = parse_sequent(to_string(b.goal));
  bool ok = sig == b.sigma2 && goal == b.goal;
  kv("reparse", ok ? "ok" : "mismatch");

  const std::size_t decides = o.max_decides ? o.max_decides : adequacy_budget(m, c0, r);
  const SearchOutcome out = prove_focused(sig, goal, {decides, o.max_nodes, !o.no_memo});
  kv("prove", out.proved() ? "proved" : "exhausted");
  if (o.stats) print_stats(out.stats);
  ok = ok && out.proved() == halted;

  if (out.proof) {
    const FocusedProof p = parse_focused_proof(to_sexpr(*out.proof));
    kv("proof-decides", decide_count(p));
    const bool checks = check_focused(sig, unfocused(goal), p).ok();
    kv("check", checks ? "ok" : "rejected");
    const Trace back = trace_from_proof(b, m, p);
    kv("extracted", to_inline_string(back));
    ok = ok && checks && back == trace_of(r);
    if (!o.emit.empty()) spit(o.emit, to_sexpr(p));
  }
  kv("match", ok ? "yes" : "no");
  return ok ? 0 : 1;
}

int cmd_selftest(const Options& o) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.corpus))
    if (entry.path().extension() == ".2rm") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError(o.corpus + ": no .2rm files");

  std::size_t cases = 0, passed = 0;
  for (const auto& f : files) {
    const Machine m = load_machine(f.string());
    for (const Configuration& c0 : m.inits) {
      const auto start = std::chrono::steady_clock::now();
      const CaseReport rep = run_case(m, c0, {o.max_steps, std::nullopt, o.max_nodes, !o.no_memo});
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      ++cases;
      passed += rep.ok();
      std::cout << "case: " << f.stem().string() << " [" << to_string(c0) << "] "
                << (rep.halted ? "halts" : "runs") << " " << (rep.search.proved() ? "proved" : "exhausted") << " "
                << (rep.ok() ? "ok" : "FAIL") << " " << static_cast<long>(ms) << "ms";
      if (!rep.error.empty()) std::cout << " error=" << rep.error;
      std::cout << "\n";
    }
  }

  // Prover vs. unfocused oracle on random Σ₂ sequents.
  Rng rng(7);
  const Signature s2 = Signature::sigma2();
  std::size_t agree = 0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Sequent s = random_sequent(rng, {});
    const bool u = search_unfocused(s2, s, {}).has_value();
    const bool f = prove_focused(s2, s, {8, o.max_nodes, !o.no_memo}).proved();
    agree += !u || f;
  }
  kv("corpus", std::to_string(passed) + "/" + std::to_string(cases));
  kv("agreement", std::to_string(agree) + "/" + std::to_string(o.samples));
  return passed == cases && agree == o.samples ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subexponential logic prover and two-register machine reduction"};
  app.require_subcommand(1);
  Options o;

  auto machine_arg = [&](CLI::App* c) {
    c->add_option("machine", o.machine, "machine file")->required();
    c->add_option("--init", o.init, "initial configuration, e.g. \"q0 a=2 b=0\"");
  };
  auto budget_args = [&](CLI::App* c) {
    c->add_option("--max-decides", o.max_decides, "decide nodes per branch");
    c->add_option("--max-nodes", o.max_nodes, "global expansion cap");
    c->add_flag("--no-memo", o.no_memo, "do not remember failed neutral sequents");
    c->add_flag("--stats", o.stats, "print search statistics");
  };

  auto* simulate = app.add_subcommand("simulate", "run a machine");
  machine_arg(simulate);
  simulate->add_option("--max-steps", o.max_steps, "step limit");

  auto* encode = app.add_subcommand("encode", "write the encoded signature and sequent");
  machine_arg(encode);
  encode->add_option("--out", o.out, "output prefix (writes PREFIX.sig, PREFIX.seq)")->required();

  auto* prove = app.add_subcommand("prove", "focused proof search");
  prove->add_option("signature", o.signature)->required();
  prove->add_option("sequent", o.sequent)->required();
  prove->add_option("--emit-proof", o.emit, "write the certificate here");
  budget_args(prove);

  auto* check = app.add_subcommand("check", "check a certificate");
  check->add_option("signature", o.signature)->required();
  check->add_option("sequent", o.sequent)->required();
  check->add_option("proof", o.proof)->required();
  check->add_flag("--focused", o.focused, "certificate is a focused proof");

  auto* extract = app.add_subcommand("extract", "read the machine trace off a focused proof");
  machine_arg(extract);
  extract->add_option("proof", o.proof)->required();

  auto* synthesize = app.add_subcommand("synthesize", "build an unfocused proof from a trace");
  machine_arg(synthesize);
  synthesize->add_option("trace", o.trace)->required();
  synthesize->add_option("--emit-proof", o.emit, "write the certificate here");

  auto* roundtrip = app.add_subcommand("roundtrip", "simulate, encode, prove, check and extract");
  machine_arg(roundtrip);
  roundtrip->add_option("--max-steps", o.max_steps, "step limit");
  roundtrip->add_option("--emit-proof", o.emit, "write the certificate here");
  budget_args(roundtrip);

  auto* selftest = app.add_subcommand("selftest", "adequacy corpus and oracle agreement");
  selftest->add_option("corpus", o.corpus, "directory of .2rm files")->required();
  selftest->add_option("--samples", o.samples, "random sequents for the agreement sweep");
  selftest->add_option("--max-steps", o.max_steps, "step limit");
  selftest->add_option("--max-nodes", o.max_nodes, "global expansion cap");
  selftest->add_flag("--no-memo", o.no_memo, "do not remember failed neutral sequents");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*simulate) return cmd_simulate(o);
    if (*encode) return cmd_encode(o);
    if (*prove) return cmd_prove(o);
    if (*check) return cmd_check(o);
    if (*extract) return cmd_extract(o);
    if (*synthesize) return cmd_synthesize(o);
    if (*roundtrip) return cmd_roundtrip(o);
    if (*selftest) return cmd_selftest(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SignatureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ReductionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

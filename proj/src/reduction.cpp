#include "sel/reduction.hpp"

#include <algorithm>
#include <functional>

#include "sel/syntax.hpp"

namespace sel {

ReductionError::ReductionError(Kind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

namespace {

Formula reg_formula(const char* label, const char* atom) {
  return Formula::qm(label, Formula::neg_atom(atom));
}

Formula q(const std::string& state) { return Formula::atom(state); }
Formula nq(const std::string& state) { return Formula::neg_atom(state); }

Formula cleanup(const char* label, const char* atom) {
  const Formula h = Formula::atom(kHaltAtom);
  return Formula::tensor(Formula::tensor(h, Formula::bang(label, Formula::atom(atom))),
                         Formula::neg_atom(kHaltAtom));
}

Formula final_element(const std::string& state) {
  return Formula::tensor(Formula::atom(state), Formula::bang("inf", Formula::one()));
}

Formula entry_element(const Machine& m, const Entry& e) {
  const std::string r = m.target_of(e);
  switch (e.instruction) {
    case Instruction::Halt:
      return Formula::tensor(q(e.source), Formula::neg_atom(kHaltAtom));
    case Instruction::IncrA:
      return Formula::tensor(q(e.source), Formula::par(nq(r), reg_formula("a", kRegisterA)));
    case Instruction::IncrB:
      return Formula::tensor(q(e.source), Formula::par(nq(r), reg_formula("b", kRegisterB)));
    case Instruction::DecrA:
      return Formula::tensor(Formula::tensor(q(e.source), Formula::bang("a", Formula::atom(kRegisterA))), nq(r));
    case Instruction::DecrB:
      return Formula::tensor(Formula::tensor(q(e.source), Formula::bang("b", Formula::atom(kRegisterB))), nq(r));
    case Instruction::IszA:
      return Formula::tensor(q(e.source), Formula::bang("b", nq(r)));
    case Instruction::IszB:
      return Formula::tensor(q(e.source), Formula::bang("a", nq(r)));
  }
  return Formula::one();
}

struct Table {
  Context pi;
  std::vector<PiRole> roles;
};

Table table(const Machine& m) {
  Table t;
  bool any_halt = false;
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    t.pi.push_back(entry_element(m, m.entries[i]));
    t.roles.push_back({PiRole::Kind::Entry, i});
    any_halt |= m.entries[i].instruction == Instruction::Halt;
  }
  if (any_halt) {
    t.pi.push_back(cleanup("a", kRegisterA));
    t.roles.push_back({PiRole::Kind::CleanupA, 0});
    t.pi.push_back(cleanup("b", kRegisterB));
    t.roles.push_back({PiRole::Kind::CleanupB, 0});
    t.pi.push_back(final_element(kHaltAtom));
    t.roles.push_back({PiRole::Kind::Final, 0});
  }
  return t;
}

[[noreturn]] void fail(ReductionError::Kind kind, const std::string& message) {
  throw ReductionError(kind, message);
}

}  // namespace

Context encode_config(const Configuration& c) {
  Context out;
  out.reserve(c.a + c.b + 1);
  for (std::uint64_t i = 0; i < c.a; ++i) out.push_back(reg_formula("a", kRegisterA));
  for (std::uint64_t i = 0; i < c.b; ++i) out.push_back(reg_formula("b", kRegisterB));
  out.push_back(nq(c.state));
  return out;
}

Context encode_machine(const Machine& m) { return table(m).pi; }

ReductionBundle encode_halting(const Machine& m, const Configuration& c0) {
  for (const auto& s : m.states) {
    if (s == kHaltAtom || s == kRegisterA || s == kRegisterB)
      fail(ReductionError::Kind::AtomClash, "state '" + s + "' clashes with a reserved atom");
    if (!is_atom_name(s)) fail(ReductionError::Kind::AtomClash, "state '" + s + "' is not an atom name");
  }
  if (auto err = validate_machine(m)) fail(ReductionError::Kind::InvalidMachine, describe(*err));
  if (!m.has_state(c0.state)) fail(ReductionError::Kind::InvalidMachine, "unknown initial state " + c0.state);

  ReductionBundle b;
  Table t = table(m);
  const bool enters_halting = std::any_of(m.entries.begin(), m.entries.end(), [&](const Entry& e) {
    return e.instruction != Instruction::Halt && e.target == m.halting;
  });
  if (enters_halting || c0 == halting_configuration(m)) {
    t.pi.push_back(final_element(m.halting));
    t.roles.push_back({PiRole::Kind::Accept, 0});
  }
  b.pi = std::move(t.pi);
  b.roles = std::move(t.roles);
  for (Formula f : b.pi) b.goal.context.push_back(Formula::qm("inf", f));
  for (Formula f : encode_config(c0)) b.goal.context.push_back(f);

  for (const auto& s : m.states) b.atom_map[s] = s;
  b.atom_map["register a"] = kRegisterA;
  b.atom_map["register b"] = kRegisterB;
  b.atom_map["halt"] = kHaltAtom;
  return b;
}

std::optional<PiRole> role_of(const ReductionBundle& bundle, Formula element) {
  auto it = std::find(bundle.pi.begin(), bundle.pi.end(), element);
  if (it == bundle.pi.end()) return std::nullopt;
  return bundle.roles[static_cast<std::size_t>(it - bundle.pi.begin())];
}

namespace {

// Builds unfocused proofs forward from a goal, reading premise contexts off
// the checker so positions never have to be computed by hand.
class Builder {
 public:
  explicit Builder(const Signature& sig) : sig_(sig) {}

  using Cont = std::function<UnfocusedProof(const Context&)>;

  UnfocusedProof rule(const Context& ctx, UnfocusedRule r, std::size_t principal, std::vector<Cont> next,
                      std::vector<std::size_t> left = {}, std::size_t partner = 0) const {
    UnfocusedProof p;
    p.rule = r;
    p.principal = principal;
    p.partner = partner;
    p.left = std::move(left);
    p.premises.resize(arity(r));
    const auto premises = unfocused_premises(sig_, ctx, p);
    for (std::size_t i = 0; i < premises.size(); ++i) p.premises[i] = next.at(i)(premises[i]);
    return p;
  }

  static std::size_t find(const Context& ctx, Formula f) {
    auto it = std::find(ctx.begin(), ctx.end(), f);
    if (it == ctx.end()) throw std::logic_error("formula " + to_string(f) + " missing from context");
    return static_cast<std::size_t>(it - ctx.begin());
  }

  // ⊢ ~x, x closed by init; ctx must be exactly those two.
  UnfocusedProof init(const Context& ctx) const {
    const std::size_t atom = ctx[0].is(Connective::Atom) ? 0 : 1;
    return rule(ctx, UnfocusedRule::Init, atom, {}, {}, 1 - atom);
  }

  // contr + dereliction on the table element `e`, leaving e last.
  UnfocusedProof use(const Context& ctx, Formula e, Cont k) const {
    const std::size_t at = find(ctx, Formula::qm("inf", e));
    return rule(ctx, UnfocusedRule::Contr, at, {[&](const Context& c1) {
                  return rule(c1, UnfocusedRule::Qm, c1.size() - 1, {k});
                }});
  }

  // Tensor on the last formula sending `left` (formulas, looked up in order) left.
  UnfocusedProof split(const Context& ctx, const std::vector<Formula>& left, Cont l, Cont r) const {
    std::vector<std::size_t> pos;
    std::vector<bool> taken(ctx.size(), false);
    for (Formula f : left) {
      std::size_t i = 0;
      while (i + 1 < ctx.size() && (taken[i] || ctx[i] != f)) ++i;
      if (i + 1 >= ctx.size()) throw std::logic_error("split formula missing");
      taken[i] = true;
      pos.push_back(i);
    }
    std::sort(pos.begin(), pos.end());
    return rule(ctx, UnfocusedRule::Tensor, ctx.size() - 1, {std::move(l), std::move(r)}, std::move(pos));
  }

  // ⊢ ?a ~ra, !a ra: promotion, dereliction, init.
  UnfocusedProof register_consume(const Context& ctx) const {
    return rule(ctx, UnfocusedRule::Bang, ctx.size() - 1, {[&](const Context& c1) {
                  return rule(c1, UnfocusedRule::Qm, 0, {[&](const Context& c2) { return init(c2); }});
                }});
  }

  // ⊢ ?inf ..., !inf 1: promotion, weaken everything, 1.
  UnfocusedProof close_with_one(const Context& ctx) const {
    return rule(ctx, UnfocusedRule::Bang, ctx.size() - 1, {[&](const Context& c1) { return weaken_all(c1); }});
  }

  UnfocusedProof weaken_all(const Context& ctx) const {
    if (ctx.size() == 1) return rule(ctx, UnfocusedRule::One, 0, {});
    return rule(ctx, UnfocusedRule::Weak, ctx.size() - 2,
                {[&](const Context& c1) { return weaken_all(c1); }});
  }

  const Signature& sig() const { return sig_; }

 private:
  const Signature& sig_;
};

}  // namespace

UnfocusedProof proof_from_trace(const ReductionBundle& bundle, const Machine& m, const Configuration& c0,
                                const Trace& t) {
  const RunResult result = run(m, c0, t.size());
  if (!std::holds_alternative<Halted>(result) || trace_of(result) != t)
    fail(ReductionError::Kind::TraceMismatch, "trace does not replay to the halting configuration");

  // Entry element taken at each step, and configurations along the run.
  std::vector<Formula> used;
  std::vector<Configuration> confs{c0};
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Configuration& c = confs.back();
    const Entry* chosen = nullptr;
    for (const Entry& e : m.entries)
      if (e.source == c.state && enabled(e.instruction, c)) chosen = &e;
    used.push_back(entry_element(m, *chosen));
    confs.push_back(step(m, c)->next);
  }

  const Builder B(bundle.sigma2);
  const Formula ra_form = reg_formula("a", kRegisterA);
  const Formula rb_form = reg_formula("b", kRegisterB);

  std::function<UnfocusedProof(const Context&)> cleanup_or_final;
  std::uint64_t left_a = 0, left_b = 0;

  // Decrement one register against ((h * !x rx) * ~h), or finish with (h * !inf 1).
  cleanup_or_final = [&](const Context& ctx) -> UnfocusedProof {
    const Formula nh = Formula::neg_atom(kHaltAtom);
    if (left_a > 0 || left_b > 0) {
      const bool on_a = left_a > 0;
      (on_a ? left_a : left_b)--;
      const Formula e = on_a ? cleanup("a", kRegisterA) : cleanup("b", kRegisterB);
      const Formula reg = on_a ? ra_form : rb_form;
      return B.use(ctx, e, [&](const Context& c1) {
        return B.split(
            c1, {nh, reg},
            [&](const Context& l) {
              return B.split(l, {nh}, [&](const Context& ll) { return B.init(ll); },
                             [&](const Context& lr) { return B.register_consume(lr); });
            },
            [&](const Context& r) { return cleanup_or_final(r); });
      });
    }
    return B.use(ctx, final_element(kHaltAtom), [&](const Context& c1) {
      return B.split(c1, {nh}, [&](const Context& l) { return B.init(l); },
                     [&](const Context& r) { return B.close_with_one(r); });
    });
  };

  std::function<UnfocusedProof(const Context&, std::size_t)> block = [&](const Context& ctx,
                                                                         std::size_t k) -> UnfocusedProof {
    if (k == t.size()) {
      // Reached ⟨*, 0, 0⟩ without a halt instruction: accept element.
      const Formula nstar = nq(m.halting);
      return B.use(ctx, final_element(m.halting), [&](const Context& c1) {
        return B.split(c1, {nstar}, [&](const Context& l) { return B.init(l); },
                       [&](const Context& r) { return B.close_with_one(r); });
      });
    }
    const Configuration& c = confs[k];
    const Formula e = used[k];
    const Formula nsrc = nq(c.state);
    auto closes_state = [&](const Context& l) { return B.init(l); };
    auto next = [&](const Context& r) { return block(r, k + 1); };

    switch (t[k]) {
      case Instruction::Halt:
        left_a = c.a;
        left_b = c.b;
        return B.use(ctx, e, [&](const Context& c1) {
          return B.split(c1, {nsrc}, closes_state, [&](const Context& r) { return cleanup_or_final(r); });
        });
      case Instruction::IncrA:
      case Instruction::IncrB:
        return B.use(ctx, e, [&](const Context& c1) {
          return B.split(c1, {nsrc}, closes_state, [&](const Context& r) {
            return B.rule(r, UnfocusedRule::Par, r.size() - 1, {next});
          });
        });
      case Instruction::DecrA:
      case Instruction::DecrB: {
        const Formula reg = t[k] == Instruction::DecrA ? ra_form : rb_form;
        return B.use(ctx, e, [&](const Context& c1) {
          return B.split(
              c1, {nsrc, reg},
              [&](const Context& l) {
                return B.split(l, {nsrc}, closes_state, [&](const Context& lr) { return B.register_consume(lr); });
              },
              next);
        });
      }
      case Instruction::IszA:
      case Instruction::IszB:
        return B.use(ctx, e, [&](const Context& c1) {
          return B.split(c1, {nsrc}, closes_state, [&](const Context& r) {
            return B.rule(r, UnfocusedRule::Bang, r.size() - 1, {next});
          });
        });
    }
    throw std::logic_error("unreachable");
  };

  UnfocusedProof proof = block(bundle.goal.context, 0);
  if (auto res = check_unfocused(bundle.sigma2, bundle.goal, proof); !res)
    throw std::logic_error("synthesized proof does not check: " + describe(*res.error));
  return proof;
}

Trace trace_from_proof(const ReductionBundle& bundle, const Machine& m, const FocusedProof& p) {
  auto malformed = [](const std::string& why) { fail(ReductionError::Kind::MalformedCertificate, why); };
  Trace trace;
  FocusedSequent cur = unfocused(bundle.goal);
  const FocusedProof* node = &p;
  while (true) {
    if (is_decide(node->rule)) {
      if (node->rule != FocusedRule::UDecide) malformed("main branch decides on a non-table formula");
      if (node->principal >= cur.context.size()) malformed("decide position out of range");
      const Formula f = cur.context[node->principal];
      if (!f.is(Connective::Qm)) malformed("udecide on a non-? formula");
      auto role = role_of(bundle, f.body());
      if (!role) malformed("udecide on a formula outside the table");
      switch (role->kind) {
        case PiRole::Kind::Entry: {
          const Instruction i = m.entries.at(role->entry).instruction;
          trace.push_back(i);
          if (i == Instruction::Halt) return trace;
          break;
        }
        case PiRole::Kind::Accept:
          return trace;
        default:
          malformed("cleanup element before halt");
      }
    }
    std::vector<FocusedSequent> premises;
    try {
      premises = focused_premises(bundle.sigma2, cur, *node);
    } catch (const CheckFailure& e) {
      malformed(e.what());
    }
    if (premises.empty()) malformed("main branch closes before halting");
    cur = premises.back();
    node = &node->premises.back();
  }
}

}  // namespace sel

#include "sel/focused.hpp"

#include <algorithm>

#include "sexpr.hpp"

namespace sel {

std::string_view rule_name(FocusedRule rule) noexcept {
  switch (rule) {
    case FocusedRule::FInit: return "finit";
    case FocusedRule::FTensor: return "ftensor";
    case FocusedRule::FOne: return "f1";
    case FocusedRule::FPlus1: return "fplus1";
    case FocusedRule::FPlus2: return "fplus2";
    case FocusedRule::FBang: return "fbang";
    case FocusedRule::Blur: return "blur";
    case FocusedRule::Par: return "par";
    case FocusedRule::Bot: return "bot";
    case FocusedRule::With: return "with";
    case FocusedRule::Top: return "top";
    case FocusedRule::Decide: return "decide";
    case FocusedRule::LDecide: return "ldecide";
    case FocusedRule::UDecide: return "udecide";
  }
  return "?";
}

std::size_t arity(FocusedRule rule) noexcept {
  switch (rule) {
    case FocusedRule::FInit:
    case FocusedRule::FOne:
    case FocusedRule::Top:
      return 0;
    case FocusedRule::FTensor:
    case FocusedRule::With:
      return 2;
    default:
      return 1;
  }
}

bool is_decide(FocusedRule rule) noexcept {
  return rule == FocusedRule::Decide || rule == FocusedRule::LDecide || rule == FocusedRule::UDecide;
}

bool acts_on_focus(FocusedRule rule) noexcept {
  switch (rule) {
    case FocusedRule::FInit:
    case FocusedRule::FTensor:
    case FocusedRule::FOne:
    case FocusedRule::FPlus1:
    case FocusedRule::FPlus2:
    case FocusedRule::FBang:
    case FocusedRule::Blur:
      return true;
    default:
      return false;
  }
}

bool has_positions(FocusedRule rule) noexcept {
  return rule == FocusedRule::FInit || rule == FocusedRule::FOne || rule == FocusedRule::FBang ||
         rule == FocusedRule::FTensor;
}

std::size_t node_count(const FocusedProof& proof) {
  std::size_t n = 1;
  for (const auto& p : proof.premises) n += node_count(p);
  return n;
}

std::size_t count_rule(const FocusedProof& proof, FocusedRule rule) {
  std::size_t n = proof.rule == rule ? 1 : 0;
  for (const auto& p : proof.premises) n += count_rule(p, rule);
  return n;
}

std::size_t decide_count(const FocusedProof& proof) {
  std::size_t n = is_decide(proof.rule) ? 1 : 0;
  for (const auto& p : proof.premises) n += decide_count(p);
  return n;
}

std::size_t decide_depth(const FocusedProof& proof) {
  std::size_t best = 0;
  for (const auto& p : proof.premises) best = std::max(best, decide_depth(p));
  return best + (is_decide(proof.rule) ? 1 : 0);
}

bool is_neutral(const Context& ctx) noexcept {
  return std::all_of(ctx.begin(), ctx.end(), [](Formula f) {
    return is_positive(f) || f.is(Connective::NegAtom) || f.is(Connective::Qm);
  });
}

namespace {

[[noreturn]] void reject(CheckReason reason, std::string detail = {}) {
  throw CheckFailure(CheckError{{}, reason, std::move(detail)});
}

bool unbounded_qm(const Signature& sig, Formula f) {
  if (!f.is(Connective::Qm)) return false;
  if (!sig.contains(f.label())) reject(CheckReason::UnknownLabel, f.label());
  return sig.is_unbounded(f.label());
}

void require_label(const Signature& sig, Formula f) {
  if (!sig.contains(f.label())) reject(CheckReason::UnknownLabel, f.label());
}

// Validates a position list and returns its membership mask.
std::vector<bool> mask_of(const std::vector<std::size_t>& xs, std::size_t n) {
  std::vector<bool> mask(n, false);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >= n) reject(CheckReason::PositionOutOfRange, "position list");
    if (i > 0 && xs[i] <= xs[i - 1]) reject(CheckReason::ContextMismatch, "position list not sorted");
    mask[xs[i]] = true;
  }
  return mask;
}

// Formulas outside `kept` must be unbounded ?-formulas (implicit weakening).
void require_weakenable(const Signature& sig, const Context& ctx, const std::vector<bool>& kept) {
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (!kept[i] && !unbounded_qm(sig, ctx[i]))
      reject(CheckReason::LingeringLinear, "position " + std::to_string(i) + " cannot be weakened");
}

UnfocusedRule shared_rule(FocusedRule rule) {
  switch (rule) {
    case FocusedRule::Par: return UnfocusedRule::Par;
    case FocusedRule::Bot: return UnfocusedRule::Bot;
    case FocusedRule::With: return UnfocusedRule::With;
    default: return UnfocusedRule::Top;
  }
}

}  // namespace

std::vector<FocusedSequent> focused_premises(const Signature& sig, const FocusedSequent& goal,
                                             const FocusedProof& node) {
  if (node.premises.size() != arity(node.rule)) reject(CheckReason::ArityMismatch);
  const Context& ctx = goal.context;
  const std::size_t n = ctx.size();

  if (acts_on_focus(node.rule)) {
    if (!goal.focus) reject(CheckReason::FocusExpected);
  } else if (goal.focus) {
    reject(CheckReason::FocusUnexpected);
  }

  switch (node.rule) {
    case FocusedRule::Decide:
    case FocusedRule::LDecide:
    case FocusedRule::UDecide: {
      if (node.principal >= n) reject(CheckReason::PositionOutOfRange, "principal");
      if (!is_neutral(ctx)) reject(CheckReason::NotNeutral);
      const Formula f = ctx[node.principal];
      Context rest = ctx;
      if (node.rule == FocusedRule::Decide) {
        if (!is_positive(f)) reject(CheckReason::FocusOnNegative);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(node.principal));
        return {{std::move(rest), f}};
      }
      if (!f.is(Connective::Qm)) reject(CheckReason::PrincipalMismatch, "decide on a non-? formula");
      require_label(sig, f);
      const bool unbounded = sig.is_unbounded(f.label());
      if (node.rule == FocusedRule::LDecide) {
        if (unbounded) reject(CheckReason::WrongDecideFlavor, f.label() + " is unbounded");
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(node.principal));
      } else if (!unbounded) {
        reject(CheckReason::WrongDecideFlavor, f.label() + " is bounded");
      }
      return {{std::move(rest), f.body()}};
    }
    case FocusedRule::Blur: {
      if (!is_negative(*goal.focus)) reject(CheckReason::PrincipalMismatch, "blur needs a negative focus");
      Context out = ctx;
      out.push_back(*goal.focus);
      return {{std::move(out), std::nullopt}};
    }
    case FocusedRule::FInit: {
      const Formula f = *goal.focus;
      if (!f.is(Connective::Atom)) reject(CheckReason::PrincipalMismatch, "finit needs an atom");
      const auto kept = mask_of(node.positions, n);
      require_weakenable(sig, ctx, kept);
      if (node.positions.size() != 1 || ctx[node.positions[0]] != Formula::neg_atom(f.name()))
        reject(CheckReason::ContextMismatch, "finit must keep exactly ~" + f.name());
      return {};
    }
    case FocusedRule::FOne: {
      if (!goal.focus->is(Connective::One)) reject(CheckReason::PrincipalMismatch, "f1 needs 1");
      const auto kept = mask_of(node.positions, n);
      require_weakenable(sig, ctx, kept);
      if (!node.positions.empty()) reject(CheckReason::ContextMismatch, "f1 keeps nothing");
      return {};
    }
    case FocusedRule::FBang: {
      const Formula f = *goal.focus;
      if (!f.is(Connective::Bang)) reject(CheckReason::PrincipalMismatch, "fbang needs !u C");
      require_label(sig, f);
      const auto kept = mask_of(node.positions, n);
      for (std::size_t k : node.positions) {
        const Formula g = ctx[k];
        if (!g.is(Connective::Qm))
          reject(CheckReason::PromotionBlocked, "position " + std::to_string(k) + " is not a ?-formula");
        require_label(sig, g);
        if (!sig.leq(f.label(), g.label()))
          reject(CheckReason::PromotionBlocked, f.label() + " is not <= " + g.label());
      }
      require_weakenable(sig, ctx, kept);
      Context out;
      for (std::size_t k : node.positions) out.push_back(ctx[k]);
      out.push_back(f.body());
      return {{std::move(out), std::nullopt}};
    }
    case FocusedRule::FTensor: {
      const Formula f = *goal.focus;
      if (!f.is(Connective::Tensor)) reject(CheckReason::PrincipalMismatch, "ftensor needs B * C");
      const auto left = mask_of(node.positions, n);
      Context lhs, rhs;
      for (std::size_t i = 0; i < n; ++i) {
        if (unbounded_qm(sig, ctx[i])) {
          if (left[i]) reject(CheckReason::ContextMismatch, "copied formula listed in split");
          lhs.push_back(ctx[i]);
          rhs.push_back(ctx[i]);
        } else {
          (left[i] ? lhs : rhs).push_back(ctx[i]);
        }
      }
      return {{std::move(lhs), f.left()}, {std::move(rhs), f.right()}};
    }
    case FocusedRule::FPlus1:
    case FocusedRule::FPlus2: {
      const Formula f = *goal.focus;
      if (!f.is(Connective::Plus)) reject(CheckReason::PrincipalMismatch, "fplus needs B + C");
      return {{ctx, node.rule == FocusedRule::FPlus1 ? f.left() : f.right()}};
    }
    case FocusedRule::Par:
    case FocusedRule::Bot:
    case FocusedRule::With:
    case FocusedRule::Top: {
      UnfocusedProof u;
      u.rule = shared_rule(node.rule);
      u.principal = node.principal;
      u.premises.resize(arity(u.rule));
      std::vector<FocusedSequent> out;
      for (auto& c : unfocused_premises(sig, ctx, u)) out.push_back({std::move(c), std::nullopt});
      return out;
    }
  }
  reject(CheckReason::ArityMismatch, "unknown rule");
}

namespace {

std::optional<CheckError> check_node(const Signature& sig, const FocusedSequent& goal,
                                     const FocusedProof& node, std::vector<std::size_t>& path) {
  std::vector<FocusedSequent> premises;
  try {
    premises = focused_premises(sig, goal, node);
  } catch (const CheckFailure& failure) {
    CheckError err = failure.error();
    err.path = path;
    return err;
  }
  for (std::size_t i = 0; i < premises.size(); ++i) {
    path.push_back(i);
    auto err = check_node(sig, premises[i], node.premises[i], path);
    path.pop_back();
    if (err) return err;
  }
  return std::nullopt;
}

UnfocusedProof make(UnfocusedRule rule, std::size_t principal) {
  UnfocusedProof p;
  p.rule = rule;
  p.principal = principal;
  return p;
}

UnfocusedProof wrap(UnfocusedRule rule, std::size_t principal, UnfocusedProof premise) {
  UnfocusedProof p = make(rule, principal);
  p.premises.push_back(std::move(premise));
  return p;
}

// Weakens every position not marked in `keep`, highest position first.
UnfocusedProof weaken_except(const std::vector<bool>& keep, UnfocusedProof body) {
  // The chain is built inside-out: the outermost weak removes the highest
  // position, so lower positions stay valid further up.
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (!keep[i]) body = wrap(UnfocusedRule::Weak, i, std::move(body));
  return body;
}

UnfocusedProof defocus_node(const Signature& sig, const FocusedSequent& goal, const FocusedProof& node) {
  const auto premises = focused_premises(sig, goal, node);
  const Context& ctx = goal.context;
  const std::size_t n = ctx.size();
  auto sub = [&](std::size_t i) { return defocus_node(sig, premises[i], node.premises[i]); };

  switch (node.rule) {
    case FocusedRule::Decide: {
      std::vector<std::size_t> source(n);
      for (std::size_t k = 0; k < n; ++k)
        source[k] = k < node.principal ? k : (k == node.principal ? n - 1 : k - 1);
      return reindex(sub(0), source);
    }
    case FocusedRule::LDecide:
      return wrap(UnfocusedRule::Qm, node.principal, sub(0));
    case FocusedRule::UDecide:
      return wrap(UnfocusedRule::Contr, node.principal, wrap(UnfocusedRule::Qm, n, sub(0)));
    case FocusedRule::Blur:
      return sub(0);
    case FocusedRule::FPlus1:
      return wrap(UnfocusedRule::Plus1, n, sub(0));
    case FocusedRule::FPlus2:
      return wrap(UnfocusedRule::Plus2, n, sub(0));
    case FocusedRule::FInit: {
      std::vector<bool> keep(n, false);
      keep[node.positions[0]] = true;
      UnfocusedProof init = make(UnfocusedRule::Init, 1);
      init.partner = 0;
      return weaken_except(keep, std::move(init));
    }
    case FocusedRule::FOne:
      return weaken_except(std::vector<bool>(n, false), make(UnfocusedRule::One, 0));
    case FocusedRule::FBang: {
      std::vector<bool> keep(n, false);
      for (std::size_t k : node.positions) keep[k] = true;
      return weaken_except(keep, wrap(UnfocusedRule::Bang, node.positions.size(), sub(0)));
    }
    case FocusedRule::FTensor: {
      std::vector<bool> copied(n, false), left(n, false);
      for (std::size_t i = 0; i < n; ++i) copied[i] = unbounded_qm(sig, ctx[i]);
      for (std::size_t i : node.positions) left[i] = true;

      UnfocusedProof tensor = make(UnfocusedRule::Tensor, n);
      for (std::size_t i = 0; i < n; ++i)
        if (copied[i] || left[i]) tensor.left.push_back(i);

      // Right premise of the unfocused tensor: bounded rest, then the copies,
      // then C. The focused right premise keeps original order instead.
      std::vector<std::size_t> unfocused_order, focused_order;
      for (std::size_t i = 0; i < n; ++i)
        if (!copied[i] && !left[i]) unfocused_order.push_back(i);
      for (std::size_t i = 0; i < n; ++i)
        if (copied[i]) unfocused_order.push_back(i);
      for (std::size_t i = 0; i < n; ++i)
        if (copied[i] || !left[i]) focused_order.push_back(i);
      std::vector<std::size_t> source;
      for (std::size_t i : unfocused_order)
        source.push_back(static_cast<std::size_t>(
            std::find(focused_order.begin(), focused_order.end(), i) - focused_order.begin()));
      source.push_back(focused_order.size());

      tensor.premises.push_back(sub(0));
      tensor.premises.push_back(reindex(sub(1), source));
      UnfocusedProof out = std::move(tensor);
      for (std::size_t i = n; i-- > 0;)
        if (copied[i]) out = wrap(UnfocusedRule::Contr, i, std::move(out));
      return out;
    }
    case FocusedRule::Par:
    case FocusedRule::Bot:
    case FocusedRule::With:
    case FocusedRule::Top: {
      UnfocusedProof u = make(shared_rule(node.rule), node.principal);
      for (std::size_t i = 0; i < premises.size(); ++i) u.premises.push_back(sub(i));
      return u;
    }
  }
  return {};
}

}  // namespace

CheckResult check_focused(const Signature& sig, const FocusedSequent& goal, const FocusedProof& proof) {
  std::vector<std::size_t> path;
  return {check_node(sig, goal, proof, path)};
}

UnfocusedProof defocus(const Signature& sig, const FocusedSequent& goal, const FocusedProof& proof) {
  return defocus_node(sig, goal, proof);
}

namespace {

void write(const FocusedProof& p, std::size_t depth, std::string& out) {
  out += '(';
  out += rule_name(p.rule);
  if (!acts_on_focus(p.rule)) out += ' ' + std::to_string(p.principal);
  if (has_positions(p.rule))
    out += ' ' + detail::index_list(p.rule == FocusedRule::FTensor ? "left" : "kept", p.positions);
  for (const auto& q : p.premises) {
    out += '\n';
    out.append(depth + 1, ' ');
    write(q, depth + 1, out);
  }
  out += ')';
}

FocusedProof read(const detail::SExpr& e) {
  const std::string& name = e.head();
  auto it = std::find_if(std::begin(kAllFocusedRules), std::end(kAllFocusedRules),
                         [&](FocusedRule r) { return rule_name(r) == name; });
  if (it == std::end(kAllFocusedRules)) e.fail("unknown rule '" + name + "'");
  FocusedProof p;
  p.rule = *it;
  std::size_t next = 1;
  auto take = [&]() -> const detail::SExpr& {
    if (next >= e.items.size()) e.fail("missing argument to '" + name + "'");
    return e.items[next++];
  };
  if (!acts_on_focus(p.rule)) p.principal = take().as_index();
  if (has_positions(p.rule))
    p.positions = take().as_index_list(p.rule == FocusedRule::FTensor ? "left" : "kept");
  while (next < e.items.size()) p.premises.push_back(read(e.items[next++]));
  if (p.premises.size() != arity(p.rule))
    e.fail("rule '" + name + "' takes " + std::to_string(arity(p.rule)) + " premises");
  return p;
}

}  // namespace

std::string to_sexpr(const FocusedProof& proof) {
  std::string out;
  write(proof, 0, out);
  out += '\n';
  return out;
}

FocusedProof parse_focused_proof(std::string_view text) { return read(detail::parse_single_sexpr(text)); }

}  // namespace sel

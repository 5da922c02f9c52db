#include "sel/unfocused.hpp"

#include <algorithm>

#include "sexpr.hpp"

namespace sel {

std::string_view rule_name(UnfocusedRule rule) noexcept {
  switch (rule) {
    case UnfocusedRule::Init: return "init";
    case UnfocusedRule::Tensor: return "tensor";
    case UnfocusedRule::One: return "one";
    case UnfocusedRule::Plus1: return "plus1";
    case UnfocusedRule::Plus2: return "plus2";
    case UnfocusedRule::Par: return "par";
    case UnfocusedRule::Bot: return "bot";
    case UnfocusedRule::With: return "with";
    case UnfocusedRule::Top: return "top";
    case UnfocusedRule::Qm: return "qm";
    case UnfocusedRule::Bang: return "bang";
    case UnfocusedRule::Weak: return "weak";
    case UnfocusedRule::Contr: return "contr";
  }
  return "?";
}

std::size_t arity(UnfocusedRule rule) noexcept {
  switch (rule) {
    case UnfocusedRule::Init:
    case UnfocusedRule::One:
    case UnfocusedRule::Top:
      return 0;
    case UnfocusedRule::Tensor:
    case UnfocusedRule::With:
      return 2;
    default:
      return 1;
  }
}

std::size_t node_count(const UnfocusedProof& proof) {
  std::size_t n = 1;
  for (const auto& p : proof.premises) n += node_count(p);
  return n;
}

std::size_t count_rule(const UnfocusedProof& proof, UnfocusedRule rule) {
  std::size_t n = proof.rule == rule ? 1 : 0;
  for (const auto& p : proof.premises) n += count_rule(p, rule);
  return n;
}

namespace {

[[noreturn]] void reject(CheckReason reason, std::string detail = {}) {
  throw CheckFailure(CheckError{{}, reason, std::move(detail)});
}

Context without(const Context& ctx, std::size_t pos) {
  Context out;
  out.reserve(ctx.size() + 1);
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (i != pos) out.push_back(ctx[i]);
  return out;
}

void require_label(const Signature& sig, Formula f) {
  if (!sig.contains(f.label())) reject(CheckReason::UnknownLabel, f.label());
}

void require(Formula f, Connective c) {
  if (!f.is(c)) reject(CheckReason::PrincipalMismatch);
}

bool strictly_increasing(const std::vector<std::size_t>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) == xs.end();
}

}  // namespace

std::vector<Context> unfocused_premises(const Signature& sig, const Context& ctx,
                                        const UnfocusedProof& node) {
  if (node.premises.size() != arity(node.rule)) reject(CheckReason::ArityMismatch);
  const std::size_t p = node.principal;
  if (p >= ctx.size()) reject(CheckReason::PositionOutOfRange, "principal");
  const Formula f = ctx[p];

  switch (node.rule) {
    case UnfocusedRule::Init: {
      if (node.partner >= ctx.size() || node.partner == p)
        reject(CheckReason::PositionOutOfRange, "partner");
      require(f, Connective::Atom);
      if (ctx.size() != 2 || ctx[node.partner] != Formula::neg_atom(f.name()))
        reject(CheckReason::ContextMismatch, "init needs exactly a, ~a");
      return {};
    }
    case UnfocusedRule::One:
      require(f, Connective::One);
      if (ctx.size() != 1) reject(CheckReason::ContextMismatch, "1 needs an empty context");
      return {};
    case UnfocusedRule::Top:
      require(f, Connective::Top);
      return {};
    case UnfocusedRule::Tensor: {
      require(f, Connective::Tensor);
      if (!strictly_increasing(node.left)) reject(CheckReason::ContextMismatch, "split not sorted");
      Context lhs, rhs;
      std::size_t k = 0;
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (k < node.left.size() && node.left[k] == i) {
          if (i == p) reject(CheckReason::ContextMismatch, "split contains principal");
          lhs.push_back(ctx[i]);
          ++k;
        } else if (i != p) {
          rhs.push_back(ctx[i]);
        }
      }
      if (k != node.left.size()) reject(CheckReason::PositionOutOfRange, "split");
      lhs.push_back(f.left());
      rhs.push_back(f.right());
      return {std::move(lhs), std::move(rhs)};
    }
    case UnfocusedRule::Plus1:
    case UnfocusedRule::Plus2: {
      require(f, Connective::Plus);
      Context out = without(ctx, p);
      out.push_back(node.rule == UnfocusedRule::Plus1 ? f.left() : f.right());
      return {std::move(out)};
    }
    case UnfocusedRule::Par: {
      require(f, Connective::Par);
      Context out = without(ctx, p);
      out.push_back(f.left());
      out.push_back(f.right());
      return {std::move(out)};
    }
    case UnfocusedRule::Bot:
      require(f, Connective::Bot);
      return {without(ctx, p)};
    case UnfocusedRule::With: {
      require(f, Connective::With);
      Context lhs = without(ctx, p), rhs = lhs;
      lhs.push_back(f.left());
      rhs.push_back(f.right());
      return {std::move(lhs), std::move(rhs)};
    }
    case UnfocusedRule::Qm: {
      require(f, Connective::Qm);
      require_label(sig, f);
      Context out = without(ctx, p);
      out.push_back(f.body());
      return {std::move(out)};
    }
    case UnfocusedRule::Bang: {
      require(f, Connective::Bang);
      require_label(sig, f);
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (i == p) continue;
        if (!ctx[i].is(Connective::Qm))
          reject(CheckReason::PromotionBlocked, "position " + std::to_string(i) + " is not a ?-formula");
        require_label(sig, ctx[i]);
        if (!sig.leq(f.label(), ctx[i].label()))
          reject(CheckReason::PromotionBlocked, f.label() + " is not <= " + ctx[i].label());
      }
      Context out = without(ctx, p);
      out.push_back(f.body());
      return {std::move(out)};
    }
    case UnfocusedRule::Weak:
    case UnfocusedRule::Contr: {
      require(f, Connective::Qm);
      require_label(sig, f);
      if (!sig.is_unbounded(f.label())) reject(CheckReason::StructuralOnBounded, f.label());
      if (node.rule == UnfocusedRule::Weak) return {without(ctx, p)};
      Context out = ctx;
      out.push_back(f);
      return {std::move(out)};
    }
  }
  reject(CheckReason::ArityMismatch, "unknown rule");
}

namespace {

std::optional<CheckError> check_node(const Signature& sig, const Context& ctx,
                                     const UnfocusedProof& node, std::vector<std::size_t>& path) {
  std::vector<Context> premises;
  try {
    premises = unfocused_premises(sig, ctx, node);
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

}  // namespace

CheckResult check_unfocused(const Signature& sig, const Sequent& goal, const UnfocusedProof& proof) {
  std::vector<std::size_t> path;
  return {check_node(sig, goal.context, proof, path)};
}

namespace {

// source[k] = position in X of the formula at position k of Y.
std::vector<std::size_t> inverse(std::span<const std::size_t> source) {
  std::vector<std::size_t> inv(source.size());
  for (std::size_t k = 0; k < source.size(); ++k) inv.at(source[k]) = k;
  return inv;
}

// Mapping for premises built by "delete principal, append `added`".
std::vector<std::size_t> drop_and_append(std::span<const std::size_t> source, std::size_t px,
                                         std::size_t py, std::size_t added) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < source.size(); ++k) {
    if (k == py) continue;
    out.push_back(source[k] - (source[k] > px ? 1 : 0));
  }
  const std::size_t base = source.size() - 1;
  for (std::size_t t = 0; t < added; ++t) out.push_back(base + t);
  return out;
}

}  // namespace

UnfocusedProof reindex(const UnfocusedProof& proof, std::span<const std::size_t> source) {
  const auto inv = inverse(source);
  UnfocusedProof out;
  out.rule = proof.rule;
  const std::size_t px = proof.principal;
  const std::size_t py = inv.at(px);
  out.principal = py;

  switch (proof.rule) {
    case UnfocusedRule::Init:
      out.partner = inv.at(proof.partner);
      return out;
    case UnfocusedRule::One:
    case UnfocusedRule::Top:
      return out;
    case UnfocusedRule::Tensor: {
      std::vector<bool> in_left_x(source.size(), false);
      for (std::size_t x : proof.left) in_left_x.at(x) = true;
      std::vector<std::size_t> rank_x(source.size());
      std::size_t nl = 0, nr = 0;
      for (std::size_t x = 0; x < source.size(); ++x) {
        if (x == px) continue;
        rank_x[x] = in_left_x[x] ? nl++ : nr++;
      }
      std::vector<std::size_t> src_l, src_r;
      for (std::size_t k = 0; k < source.size(); ++k) {
        if (k == py) continue;
        const std::size_t x = source[k];
        if (in_left_x[x]) {
          out.left.push_back(k);
          src_l.push_back(rank_x[x]);
        } else {
          src_r.push_back(rank_x[x]);
        }
      }
      src_l.push_back(nl);
      src_r.push_back(nr);
      out.premises.push_back(reindex(proof.premises.at(0), src_l));
      out.premises.push_back(reindex(proof.premises.at(1), src_r));
      return out;
    }
    case UnfocusedRule::Contr: {
      std::vector<std::size_t> src(source.begin(), source.end());
      src.push_back(source.size());
      out.premises.push_back(reindex(proof.premises.at(0), src));
      return out;
    }
    case UnfocusedRule::With: {
      auto src = drop_and_append(source, px, py, 1);
      out.premises.push_back(reindex(proof.premises.at(0), src));
      out.premises.push_back(reindex(proof.premises.at(1), src));
      return out;
    }
    default: {
      std::size_t added = 1;
      if (proof.rule == UnfocusedRule::Par) added = 2;
      if (proof.rule == UnfocusedRule::Bot || proof.rule == UnfocusedRule::Weak) added = 0;
      auto src = drop_and_append(source, px, py, added);
      out.premises.push_back(reindex(proof.premises.at(0), src));
      return out;
    }
  }
}

namespace {

void write(const UnfocusedProof& p, std::size_t depth, std::string& out) {
  out += '(';
  out += rule_name(p.rule);
  out += ' ' + std::to_string(p.principal);
  if (p.rule == UnfocusedRule::Init) out += ' ' + std::to_string(p.partner);
  if (p.rule == UnfocusedRule::Tensor) out += ' ' + detail::index_list("left", p.left);
  for (const auto& q : p.premises) {
    out += '\n';
    out.append(depth + 1, ' ');
    write(q, depth + 1, out);
  }
  out += ')';
}

UnfocusedProof read(const detail::SExpr& e) {
  const std::string& name = e.head();
  UnfocusedProof p;
  auto it = std::find_if(std::begin(kAllUnfocusedRules), std::end(kAllUnfocusedRules),
                         [&](UnfocusedRule r) { return rule_name(r) == name; });
  if (it == std::end(kAllUnfocusedRules)) e.fail("unknown rule '" + name + "'");
  p.rule = *it;
  std::size_t next = 1;
  auto take = [&]() -> const detail::SExpr& {
    if (next >= e.items.size()) e.fail("missing argument to '" + name + "'");
    return e.items[next++];
  };
  p.principal = take().as_index();
  if (p.rule == UnfocusedRule::Init) p.partner = take().as_index();
  if (p.rule == UnfocusedRule::Tensor) p.left = take().as_index_list("left");
  while (next < e.items.size()) p.premises.push_back(read(e.items[next++]));
  if (p.premises.size() != arity(p.rule))
    e.fail("rule '" + name + "' takes " + std::to_string(arity(p.rule)) + " premises");
  return p;
}

}  // namespace

std::string to_sexpr(const UnfocusedProof& proof) {
  std::string out;
  write(proof, 0, out);
  out += '\n';
  return out;
}

UnfocusedProof parse_unfocused_proof(std::string_view text) {
  return read(detail::parse_single_sexpr(text));
}

}  // namespace sel

// Single-node certificate mutations and a position-free normal form used to
// tell a genuine escape from an alias (the same derivation written with
// different positions, e.g. picking the other of two identical formulas, or
// plus1 for plus2 on A + A).

#ifndef SEL_TESTS_MUTATION_HPP_
#define SEL_TESTS_MUTATION_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sel/focused.hpp"
#include "sel/syntax.hpp"
#include "sel/unfocused.hpp"

namespace sel::testing {

struct MutationTally {
  std::size_t mutants = 0;
  std::size_t rejected = 0;
  std::size_t aliases = 0;
  std::size_t escaped = 0;
  std::vector<std::string> escapes;  // descriptions, capped

  void add(const MutationTally& o) {
    mutants += o.mutants;
    rejected += o.rejected;
    aliases += o.aliases;
    escaped += o.escaped;
    for (const auto& e : o.escapes)
      if (escapes.size() < 10) escapes.push_back(e);
  }
};

// Sorted subsets of [0, n) one toggle or one move away from `xs`; all
// subsets when n is small.
inline std::vector<std::vector<std::size_t>> nearby_sets(const std::vector<std::size_t>& xs, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> in(n, false);
  for (std::size_t x : xs)
    if (x < n) in[x] = true;
  auto emit = [&](const std::vector<bool>& mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    if (s != xs) out.push_back(std::move(s));
  };
  if (n <= 6) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      std::vector<bool> mask(n);
      for (std::size_t i = 0; i < n; ++i) mask[i] = (bits >> i) & 1;
      emit(mask);
    }
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto mask = in;
    mask[i] = !mask[i];
    emit(mask);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (in[i] && !in[j]) {
        auto mask = in;
        mask[i] = false;
        mask[j] = true;
        emit(mask);
      }
  return out;
}

inline std::string multiset_text(const Context& ctx, const std::vector<std::size_t>& pos) {
  std::vector<std::string> parts;
  for (std::size_t p : pos) parts.push_back(p < ctx.size() ? to_string(ctx[p]) : "#");
  std::sort(parts.begin(), parts.end());
  std::string out = "{";
  for (const auto& p : parts) out += p + ";";
  return out + "}";
}

// ---- unfocused ----

inline std::string sequent_text(const Context& ctx) {
  std::vector<std::size_t> all(ctx.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return multiset_text(ctx, all);
}

// The tree of conclusions, each as a multiset; a chain of weakenings counts
// as one step. Two valid proofs with equal normal forms derive the same
// sequents in the same shape and differ only in how positions are named.
inline std::string normal_form(const Signature& sig, const Context& ctx, const UnfocusedProof& p) {
  if (p.rule == UnfocusedRule::Weak) {
    Context cur = ctx;
    const UnfocusedProof* node = &p;
    while (node->rule == UnfocusedRule::Weak) {
      cur = unfocused_premises(sig, cur, *node).at(0);
      node = &node->premises.at(0);
    }
    return "(weak* " + sequent_text(ctx) + " " + normal_form(sig, cur, *node) + ")";
  }
  std::string out = "(" + sequent_text(ctx);
  const auto premises = unfocused_premises(sig, ctx, p);
  for (std::size_t i = 0; i < premises.size(); ++i) out += " " + normal_form(sig, premises[i], p.premises[i]);
  return out + ")";
}

inline std::vector<UnfocusedProof> mutants_of(const UnfocusedProof& p, std::size_t n) {
  std::vector<UnfocusedProof> out;
  for (UnfocusedRule r : kAllUnfocusedRules) {
    if (r == p.rule || arity(r) != arity(p.rule)) continue;
    UnfocusedProof m = p;
    m.rule = r;
    if (r != UnfocusedRule::Tensor) m.left.clear();
    if (r != UnfocusedRule::Init) m.partner = 0;
    if (r == UnfocusedRule::Init && m.partner == m.principal) m.partner = m.principal == 0 ? 1 : 0;
    out.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i != p.principal) {
      UnfocusedProof m = p;
      m.principal = i;
      out.push_back(std::move(m));
    }
    if (p.rule == UnfocusedRule::Init && i != p.partner) {
      UnfocusedProof m = p;
      m.partner = i;
      out.push_back(std::move(m));
    }
  }
  if (p.rule == UnfocusedRule::Tensor) {
    for (auto& s : nearby_sets(p.left, n)) {
      UnfocusedProof m = p;
      m.left = std::move(s);
      out.push_back(std::move(m));
    }
  }
  return out;
}

namespace detail {

inline void walk(const Signature& sig, const Context& ctx, const UnfocusedProof& p, MutationTally& t) {
  std::optional<std::string> original;
  for (const UnfocusedProof& m : mutants_of(p, ctx.size())) {
    ++t.mutants;
    if (!check_unfocused(sig, {ctx}, m).ok()) {
      ++t.rejected;
      continue;
    }
    if (!original) original = normal_form(sig, ctx, p);
    if (normal_form(sig, ctx, m) == *original) {
      ++t.aliases;
    } else {
      ++t.escaped;
      if (t.escapes.size() < 10) t.escapes.push_back(to_inline_string(ctx) + " : " + to_sexpr(m));
    }
  }
  const auto premises = unfocused_premises(sig, ctx, p);
  for (std::size_t i = 0; i < premises.size(); ++i) walk(sig, premises[i], p.premises[i], t);
}

}  // namespace detail

// Mutates every node of a valid proof in every single way.
inline MutationTally mutate_all(const Signature& sig, const Sequent& goal, const UnfocusedProof& p) {
  MutationTally t;
  detail::walk(sig, goal.context, p, t);
  return t;
}

// ---- focused ----

inline std::string normal_form(const Signature& sig, const FocusedSequent& s, const FocusedProof& p) {
  std::string out = "(" + sequent_text(s.context);
  if (s.focus) out += "[" + to_string(*s.focus) + "]";
  const auto premises = focused_premises(sig, s, p);
  for (std::size_t i = 0; i < premises.size(); ++i) out += " " + normal_form(sig, premises[i], p.premises[i]);
  return out + ")";
}

inline std::vector<FocusedProof> mutants_of(const FocusedProof& p, std::size_t n) {
  std::vector<FocusedProof> out;
  for (FocusedRule r : kAllFocusedRules) {
    if (r == p.rule || arity(r) != arity(p.rule)) continue;
    FocusedProof m = p;
    m.rule = r;
    if (!has_positions(r)) m.positions.clear();
    if (acts_on_focus(r)) m.principal = 0;
    out.push_back(std::move(m));
  }
  if (!acts_on_focus(p.rule)) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p.principal) continue;
      FocusedProof m = p;
      m.principal = i;
      out.push_back(std::move(m));
    }
  }
  if (has_positions(p.rule)) {
    for (auto& s : nearby_sets(p.positions, n)) {
      FocusedProof m = p;
      m.positions = std::move(s);
      out.push_back(std::move(m));
    }
  }
  return out;
}

namespace detail {

inline void walk(const Signature& sig, const FocusedSequent& s, const FocusedProof& p, MutationTally& t) {
  std::optional<std::string> original;
  for (const FocusedProof& m : mutants_of(p, s.context.size())) {
    ++t.mutants;
    if (!check_focused(sig, s, m).ok()) {
      ++t.rejected;
      continue;
    }
    if (!original) original = normal_form(sig, s, p);
    if (normal_form(sig, s, m) == *original) {
      ++t.aliases;
    } else {
      ++t.escaped;
      if (t.escapes.size() < 10) t.escapes.push_back(to_inline_string(s.context) + " : " + to_sexpr(m));
    }
  }
  const auto premises = focused_premises(sig, s, p);
  for (std::size_t i = 0; i < premises.size(); ++i) walk(sig, premises[i], p.premises[i], t);
}

}  // namespace detail

inline MutationTally mutate_all(const Signature& sig, const FocusedSequent& goal, const FocusedProof& p) {
  MutationTally t;
  detail::walk(sig, goal, p, t);
  return t;
}

}  // namespace sel::testing

#endif  // SEL_TESTS_MUTATION_HPP_

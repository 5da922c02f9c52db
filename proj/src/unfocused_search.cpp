// Bounded backward search over the unfocused calculus.
//
// The search works on dyadic sequents Θ ; Δ where Θ holds the unbounded
// ?-formulas (implicitly weakenable and contractible) and Δ the rest.
// Invertible rules (par, bot, with, top) are applied eagerly. The derivation
// found is then rendered as an explicit certificate: unbounded formulas are
// contracted only where two branches or a later use need them, and weakened
// as soon as the remaining subtree no longer needs them.

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sel/unfocused.hpp"

namespace sel {
namespace {

enum class Step { Init, One, Top, Tensor, Plus1, Plus2, Par, Bot, With, Qm, Bang, Use };

struct Derivation {
  Step step = Step::Init;
  Formula principal = Formula::one();
  std::vector<Formula> left;  // tensor: linear formulas sent left
  std::vector<Derivation> premises;
  std::vector<Formula> need;  // unbounded formulas used in this subtree (sorted, unique)
  std::size_t rules = 1;
  std::size_t uses = 0;
};

using Zone = std::vector<Formula>;  // sorted by id, unique

void insert_sorted(Zone& zone, Formula f) {
  auto it = std::lower_bound(zone.begin(), zone.end(), f);
  if (it == zone.end() || *it != f) zone.insert(it, f);
}

std::vector<Formula> merge_need(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::vector<Formula> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_sorted(const std::vector<Formula>& xs, Formula f) {
  return std::binary_search(xs.begin(), xs.end(), f);
}

class Searcher {
 public:
  Searcher(const Signature& sig, UnfocusedBudget budget) : sig_(sig), budget_(budget) {}

  std::optional<Derivation> run(const Context& goal) {
    Zone zone;
    Context linear;
    for (Formula f : goal) add(zone, linear, f);
    for (std::size_t r = 1; r <= budget_.max_rules; ++r) {
      if (auto d = search(zone, linear, r, budget_.max_contractions)) return d;
    }
    return std::nullopt;
  }

  bool unbounded(Formula f) const { return f.is(Connective::Qm) && sig_.is_unbounded(f.label()); }

 private:
  void add(Zone& zone, Context& linear, Formula f) const {
    if (unbounded(f))
      insert_sorted(zone, f);
    else
      linear.push_back(f);
  }

  static bool occurs(Formula haystack, Formula needle) {
    if (haystack == needle) return true;
    switch (haystack.connective()) {
      case Connective::Tensor:
      case Connective::Par:
      case Connective::Plus:
      case Connective::With:
        return occurs(haystack.left(), needle) || occurs(haystack.right(), needle);
      case Connective::Bang:
      case Connective::Qm:
        return occurs(haystack.body(), needle);
      default:
        return false;
    }
  }

  // A top-level literal can only be consumed by init against a dual that is
  // a subformula of something else in the sequent, or by top.
  bool hopeless(const Zone& zone, const Context& linear) const {
    const Formula top = Formula::top();
    for (std::size_t i = 0; i < linear.size(); ++i) {
      const Formula f = linear[i];
      if (!f.is(Connective::Atom) && !f.is(Connective::NegAtom)) continue;
      const Formula d = dual(f);
      bool found = false;
      for (std::size_t j = 0; j < linear.size() && !found; ++j)
        found = j != i && (occurs(linear[j], d) || occurs(linear[j], top));
      for (std::size_t j = 0; j < zone.size() && !found; ++j)
        found = occurs(zone[j], d) || occurs(zone[j], top);
      if (!found) return true;
    }
    return false;
  }

  using Key = std::vector<std::uint32_t>;

  static Key key_of(const Zone& zone, const Context& linear) {
    Key key;
    for (Formula f : zone) key.push_back(f.id());
    key.push_back(UINT32_MAX);
    auto lin = canonical_key(linear);
    key.insert(key.end(), lin.begin(), lin.end());
    return key;
  }

  bool known_failure(const Key& key, std::size_t rules, std::size_t uses) const {
    auto it = failures_.find(key);
    if (it == failures_.end()) return false;
    for (auto [r, u] : it->second)
      if (rules <= r && uses <= u) return true;
    return false;
  }

  Derivation leaf(Step step, Formula principal) const {
    Derivation d;
    d.step = step;
    d.principal = principal;
    return d;
  }

  Derivation unary(Step step, Formula principal, Derivation premise) const {
    Derivation d;
    d.step = step;
    d.principal = principal;
    d.rules = 1 + premise.rules;
    d.uses = premise.uses;
    d.need = premise.need;
    d.premises.push_back(std::move(premise));
    return d;
  }

  Derivation binary(Step step, Formula principal, Derivation lhs, Derivation rhs) const {
    Derivation d;
    d.step = step;
    d.principal = principal;
    d.rules = 1 + lhs.rules + rhs.rules;
    d.uses = lhs.uses + rhs.uses;
    d.need = merge_need(lhs.need, rhs.need);
    d.premises.push_back(std::move(lhs));
    d.premises.push_back(std::move(rhs));
    return d;
  }

  static Context without(const Context& ctx, std::size_t i) {
    Context out = ctx;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  }

  // Smallest-first search for a sub-derivation, so that the sibling branch
  // keeps as much of the shared budget as possible.
  std::optional<Derivation> search_min(const Zone& zone, const Context& linear, std::size_t rules,
                                       std::size_t uses) {
    for (std::size_t r = 1; r <= rules; ++r)
      if (auto d = search(zone, linear, r, uses)) return d;
    return std::nullopt;
  }

  std::optional<Derivation> search(const Zone& zone, const Context& linear, std::size_t rules,
                                   std::size_t uses) {
    if (rules == 0) return std::nullopt;
    Key key = key_of(zone, linear);
    if (known_failure(key, rules, uses)) return std::nullopt;
    auto result = expand(zone, linear, rules, uses);
    if (!result) failures_[key].emplace_back(rules, uses);
    return result;
  }

  std::optional<Derivation> expand(const Zone& zone, const Context& linear, std::size_t rules,
                                   std::size_t uses) {
    // Invertible phase.
    for (std::size_t i = 0; i < linear.size(); ++i) {
      const Formula f = linear[i];
      switch (f.connective()) {
        case Connective::Top:
          return leaf(Step::Top, f);
        case Connective::Bot: {
          auto sub = search(zone, without(linear, i), rules - 1, uses);
          if (!sub) return std::nullopt;
          return unary(Step::Bot, f, std::move(*sub));
        }
        case Connective::Par: {
          Zone z = zone;
          Context rest = without(linear, i);
          add(z, rest, f.left());
          add(z, rest, f.right());
          auto sub = search(z, rest, rules - 1, uses);
          if (!sub) return std::nullopt;
          return unary(Step::Par, f, std::move(*sub));
        }
        case Connective::With: {
          if (rules < 3) return std::nullopt;
          Zone zl = zone, zr = zone;
          Context l = without(linear, i), r = l;
          add(zl, l, f.left());
          add(zr, r, f.right());
          for (std::size_t bl = 1; bl + 2 <= rules; ++bl) {
            auto lhs = search(zl, l, bl, uses);
            if (!lhs) continue;
            auto rhs = search(zr, r, rules - 1 - lhs->rules, uses - lhs->uses);
            if (!rhs) return std::nullopt;
            return binary(Step::With, f, std::move(*lhs), std::move(*rhs));
          }
          return std::nullopt;
        }
        default:
          break;
      }
    }

    if (hopeless(zone, linear)) return std::nullopt;

    if (linear.size() == 2 && linear[0].is(Connective::Atom) && linear[1] == dual(linear[0]))
      return leaf(Step::Init, linear[0]);
    if (linear.size() == 2 && linear[1].is(Connective::Atom) && linear[0] == dual(linear[1]))
      return leaf(Step::Init, linear[1]);
    if (linear.size() == 1 && linear[0].is(Connective::One)) return leaf(Step::One, linear[0]);
    if (rules < 2) return std::nullopt;

    std::vector<Formula> tried;
    for (std::size_t i = 0; i < linear.size(); ++i) {
      const Formula f = linear[i];
      if (std::find(tried.begin(), tried.end(), f) != tried.end()) continue;
      tried.push_back(f);
      switch (f.connective()) {
        case Connective::Tensor:
          if (auto d = try_tensor(zone, without(linear, i), f, rules, uses)) return d;
          break;
        case Connective::Plus:
          for (Step s : {Step::Plus1, Step::Plus2}) {
            Zone z = zone;
            Context rest = without(linear, i);
            add(z, rest, s == Step::Plus1 ? f.left() : f.right());
            if (auto sub = search(z, rest, rules - 1, uses)) return unary(s, f, std::move(*sub));
          }
          break;
        case Connective::Qm: {
          Zone z = zone;
          Context rest = without(linear, i);
          add(z, rest, f.body());
          if (auto sub = search(z, rest, rules - 1, uses)) return unary(Step::Qm, f, std::move(*sub));
          break;
        }
        case Connective::Bang:
          if (auto d = try_bang(zone, without(linear, i), f, rules, uses)) return d;
          break;
        default:
          break;
      }
    }

    if (uses > 0) {
      for (Formula theta : zone) {
        Zone z = zone;
        Context rest = linear;
        add(z, rest, theta.body());
        if (auto sub = search(z, rest, rules - 1, uses - 1)) {
          Derivation d = unary(Step::Use, theta, std::move(*sub));
          d.uses += 1;
          insert_sorted(d.need, theta);
          return d;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Derivation> try_bang(const Zone& zone, const Context& rest, Formula f,
                                     std::size_t rules, std::size_t uses) {
    const std::string& u = f.label();
    for (Formula g : rest)
      if (!g.is(Connective::Qm) || !sig_.leq(u, g.label())) return std::nullopt;
    Zone z;
    for (Formula theta : zone)
      if (sig_.leq(u, theta.label())) z.push_back(theta);
    Context next = rest;
    add(z, next, f.body());
    auto sub = search(z, next, rules - 1, uses);
    if (!sub) return std::nullopt;
    return unary(Step::Bang, f, std::move(*sub));
  }

  std::optional<Derivation> try_tensor(const Zone& zone, const Context& rest, Formula f,
                                       std::size_t rules, std::size_t uses) {
    if (rules < 3) return std::nullopt;
    // Group equal formulas so that splits are enumerated as multisets.
    std::vector<Formula> kinds;
    std::vector<std::size_t> counts;
    for (Formula g : rest) {
      auto it = std::find(kinds.begin(), kinds.end(), g);
      if (it == kinds.end()) {
        kinds.push_back(g);
        counts.push_back(1);
      } else {
        ++counts[static_cast<std::size_t>(it - kinds.begin())];
      }
    }
    std::vector<std::size_t> take(kinds.size(), 0);
    while (true) {
      Zone zl = zone, zr = zone;
      Context l, r;
      std::vector<Formula> sent_left;
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        for (std::size_t t = 0; t < take[k]; ++t) {
          l.push_back(kinds[k]);
          sent_left.push_back(kinds[k]);
        }
        for (std::size_t t = take[k]; t < counts[k]; ++t) r.push_back(kinds[k]);
      }
      add(zl, l, f.left());
      add(zr, r, f.right());
      if (!hopeless(zl, l) && !hopeless(zr, r)) {
        for (std::size_t bl = 1; bl + 2 <= rules; ++bl) {
          auto lhs = search(zl, l, bl, uses);
          if (!lhs) continue;
          if (auto rhs = search(zr, r, rules - 1 - lhs->rules, uses - lhs->uses)) {
            Derivation d = binary(Step::Tensor, f, std::move(*lhs), std::move(*rhs));
            d.left = std::move(sent_left);
            return d;
          }
          break;
        }
      }
      std::size_t k = 0;
      while (k < kinds.size() && take[k] == counts[k]) take[k++] = 0;
      if (k == kinds.size()) break;
      ++take[k];
    }
    return std::nullopt;
  }

  const Signature& sig_;
  UnfocusedBudget budget_;
  std::map<Key, std::vector<std::pair<std::size_t, std::size_t>>> failures_;
};

// Renders a dyadic derivation as a positional certificate.
class Renderer {
 public:
  explicit Renderer(const Signature& sig) : sig_(sig) {}

  UnfocusedProof render(const Derivation& d, Context ctx) const {
    // Weaken unbounded formulas the subtree does not use (top absorbs them).
    std::vector<std::size_t> drop;
    if (d.step != Step::Top) {
      std::vector<Formula> kept;
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        const Formula f = ctx[i];
        if (!unbounded(f)) continue;
        bool keep = contains_sorted(d.need, f) &&
                    std::find(kept.begin(), kept.end(), f) == kept.end();
        if (d.step == Step::Bang) keep = keep && sig_.leq(d.principal.label(), f.label());
        if (keep)
          kept.push_back(f);
        else
          drop.push_back(i);
      }
    }
    std::reverse(drop.begin(), drop.end());
    for (std::size_t i : drop) ctx.erase(ctx.begin() + static_cast<std::ptrdiff_t>(i));

    UnfocusedProof body = apply(d, ctx);
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
      UnfocusedProof weak;
      weak.rule = UnfocusedRule::Weak;
      weak.principal = *it;
      weak.premises.push_back(std::move(body));
      body = std::move(weak);
    }
    return body;
  }

 private:
  bool unbounded(Formula f) const { return f.is(Connective::Qm) && sig_.is_unbounded(f.label()); }

  static std::size_t find(const Context& ctx, Formula f) {
    auto it = std::find(ctx.begin(), ctx.end(), f);
    if (it == ctx.end()) throw std::logic_error("search_unfocused: formula missing from context");
    return static_cast<std::size_t>(it - ctx.begin());
  }

  UnfocusedProof finish(UnfocusedProof node, const Context& ctx, const Derivation& d) const {
    auto premises = unfocused_premises(sig_, ctx, node);
    for (std::size_t i = 0; i < premises.size(); ++i)
      node.premises[i] = render(d.premises[i], std::move(premises[i]));
    return node;
  }

  static UnfocusedProof make(UnfocusedRule rule, std::size_t principal) {
    UnfocusedProof p;
    p.rule = rule;
    p.principal = principal;
    p.premises.resize(arity(rule));
    return p;
  }

  UnfocusedProof apply(const Derivation& d, const Context& ctx) const {
    switch (d.step) {
      case Step::Init: {
        UnfocusedProof p = make(UnfocusedRule::Init, find(ctx, d.principal));
        p.partner = find(ctx, dual(d.principal));
        return p;
      }
      case Step::One: return make(UnfocusedRule::One, find(ctx, d.principal));
      case Step::Top: return make(UnfocusedRule::Top, find(ctx, d.principal));
      case Step::Plus1: return finish(make(UnfocusedRule::Plus1, find(ctx, d.principal)), ctx, d);
      case Step::Plus2: return finish(make(UnfocusedRule::Plus2, find(ctx, d.principal)), ctx, d);
      case Step::Par: return finish(make(UnfocusedRule::Par, find(ctx, d.principal)), ctx, d);
      case Step::Bot: return finish(make(UnfocusedRule::Bot, find(ctx, d.principal)), ctx, d);
      case Step::With: return finish(make(UnfocusedRule::With, find(ctx, d.principal)), ctx, d);
      case Step::Qm: return finish(make(UnfocusedRule::Qm, find(ctx, d.principal)), ctx, d);
      case Step::Bang: return finish(make(UnfocusedRule::Bang, find(ctx, d.principal)), ctx, d);
      case Step::Use: {
        const std::size_t pos = find(ctx, d.principal);
        if (!contains_sorted(d.premises[0].need, d.principal))
          return finish(make(UnfocusedRule::Qm, pos), ctx, d);
        UnfocusedProof contr = make(UnfocusedRule::Contr, pos);
        Context grown = ctx;
        grown.push_back(d.principal);
        contr.premises[0] = finish(make(UnfocusedRule::Qm, grown.size() - 1), grown, d);
        return contr;
      }
      case Step::Tensor: return tensor(d, ctx);
    }
    throw std::logic_error("search_unfocused: bad step");
  }

  UnfocusedProof tensor(const Derivation& d, const Context& ctx) const {
    const auto& need_l = d.premises[0].need;
    const auto& need_r = d.premises[1].need;
    // Contract formulas both branches use; the copies go right.
    std::vector<std::size_t> contract;
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (unbounded(ctx[i]) && contains_sorted(need_l, ctx[i]) && contains_sorted(need_r, ctx[i]))
        contract.push_back(i);
    Context grown = ctx;
    for (std::size_t i : contract) grown.push_back(ctx[i]);

    const std::size_t principal = find(ctx, d.principal);
    std::vector<bool> used(ctx.size(), false);
    used[principal] = true;
    std::vector<std::size_t> left;
    for (Formula g : d.left) {
      std::size_t i = 0;
      while (i < ctx.size() && (used[i] || ctx[i] != g)) ++i;
      if (i == ctx.size()) throw std::logic_error("search_unfocused: split formula missing");
      used[i] = true;
      left.push_back(i);
    }
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (!used[i] && unbounded(ctx[i]) && contains_sorted(need_l, ctx[i])) left.push_back(i);
    std::sort(left.begin(), left.end());

    UnfocusedProof node = make(UnfocusedRule::Tensor, principal);
    node.left = std::move(left);
    node = finish(std::move(node), grown, d);
    for (auto it = contract.rbegin(); it != contract.rend(); ++it) {
      UnfocusedProof c = make(UnfocusedRule::Contr, *it);
      c.premises[0] = std::move(node);
      node = std::move(c);
    }
    return node;
  }

  const Signature& sig_;
};

bool labels_known(const Signature& sig, Formula f) {
  switch (f.connective()) {
    case Connective::Bang:
    case Connective::Qm:
      return sig.contains(f.label()) && labels_known(sig, f.body());
    case Connective::Tensor:
    case Connective::Par:
    case Connective::Plus:
    case Connective::With:
      return labels_known(sig, f.left()) && labels_known(sig, f.right());
    default:
      return true;
  }
}

}  // namespace

std::optional<UnfocusedProof> search_unfocused(const Signature& sig, const Sequent& goal,
                                               UnfocusedBudget budget) {
  for (Formula f : goal.context)
    if (!labels_known(sig, f)) return std::nullopt;
  Searcher searcher(sig, budget);
  auto derivation = searcher.run(goal.context);
  if (!derivation) return std::nullopt;
  UnfocusedProof proof = Renderer(sig).render(*derivation, goal.context);
  if (auto result = check_unfocused(sig, goal, proof); !result.ok())
    throw std::logic_error("search_unfocused produced an invalid certificate: " +
                           describe(*result.error));
  return proof;
}

}  // namespace sel

#include "sel/prover.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace sel {
namespace {

struct NodeLimit {};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
    std::size_t h = key.size();
    for (std::uint32_t x : key) h = h * 1000003u ^ x;
    return h;
  }
};

FocusedProof node(FocusedRule rule, std::size_t principal = 0) {
  FocusedProof p;
  p.rule = rule;
  p.principal = principal;
  return p;
}

Context without(const Context& ctx, std::size_t i) {
  Context out;
  out.reserve(ctx.size());
  for (std::size_t k = 0; k < ctx.size(); ++k)
    if (k != i) out.push_back(ctx[k]);
  return out;
}

class Prover {
 public:
  Prover(const Signature& sig, const SearchBudget& budget) : sig_(sig), budget_(budget) {}

  SearchOutcome run(const FocusedSequent& goal) {
    SearchOutcome out;
    if (!labels_known(goal)) return out;
    try {
      for (std::size_t bound = 1; bound <= budget_.max_decides; ++bound) {
        stats_.rounds = bound;
        stats_.bound_hit = false;
        memo_.clear();
        std::optional<FocusedProof> p =
            goal.focus ? focus(goal.context, *goal.focus, bound, 0) : neutral(goal.context, bound, 0);
        if (p) {
          out.proof = std::move(p);
          break;
        }
        // Nothing was cut off by the bound, so a larger bound cannot help.
        if (!stats_.bound_hit) break;
      }
    } catch (const NodeLimit&) {
      stats_.node_limit_hit = true;
    }
    out.stats = stats_;
    return out;
  }

 private:
  bool known(Formula f) const {
    switch (f.connective()) {
      case Connective::Tensor:
      case Connective::Par:
      case Connective::Plus:
      case Connective::With:
        return known(f.left()) && known(f.right());
      case Connective::Bang:
      case Connective::Qm:
        return sig_.contains(f.label()) && known(f.body());
      default:
        return true;
    }
  }

  bool labels_known(const FocusedSequent& goal) const {
    if (goal.focus && !known(*goal.focus)) return false;
    return std::all_of(goal.context.begin(), goal.context.end(), [&](Formula f) { return known(f); });
  }

  bool unbounded(Formula f) const { return f.is(Connective::Qm) && sig_.is_unbounded(f.label()); }

  void tick() {
    if (++stats_.nodes_expanded > budget_.max_nodes) throw NodeLimit{};
  }

  // Unfocused sequent: negative phase, then a decide.
  std::optional<FocusedProof> neutral(const Context& ctx, std::size_t left, std::size_t used) {
    tick();
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula f = ctx[i];
      switch (f.connective()) {
        case Connective::Top:
          return node(FocusedRule::Top, i);
        case Connective::Bot: {
          auto p = neutral(without(ctx, i), left, used);
          if (!p) return std::nullopt;
          FocusedProof out = node(FocusedRule::Bot, i);
          out.premises.push_back(std::move(*p));
          return out;
        }
        case Connective::Par: {
          Context next = without(ctx, i);
          next.push_back(f.left());
          next.push_back(f.right());
          auto p = neutral(next, left, used);
          if (!p) return std::nullopt;
          FocusedProof out = node(FocusedRule::Par, i);
          out.premises.push_back(std::move(*p));
          return out;
        }
        case Connective::With: {
          Context lhs = without(ctx, i), rhs = lhs;
          lhs.push_back(f.left());
          rhs.push_back(f.right());
          auto p = neutral(lhs, left, used);
          if (!p) return std::nullopt;
          auto q = neutral(rhs, left, used);
          if (!q) return std::nullopt;
          FocusedProof out = node(FocusedRule::With, i);
          out.premises.push_back(std::move(*p));
          out.premises.push_back(std::move(*q));
          return out;
        }
        default:
          break;
      }
    }
    return decide(ctx, left, used);
  }

  std::optional<FocusedProof> decide(const Context& ctx, std::size_t left, std::size_t used) {
    if (left == 0) {
      stats_.bound_hit = true;
      return std::nullopt;
    }
    std::vector<std::uint32_t> key;
    if (budget_.memoize) {
      key = canonical_key(ctx);
      auto it = memo_.find(key);
      if (it != memo_.end() && it->second >= left) return std::nullopt;
    }
    stats_.max_depth = std::max(stats_.max_depth, used + 1);

    auto attempt = [&](FocusedRule rule, std::size_t i) -> std::optional<FocusedProof> {
      const Formula f = ctx[i];
      std::optional<FocusedProof> p;
      if (rule == FocusedRule::Decide)
        p = focus(without(ctx, i), f, left - 1, used + 1);
      else if (rule == FocusedRule::LDecide)
        p = focus(without(ctx, i), f.body(), left - 1, used + 1);
      else
        p = focus(ctx, f.body(), left - 1, used + 1);
      if (!p) return std::nullopt;
      FocusedProof out = node(rule, i);
      out.premises.push_back(std::move(*p));
      return out;
    };

    for (FocusedRule rule : {FocusedRule::LDecide, FocusedRule::UDecide, FocusedRule::Decide}) {
      std::vector<Formula> tried;
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        const Formula f = ctx[i];
        if (!eligible(rule, f, ctx)) continue;
        if (std::find(tried.begin(), tried.end(), f) != tried.end()) continue;
        tried.push_back(f);
        if (auto p = attempt(rule, i)) return p;
      }
    }
    if (budget_.memoize) {
      std::size_t& best = memo_[key];
      best = std::max(best, left);
    }
    return std::nullopt;
  }

  bool eligible(FocusedRule rule, Formula f, const Context& ctx) const {
    switch (rule) {
      case FocusedRule::LDecide:
        return f.is(Connective::Qm) && !sig_.is_unbounded(f.label());
      case FocusedRule::UDecide:
        return unbounded(f);
      default:
        if (!is_positive(f)) return false;
        // An atom can only close against its dual.
        if (f.is(Connective::Atom))
          return std::find(ctx.begin(), ctx.end(), Formula::neg_atom(f.name())) != ctx.end();
        return true;
    }
  }

  // Quick necessary condition: can `bounded` (the non-copied part of a
  // context) possibly close a focus on `f` without further decides?
  static bool plausible(const std::vector<Formula>& bounded, Formula f) {
    if (f.is(Connective::Atom)) return bounded.size() == 1 && bounded[0] == Formula::neg_atom(f.name());
    if (f.is(Connective::One)) return bounded.empty();
    if (f.is(Connective::Zero)) return false;
    return true;
  }

  std::optional<FocusedProof> focus(const Context& ctx, Formula f, std::size_t left, std::size_t used) {
    tick();
    switch (f.connective()) {
      case Connective::Atom: {
        const Formula want = Formula::neg_atom(f.name());
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < ctx.size(); ++i) {
          if (!hit && ctx[i] == want) {
            hit = i;
          } else if (!unbounded(ctx[i])) {
            return std::nullopt;
          }
        }
        if (!hit) return std::nullopt;
        FocusedProof out = node(FocusedRule::FInit);
        out.positions = {*hit};
        return out;
      }
      case Connective::One:
        if (!std::all_of(ctx.begin(), ctx.end(), [&](Formula g) { return unbounded(g); }))
          return std::nullopt;
        return node(FocusedRule::FOne);
      case Connective::Zero:
        return std::nullopt;
      case Connective::Plus:
        for (FocusedRule rule : {FocusedRule::FPlus1, FocusedRule::FPlus2}) {
          auto p = focus(ctx, rule == FocusedRule::FPlus1 ? f.left() : f.right(), left, used);
          if (p) {
            FocusedProof out = node(rule);
            out.premises.push_back(std::move(*p));
            return out;
          }
        }
        return std::nullopt;
      case Connective::Bang: {
        FocusedProof out = node(FocusedRule::FBang);
        Context next;
        for (std::size_t i = 0; i < ctx.size(); ++i) {
          const Formula g = ctx[i];
          if (g.is(Connective::Qm) && sig_.leq(f.label(), g.label())) {
            out.positions.push_back(i);
            next.push_back(g);
          } else if (!unbounded(g)) {
            return std::nullopt;
          }
        }
        next.push_back(f.body());
        auto p = neutral(next, left, used);
        if (!p) return std::nullopt;
        out.premises.push_back(std::move(*p));
        return out;
      }
      case Connective::Tensor:
        return tensor(ctx, f, left, used);
      default: {
        Context next = ctx;
        next.push_back(f);
        auto p = neutral(next, left, used);
        if (!p) return std::nullopt;
        FocusedProof out = node(FocusedRule::Blur);
        out.premises.push_back(std::move(*p));
        return out;
      }
    }
  }

  std::optional<FocusedProof> tensor(const Context& ctx, Formula f, std::size_t left, std::size_t used) {
    // Group the bounded positions by formula so that splits are enumerated
    // as multisets: for each group, how many copies go left.
    std::vector<Formula> kinds;
    std::vector<std::vector<std::size_t>> where;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (unbounded(ctx[i])) continue;
      auto it = std::find(kinds.begin(), kinds.end(), ctx[i]);
      if (it == kinds.end()) {
        kinds.push_back(ctx[i]);
        where.push_back({i});
      } else {
        where[static_cast<std::size_t>(it - kinds.begin())].push_back(i);
      }
    }
    std::vector<std::size_t> take(kinds.size(), 0);
    while (true) {
      std::vector<bool> to_left(ctx.size(), false);
      std::vector<Formula> lb, rb;
      for (std::size_t g = 0; g < kinds.size(); ++g) {
        for (std::size_t k = 0; k < where[g].size(); ++k) {
          const bool l = k < take[g];
          to_left[where[g][k]] = l;
          (l ? lb : rb).push_back(kinds[g]);
        }
      }
      if (plausible(lb, f.left()) && plausible(rb, f.right())) {
        Context lhs, rhs;
        FocusedProof out = node(FocusedRule::FTensor);
        for (std::size_t i = 0; i < ctx.size(); ++i) {
          if (unbounded(ctx[i])) {
            lhs.push_back(ctx[i]);
            rhs.push_back(ctx[i]);
          } else if (to_left[i]) {
            lhs.push_back(ctx[i]);
            out.positions.push_back(i);
          } else {
            rhs.push_back(ctx[i]);
          }
        }
        if (auto p = focus(lhs, f.left(), left, used)) {
          if (auto q = focus(rhs, f.right(), left, used)) {
            out.premises.push_back(std::move(*p));
            out.premises.push_back(std::move(*q));
            return out;
          }
        }
      }
      // Next split, odometer style.
      std::size_t g = 0;
      while (g < kinds.size() && take[g] == where[g].size()) take[g++] = 0;
      if (g == kinds.size()) return std::nullopt;
      ++take[g];
    }
  }

  const Signature& sig_;
  SearchBudget budget_;
  SearchStats stats_;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, KeyHash> memo_;
};

}  // namespace

SearchOutcome prove_focused(const Signature& sig, const FocusedSequent& goal, const SearchBudget& budget) {
  return Prover(sig, budget).run(goal);
}

SearchOutcome prove_focused(const Signature& sig, const Sequent& goal, const SearchBudget& budget) {
  return prove_focused(sig, unfocused(goal), budget);
}

}  // namespace sel

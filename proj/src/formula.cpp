#include "sel/formula.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace sel {
namespace detail {

struct FormulaNode {
  Connective connective;
  std::string name;
  const FormulaNode* lhs;
  const FormulaNode* rhs;
  std::uint32_t id;
  std::size_t size;
};

namespace {

struct NodeKey {
  Connective connective;
  std::string_view name;
  const FormulaNode* lhs;
  const FormulaNode* rhs;
};

struct NodeHash {
  using is_transparent = void;
  std::size_t operator()(const NodeKey& k) const noexcept {
    std::size_t h = std::hash<std::string_view>{}(k.name);
    h ^= static_cast<std::size_t>(k.connective) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<const void*>{}(k.lhs) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<const void*>{}(k.rhs) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
  std::size_t operator()(const FormulaNode* n) const noexcept {
    return (*this)(NodeKey{n->connective, n->name, n->lhs, n->rhs});
  }
};

struct NodeEq {
  using is_transparent = void;
  static NodeKey key(const FormulaNode* n) noexcept { return {n->connective, n->name, n->lhs, n->rhs}; }
  static NodeKey key(const NodeKey& k) noexcept { return k; }
  template <class A, class B>
  bool operator()(const A& a, const B& b) const noexcept {
    NodeKey x = key(a), y = key(b);
    return x.connective == y.connective && x.lhs == y.lhs && x.rhs == y.rhs && x.name == y.name;
  }
};

// Nodes live for the whole process; handles are raw pointers into this arena.
class InternTable {
 public:
  const FormulaNode* intern(Connective c, std::string_view name, const FormulaNode* lhs,
                            const FormulaNode* rhs) {
    std::lock_guard lock(mutex_);
    NodeKey key{c, name, lhs, rhs};
    if (auto it = index_.find(key); it != index_.end()) return *it;
    std::size_t size = 1 + (lhs ? lhs->size : 0) + (rhs ? rhs->size : 0);
    nodes_.push_back(FormulaNode{c, std::string(name), lhs, rhs,
                                 static_cast<std::uint32_t>(nodes_.size()), size});
    const FormulaNode* node = &nodes_.back();
    index_.insert(node);
    return node;
  }

 private:
  std::mutex mutex_;
  std::deque<FormulaNode> nodes_;
  std::unordered_set<const FormulaNode*, NodeHash, NodeEq> index_;
};

InternTable& table() {
  static InternTable t;
  return t;
}

}  // namespace
}  // namespace detail

Formula Formula::make(Connective c, std::string_view name, const detail::FormulaNode* lhs,
                      const detail::FormulaNode* rhs) {
  return Formula(detail::table().intern(c, name, lhs, rhs));
}

Formula Formula::atom(std::string_view name) { return make(Connective::Atom, name, nullptr, nullptr); }
Formula Formula::neg_atom(std::string_view name) {
  return make(Connective::NegAtom, name, nullptr, nullptr);
}
Formula Formula::tensor(Formula l, Formula r) { return make(Connective::Tensor, {}, l.node_, r.node_); }
Formula Formula::par(Formula l, Formula r) { return make(Connective::Par, {}, l.node_, r.node_); }
Formula Formula::plus(Formula l, Formula r) { return make(Connective::Plus, {}, l.node_, r.node_); }
Formula Formula::with(Formula l, Formula r) { return make(Connective::With, {}, l.node_, r.node_); }
Formula Formula::one() { return make(Connective::One, {}, nullptr, nullptr); }
Formula Formula::bot() { return make(Connective::Bot, {}, nullptr, nullptr); }
Formula Formula::zero() { return make(Connective::Zero, {}, nullptr, nullptr); }
Formula Formula::top() { return make(Connective::Top, {}, nullptr, nullptr); }
Formula Formula::bang(std::string_view label, Formula body) {
  return make(Connective::Bang, label, body.node_, nullptr);
}
Formula Formula::qm(std::string_view label, Formula body) {
  return make(Connective::Qm, label, body.node_, nullptr);
}

Connective Formula::connective() const noexcept { return node_->connective; }
const std::string& Formula::name() const noexcept { return node_->name; }
Formula Formula::left() const noexcept { return Formula(node_->lhs); }
Formula Formula::right() const noexcept { return Formula(node_->rhs); }
std::uint32_t Formula::id() const noexcept { return node_->id; }
std::size_t Formula::size() const noexcept { return node_->size; }

Formula dual(Formula f) {
  switch (f.connective()) {
    case Connective::Atom: return Formula::neg_atom(f.name());
    case Connective::NegAtom: return Formula::atom(f.name());
    case Connective::Tensor: return Formula::par(dual(f.left()), dual(f.right()));
    case Connective::Par: return Formula::tensor(dual(f.left()), dual(f.right()));
    case Connective::One: return Formula::bot();
    case Connective::Bot: return Formula::one();
    case Connective::Plus: return Formula::with(dual(f.left()), dual(f.right()));
    case Connective::With: return Formula::plus(dual(f.left()), dual(f.right()));
    case Connective::Zero: return Formula::top();
    case Connective::Top: return Formula::zero();
    case Connective::Bang: return Formula::qm(f.label(), dual(f.body()));
    case Connective::Qm: return Formula::bang(f.label(), dual(f.body()));
  }
  throw std::logic_error("dual: bad connective");
}

Polarity polarity(Formula f) noexcept {
  switch (f.connective()) {
    case Connective::Atom:
    case Connective::Tensor:
    case Connective::One:
    case Connective::Plus:
    case Connective::Zero:
    case Connective::Bang:
      return Polarity::Positive;
    default:
      return Polarity::Negative;
  }
}

std::vector<std::uint32_t> canonical_key(const Context& ctx) {
  std::vector<std::uint32_t> key;
  key.reserve(ctx.size());
  for (Formula f : ctx) key.push_back(f.id());
  std::sort(key.begin(), key.end());
  return key;
}

bool multiset_equal(const Context& a, const Context& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

}  // namespace sel

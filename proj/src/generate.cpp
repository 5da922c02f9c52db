#include "sel/generate.hpp"

#include <algorithm>

namespace sel {
namespace {

std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[below(rng, xs.size())];
}

Formula leaf(Rng& rng, const FormulaShape& shape, bool allow_unit) {
  const std::size_t k = below(rng, allow_unit ? 6 : 2);
  switch (k) {
    case 0: return Formula::atom(pick(rng, shape.atoms));
    case 1: return Formula::neg_atom(pick(rng, shape.atoms));
    case 2: return Formula::one();
    case 3: return Formula::bot();
    case 4: return Formula::zero();
    default: return Formula::top();
  }
}

Formula grow(Rng& rng, const FormulaShape& shape, std::size_t budget) {
  if (budget == 0 || below(rng, 4) == 0) return leaf(rng, shape, budget > 0);
  const std::size_t k = below(rng, 6);
  if (k >= 4) {
    const Formula body = grow(rng, shape, budget - 1);
    const std::string& u = pick(rng, shape.labels);
    return k == 4 ? Formula::bang(u, body) : Formula::qm(u, body);
  }
  const std::size_t split = below(rng, budget);
  const Formula l = grow(rng, shape, split);
  const Formula r = grow(rng, shape, budget - 1 - split);
  switch (k) {
    case 0: return Formula::tensor(l, r);
    case 1: return Formula::par(l, r);
    case 2: return Formula::plus(l, r);
    default: return Formula::with(l, r);
  }
}

}  // namespace

std::size_t connective_count(Formula f) {
  switch (f.connective()) {
    case Connective::Atom:
    case Connective::NegAtom:
      return 0;
    case Connective::One:
    case Connective::Bot:
    case Connective::Zero:
    case Connective::Top:
      return 1;
    case Connective::Bang:
    case Connective::Qm:
      return 1 + connective_count(f.body());
    default:
      return 1 + connective_count(f.left()) + connective_count(f.right());
  }
}

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  return grow(rng, shape, below(rng, shape.max_connectives + 1));
}

Sequent random_sequent(Rng& rng, const FormulaShape& shape) {
  Sequent s;
  if (below(rng, 3) == 0) {
    FormulaShape half = shape;
    half.max_connectives = shape.max_connectives / 2;
    const Formula a = random_formula(rng, half);
    s.context = {a, dual(a)};
    return s;
  }
  std::size_t budget = below(rng, shape.max_connectives + 1);
  const std::size_t n = 1 + below(rng, 3);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t mine = i + 1 == n ? budget : below(rng, budget + 1);
    budget -= mine;
    s.context.push_back(grow(rng, shape, mine));
  }
  return s;
}

Signature random_signature(Rng& rng, std::size_t max_labels) {
  static const std::vector<std::string> names = {"inf", "a", "b", "c", "lin", "u", "v", "w1", "x_2", "top0"};
  std::vector<std::string> pool = names;
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t n = 1 + below(rng, std::min(max_labels, pool.size()));
  std::vector<std::string> labels(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));

  std::vector<LabelPair> base;
  const std::size_t edges = below(rng, n * 2 + 1);
  for (std::size_t i = 0; i < edges; ++i) base.emplace_back(pick(rng, labels), pick(rng, labels));

  const Signature plain = Signature::close(labels, {}, base);
  std::vector<std::string> unbounded;
  for (const auto& u : labels) {
    if (below(rng, 3) != 0) continue;
    for (const auto& v : labels)
      if (plain.leq(u, v) && std::find(unbounded.begin(), unbounded.end(), v) == unbounded.end())
        unbounded.push_back(v);
  }
  return Signature::close(labels, unbounded, base);
}

Machine random_machine(Rng& rng, std::size_t max_states) {
  Machine m;
  const std::size_t n = 1 + below(rng, max_states);
  for (std::size_t i = 0; i < n; ++i) m.states.push_back("q" + std::to_string(i));
  m.states.push_back("star");
  m.halting = "star";

  auto other = [&](const std::string& q) {
    while (true) {
      const std::string& r = pick(rng, m.states);
      if (r != q) return r;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& q = m.states[i];
    switch (below(rng, 6)) {
      case 0:
        break;
      case 1:
        m.entries.push_back({q, Instruction::Halt, ""});
        break;
      case 2:
        m.entries.push_back({q, below(rng, 2) ? Instruction::IncrA : Instruction::IncrB, other(q)});
        break;
      case 3:
        m.entries.push_back({q, Instruction::DecrA, other(q)});
        if (below(rng, 4)) m.entries.push_back({q, Instruction::IszA, other(q)});
        break;
      case 4:
        m.entries.push_back({q, Instruction::DecrB, other(q)});
        if (below(rng, 4)) m.entries.push_back({q, Instruction::IszB, other(q)});
        break;
      default:
        // A lone zero test; the machine is stuck when it fails.
        m.entries.push_back({q, below(rng, 2) ? Instruction::IszA : Instruction::IszB, other(q)});
        break;
    }
  }
  const std::size_t inits = 1 + below(rng, 2);
  for (std::size_t i = 0; i < inits; ++i)
    m.inits.push_back({m.states[below(rng, n)], below(rng, 4), below(rng, 3)});
  return m;
}

}  // namespace sel

#include "sel/syntax.hpp"

#include <sstream>

#include "scanner.hpp"

namespace sel {

using detail::Scanner;

bool is_identifier(std::string_view text) noexcept {
  if (text.empty() || !Scanner::ident_start(text.front())) return false;
  for (char c : text)
    if (!Scanner::ident_char(c)) return false;
  return true;
}

bool is_atom_name(std::string_view text) noexcept {
  return is_identifier(text) && text != "bot" && text != "top";
}

namespace {

Formula parse_formula_at(Scanner& in) {
  in.skip_space();
  const char c = in.peek();
  if (c == '(') {
    in.get();
    Formula lhs = parse_formula_at(in);
    in.skip_space();
    const char op = in.peek();
    if (op != '*' && op != '|' && op != '+' && op != '&') in.fail("expected binary connective");
    in.get();
    Formula rhs = parse_formula_at(in);
    in.skip_space();
    in.expect(")");
    switch (op) {
      case '*': return Formula::tensor(lhs, rhs);
      case '|': return Formula::par(lhs, rhs);
      case '+': return Formula::plus(lhs, rhs);
      default: return Formula::with(lhs, rhs);
    }
  }
  if (c == '~') {
    in.get();
    std::string name = in.identifier("atom after '~'");
    if (!is_atom_name(name)) in.fail("'" + name + "' is a reserved word");
    return Formula::neg_atom(name);
  }
  if (c == '!' || c == '?') {
    in.get();
    std::string label = in.identifier("subexponential label");
    Formula body = parse_formula_at(in);
    return c == '!' ? Formula::bang(label, body) : Formula::qm(label, body);
  }
  if (c == '1') {
    in.get();
    return Formula::one();
  }
  if (c == '0') {
    in.get();
    return Formula::zero();
  }
  if (Scanner::ident_start(c)) {
    std::string name = in.identifier("formula");
    if (name == "bot") return Formula::bot();
    if (name == "top") return Formula::top();
    return Formula::atom(name);
  }
  if (in.at_end()) in.fail("unexpected end of input");
  in.fail(std::string("unexpected character '") + c + "'");
}

void print(Formula f, std::string& out) {
  auto binary = [&](const char* op) {
    out.push_back('(');
    print(f.left(), out);
    out.append(op);
    print(f.right(), out);
    out.push_back(')');
  };
  switch (f.connective()) {
    case Connective::Atom: out += f.name(); break;
    case Connective::NegAtom: out += '~' + f.name(); break;
    case Connective::Tensor: binary(" * "); break;
    case Connective::Par: binary(" | "); break;
    case Connective::Plus: binary(" + "); break;
    case Connective::With: binary(" & "); break;
    case Connective::One: out += '1'; break;
    case Connective::Bot: out += "bot"; break;
    case Connective::Zero: out += '0'; break;
    case Connective::Top: out += "top"; break;
    case Connective::Bang:
    case Connective::Qm:
      out += f.is(Connective::Bang) ? '!' : '?';
      out += f.label();
      out += ' ';
      print(f.body(), out);
      break;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Scanner in(text);
  Formula f = parse_formula_at(in);
  in.skip_space();
  if (!in.at_end()) in.fail("trailing input after formula");
  return f;
}

std::string to_string(Formula f) {
  std::string out;
  print(f, out);
  return out;
}

Sequent parse_sequent(std::string_view text) {
  Scanner in(text);
  Sequent s;
  in.skip_space();
  if (in.accept("|-")) {
    s.context.push_back(parse_formula_at(in));
    in.skip_space();
    while (in.accept(",")) {
      s.context.push_back(parse_formula_at(in));
      in.skip_space();
    }
    if (!in.at_end()) in.fail("expected ',' or end of sequent");
  } else {
    while (!in.at_end()) {
      s.context.push_back(parse_formula_at(in));
      in.skip_space(false);
      if (!in.at_end() && in.peek() != '\n') in.fail("expected one formula per line");
      in.skip_space();
    }
  }
  if (s.context.empty()) in.fail("empty sequent");
  return s;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (Formula f : s.context) {
    print(f, out);
    out.push_back('\n');
  }
  return out;
}

std::string to_inline_string(const Context& ctx) {
  std::string out = "|-";
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    out += i == 0 ? " " : ", ";
    print(ctx[i], out);
  }
  return out;
}

Signature parse_signature(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::string> unbounded;
  std::vector<LabelPair> order;
  bool seen_labels = false, seen_unbounded = false, seen_order = false;

  Scanner in(text);
  while (true) {
    in.skip_space();
    if (in.at_end()) break;
    const int line = in.line(), column = in.column();
    std::string key = in.identifier("'labels:', 'unbounded:' or 'order:'");
    in.skip_space(false);
    in.expect(":");
    in.skip_space(false);
    auto once = [&](bool& seen) {
      if (seen) throw SyntaxError(line, column, "duplicate '" + key + ":' line");
      seen = true;
    };
    if (key == "labels" || key == "unbounded") {
      auto& dest = key == "labels" ? labels : unbounded;
      once(key == "labels" ? seen_labels : seen_unbounded);
      while (!in.at_end() && in.peek() != '\n') {
        dest.push_back(in.identifier("label"));
        in.skip_space(false);
      }
    } else if (key == "order") {
      once(seen_order);
      while (!in.at_end() && in.peek() != '\n') {
        std::string u = in.identifier("label");
        in.skip_space(false);
        in.expect("<=");
        in.skip_space(false);
        std::string v = in.identifier("label");
        order.emplace_back(std::move(u), std::move(v));
        in.skip_space(false);
        if (!in.accept(",")) break;
        in.skip_space(false);
      }
      if (!in.at_end() && in.peek() != '\n') in.fail("expected ',' or end of line");
    } else {
      throw SyntaxError(line, column, "unknown key '" + key + "'");
    }
  }
  if (!seen_labels) throw SyntaxError(1, 1, "missing 'labels:' line");
  return Signature::close(std::move(labels), unbounded, order);
}

std::string to_string(const Signature& sig) {
  std::ostringstream out;
  out << "labels:";
  for (const auto& l : sig.labels()) out << ' ' << l;
  out << "\nunbounded:";
  for (const auto& l : sig.unbounded()) out << ' ' << l;
  out << "\norder:";
  bool first = true;
  for (const auto& [u, v] : sig.order()) {
    if (u == v) continue;
    out << (first ? " " : ", ") << u << " <= " << v;
    first = false;
  }
  out << '\n';
  return out.str();
}

}  // namespace sel

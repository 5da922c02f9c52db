// Minimal s-expression reader/writer for proof certificates.

#ifndef SEL_SRC_SEXPR_HPP_
#define SEL_SRC_SEXPR_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scanner.hpp"

namespace sel::detail {

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  int line = 1;
  int column = 1;

  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(line, column, message); }

  const std::string& head() const {
    if (!is_list || items.empty() || items.front().is_list) fail("expected (rule ...)");
    return items.front().atom;
  }

  std::size_t as_index() const {
    if (is_list || atom.empty() || atom.size() > 9) fail("expected a position");
    std::size_t v = 0;
    for (char c : atom) {
      if (c < '0' || c > '9') fail("expected a position");
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  }

  // (tag i j k ...) -> [i, j, k]
  std::vector<std::size_t> as_index_list(std::string_view tag) const {
    if (!is_list || items.empty() || items.front().is_list || items.front().atom != tag)
      fail("expected (" + std::string(tag) + " ...)");
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < items.size(); ++i) out.push_back(items[i].as_index());
    return out;
  }
};

inline SExpr read_sexpr(Scanner& in) {
  in.skip_space();
  SExpr e;
  e.line = in.line();
  e.column = in.column();
  if (in.at_end()) in.fail("unexpected end of input");
  if (in.peek() == ')') in.fail("unexpected ')'");
  if (in.peek() == '(') {
    in.get();
    e.is_list = true;
    while (true) {
      in.skip_space();
      if (in.at_end()) in.fail("unterminated list");
      if (in.peek() == ')') {
        in.get();
        break;
      }
      e.items.push_back(read_sexpr(in));
    }
    return e;
  }
  e.atom = in.word();
  if (e.atom.empty()) in.fail("expected atom");
  return e;
}

inline SExpr parse_single_sexpr(std::string_view text) {
  Scanner in(text);
  in.semicolon_comments = true;
  SExpr e = read_sexpr(in);
  in.skip_space();
  if (!in.at_end()) in.fail("trailing input after certificate");
  return e;
}

inline std::string index_list(std::string_view tag, const std::vector<std::size_t>& xs) {
  std::string out = "(" + std::string(tag);
  for (std::size_t x : xs) out += " " + std::to_string(x);
  return out + ")";
}

}  // namespace sel::detail

#endif  // SEL_SRC_SEXPR_HPP_

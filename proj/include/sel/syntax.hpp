// Text formats for formulas, sequents and signatures.
//
//   formula  ::= atom | '~' atom | '1' | 'bot' | '0' | 'top'
//              | '(' formula op formula ')'        op in  *  |  +  &
//              | '!' label formula | '?' label formula
//   atom, label ::= [a-z][a-zA-Z0-9_]*           (atoms exclude bot, top)
//   sequent  ::= '|-' formula (',' formula)*  |  one formula per line
//   signature file:
//     labels: inf a b
//     unbounded: inf
//     order: a <= inf, b <= inf
//
// '#' starts a comment that runs to the end of the line.

#ifndef SEL_SYNTAX_HPP_
#define SEL_SYNTAX_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "sel/formula.hpp"
#include "sel/signature.hpp"

namespace sel {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

bool is_identifier(std::string_view text) noexcept;
bool is_atom_name(std::string_view text) noexcept;

Formula parse_formula(std::string_view text);
std::string to_string(Formula f);

Sequent parse_sequent(std::string_view text);
// One formula per line.
std::string to_string(const Sequent& s);
// Single line: "|- A, B, C".
std::string to_inline_string(const Context& ctx);

Signature parse_signature(std::string_view text);
std::string to_string(const Signature& sig);

}  // namespace sel

#endif  // SEL_SYNTAX_HPP_

// Character cursor with line/column tracking shared by the text parsers.

#ifndef SEL_SRC_SCANNER_HPP_
#define SEL_SRC_SCANNER_HPP_

#include <cctype>
#include <string>
#include <string_view>

#include "sel/syntax.hpp"

namespace sel::detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text, int line = 1, int column = 1)
      : text_(text), line_(line), column_(column) {}

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }
  bool starts_with(std::string_view s) const noexcept { return text_.substr(pos_).starts_with(s); }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

  char get() noexcept {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  // Skips whitespace and '#' / ';' comments (the latter only when enabled).
  void skip_space(bool newlines = true) {
    while (!at_end()) {
      char c = peek();
      if (c == '#' || (c == ';' && semicolon_comments)) {
        while (!at_end() && peek() != '\n') get();
      } else if (c == '\n' ? newlines : std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    for (std::size_t i = 0; i < s.size(); ++i) get();
    return true;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }

  static bool ident_start(char c) noexcept { return c >= 'a' && c <= 'z'; }
  static bool ident_char(char c) noexcept {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier(const char* what) {
    if (!ident_start(peek())) fail(std::string("expected ") + what);
    std::string out;
    while (!at_end() && ident_char(peek())) out.push_back(get());
    return out;
  }

  std::string word() {
    std::string out;
    while (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '(' &&
           peek() != ')' && peek() != '#' && !(semicolon_comments && peek() == ';'))
      out.push_back(get());
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(line_, column_, message);
  }

  bool semicolon_comments = false;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

}  // namespace sel::detail

#endif  // SEL_SRC_SCANNER_HPP_

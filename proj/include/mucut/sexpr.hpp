#ifndef MUCUT_SEXPR_HPP
#define MUCUT_SEXPR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mucut::sexpr {

/// Minimal s-expression tree: symbols, double-quoted strings, and lists.
struct Expr {
  enum class Kind { Symbol, String, List };
  Kind kind = Kind::List;
  std::string text;            // Symbol/String payload
  std::vector<Expr> items;     // List
  std::size_t position = 0;    // byte offset of the first character

  bool isSymbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
  bool isList() const { return kind == Kind::List; }
  /// First item of a list when it is a symbol, empty otherwise.
  std::string_view head() const;
};

/// Parses exactly one expression; ';' starts a line comment.
Expr parse(std::string_view text);
std::vector<Expr> parseAll(std::string_view text);

std::string quote(std::string_view s);

}  // namespace mucut::sexpr

#endif  // MUCUT_SEXPR_HPP

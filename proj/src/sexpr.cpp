#include "mucut/sexpr.hpp"

#include <cctype>

#include "mucut/syntax.hpp"

namespace mucut::sexpr {

std::string_view Expr::head() const {
  if (kind != Kind::List || items.empty() || items.front().kind != Kind::Symbol) return {};
  return items.front().text;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view t) : text_(t) {}

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool atEnd() {
    skip();
    return pos_ >= text_.size();
  }

  Expr read() {
    skip();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    Expr e;
    e.position = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      e.kind = Expr::Kind::List;
      while (true) {
        skip();
        if (pos_ >= text_.size()) throw ParseError(e.position, "unclosed '('");
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == ')') throw ParseError(pos_, "unexpected ')'");
    if (c == '"') {
      ++pos_;
      e.kind = Expr::Kind::String;
      while (true) {
        if (pos_ >= text_.size()) throw ParseError(e.position, "unterminated string");
        char d = text_[pos_++];
        if (d == '"') return e;
        if (d == '\\') {
          if (pos_ >= text_.size()) throw ParseError(pos_, "dangling escape");
          d = text_[pos_++];
        }
        e.text += d;
      }
    }
    e.kind = Expr::Kind::Symbol;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == '"' || d == ';') break;
      e.text += d;
      ++pos_;
    }
    return e;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) {
  Reader r(text);
  Expr e = r.read();
  if (!r.atEnd()) throw ParseError(r.pos(), "trailing input after expression");
  return e;
}

std::vector<Expr> parseAll(std::string_view text) {
  Reader r(text);
  std::vector<Expr> out;
  while (!r.atEnd()) out.push_back(r.read());
  return out;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace mucut::sexpr

#include "mucut/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace mucut {

struct Form::Node {
  Op op;
  unsigned index = 0;
  Form left{std::shared_ptr<const Node>()};   // empty for atoms and var
  Form right{std::shared_ptr<const Node>()};  // binary only
  std::size_t size = 1;
  unsigned level = 0;
  bool freeVar = false;
  bool nu = false;
  bool nubar = false;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool isUnary(Op op) { return op == Op::Box || op == Op::Diamond; }
bool isBinary(Op op) { return op == Op::And || op == Op::Or; }
bool isBinderOp(Op op) { return op == Op::Mu || op == Op::Nu || op == Op::NuBar; }

}  // namespace

Form::Form() : Form(atom(0)) {}

Form Form::make(Op op, unsigned index, Form left, Form right) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->index = index;
  n->hash = mix(static_cast<std::size_t>(op), index);
  if (op == Op::Var) n->freeVar = true;
  if (isUnary(op) || isBinderOp(op) || isBinary(op)) {
    n->size += left.size();
    n->level = left.level();
    n->freeVar = left.hasFreeVar();
    n->nu = left.hasNu();
    n->nubar = left.hasNuBar();
    n->hash = mix(n->hash, left.hash());
    n->left = std::move(left);
  }
  if (isBinary(op)) {
    n->size += right.size();
    n->level = std::max(n->level, right.level());
    n->freeVar = n->freeVar || right.hasFreeVar();
    n->nu = n->nu || right.hasNu();
    n->nubar = n->nubar || right.hasNuBar();
    n->hash = mix(n->hash, right.hash());
    n->right = std::move(right);
  }
  if (isBinderOp(op)) {
    n->level += 1;
    n->freeVar = false;
    if (op == Op::Nu) n->nu = true;
    if (op == Op::NuBar) n->nubar = true;
  }
  return Form(std::shared_ptr<const Node>(std::move(n)));
}

// Leaves are built directly so that the default constructor does not recurse.
Form Form::atom(unsigned index) {
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->index = index;
  n->hash = mix(static_cast<std::size_t>(Op::Atom), index);
  return Form(std::shared_ptr<const Node>(std::move(n)));
}

Form Form::negAtom(unsigned index) {
  auto n = std::make_shared<Node>();
  n->op = Op::NegAtom;
  n->index = index;
  n->hash = mix(static_cast<std::size_t>(Op::NegAtom), index);
  return Form(std::shared_ptr<const Node>(std::move(n)));
}

Form Form::var() {
  static const Form x = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->freeVar = true;
    n->hash = mix(static_cast<std::size_t>(Op::Var), 0);
    return Form(std::shared_ptr<const Node>(std::move(n)));
  }();
  return x;
}

Form Form::conj(Form l, Form r) { return make(Op::And, 0, std::move(l), std::move(r)); }
Form Form::disj(Form l, Form r) { return make(Op::Or, 0, std::move(l), std::move(r)); }
Form Form::box(Form b) { return make(Op::Box, 0, std::move(b), Form(std::shared_ptr<const Node>())); }
Form Form::diamond(Form b) { return make(Op::Diamond, 0, std::move(b), Form(std::shared_ptr<const Node>())); }
Form Form::mu(Form b) { return make(Op::Mu, 0, std::move(b), Form(std::shared_ptr<const Node>())); }
Form Form::nu(Form b) { return make(Op::Nu, 0, std::move(b), Form(std::shared_ptr<const Node>())); }
Form Form::nubar(Form b) { return make(Op::NuBar, 0, std::move(b), Form(std::shared_ptr<const Node>())); }

Op Form::op() const { return node_->op; }
unsigned Form::index() const { return node_->index; }
const Form& Form::left() const { return node_->left; }
const Form& Form::right() const { return node_->right; }
const Form& Form::body() const { return node_->left; }
std::size_t Form::size() const { return node_->size; }
unsigned Form::level() const { return node_->level; }
bool Form::hasFreeVar() const { return node_->freeVar; }
bool Form::hasNu() const { return node_->nu; }
bool Form::hasNuBar() const { return node_->nubar; }
std::size_t Form::hash() const { return node_->hash; }

bool operator==(const Form& a, const Form& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Form& a, const Form& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  switch (a.op()) {
    case Op::Atom:
    case Op::NegAtom:
      return a.index() <=> b.index();
    case Op::Var:
      return std::strong_ordering::equal;
    case Op::And:
    case Op::Or:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
    default:
      return a.body() <=> b.body();
  }
}

Form top() {
  static const Form t = Form::disj(Form::atom(0), Form::negAtom(0));
  return t;
}

Form negate(const Form& a) {
  switch (a.op()) {
    case Op::Atom: return Form::negAtom(a.index());
    case Op::NegAtom: return Form::atom(a.index());
    case Op::Var: return a;
    case Op::And: return Form::disj(negate(a.left()), negate(a.right()));
    case Op::Or: return Form::conj(negate(a.left()), negate(a.right()));
    case Op::Box: return Form::diamond(negate(a.body()));
    case Op::Diamond: return Form::box(negate(a.body()));
    case Op::Mu: return Form::nu(negate(a.body()));
    case Op::Nu: return Form::mu(negate(a.body()));
    case Op::NuBar: return Form::mu(negate(a.body()));
  }
  return a;
}

Form primedNegation(const Form& a) { return prime(negate(a)); }

namespace {

Form rebuild(const Form& a, const std::function<Form(const Form&)>& f) {
  switch (a.op()) {
    case Op::And: return Form::conj(f(a.left()), f(a.right()));
    case Op::Or: return Form::disj(f(a.left()), f(a.right()));
    case Op::Box: return Form::box(f(a.body()));
    case Op::Diamond: return Form::diamond(f(a.body()));
    case Op::Mu: return Form::mu(f(a.body()));
    case Op::Nu: return Form::nu(f(a.body()));
    case Op::NuBar: return Form::nubar(f(a.body()));
    default: return a;
  }
}

}  // namespace

Form substitute(const Form& a, const Form& b) {
  if (!a.hasFreeVar()) return a;
  if (a.op() == Op::Var) return b;
  // Binders have no free X, so the recursion never enters one.
  return rebuild(a, [&](const Form& c) { return substitute(c, b); });
}

Form iterate(const Form& a, const Form& b, std::size_t i) {
  Form r = b;
  for (std::size_t j = 0; j < i; ++j) r = substitute(a, r);
  return r;
}

unsigned level(const Form& a) { return a.level(); }

bool isKPositive(const Form& a, unsigned k) {
  if (!a.hasNuBar()) return true;
  if (a.op() == Op::NuBar && a.level() >= k) return false;
  switch (a.op()) {
    case Op::And:
    case Op::Or:
      return isKPositive(a.left(), k) && isKPositive(a.right(), k);
    default:
      return isKPositive(a.body(), k);
  }
}

Form prime(const Form& a) {
  if (!a.hasNu()) return a;
  if (a.op() == Op::Nu) return Form::nubar(prime(a.body()));
  return rebuild(a, [](const Form& c) { return prime(c); });
}

Form replaceSubform(const Form& a, const Form& target, const Form& b) {
  if (a.size() < target.size()) return a;
  if (a == target) return b;
  if (a.size() == target.size()) return a;
  return rebuild(a, [&](const Form& c) { return replaceSubform(c, target, b); });
}

// ---------------------------------------------------------------------------
// Concrete syntax

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view text) : text_(text) {}

  Form parseAll() {
    Form f = parse();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skipSpace();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool acceptWord(std::string_view word) {
    skipSpace();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  unsigned parseIndex() {
    std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 0xffffffffUL) fail("atom index too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected atom index");
    return static_cast<unsigned>(v);
  }

  Form binder(Form (*make)(Form)) {
    if (!acceptWord("X")) fail("expected bound variable X");
    expect(".");
    return make(parse());
  }

  Form parse() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("(")) {
      Form l = parse();
      if (accept("&")) {
        Form r = parse();
        expect(")");
        return Form::conj(std::move(l), std::move(r));
      }
      if (accept("|")) {
        Form r = parse();
        expect(")");
        return Form::disj(std::move(l), std::move(r));
      }
      expect(")");
      return l;
    }
    if (accept("[]")) return Form::box(parse());
    if (accept("<>")) return Form::diamond(parse());
    if (accept("~")) {
      if (!accept("p")) fail("expected atom after '~'");
      return Form::negAtom(parseIndex());
    }
    if (acceptWord("mu")) return binder(&Form::mu);
    if (acceptWord("nub")) return binder(&Form::nubar);
    if (acceptWord("nu")) return binder(&Form::nu);
    if (acceptWord("top")) return top();
    if (acceptWord("X")) return Form::var();
    if (text_[pos_] == 'p' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      return Form::atom(parseIndex());
    }
    fail("unknown token");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void printTo(const Form& a, std::string& out) {
  switch (a.op()) {
    case Op::Atom: out += "p" + std::to_string(a.index()); return;
    case Op::NegAtom: out += "~p" + std::to_string(a.index()); return;
    case Op::Var: out += "X"; return;
    case Op::And:
    case Op::Or:
      out += "(";
      printTo(a.left(), out);
      out += a.op() == Op::And ? " & " : " | ";
      printTo(a.right(), out);
      out += ")";
      return;
    case Op::Box: out += "[] "; break;
    case Op::Diamond: out += "<> "; break;
    case Op::Mu: out += "mu X . "; break;
    case Op::Nu: out += "nu X . "; break;
    case Op::NuBar: out += "nub X . "; break;
  }
  printTo(a.body(), out);
}

}  // namespace

Form parseForm(std::string_view text) { return FormParser(text).parseAll(); }

Form parseFormula(std::string_view text) {
  Form f = parseForm(text);
  if (f.hasFreeVar()) throw ParseError(0, "free variable X in formula");
  return f;
}

std::string print(const Form& a) {
  std::string out;
  printTo(a, out);
  return out;
}

}  // namespace mucut

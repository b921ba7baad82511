#ifndef MUCUT_SYNTAX_HPP
#define MUCUT_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mucut {

/// Constructors of the one-variable language, including the auxiliary
/// greatest fixed point NuBar used by the intermediate systems.
enum class Op : std::uint8_t { Atom, NegAtom, Var, And, Or, Box, Diamond, Mu, Nu, NuBar };

/// Immutable operator form. Copies share structure; equality and ordering
/// are structural (constructor tag, then atom index, then children).
class Form {
 public:
  Form();  // p0

  static Form atom(unsigned index);
  static Form negAtom(unsigned index);
  static Form var();
  static Form conj(Form left, Form right);
  static Form disj(Form left, Form right);
  static Form box(Form body);
  static Form diamond(Form body);
  static Form mu(Form body);
  static Form nu(Form body);
  static Form nubar(Form body);

  Op op() const;
  unsigned index() const;        // atoms only
  const Form& left() const;      // And/Or
  const Form& right() const;     // And/Or
  const Form& body() const;      // unary constructors and binders

  bool isAtomic() const { return op() == Op::Atom || op() == Op::NegAtom; }
  bool isBinder() const { return op() == Op::Mu || op() == Op::Nu || op() == Op::NuBar; }

  std::size_t size() const;
  unsigned level() const;
  bool hasFreeVar() const;
  bool hasNu() const;
  bool hasNuBar() const;
  std::size_t hash() const;

  bool isL0() const { return !hasNuBar(); }
  bool isFormula() const { return !hasFreeVar(); }

  friend bool operator==(const Form& a, const Form& b);
  friend std::strong_ordering operator<=>(const Form& a, const Form& b);

 private:
  struct Node;
  explicit Form(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Form make(Op op, unsigned index, Form left, Form right);

  std::shared_ptr<const Node> node_;
};

struct FormHash {
  std::size_t operator()(const Form& f) const { return f.hash(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The fixed tautology p0 | ~p0.
Form top();

/// Clause-wise negation. X is self-dual; NuBar negates to Mu, so the map is
/// an involution on L0 only.
Form negate(const Form& a);

/// prime(negate(a)): the (~A)' paired with A' by cuts and Omega rules.
Form primedNegation(const Form& a);

/// A(B): replaces the free occurrences of X in `a` by `b`.
Form substitute(const Form& a, const Form& b);

/// A^i(B).
Form iterate(const Form& a, const Form& b, std::size_t i);

unsigned level(const Form& a);
bool isKPositive(const Form& a, unsigned k);

/// Replaces every nu binder by nubar.
Form prime(const Form& a);

/// Replaces every occurrence of the closed subform `target` by `b`,
/// including occurrences under binders.
Form replaceSubform(const Form& a, const Form& target, const Form& b);

/// Parses the concrete grammar (p<i>, ~p<i>, X, (F & F), (F | F), [] F,
/// <> F, mu X . F, nu X . F, nub X . F, top).
Form parseForm(std::string_view text);
/// As parseForm, but rejects free occurrences of X.
Form parseFormula(std::string_view text);

std::string print(const Form& a);

}  // namespace mucut

#endif  // MUCUT_SYNTAX_HPP

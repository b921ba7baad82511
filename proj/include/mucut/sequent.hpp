#ifndef MUCUT_SEQUENT_HPP
#define MUCUT_SEQUENT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "mucut/syntax.hpp"

namespace mucut {

/// Finite set of formulas kept sorted and duplicate-free.
class Sequent {
 public:
  using const_iterator = std::vector<Form>::const_iterator;

  Sequent() = default;
  Sequent(std::initializer_list<Form> forms);
  explicit Sequent(std::vector<Form> forms);

  bool contains(const Form& f) const;
  bool empty() const { return forms_.empty(); }
  std::size_t size() const { return forms_.size(); }
  const std::vector<Form>& forms() const { return forms_; }
  const_iterator begin() const { return forms_.begin(); }
  const_iterator end() const { return forms_.end(); }

  Sequent with(const Form& f) const;
  Sequent without(const Form& f) const;
  bool subsetOf(const Sequent& other) const;

  friend Sequent operator|(const Sequent& a, const Sequent& b);  // union
  friend Sequent operator-(const Sequent& a, const Sequent& b);  // difference
  friend bool operator==(const Sequent&, const Sequent&) = default;

 private:
  std::vector<Form> forms_;
};

unsigned level(const Sequent& s);
bool isKPositive(const Sequent& s, unsigned k);
bool isL0(const Sequent& s);

/// Sigma[target := b] applied to every member.
Sequent replaceFixpoint(const Sequent& s, const Form& target, const Form& b);

/// `{F1, F2}` in canonical order.
std::string print(const Sequent& s);

}  // namespace mucut

#endif  // MUCUT_SEQUENT_HPP

#include "mucut/sequent.hpp"

#include <algorithm>
#include <iterator>

namespace mucut {

Sequent::Sequent(std::initializer_list<Form> forms) : Sequent(std::vector<Form>(forms)) {}

Sequent::Sequent(std::vector<Form> forms) : forms_(std::move(forms)) {
  std::sort(forms_.begin(), forms_.end());
  forms_.erase(std::unique(forms_.begin(), forms_.end()), forms_.end());
}

bool Sequent::contains(const Form& f) const {
  return std::binary_search(forms_.begin(), forms_.end(), f);
}

Sequent Sequent::with(const Form& f) const {
  auto it = std::lower_bound(forms_.begin(), forms_.end(), f);
  if (it != forms_.end() && *it == f) return *this;
  Sequent r = *this;
  r.forms_.insert(r.forms_.begin() + (it - forms_.begin()), f);
  return r;
}

Sequent Sequent::without(const Form& f) const {
  auto it = std::lower_bound(forms_.begin(), forms_.end(), f);
  if (it == forms_.end() || !(*it == f)) return *this;
  Sequent r = *this;
  r.forms_.erase(r.forms_.begin() + (it - forms_.begin()));
  return r;
}

bool Sequent::subsetOf(const Sequent& other) const {
  return std::includes(other.forms_.begin(), other.forms_.end(), forms_.begin(), forms_.end());
}

Sequent operator|(const Sequent& a, const Sequent& b) {
  Sequent r;
  r.forms_.reserve(a.size() + b.size());
  std::set_union(a.forms_.begin(), a.forms_.end(), b.forms_.begin(), b.forms_.end(),
                 std::back_inserter(r.forms_));
  return r;
}

Sequent operator-(const Sequent& a, const Sequent& b) {
  Sequent r;
  std::set_difference(a.forms_.begin(), a.forms_.end(), b.forms_.begin(), b.forms_.end(),
                      std::back_inserter(r.forms_));
  return r;
}

unsigned level(const Sequent& s) {
  unsigned l = 0;
  for (const auto& f : s) l = std::max(l, f.level());
  return l;
}

bool isKPositive(const Sequent& s, unsigned k) {
  return std::all_of(s.begin(), s.end(), [k](const Form& f) { return isKPositive(f, k); });
}

bool isL0(const Sequent& s) {
  return std::all_of(s.begin(), s.end(), [](const Form& f) { return f.isL0(); });
}

Sequent replaceFixpoint(const Sequent& s, const Form& target, const Form& b) {
  std::vector<Form> out;
  out.reserve(s.size());
  for (const auto& f : s) out.push_back(replaceSubform(f, target, b));
  return Sequent(std::move(out));
}

std::string print(const Sequent& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& f : s) {
    if (!first) out += ", ";
    first = false;
    out += print(f);
  }
  return out + "}";
}

}  // namespace mucut

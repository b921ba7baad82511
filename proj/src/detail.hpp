// Internal helpers shared by the proof transformations.
#ifndef MUCUT_SRC_DETAIL_HPP
#define MUCUT_SRC_DETAIL_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "mucut/proof.hpp"

namespace mucut::detail {

/// Formulas a rule consumes in its j-th finite premise (the "actives").
/// Cut actives are read off the premise itself.
inline Sequent activesOf(const Proof& d, std::size_t j) {
  const RuleTag& t = d.tag();
  switch (t.rule) {
    case Rule::Or: return {t.principal.left(), t.principal.right()};
    case Rule::And: return {j == 0 ? t.principal.left() : t.principal.right()};
    case Rule::Clo: return {substitute(t.principal.body(), t.principal)};
    case Rule::Box: return {t.principal.body()};
    case Rule::OmegaBar: return {t.principal};
    case Rule::Cut: {
      const Form pos = prime(t.principal);
      const Form neg = primedNegation(t.principal);
      const Sequent& p = d.premises().at(j).conclusion();
      Sequent out;
      if (p.contains(pos) && !d.conclusion().contains(pos)) out = out.with(pos);
      if (p.contains(neg) && !d.conclusion().contains(neg)) out = out.with(neg);
      if (out.empty()) out = Sequent{p.contains(pos) ? pos : neg};
      return out;
    }
    case Rule::Ind: return {negate(substitute(t.principal.body(), t.aux)), t.aux};
    default: return {};
  }
}

/// The i-th premise active of a (nu) node on nu X.A: A^i(top).
inline Form nuActive(const Form& nuForm, std::size_t i) { return iterate(nuForm.body(), top(), i); }

/// The formula an Omega node introduces.
inline Form omegaPrincipal(const RuleTag& t) { return primedNegation(t.principal); }

/// x_0 = first, x_{i+1} = step(i, x_i), computed incrementally and cached.
class ProofChain {
 public:
  using Step = std::function<Proof(std::size_t, const Proof&)>;
  ProofChain(std::function<Proof()> first, Step step) : s_(std::make_shared<State>()) {
    s_->first = std::move(first);
    s_->step = std::move(step);
  }
  Proof operator()(std::size_t i) const {
    std::lock_guard lock(s_->mutex);
    if (s_->items.empty()) s_->items.push_back(s_->first());
    while (s_->items.size() <= i) {
      const std::size_t n = s_->items.size() - 1;
      Proof prev = s_->items.back();
      s_->items.push_back(s_->step(n, prev));
    }
    return s_->items[i];
  }

 private:
  struct State {
    std::recursive_mutex mutex;
    std::function<Proof()> first;
    Step step;
    std::vector<Proof> items;
  };
  std::shared_ptr<State> s_;
};

}  // namespace mucut::detail

#endif  // MUCUT_SRC_DETAIL_HPP

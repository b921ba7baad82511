#ifndef MUCUT_OBSERVE_HPP
#define MUCUT_OBSERVE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mucut/proof.hpp"

namespace mucut {

/// Finite window onto a possibly infinitary proof.
///
/// Children are laid out as: finite premises first (for OmegaBar, the first
/// premise), then one child per sampled index (Nu) or per probe (Omega,
/// OmegaBar), in the order of `sampledIndices` / `probesUsed`.
struct Observation {
  Sequent conclusion;
  RuleTag tag;
  std::vector<Observation> children;
  bool truncated = false;
  std::vector<std::size_t> sampledIndices;
  std::vector<Sequent> probesUsed;
  /// Set on leaves whose evaluation threw; prefixed "fuel exhausted: ",
  /// "invariant failure: " or "error: ".
  std::optional<std::string> error;

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct ObserveOptions {
  std::size_t depth = 6;
  std::vector<std::size_t> samples{0, 1, 2};
  std::size_t probeBudget = 1;
};

Observation observe(const Proof& p, std::size_t depth, const std::vector<std::size_t>& samples,
                    std::size_t probeBudget);
inline Observation observe(const Proof& p, const ObserveOptions& o) {
  return observe(p, o.depth, o.samples, o.probeBudget);
}

/// Restriction of an observation to a smaller depth.
Observation truncate(const Observation& o, std::size_t depth);

/// Pre-order traversal; the callback receives the node and its depth.
void forEachNode(const Observation& o, const std::function<void(const Observation&, std::size_t)>& fn);

bool isCutFreeObserved(const Observation& o);
bool hasRuleObserved(const Observation& o, Rule r);
bool hasNuBarObserved(const Observation& o);
bool hasErrorObserved(const Observation& o);
std::size_t countNodes(const Observation& o);

}  // namespace mucut

#endif  // MUCUT_OBSERVE_HPP

#ifndef MUCUT_CHECKER_HPP
#define MUCUT_CHECKER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mucut/observe.hpp"
#include "mucut/proof.hpp"

namespace mucut {

struct Violation {
  std::string path;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckReport {
  bool ok = true;
  std::vector<Violation> violations;
  std::size_t nodesChecked = 0;
  std::size_t truncationPoints = 0;

  void add(std::string path, std::string message);
  void merge(const CheckReport& other);
};

/// Checks one rule instance. Finite premises are inspected directly; a Nu
/// family is evaluated at `samples` and an Omega family at the first
/// `probes` canonical probes. Returns the violated schema clauses.
std::vector<std::string> checkLocal(const Proof& node, const SystemId& system,
                                    const std::vector<std::size_t>& samples = {0},
                                    std::size_t probes = 1);

/// Exhaustive check of a proof without premise families.
CheckReport checkFinite(const Proof& p, const SystemId& system);

/// Local checks on every node reachable within `depth` rule applications.
CheckReport checkBounded(const Proof& p, const SystemId& system, std::size_t depth,
                         const std::vector<std::size_t>& samples, std::size_t probes);

/// Maximum level of all sequents of a finite proof.
unsigned levelBound(const Proof& p);

/// Every observed formula lies in the approximant closure of the endsequent
/// (subformulas, mu-unfoldings, nu-approximants up to the largest sampled
/// index), no nubar occurs, and no cut occurs.
CheckReport subformulaReport(const Observation& o);

std::string renderText(const CheckReport& r);
std::string renderSexpr(const CheckReport& r);

}  // namespace mucut

#endif  // MUCUT_CHECKER_HPP

#ifndef MUCUT_CUTELIM_HPP
#define MUCUT_CUTELIM_HPP

#include <cstddef>
#include <functional>
#include <string>

#include "mucut/proof.hpp"

namespace mucut {

using TraceSink = std::function<void(const std::string&)>;

/// Threads `extra` into every context of `d`: axiom contexts, the Sigma of
/// (box), and the context of every other rule (families pointwise).
Proof weaken(const Proof& d, const Sequent& extra);

/// weaken(d, target - concl(d)); requires concl(d) to be a subset of `target`.
Proof fit(const Proof& d, const Sequent& target);

/// Box node with the Sigma computed from the conclusion.
Proof makeBox(const Form& principal, const Proof& premise, const Sequent& conclusion);

/// Lexicographic (level, size) of a cut formula.
struct CutRank {
  unsigned level = 0;
  std::size_t size = 0;
  friend auto operator<=>(const CutRank&, const CutRank&) = default;
};
CutRank cutRank(const Form& cutFormula);

struct ElimOptions {
  std::size_t fuel = 100000;  // reduction steps per exposed node
  TraceSink trace;            // one `(step <path> <case> (<level> <size>))` line per reduction
};

/// One round of reduction at a Cut root whose premises are cut-free: the cut
/// is removed, pushed into the premises, split into cuts of smaller rank, or
/// (for a mu cut meeting an Omega_h node) replaced by an OmegaBar_h node.
/// Premise families of the result are reduced on demand.
Proof reduceHead(const Proof& d, const ElimOptions& opts = {});

/// Demand-driven cut elimination: every node of the result that is ever
/// exposed carries a non-Cut tag. Throws FuelExhausted when a single
/// exposure needs more than `opts.fuel` reduction steps.
Proof eliminate(const Proof& d, const ElimOptions& opts = {});

}  // namespace mucut

#endif  // MUCUT_CUTELIM_HPP

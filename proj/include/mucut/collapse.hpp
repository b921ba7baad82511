#ifndef MUCUT_COLLAPSE_HPP
#define MUCUT_COLLAPSE_HPP

#include <cstddef>
#include <string>

#include "mucut/cutelim.hpp"
#include "mucut/proof.hpp"

namespace mucut {

struct CollapseOptions {
  std::size_t fuel = 100000;  // node visits per exposed node
  TraceSink trace;            // `(collapse <path> omegabar <l>)` per eliminated OmegaBar node
};

/// Removes every OmegaBar_l node with l > h from a cut-free Omega proof whose
/// endsequent is (h+1)-positive: such a node becomes its family applied to
/// its own (recursively collapsed) first premise.
Proof collapse(const Proof& d, unsigned h, const CollapseOptions& opts = {});

/// Re-tags a collapsed Omega_0 proof as an S-infinity proof, rejecting (as
/// InvariantFailure, when the offending node is exposed) any node that is
/// not an S-infinity rule over L0 sequents.
Proof toSinf(const Proof& d);

struct PipelineOptions {
  std::size_t fuel = 100000;
  TraceSink trace;  // receives the cut-elimination and collapse traces
};

/// Intermediate stages of the pipeline.
struct PipelineResult {
  unsigned k = 0;
  Proof embedded;
  Proof eliminated;
  Proof collapsed;
  Proof sinf;
};

/// embed (empty selection, k = levelBound) -> eliminate -> collapse(0) -> toSinf.
/// Errors raised while building a stage carry the stage name as a prefix.
PipelineResult pipeline(const Proof& d, const PipelineOptions& opts = {});

}  // namespace mucut

#endif  // MUCUT_COLLAPSE_HPP

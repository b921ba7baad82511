#ifndef MUCUT_CORPUS_HPP
#define MUCUT_CORPUS_HPP

#include <string>
#include <vector>

#include "mucut/proof.hpp"

namespace mucut {

struct CorpusEntry {
  std::string name;
  std::string description;
  Proof proof;
};

/// The reference S-proofs E1..E4:
///   E1  {nu X.X, top} by (ind) with A = X, B = top;
///   E2  {top} by a cut on p1;
///   E3  {mu X.(p1 | X), nu X.(~p1 & X)} by the mu-axiom;
///   E4  {<>nu X.(~p1 & []X) | []top} by a level-2 cut against (ind), whose
///       positive side contains, under a box, a level-1 cut against (ind).
std::vector<CorpusEntry> corpus();

/// Looks up an entry by name (case-insensitive); throws PreconditionError.
Proof corpusProof(const std::string& name);

}  // namespace mucut

#endif  // MUCUT_CORPUS_HPP

#ifndef MUCUT_SERIALIZE_HPP
#define MUCUT_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "mucut/observe.hpp"
#include "mucut/proof.hpp"
#include "mucut/sexpr.hpp"

namespace mucut {

// Canonical s-expression forms:
//   proof        (rule <tag> (seq "F1" "F2" ...) <premise>...)
//   tag          (axiom "P") (axiommu "F") (or "F") (and "F") (box "F" (seq ...))
//                (clo "F") (ind "muF" "B") (cut "A") (nu "F") (omega h "F")
//                (omegabar h "F")
//   observation  like a proof, with (truncated) after the sequent and
//                children wrapped as (at i <obs>) for Nu samples and
//                (probe (seq ...) <obs>) for Omega probes; (error "msg") leaves.

std::string writeTag(const RuleTag& tag);
std::string writeSequent(const Sequent& s);

/// Finite proofs only; throws PreconditionError on premise families.
std::string writeProof(const Proof& p);
Proof readProof(std::string_view text);
Proof readProof(const sexpr::Expr& e);

RuleTag readTag(const sexpr::Expr& e);
Sequent readSequent(const sexpr::Expr& e);

std::string writeObservation(const Observation& o);

}  // namespace mucut

#endif  // MUCUT_SERIALIZE_HPP

#ifndef MUCUT_EMBED_HPP
#define MUCUT_EMBED_HPP

#include <utility>

#include "mucut/proof.hpp"

namespace mucut {

/// Gamma^sigma: primes exactly the members of `selection`.
Sequent applySigma(const Sequent& gamma, const Sequent& selection);

/// Cut-free Omega proofs of the basic identities. `mu` is an L0 formula mu X.A.
Proof identityMu(const Form& mu);        // { mu X.A, nu X.~A }
Proof identityMuPrimed(const Form& mu);  // { mu X.A, (nu X.~A)' }, an Omega_h node

/// Replaces the occurrence of a' (a an L0 formula) in the endsequent of `d`
/// by a. Returns `d` unchanged when a' is absent or a has no nu.
Proof deprime(const Proof& d, const Form& a);

/// From d proving {B, C} builds { (~A)(B), A(C) } (A an L0 operator form in X).
Proof monotone(const Proof& d, const Form& a, const Form& b, const Form& c);
/// As monotone, with the primed operator: { (~A)(B), A'(C) }.
Proof monotonePrimed(const Proof& d, const Form& a, const Form& b, const Form& c);

/// Substitution into a context. `d` proves Delta, Sigma1, Sigma2 where every
/// member of Sigma1 u Sigma2 is X-positive for M' = (mu X.A)'. With
///   asm1 proving { (~A(B))', B } and asm2 proving { (~A(B))', B' },
/// returns a proof of Delta, Sigma1[M' := B], Sigma2[M' := B'].
Proof substContext(const Proof& d, const Sequent& delta, const Sequent& sigma1, const Sequent& sigma2,
                   const Proof& asm1, const Proof& asm2, const Form& mu, const Form& b);

/// The two Omega_h proofs { (~mu X.A)', B } and { (~mu X.A)', B' } obtained
/// from asm1/asm2 as above (h = level of mu X.A).
std::pair<Proof, Proof> indToOmega(const Proof& asm1, const Proof& asm2, const Form& mu, const Form& b);

/// Embeds a finite S-proof of Gamma with level(Gamma) <= k into Omega_k as a
/// proof of Gamma^sigma, sigma = `selection` (a subset of Gamma).
Proof embed(const Proof& d, const Sequent& selection, unsigned k);

}  // namespace mucut

#endif  // MUCUT_EMBED_HPP

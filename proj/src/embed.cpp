#include "mucut/embed.hpp"

#include <map>

#include "detail.hpp"
#include "mucut/checker.hpp"
#include "mucut/cutelim.hpp"

namespace mucut {

using detail::activesOf;
using detail::nuActive;
using detail::omegaPrincipal;
using detail::ProofChain;

Sequent applySigma(const Sequent& gamma, const Sequent& selection) {
  if (!selection.subsetOf(gamma))
    throw PreconditionError("selection " + print(selection) + " is not a subset of " + print(gamma));
  std::vector<Form> out;
  for (const auto& f : gamma) out.push_back(selection.contains(f) ? prime(f) : f);
  return Sequent(std::move(out));
}

// ---------------------------------------------------------------------------
// identities and monotonicity

namespace {

Proof monotoneImpl(const Proof& d, const Form& a, const Form& b, const Form& c, bool primed);

/// { M, nu X.~A } with M = mu X.A, or M = mu X.A' when `primedMu`.
Proof identityGeneral(const Form& body, bool primedMu) {
  const Form m = Form::mu(primedMu ? prime(body) : body);
  const Form negBody = negate(body);
  const Form n = Form::nu(negBody);
  ProofChain chain([m] { return topProof({m}); },
                   [m, body, negBody, primedMu](std::size_t j, const Proof& prev) {
                     const Form nj = iterate(negBody, top(), j);
                     const Form next = substitute(negBody, nj);
                     const Form unfolded = substitute(m.body(), m);
                     Proof q = monotoneImpl(prev, body, nj, m, primedMu);
                     return Proof::make(RuleTag::clo(m), {next, m}, {fit(q, {next, unfolded})});
                   });
  return Proof::make(RuleTag::nu(n), {m, n}, OmegaFamily(chain));
}

/// { mu', nu' } for an L0 mu: the family hands its witness back.
Proof identityBothPrimed(const Form& mu) {
  const Form target = prime(mu);
  const Form principal = primedNegation(mu);
  const unsigned h = level(mu);
  return Proof::make(RuleTag::omega(h, target), {target, principal},
                     DeltaFamily(h, target, [target](const Sequent& delta, const Proof& w) {
                       return fit(w, delta.with(target));
                     }));
}

Proof monotoneImpl(const Proof& d, const Form& a, const Form& b, const Form& c, bool primed) {
  if (!a.isL0()) throw PreconditionError("monotone needs an L0 operator form, got " + print(a));
  const Form pa = primed ? prime(a) : a;
  const Form lhs = substitute(negate(a), b);
  const Form rhs = substitute(pa, c);
  switch (a.op()) {
    case Op::Var:
      return d;
    case Op::Atom:
    case Op::NegAtom:
      return axiomFor({lhs, rhs});
    case Op::And:
    case Op::Or: {
      const Proof q1 = monotoneImpl(d, a.left(), b, c, primed);
      const Proof q2 = monotoneImpl(d, a.right(), b, c, primed);
      const Form l1 = substitute(negate(a.left()), b), l2 = substitute(negate(a.right()), b);
      const Form r1 = rhs.left(), r2 = rhs.right();
      if (a.op() == Op::And) {
        // lhs = l1 | l2, rhs = r1 & r2
        const Proof o1 = Proof::make(RuleTag::orRule(lhs), {lhs, r1}, {fit(q1, {l1, l2, r1})});
        const Proof o2 = Proof::make(RuleTag::orRule(lhs), {lhs, r2}, {fit(q2, {l1, l2, r2})});
        return Proof::make(RuleTag::andRule(rhs), {lhs, rhs}, {o1, o2});
      }
      // lhs = l1 & l2, rhs = r1 | r2
      const Proof conj = Proof::make(RuleTag::andRule(lhs), {lhs, r1, r2},
                                     {fit(q1, {l1, r1, r2}), fit(q2, {l2, r1, r2})});
      return Proof::make(RuleTag::orRule(rhs), {lhs, rhs}, {conj});
    }
    case Op::Box:
      return makeBox(rhs, monotoneImpl(d, a.body(), b, c, primed), {lhs, rhs});
    case Op::Diamond:
      return makeBox(lhs, monotoneImpl(d, a.body(), b, c, primed), {lhs, rhs});
    case Op::Mu:
      // closed: { nu X.~A1, mu X.A1 } or { nu X.~A1, mu X.A1' }
      return identityGeneral(a.body(), primed);
    case Op::Nu:
      // closed: { mu X.~A1, nu X.A1 } or { mu X.~A1, (nu X.A1)' }
      return primed ? identityMuPrimed(negate(a)) : identityGeneral(negate(a.body()), false);
    case Op::NuBar:
      break;
  }
  throw PreconditionError("monotone needs an L0 operator form, got " + print(a));
}

}  // namespace

Proof identityMu(const Form& mu) {
  if (mu.op() != Op::Mu || !mu.isFormula() || !mu.isL0())
    throw PreconditionError("identityMu needs a closed L0 mu-formula, got " + print(mu));
  return identityGeneral(mu.body(), false);
}

Proof identityMuPrimed(const Form& mu) {
  if (mu.op() != Op::Mu || !mu.isFormula() || !mu.isL0())
    throw PreconditionError("identityMuPrimed needs a closed L0 mu-formula, got " + print(mu));
  const Form target = prime(mu);
  const Form principal = primedNegation(mu);
  const unsigned h = level(mu);
  return Proof::make(RuleTag::omega(h, target), {mu, principal},
                     DeltaFamily(h, target, [mu](const Sequent& delta, const Proof& w) {
                       return fit(deprime(w, mu), delta.with(mu));
                     }));
}

namespace {

void checkMonotoneInput(const Proof& d, const Form& b, const Form& c) {
  if (!(d.conclusion() == Sequent{b, c}))
    throw PreconditionError("monotone: proof of " + print(d.conclusion()) + " is not a proof of " +
                            print(Sequent{b, c}));
}

}  // namespace

Proof monotone(const Proof& d, const Form& a, const Form& b, const Form& c) {
  checkMonotoneInput(d, b, c);
  return monotoneImpl(d, a, b, c, false);
}

Proof monotonePrimed(const Proof& d, const Form& a, const Form& b, const Form& c) {
  checkMonotoneInput(d, b, c);
  return monotoneImpl(d, a, b, c, true);
}

// ---------------------------------------------------------------------------
// deprime

namespace {

Proof deprimeAt(const Proof& prem, const Sequent& actives, const Form& a, const Form& ap) {
  if (actives.contains(ap) || !prem.conclusion().contains(ap)) return weaken(prem, {a});
  return deprime(prem, a);
}

Proof deprimeIfPresent(const Proof& p, const Form& a) {
  return p.conclusion().contains(prime(a)) ? deprime(p, a) : p;
}

/// The Omega node whose principal is the primed nu being restored: rebuilt as
/// a (nu) node whose i-th premise is the family applied to the i-th approximant.
Proof deprimeOmegaPrincipal(const Proof& d, const Form& a, const Sequent& target) {
  const Form ap = prime(a);
  const Form body = a.body();
  const Form t = d.tag().principal;
  const Sequent gamma = d.conclusion().without(ap);
  const DeltaFamily fam = *d.deltaFamily();
  ProofChain witnesses([t] { return topProof({t}); },
                       [t, body](std::size_t j, const Proof& prev) {
                         const Form aj = iterate(body, top(), j);
                         const Form next = substitute(body, aj);
                         const Form unfolded = substitute(t.body(), t);
                         Proof q = monotonePrimed(prev, negate(body), aj, t);
                         return Proof::make(RuleTag::clo(t), {next, t}, {fit(q, {next, unfolded})});
                       });
  return Proof::make(RuleTag::nu(a), target, OmegaFamily([=](std::size_t i) {
                       if (i == 0) return fit(topProof(gamma), target.with(top()));
                       const Sequent delta{nuActive(a, i)};
                       Proof out = fam(delta, witnesses(i));
                       if (!delta.contains(ap)) out = deprimeIfPresent(out, a);
                       return fit(out, target | delta);
                     }));
}

}  // namespace

Proof deprime(const Proof& d, const Form& a) {
  if (!a.isL0() || !a.isFormula()) throw PreconditionError("deprime needs a closed L0 formula, got " + print(a));
  const Form ap = prime(a);
  if (ap == a || !d.conclusion().contains(ap)) return d;
  const Sequent target = d.conclusion().without(ap).with(a);
  const RuleTag& t = d.tag();

  auto generic = [&]() {
    std::vector<Proof> ps;
    for (std::size_t j = 0; j < d.premises().size(); ++j) {
      const Sequent acts = activesOf(d, j);
      ps.push_back(fit(deprimeAt(d.premises()[j], acts, a, ap), target | acts));
    }
    return ps;
  };

  switch (t.rule) {
    case Rule::Axiom:
    case Rule::AxiomMu:
      return Proof::make(t, target);
    case Rule::Ind:
      throw PreconditionError("deprime is defined on Omega proofs; found an (ind) node");
    case Rule::Or:
      if (t.principal == ap) {
        Proof p = deprimeIfPresent(d.premises()[0], a);
        p = deprime(deprime(p, a.left()), a.right());
        return Proof::make(RuleTag::orRule(a), target, {fit(p, target.with(a.left()).with(a.right()))});
      }
      return Proof::make(t, target, generic());
    case Rule::And:
      if (t.principal == ap) {
        std::vector<Proof> ps;
        for (std::size_t j = 0; j < 2; ++j) {
          const Form part = j == 0 ? a.left() : a.right();
          ps.push_back(fit(deprime(deprimeIfPresent(d.premises()[j], a), part), target.with(part)));
        }
        return Proof::make(RuleTag::andRule(a), target, std::move(ps));
      }
      return Proof::make(t, target, generic());
    case Rule::Clo:
      if (t.principal == ap) {
        const Form unfolded = substitute(a.body(), a);
        const Proof p = deprime(deprimeIfPresent(d.premises()[0], a), unfolded);
        return Proof::make(RuleTag::clo(a), target, {fit(p, target.with(unfolded))});
      }
      return Proof::make(t, target, generic());
    case Rule::Cut:
      return Proof::make(t, target, generic());
    case Rule::Box: {
      const Proof& prem = d.premises()[0];
      if (t.principal == ap) return makeBox(a, deprime(prem, a.body()), target);
      if (ap.op() == Op::Diamond && prem.conclusion().contains(ap.body()) && !(ap.body() == t.principal.body()))
        return makeBox(t.principal, deprime(prem, a.body()), target);
      return makeBox(t.principal, prem, target);
    }
    case Rule::Nu: {
      OmegaFamily old = *d.omegaFamily();
      const Form nuForm = t.principal;
      return Proof::make(t, target, OmegaFamily([=](std::size_t i) {
                           const Sequent acts{nuActive(nuForm, i)};
                           return fit(deprimeAt(old(i), acts, a, ap), target | acts);
                         }));
    }
    case Rule::Omega:
    case Rule::OmegaBar: {
      if (t.rule == Rule::Omega && omegaPrincipal(t) == ap) return deprimeOmegaPrincipal(d, a, target);
      DeltaFamily fam = d.deltaFamily()->map([=](const Sequent& delta, const Proof&, Proof out) {
        return fit(deprimeAt(out, delta, a, ap), target | delta);
      });
      if (t.rule == Rule::Omega) return Proof::make(t, target, std::move(fam));
      const Sequent acts{t.principal};
      return Proof::make(t, target, fit(deprimeAt(d.premises()[0], acts, a, ap), target | acts), std::move(fam));
    }
  }
  throw InvariantFailure("deprime: unknown rule");
}

// ---------------------------------------------------------------------------
// substitution into a context

namespace {

enum class Mode { Keep, First, Second };
using Modes = std::map<Form, Mode>;

struct SubstData {
  Form mu, mup, b, bp;
  Proof asm1, asm2;

  Form image(const Form& f, Mode m) const {
    if (m == Mode::Keep) return f;
    return replaceSubform(f, mup, m == Mode::First ? b : bp);
  }
  Sequent image(const Sequent& s, const Modes& modes) const {
    std::vector<Form> out;
    for (const auto& f : s) out.push_back(image(f, modeOf(modes, f)));
    return Sequent(std::move(out));
  }
  static Mode modeOf(const Modes& modes, const Form& f) {
    auto it = modes.find(f);
    return it == modes.end() ? Mode::Keep : it->second;
  }
};

/// Modes of a premise: actives inherit the principal's mode, everything else
/// keeps the mode it has in the conclusion.
Modes premiseModes(const Sequent& prem, const Sequent& actives, Mode principalMode, const Modes& modes) {
  Modes out;
  for (const auto& g : prem) {
    Mode m = actives.contains(g) ? principalMode : SubstData::modeOf(modes, g);
    if (m != Mode::Keep) out[g] = m;
  }
  return out;
}

Proof substRec(const Proof& d, const Modes& modes, const SubstData& s) {
  const RuleTag& t = d.tag();
  const Sequent target = s.image(d.conclusion(), modes);

  auto principalMode = [&](const Form& f) { return SubstData::modeOf(modes, f); };
  auto imagePrem = [&](const Proof& prem, const Sequent& acts, Mode pm) {
    const Modes pmodes = premiseModes(prem.conclusion(), acts, pm, modes);
    Sequent actImg;
    for (const auto& g : acts) actImg = actImg.with(s.image(g, pm));
    return fit(substRec(prem, pmodes, s), target | actImg);
  };
  auto finite = [&](Mode pm) {
    std::vector<Proof> ps;
    for (std::size_t j = 0; j < d.premises().size(); ++j)
      ps.push_back(imagePrem(d.premises()[j], activesOf(d, j), pm));
    return ps;
  };
  // Family outputs are Delta, Gamma: context formulas keep their mode, the
  // rest of Delta is left alone (fit re-adds a Delta member that was mapped).
  auto familyModes = [modes](const Sequent& out) {
    Modes m;
    for (const auto& g : out)
      if (const Mode gm = SubstData::modeOf(modes, g); gm != Mode::Keep) m[g] = gm;
    return m;
  };

  switch (t.rule) {
    case Rule::Axiom:
      return Proof::make(t, target);
    case Rule::AxiomMu:
    case Rule::Ind:
      throw PreconditionError("substContext is defined on Omega proofs");
    case Rule::Or:
    case Rule::And: {
      const Mode pm = principalMode(t.principal);
      RuleTag nt = t;
      nt.principal = s.image(t.principal, pm);
      return Proof::make(nt, target, finite(pm));
    }
    case Rule::Clo: {
      const Mode pm = principalMode(t.principal);
      if (t.principal == s.mup && pm != Mode::Keep) {
        // Clo on the substituted fixed point becomes a cut against the assumption.
        const Form unfolded = substitute(t.principal.body(), t.principal);
        Modes pmodes = premiseModes(d.premises()[0].conclusion(), {unfolded}, Mode::Second, modes);
        const Form cutF = substitute(s.mu.body(), s.b);
        const Form pos = prime(cutF), neg = primedNegation(cutF);
        const Proof left = fit(substRec(d.premises()[0], pmodes, s), target.with(pos));
        const Proof right = fit(pm == Mode::First ? s.asm1 : s.asm2, target.with(neg));
        return Proof::make(RuleTag::cut(cutF), target, {left, right});
      }
      RuleTag nt = t;
      nt.principal = s.image(t.principal, pm);
      return Proof::make(nt, target, finite(pm));
    }
    case Rule::Cut:
      return Proof::make(t, target, finite(Mode::Keep));
    case Rule::Box: {
      const Proof& prem = d.premises()[0];
      const Form act = t.principal.body();
      const Mode pm = principalMode(t.principal);
      Modes pmodes;
      for (const auto& g : prem.conclusion()) {
        const Mode m = g == act ? pm : SubstData::modeOf(modes, Form::diamond(g));
        if (m != Mode::Keep) pmodes[g] = m;
      }
      return makeBox(s.image(t.principal, pm), substRec(prem, pmodes, s), target);
    }
    case Rule::Nu: {
      const Mode pm = principalMode(t.principal);
      const Form nuForm = t.principal;
      const Form img = s.image(nuForm, pm);
      OmegaFamily old = *d.omegaFamily();
      RuleTag nt = t;
      nt.principal = img;
      return Proof::make(nt, target, OmegaFamily([=](std::size_t i) {
                           const Proof prem = old(i);
                           const Sequent acts{nuActive(nuForm, i)};
                           const Modes pmodes = premiseModes(prem.conclusion(), acts, pm, modes);
                           return fit(substRec(prem, pmodes, s), target.with(nuActive(img, i)));
                         }));
    }
    case Rule::Omega:
    case Rule::OmegaBar: {
      if (t.rule == Rule::Omega) {
        const Form pr = omegaPrincipal(t);
        if (principalMode(pr) != Mode::Keep && !(s.image(pr, principalMode(pr)) == pr))
          throw InvariantFailure("substitution reached the principal of an Omega node");
      }
      DeltaFamily fam = d.deltaFamily()->map([=](const Sequent& delta, const Proof&, Proof out) {
        return fit(substRec(out, familyModes(out.conclusion()), s), delta | target);
      });
      if (t.rule == Rule::Omega) return Proof::make(t, target, std::move(fam));
      const Sequent acts{t.principal};
      return Proof::make(t, target, imagePrem(d.premises()[0], acts, Mode::Keep), std::move(fam));
    }
  }
  throw InvariantFailure("substContext: unknown rule");
}

SubstData makeSubstData(const Proof& asm1, const Proof& asm2, const Form& mu, const Form& b) {
  if (mu.op() != Op::Mu || !mu.isL0() || !mu.isFormula())
    throw PreconditionError("substitution needs a closed L0 mu-formula, got " + print(mu));
  if (!b.isL0() || !b.isFormula()) throw PreconditionError("substitution needs a closed L0 formula B");
  const Form neg = primedNegation(substitute(mu.body(), b));
  if (!asm1.conclusion().subsetOf(Sequent{neg, b}))
    throw PreconditionError("first assumption proves " + print(asm1.conclusion()) + ", expected a subset of " +
                            print(Sequent{neg, b}));
  if (!asm2.conclusion().subsetOf(Sequent{neg, prime(b)}))
    throw PreconditionError("second assumption proves " + print(asm2.conclusion()) + ", expected a subset of " +
                            print(Sequent{neg, prime(b)}));
  return {mu, prime(mu), b, prime(b), asm1, asm2};
}

}  // namespace

Proof substContext(const Proof& d, const Sequent& delta, const Sequent& sigma1, const Sequent& sigma2,
                   const Proof& asm1, const Proof& asm2, const Form& mu, const Form& b) {
  const SubstData s = makeSubstData(asm1, asm2, mu, b);
  if (!d.conclusion().subsetOf(delta | sigma1 | sigma2))
    throw PreconditionError("substContext: endsequent " + print(d.conclusion()) + " is not covered");
  Modes modes;
  for (const auto& f : sigma2) modes[f] = Mode::Second;
  for (const auto& f : sigma1) modes[f] = Mode::First;
  Sequent target = delta;
  for (const auto& f : sigma1) target = target.with(s.image(f, Mode::First));
  for (const auto& f : sigma2) target = target.with(s.image(f, Mode::Second));
  Modes used;
  for (const auto& f : d.conclusion())
    if (auto it = modes.find(f); it != modes.end()) used.insert(*it);
  return fit(substRec(d, used, s), target);
}

std::pair<Proof, Proof> indToOmega(const Proof& asm1, const Proof& asm2, const Form& mu, const Form& b) {
  const SubstData s = makeSubstData(asm1, asm2, mu, b);
  const Form target = s.mup;
  const Form principal = primedNegation(mu);
  const unsigned h = level(mu);
  auto build = [&](bool second) {
    const Form rhs = second ? s.bp : s.b;
    return Proof::make(RuleTag::omega(h, target), {principal, rhs},
                       DeltaFamily(h, target, [=](const Sequent& delta, const Proof& w) {
                         const Sequent one{target};
                         return fit(substContext(w, delta, second ? Sequent{} : one, second ? one : Sequent{},
                                                 asm1, asm2, mu, b),
                                    delta.with(rhs));
                       }));
  };
  return {build(false), build(true)};
}

// ---------------------------------------------------------------------------
// the embedding

namespace {

Proof embedRec(const Proof& d, const Sequent& sel, unsigned k);

Sequent selectPremise(const Proof& d, const Sequent& prem, const Sequent& acts, bool principalSelected,
                      const Sequent& sel) {
  std::vector<Form> out;
  for (const auto& g : prem) {
    const bool chosen = acts.contains(g) ? principalSelected : (d.conclusion().contains(g) && sel.contains(g));
    if (chosen) out.push_back(g);
  }
  return Sequent(std::move(out));
}

Proof embedAxiomMu(const Proof& d, const Sequent& target, const Sequent& sel) {
  const Form mu = d.tag().principal;
  const Form nu = negate(mu);
  const bool m = sel.contains(mu), n = sel.contains(nu);
  Proof core = !m && !n  ? identityMu(mu)
               : !m && n ? identityMuPrimed(mu)
               : m && !n ? identityGeneral(mu.body(), true)
                         : identityBothPrimed(mu);
  return fit(core, target);
}

Proof embedInd(const Proof& d, const Sequent& target, const Sequent& sel, unsigned k) {
  const Form mu = d.tag().principal;
  const Form b = d.tag().aux;
  const Form nu = negate(mu);
  const Form c = substitute(mu.body(), b);
  if (level(c) > k) throw PreconditionError("induction formula exceeds level " + std::to_string(k));
  const Form negC = negate(c);
  const Proof& prem = d.premises()[0];
  const Proof ih1 = embedRec(prem, Sequent{negC}, k);
  const Proof ih2 = embedRec(prem, Sequent{negC, b}, k);
  const bool bSel = sel.contains(b);
  if (sel.contains(nu)) {
    auto [o1, o2] = indToOmega(ih1, ih2, mu, b);
    return fit(bSel ? o2 : o1, target);
  }
  const Form bs = bSel ? prime(b) : b;
  const Form negBody = negate(mu.body());
  const Form pos = prime(c), neg = primedNegation(c);
  // Q_i(s) proves { (~A)^i(top), B^s }.
  ProofChain chainTrue(
      [b] { return topProof({prime(b)}); },
      [=](std::size_t j, const Proof& prev) {
        const Form nj = iterate(negBody, top(), j);
        const Form next = substitute(negBody, nj);
        const Sequent base{next, prime(b)};
        const Proof left = fit(monotonePrimed(prev, mu.body(), nj, prime(b)), base.with(pos));
        const Proof right = fit(ih2, base.with(neg));
        return Proof::make(RuleTag::cut(c), base, {left, right});
      });
  ProofChain chain = chainTrue;
  if (!bSel) {
    chain = ProofChain([b] { return topProof({b}); },
                       [=](std::size_t j, const Proof&) {
                         const Form nj = iterate(negBody, top(), j);
                         const Form next = substitute(negBody, nj);
                         const Sequent base{next, b};
                         const Proof left = fit(monotonePrimed(chainTrue(j), mu.body(), nj, prime(b)), base.with(pos));
                         const Proof right = fit(ih1, base.with(neg));
                         return Proof::make(RuleTag::cut(c), base, {left, right});
                       });
  }
  return fit(Proof::make(RuleTag::nu(nu), Sequent{nu, bs}, OmegaFamily(chain)), target);
}

Proof embedRec(const Proof& d, const Sequent& sel, unsigned k) {
  const RuleTag& t = d.tag();
  const Sequent target = applySigma(d.conclusion(), sel);
  switch (t.rule) {
    case Rule::Axiom:
      return Proof::make(t, target);
    case Rule::AxiomMu:
      return embedAxiomMu(d, target, sel);
    case Rule::Ind:
      return embedInd(d, target, sel, k);
    case Rule::Or:
    case Rule::And:
    case Rule::Clo: {
      const bool ps = sel.contains(t.principal);
      std::vector<Proof> prems;
      for (std::size_t j = 0; j < d.premises().size(); ++j) {
        const Proof& p = d.premises()[j];
        const Sequent acts = activesOf(d, j);
        const Proof e = embedRec(p, selectPremise(d, p.conclusion(), acts, ps, sel), k);
        prems.push_back(fit(e, target | (ps ? applySigma(acts, acts) : acts)));
      }
      RuleTag nt = t;
      if (ps) nt.principal = prime(t.principal);
      return Proof::make(nt, target, std::move(prems));
    }
    case Rule::Box: {
      const Proof& p = d.premises()[0];
      const Form act = t.principal.body();
      std::vector<Form> chosen;
      for (const auto& g : p.conclusion()) {
        const bool c = g == act ? sel.contains(t.principal) : sel.contains(Form::diamond(g));
        if (c) chosen.push_back(g);
      }
      const Form principal = sel.contains(t.principal) ? prime(t.principal) : t.principal;
      return makeBox(principal, embedRec(p, Sequent(std::move(chosen)), k), target);
    }
    case Rule::Cut: {
      const Form c = t.principal;
      if (level(c) > k) throw PreconditionError("cut formula " + print(c) + " exceeds level " + std::to_string(k));
      const Form nc = negate(c);
      const Proof& p0 = d.premises()[0];
      const Proof& p1 = d.premises()[1];
      const bool straight = p0.conclusion().contains(c) && p1.conclusion().contains(nc) &&
                            p0.conclusion().subsetOf(d.conclusion().with(c));
      const Proof& pos = straight ? p0 : p1;
      const Proof& neg = straight ? p1 : p0;
      const Proof ep = embedRec(pos, selectPremise(d, pos.conclusion(), {c}, true, sel), k);
      const Proof en = embedRec(neg, selectPremise(d, neg.conclusion(), {nc}, true, sel), k);
      return Proof::make(RuleTag::cut(c), target,
                         {fit(ep, target.with(prime(c))), fit(en, target.with(primedNegation(c)))});
    }
    default:
      throw PreconditionError(std::string("embed expects an S-proof; found ") + std::string(ruleName(t.rule)));
  }
}

}  // namespace

Proof embed(const Proof& d, const Sequent& selection, unsigned k) {
  const CheckReport r = checkFinite(d, SystemId::s());
  if (!r.ok) throw PreconditionError("embed: input is not a valid S-proof: " + r.violations.front().message);
  if (levelBound(d) > k)
    throw PreconditionError("embed: proof has level " + std::to_string(levelBound(d)) + " > " + std::to_string(k));
  if (!selection.subsetOf(d.conclusion())) throw PreconditionError("embed: selection is not part of the endsequent");
  return embedRec(d, selection, k);
}

}  // namespace mucut

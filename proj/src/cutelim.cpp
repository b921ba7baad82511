#include "mucut/cutelim.hpp"

#include <memory>
#include <sstream>

#include "detail.hpp"

namespace mucut {

using detail::activesOf;
using detail::nuActive;
using detail::omegaPrincipal;

// ---------------------------------------------------------------------------
// weakening

Proof makeBox(const Form& principal, const Proof& premise, const Sequent& conclusion) {
  const Form& a = principal.body();
  Sequent diamonds;
  for (const auto& g : premise.conclusion())
    if (!(g == a)) diamonds = diamonds.with(Form::diamond(g));
  if (!diamonds.subsetOf(conclusion) || !conclusion.contains(principal))
    throw InvariantFailure("box node: " + print(conclusion) + " does not contain the image of " +
                           print(premise.conclusion()));
  Sequent side = conclusion.without(principal) - diamonds;
  return Proof::make(RuleTag::box(principal, side), conclusion, {premise});
}

Proof weaken(const Proof& d, const Sequent& extra) {
  if (extra.subsetOf(d.conclusion())) return d;
  const Sequent concl = d.conclusion() | extra;
  const RuleTag& t = d.tag();
  switch (t.rule) {
    case Rule::Axiom:
    case Rule::AxiomMu:
      return Proof::make(t, concl);
    case Rule::Box:
      return makeBox(t.principal, d.premises()[0], concl);
    case Rule::Ind:
      throw PreconditionError("an (ind) node has no context to weaken");
    case Rule::Or:
    case Rule::And:
    case Rule::Clo:
    case Rule::Cut: {
      std::vector<Proof> ps;
      for (const auto& p : d.premises()) ps.push_back(weaken(p, extra));
      return Proof::make(t, concl, std::move(ps));
    }
    case Rule::Nu: {
      OmegaFamily old = *d.omegaFamily();
      return Proof::make(t, concl, OmegaFamily([old, extra](std::size_t i) { return weaken(old(i), extra); }));
    }
    case Rule::Omega:
      return Proof::make(t, concl, d.deltaFamily()->map([extra](const Sequent&, const Proof&, Proof out) {
        return weaken(out, extra);
      }));
    case Rule::OmegaBar:
      return Proof::make(t, concl, weaken(d.premises()[0], extra),
                         d.deltaFamily()->map([extra](const Sequent&, const Proof&, Proof out) {
                           return weaken(out, extra);
                         }));
  }
  throw InvariantFailure("weaken: unknown rule");
}

Proof fit(const Proof& d, const Sequent& target) {
  if (!d.conclusion().subsetOf(target))
    throw InvariantFailure("cannot fit a proof of " + print(d.conclusion()) + " to " + print(target));
  return weaken(d, target - d.conclusion());
}

CutRank cutRank(const Form& c) { return {level(c), c.size()}; }

// ---------------------------------------------------------------------------
// reduction

namespace {

struct Ctx {
  std::size_t fuel;
  TraceSink trace;
  std::shared_ptr<std::size_t> used;
  std::string path;

  Ctx fresh(std::string p) const { return {fuel, trace, std::make_shared<std::size_t>(0), std::move(p)}; }
  Ctx at(const std::string& suffix) const { return {fuel, trace, used, path + "/" + suffix}; }

  void tick() const {
    if (++*used > fuel)
      throw FuelExhausted("cut elimination exceeded " + std::to_string(fuel) + " steps at " + path);
  }
  void step(std::string_view kind, const Form& c, const std::string& extra = {}) const {
    if (!trace) return;
    const CutRank r = cutRank(c);
    std::ostringstream os;
    os << "(step " << path << ' ' << kind << " (" << r.level << ' ' << r.size << ')';
    if (!extra.empty()) os << ' ' << extra;
    os << ')';
    trace(os.str());
  }
};

enum class Role { Absent, AxiomPair, AxiomContext, Principal, Diamond, Sigma, Context };

Role roleOf(const Proof& p, const Form& a) {
  if (!p.conclusion().contains(a)) return Role::Absent;
  const RuleTag& t = p.tag();
  switch (t.rule) {
    case Rule::Axiom:
      return (a == t.principal || a == Form::negAtom(t.principal.index())) ? Role::AxiomPair
                                                                            : Role::AxiomContext;
    case Rule::Or:
    case Rule::And:
    case Rule::Clo:
    case Rule::Nu:
      return a == t.principal ? Role::Principal : Role::Context;
    case Rule::Omega:
      return a == omegaPrincipal(t) ? Role::Principal : Role::Context;
    case Rule::Box: {
      if (a == t.principal) return Role::Principal;
      if (a.op() == Op::Diamond) {
        const Sequent& prem = p.premises()[0].conclusion();
        if (prem.contains(a.body()) && !(a.body() == t.principal.body())) return Role::Diamond;
      }
      return Role::Sigma;
    }
    case Rule::OmegaBar:
      return Role::Context;
    default:
      throw InvariantFailure(std::string("cut reduction met a ") + std::string(ruleName(t.rule)) + " node");
  }
}

Proof reduce(const Form& c, const Proof& p, const Proof& q, const Sequent& gamma, const Ctx& ctx);

/// Eliminates a residual cut on `c` from the sequent `target`: `x` proves a
/// subset of target + {cut side}; the other side is `other`.
Proof cutAway(const Form& c, const Proof& x, bool xIsPositive, const Proof& other, const Sequent& target,
              const Ctx& ctx) {
  if (x.conclusion().subsetOf(target)) return fit(x, target);
  const Form pos = prime(c), neg = primedNegation(c);
  if (xIsPositive) return reduce(c, fit(x, target.with(pos)), fit(other, target.with(neg)), target, ctx);
  return reduce(c, fit(other, target.with(pos)), fit(x, target.with(neg)), target, ctx);
}

/// Pushes the cut into the premises of the side whose cut formula is not principal.
Proof commute(const Form& c, const Proof& side, bool sideIsPositive, const Proof& other, const Sequent& gamma,
              const Ctx& ctx) {
  const RuleTag& t = side.tag();
  ctx.step("iii", c, std::string(ruleName(t.rule)));
  switch (t.rule) {
    case Rule::Or:
    case Rule::And:
    case Rule::Clo: {
      std::vector<Proof> ps;
      for (std::size_t j = 0; j < side.premises().size(); ++j) {
        const Sequent target = gamma | activesOf(side, j);
        ps.push_back(cutAway(c, side.premises()[j], sideIsPositive, other, target, ctx.at(std::to_string(j))));
      }
      return Proof::make(t, gamma, std::move(ps));
    }
    case Rule::Nu: {
      OmegaFamily old = *side.omegaFamily();
      const Form nuForm = t.principal;
      return Proof::make(t, gamma, OmegaFamily([=](std::size_t i) {
                           const Sequent target = gamma.with(nuActive(nuForm, i));
                           return cutAway(c, old(i), sideIsPositive, other, target,
                                          ctx.fresh(ctx.path + "/nu[" + std::to_string(i) + "]"));
                         }));
    }
    case Rule::Omega:
    case Rule::OmegaBar: {
      auto post = [=](const Sequent& delta, const Proof&, Proof out) {
        return cutAway(c, out, sideIsPositive, other, delta | gamma, ctx.fresh(ctx.path + "/delta"));
      };
      DeltaFamily fam = side.deltaFamily()->map(post);
      if (t.rule == Rule::Omega) return Proof::make(t, gamma, std::move(fam));
      const Proof first = cutAway(c, side.premises()[0], sideIsPositive, other, gamma.with(t.principal), ctx.at("0"));
      return Proof::make(t, gamma, first, std::move(fam));
    }
    default:
      throw InvariantFailure(std::string("cannot commute a cut past ") + std::string(ruleName(t.rule)));
  }
}

Proof reduce(const Form& cIn, const Proof& pIn, const Proof& qIn, const Sequent& gamma, const Ctx& ctx) {
  // Orient so that the cut formula has a positive main connective.
  const bool swap = cIn.op() == Op::Or || cIn.op() == Op::Diamond || cIn.op() == Op::Nu ||
                    cIn.op() == Op::NegAtom;
  const Form c = swap ? negate(cIn) : cIn;
  const Proof& p = swap ? qIn : pIn;
  const Proof& q = swap ? pIn : qIn;

  ctx.tick();
  const Form a = prime(c), b = primedNegation(c);

  if (p.conclusion().subsetOf(gamma)) {
    ctx.step("i", c);
    return fit(p, gamma);
  }
  if (q.conclusion().subsetOf(gamma)) {
    ctx.step("i", c);
    return fit(q, gamma);
  }

  const Role rp = roleOf(p, a), rq = roleOf(q, b);
  if (rp == Role::AxiomContext) {
    ctx.step("ii", c);
    return Proof::make(p.tag(), gamma);
  }
  if (rq == Role::AxiomContext) {
    ctx.step("ii", c);
    return Proof::make(q.tag(), gamma);
  }

  // A mu cut against an Omega_h node becomes an OmegaBar_h node.
  if (c.op() == Op::Mu && rq == Role::Principal && q.rule() == Rule::Omega) {
    const RuleTag& qt = q.tag();
    if (!(qt.principal == a)) throw InvariantFailure("omega target differs from the cut formula");
    ctx.step("vi", c, "(omegabar " + std::to_string(qt.h) + ")");
    const Proof first = fit(p, gamma.with(a));
    DeltaFamily fam = q.deltaFamily()->map([=](const Sequent& delta, const Proof&, Proof out) {
      return cutAway(c, out, false, p, delta | gamma, ctx.fresh(ctx.path + "/delta"));
    });
    return Proof::make(RuleTag::omegaBar(qt.h, a), gamma, first, std::move(fam));
  }

  if (rp == Role::Context) return commute(c, p, true, q, gamma, ctx);
  if (rq == Role::Context) return commute(c, q, false, p, gamma, ctx);
  if (rp == Role::Sigma) {
    ctx.step("iii", c, "sigma");
    return makeBox(p.tag().principal, p.premises()[0], gamma);
  }
  if (rq == Role::Sigma) {
    ctx.step("iii", c, "sigma");
    return makeBox(q.tag().principal, q.premises()[0], gamma);
  }

  switch (c.op()) {
    case Op::And:
      if (rp == Role::Principal && rq == Role::Principal) {
        ctx.step("iv", c);
        const Form d = c.left(), e = c.right();
        const Form dp = prime(d), ep = prime(e), nd = primedNegation(d), ne = primedNegation(e);
        const Proof p1 = cutAway(c, p.premises()[0], true, q, gamma.with(dp), ctx.at("0"));
        const Proof p2 = cutAway(c, p.premises()[1], true, q, gamma.with(ep), ctx.at("1"));
        const Proof q1 = cutAway(c, q.premises()[0], false, p, gamma.with(nd).with(ne), ctx.at("0"));
        const Sequent mid = gamma.with(ne);
        const Proof r1 = cutAway(d, p1, true, q1, mid, ctx);
        return cutAway(e, p2, true, r1, gamma, ctx);
      }
      break;
    case Op::Box:
      if (rp == Role::Principal && rq == Role::Diamond) {
        ctx.step("v", c);
        const Form d = c.body();
        const Proof& pp = p.premises()[0];
        const Proof& qp = q.premises()[0];
        const Form dp = prime(d), nd = primedNegation(d);
        const Sequent target = pp.conclusion().without(dp) | qp.conclusion().without(nd);
        const Proof r = cutAway(d, pp, true, qp, target, ctx.at("0"));
        return makeBox(q.tag().principal, r, gamma);
      }
      break;
    default:
      break;
  }
  throw InvariantFailure("no reduction applies to a cut on " + print(c) + " between " +
                         std::string(ruleName(p.rule())) + " and " + std::string(ruleName(q.rule())));
}

Proof elim(const Proof& d, const Ctx& ctx);

Proof elimFamilies(const Proof& d, std::vector<Proof> finite, const Ctx& ctx) {
  const RuleTag& t = d.tag();
  if (t.rule == Rule::Nu) {
    OmegaFamily old = *d.omegaFamily();
    return Proof::make(t, d.conclusion(), OmegaFamily([old, ctx](std::size_t i) {
                         return elim(old(i), ctx.fresh(ctx.path + "/nu[" + std::to_string(i) + "]"));
                       }));
  }
  DeltaFamily fam = d.deltaFamily()->map(
      [ctx](const Sequent&, const Proof&, Proof out) { return elim(out, ctx.fresh(ctx.path + "/delta")); });
  if (t.rule == Rule::Omega) return Proof::make(t, d.conclusion(), std::move(fam));
  return Proof::make(t, d.conclusion(), finite.at(0), std::move(fam));
}

Proof headReduce(const Proof& d, const Proof& e0, const Proof& e1, const Ctx& ctx) {
  const Form& c = d.tag().principal;
  const Sequent& concl = d.conclusion();
  const Form a = prime(c);
  const bool straight = d.premises()[0].conclusion() == concl.with(a);
  return reduce(c, straight ? e0 : e1, straight ? e1 : e0, concl, ctx);
}

Proof elim(const Proof& d, const Ctx& ctx) {
  ctx.tick();
  std::vector<Proof> finite;
  for (std::size_t j = 0; j < d.premises().size(); ++j) finite.push_back(elim(d.premises()[j], ctx.at(std::to_string(j))));
  if (d.rule() == Rule::Cut) return headReduce(d, finite[0], finite[1], ctx);
  if (d.hasFamily()) return elimFamilies(d, std::move(finite), ctx);
  return Proof::make(d.tag(), d.conclusion(), std::move(finite));
}

}  // namespace

Proof reduceHead(const Proof& d, const ElimOptions& opts) {
  if (d.rule() != Rule::Cut) throw PreconditionError("reduceHead needs a cut at the root");
  Ctx ctx{opts.fuel, opts.trace, std::make_shared<std::size_t>(0), "root"};
  return headReduce(d, d.premises()[0], d.premises()[1], ctx);
}

Proof eliminate(const Proof& d, const ElimOptions& opts) {
  Ctx ctx{opts.fuel, opts.trace, std::make_shared<std::size_t>(0), "root"};
  return elim(d, ctx);
}

}  // namespace mucut

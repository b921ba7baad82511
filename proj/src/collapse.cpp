#include "mucut/collapse.hpp"

#include <memory>

#include "mucut/checker.hpp"
#include "mucut/embed.hpp"

namespace mucut {

namespace {

struct Ctx {
  std::size_t fuel;
  TraceSink trace;
  std::shared_ptr<std::size_t> used;
  std::string path;

  Ctx fresh(std::string p) const { return {fuel, trace, std::make_shared<std::size_t>(0), std::move(p)}; }
  Ctx at(const std::string& suffix) const { return {fuel, trace, used, path + "/" + suffix}; }
  void tick() const {
    if (++*used > fuel) throw FuelExhausted("collapse exceeded " + std::to_string(fuel) + " steps at " + path);
  }
};

Proof rec(const Proof& d, unsigned h, const Ctx& ctx) {
  ctx.tick();
  const RuleTag& t = d.tag();
  switch (t.rule) {
    case Rule::Cut:
      throw PreconditionError("collapse requires a cut-free proof; found a cut at " + ctx.path);
    case Rule::Ind:
    case Rule::AxiomMu:
      throw PreconditionError("collapse expects an Omega proof; found " + std::string(ruleName(t.rule)));
    case Rule::Axiom:
      return d;
    case Rule::Or:
    case Rule::And:
    case Rule::Clo:
    case Rule::Box: {
      std::vector<Proof> ps;
      for (std::size_t j = 0; j < d.premises().size(); ++j) ps.push_back(rec(d.premises()[j], h, ctx.at(std::to_string(j))));
      return Proof::make(t, d.conclusion(), std::move(ps));
    }
    case Rule::Nu: {
      OmegaFamily old = *d.omegaFamily();
      return Proof::make(t, d.conclusion(), OmegaFamily([old, h, ctx](std::size_t i) {
                           return rec(old(i), h, ctx.fresh(ctx.path + "/nu[" + std::to_string(i) + "]"));
                         }));
    }
    case Rule::Omega:
    case Rule::OmegaBar: {
      const Sequent& gamma = d.conclusion();
      if (t.h > h) {
        if (t.rule == Rule::Omega)
          throw InvariantFailure("collapse met an Omega_" + std::to_string(t.h) + " node above level " +
                                 std::to_string(h) + " at " + ctx.path);
        if (!isKPositive(gamma, t.h))
          throw InvariantFailure("OmegaBar_" + std::to_string(t.h) + " conclusion is not positive at " + ctx.path);
        const Proof w = rec(d.premises()[0], t.h - 1, ctx.at("0"));
        if (ctx.trace) ctx.trace("(collapse " + ctx.path + " omegabar " + std::to_string(t.h) + ")");
        const Proof out = (*d.deltaFamily())(gamma, w);
        return rec(fit(out, gamma), h, ctx);
      }
      DeltaFamily fam = d.deltaFamily()->map([h, ctx](const Sequent&, const Proof&, Proof out) {
        return rec(out, h, ctx.fresh(ctx.path + "/delta"));
      });
      if (t.rule == Rule::Omega) return Proof::make(t, gamma, std::move(fam));
      return Proof::make(t, gamma, rec(d.premises()[0], h, ctx.at("0")), std::move(fam));
    }
  }
  throw InvariantFailure("collapse: unknown rule");
}

Proof sinfRec(const Proof& d, const std::string& path) {
  const RuleTag& t = d.tag();
  switch (t.rule) {
    case Rule::Axiom:
    case Rule::Or:
    case Rule::And:
    case Rule::Clo:
    case Rule::Box:
    case Rule::Nu:
      break;
    default:
      throw InvariantFailure("S-infinity proof contains a " + std::string(ruleName(t.rule)) + " node at " + path);
  }
  if (!isL0(d.conclusion()))
    throw InvariantFailure("S-infinity sequent " + print(d.conclusion()) + " is not in L0 at " + path);
  if (t.rule == Rule::Nu) {
    OmegaFamily old = *d.omegaFamily();
    return Proof::make(t, d.conclusion(), OmegaFamily([old, path](std::size_t i) {
                         return sinfRec(old(i), path + "/nu[" + std::to_string(i) + "]");
                       }));
  }
  std::vector<Proof> ps;
  for (std::size_t j = 0; j < d.premises().size(); ++j) ps.push_back(sinfRec(d.premises()[j], path + "/" + std::to_string(j)));
  return Proof::make(t, d.conclusion(), std::move(ps));
}

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  const std::string prefix = std::string(name) + ": ";
  try {
    return f();
  } catch (const FuelExhausted& e) {
    throw FuelExhausted(prefix + e.what());
  } catch (const InvariantFailure& e) {
    throw InvariantFailure(prefix + e.what());
  } catch (const AdmissionError& e) {
    throw AdmissionError(prefix + e.what());
  } catch (const ShapeError& e) {
    throw ShapeError(prefix + e.what());
  } catch (const PreconditionError& e) {
    throw PreconditionError(prefix + e.what());
  }
}

}  // namespace

Proof collapse(const Proof& d, unsigned h, const CollapseOptions& opts) {
  if (!isKPositive(d.conclusion(), h + 1))
    throw PreconditionError("collapse(" + std::to_string(h) + ") needs an " + std::to_string(h + 1) +
                            "-positive endsequent, got " + print(d.conclusion()));
  return rec(d, h, Ctx{opts.fuel, opts.trace, std::make_shared<std::size_t>(0), "root"});
}

Proof toSinf(const Proof& d) { return sinfRec(d, "root"); }

PipelineResult pipeline(const Proof& d, const PipelineOptions& opts) {
  const unsigned k = stage("check", [&] {
    const CheckReport r = checkFinite(d, SystemId::s());
    if (!r.ok) throw PreconditionError("not a valid S-proof: " + r.violations.front().message);
    return levelBound(d);
  });
  Proof embedded = stage("embed", [&] { return embed(d, {}, k); });
  Proof eliminated = stage("eliminate", [&] { return eliminate(embedded, ElimOptions{opts.fuel, opts.trace}); });
  Proof collapsed = stage("collapse", [&] { return collapse(eliminated, 0, CollapseOptions{opts.fuel, opts.trace}); });
  Proof sinf = stage("to-sinf", [&] { return toSinf(collapsed); });
  return {k, std::move(embedded), std::move(eliminated), std::move(collapsed), std::move(sinf)};
}

}  // namespace mucut

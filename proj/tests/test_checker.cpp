#include <doctest.h>

#include "mucut/checker.hpp"
#include "mucut/collapse.hpp"
#include "mucut/corpus.hpp"
#include "mucut/cutelim.hpp"
#include "mucut/embed.hpp"
#include "support.hpp"

using namespace mucut;

namespace {

const Form p = Form::atom(1);
const Form q = Form::atom(2);
const Form r = Form::atom(3);
const Form X = Form::var();

Proof ax(const Sequent& s) { return axiomFor(s); }

bool localOk(const Proof& n, const SystemId& sys) { return checkLocal(n, sys).empty(); }

}  // namespace

TEST_CASE("box schema") {
  const Form np = negate(p);
  const Proof prem = ax({p, np, q});
  // premise {p, ~p, q} with principal []q: conclusion <>p, <>~p, []q, Sigma
  const Proof ok = Proof::make(RuleTag::box(Form::box(q), {r}),
                               {Form::diamond(p), Form::diamond(np), Form::box(q), r}, {prem});
  CHECK(localOk(ok, SystemId::s()));
  const Proof wrongSide = Proof::make(RuleTag::box(Form::box(q), {}),
                                      {Form::diamond(p), Form::diamond(np), Form::box(q), r}, {prem});
  CHECK_FALSE(localOk(wrongSide, SystemId::s()));
  const Proof missingDiamond =
      Proof::make(RuleTag::box(Form::box(q), {r}), {Form::diamond(p), Form::box(q), r}, {prem});
  CHECK_FALSE(localOk(missingDiamond, SystemId::s()));
}

TEST_CASE("ind schema has no side formulas") {
  const Proof e1 = corpusProof("E1");
  CHECK(localOk(e1, SystemId::s()));
  const Proof extra = Proof::make(e1.tag(), e1.conclusion().with(p), e1.premises());
  CHECK_FALSE(localOk(extra, SystemId::s()));
}

TEST_CASE("cut level bound in Omega_k") {
  const Form lvl2 = parseFormula("mu X . (X | nu X . <> X)");
  const Sequent g{top()};
  const Proof c = Proof::make(RuleTag::cut(lvl2), g,
                              {topProof({prime(lvl2)}), topProof({primedNegation(lvl2)})});
  CHECK_FALSE(localOk(c, SystemId::omega(1)));
  CHECK(localOk(c, SystemId::omega(2)));
  // Unprimed premises are the S shape, not the Omega shape.
  const Proof s = Proof::make(RuleTag::cut(lvl2), g, {topProof({lvl2}), topProof({negate(lvl2)})});
  CHECK(localOk(s, SystemId::s()));
  CHECK_FALSE(localOk(s, SystemId::omega(2)));
}

TEST_CASE("system-appropriate tags") {
  const Proof e3 = corpusProof("E3");
  CHECK(localOk(e3, SystemId::s()));
  CHECK_FALSE(localOk(e3, SystemId::omega(1)));
  CHECK_FALSE(localOk(e3, SystemId::sinf()));
  const Proof id = identityMuPrimed(parseFormula("mu X . (p1 | X)"));
  CHECK(localOk(id, SystemId::omega(1)));
  CHECK_FALSE(localOk(id, SystemId::omega(0)));
  CHECK_FALSE(localOk(id, SystemId::sinf()));
}

TEST_CASE("finite checks of the corpus") {
  for (const auto& e : corpus()) {
    INFO(e.name);
    const CheckReport rep = checkFinite(e.proof, SystemId::s());
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
  }
  const CheckReport tagged = checkFinite(corpusProof("E1"), SystemId::omega(1));
  CHECK_FALSE(tagged.ok);
}

TEST_CASE("cut premises may come in either order") {
  const Proof e2 = corpusProof("E2");
  const Proof swapped = Proof::make(e2.tag(), e2.conclusion(), {e2.premises()[1], e2.premises()[0]});
  CHECK(checkFinite(swapped, SystemId::s()).ok);
}

TEST_CASE("wrong unfolding is a violation") {
  const Form mu = parseFormula("mu X . (p1 | X)");
  const Sequent concl{mu, top()};
  const Proof good = Proof::make(RuleTag::clo(mu), concl, {topProof({substitute(mu.body(), mu)})});
  CHECK(checkFinite(good, SystemId::s()).ok);
  const Proof bad = Proof::make(RuleTag::clo(mu), concl, {topProof({substitute(mu.body(), top())})});
  const CheckReport rep = checkFinite(bad, SystemId::s());
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() >= 1);
  CHECK(rep.violations[0].path == "root");
}

TEST_CASE("violations carry paths") {
  const Proof e2 = corpusProof("E2");
  const Proof broken = testing::replaceAt(e2, {1, 0}, [](const Proof& n) {
    return Proof::make(n.tag(), n.conclusion().without(Form::negAtom(0)));
  });
  const CheckReport rep = checkFinite(broken, SystemId::s());
  CHECK_FALSE(rep.ok);
  bool found = false;
  for (const auto& v : rep.violations) found = found || v.path == "root/1/0";
  CHECK(found);
  CHECK(renderSexpr(rep).starts_with("(report fail"));
  CHECK(renderSexpr(checkFinite(e2, SystemId::s())).starts_with("(report ok"));
}

TEST_CASE("bounded checks of embedded proofs") {
  const Proof e3 = corpusProof("E3");
  const CheckReport rep = checkBounded(embed(e3, {}, 1), SystemId::omega(1), 6, {0, 1, 2}, 1);
  CHECK(rep.ok);
  const CheckReport zero = checkBounded(embed(e3, {}, 1), SystemId::omega(1), 0, {0, 1, 2}, 1);
  CHECK(zero.ok);
  CHECK(zero.truncationPoints == 1);
  CHECK(zero.nodesChecked == 0);
}

TEST_CASE("a corrupted family is reported at the Omega node") {
  const Form mu = parseFormula("mu X . (p1 | X)");
  const Proof good = identityMuPrimed(mu);
  const DeltaFamily corrupt = good.deltaFamily()->map(
      [](const Sequent& delta, const Proof&, Proof) { return topProof(delta.with(Form::atom(7))); });
  const Proof bad = Proof::make(good.tag(), good.conclusion(), corrupt);
  const CheckReport rep = checkBounded(bad, SystemId::omega(1), 4, {0}, 1);
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(rep.violations[0].path == "root");
}

TEST_CASE("a nu family with a wrong approximant is a violation") {
  const Form nu = parseFormula("nu X . (p1 | X)");
  const Proof bad = Proof::make(RuleTag::nu(nu), {nu}, OmegaFamily([nu](std::size_t) {
                                  return topProof({nu});  // always top, but A^1(top) = p1 | top
                                }));
  CHECK(checkBounded(bad, SystemId::sinf(), 2, {0}, 1).ok);
  CHECK_FALSE(checkBounded(bad, SystemId::sinf(), 2, {0, 1}, 1).ok);
}

TEST_CASE("level bounds") {
  CHECK(levelBound(corpusProof("E1")) == 1);
  CHECK(levelBound(corpusProof("E2")) == 0);
  CHECK(levelBound(ax({p, negate(p)})) == 0);
  CHECK(levelBound(corpusProof("E4")) == 2);
}

TEST_CASE("subformula report") {
  const PipelineResult res = pipeline(corpusProof("E2"));
  const Observation o = observe(res.sinf, 6, {0, 1, 2}, 1);
  CHECK(subformulaReport(o).ok);
  CHECK_FALSE(hasNuBarObserved(o));

  // A cut is flagged.
  CHECK_FALSE(subformulaReport(observe(corpusProof("E2"), 6, {0}, 1)).ok);

  // Hand-built S-infinity proof of {nu X.(p1 | X), top}: premise i proves
  // A^i(top), top by i (or)-steps down to the top axiom.
  const Form nu = parseFormula("nu X . (p1 | X)");
  const Form a = nu.body();
  const Proof hand = Proof::make(RuleTag::nu(nu), {nu, top()}, OmegaFamily([nu, a](std::size_t i) {
                                   return topProof({nu, iterate(a, top(), i)});
                                 }));
  CHECK(checkBounded(hand, SystemId::sinf(), 4, {0, 1, 2, 3}, 1).ok);
  CHECK(subformulaReport(observe(hand, 4, {0, 1, 2, 3}, 1)).ok);

  // A foreign formula in a premise is flagged.
  const Proof foreign = Proof::make(RuleTag::nu(nu), {nu, top()}, OmegaFamily([nu, a](std::size_t i) {
                                      return topProof({nu, iterate(a, top(), i), Form::atom(6)});
                                    }));
  CHECK_FALSE(subformulaReport(observe(foreign, 4, {0, 1}, 1)).ok);
}

TEST_CASE("single-node mutations of the corpus are mostly rejected") {
  int total = 0, rejected = 0;
  for (const auto& e : corpus()) {
    for (const auto& path : testing::allPaths(e.proof)) {
      for (int k = 0; k < testing::kMutationKinds; ++k) {
        bool reject = false;
        std::optional<Proof> mutant;
        try {
          const auto m = testing::mutateNode(testing::nodeAt(e.proof, path), static_cast<testing::Mutation>(k));
          if (!m) continue;
          mutant = testing::replaceAt(e.proof, path, [&](const Proof&) { return *m; });
        } catch (const ShapeError&) {
          reject = true;
        }
        ++total;
        if (!reject) reject = !checkFinite(*mutant, SystemId::s()).ok;
        if (reject) {
          ++rejected;
        } else {
          INFO(e.name, " mutation ", k);
          CHECK(testing::validateS(*mutant).empty());
        }
      }
    }
  }
  CHECK(total > 100);
  CHECK(rejected * 100 >= total * 95);
}

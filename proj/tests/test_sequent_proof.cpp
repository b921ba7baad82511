#include <doctest.h>

#include <atomic>

#include "mucut/corpus.hpp"
#include "mucut/collapse.hpp"
#include "mucut/observe.hpp"
#include "mucut/proof.hpp"

using namespace mucut;

namespace {

const Form p = Form::atom(1);
const Form np = Form::negAtom(1);
const Form q = Form::atom(2);

}  // namespace

TEST_CASE("sequents are sets") {
  const Sequent s{q, p, p};
  CHECK(s.size() == 2);
  CHECK(s == Sequent{p, q});
  CHECK(s.contains(p));
  CHECK_FALSE(s.contains(np));
  CHECK(s.with(np).size() == 3);
  CHECK(s.without(p) == Sequent{q});
  CHECK((Sequent{p} | Sequent{q}) == s);
  CHECK((s - Sequent{q}) == Sequent{p});
  CHECK(Sequent{p}.subsetOf(s));
  CHECK_FALSE(s.subsetOf(Sequent{p}));
  CHECK(print(Sequent{q, p}) == "{p1, p2}");
}

TEST_CASE("sequent levels and positivity") {
  const Form nu = parseFormula("nu X . <> X");
  CHECK(level(Sequent{p, nu}) == 1);
  CHECK(isL0(Sequent{p, nu}));
  CHECK_FALSE(isL0(Sequent{prime(nu)}));
  CHECK(isKPositive(Sequent{prime(nu)}, 2));
}

TEST_CASE("node construction enforces premise shapes") {
  const Proof ax = Proof::make(RuleTag::axiom(p), {p, np, q});
  CHECK(ax.rule() == Rule::Axiom);
  CHECK(ax.premises().empty());
  CHECK_FALSE(ax.hasFamily());

  CHECK_THROWS_AS(Proof::make(RuleTag::cut(q), {p, np}, {ax}), ShapeError);
  CHECK_THROWS_AS(Proof::make(RuleTag::orRule(Form::disj(p, q)), {p}), ShapeError);
  CHECK_THROWS_AS(Proof::make(RuleTag::nu(parseFormula("nu X . X")), {p}), ShapeError);
  CHECK_THROWS_AS(Proof::make(RuleTag::axiom(p), {p, np}, OmegaFamily([ax](std::size_t) { return ax; })),
                  ShapeError);
}

TEST_CASE("nu families are evaluated on demand and memoized") {
  std::atomic<int> calls = 0;
  const Form nu = parseFormula("nu X . X");
  const Proof n = Proof::make(RuleTag::nu(nu), {nu, top()}, OmegaFamily([&calls, nu](std::size_t) {
                                ++calls;
                                return topProof({nu});
                              }));
  CHECK(calls == 0);
  const OmegaFamily& fam = *n.omegaFamily();
  CHECK(fam(3).conclusion() == Sequent{nu, top()});
  CHECK(fam(3).identity() == fam(3).identity());
  CHECK(calls == 1);
  (void)fam(4);
  CHECK(calls == 2);
}

TEST_CASE("delta families check admission") {
  const Form mu = parseFormula("mu X . (p1 | X)");
  const Form t = prime(mu);
  const DeltaFamily fam(1, t, [](const Sequent& delta, const Proof& w) {
    (void)w;
    return Proof::make(RuleTag::axiom(Form::atom(0)), delta.with(Form::atom(0)).with(Form::negAtom(0)));
  });
  auto [delta, witness] = canonicalProbe(t, 0);
  CHECK(fam.admits(delta, witness));
  CHECK_NOTHROW(fam(delta, witness));
  // Wrong endsequent.
  CHECK_THROWS_AS(fam(delta.with(q), witness), AdmissionError);
  // Not 1-positive.
  const Sequent bad{prime(parseFormula("nu X . <> X"))};
  CHECK_FALSE(fam.admits(bad, topProof(bad.with(t))));
  // A cut at the witness root.
  const Proof cutWitness =
      Proof::make(RuleTag::cut(q), delta.with(t), {topProof(Sequent{t, q}), topProof(Sequent{t, Form::negAtom(2)})});
  CHECK_FALSE(fam.admits(delta, cutWitness));
  // map keeps admission data.
  const DeltaFamily mapped = fam.map([](const Sequent&, const Proof&, Proof out) { return out; });
  CHECK(mapped.h() == 1);
  CHECK(mapped.target() == t);
  CHECK_THROWS_AS(mapped(bad, topProof(bad.with(t))), AdmissionError);
}

TEST_CASE("canonical probes") {
  const Form mu = parseFormula("mu X . (p1 | X)");
  auto [delta, proof] = canonicalProbe(mu, 0);
  CHECK(delta == Sequent{top()});
  CHECK(proof.conclusion() == Sequent{top(), mu});
  CHECK(proof.rule() == Rule::Or);
  CHECK(proof.premises().size() == 1);
  CHECK(proof.premises()[0].rule() == Rule::Axiom);  // two nodes in total

  auto [delta2, proof2] = canonicalProbe(mu, 2);
  CHECK(delta2 == Sequent{top(), Form::atom(1), Form::atom(2)});
  CHECK(proof2.conclusion() == delta2.with(mu));
  CHECK_THROWS_AS(canonicalProbe(parseFormula("nu X . X"), 0), PreconditionError);
}

TEST_CASE("observation of finite proofs") {
  const Proof ax = Proof::make(RuleTag::axiom(p), {p, np});
  const Observation o = observe(ax, 5, {}, 0);
  CHECK(o.children.empty());
  CHECK_FALSE(o.truncated);
  CHECK(countNodes(o) == 1);
  CHECK(isCutFreeObserved(o));

  const Proof e2 = corpusProof("E2");
  const Observation root = observe(e2, 0, {0}, 1);
  CHECK(root.children.empty());
  CHECK(root.truncated);
  CHECK_FALSE(isCutFreeObserved(root));
  CHECK(observe(ax, 0, {0}, 1).truncated == false);

  const Observation full = observe(e2, 10, {0}, 1);
  CHECK(countNodes(full) == 5);
  CHECK(truncate(full, 1) == observe(e2, 1, {0}, 1));
}

TEST_CASE("observation of the E1 S-infinity proof") {
  const PipelineResult res = pipeline(corpusProof("E1"));
  const Observation o = observe(res.sinf, 3, {0, 1, 2}, 1);
  CHECK(o.conclusion == Sequent{parseFormula("nu X . X"), top()});
  CHECK(o.tag.rule == Rule::Nu);
  REQUIRE(o.children.size() == 3);
  CHECK(o.sampledIndices == std::vector<std::size_t>{0, 1, 2});
  for (const auto& c : o.children) {
    // Every approximant X^i(top) is top itself: (or) over an axiom.
    CHECK(c.tag.rule == Rule::Or);
    REQUIRE(c.children.size() == 1);
    CHECK(c.children[0].tag.rule == Rule::Axiom);
    CHECK_FALSE(c.children[0].truncated);
  }
  CHECK_FALSE(hasErrorObserved(o));
  CHECK_FALSE(hasNuBarObserved(o));
}

TEST_CASE("observation records failures as error leaves") {
  const Form nu = parseFormula("nu X . X");
  const Proof n = Proof::make(RuleTag::nu(nu), {nu, top()}, OmegaFamily([](std::size_t i) -> Proof {
                                if (i == 1) throw FuelExhausted("out of fuel");
                                return topProof({parseFormula("nu X . X")});
                              }));
  const Observation o = observe(n, 2, {0, 1}, 0);
  CHECK(hasErrorObserved(o));
  REQUIRE(o.children.size() == 2);
  REQUIRE(o.children[1].error.has_value());
  CHECK(o.children[1].error->starts_with("fuel exhausted"));
}

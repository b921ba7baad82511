#include "mucut/corpus.hpp"

#include <algorithm>
#include <cctype>

#include "mucut/cutelim.hpp"

namespace mucut {

namespace {

Proof orNode(const Form& f, const Sequent& concl, Proof premise) {
  return Proof::make(RuleTag::orRule(f), concl, {std::move(premise)});
}

/// {context, top} by (or) over an axiom.
Proof topIn(const Sequent& context) { return topProof(context); }

Proof e1() {
  const Form t = top();
  const Form nt = negate(t);  // ~p0 & p0
  const Form mu = Form::mu(Form::var());
  const Proof left = topIn({Form::negAtom(0)});
  const Proof right = topIn({Form::atom(0)});
  const Proof premise = Proof::make(RuleTag::andRule(nt), {nt, t}, {left, right});
  return Proof::make(RuleTag::ind(mu, t), {negate(mu), t}, {premise});
}

Proof e2() {
  const Form q = Form::atom(1);
  const Form t = top();
  return Proof::make(RuleTag::cut(q), {t}, {topIn({q}), topIn({Form::negAtom(1)})});
}

Proof e3() {
  const Form mu = Form::mu(Form::disj(Form::atom(1), Form::var()));
  return Proof::make(RuleTag::axiomMu(mu), {mu, negate(mu)});
}

Proof e4() {
  const Form t = top();
  const Form m1 = Form::mu(Form::disj(Form::atom(1), Form::diamond(Form::var())));  // level 1
  const Form n1 = negate(m1);                                                      // nu X.(~p1 & []X)
  const Form boxTop = Form::box(t);
  const Form b = Form::disj(Form::diamond(n1), boxTop);
  const Form m2 = Form::mu(m1);  // level 2, vacuous binder: A(Y) = m1 for every Y
  const Form n2 = negate(m2);

  // Level-1 pattern: cut on m1 between the mu-axiom and (ind) with B = top.
  const Form a1top = substitute(m1.body(), t);
  const Proof ind1 = Proof::make(RuleTag::ind(m1, t), {n1, t}, {topIn({negate(a1top)})});
  const Proof ax1 = Proof::make(RuleTag::axiomMu(m1), {n1, t, m1});
  const Proof cut1 = Proof::make(RuleTag::cut(m1), {n1, t}, {ax1, ind1});

  // Positive side of the level-2 cut: {B, m2}.
  const Proof boxed = makeBox(boxTop, cut1, {Form::diamond(n1), boxTop, m1});
  const Proof orB = orNode(b, {b, m1}, boxed);
  const Proof pos = Proof::make(RuleTag::clo(m2), {b, m2}, {orB});

  // Negative side: (ind) on m2 with premise {~m1, B}.
  const Proof boxedTop = makeBox(boxTop, topIn({n1}), {n1, Form::diamond(n1), boxTop});
  const Proof indPrem = orNode(b, {n1, b}, boxedTop);
  const Proof neg = Proof::make(RuleTag::ind(m2, b), {n2, b}, {indPrem});

  return Proof::make(RuleTag::cut(m2), {b}, {pos, neg});
}

}  // namespace

std::vector<CorpusEntry> corpus() {
  return {
      {"E1", "nu X.X, top by induction with A = X, B = top", e1()},
      {"E2", "top by a cut on p1", e2()},
      {"E3", "mu-axiom on mu X.(p1 | X)", e3()},
      {"E4", "level-2 cut against induction, with a level-1 cut against induction under a box", e4()},
  };
}

Proof corpusProof(const std::string& name) {
  auto lower = [](std::string s) {
    std::ranges::transform(s, s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
  };
  for (auto& e : corpus())
    if (lower(e.name) == lower(name)) return e.proof;
  throw PreconditionError("unknown corpus entry '" + name + "'");
}

}  // namespace mucut

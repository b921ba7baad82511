#include "mucut/checker.hpp"

#include <algorithm>
#include <unordered_set>

#include "mucut/sexpr.hpp"

namespace mucut {

void CheckReport::add(std::string path, std::string message) {
  ok = false;
  violations.push_back({std::move(path), std::move(message)});
}

void CheckReport::merge(const CheckReport& other) {
  ok = ok && other.ok;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  nodesChecked += other.nodesChecked;
  truncationPoints += other.truncationPoints;
}

namespace {

struct Child {
  std::string label;
  Proof proof;
};

struct Evaluated {
  std::vector<Child> children;
  std::vector<std::string> errors;
  std::vector<std::pair<std::size_t, Sequent>> nu;
  std::vector<std::pair<Sequent, Sequent>> delta;  // (Delta, premise conclusion)
};

Evaluated evaluate(const Proof& p, const std::vector<std::size_t>& samples, std::size_t probes) {
  Evaluated ev;
  for (std::size_t i = 0; i < p.premises().size(); ++i)
    ev.children.push_back({std::to_string(i), p.premises()[i]});
  if (const auto* fam = p.omegaFamily()) {
    for (std::size_t i : samples) {
      try {
        Proof q = (*fam)(i);
        ev.nu.emplace_back(i, q.conclusion());
        ev.children.push_back({"nu[" + std::to_string(i) + "]", std::move(q)});
      } catch (const std::exception& e) {
        ev.errors.push_back("nu premise " + std::to_string(i) + " failed: " + e.what());
      }
    }
  }
  if (const auto* fam = p.deltaFamily()) {
    for (std::size_t j = 0; j < probes; ++j) {
      try {
        auto [delta, witness] = canonicalProbe(fam->target(), j);
        Proof q = (*fam)(delta, witness);
        ev.delta.emplace_back(delta, q.conclusion());
        ev.children.push_back({"probe[" + std::to_string(j) + "]", std::move(q)});
      } catch (const std::exception& e) {
        ev.errors.push_back("omega premise for probe " + std::to_string(j) + " failed: " + e.what());
      }
    }
  }
  return ev;
}

// The context Gamma of a one-principal rule is either the conclusion without
// the principal formula or the whole conclusion (sets absorb contraction).
bool fits(const Sequent& concl, const Form& principal, const Sequent& premise, const Sequent& actives) {
  return premise == (concl.without(principal) | actives) || premise == (concl | actives);
}

bool tagAllowed(Rule r, const SystemId& sys) {
  switch (sys.kind) {
    case SystemId::Kind::S:
      return r == Rule::Axiom || r == Rule::AxiomMu || r == Rule::Or || r == Rule::And ||
             r == Rule::Box || r == Rule::Clo || r == Rule::Ind || r == Rule::Cut;
    case SystemId::Kind::SInf:
      return r == Rule::Axiom || r == Rule::Or || r == Rule::And || r == Rule::Box ||
             r == Rule::Clo || r == Rule::Nu;
    case SystemId::Kind::OmegaK:
      if (r == Rule::Omega || r == Rule::OmegaBar) return sys.k >= 1;
      return r != Rule::AxiomMu && r != Rule::Ind;
  }
  return false;
}

std::vector<std::string> schemaViolations(const Proof& p, const SystemId& sys, const Evaluated& ev) {
  std::vector<std::string> v;
  const RuleTag& t = p.tag();
  const Sequent& concl = p.conclusion();
  const Form& F = t.principal;
  auto premiseConcl = [&](std::size_t i) -> const Sequent& { return p.premises()[i].conclusion(); };

  if (!tagAllowed(t.rule, sys)) {
    v.push_back("rule " + std::string(ruleName(t.rule)) + " is not a rule of " + print(sys));
    return v;
  }
  for (const auto& f : concl) {
    if (!f.isFormula()) v.push_back("free variable in " + print(f));
    if (sys.kind != SystemId::Kind::OmegaK && !f.isL0()) v.push_back("nubar formula " + print(f) + " outside Omega_k");
  }

  switch (t.rule) {
    case Rule::Axiom:
      if (F.op() != Op::Atom) v.push_back("axiom: " + print(F) + " is not a positive atom");
      else if (!concl.contains(F) || !concl.contains(negate(F)))
        v.push_back("axiom: pair " + print(F) + ", " + print(negate(F)) + " not in conclusion");
      break;
    case Rule::AxiomMu:
      if (F.op() != Op::Mu) v.push_back("axiommu: " + print(F) + " is not a mu-formula");
      else if (!concl.contains(F) || !concl.contains(negate(F)))
        v.push_back("axiommu: pair " + print(F) + ", " + print(negate(F)) + " not in conclusion");
      break;
    case Rule::Or:
      if (F.op() != Op::Or || !concl.contains(F)) v.push_back("or: principal " + print(F) + " missing or not a disjunction");
      else if (!fits(concl, F, premiseConcl(0), Sequent{F.left(), F.right()}))
        v.push_back("or: premise is not Gamma, A, B");
      break;
    case Rule::And:
      if (F.op() != Op::And || !concl.contains(F)) v.push_back("and: principal " + print(F) + " missing or not a conjunction");
      else {
        if (!fits(concl, F, premiseConcl(0), Sequent{F.left()})) v.push_back("and: left premise is not Gamma, A");
        if (!fits(concl, F, premiseConcl(1), Sequent{F.right()})) v.push_back("and: right premise is not Gamma, B");
      }
      break;
    case Rule::Box: {
      if (F.op() != Op::Box || !concl.contains(F)) {
        v.push_back("box: principal " + print(F) + " missing or not a box");
        break;
      }
      const Sequent& prem = premiseConcl(0);
      if (!prem.contains(F.body())) {
        v.push_back("box: premise lacks " + print(F.body()));
        break;
      }
      Sequent expected = t.side.with(F);
      for (const auto& g : prem.without(F.body())) expected = expected.with(Form::diamond(g));
      if (!(expected == concl)) v.push_back("box: conclusion is not <>Gamma, []A, Sigma");
      break;
    }
    case Rule::Clo:
      if (F.op() != Op::Mu || !concl.contains(F)) v.push_back("clo: principal " + print(F) + " missing or not a mu-formula");
      else if (!fits(concl, F, premiseConcl(0), Sequent{substitute(F.body(), F)}))
        v.push_back("clo: premise is not Gamma, A(mu X.A)");
      break;
    case Rule::Ind:
      if (F.op() != Op::Mu) {
        v.push_back("ind: " + print(F) + " is not a mu-formula");
        break;
      }
      if (!(concl == Sequent{negate(F), t.aux}))
        v.push_back("ind: conclusion must be exactly ~mu X.A, B (no side formulas)");
      if (!(premiseConcl(0) == Sequent{negate(substitute(F.body(), t.aux)), t.aux}))
        v.push_back("ind: premise must be exactly ~A(B), B");
      break;
    case Rule::Cut: {
      if (!F.isL0() || !F.isFormula()) {
        v.push_back("cut: cut formula " + print(F) + " is not an L0 formula");
        break;
      }
      Form pos = F, neg = negate(F);
      if (sys.kind == SystemId::Kind::OmegaK) {
        if (F.level() > sys.k)
          v.push_back("cut: level " + std::to_string(F.level()) + " of " + print(F) + " exceeds k=" + std::to_string(sys.k));
        pos = prime(F);
        neg = primedNegation(F);
      }
      const Sequent& a = premiseConcl(0);
      const Sequent& b = premiseConcl(1);
      bool straight = a == concl.with(pos) && b == concl.with(neg);
      bool swapped = a == concl.with(neg) && b == concl.with(pos);
      if (!straight && !swapped) v.push_back("cut: premises are not Gamma, A' and Gamma, (~A)'");
      break;
    }
    case Rule::Nu:
      if (F.op() != Op::Nu || !concl.contains(F)) {
        v.push_back("nu: principal " + print(F) + " missing or not a nu-formula");
        break;
      }
      for (const auto& [i, prem] : ev.nu)
        if (!fits(concl, F, prem, Sequent{iterate(F.body(), top(), i)}))
          v.push_back("nu: premise " + std::to_string(i) + " is not Gamma, A^" + std::to_string(i) + "(top)");
      break;
    case Rule::Omega:
    case Rule::OmegaBar: {
      const std::string name(ruleName(t.rule));
      if (F.op() != Op::Mu || !(prime(F) == F)) {
        v.push_back(name + ": target " + print(F) + " is not a primed mu-formula");
        break;
      }
      if (t.h < 1 || t.h > sys.k) v.push_back(name + ": level h=" + std::to_string(t.h) + " outside 1..k");
      if (F.level() != t.h) v.push_back(name + ": lev((~mu X.A)') is " + std::to_string(F.level()) + ", not h");
      if (t.rule == Rule::Omega) {
        const Form principal = primedNegation(F);
        if (!concl.contains(principal)) {
          v.push_back("omega: conclusion lacks " + print(principal));
          break;
        }
        for (const auto& [delta, prem] : ev.delta)
          if (!(prem == (delta | concl.without(principal))) && !(prem == (delta | concl)))
            v.push_back("omega: premise for " + print(delta) + " is not Delta, Gamma");
      } else {
        if (!(premiseConcl(0) == concl.with(F))) v.push_back("omegabar: first premise is not Gamma, (mu X.A)'");
        for (const auto& [delta, prem] : ev.delta)
          if (!(prem == (delta | concl))) v.push_back("omegabar: premise for " + print(delta) + " is not Delta, Gamma");
      }
      break;
    }
  }
  return v;
}

void checkRec(const Proof& p, const SystemId& sys, std::size_t depth, const std::vector<std::size_t>& samples,
              std::size_t probes, const std::string& path, CheckReport& report) {
  const bool hasPremises = !p.premises().empty() || p.hasFamily();
  if (depth == 0) {
    if (hasPremises) ++report.truncationPoints;
    return;
  }
  ++report.nodesChecked;
  Evaluated ev = evaluate(p, samples, probes);
  for (auto& e : ev.errors) report.add(path, e);
  for (auto& m : schemaViolations(p, sys, ev)) report.add(path, m);
  for (const auto& c : ev.children) checkRec(c.proof, sys, depth - 1, samples, probes, path + "/" + c.label, report);
}

}  // namespace

std::vector<std::string> checkLocal(const Proof& node, const SystemId& system,
                                    const std::vector<std::size_t>& samples, std::size_t probes) {
  Evaluated ev = evaluate(node, samples, probes);
  auto v = schemaViolations(node, system, ev);
  v.insert(v.end(), ev.errors.begin(), ev.errors.end());
  return v;
}

CheckReport checkFinite(const Proof& p, const SystemId& system) {
  CheckReport report;
  std::function<void(const Proof&, const std::string&)> go = [&](const Proof& q, const std::string& path) {
    if (q.hasFamily()) throw PreconditionError("checkFinite: premise family at " + path);
    ++report.nodesChecked;
    for (auto& m : schemaViolations(q, system, Evaluated{})) report.add(path, m);
    for (std::size_t i = 0; i < q.premises().size(); ++i) go(q.premises()[i], path + "/" + std::to_string(i));
  };
  go(p, "root");
  return report;
}

CheckReport checkBounded(const Proof& p, const SystemId& system, std::size_t depth,
                         const std::vector<std::size_t>& samples, std::size_t probes) {
  CheckReport report;
  checkRec(p, system, depth, samples, probes, "root", report);
  return report;
}

unsigned levelBound(const Proof& p) {
  if (p.hasFamily()) throw PreconditionError("levelBound: proof has a premise family");
  unsigned l = level(p.conclusion());
  for (const auto& q : p.premises()) l = std::max(l, levelBound(q));
  return l;
}

CheckReport subformulaReport(const Observation& o) {
  CheckReport report;
  std::size_t maxIndex = 0;
  forEachNode(o, [&](const Observation& n, std::size_t) {
    for (auto i : n.sampledIndices) maxIndex = std::max(maxIndex, i);
  });

  std::unordered_set<Form, FormHash> closure;
  std::vector<Form> work(o.conclusion.begin(), o.conclusion.end());
  while (!work.empty()) {
    Form f = work.back();
    work.pop_back();
    if (!closure.insert(f).second) continue;
    switch (f.op()) {
      case Op::And:
      case Op::Or:
        work.push_back(f.left());
        work.push_back(f.right());
        break;
      case Op::Box:
      case Op::Diamond:
        work.push_back(f.body());
        break;
      case Op::Mu:
        work.push_back(substitute(f.body(), f));
        break;
      case Op::Nu:
      case Op::NuBar:
        for (std::size_t i = 0; i <= maxIndex; ++i) work.push_back(iterate(f.body(), top(), i));
        break;
      default:
        break;
    }
  }

  std::function<void(const Observation&, const std::string&)> go = [&](const Observation& n, const std::string& path) {
    ++report.nodesChecked;
    if (n.error) report.add(path, "evaluation error: " + *n.error);
    if (!n.error && n.tag.rule == Rule::Cut) report.add(path, "cut node with cut formula " + print(n.tag.principal));
    for (const auto& f : n.conclusion) {
      if (f.hasNuBar()) report.add(path, "nubar occurs in " + print(f));
      if (!closure.count(f)) report.add(path, print(f) + " is outside the approximant closure of the endsequent");
    }
    if (n.truncated) ++report.truncationPoints;
    for (std::size_t i = 0; i < n.children.size(); ++i) go(n.children[i], path + "/" + std::to_string(i));
  };
  go(o, "root");
  return report;
}

std::string renderText(const CheckReport& r) {
  std::string out = r.ok ? "ok" : "fail";
  out += " (" + std::to_string(r.nodesChecked) + " nodes checked, " + std::to_string(r.truncationPoints) +
         " truncation points)\n";
  for (const auto& v : r.violations) out += "  " + v.path + ": " + v.message + "\n";
  return out;
}

std::string renderSexpr(const CheckReport& r) {
  std::string out = r.ok ? "(report ok" : "(report fail";
  for (const auto& v : r.violations) out += "\n  (violation " + v.path + " " + sexpr::quote(v.message) + ")";
  return out + ")\n";
}

}  // namespace mucut

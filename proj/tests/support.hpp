// Shared helpers for the test executables: a seeded formula generator, a
// node rewriter for finite proofs, single-node mutations and a second,
// independently written validator for finite S-proofs.
#ifndef MUCUT_TESTS_SUPPORT_HPP
#define MUCUT_TESTS_SUPPORT_HPP

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mucut/proof.hpp"
#include "mucut/syntax.hpp"

namespace mucut::testing {

// -- random formulas ---------------------------------------------------------

/// Random closed operator forms with size <= maxSize and level <= maxLevel.
/// With `nubar`, some greatest fixed points are NuBar.
class FormGen {
 public:
  explicit FormGen(std::uint32_t seed, std::size_t maxSize = 30, unsigned maxLevel = 3, bool nubar = false)
      : rng_(seed), maxSize_(maxSize), maxLevel_(maxLevel), nubar_(nubar) {}

  Form formula() {
    for (;;) {
      const std::size_t budget = 1 + pick(maxSize_);
      Form f = gen(budget, maxLevel_, false);
      if (f.size() <= maxSize_ && f.level() <= maxLevel_) return f;
    }
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Form leaf(bool varOk) {
    const std::size_t c = pick(varOk ? 5 : 4);
    const unsigned idx = static_cast<unsigned>(pick(4));
    if (c == 4) return Form::var();
    return c % 2 == 0 ? Form::atom(idx) : Form::negAtom(idx);
  }

  Form gen(std::size_t budget, unsigned levels, bool varOk) {
    if (budget <= 1) return leaf(varOk);
    switch (pick(levels > 0 ? 7 : 4)) {
      case 0: {
        const std::size_t l = 1 + pick(budget - 1);
        return Form::conj(gen(l, levels, varOk), gen(budget - l, levels, varOk));
      }
      case 1: {
        const std::size_t l = 1 + pick(budget - 1);
        return Form::disj(gen(l, levels, varOk), gen(budget - l, levels, varOk));
      }
      case 2: return Form::box(gen(budget - 1, levels, varOk));
      case 3: return Form::diamond(gen(budget - 1, levels, varOk));
      case 4: return Form::mu(gen(budget - 1, levels - 1, true));
      case 5: return Form::nu(gen(budget - 1, levels - 1, true));
      default:
        return nubar_ ? Form::nubar(gen(budget - 1, levels - 1, true)) : Form::mu(gen(budget - 1, levels - 1, true));
    }
  }

  std::mt19937 rng_;
  std::size_t maxSize_;
  unsigned maxLevel_;
  bool nubar_;
};

// -- finite proof surgery ----------------------------------------------------

/// Paths address nodes of a finite proof by premise indices from the root.
using Path = std::vector<std::size_t>;

inline void collectPaths(const Proof& p, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  for (std::size_t j = 0; j < p.premises().size(); ++j) {
    cur.push_back(j);
    collectPaths(p.premises()[j], cur, out);
    cur.pop_back();
  }
}

inline std::vector<Path> allPaths(const Proof& p) {
  std::vector<Path> out;
  Path cur;
  collectPaths(p, cur, out);
  return out;
}

inline Proof nodeAt(const Proof& p, const Path& path, std::size_t from = 0) {
  return from == path.size() ? p : nodeAt(p.premises().at(path[from]), path, from + 1);
}

/// Rebuilds `p` with the node at `path` replaced by `fn(node)`; ancestors keep
/// their tags and conclusions.
inline Proof replaceAt(const Proof& p, const Path& path, const std::function<Proof(const Proof&)>& fn,
                       std::size_t from = 0) {
  if (from == path.size()) return fn(p);
  std::vector<Proof> ps = p.premises();
  ps.at(path[from]) = replaceAt(ps[path[from]], path, fn, from + 1);
  return Proof::make(p.tag(), p.conclusion(), std::move(ps));
}

// -- mutations ---------------------------------------------------------------

enum class Mutation {
  DropFormula,      // remove one conclusion formula
  AddFormula,       // add a foreign atom to the conclusion
  RetargetTag,      // principal := another conclusion formula
  SwapPremises,     // reverse the premise order
  RenameAtom,       // p_i -> p_{i+1} in one conclusion formula
  SkipNode,         // replace the node by its first premise
  ChangeRule,       // keep arity, switch to a sibling rule
  PerturbTagData,   // Box side / Ind aux / Cut formula
};
inline constexpr int kMutationKinds = 8;

inline Form renameFirstAtom(const Form& f) {
  switch (f.op()) {
    case Op::Atom: return Form::atom(f.index() + 1);
    case Op::NegAtom: return Form::negAtom(f.index() + 1);
    case Op::Var: return f;
    case Op::And: {
      Form l = renameFirstAtom(f.left());
      return l == f.left() ? Form::conj(f.left(), renameFirstAtom(f.right())) : Form::conj(l, f.right());
    }
    case Op::Or: {
      Form l = renameFirstAtom(f.left());
      return l == f.left() ? Form::disj(f.left(), renameFirstAtom(f.right())) : Form::disj(l, f.right());
    }
    case Op::Box: return Form::box(renameFirstAtom(f.body()));
    case Op::Diamond: return Form::diamond(renameFirstAtom(f.body()));
    case Op::Mu: return Form::mu(renameFirstAtom(f.body()));
    case Op::Nu: return Form::nu(renameFirstAtom(f.body()));
    case Op::NuBar: return Form::nubar(renameFirstAtom(f.body()));
  }
  return f;
}

/// Applies one mutation at one node. `variant` selects among the choices a
/// mutation has (which formula, which atom, which sibling rule). Returns
/// nullopt when the mutation does not apply there. Construction failures
/// (ShapeError) propagate: the kernel rejects such mutants outright.
inline std::optional<Proof> mutateNode(const Proof& n, Mutation m, std::size_t variant = 0) {
  const RuleTag& t = n.tag();
  const Sequent& c = n.conclusion();
  switch (m) {
    case Mutation::DropFormula: {
      if (variant >= c.size()) return std::nullopt;
      return Proof::make(t, c.without(c.forms()[variant]), n.premises());
    }
    case Mutation::AddFormula:
      if (variant >= 3) return std::nullopt;
      return Proof::make(t, c.with(variant == 2 ? Form::negAtom(0) : Form::atom(static_cast<unsigned>(9 + variant))),
                         n.premises());
    case Mutation::RetargetTag: {
      std::size_t seen = 0;
      for (const auto& f : c) {
        if (f == t.principal) continue;
        if (seen++ < variant) continue;
        RuleTag nt = t;
        nt.principal = f;
        return Proof::make(nt, c, n.premises());
      }
      return std::nullopt;
    }
    case Mutation::SwapPremises: {
      if (variant > 0 || n.premises().size() < 2) return std::nullopt;
      return Proof::make(t, c, {n.premises()[1], n.premises()[0]});
    }
    case Mutation::RenameAtom: {
      std::size_t seen = 0;
      for (const auto& f : c) {
        Form g = renameFirstAtom(f);
        if (g == f || seen++ < variant) continue;
        return Proof::make(t, c.without(f).with(g), n.premises());
      }
      return std::nullopt;
    }
    case Mutation::SkipNode:
      if (variant >= n.premises().size()) return std::nullopt;
      return n.premises()[variant];
    case Mutation::ChangeRule: {
      // Sibling rules with the same arity.
      static const std::vector<Rule> unary{Rule::Or, Rule::Clo, Rule::Box, Rule::Ind};
      static const std::vector<Rule> binary{Rule::And, Rule::Cut};
      static const std::vector<Rule> leaf{Rule::Axiom, Rule::AxiomMu};
      const auto& group = n.premises().empty() ? leaf : n.premises().size() == 1 ? unary : binary;
      std::vector<Rule> others;
      for (Rule r : group)
        if (r != t.rule) others.push_back(r);
      if (variant >= others.size()) return std::nullopt;
      RuleTag nt = t;
      nt.rule = others[variant];
      return Proof::make(nt, c, n.premises());
    }
    case Mutation::PerturbTagData: {
      if (variant >= 2) return std::nullopt;
      const Form extra = variant == 0 ? Form::atom(8) : Form::negAtom(0);
      RuleTag nt = t;
      if (t.rule == Rule::Box) nt.side = t.side.with(extra);
      else if (t.rule == Rule::Ind) nt.aux = Form::disj(t.aux, extra);
      else if (t.rule == Rule::Cut) nt.principal = Form::conj(t.principal, extra);
      else return std::nullopt;
      return Proof::make(nt, c, n.premises());
    }
  }
  return std::nullopt;
}

/// Upper bound on the variants any mutation kind uses on corpus-sized nodes.
inline constexpr std::size_t kMaxVariants = 6;

// -- independent validator for finite S-proofs --------------------------------

/// A deliberately different formulation of the S rules: instead of matching
/// the premise against Gamma-candidates it checks "nothing lost, nothing
/// foreign" inclusions. Returns an empty string on success.
inline std::string validateS(const Proof& p) {
  const RuleTag& t = p.tag();
  const Sequent& c = p.conclusion();
  const auto& ps = p.premises();
  for (const auto& f : c)
    if (f.hasFreeVar() || f.hasNuBar()) return "non-L0 formula " + print(f);
  auto need = [](bool ok, const char* what) { return ok ? std::string() : std::string(what); };
  auto onePrincipal = [&](const Form& f, const std::vector<Sequent>& acts) -> std::string {
    if (!c.contains(f)) return "principal not in conclusion";
    if (ps.size() != acts.size()) return "arity";
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const Sequent& q = ps[j].conclusion();
      if (!acts[j].subsetOf(q)) return "active formula missing";
      if (!(q - acts[j]).subsetOf(c)) return "foreign premise formula";
      if (!c.without(f).subsetOf(q)) return "context lost";
    }
    return {};
  };
  std::string err;
  switch (t.rule) {
    case Rule::Axiom:
      err = need(t.principal.op() == Op::Atom && c.contains(t.principal) &&
                     c.contains(Form::negAtom(t.principal.index())) && ps.empty(),
                 "axiom");
      break;
    case Rule::AxiomMu:
      err = need(t.principal.op() == Op::Mu && c.contains(t.principal) && c.contains(negate(t.principal)) &&
                     ps.empty(),
                 "axiommu");
      break;
    case Rule::Or:
      err = t.principal.op() != Op::Or ? "or" : onePrincipal(t.principal, {{t.principal.left(), t.principal.right()}});
      break;
    case Rule::And:
      err = t.principal.op() != Op::And ? "and"
                                        : onePrincipal(t.principal, {{t.principal.left()}, {t.principal.right()}});
      break;
    case Rule::Clo:
      err = t.principal.op() != Op::Mu ? "clo"
                                       : onePrincipal(t.principal, {{substitute(t.principal.body(), t.principal)}});
      break;
    case Rule::Box: {
      if (t.principal.op() != Op::Box || ps.size() != 1 || !c.contains(t.principal)) {
        err = "box";
        break;
      }
      const Sequent& q = ps[0].conclusion();
      if (!q.contains(t.principal.body())) {
        err = "box active";
        break;
      }
      Sequent expected{t.principal};
      for (const auto& g : q)
        if (!(g == t.principal.body())) expected = expected.with(Form::diamond(g));
      if (!expected.subsetOf(c)) err = "box diamonds";
      else if (!((expected | t.side) == c)) err = "box side";
      break;
    }
    case Rule::Ind: {
      const Form& mu = t.principal;
      if (mu.op() != Op::Mu || ps.size() != 1) {
        err = "ind";
        break;
      }
      const Sequent concl{negate(mu), t.aux};
      const Sequent prem{negate(substitute(mu.body(), t.aux)), t.aux};
      err = need(c == concl && ps[0].conclusion() == prem, "ind shape");
      break;
    }
    case Rule::Cut: {
      if (ps.size() != 2 || t.principal.hasNuBar() || t.principal.hasFreeVar()) {
        err = "cut";
        break;
      }
      const Form a = t.principal, na = negate(t.principal);
      const Sequent& q0 = ps[0].conclusion();
      const Sequent& q1 = ps[1].conclusion();
      const bool straight = q0 == c.with(a) && q1 == c.with(na);
      const bool crossed = q0 == c.with(na) && q1 == c.with(a);
      err = need(straight || crossed, "cut shape");
      break;
    }
    default:
      err = "not an S rule";
  }
  if (!err.empty()) return err + " at " + print(c);
  for (const auto& q : ps)
    if (auto e = validateS(q); !e.empty()) return e;
  return {};
}

}  // namespace mucut::testing

#endif  // MUCUT_TESTS_SUPPORT_HPP

#include "mucut/proof.hpp"

#include <map>
#include <mutex>
#include <variant>

namespace mucut {

std::string_view ruleName(Rule r) {
  switch (r) {
    case Rule::Axiom: return "axiom";
    case Rule::AxiomMu: return "axiommu";
    case Rule::Or: return "or";
    case Rule::And: return "and";
    case Rule::Box: return "box";
    case Rule::Clo: return "clo";
    case Rule::Ind: return "ind";
    case Rule::Cut: return "cut";
    case Rule::Nu: return "nu";
    case Rule::Omega: return "omega";
    case Rule::OmegaBar: return "omegabar";
  }
  return "?";
}

std::string print(const SystemId& s) {
  switch (s.kind) {
    case SystemId::Kind::S: return "s";
    case SystemId::Kind::SInf: return "sinf";
    case SystemId::Kind::OmegaK: return "omega-k=" + std::to_string(s.k);
  }
  return "?";
}

// ---------------------------------------------------------------------------

struct OmegaFamily::Impl {
  std::function<Proof(std::size_t)> fn;
  std::mutex mutex;
  std::map<std::size_t, Proof> memo;
};

OmegaFamily::OmegaFamily(std::function<Proof(std::size_t)> fn) : impl_(std::make_shared<Impl>()) {
  impl_->fn = std::move(fn);
}

Proof OmegaFamily::operator()(std::size_t i) const {
  {
    std::lock_guard lock(impl_->mutex);
    if (auto it = impl_->memo.find(i); it != impl_->memo.end()) return it->second;
  }
  Proof p = impl_->fn(i);
  std::lock_guard lock(impl_->mutex);
  return impl_->memo.emplace(i, std::move(p)).first->second;
}

DeltaFamily::DeltaFamily(unsigned h, Form target, Fn fn)
    : h_(h), target_(std::move(target)), fn_(std::make_shared<const Fn>(std::move(fn))) {}

bool DeltaFamily::admits(const Sequent& delta, const Proof& witness) const {
  return isKPositive(delta, h_) && witness.conclusion() == delta.with(target_) &&
         witness.rule() != Rule::Cut;
}

Proof DeltaFamily::operator()(const Sequent& delta, const Proof& witness) const {
  if (!admits(delta, witness)) {
    throw AdmissionError("omega family (h=" + std::to_string(h_) + ", target " + print(target_) +
                         ") does not admit " + print(delta) + " with witness of " +
                         print(witness.conclusion()));
  }
  return (*fn_)(delta, witness);
}

DeltaFamily DeltaFamily::map(std::function<Proof(const Sequent&, const Proof&, Proof)> post) const {
  auto inner = fn_;
  return DeltaFamily(h_, target_, [inner, post = std::move(post)](const Sequent& d, const Proof& w) {
    return post(d, w, (*inner)(d, w));
  });
}

// ---------------------------------------------------------------------------

struct Proof::Node {
  RuleTag tag;
  Sequent conclusion;
  std::vector<Proof> premises;
  std::variant<std::monostate, OmegaFamily, DeltaFamily> family;
};

std::size_t finiteArity(Rule r) {
  switch (r) {
    case Rule::Axiom:
    case Rule::AxiomMu:
    case Rule::Nu:
    case Rule::Omega:
      return 0;
    case Rule::Or:
    case Rule::Box:
    case Rule::Clo:
    case Rule::Ind:
    case Rule::OmegaBar:
      return 1;
    case Rule::And:
    case Rule::Cut:
      return 2;
  }
  return 0;
}

namespace {

[[noreturn]] void shapeError(Rule r, const std::string& what) {
  throw ShapeError(std::string(ruleName(r)) + " node: " + what);
}

}  // namespace

Proof Proof::make(RuleTag tag, Sequent conclusion, std::vector<Proof> premises) {
  const Rule r = tag.rule;
  if (r == Rule::Nu || r == Rule::Omega || r == Rule::OmegaBar) shapeError(r, "requires a premise family");
  if (premises.size() != finiteArity(r)) {
    shapeError(r, "expected " + std::to_string(finiteArity(r)) + " premises, got " +
                      std::to_string(premises.size()));
  }
  auto n = std::make_shared<Node>();
  n->tag = std::move(tag);
  n->conclusion = std::move(conclusion);
  n->premises = std::move(premises);
  return Proof(std::move(n));
}

Proof Proof::make(RuleTag tag, Sequent conclusion, OmegaFamily family) {
  if (tag.rule != Rule::Nu) shapeError(tag.rule, "does not take an indexed family");
  auto n = std::make_shared<Node>();
  n->tag = std::move(tag);
  n->conclusion = std::move(conclusion);
  n->family = std::move(family);
  return Proof(std::move(n));
}

Proof Proof::make(RuleTag tag, Sequent conclusion, DeltaFamily family) {
  if (tag.rule != Rule::Omega) shapeError(tag.rule, "does not take a sequent-indexed family alone");
  if (!(family.target() == tag.principal) || family.h() != tag.h) shapeError(tag.rule, "family/tag mismatch");
  auto n = std::make_shared<Node>();
  n->tag = std::move(tag);
  n->conclusion = std::move(conclusion);
  n->family = std::move(family);
  return Proof(std::move(n));
}

Proof Proof::make(RuleTag tag, Sequent conclusion, Proof first, DeltaFamily family) {
  if (tag.rule != Rule::OmegaBar) shapeError(tag.rule, "does not take a first premise and a family");
  if (!(family.target() == tag.principal) || family.h() != tag.h) shapeError(tag.rule, "family/tag mismatch");
  auto n = std::make_shared<Node>();
  n->tag = std::move(tag);
  n->conclusion = std::move(conclusion);
  n->premises.push_back(std::move(first));
  n->family = std::move(family);
  return Proof(std::move(n));
}

const Sequent& Proof::conclusion() const { return node_->conclusion; }
const RuleTag& Proof::tag() const { return node_->tag; }
const std::vector<Proof>& Proof::premises() const { return node_->premises; }
const OmegaFamily* Proof::omegaFamily() const { return std::get_if<OmegaFamily>(&node_->family); }
const DeltaFamily* Proof::deltaFamily() const { return std::get_if<DeltaFamily>(&node_->family); }

// ---------------------------------------------------------------------------

bool hasAxiomPair(const Sequent& s) {
  for (const auto& f : s)
    if (f.op() == Op::Atom && s.contains(Form::negAtom(f.index()))) return true;
  return false;
}

Proof axiomFor(const Sequent& s) {
  for (const auto& f : s)
    if (f.op() == Op::Atom && s.contains(Form::negAtom(f.index())))
      return Proof::make(RuleTag::axiom(f), s);
  throw PreconditionError("no complementary atom pair in " + print(s));
}

Proof topProof(const Sequent& context) {
  const Form p0 = Form::atom(0);
  const Form np0 = Form::negAtom(0);
  Sequent premise = context.with(p0).with(np0);
  return Proof::make(RuleTag::orRule(top()), context.with(top()),
                     {Proof::make(RuleTag::axiom(p0), premise)});
}

std::pair<Sequent, Proof> canonicalProbe(const Form& muprimed, std::size_t j) {
  if (muprimed.op() != Op::Mu || !(prime(muprimed) == muprimed))
    throw PreconditionError("canonical probe needs a primed mu-formula, got " + print(muprimed));
  Sequent delta{top()};
  for (std::size_t i = 1; i <= j; ++i) delta = delta.with(Form::atom(static_cast<unsigned>(i)));
  return {delta, topProof(delta.without(top()).with(muprimed))};
}

}  // namespace mucut

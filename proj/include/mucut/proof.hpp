#ifndef MUCUT_PROOF_HPP
#define MUCUT_PROOF_HPP

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mucut/errors.hpp"
#include "mucut/sequent.hpp"
#include "mucut/syntax.hpp"

namespace mucut {

enum class Rule : std::uint8_t { Axiom, AxiomMu, Or, And, Box, Clo, Ind, Cut, Nu, Omega, OmegaBar };

std::string_view ruleName(Rule r);

/// Rule instance data. `principal` holds:
///   Axiom: the atom P;  AxiomMu: the mu-formula;  Or/And/Box/Clo/Nu: the
///   introduced formula;  Ind: the mu-formula mu X.A (with `aux` = B);
///   Cut: the L0 cut formula A;  Omega/OmegaBar: the primed target (mu X.A)'.
/// `side` is the Sigma of a Box instance, `h` the Omega level.
struct RuleTag {
  Rule rule = Rule::Axiom;
  Form principal;
  Form aux;
  unsigned h = 0;
  Sequent side;

  static RuleTag axiom(Form p) { return {Rule::Axiom, std::move(p), {}, 0, {}}; }
  static RuleTag axiomMu(Form mu) { return {Rule::AxiomMu, std::move(mu), {}, 0, {}}; }
  static RuleTag orRule(Form f) { return {Rule::Or, std::move(f), {}, 0, {}}; }
  static RuleTag andRule(Form f) { return {Rule::And, std::move(f), {}, 0, {}}; }
  static RuleTag box(Form f, Sequent side) { return {Rule::Box, std::move(f), {}, 0, std::move(side)}; }
  static RuleTag clo(Form f) { return {Rule::Clo, std::move(f), {}, 0, {}}; }
  static RuleTag ind(Form mu, Form b) { return {Rule::Ind, std::move(mu), std::move(b), 0, {}}; }
  static RuleTag cut(Form a) { return {Rule::Cut, std::move(a), {}, 0, {}}; }
  static RuleTag nu(Form f) { return {Rule::Nu, std::move(f), {}, 0, {}}; }
  static RuleTag omega(unsigned h, Form target) { return {Rule::Omega, std::move(target), {}, h, {}}; }
  static RuleTag omegaBar(unsigned h, Form target) {
    return {Rule::OmegaBar, std::move(target), {}, h, {}};
  }

  friend bool operator==(const RuleTag&, const RuleTag&) = default;
};

struct SystemId {
  enum class Kind { S, OmegaK, SInf };
  Kind kind = Kind::S;
  unsigned k = 0;

  static SystemId s() { return {Kind::S, 0}; }
  static SystemId omega(unsigned k) { return {Kind::OmegaK, k}; }
  static SystemId sinf() { return {Kind::SInf, 0}; }

  friend bool operator==(const SystemId&, const SystemId&) = default;
};

std::string print(const SystemId& s);

class Proof;

/// Premise family of the (nu)-rule, indexed by naturals. Pure; results are
/// memoized per family instance.
class OmegaFamily {
 public:
  explicit OmegaFamily(std::function<Proof(std::size_t)> fn);
  Proof operator()(std::size_t i) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Premise family of the Omega_h / OmegaBar_h rules. It maps an admitted
/// pair (Delta, d), with Delta h-positive and d a cut-free proof of
/// Delta,(mu X.A)', to a proof of Delta,Gamma. Admission is checked on entry:
/// the endsequent and positivity exactly, cut-freeness at the root only.
class DeltaFamily {
 public:
  using Fn = std::function<Proof(const Sequent&, const Proof&)>;

  DeltaFamily(unsigned h, Form target, Fn fn);

  unsigned h() const { return h_; }
  const Form& target() const { return target_; }

  bool admits(const Sequent& delta, const Proof& witness) const;
  Proof operator()(const Sequent& delta, const Proof& witness) const;

  /// A family with the same admission data and a post-processed output.
  DeltaFamily map(std::function<Proof(const Sequent&, const Proof&, Proof)> post) const;

 private:
  unsigned h_;
  Form target_;
  std::shared_ptr<const Fn> fn_;
};

/// A derivation node. Finite premises are stored eagerly; infinite premise
/// families are evaluated on demand.
class Proof {
 public:
  static Proof make(RuleTag tag, Sequent conclusion, std::vector<Proof> premises = {});
  static Proof make(RuleTag tag, Sequent conclusion, OmegaFamily family);
  static Proof make(RuleTag tag, Sequent conclusion, DeltaFamily family);
  static Proof make(RuleTag tag, Sequent conclusion, Proof first, DeltaFamily family);

  const Sequent& conclusion() const;
  const RuleTag& tag() const;
  Rule rule() const { return tag().rule; }

  /// Finite premises; for OmegaBar this is the single first premise.
  const std::vector<Proof>& premises() const;
  const OmegaFamily* omegaFamily() const;
  const DeltaFamily* deltaFamily() const;
  bool hasFamily() const { return omegaFamily() != nullptr || deltaFamily() != nullptr; }

  const void* identity() const { return node_.get(); }

 private:
  struct Node;
  explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Number of finite premises required by a rule (OmegaBar counts its first premise).
std::size_t finiteArity(Rule r);

// -- small builders shared by the transformations ---------------------------

/// Axiom leaf on the first complementary atom pair of `s`.
Proof axiomFor(const Sequent& s);
bool hasAxiomPair(const Sequent& s);

/// Proof of context, top: (or) on p0 | ~p0 over an axiom.
Proof topProof(const Sequent& context);

/// The j-th canonical admissible input of an Omega family with target
/// (mu X.A)': Delta = {top, p1..pj} and a two-node cut-free proof of
/// Delta, (mu X.A)'.
std::pair<Sequent, Proof> canonicalProbe(const Form& muprimed, std::size_t j = 0);

}  // namespace mucut

#endif  // MUCUT_PROOF_HPP

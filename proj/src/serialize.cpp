#include "mucut/serialize.hpp"

namespace mucut {

using sexpr::Expr;
using sexpr::quote;

std::string writeSequent(const Sequent& s) {
  std::string out = "(seq";
  for (const auto& f : s) out += " " + quote(print(f));
  return out + ")";
}

std::string writeTag(const RuleTag& t) {
  std::string name(ruleName(t.rule));
  switch (t.rule) {
    case Rule::Box:
      return "(" + name + " " + quote(print(t.principal)) + " " + writeSequent(t.side) + ")";
    case Rule::Ind:
      return "(" + name + " " + quote(print(t.principal)) + " " + quote(print(t.aux)) + ")";
    case Rule::Omega:
    case Rule::OmegaBar:
      return "(" + name + " " + std::to_string(t.h) + " " + quote(print(t.principal)) + ")";
    default:
      return "(" + name + " " + quote(print(t.principal)) + ")";
  }
}

namespace {

void writeProofTo(const Proof& p, std::size_t indent, std::string& out) {
  if (p.hasFamily()) throw PreconditionError("cannot serialize a proof with an infinite premise family");
  out += std::string(indent, ' ') + "(rule " + writeTag(p.tag()) + " " + writeSequent(p.conclusion());
  for (const auto& q : p.premises()) {
    out += "\n";
    writeProofTo(q, indent + 2, out);
  }
  out += ")";
}

void writeObsTo(const Observation& o, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (o.error) {
    out += pad + "(error " + quote(*o.error) + ")";
    return;
  }
  out += pad + "(rule " + writeTag(o.tag) + " " + writeSequent(o.conclusion);
  if (o.truncated) out += " (truncated)";
  const std::size_t familyChildren = o.sampledIndices.size() + o.probesUsed.size();
  const std::size_t plain = o.children.size() >= familyChildren ? o.children.size() - familyChildren : 0;
  for (std::size_t c = 0; c < o.children.size(); ++c) {
    out += "\n";
    if (c < plain) {
      writeObsTo(o.children[c], indent + 2, out);
      continue;
    }
    std::size_t j = c - plain;
    std::string head = j < o.sampledIndices.size()
                           ? "(at " + std::to_string(o.sampledIndices[j])
                           : "(probe " + writeSequent(o.probesUsed[j - o.sampledIndices.size()]);
    out += std::string(indent + 2, ' ') + head + "\n";
    writeObsTo(o.children[c], indent + 4, out);
    out += ")";
  }
  out += ")";
}

[[noreturn]] void bad(const Expr& e, const std::string& msg) { throw ParseError(e.position, msg); }

Form readForm(const Expr& e) {
  if (e.kind != Expr::Kind::String) bad(e, "expected quoted formula");
  try {
    return parseFormula(e.text);
  } catch (const ParseError& pe) {
    throw ParseError(e.position + 1 + pe.position(), pe.what());
  }
}

unsigned readNat(const Expr& e) {
  if (e.kind != Expr::Kind::Symbol || e.text.empty() ||
      e.text.find_first_not_of("0123456789") != std::string::npos)
    bad(e, "expected natural number");
  return static_cast<unsigned>(std::stoul(e.text));
}

}  // namespace

Sequent readSequent(const Expr& e) {
  if (e.head() != "seq") bad(e, "expected (seq ...)");
  std::vector<Form> fs;
  for (std::size_t i = 1; i < e.items.size(); ++i) fs.push_back(readForm(e.items[i]));
  return Sequent(std::move(fs));
}

RuleTag readTag(const Expr& e) {
  const auto h = e.head();
  auto arity = [&](std::size_t n) {
    if (e.items.size() != n + 1) bad(e, "tag '" + std::string(h) + "' expects " + std::to_string(n) + " arguments");
  };
  if (h == "axiom") { arity(1); return RuleTag::axiom(readForm(e.items[1])); }
  if (h == "axiommu") { arity(1); return RuleTag::axiomMu(readForm(e.items[1])); }
  if (h == "or") { arity(1); return RuleTag::orRule(readForm(e.items[1])); }
  if (h == "and") { arity(1); return RuleTag::andRule(readForm(e.items[1])); }
  if (h == "clo") { arity(1); return RuleTag::clo(readForm(e.items[1])); }
  if (h == "cut") { arity(1); return RuleTag::cut(readForm(e.items[1])); }
  if (h == "nu") { arity(1); return RuleTag::nu(readForm(e.items[1])); }
  if (h == "box") { arity(2); return RuleTag::box(readForm(e.items[1]), readSequent(e.items[2])); }
  if (h == "ind") { arity(2); return RuleTag::ind(readForm(e.items[1]), readForm(e.items[2])); }
  if (h == "omega") { arity(2); return RuleTag::omega(readNat(e.items[1]), readForm(e.items[2])); }
  if (h == "omegabar") { arity(2); return RuleTag::omegaBar(readNat(e.items[1]), readForm(e.items[2])); }
  bad(e, "unknown rule tag");
}

Proof readProof(const Expr& e) {
  if (e.head() != "rule" || e.items.size() < 3) bad(e, "expected (rule <tag> (seq ...) <premise>...)");
  RuleTag tag = readTag(e.items[1]);
  Sequent concl = readSequent(e.items[2]);
  std::vector<Proof> premises;
  for (std::size_t i = 3; i < e.items.size(); ++i) premises.push_back(readProof(e.items[i]));
  try {
    return Proof::make(std::move(tag), std::move(concl), std::move(premises));
  } catch (const ShapeError& se) {
    bad(e, se.what());
  }
}

Proof readProof(std::string_view text) { return readProof(sexpr::parse(text)); }

std::string writeProof(const Proof& p) {
  std::string out;
  writeProofTo(p, 0, out);
  return out + "\n";
}

std::string writeObservation(const Observation& o) {
  std::string out;
  writeObsTo(o, 0, out);
  return out + "\n";
}

}  // namespace mucut

// mucut: command-line front end.
//
//   mucut parse FILE | --text F        canonical text of a formula or finite proof
//   mucut print FILE | --text F        indented sequent tree (proofs) or canonical formula
//   mucut check FILE [--system S]      rule-by-rule check of a finite proof
//   mucut pipeline FILE | --corpus N   embed, eliminate cuts, collapse, S-infinity
//   mucut corpus [NAME] [--out DIR]    list or write the reference proofs
//
// Exit codes: 0 ok, 1 check failure, 2 parse/usage error, 3 fuel exhausted,
// 4 internal invariant failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mucut/checker.hpp"
#include "mucut/collapse.hpp"
#include "mucut/corpus.hpp"
#include "mucut/serialize.hpp"

namespace fs = std::filesystem;
using namespace mucut;

namespace {

enum Exit : int { kOk = 0, kCheckFailed = 1, kParse = 2, kFuel = 3, kInvariant = 4 };

struct RunConfig {
  std::size_t depth = 6;
  std::vector<std::size_t> samples{0, 1, 2};
  std::size_t probes = 1;
  std::size_t fuel = 100000;
  std::string system = "s";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

SystemId parseSystem(const std::string& s) {
  if (s == "s") return SystemId::s();
  if (s == "sinf") return SystemId::sinf();
  const std::string prefix = "omega-k=";
  if (s.starts_with(prefix)) {
    try {
      return SystemId::omega(static_cast<unsigned>(std::stoul(s.substr(prefix.size()))));
    } catch (const std::exception&) {
    }
  }
  throw UsageError("unknown system '" + s + "' (expected s, sinf or omega-k=N)");
}

/// A parsed input file: either a formula or a finite proof.
struct Input {
  std::optional<Form> formula;
  std::optional<Proof> proof;
};

Input parseInput(const std::string& text) {
  // Proofs are s-expressions headed by `rule`; anything else is a formula.
  std::vector<sexpr::Expr> exprs;
  try {
    exprs = sexpr::parseAll(text);
  } catch (const ParseError&) {
  }
  if (!exprs.empty() && exprs.front().head() == "rule") {
    if (exprs.size() != 1) throw ParseError(exprs[1].position, "trailing input after proof");
    return {std::nullopt, readProof(exprs.front())};
  }
  return {parseFormula(text), std::nullopt};
}

std::string inputText(const std::string& file, const std::string& text) {
  if (!text.empty()) return text;
  if (file.empty()) throw UsageError("give a FILE or --text");
  return readFile(file);
}

void printTree(const Proof& p, std::size_t indent, std::ostream& out) {
  out << std::string(indent, ' ') << ruleName(p.rule()) << "  " << print(p.conclusion()) << '\n';
  for (const auto& q : p.premises()) printTree(q, indent + 2, out);
}

int cmdParse(const std::string& file, const std::string& text, bool tree) {
  const Input in = parseInput(inputText(file, text));
  if (in.formula) {
    std::cout << print(*in.formula) << '\n';
  } else if (tree) {
    printTree(*in.proof, 0, std::cout);
  } else {
    std::cout << writeProof(*in.proof);
  }
  return kOk;
}

Proof loadProof(const std::string& file) {
  const Input in = parseInput(readFile(file));
  if (!in.proof) throw UsageError(file + " contains a formula, not a proof");
  return *in.proof;
}

int cmdCheck(const std::string& file, const RunConfig& cfg, bool sexprOut) {
  const Proof p = loadProof(file);
  const SystemId sys = parseSystem(cfg.system);
  const CheckReport r = p.hasFamily() ? checkBounded(p, sys, cfg.depth, cfg.samples, cfg.probes)
                                      : checkFinite(p, sys);
  std::cout << (sexprOut ? renderSexpr(r) : renderText(r));
  return r.ok ? kOk : kCheckFailed;
}

/// Exit code for an observation that contains error leaves.
int observationExit(const Observation& o, std::string& firstError) {
  int code = kOk;
  forEachNode(o, [&](const Observation& n, std::size_t) {
    if (!n.error || code != kOk) return;
    firstError = *n.error;
    code = n.error->starts_with("fuel exhausted") ? kFuel : kInvariant;
  });
  return code;
}

int cmdPipeline(const std::string& file, const std::string& corpusName, const std::string& outDir,
                const RunConfig& cfg) {
  if (file.empty() == corpusName.empty()) throw UsageError("give exactly one of FILE or --corpus");
  const Proof input = corpusName.empty() ? loadProof(file) : corpusProof(corpusName);

  const CheckReport pre = checkFinite(input, SystemId::s());
  if (!pre.ok) {
    std::cerr << "stage check: input is not a valid S-proof\n" << renderText(pre);
    return kCheckFailed;
  }

  std::string trace;
  PipelineOptions opts{cfg.fuel, [&trace](const std::string& line) { trace += line + "\n"; }};
  const PipelineResult res = pipeline(input, opts);

  const ObserveOptions oo{cfg.depth, cfg.samples, cfg.probes};
  struct Stage {
    const char* name;
    const Proof* proof;
  };
  const Stage stages[] = {{"embedded", &res.embedded},
                          {"eliminated", &res.eliminated},
                          {"collapsed", &res.collapsed},
                          {"sinf", &res.sinf}};

  if (!outDir.empty()) fs::create_directories(outDir);
  int code = kOk;
  std::string firstError;
  Observation final;
  for (const auto& s : stages) {
    Observation o = observe(*s.proof, oo);
    if (code == kOk) code = observationExit(o, firstError);
    if (!outDir.empty()) writeFile(fs::path(outDir) / (std::string(s.name) + ".obs"), writeObservation(o));
    final = std::move(o);
  }
  if (!outDir.empty()) writeFile(fs::path(outDir) / "trace.txt", trace);

  const bool cutFree = isCutFreeObserved(final) && !hasRuleObserved(final, Rule::Omega) &&
                       !hasRuleObserved(final, Rule::OmegaBar);
  const bool nubarFree = !hasNuBarObserved(final);
  const CheckReport sub = subformulaReport(final);
  const CheckReport sinfCheck = checkBounded(res.sinf, SystemId::sinf(), cfg.depth, cfg.samples, cfg.probes);

  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream summary;
  summary << "endsequent: " << print(input.conclusion()) << '\n'
          << "k: " << res.k << '\n'
          << "sinf check: " << (sinfCheck.ok ? "ok" : "fail") << ", subformula: " << (sub.ok ? "ok" : "fail")
          << ", nodes observed: " << countNodes(final) << '\n'
          << "cut-free: " << yn(cutFree) << ", nubar-free: " << yn(nubarFree) << '\n'
          << "(summary (k " << res.k << ") (cut-free " << yn(cutFree) << ") (nubar-free " << yn(nubarFree)
          << ") (sinf-check " << (sinfCheck.ok ? "ok" : "fail") << ") (subformula " << (sub.ok ? "ok" : "fail")
          << ") (nodes " << countNodes(final) << "))\n";
  if (!outDir.empty()) writeFile(fs::path(outDir) / "summary.txt", summary.str());
  std::cout << summary.str();

  if (code != kOk) {
    std::cerr << firstError << '\n';
    return code;
  }
  return cutFree && nubarFree && sub.ok && sinfCheck.ok ? kOk : kCheckFailed;
}

int cmdCorpus(const std::string& name, const std::string& outDir) {
  for (const auto& e : corpus()) {
    if (!name.empty() && e.name != name) continue;
    if (outDir.empty()) {
      std::cout << e.name << "  " << print(e.proof.conclusion()) << "  ; " << e.description << '\n';
      continue;
    }
    fs::create_directories(outDir);
    const fs::path path = fs::path(outDir) / (e.name + ".sproof");
    writeFile(path, "; " + e.description + "\n" + writeProof(e.proof));
    std::cout << path.string() << '\n';
  }
  return kOk;
}

void addConfig(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--depth", cfg.depth, "observation depth")->capture_default_str();
  cmd->add_option("--samples", cfg.samples, "nu-family indices to sample")->delimiter(',')->capture_default_str();
  cmd->add_option("--probes", cfg.probes, "canonical probes per Omega family")->capture_default_str();
  cmd->add_option("--fuel", cfg.fuel, "reduction steps per exposed node")->capture_default_str();
  cmd->add_option("--system", cfg.system, "s, sinf or omega-k=N")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syntactic cut elimination for the one-variable modal mu-calculus"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string file, text, corpusName, outDir;
  bool sexprOut = false;

  auto* parse = app.add_subcommand("parse", "print the canonical text of a formula or finite proof");
  parse->add_option("file", file, "input file (.form or .sproof)");
  parse->add_option("--text", text, "inline input");

  auto* printCmd = app.add_subcommand("print", "print a proof as an indented sequent tree");
  printCmd->add_option("file", file, "input file (.form or .sproof)");
  printCmd->add_option("--text", text, "inline input");

  auto* check = app.add_subcommand("check", "check a finite proof rule by rule");
  check->add_option("file", file, "proof file (.sproof)")->required();
  check->add_flag("--sexpr", sexprOut, "emit the report as an s-expression");
  addConfig(check, cfg);

  auto* pipe = app.add_subcommand("pipeline", "run embed, cut elimination, collapse and S-infinity conversion");
  pipe->add_option("file", file, "S-proof file (.sproof)");
  pipe->add_option("--corpus", corpusName, "use a reference proof (E1..E4)");
  pipe->add_option("--out", outDir, "directory for stage observations, trace and summary");
  addConfig(pipe, cfg);

  auto* corp = app.add_subcommand("corpus", "list or write the reference proofs");
  corp->add_option("name", corpusName, "entry name");
  corp->add_option("--out", outDir, "write NAME.sproof files here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*parse) return cmdParse(file, text, false);
    if (*printCmd) return cmdParse(file, text, true);
    if (*check) return cmdCheck(file, cfg, sexprOut);
    if (*pipe) return cmdPipeline(file, corpusName, outDir, cfg);
    if (*corp) return cmdCorpus(corpusName, outDir);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kParse;
  } catch (const FuelExhausted& e) {
    std::cerr << e.what() << '\n';
    return kFuel;
  } catch (const InvariantFailure& e) {
    std::cerr << e.what() << '\n';
    return kInvariant;
  } catch (const ShapeError& e) {
    std::cerr << e.what() << '\n';
    return kCheckFailed;
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kInvariant;
  }
  return kParse;
}

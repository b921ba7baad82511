#include "mucut/observe.hpp"

#include <exception>

#include "mucut/errors.hpp"

namespace mucut {

namespace {

Observation errorLeaf(const std::string& msg) {
  Observation o;
  o.error = msg;
  return o;
}

template <class F>
Observation guarded(F&& f) {
  try {
    return f();
  } catch (const FuelExhausted& e) {
    return errorLeaf(std::string("fuel exhausted: ") + e.what());
  } catch (const InvariantFailure& e) {
    return errorLeaf(std::string("invariant failure: ") + e.what());
  } catch (const std::exception& e) {
    return errorLeaf(std::string("error: ") + e.what());
  }
}

}  // namespace

Observation observe(const Proof& p, std::size_t depth, const std::vector<std::size_t>& samples,
                    std::size_t probeBudget) {
  Observation o;
  o.conclusion = p.conclusion();
  o.tag = p.tag();
  const bool hasPremises = !p.premises().empty() || p.hasFamily();
  if (depth == 0) {
    o.truncated = hasPremises;
    return o;
  }
  for (const auto& q : p.premises()) o.children.push_back(observe(q, depth - 1, samples, probeBudget));
  if (const auto* fam = p.omegaFamily()) {
    o.truncated = true;
    for (std::size_t i : samples) {
      o.sampledIndices.push_back(i);
      o.children.push_back(guarded([&] { return observe((*fam)(i), depth - 1, samples, probeBudget); }));
    }
  }
  if (const auto* fam = p.deltaFamily()) {
    o.truncated = true;
    for (std::size_t j = 0; j < probeBudget; ++j) {
      auto [delta, witness] = canonicalProbe(fam->target(), j);
      o.probesUsed.push_back(delta);
      o.children.push_back(guarded([&, &delta = delta, &witness = witness] {
        return observe((*fam)(delta, witness), depth - 1, samples, probeBudget);
      }));
    }
  }
  return o;
}

Observation truncate(const Observation& o, std::size_t depth) {
  Observation r = o;
  if (depth == 0) {
    r.truncated = !o.children.empty() || o.truncated;
    r.children.clear();
    r.sampledIndices.clear();
    r.probesUsed.clear();
    return r;
  }
  for (auto& c : r.children) c = truncate(c, depth - 1);
  return r;
}

void forEachNode(const Observation& o, const std::function<void(const Observation&, std::size_t)>& fn) {
  std::function<void(const Observation&, std::size_t)> go = [&](const Observation& n, std::size_t d) {
    fn(n, d);
    for (const auto& c : n.children) go(c, d + 1);
  };
  go(o, 0);
}

bool hasRuleObserved(const Observation& o, Rule r) {
  bool found = false;
  forEachNode(o, [&](const Observation& n, std::size_t) {
    if (!n.error && n.tag.rule == r) found = true;
  });
  return found;
}

bool isCutFreeObserved(const Observation& o) { return !hasRuleObserved(o, Rule::Cut); }

bool hasNuBarObserved(const Observation& o) {
  bool found = false;
  forEachNode(o, [&](const Observation& n, std::size_t) {
    if (!isL0(n.conclusion)) found = true;
  });
  return found;
}

bool hasErrorObserved(const Observation& o) {
  bool found = false;
  forEachNode(o, [&](const Observation& n, std::size_t) {
    if (n.error) found = true;
  });
  return found;
}

std::size_t countNodes(const Observation& o) {
  std::size_t n = 0;
  forEachNode(o, [&](const Observation&, std::size_t) { ++n; });
  return n;
}

}  // namespace mucut

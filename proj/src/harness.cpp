#include "dlwb/harness.hpp"

#include <algorithm>
#include <random>

#include "dlwb/text_format.hpp"

namespace dlwb {
namespace {

// Thin wrapper so generated values depend only on (cfg, seed), not on
// platform-specific distribution implementations.
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(uint64_t seed) : engine(seed ^ 0x9e3779b97f4a7c15ULL) {}

  uint64_t raw() { return engine(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(raw() % n); }
  double unit() { return (raw() >> 11) * (1.0 / 9007199254740992.0); }
  bool chance(double p) { return unit() < p; }
};

ArrowKind sample_arrow(Rng& rng, const GenConfig& cfg) {
  double total = cfg.strictRatio + cfg.defeasibleRatio + cfg.defeaterRatio;
  double u = rng.unit() * (total > 0 ? total : 1.0);
  if (u < cfg.strictRatio) return ArrowKind::Strict;
  if (u < cfg.strictRatio + cfg.defeasibleRatio) return ArrowKind::Defeasible;
  return ArrowKind::Defeater;
}

Literal sample_literal(Rng& rng, const std::vector<Literal>& pool) {
  return pool[rng.below(static_cast<int>(pool.size()))];
}

}  // namespace

Theory gen_theory(const GenConfig& cfg, uint64_t seed) {
  Rng rng(seed);
  std::vector<Literal> pool;
  for (int i = 0; i < cfg.atomCount; ++i) {
    pool.push_back({"a" + std::to_string(i), true});
    pool.push_back({"a" + std::to_string(i), false});
  }
  Theory d;
  if (!pool.empty()) {
    for (int i = 0; i < cfg.factCount; ++i) {
      d.facts.insert(sample_literal(rng, pool));
    }
  }
  for (int i = 0; i < cfg.ruleCount; ++i) {
    int bodySize = pool.empty() ? 0 : rng.below(cfg.maxBodySize + 1);
    std::vector<Literal> body;
    std::set<Literal> seen;
    while (static_cast<int>(seen.size()) < bodySize &&
           seen.size() < pool.size()) {
      seen.insert(sample_literal(rng, pool));
    }
    body.assign(seen.begin(), seen.end());
    d.rules.push_back(make_rule("g" + std::to_string(i), std::move(body),
                                sample_arrow(rng, cfg),
                                pool.empty() ? Literal{"a0", true}
                                             : sample_literal(rng, pool)));
  }
  for (size_t i = 0; i < d.rules.size(); ++i) {
    for (size_t j = i + 1; j < d.rules.size(); ++j) {
      if (d.rules[i].head == complement(d.rules[j].head) &&
          rng.chance(cfg.superiorityDensity)) {
        d.superiority.insert({d.rules[i].label, d.rules[j].label});
      }
    }
  }
  return d;
}

Theory gen_modular_addition(const Theory& d, const Theory& td,
                            AdditionKind kind, const GenConfig& cfg,
                            uint64_t seed) {
  Rng rng(seed ^ 0x5bf03635ULL);
  LanguageView ld = language_of(d);
  LanguageView ltd = language_of(td);
  std::vector<Literal> dLits(ld.literals.begin(), ld.literals.end());
  std::set<std::string> usedAtoms;
  for (const Literal& q : ltd.literals) usedAtoms.insert(q.atom);
  for (const Literal& q : ld.literals) usedAtoms.insert(q.atom);
  std::set<std::string> usedLabels = ld.labels;
  usedLabels.insert(ltd.labels.begin(), ltd.labels.end());

  int nextLabel = 0;
  auto freshLabel = [&] {
    std::string label;
    do {
      label = "a" + std::to_string(nextLabel++);
    } while (usedLabels.count(label));
    return label;
  };
  int nextAtom = 0;
  std::vector<Literal> freshPool;
  auto pickLiteral = [&]() -> Literal {
    if (!dLits.empty() && !rng.chance(0.25)) return sample_literal(rng, dLits);
    if (freshPool.empty() || rng.chance(0.5)) {
      std::string atom;
      do {
        atom = "z" + std::to_string(nextAtom++);
      } while (usedAtoms.count(atom));
      freshPool.push_back({atom, true});
      freshPool.push_back({atom, false});
    }
    return sample_literal(rng, freshPool);
  };

  Theory a;
  if (kind == AdditionKind::Facts) {
    int count = std::max(1, cfg.factCount);
    for (int i = 0; i < count; ++i) a.facts.insert(pickLiteral());
    return a;
  }
  // Rules additions: biased trials use competitor-shaped rules (empty body,
  // head inside the original language), which is where team/individual
  // defeat differences surface.
  bool biased = rng.chance(0.5) && !dLits.empty();
  int count = 1 + rng.below(3);
  for (int i = 0; i < count; ++i) {
    std::vector<Literal> body;
    Literal head{"z0", true};
    if (biased) {
      head = sample_literal(rng, dLits);
    } else {
      int bodySize = rng.below(cfg.maxBodySize + 1);
      std::set<Literal> seen;
      for (int k = 0; k < bodySize; ++k) seen.insert(pickLiteral());
      body.assign(seen.begin(), seen.end());
      head = pickLiteral();
    }
    a.rules.push_back(
        make_rule(freshLabel(), std::move(body), sample_arrow(rng, cfg), head));
  }
  return a;
}

std::vector<Mismatch> compare_modulo_tags(const ConclusionSet& source,
                                          Tag sourceTag,
                                          const ConclusionSet& target,
                                          Tag targetTag,
                                          const std::set<Literal>& scope) {
  std::vector<Mismatch> out;
  for (const Literal& q : scope) {
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      bool inSource = source.contains(sign, sourceTag, q);
      bool inTarget = target.contains(sign, targetTag, q);
      if (inSource != inTarget) out.push_back({q, sign, inSource, inTarget});
    }
  }
  return out;
}

bool claim_supported(TransformKind transform, Tag sourceTag, Tag targetTag,
                     AdditionKind additions) {
  using TK = TransformKind;
  switch (transform) {
    case TK::BlockForProp:
      return sourceTag == Tag::PropagatingInd && targetTag == Tag::BlockingInd &&
             additions == AdditionKind::Facts;
    case TK::PropForBlock:
      return sourceTag == Tag::BlockingInd &&
             (targetTag == Tag::PropagatingInd || targetTag == Tag::Propagating ||
              targetTag == Tag::Blocking) &&
             additions == AdditionKind::Facts;
    case TK::TeamForIndividualBase:
      // Known-unsound pairing, kept checkable as a negative fixture.
      return additions == AdditionKind::Rules &&
             ((sourceTag == Tag::BlockingInd && targetTag == Tag::Blocking) ||
              (sourceTag == Tag::PropagatingInd &&
               targetTag == Tag::Propagating));
    case TK::TeamForIndividual:
      return (sourceTag == Tag::BlockingInd && targetTag == Tag::Blocking) ||
             (sourceTag == Tag::PropagatingInd && targetTag == Tag::Propagating);
    case TK::IndividualForTeam:
      return (sourceTag == Tag::Blocking && targetTag == Tag::BlockingInd) ||
             (sourceTag == Tag::Propagating && targetTag == Tag::PropagatingInd);
  }
  return false;
}

namespace {

std::vector<Mismatch> run_claim(const Theory& d, const Theory& td,
                                const Theory& a, const SimCheckConfig& cfg) {
  Theory da = add_theories(d, a);
  Theory tda = add_theories(td, a);
  ConclusionSet src = least_fixpoint(da, {cfg.sourceTag});
  ConclusionSet tgt = least_fixpoint(tda, {cfg.targetTag});
  return compare_modulo_tags(src, cfg.sourceTag, tgt, cfg.targetTag,
                             language_of(da).literals);
}

void require_supported(const SimCheckConfig& cfg) {
  if (!claim_supported(cfg.transform, cfg.sourceTag, cfg.targetTag,
                       cfg.additions)) {
    throw UnsupportedClaim(
        "no supported simulation claim for " +
        transform_kind_name(cfg.transform) + " from " +
        tag_name(cfg.sourceTag) + " to " + tag_name(cfg.targetTag) +
        " with " +
        (cfg.additions == AdditionKind::Facts ? std::string("facts")
                                              : std::string("rules")) +
        " additions");
  }
}

}  // namespace

SimReport check_simulation(const Theory& d, const SimCheckConfig& cfg,
                           const std::optional<Theory>& fixedAddition) {
  require_supported(cfg);
  Theory td = apply_transform(cfg.transform, d);
  SimReport report;
  report.trials = cfg.trials;
  for (int i = 0; i < cfg.trials; ++i) {
    Theory a = fixedAddition
                   ? *fixedAddition
                   : gen_modular_addition(d, td, cfg.additions, cfg.gen,
                                          cfg.seed ^ static_cast<uint64_t>(i));
    ModularityCheck mc = is_modular_addition(d, td, a);
    if (!mc.modular) {
      throw std::invalid_argument("addition is not modular: " + mc.reason);
    }
    for (const Mismatch& m : run_claim(d, td, a, cfg)) {
      report.mismatches.push_back({i, a, m});
    }
  }
  report.verdict = report.mismatches.empty() ? SimReport::Verdict::AllPass
                                             : SimReport::Verdict::Mismatch;
  return report;
}

PropertyReport check_inclusion_theorem(const Theory& d) {
  ConclusionSet fix =
      least_fixpoint(d, {Tag::Delta, Tag::Blocking, Tag::BlockingInd,
                         Tag::Propagating, Tag::Support, Tag::PropagatingInd,
                         Tag::SupportInd});
  PropertyReport report;
  auto requireSubset = [&](Sign sign, Tag small, Tag large) {
    for (const Literal& q : fix.universe.literals) {
      if (fix.contains(sign, small, q) && !fix.contains(sign, large, q)) {
        report.ok = false;
        report.violations.push_back(
            print_conclusion({sign, small, q}) + " holds but " +
            print_conclusion({sign, large, q}) + " does not");
      }
    }
  };
  const Tag plusChain[] = {Tag::Delta, Tag::PropagatingInd, Tag::Propagating,
                           Tag::Blocking, Tag::Support, Tag::SupportInd};
  for (int i = 0; i + 1 < 6; ++i) {
    requireSubset(Sign::Plus, plusChain[i], plusChain[i + 1]);
    requireSubset(Sign::Minus, plusChain[i + 1], plusChain[i]);
  }
  requireSubset(Sign::Plus, Tag::PropagatingInd, Tag::BlockingInd);
  requireSubset(Sign::Plus, Tag::BlockingInd, Tag::SupportInd);
  requireSubset(Sign::Minus, Tag::SupportInd, Tag::BlockingInd);
  requireSubset(Sign::Minus, Tag::BlockingInd, Tag::PropagatingInd);
  return report;
}

PropertyReport check_coherence(const Theory& d) {
  ConclusionSet fix =
      least_fixpoint(d, {Tag::Delta, Tag::Blocking, Tag::BlockingInd,
                         Tag::Propagating, Tag::Support, Tag::PropagatingInd,
                         Tag::SupportInd});
  PropertyReport report;
  for (Tag tag : kAllTags) {
    for (const Literal& q : fix.universe.literals) {
      if (fix.contains(Sign::Plus, tag, q) &&
          fix.contains(Sign::Minus, tag, q)) {
        report.ok = false;
        report.violations.push_back("both " +
                                    print_conclusion({Sign::Plus, tag, q}) +
                                    " and " +
                                    print_conclusion({Sign::Minus, tag, q}));
      }
    }
  }
  return report;
}

namespace {

void drop_rule(Theory& t, size_t index) {
  std::string label = t.rules[index].label;
  t.rules.erase(t.rules.begin() + static_cast<long>(index));
  for (auto it = t.superiority.begin(); it != t.superiority.end();) {
    it = (it->first == label || it->second == label) ? t.superiority.erase(it)
                                                     : std::next(it);
  }
}

bool reproduces(const Theory& d, const Theory& a, const SimCheckConfig& cfg,
                const Mismatch& want) {
  Theory td = apply_transform(cfg.transform, d);
  if (!is_modular_addition(d, td, a).modular) return false;
  for (const Mismatch& m : run_claim(d, td, a, cfg)) {
    if (m.literal == want.literal && m.sign == want.sign) return true;
  }
  return false;
}

}  // namespace

ShrunkCounterexample shrink_counterexample(const Theory& d, const Theory& a,
                                           const SimCheckConfig& cfg) {
  require_supported(cfg);
  Theory td = apply_transform(cfg.transform, d);
  ModularityCheck mc = is_modular_addition(d, td, a);
  if (!mc.modular) {
    throw std::invalid_argument("addition is not modular: " + mc.reason);
  }
  std::vector<Mismatch> initial = run_claim(d, td, a, cfg);
  if (initial.empty()) {
    throw NotAMismatch("the claim holds on this theory and addition");
  }
  ShrunkCounterexample result{d, a, initial.front()};
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (Theory* part : {&result.addition, &result.theory}) {
      for (size_t i = 0; i < part->rules.size(); ++i) {
        Theory trimmed = *part;
        drop_rule(trimmed, i);
        Theory candD = part == &result.theory ? trimmed : result.theory;
        Theory candA = part == &result.addition ? trimmed : result.addition;
        if (reproduces(candD, candA, cfg, result.mismatch)) {
          *part = trimmed;
          shrunk = true;
          --i;
        }
      }
      for (const Literal& f : std::set<Literal>(part->facts)) {
        Theory trimmed = *part;
        trimmed.facts.erase(f);
        Theory candD = part == &result.theory ? trimmed : result.theory;
        Theory candA = part == &result.addition ? trimmed : result.addition;
        if (reproduces(candD, candA, cfg, result.mismatch)) {
          *part = trimmed;
          shrunk = true;
        }
      }
      for (const SuperiorityPair& p :
           std::set<SuperiorityPair>(part->superiority)) {
        Theory trimmed = *part;
        trimmed.superiority.erase(p);
        Theory candD = part == &result.theory ? trimmed : result.theory;
        Theory candA = part == &result.addition ? trimmed : result.addition;
        if (reproduces(candD, candA, cfg, result.mismatch)) {
          *part = trimmed;
          shrunk = true;
        }
      }
    }
  }
  return result;
}

}  // namespace dlwb

// Randomized differential checking: theory generation, modular additions,
// conclusion comparison modulo tags, simulation claims, structural theorems
// and counterexample shrinking.
#ifndef DLWB_HARNESS_HPP
#define DLWB_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlwb/engine.hpp"
#include "dlwb/theory.hpp"
#include "dlwb/transform.hpp"

namespace dlwb {

struct GenConfig {
  int atomCount = 4;
  int ruleCount = 8;
  int maxBodySize = 2;
  double strictRatio = 0.2;
  double defeasibleRatio = 0.7;
  double defeaterRatio = 0.1;
  // Probability of a superiority edge between an opposing-headed rule pair;
  // edges always point from lower to higher rule index, so the relation is
  // acyclic by construction.
  double superiorityDensity = 0.3;
  int factCount = 1;
};

/// Deterministic in (cfg, seed). Atoms a0.., labels g0...
Theory gen_theory(const GenConfig& cfg, uint64_t seed);

enum class AdditionKind { Facts, Rules };

/// Generates an addition that is modular with respect to (d, td): its
/// literals come from the language of d plus fresh atoms, and its labels
/// from a reserved a# namespace. Facts additions have no rules; rules
/// additions have no facts and empty superiority.
Theory gen_modular_addition(const Theory& d, const Theory& td,
                            AdditionKind kind, const GenConfig& cfg,
                            uint64_t seed);

struct Mismatch {
  Literal literal;
  Sign sign;
  bool inSource = false;
  bool inTarget = false;

  friend auto operator<=>(const Mismatch&, const Mismatch&) = default;
};

/// Compares two conclusion sets over the given scope, identifying the source
/// tag with the target tag: a mismatch at (q, sign) means exactly one side
/// derives the sign-tagged conclusion for q.
std::vector<Mismatch> compare_modulo_tags(const ConclusionSet& source,
                                          Tag sourceTag,
                                          const ConclusionSet& target,
                                          Tag targetTag,
                                          const std::set<Literal>& scope);

struct SimCheckConfig {
  TransformKind transform;
  Tag sourceTag;   // evaluated on D + A
  Tag targetTag;   // evaluated on T(D) + A
  AdditionKind additions = AdditionKind::Rules;
  int trials = 100;
  uint64_t seed = 0;
  GenConfig gen;   // used for generated additions
};

/// Thrown when a (transform, source, target, additions) tuple is not one of
/// the simulation claims this harness knows how to check.
struct UnsupportedClaim : std::invalid_argument {
  explicit UnsupportedClaim(const std::string& what)
      : std::invalid_argument(what) {}
};

struct TrialMismatch {
  int trial;
  Theory addition;
  Mismatch mismatch;
};

struct SimReport {
  enum class Verdict { AllPass, Mismatch };
  Verdict verdict = Verdict::AllPass;
  int trials = 0;
  std::vector<TrialMismatch> mismatches;
};

/// Checks one simulation claim on `d` against `cfg.trials` generated modular
/// additions (trial i uses seed ^ i). When `fixedAddition` is given it is
/// used for every trial instead of a generated one.
SimReport check_simulation(const Theory& d, const SimCheckConfig& cfg,
                           const std::optional<Theory>& fixedAddition =
                               std::nullopt);

/// True when the tuple is a claim check_simulation accepts.
bool claim_supported(TransformKind transform, Tag sourceTag, Tag targetTag,
                     AdditionKind additions);

struct PropertyReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Containment structure over all seven tags: +D <= +d* <= +d <= +pd <= +s
/// <= +s*, the mirrored chain on negative conclusions, and +d* <= +pd* <=
/// +s* with its mirror.
PropertyReport check_inclusion_theorem(const Theory& d);

/// No literal is both proved and refuted at the same tag.
PropertyReport check_coherence(const Theory& d);

struct NotAMismatch : std::invalid_argument {
  explicit NotAMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

struct ShrunkCounterexample {
  Theory theory;
  Theory addition;
  Mismatch mismatch;
};

/// Greedily removes rules, facts and superiority pairs from d and a while
/// the first mismatch of the claim keeps reproducing (same literal and
/// sign). Throws NotAMismatch when (d, a) does not mismatch to begin with.
ShrunkCounterexample shrink_counterexample(const Theory& d, const Theory& a,
                                           const SimCheckConfig& cfg);

}  // namespace dlwb

#endif  // DLWB_HARNESS_HPP

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dlwb/engine.hpp"
#include "dlwb/fixtures.hpp"
#include "dlwb/harness.hpp"
#include "dlwb/text_format.hpp"
#include "dlwb/theory.hpp"
#include "dlwb/transform.hpp"

namespace {

using namespace dlwb;

int failures = 0;

void report(int id, const std::string& name, bool pass,
            const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
  if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!pass) ++failures;
}

Literal lit(const std::string& text) {
  if (!text.empty() && text[0] == '~') return {text.substr(1), false};
  return {text, true};
}

std::set<std::string> tag_slice(const ConclusionSet& fix, Tag tag) {
  std::set<std::string> out;
  for (const SignedConclusion& c : fix.members) {
    if (c.tag == tag) out.insert(print_conclusion(c));
  }
  return out;
}

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

const std::vector<std::string> kAmbiguityLiterals = {"p", "~p", "q", "~q"};

void criterion1() {
  ConclusionSet fix = least_fixpoint(
      fixtures::ambiguity(),
      {Tag::BlockingInd, Tag::PropagatingInd, Tag::SupportInd});
  bool pass =
      tag_slice(fix, Tag::BlockingInd) ==
          std::set<std::string>{"-pd* p", "-pd* ~p", "+pd* q", "-pd* ~q"} &&
      tag_slice(fix, Tag::PropagatingInd) ==
          std::set<std::string>{"-d* p", "-d* ~p", "-d* q", "-d* ~q"} &&
      tag_slice(fix, Tag::SupportInd) ==
          std::set<std::string>{"+s* p", "+s* ~p", "+s* q", "+s* ~q"};
  report(1, "ambiguity demo: exact pd*/d*/s* conclusion sets", pass,
         join(tag_slice(fix, Tag::BlockingInd)));
}

void criterion2() {
  ConclusionSet fix =
      least_fixpoint(t_block_for_prop(fixtures::ambiguity()), {Tag::BlockingInd});
  bool pass = true;
  for (const std::string& l : kAmbiguityLiterals) {
    Literal strict{fresh_name("strict", l), true};
    pass = pass && fix.contains(Sign::Plus, Tag::BlockingInd, complement(strict));
    pass = pass && fix.contains(Sign::Minus, Tag::BlockingInd, strict);
    pass = pass && fix.contains(Sign::Plus, Tag::BlockingInd,
                                Literal{fresh_name("supp", l), true});
    pass = pass && fix.contains(Sign::Minus, Tag::BlockingInd, lit(l));
  }
  report(2, "propagating-to-blocking transform of the ambiguity demo at pd*",
         pass);
}

void criterion3() {
  ConclusionSet fix = least_fixpoint(t_prop_for_block(fixtures::ambiguity()),
                                     {Tag::PropagatingInd});
  bool pass =
      fix.contains(Sign::Minus, Tag::PropagatingInd,
                   Literal{fresh_name("undefeated", "~p"), true}) &&
      fix.contains(Sign::Minus, Tag::PropagatingInd, lit("~p")) &&
      fix.contains(Sign::Minus, Tag::PropagatingInd, lit("p")) &&
      fix.contains(Sign::Minus, Tag::PropagatingInd, lit("~q")) &&
      fix.contains(Sign::Plus, Tag::PropagatingInd, lit("q"));
  report(3, "blocking-to-propagating transform of the ambiguity demo at d*",
         pass);
}

void criterion4() {
  Theory d = fixtures::competition();
  Theory a = fixtures::competition_addition();
  Theory da = add_theories(d, a);
  ConclusionSet src = least_fixpoint(da, {Tag::BlockingInd});
  ConclusionSet pairwise = least_fixpoint(
      add_theories(t_team_for_individual_base(d), a), {Tag::Blocking});
  ConclusionSet guarded = least_fixpoint(
      add_theories(t_team_for_individual(d), a), {Tag::Blocking});
  SimCheckConfig cfg{TransformKind::TeamForIndividualBase, Tag::BlockingInd,
                     Tag::Blocking, AdditionKind::Rules, 1, 0};
  SimReport bad = check_simulation(d, cfg, a);
  cfg.transform = TransformKind::TeamForIndividual;
  SimReport good = check_simulation(d, cfg, a);
  bool pass = src.contains(Sign::Minus, Tag::BlockingInd, lit("p")) &&
              pairwise.contains(Sign::Plus, Tag::Blocking, lit("p")) &&
              guarded.contains(Sign::Minus, Tag::Blocking, lit("p")) &&
              bad.verdict == SimReport::Verdict::Mismatch &&
              good.verdict == SimReport::Verdict::AllPass;
  report(4, "competition + (=> p): pairwise encoding mismatches, guarded agrees",
         pass);
}

void criterion5() {
  Theory d = fixtures::teams();
  Theory a = fixtures::competition_addition();
  ConclusionSet src =
      least_fixpoint(add_theories(d, a), {Tag::PropagatingInd});
  ConclusionSet tgt = least_fixpoint(
      add_theories(t_team_for_individual_base(d), a), {Tag::Propagating});
  SimCheckConfig cfg{TransformKind::TeamForIndividualBase, Tag::PropagatingInd,
                     Tag::Propagating, AdditionKind::Rules, 1, 0};
  SimReport rep = check_simulation(d, cfg, a);
  bool pass = src.contains(Sign::Minus, Tag::PropagatingInd, lit("p")) &&
              tgt.contains(Sign::Plus, Tag::Propagating, lit("p")) &&
              rep.verdict == SimReport::Verdict::Mismatch;
  report(5, "teams + (=> p): pairwise encoding mismatches at d", pass);
}

void criterion6() {
  Theory a = fixtures::competition_addition();
  ConclusionSet src =
      least_fixpoint(add_theories(fixtures::competition(), a), {Tag::Blocking});
  ConclusionSet tgt = least_fixpoint(
      add_theories(fixtures::pairwise_encoding(), a), {Tag::BlockingInd});
  std::vector<Mismatch> mismatches = compare_modulo_tags(
      src, Tag::Blocking, tgt, Tag::BlockingInd, {lit("p"), lit("~p")});
  bool pass = src.contains(Sign::Minus, Tag::Blocking, lit("p")) &&
              tgt.contains(Sign::Plus, Tag::BlockingInd, lit("p")) &&
              !mismatches.empty();
  report(6, "unguarded hand-built pairwise encoding overproves at pd*", pass);
}

void criterion7and8() {
  GenConfig gen;
  bool inclusion = true;
  bool coherence = true;
  std::string detail;
  for (int i = 0; i < 200; ++i) {
    Theory d = gen_theory(gen, 0xC0FFEEULL ^ static_cast<uint64_t>(i));
    PropertyReport inc = check_inclusion_theorem(d);
    PropertyReport coh = check_coherence(d);
    if (!inc.ok && detail.empty()) detail = inc.violations.front();
    if (!coh.ok && detail.empty()) detail = coh.violations.front();
    inclusion = inclusion && inc.ok;
    coherence = coherence && coh.ok;
  }
  for (const Theory& d :
       {fixtures::ambiguity(), fixtures::competition(), fixtures::teams(),
        fixtures::pairwise_encoding(), fixtures::competition_addition()}) {
    coherence = coherence && check_coherence(d).ok;
  }
  report(7, "tag containment chains on 200 random theories", inclusion, detail);
  report(8, "coherence on 200 random theories and all fixtures", coherence,
         detail);
}

void criterion9() {
  struct Tuple {
    TransformKind transform;
    Tag source;
    Tag target;
    AdditionKind additions;
  };
  const std::vector<Tuple> tuples = {
      {TransformKind::BlockForProp, Tag::PropagatingInd, Tag::BlockingInd,
       AdditionKind::Facts},
      {TransformKind::PropForBlock, Tag::BlockingInd, Tag::PropagatingInd,
       AdditionKind::Facts},
      {TransformKind::PropForBlock, Tag::BlockingInd, Tag::Propagating,
       AdditionKind::Facts},
      {TransformKind::PropForBlock, Tag::BlockingInd, Tag::Blocking,
       AdditionKind::Facts},
      {TransformKind::TeamForIndividual, Tag::BlockingInd, Tag::Blocking,
       AdditionKind::Rules},
      {TransformKind::TeamForIndividual, Tag::PropagatingInd, Tag::Propagating,
       AdditionKind::Rules},
      {TransformKind::IndividualForTeam, Tag::Blocking, Tag::BlockingInd,
       AdditionKind::Rules},
      {TransformKind::IndividualForTeam, Tag::Propagating, Tag::PropagatingInd,
       AdditionKind::Rules},
  };
  GenConfig gen;
  bool pass = true;
  std::string detail;
  for (size_t t = 0; t < tuples.size(); ++t) {
    SimCheckConfig cfg{tuples[t].transform, tuples[t].source, tuples[t].target,
                       tuples[t].additions, 5, 0};
    bool tuplePass = true;
    for (int i = 0; i < 100 && tuplePass; ++i) {
      uint64_t theorySeed = (static_cast<uint64_t>(t) << 32) ^
                            static_cast<uint64_t>(i) ^ 0xDA7A5EEDULL;
      Theory d = gen_theory(gen, theorySeed);
      cfg.seed = theorySeed * 0x100000001B3ULL;
      SimReport rep = check_simulation(d, cfg);
      if (rep.verdict != SimReport::Verdict::AllPass) {
        tuplePass = false;
        std::ostringstream os;
        os << detail << (detail.empty() ? "" : "; ")
           << transform_kind_name(tuples[t].transform) << " "
           << tag_name(tuples[t].source) << "->" << tag_name(tuples[t].target)
           << " theory seed " << theorySeed << " literal "
           << print_literal(rep.mismatches.front().mismatch.literal);
        detail = os.str();
      }
    }
    pass = pass && tuplePass;
  }
  report(9, "simulation suites: 8 claims x 100 theories x 5 additions", pass,
         detail);
}

// One side of an iff chain: all listed booleans must agree.
bool all_equal(std::initializer_list<bool> values) {
  bool first = *values.begin();
  for (bool v : values) {
    if (v != first) return false;
  }
  return true;
}

void criterion10() {
  GenConfig gen;
  bool strictMirror = true;   // strict-provability mirror of the first transform
  bool trueMirror = true;     // strict/true mirror of the second transform
  bool agreement = true;      // d*/s* agreement on the extended literal set
  for (int i = 0; i < 50; ++i) {
    uint64_t seed = 0xAB12CD34ULL ^ static_cast<uint64_t>(i);
    Theory d = gen_theory(gen, seed);
    std::set<Literal> dLits = language_of(d).literals;

    {  // Mirror of strict provability under the propagating-to-blocking map.
      Theory td = t_block_for_prop(d);
      Theory a = gen_modular_addition(d, td, AdditionKind::Facts, gen, seed);
      Theory da = add_theories(d, a);
      Theory tda = add_theories(td, a);
      ConclusionSet src = least_fixpoint(da, {Tag::Delta});
      ConclusionSet tgt = least_fixpoint(tda, {Tag::Delta, Tag::BlockingInd});
      for (const Literal& q : language_of(da).literals) {
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
          strictMirror = strictMirror && src.contains(sign, Tag::Delta, q) ==
                                             tgt.contains(sign, Tag::Delta, q);
        }
      }
      for (const Literal& q : dLits) {
        Literal strict{fresh_name("strict", print_literal(q)), true};
        strictMirror =
            strictMirror &&
            all_equal({src.contains(Sign::Plus, Tag::Delta, q),
                       tgt.contains(Sign::Plus, Tag::BlockingInd, strict),
                       tgt.contains(Sign::Minus, Tag::BlockingInd,
                                    complement(strict))}) &&
            all_equal({src.contains(Sign::Minus, Tag::Delta, q),
                       tgt.contains(Sign::Minus, Tag::BlockingInd, strict),
                       tgt.contains(Sign::Plus, Tag::BlockingInd,
                                    complement(strict))});
      }
    }

    {  // Strict/true mirrors and d*/s* agreement under blocking-to-propagating.
      Theory td = t_prop_for_block(d);
      Theory a = gen_modular_addition(d, td, AdditionKind::Facts, gen, ~seed);
      Theory da = add_theories(d, a);
      Theory tda = add_theories(td, a);
      ConclusionSet src = least_fixpoint(da, {Tag::Delta});
      ConclusionSet tgt = least_fixpoint(
          tda, {Tag::Delta, Tag::PropagatingInd, Tag::SupportInd});
      for (const Literal& q : language_of(da).literals) {
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
          trueMirror = trueMirror && src.contains(sign, Tag::Delta, q) ==
                                         tgt.contains(sign, Tag::Delta, q);
        }
      }
      for (const Literal& q : dLits) {
        Literal strict{fresh_name("strict", print_literal(q)), true};
        Literal truth{fresh_name("true", print_literal(q)), true};
        trueMirror =
            trueMirror &&
            all_equal(
                {src.contains(Sign::Plus, Tag::Delta, q),
                 tgt.contains(Sign::Plus, Tag::PropagatingInd, strict),
                 tgt.contains(Sign::Plus, Tag::PropagatingInd, truth),
                 tgt.contains(Sign::Plus, Tag::SupportInd, truth),
                 tgt.contains(Sign::Minus, Tag::PropagatingInd,
                              complement(truth)),
                 tgt.contains(Sign::Minus, Tag::SupportInd,
                              complement(truth))}) &&
            all_equal(
                {src.contains(Sign::Minus, Tag::Delta, q),
                 tgt.contains(Sign::Minus, Tag::PropagatingInd, strict),
                 tgt.contains(Sign::Minus, Tag::PropagatingInd, truth),
                 tgt.contains(Sign::Minus, Tag::SupportInd, truth),
                 tgt.contains(Sign::Plus, Tag::PropagatingInd,
                              complement(truth)),
                 tgt.contains(Sign::Plus, Tag::SupportInd,
                              complement(truth))});
      }
      std::set<Literal> scope = language_of(da).literals;
      for (const Literal& q : dLits) {
        Literal undef{fresh_name("undefeated", print_literal(q)), true};
        Literal truth{fresh_name("true", print_literal(q)), true};
        scope.insert(undef);
        scope.insert(complement(undef));
        scope.insert(complement(truth));
      }
      for (const Literal& q : scope) {
        agreement =
            agreement &&
            tgt.contains(Sign::Plus, Tag::PropagatingInd, q) ==
                tgt.contains(Sign::Plus, Tag::SupportInd, q) &&
            tgt.contains(Sign::Minus, Tag::PropagatingInd, q) ==
                tgt.contains(Sign::Minus, Tag::SupportInd, q);
      }
    }
  }
  std::string detail;
  if (!strictMirror) detail += "strict-mirror failed; ";
  if (!trueMirror) detail += "true-mirror failed; ";
  if (!agreement) detail += "d*/s* agreement failed; ";
  report(10, "strict-mirror, true-mirror and d*/s* agreement suites",
         strictMirror && trueMirror && agreement, detail);
}

void criterion11() {
  std::set<Tag> allTags = {Tag::Delta,       Tag::Blocking, Tag::BlockingInd,
                           Tag::Propagating, Tag::Support,  Tag::PropagatingInd,
                           Tag::SupportInd};
  GenConfig gen;
  bool pass = true;
  std::vector<Theory> theories = {fixtures::ambiguity(), fixtures::competition(),
                                  fixtures::teams(),
                                  fixtures::pairwise_encoding()};
  for (int i = 0; i < 100; ++i) {
    theories.push_back(gen_theory(gen, 0x5EED0000ULL ^ static_cast<uint64_t>(i)));
  }
  for (const Theory& d : theories) {
    IndexedTheory indexed(d);
    ConclusionSet fix = least_fixpoint(indexed, allTags);
    pass = pass && step(indexed, fix, allTags) == fix;
    // A deterministic permutation: rules reversed.
    Theory rev = d;
    std::reverse(rev.rules.begin(), rev.rules.end());
    pass = pass && least_fixpoint(rev, allTags).members == fix.members;
  }
  report(11, "fixpoint idempotence and rule-order independence", pass);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7and8();
  criterion9();
  criterion10();
  criterion11();
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}

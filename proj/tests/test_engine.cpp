#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "dlwb/engine.hpp"
#include "dlwb/fixtures.hpp"
#include "dlwb/harness.hpp"
#include "dlwb/text_format.hpp"
#include "dlwb/theory.hpp"

using namespace dlwb;

namespace {

Literal lit(const std::string& atom, bool positive = true) {
  return Literal{atom, positive};
}

bool subset(const ConclusionSet& a, const ConclusionSet& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(),
                       a.members.end());
}

ConclusionSet saturate_by_rounds(const IndexedTheory& it,
                                 const std::set<Tag>& tags) {
  ConclusionSet e;
  e.universe = language_of(it.theory());
  while (true) {
    ConclusionSet next = step(it, e, tags);
    if (next == e) return e;
    e = std::move(next);
  }
}

}  // namespace

TEST_CASE("tag names round-trip and dependency closure is fixed") {
  for (Tag t : kAllTags) CHECK(tag_from_name(tag_name(t)) == t);
  CHECK(close_tags({Tag::Blocking}) ==
        std::set<Tag>{Tag::Delta, Tag::Blocking});
  CHECK(close_tags({Tag::BlockingInd}) ==
        std::set<Tag>{Tag::Delta, Tag::BlockingInd});
  CHECK(close_tags({Tag::Propagating}) ==
        std::set<Tag>{Tag::Delta, Tag::Propagating, Tag::Support});
  CHECK(close_tags({Tag::SupportInd}) ==
        std::set<Tag>{Tag::Delta, Tag::PropagatingInd, Tag::SupportInd});
  CHECK(tags_closed(close_tags({Tag::Propagating})));
  CHECK_FALSE(tags_closed({Tag::Propagating}));
}

TEST_CASE("the index groups rules by head with defeaters excluded from sd") {
  IndexedTheory it(fixtures::ambiguity());
  int nq = it.literal_index(lit("q", false));
  int q = it.literal_index(lit("q"));
  REQUIRE(nq >= 0);
  REQUIRE(q >= 0);
  CHECK(it.rules_for(nq).size() == 1);
  CHECK(it.theory().rules[it.rules_for(nq)[0]].label == "r3");
  CHECK(it.supportive_rules_for(q).size() == 1);
  CHECK(it.theory().rules[it.supportive_rules_for(q)[0]].label == "r4");
  CHECK(it.strict_rules_for(q).empty());
  CHECK(it.complement_index(q) == nq);
  CHECK(it.literal_index(lit("zzz")) == -1);

  IndexedTheory empty(Theory{});
  CHECK(empty.universe().empty());
  CHECK(empty.rules().empty());

  Theory defeaterOnly;
  defeaterOnly.rules.push_back(
      make_rule("d1", {}, ArrowKind::Defeater, lit("p")));
  IndexedTheory di(defeaterOnly);
  int p = di.literal_index(lit("p"));
  CHECK(di.rules_for(p).size() == 1);
  CHECK(di.supportive_rules_for(p).empty());
}

TEST_CASE("step demands a dependency-closed tag set") {
  IndexedTheory it(fixtures::ambiguity());
  ConclusionSet e;
  e.universe = language_of(it.theory());
  CHECK_THROWS_AS(step(it, e, {Tag::Blocking}), TagSetNotClosed);
  CHECK_THROWS_AS(step(it, e, {Tag::Propagating, Tag::Delta}),
                  TagSetNotClosed);
  CHECK_NOTHROW(step(it, e, {Tag::Delta}));
}

TEST_CASE("a first step on the ambiguity demo refutes all strict goals") {
  IndexedTheory it(fixtures::ambiguity());
  ConclusionSet e;
  e.universe = language_of(it.theory());
  ConclusionSet one = step(it, e, {Tag::Delta});
  std::set<SignedConclusion> expect;
  for (const Literal& q : e.universe.literals) {
    expect.insert({Sign::Minus, Tag::Delta, q});
  }
  CHECK(one.members == expect);
}

TEST_CASE("after strict saturation one step settles the unbeaten pairs") {
  IndexedTheory it(fixtures::ambiguity());
  ConclusionSet deltaSat = saturate_by_rounds(it, {Tag::Delta});
  ConclusionSet next = step(it, deltaSat, {Tag::Delta, Tag::BlockingInd});
  std::set<SignedConclusion> expect = deltaSat.members;
  // r1/r2 beat each other with empty bodies; r3 is attacked by unbeaten r4.
  expect.insert({Sign::Minus, Tag::BlockingInd, lit("p")});
  expect.insert({Sign::Minus, Tag::BlockingInd, lit("p", false)});
  expect.insert({Sign::Minus, Tag::BlockingInd, lit("q", false)});
  CHECK(next.members == expect);
}

TEST_CASE("ambiguity demo fixpoints match the worked conclusions") {
  ConclusionSet blocking =
      least_fixpoint(fixtures::ambiguity(), {Tag::BlockingInd});
  CHECK(blocking.contains(Sign::Minus, Tag::BlockingInd, lit("p")));
  CHECK(blocking.contains(Sign::Minus, Tag::BlockingInd, lit("p", false)));
  CHECK(blocking.contains(Sign::Plus, Tag::BlockingInd, lit("q")));
  CHECK(blocking.contains(Sign::Minus, Tag::BlockingInd, lit("q", false)));

  ConclusionSet prop = least_fixpoint(fixtures::ambiguity(),
                                      {Tag::PropagatingInd, Tag::SupportInd});
  for (const Literal& q : language_of(fixtures::ambiguity()).literals) {
    CHECK(prop.contains(Sign::Minus, Tag::PropagatingInd, q));
    CHECK(prop.contains(Sign::Plus, Tag::SupportInd, q));
  }
}

TEST_CASE("a lone fact is proved at every tag and its complement refuted") {
  Theory d;
  d.facts.insert(lit("p"));
  ConclusionSet all = least_fixpoint(
      d, std::set<Tag>(kAllTags, kAllTags + kTagCount));
  for (Tag t : kAllTags) {
    CHECK(all.contains(Sign::Plus, t, lit("p")));
    CHECK(all.contains(Sign::Minus, t, lit("p", false)));
  }
}

TEST_CASE("requested tags filter the fixpoint but dependencies still run") {
  ConclusionSet only = least_fixpoint(fixtures::ambiguity(), {Tag::Blocking});
  for (const SignedConclusion& c : only.members) {
    CHECK(c.tag == Tag::Blocking);
  }
  CHECK(only.contains(Sign::Plus, Tag::Blocking, lit("q")));
}

TEST_CASE("query reports proved, refuted and undetermined") {
  CHECK(query(fixtures::ambiguity(), Tag::BlockingInd, lit("q")) ==
        QueryResult::Proved);
  CHECK(query(fixtures::ambiguity(), Tag::BlockingInd, lit("p")) ==
        QueryResult::Refuted);
  CHECK(query(fixtures::ambiguity(), Tag::Delta, lit("zzz")) ==
        QueryResult::Refuted);

  ParseResult loop = parse_theory("r1: p => p.");
  REQUIRE(loop.ok());
  CHECK(query(loop.theory, Tag::Blocking, lit("p")) ==
        QueryResult::Undetermined);
}

TEST_CASE("step is monotone on random theories and chains") {
  GenConfig cfg;
  std::set<Tag> tags(kAllTags, kAllTags + kTagCount);
  for (int i = 0; i < 100; ++i) {
    IndexedTheory it(gen_theory(cfg, 0xBEEF0000u + i));
    ConclusionSet full = least_fixpoint(it, tags);
    // Build E1 <= E2 <= lfp by pseudo-randomly thinning the fixpoint.
    ConclusionSet e1, e2;
    e1.universe = e2.universe = full.universe;
    uint64_t x = 0x12345678u ^ (uint64_t)i;
    for (const SignedConclusion& c : full.members) {
      x = x * 6364136223846793005ULL + 1442695040888963407ULL;
      if (x >> 62) e2.members.insert(c);
      if ((x >> 60) == 15) e1.members.insert(c);
    }
    for (const SignedConclusion& c : e1.members) e2.members.insert(c);
    REQUIRE(subset(e1, e2));
    CHECK(subset(step(it, e1, tags), step(it, e2, tags)));
  }
}

TEST_CASE("pure round iteration agrees with least_fixpoint") {
  GenConfig cfg;
  std::set<Tag> tags(kAllTags, kAllTags + kTagCount);
  for (int i = 0; i < 50; ++i) {
    IndexedTheory it(gen_theory(cfg, 0xD00D0000u + i));
    CHECK(saturate_by_rounds(it, tags) == least_fixpoint(it, tags));
  }
}

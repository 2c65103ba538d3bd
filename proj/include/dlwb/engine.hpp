// Inference engine: tagged conclusions and the one-step consequence operator
// for seven proof tags, plus its least fixpoint.
//
// Tags and their text spellings:
//   D   definite (strict) provability
//   pd  ambiguity-blocking defeasible provability, team defeat
//   pd* ambiguity-blocking defeasible provability, individual defeat
//   d   ambiguity-propagating defeasible provability, team defeat
//   s   support (auxiliary to d)
//   d*  ambiguity-propagating defeasible provability, individual defeat
//   s*  support (auxiliary to d*)
#ifndef DLWB_ENGINE_HPP
#define DLWB_ENGINE_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlwb/theory.hpp"

namespace dlwb {

enum class Tag : int {
  Delta = 0,        // D
  Blocking,         // pd
  BlockingInd,      // pd*
  Propagating,      // d
  Support,          // s
  PropagatingInd,   // d*
  SupportInd,       // s*
};

inline constexpr int kTagCount = 7;
extern const Tag kAllTags[kTagCount];

std::string tag_name(Tag t);
std::optional<Tag> tag_from_name(std::string_view name);

/// Some proof conditions consult other tags: pd and pd* consult D; d and s
/// consult each other (and D); likewise d* and s*. close_tags adds the
/// required tags; a closed set is a precondition of step().
std::set<Tag> close_tags(std::set<Tag> tags);
bool tags_closed(const std::set<Tag>& tags);

struct TagSetNotClosed : std::invalid_argument {
  explicit TagSetNotClosed(const std::string& what)
      : std::invalid_argument(what) {}
};

enum class Sign { Plus, Minus };

struct SignedConclusion {
  Sign sign;
  Tag tag;
  Literal literal;

  friend auto operator<=>(const SignedConclusion&,
                          const SignedConclusion&) = default;
};

/// "+pd* q", "-D ~p", ...
std::string print_conclusion(const SignedConclusion& c);
std::optional<SignedConclusion> parse_conclusion(std::string_view text);

struct ConclusionSet {
  std::set<SignedConclusion> members;
  LanguageView universe;

  bool contains(Sign sign, Tag tag, const Literal& q) const {
    return members.count({sign, tag, q}) != 0;
  }
  friend bool operator==(const ConclusionSet& a, const ConclusionSet& b) {
    return a.members == b.members;
  }
};

/// Rule and literal indexes used by the step operator. Rules are grouped by
/// head literal: all rules, strict-or-defeasible only (defeaters cannot
/// support a positive conclusion), and strict only. Superiority is a raw
/// pair lookup; no transitive closure is taken.
class IndexedTheory {
 public:
  explicit IndexedTheory(Theory d);

  const Theory& theory() const { return theory_; }
  const std::vector<Literal>& universe() const { return universe_; }
  int literal_index(const Literal& q) const;        // -1 when absent
  int complement_index(int lit) const { return comp_[lit]; }
  bool is_fact(int lit) const { return isFact_[lit] != 0; }

  struct IndexedRule {
    int head;
    std::vector<int> body;
    ArrowKind arrow;
  };
  const std::vector<IndexedRule>& rules() const { return rules_; }
  const std::vector<int>& rules_for(int lit) const { return byHead_[lit]; }
  const std::vector<int>& supportive_rules_for(int lit) const {
    return byHeadSd_[lit];
  }
  const std::vector<int>& strict_rules_for(int lit) const {
    return byHeadStrict_[lit];
  }
  bool superior(int winner, int loser) const {
    return sup_.count({winner, loser}) != 0;
  }

 private:
  Theory theory_;
  std::vector<Literal> universe_;
  std::map<Literal, int> index_;
  std::vector<int> comp_;
  std::vector<char> isFact_;
  std::vector<IndexedRule> rules_;
  std::vector<std::vector<int>> byHead_, byHeadSd_, byHeadStrict_;
  std::set<std::pair<int, int>> sup_;
};

/// One application of the consequence operator: everything derivable from E
/// in a single step, for the requested (dependency-closed) tags. Monotone
/// in E; throws TagSetNotClosed when the tag set is not closed.
ConclusionSet step(const IndexedTheory& indexed, const ConclusionSet& e,
                   const std::set<Tag>& tags);

/// Least fixpoint of the step operator from the empty set, restricted to the
/// requested tags (dependencies are computed internally but filtered out of
/// the result only if they were not requested).
ConclusionSet least_fixpoint(const Theory& d, std::set<Tag> tags);
ConclusionSet least_fixpoint(const IndexedTheory& indexed, std::set<Tag> tags);

enum class QueryResult { Proved, Refuted, Undetermined };

/// Looks up a positive query +tag q against the least fixpoint: Proved when
/// +tag q holds, Refuted when -tag q holds, Undetermined otherwise.
/// Literals outside the theory's language are Refuted.
QueryResult query(const Theory& d, Tag tag, const Literal& q);

}  // namespace dlwb

#endif  // DLWB_ENGINE_HPP

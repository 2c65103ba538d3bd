#include "dlwb/engine.hpp"

#include <algorithm>

namespace dlwb {

const Tag kAllTags[kTagCount] = {
    Tag::Delta,      Tag::Blocking,       Tag::BlockingInd, Tag::Propagating,
    Tag::Support,    Tag::PropagatingInd, Tag::SupportInd,
};

std::string tag_name(Tag t) {
  switch (t) {
    case Tag::Delta: return "D";
    case Tag::Blocking: return "pd";
    case Tag::BlockingInd: return "pd*";
    case Tag::Propagating: return "d";
    case Tag::Support: return "s";
    case Tag::PropagatingInd: return "d*";
    case Tag::SupportInd: return "s*";
  }
  return "?";
}

std::optional<Tag> tag_from_name(std::string_view name) {
  for (Tag t : kAllTags) {
    if (tag_name(t) == name) return t;
  }
  return std::nullopt;
}

std::set<Tag> close_tags(std::set<Tag> tags) {
  if (tags.count(Tag::Blocking) || tags.count(Tag::BlockingInd) ||
      tags.count(Tag::Propagating) || tags.count(Tag::Support) ||
      tags.count(Tag::PropagatingInd) || tags.count(Tag::SupportInd)) {
    tags.insert(Tag::Delta);
  }
  if (tags.count(Tag::Propagating)) tags.insert(Tag::Support);
  if (tags.count(Tag::Support)) tags.insert(Tag::Propagating);
  if (tags.count(Tag::PropagatingInd)) tags.insert(Tag::SupportInd);
  if (tags.count(Tag::SupportInd)) tags.insert(Tag::PropagatingInd);
  return tags;
}

bool tags_closed(const std::set<Tag>& tags) { return close_tags(tags) == tags; }

std::string print_conclusion(const SignedConclusion& c) {
  std::string out(c.sign == Sign::Plus ? "+" : "-");
  out += tag_name(c.tag);
  out += ' ';
  if (!c.literal.positive) out += '~';
  out += c.literal.atom;
  return out;
}

std::optional<SignedConclusion> parse_conclusion(std::string_view text) {
  if (text.empty() || (text[0] != '+' && text[0] != '-')) return std::nullopt;
  Sign sign = text[0] == '+' ? Sign::Plus : Sign::Minus;
  size_t space = text.find(' ');
  if (space == std::string_view::npos) return std::nullopt;
  auto tag = tag_from_name(text.substr(1, space - 1));
  if (!tag) return std::nullopt;
  std::string_view lit = text.substr(space + 1);
  bool positive = true;
  if (!lit.empty() && lit[0] == '~') {
    positive = false;
    lit.remove_prefix(1);
  }
  if (lit.empty()) return std::nullopt;
  return SignedConclusion{sign, *tag, Literal{std::string(lit), positive}};
}

IndexedTheory::IndexedTheory(Theory d) : theory_(std::move(d)) {
  LanguageView lang = language_of(theory_);
  universe_.assign(lang.literals.begin(), lang.literals.end());
  for (int i = 0; i < static_cast<int>(universe_.size()); ++i) {
    index_[universe_[i]] = i;
  }
  comp_.resize(universe_.size());
  isFact_.assign(universe_.size(), 0);
  for (size_t i = 0; i < universe_.size(); ++i) {
    comp_[i] = index_.at(complement(universe_[i]));
  }
  for (const Literal& q : theory_.facts) isFact_[index_.at(q)] = 1;
  byHead_.resize(universe_.size());
  byHeadSd_.resize(universe_.size());
  byHeadStrict_.resize(universe_.size());
  std::map<std::string, int> byLabel;
  for (const Rule& r : theory_.rules) {
    int ruleIdx = static_cast<int>(rules_.size());
    IndexedRule ir;
    ir.head = index_.at(r.head);
    for (const Literal& b : r.body) ir.body.push_back(index_.at(b));
    ir.arrow = r.arrow;
    rules_.push_back(std::move(ir));
    byLabel[r.label] = ruleIdx;
    byHead_[rules_[ruleIdx].head].push_back(ruleIdx);
    if (r.arrow != ArrowKind::Defeater) {
      byHeadSd_[rules_[ruleIdx].head].push_back(ruleIdx);
    }
    if (r.arrow == ArrowKind::Strict) {
      byHeadStrict_[rules_[ruleIdx].head].push_back(ruleIdx);
    }
  }
  for (const auto& [winner, loser] : theory_.superiority) {
    auto w = byLabel.find(winner);
    auto l = byLabel.find(loser);
    if (w != byLabel.end() && l != byLabel.end()) {
      sup_.insert({w->second, l->second});
    }
  }
}

int IndexedTheory::literal_index(const Literal& q) const {
  auto it = index_.find(q);
  return it == index_.end() ? -1 : it->second;
}

namespace {

// Dense view of a conclusion set: one bit per (tag, sign, literal).
struct Ext {
  int nlits = 0;
  std::vector<char> bits;

  explicit Ext(int n) : nlits(n), bits(static_cast<size_t>(n) * kTagCount * 2, 0) {}

  size_t slot(Sign sign, Tag tag, int lit) const {
    return (static_cast<size_t>(tag) * 2 + (sign == Sign::Minus ? 1 : 0)) *
               nlits +
           lit;
  }
  bool get(Sign sign, Tag tag, int lit) const { return bits[slot(sign, tag, lit)]; }
  void set(Sign sign, Tag tag, int lit) { bits[slot(sign, tag, lit)] = 1; }
};

// Clause evaluator for the one-step consequence operator. Universal
// quantifiers over empty ranges hold vacuously; existential ones fail.
class Derivation {
 public:
  Derivation(const IndexedTheory& it, const Ext& e) : it_(it), e_(e) {}

  bool derivable(Sign sign, Tag tag, int q) const {
    switch (tag) {
      case Tag::Delta:
        return sign == Sign::Plus ? plusDelta(q) : minusDelta(q);
      case Tag::Blocking:
        return sign == Sign::Plus ? plusBlocking(q) : minusBlocking(q);
      case Tag::BlockingInd:
        return sign == Sign::Plus ? plusBlockingInd(q) : minusBlockingInd(q);
      case Tag::Propagating:
        return sign == Sign::Plus ? plusPropagating(q) : minusPropagating(q);
      case Tag::Support:
        return sign == Sign::Plus ? plusSupport(q) : minusSupport(q);
      case Tag::PropagatingInd:
        return sign == Sign::Plus ? plusPropagatingInd(q)
                                  : minusPropagatingInd(q);
      case Tag::SupportInd:
        return sign == Sign::Plus ? plusSupportInd(q) : minusSupportInd(q);
    }
    return false;
  }

 private:
  bool has(Sign sign, Tag tag, int lit) const { return e_.get(sign, tag, lit); }
  const IndexedTheory::IndexedRule& rule(int r) const { return it_.rules()[r]; }

  bool bodyAllPlus(int r, Tag tag) const {
    for (int a : rule(r).body) {
      if (!has(Sign::Plus, tag, a)) return false;
    }
    return true;
  }
  bool bodySomeMinus(int r, Tag tag) const {
    for (int a : rule(r).body) {
      if (has(Sign::Minus, tag, a)) return true;
    }
    return false;
  }

  // --- D ---
  bool plusDelta(int q) const {
    if (it_.is_fact(q)) return true;
    for (int r : it_.strict_rules_for(q)) {
      if (bodyAllPlus(r, Tag::Delta)) return true;
    }
    return false;
  }
  bool minusDelta(int q) const {
    if (it_.is_fact(q)) return false;
    for (int r : it_.strict_rules_for(q)) {
      if (!bodySomeMinus(r, Tag::Delta)) return false;
    }
    return true;
  }

  // --- pd: ambiguity blocking, team defeat ---
  bool plusBlocking(int q) const {
    if (has(Sign::Plus, Tag::Delta, q)) return true;
    int nq = it_.complement_index(q);
    bool applicable = false;
    for (int r : it_.supportive_rules_for(q)) {
      if (bodyAllPlus(r, Tag::Blocking)) { applicable = true; break; }
    }
    if (!applicable || !has(Sign::Minus, Tag::Delta, nq)) return false;
    for (int s : it_.rules_for(nq)) {
      if (bodySomeMinus(s, Tag::Blocking)) continue;
      bool countered = false;
      for (int t : it_.supportive_rules_for(q)) {
        if (bodyAllPlus(t, Tag::Blocking) && it_.superior(t, s)) {
          countered = true;
          break;
        }
      }
      if (!countered) return false;
    }
    return true;
  }
  bool minusBlocking(int q) const {
    if (!has(Sign::Minus, Tag::Delta, q)) return false;
    int nq = it_.complement_index(q);
    bool noneApplicable = true;
    for (int r : it_.supportive_rules_for(q)) {
      if (!bodySomeMinus(r, Tag::Blocking)) { noneApplicable = false; break; }
    }
    if (noneApplicable) return true;
    if (has(Sign::Plus, Tag::Delta, nq)) return true;
    for (int s : it_.rules_for(nq)) {
      if (!bodyAllPlus(s, Tag::Blocking)) continue;
      bool unanswered = true;
      for (int t : it_.supportive_rules_for(q)) {
        if (!bodySomeMinus(t, Tag::Blocking) && it_.superior(t, s)) {
          unanswered = false;
          break;
        }
      }
      if (unanswered) return true;
    }
    return false;
  }

  // --- pd*: ambiguity blocking, individual defeat ---
  bool plusBlockingInd(int q) const {
    if (has(Sign::Plus, Tag::Delta, q)) return true;
    int nq = it_.complement_index(q);
    for (int r : it_.supportive_rules_for(q)) {
      if (!bodyAllPlus(r, Tag::BlockingInd)) continue;
      if (!has(Sign::Minus, Tag::Delta, nq)) continue;
      bool beatsAll = true;
      for (int s : it_.rules_for(nq)) {
        if (!bodySomeMinus(s, Tag::BlockingInd) && !it_.superior(r, s)) {
          beatsAll = false;
          break;
        }
      }
      if (beatsAll) return true;
    }
    return false;
  }
  bool minusBlockingInd(int q) const {
    if (!has(Sign::Minus, Tag::Delta, q)) return false;
    int nq = it_.complement_index(q);
    for (int r : it_.supportive_rules_for(q)) {
      if (bodySomeMinus(r, Tag::BlockingInd)) continue;
      if (has(Sign::Plus, Tag::Delta, nq)) continue;
      bool defeated = false;
      for (int s : it_.rules_for(nq)) {
        if (bodyAllPlus(s, Tag::BlockingInd) && !it_.superior(r, s)) {
          defeated = true;
          break;
        }
      }
      if (!defeated) return false;
    }
    return true;
  }

  // --- d: ambiguity propagating, team defeat (attacks measured by s) ---
  bool plusPropagating(int q) const {
    if (has(Sign::Plus, Tag::Delta, q)) return true;
    int nq = it_.complement_index(q);
    bool applicable = false;
    for (int r : it_.supportive_rules_for(q)) {
      if (bodyAllPlus(r, Tag::Propagating)) { applicable = true; break; }
    }
    if (!applicable || !has(Sign::Minus, Tag::Delta, nq)) return false;
    for (int s : it_.rules_for(nq)) {
      if (bodySomeMinus(s, Tag::Support)) continue;
      bool countered = false;
      for (int t : it_.supportive_rules_for(q)) {
        if (bodyAllPlus(t, Tag::Propagating) && it_.superior(t, s)) {
          countered = true;
          break;
        }
      }
      if (!countered) return false;
    }
    return true;
  }
  bool minusPropagating(int q) const {
    if (!has(Sign::Minus, Tag::Delta, q)) return false;
    int nq = it_.complement_index(q);
    bool noneApplicable = true;
    for (int r : it_.supportive_rules_for(q)) {
      if (!bodySomeMinus(r, Tag::Propagating)) { noneApplicable = false; break; }
    }
    if (noneApplicable) return true;
    if (has(Sign::Plus, Tag::Delta, nq)) return true;
    for (int s : it_.rules_for(nq)) {
      if (!bodyAllPlus(s, Tag::Support)) continue;
      bool unanswered = true;
      for (int t : it_.supportive_rules_for(q)) {
        if (!bodySomeMinus(t, Tag::Propagating) && it_.superior(t, s)) {
          unanswered = false;
          break;
        }
      }
      if (unanswered) return true;
    }
    return false;
  }

  // --- s: support for d ---
  bool plusSupport(int q) const {
    if (has(Sign::Plus, Tag::Delta, q)) return true;
    int nq = it_.complement_index(q);
    for (int r : it_.supportive_rules_for(q)) {
      if (!bodyAllPlus(r, Tag::Support)) continue;
      bool undefeated = true;
      for (int s : it_.rules_for(nq)) {
        if (!bodySomeMinus(s, Tag::Propagating) && it_.superior(s, r)) {
          undefeated = false;
          break;
        }
      }
      if (undefeated) return true;
    }
    return false;
  }
  bool minusSupport(int q) const {
    if (!has(Sign::Minus, Tag::Delta, q)) return false;
    int nq = it_.complement_index(q);
    for (int r : it_.supportive_rules_for(q)) {
      if (bodySomeMinus(r, Tag::Support)) continue;
      bool overruled = false;
      for (int s : it_.rules_for(nq)) {
        if (bodyAllPlus(s, Tag::Propagating) && it_.superior(s, r)) {
          overruled = true;
          break;
        }
      }
      if (!overruled) return false;
    }
    return true;
  }

  // --- d*: ambiguity propagating, individual defeat ---
  bool plusPropagatingInd(int q) const {
    if (has(Sign::Plus, Tag::Delta, q)) return true;
    int nq = it_.complement_index(q);
    for (int r : it_.supportive_rules_for(q)) {
      if (!bodyAllPlus(r, Tag::PropagatingInd)) continue;
      if (!has(Sign::Minus, Tag::Delta, nq)) continue;
      bool beatsAll = true;
      for (int s : it_.rules_for(nq)) {
        if (!bodySomeMinus(s, Tag::SupportInd) && !it_.superior(r, s)) {
          beatsAll = false;
          break;
        }
      }
      if (beatsAll) return true;
    }
    return false;
  }
  bool minusPropagatingInd(int q) const {
    if (!has(Sign::Minus, Tag::Delta, q)) return false;
    int nq = it_.complement_index(q);
    for (int r : it_.supportive_rules_for(q)) {
      if (bodySomeMinus(r, Tag::PropagatingInd)) continue;
      if (has(Sign::Plus, Tag::Delta, nq)) continue;
      bool defeated = false;
      for (int s : it_.rules_for(nq)) {
        if (bodyAllPlus(s, Tag::SupportInd) && !it_.superior(r, s)) {
          defeated = true;
          break;
        }
      }
      if (!defeated) return false;
    }
    return true;
  }

  // --- s*: support for d* ---
  bool plusSupportInd(int q) const {
    if (has(Sign::Plus, Tag::Delta, q)) return true;
    int nq = it_.complement_index(q);
    for (int r : it_.supportive_rules_for(q)) {
      if (!bodyAllPlus(r, Tag::SupportInd)) continue;
      bool undefeated = true;
      for (int s : it_.rules_for(nq)) {
        if (!bodySomeMinus(s, Tag::PropagatingInd) && it_.superior(s, r)) {
          undefeated = false;
          break;
        }
      }
      if (undefeated) return true;
    }
    return false;
  }
  bool minusSupportInd(int q) const {
    if (!has(Sign::Minus, Tag::Delta, q)) return false;
    int nq = it_.complement_index(q);
    for (int r : it_.supportive_rules_for(q)) {
      if (bodySomeMinus(r, Tag::SupportInd)) continue;
      bool overruled = false;
      for (int s : it_.rules_for(nq)) {
        if (bodyAllPlus(s, Tag::PropagatingInd) && it_.superior(s, r)) {
          overruled = true;
          break;
        }
      }
      if (!overruled) return false;
    }
    return true;
  }

  const IndexedTheory& it_;
  const Ext& e_;
};

void requireClosed(const std::set<Tag>& tags) {
  if (!tags_closed(tags)) {
    std::string names;
    for (Tag t : close_tags(tags)) {
      if (!tags.count(t)) names += (names.empty() ? "" : ", ") + tag_name(t);
    }
    throw TagSetNotClosed("tag set is missing required tags: " + names);
  }
}

Ext toExt(const IndexedTheory& it, const ConclusionSet& e) {
  Ext ext(static_cast<int>(it.universe().size()));
  for (const SignedConclusion& c : e.members) {
    int lit = it.literal_index(c.literal);
    if (lit < 0) {
      throw std::invalid_argument("conclusion set mentions literal '" +
                                  c.literal.atom +
                                  "' outside the theory's language");
    }
    ext.set(c.sign, c.tag, lit);
  }
  return ext;
}

ConclusionSet fromExt(const IndexedTheory& it, const Ext& ext,
                      const std::set<Tag>& tags) {
  ConclusionSet out;
  out.universe = language_of(it.theory());
  for (Tag tag : tags) {
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      for (int lit = 0; lit < ext.nlits; ++lit) {
        if (ext.get(sign, tag, lit)) {
          out.members.insert({sign, tag, it.universe()[lit]});
        }
      }
    }
  }
  return out;
}

}  // namespace

ConclusionSet step(const IndexedTheory& indexed, const ConclusionSet& e,
                   const std::set<Tag>& tags) {
  requireClosed(tags);
  Ext in = toExt(indexed, e);
  Ext out(in.nlits);
  Derivation derive(indexed, in);
  for (Tag tag : tags) {
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      for (int lit = 0; lit < in.nlits; ++lit) {
        if (derive.derivable(sign, tag, lit)) out.set(sign, tag, lit);
      }
    }
  }
  return fromExt(indexed, out, tags);
}

ConclusionSet least_fixpoint(const IndexedTheory& indexed, std::set<Tag> tags) {
  std::set<Tag> closed = close_tags(tags);
  int nlits = static_cast<int>(indexed.universe().size());
  Ext ext(nlits);
  // The iteration sequence from the empty set is increasing, so conclusions
  // can be accumulated in place; equivalence with pure whole-set rounds is
  // property-tested.
  bool changed = true;
  while (changed) {
    changed = false;
    Derivation derive(indexed, ext);
    for (Tag tag : closed) {
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        for (int lit = 0; lit < nlits; ++lit) {
          if (!ext.get(sign, tag, lit) && derive.derivable(sign, tag, lit)) {
            ext.set(sign, tag, lit);
            changed = true;
          }
        }
      }
    }
  }
  return fromExt(indexed, ext, tags);
}

ConclusionSet least_fixpoint(const Theory& d, std::set<Tag> tags) {
  return least_fixpoint(IndexedTheory(d), std::move(tags));
}

QueryResult query(const Theory& d, Tag tag, const Literal& q) {
  IndexedTheory indexed(d);
  if (indexed.literal_index(q) < 0) return QueryResult::Refuted;
  ConclusionSet fix = least_fixpoint(indexed, {tag});
  if (fix.contains(Sign::Plus, tag, q)) return QueryResult::Proved;
  if (fix.contains(Sign::Minus, tag, q)) return QueryResult::Refuted;
  return QueryResult::Undetermined;
}

}  // namespace dlwb

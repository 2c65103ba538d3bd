#include "dlwb/transform.hpp"

#include <algorithm>
#include <functional>

#include "dlwb/text_format.hpp"

namespace dlwb {

std::string transform_kind_name(TransformKind k) {
  switch (k) {
    case TransformKind::BlockForProp: return "block-for-prop";
    case TransformKind::PropForBlock: return "prop-for-block";
    case TransformKind::TeamForIndividualBase:
      return "team-for-individual-base";
    case TransformKind::TeamForIndividual: return "team-for-individual";
    case TransformKind::IndividualForTeam: return "individual-for-team";
  }
  return "?";
}

std::optional<TransformKind> transform_kind_from_name(std::string_view name) {
  for (TransformKind k :
       {TransformKind::BlockForProp, TransformKind::PropForBlock,
        TransformKind::TeamForIndividualBase, TransformKind::TeamForIndividual,
        TransformKind::IndividualForTeam}) {
    if (transform_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string fresh_name(const std::string& family, const std::string& key,
                       const std::string& prefix) {
  if (key.empty()) return prefix + family;
  return prefix + family + "(" + key + ")";
}

std::string fresh_prefix_for(const Theory& d) {
  size_t run = 0;
  auto scan = [&](const std::string& name) {
    size_t k = 0;
    while (k < name.size() && name[k] == '$') ++k;
    run = std::max(run, k);
  };
  for (const Literal& q : d.facts) scan(q.atom);
  for (const Rule& r : d.rules) {
    scan(r.label);
    scan(r.head.atom);
    for (const Literal& b : r.body) scan(b.atom);
  }
  return std::string(run + 1, '$');
}

namespace {

// Name factory bound to one input theory, so re-transforming an already
// transformed theory stays injective.
struct Namer {
  std::string prefix;

  explicit Namer(const Theory& d) : prefix(fresh_prefix_for(d)) {}

  static std::string key(const Literal& q) {
    return q.positive ? q.atom : "~" + q.atom;
  }
  Literal atom(const std::string& family, const std::string& k) const {
    return Literal{fresh_name(family, k, prefix), true};
  }
  Literal atom(const std::string& family, const Literal& q) const {
    return atom(family, key(q));
  }
  Literal atom2(const std::string& family, const std::string& k1,
                const std::string& k2) const {
    return Literal{fresh_name(family, k1 + "," + k2, prefix), true};
  }
  std::string label(const std::string& family, const std::string& k) const {
    return fresh_name(family, k, prefix);
  }
  std::string label(const std::string& family, const Literal& q) const {
    return label(family, key(q));
  }
  std::string label2(const std::string& family, const std::string& k1,
                     const std::string& k2) const {
    return fresh_name(family, k1 + "," + k2, prefix);
  }
};

std::vector<Literal> sorted_literals(const Theory& d) {
  LanguageView lang = language_of(d);
  return {lang.literals.begin(), lang.literals.end()};
}

std::vector<const Rule*> opposing_rules(const Theory& d, const Literal& head) {
  Literal target = complement(head);
  std::vector<const Rule*> out;
  for (const Rule& s : d.rules) {
    if (s.head == target) out.push_back(&s);
  }
  return out;
}

bool supportive(const Rule& r) { return r.arrow != ArrowKind::Defeater; }

// Copied strict rules must contribute only to strict provability: used
// defeasibly they would bypass the guard atoms that encode the source
// logic's attack conditions. An empty-bodied defeater per literal blocks
// their defeasible use (it cannot be discharged by body failure, only by
// superiority), and the transformation's own rules for each literal are made
// superior to both that defeater and the copied strict rules for the
// opposite literal, so their behaviour is unchanged. The defeater is also
// made superior to the copied rules themselves, which stops them from firing
// at the support tags as well.
void neutralize_copied_strict(
    const Theory& d, const Namer& nm, Theory& out,
    const std::function<std::vector<std::string>(const Literal&)>& routes) {
  for (const Literal& q : sorted_literals(d)) {
    std::vector<const Rule*> stricts;
    for (const Rule& r : d.rules) {
      if (r.arrow == ArrowKind::Strict && r.head == q) stricts.push_back(&r);
    }
    if (stricts.empty()) continue;
    std::string guard = nm.label("strict_guard", q);
    out.rules.push_back(
        make_rule(guard, {}, ArrowKind::Defeater, complement(q)));
    for (const Rule* s : stricts) out.superiority.insert({guard, s->label});
    for (const std::string& c : routes(q)) out.superiority.insert({c, guard});
    for (const std::string& c : routes(complement(q))) {
      for (const Rule* s : stricts) out.superiority.insert({c, s->label});
    }
  }
}

}  // namespace

Theory t_block_for_prop(const Theory& d) {
  Namer nm(d);
  Theory out;
  out.facts = d.facts;
  for (const Rule& r : d.rules) {
    if (r.arrow == ArrowKind::Strict) out.rules.push_back(r);
  }
  // Mirror strict provability: $strict(q) is defeasibly provable iff q is
  // strictly provable, and refuted iff strict provability of q fails.
  for (const Literal& q : sorted_literals(d)) {
    out.rules.push_back(make_rule(nm.label("str", q), {q}, ArrowKind::Strict,
                                  nm.atom("strict", q)));
    out.rules.push_back(make_rule(nm.label("nstr", q), {},
                                  ArrowKind::Defeasible,
                                  complement(nm.atom("strict", q))));
    out.superiority.insert({nm.label("nstr", q), nm.label("str", q)});
  }
  // Whatever holds defeasibly is supported.
  for (const Literal& q : sorted_literals(d)) {
    out.rules.push_back(make_rule(nm.label("supp_intro", q), {q},
                                  ArrowKind::Defeasible, nm.atom("supp", q)));
  }
  // Support inference: the head of r is supported when r's body is supported
  // and no superior opposing rule applies ($o(r) marks overruling).
  // $supp_body(r) exists for defeaters too: they never support their head,
  // but their body support is what lets them defeat opposing rules.
  for (const Rule& r : d.rules) {
    std::vector<Literal> suppBody;
    for (const Literal& b : r.body) suppBody.push_back(nm.atom("supp", b));
    out.rules.push_back(make_rule(nm.label("supp_body_of", r.label),
                                  std::move(suppBody), ArrowKind::Defeasible,
                                  nm.atom("supp_body", r.label)));
    if (!supportive(r)) continue;
    out.rules.push_back(make_rule(
        nm.label("supp_via", r.label),
        {nm.atom("supp_body", r.label), complement(nm.atom("o", r.label))},
        ArrowKind::Defeasible, nm.atom("supp", r.head)));
    out.rules.push_back(make_rule(nm.label("p_s", r.label), {},
                                  ArrowKind::Defeasible,
                                  complement(nm.atom("o", r.label))));
    for (const Rule* s : opposing_rules(d, r.head)) {
      if (!d.superiority.count({s->label, r.label})) continue;
      out.rules.push_back(make_rule(nm.label2("n_s", r.label, s->label),
                                    s->body, ArrowKind::Defeasible,
                                    nm.atom("o", r.label)));
      out.superiority.insert(
          {nm.label2("n_s", r.label, s->label), nm.label("p_s", r.label)});
    }
  }
  // Defeasible inference: q follows from r unless some not-inferior opposing
  // rule is supported ($comp(r)) or ~q is strictly provable.
  for (const Rule& r : d.rules) {
    if (!supportive(r)) continue;
    std::vector<Literal> infBody = r.body;
    infBody.push_back(complement(nm.atom("comp", r.label)));
    infBody.push_back(complement(nm.atom("strict", complement(r.head))));
    out.rules.push_back(make_rule(nm.label("inf", r.label), std::move(infBody),
                                  ArrowKind::Defeasible, r.head));
    out.rules.push_back(make_rule(nm.label("p_d", r.label), {},
                                  ArrowKind::Defeasible,
                                  complement(nm.atom("comp", r.label))));
    for (const Rule* s : opposing_rules(d, r.head)) {
      if (d.superiority.count({r.label, s->label})) continue;
      out.rules.push_back(make_rule(nm.label2("n_d", r.label, s->label),
                                    {nm.atom("supp_body", s->label)},
                                    ArrowKind::Defeasible,
                                    nm.atom("comp", r.label)));
      out.superiority.insert(
          {nm.label2("n_d", r.label, s->label), nm.label("p_d", r.label)});
    }
  }
  neutralize_copied_strict(d, nm, out, [&](const Literal& q) {
    std::vector<std::string> routes;
    for (const Rule& r : d.rules) {
      if (supportive(r) && r.head == q) routes.push_back(nm.label("inf", r.label));
    }
    return routes;
  });
  return out;
}

Theory t_prop_for_block(const Theory& d) {
  Namer nm(d);
  Theory out;
  out.facts = d.facts;
  for (const Rule& r : d.rules) {
    if (r.arrow == ArrowKind::Strict) out.rules.push_back(r);
  }
  // $strict(q) mirrors strict provability of q; $true(q) repeats it at a
  // level where ambiguity-propagating and support inference agree.
  for (const Literal& q : sorted_literals(d)) {
    out.rules.push_back(make_rule(nm.label("str", q), {q}, ArrowKind::Strict,
                                  nm.atom("strict", q)));
    out.rules.push_back(make_rule(nm.label("nstr", q), {},
                                  ArrowKind::Defeasible,
                                  complement(nm.atom("strict", q))));
    out.rules.push_back(make_rule(nm.label("t", q), {nm.atom("strict", q)},
                                  ArrowKind::Defeasible, nm.atom("true", q)));
    out.rules.push_back(make_rule(nm.label("nt", q), {}, ArrowKind::Defeasible,
                                  complement(nm.atom("true", q))));
    out.superiority.insert({nm.label("nstr", q), nm.label("str", q)});
    out.superiority.insert({nm.label("t", q), nm.label("nt", q)});
  }
  // q holds when some rule for q is undefeated: no not-inferior opposing
  // rule applies and ~q is not strictly provable.
  for (const Literal& q : sorted_literals(d)) {
    out.rules.push_back(make_rule(nm.label("undef_intro", q),
                                  {nm.atom("undefeated", q)},
                                  ArrowKind::Defeasible, q));
  }
  // Each rule fights its own battle on a private $defeated(r) atom, so that
  // one rule's defeat can never silence another rule for the same literal
  // and team logics cannot pool counter-attacks across rules.
  for (const Rule& r : d.rules) {
    if (!supportive(r)) continue;
    std::vector<Literal> body = r.body;
    body.push_back(complement(nm.atom("true", complement(r.head))));
    body.push_back(complement(nm.atom("defeated", r.label)));
    out.rules.push_back(make_rule(nm.label("p_d", r.label), std::move(body),
                                  ArrowKind::Defeasible,
                                  nm.atom("undefeated", r.head)));
    out.rules.push_back(make_rule(nm.label("presume", r.label), {},
                                  ArrowKind::Defeasible,
                                  complement(nm.atom("defeated", r.label))));
    for (const Rule* s : opposing_rules(d, r.head)) {
      if (d.superiority.count({r.label, s->label})) continue;
      out.rules.push_back(make_rule(nm.label2("n_d", r.label, s->label),
                                    s->body, ArrowKind::Defeasible,
                                    nm.atom("defeated", r.label)));
      out.superiority.insert(
          {nm.label2("n_d", r.label, s->label), nm.label("presume", r.label)});
    }
  }
  neutralize_copied_strict(d, nm, out, [&](const Literal& q) {
    return std::vector<std::string>{nm.label("undef_intro", q)};
  });
  return out;
}

Theory t_team_for_individual_base(const Theory& d) {
  Namer nm(d);
  Theory out;
  out.facts = d.facts;
  // Each rule gets a private head $h(r), relayed strictly to the original
  // head, and each opposing rule attacks $h(r) directly: pairwise
  // competition replaces team competition.
  for (const Rule& r : d.rules) {
    out.rules.push_back(
        make_rule(nm.label("p", r.label), r.body, r.arrow, nm.atom("h", r.label)));
    out.rules.push_back(make_rule(nm.label("s", r.label), {nm.atom("h", r.label)},
                                  ArrowKind::Strict, r.head));
    for (const Rule* rp : opposing_rules(d, r.head)) {
      out.rules.push_back(make_rule(nm.label2("n", r.label, rp->label),
                                    rp->body, rp->arrow,
                                    complement(nm.atom("h", r.label))));
    }
  }
  for (const auto& [winner, loser] : d.superiority) {
    const Rule* w = nullptr;
    const Rule* l = nullptr;
    for (const Rule& r : d.rules) {
      if (r.label == winner) w = &r;
      if (r.label == loser) l = &r;
    }
    if (!w || !l || w->head != complement(l->head)) continue;
    out.superiority.insert(
        {nm.label("p", winner), nm.label2("n", winner, loser)});
    out.superiority.insert(
        {nm.label2("n", loser, winner), nm.label("p", loser)});
  }
  return out;
}

Theory t_team_for_individual(const Theory& d) {
  Namer nm(d);
  Theory out = t_team_for_individual_base(d);
  // Guard against additions left without a competitor: $one(q) records that
  // some rule for q applies, and the defeater o(q) then opposes ~q without
  // ever deriving q. Any successful original route overrules it.
  for (const Literal& q : sorted_literals(d)) {
    out.rules.push_back(make_rule(nm.label("o", q), {nm.atom("one", q)},
                                  ArrowKind::Defeater, q));
  }
  for (const Rule& r : d.rules) {
    out.rules.push_back(make_rule(nm.label("one_intro", r.label), r.body,
                                  ArrowKind::Defeasible,
                                  nm.atom("one", r.head)));
  }
  for (const Rule& r : d.rules) {
    out.superiority.insert(
        {nm.label("s", r.label), nm.label("o", complement(r.head))});
  }
  return out;
}

Theory t_individual_for_team(const Theory& d) {
  Namer nm(d);
  Theory out;
  out.facts = d.facts;
  for (const Rule& r : d.rules) {
    if (r.arrow == ArrowKind::Strict) out.rules.push_back(r);
  }
  for (const Literal& q : sorted_literals(d)) {
    out.rules.push_back(make_rule(nm.label("str", q), {q}, ArrowKind::Strict,
                                  nm.atom("strict", q)));
    out.rules.push_back(make_rule(nm.label("nstr", q), {},
                                  ArrowKind::Defeasible,
                                  complement(nm.atom("strict", q))));
    out.rules.push_back(make_rule(nm.label("t", q), {nm.atom("strict", q)},
                                  ArrowKind::Defeasible, nm.atom("true", q)));
    out.rules.push_back(make_rule(nm.label("nt", q), {}, ArrowKind::Defeasible,
                                  complement(nm.atom("true", q))));
    out.superiority.insert({nm.label("nstr", q), nm.label("str", q)});
    out.superiority.insert({nm.label("t", q), nm.label("nt", q)});
  }
  // $d(r_i) holds when rule r_i is defeated: beaten by some applicable
  // supportive opposing rule or by strict truth of the opposite head
  // ($d(r_i,r_j)), or its own body fails ($fail(r_i)).
  for (const Rule& ri : d.rules) {
    for (const Rule* rj : opposing_rules(d, ri.head)) {
      if (!supportive(*rj)) continue;
      std::string r1 = nm.label2("R1", ri.label, rj->label);
      std::string r2 = nm.label2("R2", ri.label, rj->label);
      std::string r3 = nm.label2("R3", ri.label, rj->label);
      Literal dij = nm.atom2("d", ri.label, rj->label);
      out.rules.push_back(make_rule(r1, ri.body, ri.arrow, complement(dij)));
      out.rules.push_back(make_rule(r2, rj->body, ArrowKind::Defeasible, dij));
      out.rules.push_back(make_rule(r3, {nm.atom("true", rj->head)},
                                    ArrowKind::Defeasible, dij));
      out.rules.push_back(make_rule(nm.label2("d_link", ri.label, rj->label),
                                    {dij}, ArrowKind::Defeasible,
                                    nm.atom("d", ri.label)));
      if (d.superiority.count({rj->label, ri.label})) {
        out.superiority.insert({r2, r1});
      }
      // Mirror edge: at the support level an attacker only counts when it is
      // superior, so without this edge $d(r_i,r_j) would gain support even
      // while r_i beats r_j outright.
      if (d.superiority.count({ri.label, rj->label})) {
        out.superiority.insert({r1, r2});
      }
      out.superiority.insert({r3, r1});
    }
    out.rules.push_back(make_rule(nm.label("d_fail", ri.label),
                                  {nm.atom("fail", ri.label)},
                                  ArrowKind::Defeasible, nm.atom("d", ri.label)));
    out.rules.push_back(make_rule(nm.label("NF", ri.label), ri.body,
                                  ArrowKind::Defeasible,
                                  complement(nm.atom("fail", ri.label))));
    out.rules.push_back(make_rule(nm.label("F", ri.label), {},
                                  ArrowKind::Defeasible,
                                  nm.atom("fail", ri.label)));
    out.superiority.insert({nm.label("NF", ri.label), nm.label("F", ri.label)});
  }
  for (const Rule& r : d.rules) {
    if (!supportive(r)) continue;
    out.rules.push_back(make_rule(nm.label("one_intro", r.label), r.body,
                                  ArrowKind::Defeasible,
                                  nm.atom("one", r.head)));
  }
  // q follows when some supportive rule for q applies, ~q is not strictly
  // provable, and every opposing rule is defeated.
  for (const Literal& q : sorted_literals(d)) {
    std::vector<Literal> body = {nm.atom("one", q),
                                 complement(nm.atom("true", complement(q)))};
    for (const Rule* s : opposing_rules(d, q)) {
      body.push_back(nm.atom("d", s->label));
    }
    out.rules.push_back(
        make_rule(nm.label("s", q), std::move(body), ArrowKind::Defeasible, q));
  }
  // Support-only route: the inconsistent pair $g, ~$g keeps these rules
  // invisible to the provability tags while support still sees them.
  bool anySupp = false;
  for (const Rule& r : d.rules) {
    if (!supportive(r)) continue;
    anySupp = true;
    std::vector<Literal> body = r.body;
    for (const Rule* s : opposing_rules(d, r.head)) {
      body.push_back(nm.atom2("d_supp", s->label, r.label));
      out.rules.push_back(make_rule(nm.label2("a", s->label, r.label), s->body,
                                    ArrowKind::Defeasible,
                                    complement(nm.atom2("d_supp", s->label,
                                                        r.label))));
      out.rules.push_back(make_rule(nm.label2("b", s->label, r.label), r.body,
                                    ArrowKind::Defeasible,
                                    nm.atom2("d_supp", s->label, r.label)));
      if (d.superiority.count({s->label, r.label})) {
        out.superiority.insert(
            {nm.label2("a", s->label, r.label), nm.label2("b", s->label, r.label)});
      }
    }
    body.push_back(nm.atom("g", ""));
    body.push_back(complement(nm.atom("g", "")));
    out.rules.push_back(make_rule(nm.label2("supp", Namer::key(r.head), r.label),
                                  std::move(body), ArrowKind::Defeasible,
                                  r.head));
  }
  if (anySupp) {
    out.rules.push_back(
        make_rule(nm.label("g1", ""), {}, ArrowKind::Defeasible, nm.atom("g", "")));
    out.rules.push_back(make_rule(nm.label("g2", ""), {}, ArrowKind::Defeasible,
                                  complement(nm.atom("g", ""))));
  }
  // Competitor guard, as in the team-for-individual transformation.
  for (const Rule& r : d.rules) {
    out.rules.push_back(make_rule(nm.label("o_intro", r.label), r.body,
                                  ArrowKind::Defeasible,
                                  nm.atom("o", r.head)));
  }
  for (const Literal& q : sorted_literals(d)) {
    out.rules.push_back(make_rule(nm.label("o", q), {nm.atom("o", q)},
                                  ArrowKind::Defeater, q));
    out.superiority.insert(
        {nm.label("s", q), nm.label("o", complement(q))});
    // The copied strict rules for ~q are attackers here, but team defeat of
    // them is already encoded in the $d(...) body literals of $s(q); the edge
    // lets $s(q) discharge exactly those attackers its body has defeated.
    for (const Rule& r : d.rules) {
      if (r.arrow == ArrowKind::Strict && r.head == complement(q)) {
        out.superiority.insert({nm.label("s", q), r.label});
      }
    }
  }
  return out;
}

Theory apply_transform(TransformKind k, const Theory& d) {
  switch (k) {
    case TransformKind::BlockForProp: return t_block_for_prop(d);
    case TransformKind::PropForBlock: return t_prop_for_block(d);
    case TransformKind::TeamForIndividualBase:
      return t_team_for_individual_base(d);
    case TransformKind::TeamForIndividual: return t_team_for_individual(d);
    case TransformKind::IndividualForTeam: return t_individual_for_team(d);
  }
  return d;
}

}  // namespace dlwb

#include "dlwb/theory.hpp"

#include <algorithm>
#include <map>

namespace dlwb {

Literal complement(const Literal& q) { return Literal{q.atom, !q.positive}; }

void normalize_body(std::vector<Literal>& body) {
  std::sort(body.begin(), body.end());
  body.erase(std::unique(body.begin(), body.end()), body.end());
}

Rule make_rule(std::string label, std::vector<Literal> body, ArrowKind arrow,
               Literal head) {
  normalize_body(body);
  return Rule{std::move(label), std::move(body), arrow, std::move(head)};
}

ValidationResult validate_theory(const Theory& d) {
  ValidationResult out;
  std::map<std::string, const Rule*> byLabel;
  for (const Rule& r : d.rules) {
    auto [it, inserted] = byLabel.emplace(r.label, &r);
    if (!inserted) {
      out.violations.push_back({Violation::Kind::DuplicateLabel,
                                "duplicate rule label '" + r.label + "'"});
    }
  }
  for (const auto& [winner, loser] : d.superiority) {
    bool dangling = false;
    for (const std::string& lbl : {winner, loser}) {
      if (!byLabel.count(lbl)) {
        out.violations.push_back(
            {Violation::Kind::DanglingSuperiority,
             "superiority pair " + winner + " > " + loser +
                 " references unknown label '" + lbl + "'"});
        dangling = true;
      }
    }
    if (!dangling) {
      const Rule* w = byLabel[winner];
      const Rule* l = byLabel[loser];
      if (w->head != complement(l->head)) {
        out.notes.push_back("superiority pair " + winner + " > " + loser +
                            " relates rules with non-opposing heads");
      }
    }
  }
  // Cycle detection over the superiority graph (edges winner -> loser).
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [w, l] : d.superiority) adj[w].push_back(l);
  std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
  std::vector<std::string> stack;
  bool cycleReported = false;
  auto dfs = [&](auto&& self, const std::string& v) -> void {
    state[v] = 1;
    for (const std::string& w : adj[v]) {
      if (state[w] == 1 && !cycleReported) {
        cycleReported = true;
        out.violations.push_back({Violation::Kind::SuperiorityCycle,
                                  "superiority cycle through '" + w + "'"});
      } else if (state[w] == 0) {
        self(self, w);
      }
    }
    state[v] = 2;
  };
  for (const auto& [v, _] : adj) {
    if (state[v] == 0) dfs(dfs, v);
  }
  return out;
}

LanguageView language_of(const Theory& d) {
  LanguageView lang;
  auto addLit = [&](const Literal& q) {
    lang.literals.insert(q);
    lang.literals.insert(complement(q));
  };
  for (const Literal& q : d.facts) addLit(q);
  for (const Rule& r : d.rules) {
    addLit(r.head);
    for (const Literal& b : r.body) addLit(b);
    lang.labels.insert(r.label);
  }
  return lang;
}

Theory add_theories(const Theory& d, const Theory& a) {
  LanguageView ld = language_of(d);
  Theory out = d;
  for (const Rule& r : a.rules) {
    if (ld.labels.count(r.label)) throw LabelClash(r.label);
    out.rules.push_back(r);
  }
  out.facts.insert(a.facts.begin(), a.facts.end());
  out.superiority.insert(a.superiority.begin(), a.superiority.end());
  return out;
}

ModularityCheck is_modular_addition(const Theory& d, const Theory& td,
                                    const Theory& a) {
  LanguageView ld = language_of(d);
  LanguageView ltd = language_of(td);
  LanguageView la = language_of(a);
  for (const Literal& q : la.literals) {
    if (ltd.literals.count(q) && !ld.literals.count(q)) {
      return {false, "literal '" + std::string(q.positive ? "" : "~") +
                         q.atom + "' is private to the transformed theory"};
    }
  }
  for (const std::string& lbl : la.labels) {
    if (ld.labels.count(lbl) || ltd.labels.count(lbl)) {
      return {false, "label '" + lbl + "' already in use"};
    }
  }
  return {true, ""};
}

}  // namespace dlwb

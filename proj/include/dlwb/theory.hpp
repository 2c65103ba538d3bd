// Core syntax for propositional defeasible theories: literals, rules,
// theories D = (F, R, >), language views, addition and modularity checks.
#ifndef DLWB_THEORY_HPP
#define DLWB_THEORY_HPP

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dlwb {

/// A literal is a signed atom; ~q flips the sign.
struct Literal {
  std::string atom;
  bool positive = true;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

Literal complement(const Literal& q);

/// Arrow kinds: -> strict, => defeasible, ~> defeater.
enum class ArrowKind { Strict, Defeasible, Defeater };

/// A labeled rule. The body is kept sorted and duplicate-free (set semantics).
struct Rule {
  std::string label;
  std::vector<Literal> body;
  ArrowKind arrow = ArrowKind::Defeasible;
  Literal head;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Sorts and deduplicates a body literal list in place.
void normalize_body(std::vector<Literal>& body);

Rule make_rule(std::string label, std::vector<Literal> body, ArrowKind arrow,
               Literal head);

/// Superiority pair (winner, loser) over rule labels.
using SuperiorityPair = std::pair<std::string, std::string>;

struct Theory {
  std::set<Literal> facts;
  std::vector<Rule> rules;
  std::set<SuperiorityPair> superiority;

  friend bool operator==(const Theory&, const Theory&) = default;
};

/// Sigma(D) closed under complement, plus Lambda(D).
struct LanguageView {
  std::set<Literal> literals;
  std::set<std::string> labels;
};

struct Violation {
  enum class Kind { DuplicateLabel, DanglingSuperiority, SuperiorityCycle };
  Kind kind;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;
  // Advisory only: superiority pairs between non-opposing rules. Inference
  // never consults them, so they are legal.
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
};

ValidationResult validate_theory(const Theory& d);

LanguageView language_of(const Theory& d);

/// Thrown by add_theories when the label sets intersect.
struct LabelClash : std::runtime_error {
  explicit LabelClash(const std::string& label)
      : std::runtime_error("label clash on '" + label + "'") {}
};

/// D + A: union of facts, rules and superiority. Requires disjoint labels.
Theory add_theories(const Theory& d, const Theory& a);

struct ModularityCheck {
  bool modular = false;
  std::string reason;  // names the offending literal or label when not modular
};

/// An addition A is modular wrt (D, T(D)) if Sigma(A) n Sigma(TD) <= Sigma(D)
/// and A's labels avoid both theories' labels.
ModularityCheck is_modular_addition(const Theory& d, const Theory& td,
                                    const Theory& a);

}  // namespace dlwb

#endif  // DLWB_THEORY_HPP

// Line-oriented text format for theories and conclusions.
//
//   # comment
//   p.              fact (also: fact p.)
//   r1: a, ~b => c. rule; arrows -> (strict), => (defeasible), ~> (defeater)
//   r1 > r2.        superiority (winner > loser)
//
// Atom and label names are letters, digits and underscore. Names starting
// with '$' (and containing parentheses) are reserved for generated theories
// and only accepted when `loose` parsing is requested.
#ifndef DLWB_TEXT_FORMAT_HPP
#define DLWB_TEXT_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlwb/theory.hpp"

namespace dlwb {

struct SourceSpan {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
};

struct ParseError {
  enum class Kind {
    Syntax,
    DuplicateLabel,
    ReservedAtom,
    DanglingSuperiority,
    SuperiorityCycle,
  };
  Kind kind;
  SourceSpan span;
  std::string message;
};

struct ParseResult {
  Theory theory;  // everything that parsed cleanly; parsing is total
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty(); }
};

/// Parses theory text. With loose=true, '$'-prefixed generated names
/// (including parenthesized keys) are accepted.
ParseResult parse_theory(std::string_view text, bool loose = false);

std::string print_literal(const Literal& q);

/// Canonical form: sorted facts, rules in original order, sorted superiority.
/// parse(print(D)) == D for valid theories.
std::string print_theory(const Theory& d);

}  // namespace dlwb

#endif  // DLWB_TEXT_FORMAT_HPP

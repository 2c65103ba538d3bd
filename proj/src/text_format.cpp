#include "dlwb/text_format.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace dlwb {
namespace {

bool isNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
  enum class Kind { Name, Tilde, Comma, Colon, Gt, Arrow, Dot, End, Bad };
  Kind kind = Kind::End;
  std::string text;      // name text or arrow spelling
  int column = 0;        // 1-based
};

// Tokenizes one statement line. `loose` admits '$'-names with balanced
// parenthesized keys (which may contain ~ , and nested parens).
class Lexer {
 public:
  Lexer(std::string_view line, bool loose) : line_(line), loose_(loose) {}

  Token next() {
    while (pos_ < line_.size() &&
           std::isspace(static_cast<unsigned char>(line_[pos_]))) {
      ++pos_;
    }
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size()) return {Token::Kind::End, "", col};
    char c = line_[pos_];
    if (c == ',') return ++pos_, Token{Token::Kind::Comma, ",", col};
    if (c == ':') return ++pos_, Token{Token::Kind::Colon, ":", col};
    if (c == '.') return ++pos_, Token{Token::Kind::Dot, ".", col};
    if (c == '>') return ++pos_, Token{Token::Kind::Gt, ">", col};
    if (c == '-' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
      pos_ += 2;
      return {Token::Kind::Arrow, "->", col};
    }
    if (c == '=' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
      pos_ += 2;
      return {Token::Kind::Arrow, "=>", col};
    }
    if (c == '~') {
      if (pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
        pos_ += 2;
        return {Token::Kind::Arrow, "~>", col};
      }
      ++pos_;
      return {Token::Kind::Tilde, "~", col};
    }
    // '$'-names always lex as names; the parser rejects them when not loose,
    // which yields a ReservedAtom error instead of a generic syntax error.
    if (isNameChar(c) || c == '$') return lexName(col);
    ++pos_;
    return {Token::Kind::Bad, std::string(1, c), col};
  }

 private:
  Token lexName(int col) {
    std::string text;
    while (pos_ < line_.size() &&
           (isNameChar(line_[pos_]) || line_[pos_] == '$')) {
      text += line_[pos_++];
    }
    if (!text.empty() && text[0] == '$' && pos_ < line_.size() &&
        line_[pos_] == '(') {
      int depth = 0;
      do {
        char c = line_[pos_++];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        text += c;
      } while (pos_ < line_.size() && depth > 0);
      if (depth != 0) return {Token::Kind::Bad, text, col};
    }
    return {Token::Kind::Name, text, col};
  }

  std::string_view line_;
  bool loose_;
  size_t pos_ = 0;
};

ArrowKind arrowFromText(const std::string& text) {
  if (text == "->") return ArrowKind::Strict;
  if (text == "=>") return ArrowKind::Defeasible;
  return ArrowKind::Defeater;
}

const char* arrowText(ArrowKind k) {
  switch (k) {
    case ArrowKind::Strict: return "->";
    case ArrowKind::Defeasible: return "=>";
    case ArrowKind::Defeater: return "~>";
  }
  return "=>";
}

// Parses one non-empty statement line (comment stripped, trailing '.'
// verified by the caller's tokens).
class StatementParser {
 public:
  StatementParser(std::string_view line, int lineNo, bool loose,
                  std::vector<ParseError>& errors)
      : lineNo_(lineNo), loose_(loose), errors_(errors) {
    Lexer lex(line, loose);
    for (Token t = lex.next();; t = lex.next()) {
      tokens_.push_back(t);
      if (t.kind == Token::Kind::End) break;
    }
  }

  // Returns false if the statement had an error (already recorded).
  bool parseInto(Theory& theory) {
    if (peek().kind == Token::Kind::Name && lookaheadKind(1) == Token::Kind::Colon) {
      return parseRule(theory);
    }
    if (peek().kind == Token::Kind::Name && lookaheadKind(1) == Token::Kind::Gt) {
      return parseSuperiority(theory);
    }
    return parseFact(theory);
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  Token::Kind lookaheadKind(size_t ahead) const { return peek(ahead).kind; }
  const Token& take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  bool fail(const Token& at, const std::string& message,
            ParseError::Kind kind = ParseError::Kind::Syntax) {
    errors_.push_back({kind, {lineNo_, at.column}, message});
    return false;
  }

  bool checkName(const Token& t, const char* what) {
    if (t.kind != Token::Kind::Name) {
      return fail(t, std::string("expected ") + what);
    }
    if (!loose_ && t.text.find('$') != std::string::npos) {
      return fail(t, std::string(what) + " '" + t.text +
                         "' uses the reserved '$' prefix",
                  ParseError::Kind::ReservedAtom);
    }
    return true;
  }

  bool parseLiteral(Literal& out) {
    bool positive = true;
    if (peek().kind == Token::Kind::Tilde) {
      take();
      positive = false;
    }
    const Token& t = take();
    if (!checkName(t, "atom")) return false;
    out = Literal{t.text, positive};
    return true;
  }

  bool expectDotEnd() {
    const Token& t = take();
    if (t.kind != Token::Kind::Dot) return fail(t, "expected '.'");
    const Token& e = take();
    if (e.kind != Token::Kind::End) return fail(e, "trailing input after '.'");
    return true;
  }

  bool parseRule(Theory& theory) {
    const Token& label = take();
    if (!checkName(label, "rule label")) return false;
    take();  // ':'
    std::vector<Literal> body;
    ArrowKind arrow;
    if (peek().kind == Token::Kind::Arrow) {
      arrow = arrowFromText(take().text);
    } else {
      while (true) {
        Literal lit;
        if (!parseLiteral(lit)) return false;
        body.push_back(lit);
        const Token& sep = take();
        if (sep.kind == Token::Kind::Arrow) {
          arrow = arrowFromText(sep.text);
          break;
        }
        if (sep.kind != Token::Kind::Comma) {
          return fail(sep, "expected ',' or an arrow in rule body");
        }
      }
    }
    Literal head;
    if (!parseLiteral(head)) return false;
    if (!expectDotEnd()) return false;
    theory.rules.push_back(make_rule(label.text, std::move(body), arrow, head));
    return true;
  }

  bool parseSuperiority(Theory& theory) {
    const Token& winner = take();
    if (!checkName(winner, "rule label")) return false;
    take();  // '>'
    const Token& loser = take();
    if (!checkName(loser, "rule label")) return false;
    if (!expectDotEnd()) return false;
    theory.superiority.insert({winner.text, loser.text});
    return true;
  }

  bool parseFact(Theory& theory) {
    // Optional 'fact' keyword, recognized only when another literal follows.
    if (peek().kind == Token::Kind::Name && peek().text == "fact" &&
        (lookaheadKind(1) == Token::Kind::Name ||
         lookaheadKind(1) == Token::Kind::Tilde)) {
      take();
    }
    Literal lit;
    if (!parseLiteral(lit)) return false;
    if (!expectDotEnd()) return false;
    theory.facts.insert(lit);
    return true;
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  int lineNo_;
  bool loose_;
  std::vector<ParseError>& errors_;
};

ParseError::Kind errorKindFor(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::DuplicateLabel: return ParseError::Kind::DuplicateLabel;
    case Violation::Kind::DanglingSuperiority:
      return ParseError::Kind::DanglingSuperiority;
    case Violation::Kind::SuperiorityCycle:
      return ParseError::Kind::SuperiorityCycle;
  }
  return ParseError::Kind::Syntax;
}

}  // namespace

ParseResult parse_theory(std::string_view text, bool loose) {
  ParseResult result;
  std::map<std::string, int> labelLine;       // first definition line per label
  std::map<SuperiorityPair, int> pairLine;
  int lineNo = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    ++lineNo;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) {
      Theory piece;
      StatementParser parser(line, lineNo, loose, result.errors);
      if (parser.parseInto(piece)) {
        for (Rule& r : piece.rules) {
          if (auto [it, fresh] = labelLine.emplace(r.label, lineNo); !fresh) {
            result.errors.push_back(
                {ParseError::Kind::DuplicateLabel,
                 {lineNo, 1},
                 "duplicate rule label '" + r.label + "' (first defined on line " +
                     std::to_string(it->second) + ")"});
          } else {
            result.theory.rules.push_back(std::move(r));
          }
        }
        result.theory.facts.insert(piece.facts.begin(), piece.facts.end());
        for (const SuperiorityPair& p : piece.superiority) {
          pairLine.emplace(p, lineNo);
          result.theory.superiority.insert(p);
        }
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  // Whole-theory checks: dangling superiority and cycles, located at the
  // statement that introduced the pair. Duplicates were reported inline.
  ValidationResult vr = validate_theory(result.theory);
  for (const Violation& v : vr.violations) {
    if (v.kind == Violation::Kind::DuplicateLabel) continue;
    int line = 0;
    for (const auto& [pair, ln] : pairLine) {
      if (v.message.find(pair.first + " > " + pair.second) != std::string::npos ||
          v.kind == Violation::Kind::SuperiorityCycle) {
        line = ln;
        if (v.kind != Violation::Kind::SuperiorityCycle) break;
      }
    }
    result.errors.push_back({errorKindFor(v.kind), {line, 1}, v.message});
  }
  return result;
}

std::string print_literal(const Literal& q) {
  return q.positive ? q.atom : "~" + q.atom;
}

std::string print_theory(const Theory& d) {
  std::ostringstream out;
  for (const Literal& q : d.facts) out << print_literal(q) << ".\n";
  for (const Rule& r : d.rules) {
    out << r.label << ": ";
    for (size_t i = 0; i < r.body.size(); ++i) {
      if (i) out << ", ";
      out << print_literal(r.body[i]);
    }
    if (!r.body.empty()) out << ' ';
    out << arrowText(r.arrow) << ' ' << print_literal(r.head) << ".\n";
  }
  for (const auto& [winner, loser] : d.superiority) {
    out << winner << " > " << loser << ".\n";
  }
  return out.str();
}

}  // namespace dlwb

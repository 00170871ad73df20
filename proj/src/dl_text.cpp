#include "rte/dl_text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace rte::dl {

namespace {

// precedence: Or < And < unary
int precedence(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Or:
      return 0;
    case ConceptKind::And:
      return 1;
    default:
      return 2;
  }
}

void print_concept(std::ostream& os, const Concept& c, int min_prec) {
  const bool paren = precedence(c) < min_prec;
  if (paren) os << '(';
  switch (c.kind()) {
    case ConceptKind::Top:
      os << "top";
      break;
    case ConceptKind::Bottom:
      os << "bot";
      break;
    case ConceptKind::Atomic:
      os << c.name();
      break;
    case ConceptKind::Not:
      os << '!';
      print_concept(os, c.operand(), 2);
      break;
    case ConceptKind::And:
    case ConceptKind::Or: {
      const char* sep = c.kind() == ConceptKind::And ? " & " : " | ";
      const int inner = c.kind() == ConceptKind::And ? 2 : 1;
      bool first = true;
      for (const auto& m : c.members()) {
        if (!first) os << sep;
        first = false;
        print_concept(os, m, inner);
      }
      break;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      os << (c.kind() == ConceptKind::Exists ? 'E' : 'A') << ' '
         << to_text(c.role()) << '.';
      print_concept(os, c.filler(), 2);
      break;
  }
  if (paren) os << ')';
}

}  // namespace

std::string to_text(const Concept& c) {
  std::ostringstream os;
  print_concept(os, c, 0);
  return os.str();
}

std::string to_text(const Role& r) {
  return r.inverse ? r.name + "^-" : r.name;
}

std::string to_text(const Assertion& a) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&a))
    return ca->ind.name + " : " + to_text(ca->expr);
  const auto& ra = std::get<RoleAssertion>(a);
  return "(" + ra.src.name + "," + ra.tgt.name + ") : " + ra.role;
}

std::string to_text(const Gci& g) {
  return to_text(g.lhs) + " => " + to_text(g.rhs);
}

std::string to_text(const KnowledgeBase& kb) {
  std::ostringstream os;
  for (const auto& g : kb.tbox) os << to_text(g) << '\n';
  for (const auto& a : kb.abox) os << to_text(a) << '\n';
  return os.str();
}

namespace {

struct Token {
  enum Type { Name, Amp, Bar, Bang, LParen, RParen, Dot, Colon, Comma, Arrow, InvMark, End };
  Type type;
  std::string text;
  std::size_t pos;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (name_char(c)) {
      std::size_t j = i;
      while (j < s.size() && name_char(s[j])) ++j;
      // hyphen continues a name only when followed by a name char (so the
      // inverse marker `^-` stays distinct)
      while (j + 1 < s.size() && s[j] == '-' && name_char(s[j + 1])) {
        ++j;
        while (j < s.size() && name_char(s[j])) ++j;
      }
      out.push_back({Token::Name, std::string(s.substr(i, j - i)), start});
      i = j;
      continue;
    }
    switch (c) {
      case '&': out.push_back({Token::Amp, "&", start}); ++i; break;
      case '|': out.push_back({Token::Bar, "|", start}); ++i; break;
      case '!': out.push_back({Token::Bang, "!", start}); ++i; break;
      case '(': out.push_back({Token::LParen, "(", start}); ++i; break;
      case ')': out.push_back({Token::RParen, ")", start}); ++i; break;
      case '.': out.push_back({Token::Dot, ".", start}); ++i; break;
      case ':': out.push_back({Token::Colon, ":", start}); ++i; break;
      case ',': out.push_back({Token::Comma, ",", start}); ++i; break;
      case '=':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Token::Arrow, "=>", start});
          i += 2;
          break;
        }
        throw TextParseError(start, "expected '=>'");
      case '^':
        if (i + 1 < s.size() && s[i + 1] == '-') {
          out.push_back({Token::InvMark, "^-", start});
          i += 2;
          break;
        }
        throw TextParseError(start, "expected '^-'");
      default:
        throw TextParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : toks_(tokenize(s)) {}

  Concept concept_expr() { return disjunction(); }

  Role role() {
    Token t = expect(Token::Name, "role name");
    Role r{t.text, false};
    if (peek().type == Token::InvMark) {
      ++pos_;
      r.inverse = true;
    }
    return r;
  }

  Gci gci() {
    Concept lhs = concept_expr();
    expect(Token::Arrow, "'=>'");
    Concept rhs = concept_expr();
    return Gci{std::move(lhs), std::move(rhs)};
  }

  Assertion assertion() {
    if (peek().type == Token::LParen && peek(1).type == Token::Name &&
        peek(2).type == Token::Comma) {
      ++pos_;
      Token a = expect(Token::Name, "individual");
      expect(Token::Comma, "','");
      Token b = expect(Token::Name, "individual");
      expect(Token::RParen, "')'");
      expect(Token::Colon, "':'");
      Role r = role();
      return make_role_assertion(Individual{a.text}, Individual{b.text}, r);
    }
    Token a = expect(Token::Name, "individual");
    expect(Token::Colon, "':'");
    return ConceptAssertion{Individual{a.text}, concept_expr()};
  }

  void expect_end() {
    if (peek().type != Token::End)
      throw TextParseError(peek().pos, "trailing input");
  }

  bool looks_like_gci() const {
    for (const auto& t : toks_)
      if (t.type == Token::Arrow) return true;
    return false;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  Token expect(Token::Type type, const char* what) {
    if (peek().type != type)
      throw TextParseError(peek().pos, std::string("expected ") + what);
    return toks_[pos_++];
  }

  Concept disjunction() {
    std::vector<Concept> ms{conjunction()};
    while (peek().type == Token::Bar) {
      ++pos_;
      ms.push_back(conjunction());
    }
    return ms.size() == 1 ? ms.front() : Concept::disjunction(std::move(ms));
  }

  Concept conjunction() {
    std::vector<Concept> ms{unary()};
    while (peek().type == Token::Amp) {
      ++pos_;
      ms.push_back(unary());
    }
    return ms.size() == 1 ? ms.front() : Concept::conjunction(std::move(ms));
  }

  // `E` / `A` start a quantifier only when followed by `role.`
  bool quantifier_ahead() const {
    if (peek(1).type != Token::Name) return false;
    std::size_t i = 2;
    if (peek(i).type == Token::InvMark) ++i;
    return peek(i).type == Token::Dot;
  }

  Concept unary() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Bang:
        ++pos_;
        return Concept::negation(unary());
      case Token::LParen: {
        ++pos_;
        Concept c = disjunction();
        expect(Token::RParen, "')'");
        return c;
      }
      case Token::Name:
        if (t.text == "top") {
          ++pos_;
          return Concept::top();
        }
        if (t.text == "bot") {
          ++pos_;
          return Concept::bottom();
        }
        if ((t.text == "E" || t.text == "A") && quantifier_ahead()) {
          bool existential = t.text == "E";
          ++pos_;
          Role r = role();
          expect(Token::Dot, "'.'");
          Concept filler = unary();
          return existential ? Concept::exists(std::move(r), std::move(filler))
                             : Concept::forall(std::move(r), std::move(filler));
        }
        ++pos_;
        return Concept::atomic(t.text);
      default:
        throw TextParseError(t.pos, "expected concept");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Concept parse_concept(std::string_view text) {
  Parser p(text);
  Concept c = p.concept_expr();
  p.expect_end();
  return c;
}

Role parse_role(std::string_view text) {
  Parser p(text);
  Role r = p.role();
  p.expect_end();
  return r;
}

Assertion parse_assertion(std::string_view text) {
  Parser p(text);
  Assertion a = p.assertion();
  p.expect_end();
  return a;
}

Gci parse_gci(std::string_view text) {
  Parser p(text);
  Gci g = p.gci();
  p.expect_end();
  return g;
}

KnowledgeBase parse_kb(std::string_view text) {
  KnowledgeBase kb;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t eol = text.find('\n', line_start);
    std::string_view line = text.substr(
        line_start, eol == std::string_view::npos ? std::string_view::npos
                                                  : eol - line_start);
    std::string_view trimmed = line;
    while (!trimmed.empty() &&
           std::isspace(static_cast<unsigned char>(trimmed.front())))
      trimmed.remove_prefix(1);
    if (!trimmed.empty() && trimmed.front() != '#') {
      Parser p(trimmed);
      if (p.looks_like_gci()) {
        kb.tbox.insert(p.gci());
      } else {
        kb.abox.insert(p.assertion());
      }
      p.expect_end();
    }
    if (eol == std::string_view::npos) break;
    line_start = eol + 1;
  }
  return kb;
}

}  // namespace rte::dl

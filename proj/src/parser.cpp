// Copyright 2026 The rolebind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace rolebind {
namespace {

// Keywords are reserved and case-sensitive; an identifier is a run of
// non-reserved words (identifiers may contain internal spaces, e.g.
// "Carrier Invoicing").
const std::set<std::string>& reserved_words() {
  static const std::set<std::string> kReserved = {
      "nominates", "releases", "in",   "not",          "is",
      "and",       "or",       "Under", "endorsed-by", "case-creator"};
  return kReserved;
}

struct Token {
  enum class Kind { Word, Punct, End };
  Kind kind{Kind::End};
  std::string text;  // word text or single punct char
  int line{1};
  int column{1};
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { tokenize(); }
  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  void tokenize() {
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
      if (c == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    };
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(c);
        ++i;
        continue;
      }
      if (c == '{' || c == '}' || c == ';' || c == ',' || c == '(' ||
          c == ')') {
        tokens_.push_back({Token::Kind::Punct, std::string(1, c), line, col});
        advance(c);
        ++i;
        continue;
      }
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '-') {
        int startLine = line, startCol = col;
        std::string word;
        while (i < text_.size()) {
          char w = text_[i];
          if (std::isalnum(static_cast<unsigned char>(w)) || w == '_' ||
              w == '-') {
            word.push_back(w);
            advance(w);
            ++i;
          } else {
            break;
          }
        }
        // '-' only occurs inside hyphenated keywords.
        if (word.find('-') != std::string::npos && word != "endorsed-by" &&
            word != "case-creator")
          throw ParseError(startLine, startCol,
                           "unexpected token '" + word + "'");
        tokens_.push_back({Token::Kind::Word, word, startLine, startCol});
        continue;
      }
      throw ParseError(line, col,
                       std::string("unexpected character '") + c + "'");
    }
    tokens_.push_back({Token::Kind::End, "", line, col});
  }

  const std::string& text_;
  std::vector<Token> tokens_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) {}

  Policy parse() {
    if (peek().kind == Token::Kind::End)
      throw err("empty policy", {"'{'"});
    expect_punct('{');
    Policy policy;
    while (!at_punct('}')) {
      if (peek().kind == Token::Kind::End)
        throw err("unterminated policy, missing '}'", {"'}'", "statement"});
      parse_statement(policy);
    }
    expect_punct('}');
    if (peek().kind != Token::Kind::End)
      throw err("trailing input after closing '}'", {"end of input"});
    if (policy.caseCreators.empty())
      throw err("policy declares no case-creator role", {});
    return policy;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    const auto& toks = lexer_.tokens();
    return i < toks.size() ? toks[i] : toks.back();
  }
  const Token& consume() { return lexer_.tokens()[pos_++]; }

  bool at_punct(char c) const {
    return peek().kind == Token::Kind::Punct && peek().text[0] == c;
  }
  bool at_word(const std::string& w, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Word && peek(ahead).text == w;
  }

  void expect_punct(char c) {
    if (!at_punct(c))
      throw err(std::string("expected '") + c + "'",
                {std::string("'") + c + "'"});
    consume();
  }
  void expect_word(const std::string& w) {
    if (!at_word(w)) throw err("expected '" + w + "'", {"'" + w + "'"});
    consume();
  }

  ParseError err(const std::string& message,
                 std::vector<std::string> expected) const {
    return ParseError(peek().line, peek().column, message,
                      std::move(expected));
  }

  std::string identifier() {
    std::string name;
    while (peek().kind == Token::Kind::Word &&
           !reserved_words().count(peek().text)) {
      if (!name.empty()) name += ' ';
      name += consume().text;
    }
    if (name.empty()) throw err("expected role identifier", {"identifier"});
    return name;
  }

  SetExpr parse_set_primary() {
    if (at_punct('(')) {
      consume();
      SetExpr inner = parse_set_expr();
      expect_punct(')');
      return inner;
    }
    return SetExpr::role(identifier());
  }

  SetExpr parse_set_expr() {
    SetExpr left = parse_set_primary();
    if (at_word("and") || at_word("or")) {
      SetOp op = consume().text == "and" ? SetOp::And : SetOp::Or;
      return SetExpr::combine(op, std::move(left), parse_set_expr());
    }
    return left;
  }

  void parse_statement(Policy& policy) {
    std::optional<std::string> scope;
    if (at_word("Under")) {
      consume();
      scope = identifier();
      expect_punct(',');
    }

    // "case-creator <role>;" form of the creator declaration.
    if (at_word("case-creator")) {
      consume();
      std::string role = identifier();
      if (scope) throw err("case-creator roles cannot be scoped", {});
      expect_punct(';');
      policy.caseCreators.push_back(std::move(role));
      return;
    }

    std::string first = identifier();
    if (at_word("is")) {
      consume();
      expect_word("case-creator");
      if (scope) throw err("case-creator roles cannot be scoped", {});
      expect_punct(';');
      policy.caseCreators.push_back(std::move(first));
      return;
    }

    BindingStatement stmt;
    stmt.scope = std::move(scope);
    stmt.nominator = std::move(first);
    if (at_word("nominates")) {
      consume();
      stmt.kind = StatementKind::Nominates;
    } else if (at_word("releases")) {
      consume();
      stmt.kind = StatementKind::Releases;
    } else {
      throw err("expected 'nominates' or 'releases'",
                {"'nominates'", "'releases'", "'is'"});
    }
    stmt.nominee = identifier();

    if (at_word("in")) {
      consume();
      stmt.binding = BindingConstraint{Polarity::In, parse_set_expr()};
    } else if (at_word("not")) {
      consume();
      expect_word("in");
      stmt.binding = BindingConstraint{Polarity::NotIn, parse_set_expr()};
    }

    // endorsed-by clauses, comma separated; a comma before the first clause
    // is tolerated (it appears in policy texts in the wild).
    while (true) {
      if (at_punct(',') && at_word("endorsed-by", 1)) consume();
      if (!at_word("endorsed-by")) break;
      consume();
      SetExpr clause = parse_set_expr();
      if (stmt.endorsement)
        stmt.endorsement = SetExpr::combine(SetOp::And, *stmt.endorsement,
                                            std::move(clause));
      else
        stmt.endorsement = std::move(clause);
    }

    if (!at_punct(';'))
      throw err("unterminated statement, expected ';'", {"';'"});
    consume();
    policy.statements.push_back(std::move(stmt));
  }

  Lexer lexer_;
  std::size_t pos_{0};
};

}  // namespace

Policy parse_policy(const std::string& text) { return Parser(text).parse(); }

std::string render_set_expr(const SetExpr& expr) {
  if (expr.is_role()) return expr.role_name();
  const SetExpr& l = expr.lhs();
  std::string left = l.is_role() ? l.role_name() : "(" + render_set_expr(l) + ")";
  const char* op = expr.op() == SetOp::And ? " and " : " or ";
  return left + op + render_set_expr(expr.rhs());
}

std::string render_policy(const Policy& policy) {
  std::ostringstream out;
  out << "{\n";
  for (const auto& creator : policy.caseCreators)
    out << "  " << creator << " is case-creator;\n";
  for (const auto& stmt : policy.statements) {
    out << "  ";
    if (stmt.scope) out << "Under " << *stmt.scope << ", ";
    out << stmt.nominator
        << (stmt.kind == StatementKind::Nominates ? " nominates " : " releases ")
        << stmt.nominee;
    if (stmt.binding) {
      out << (stmt.binding->polarity == Polarity::In ? " in " : " not in ")
          << render_set_expr(stmt.binding->expr);
    }
    if (stmt.endorsement)
      out << " endorsed-by " << render_set_expr(*stmt.endorsement);
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rolebind

// Surface syntax: tokens and statement trees produced by the parser.

#ifndef LDLOG_SYNTAX_H_
#define LDLOG_SYNTAX_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ldlog/term.h"

namespace ldlog {

enum class TokenKind {
  kIdent,
  kInt,
  kString,
  kLParen,
  kRParen,
  kComma,
  kDot,
  kQuestion,
  kColon,
  kColonDash,   // :-
  kColonEqual,  // :=
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kUse,
  kStruct,
  kDef,
  kEnd,
};

const char* token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind;
  // Identifier name or decoded string literal.
  std::string text;
  std::int64_t int_value = 0;
  int line = 1;
  int column = 1;
  // Whitespace or a comment separates this token from the previous one.
  bool spaced = false;

  bool operator==(const Token& o) const {
    return kind == o.kind && text == o.text && int_value == o.int_value;
  }
};

struct TermAst {
  enum class Kind { kInt, kStr, kIdent, kApp, kProj, kCmp };

  Kind kind = Kind::kInt;
  std::int64_t int_value = 0;
  // String literal value, identifier, application head or projected field.
  std::string text;
  CmpOp op = CmpOp::kEq;
  // Application arguments; projection base in args[0]; comparison operands
  // in args[0] and args[1].
  std::vector<TermAst> args;

  static TermAst integer(std::int64_t v);
  static TermAst string(std::string v);
  static TermAst ident(std::string name);
  static TermAst app(std::string head, std::vector<TermAst> args);
  static TermAst proj(TermAst base, std::string field);
  static TermAst cmp(CmpOp op, TermAst lhs, TermAst rhs);

  bool operator==(const TermAst&) const = default;
};

struct AtomAst {
  enum class Kind { kApplication, kParenTerm };

  Kind kind = Kind::kApplication;
  std::string name;
  std::vector<TermAst> args;
  // kParenTerm payload, stored in args[0].
  static AtomAst application(std::string name, std::vector<TermAst> args);
  static AtomAst paren(TermAst term);
  const TermAst& term() const { return args.front(); }

  bool operator==(const AtomAst&) const = default;
};

struct FactStmt {
  std::optional<std::string> label;
  AtomAst atom;
  bool operator==(const FactStmt&) const = default;
};

struct RuleStmt {
  std::optional<std::string> label;
  AtomAst head;
  std::vector<AtomAst> body;
  bool operator==(const RuleStmt&) const = default;
};

struct QueryStmt {
  std::optional<std::string> label;
  AtomAst atom;
  bool operator==(const QueryStmt&) const = default;
};

struct UseStmt {
  std::vector<std::string> names;
  bool operator==(const UseStmt&) const = default;
};

struct StructStmt {
  std::string name;
  std::vector<std::string> fields;
  bool operator==(const StructStmt&) const = default;
};

struct DefStmt {
  std::string name;
  TermAst value;
  bool operator==(const DefStmt&) const = default;
};

struct StatementAst {
  using Node =
      std::variant<FactStmt, RuleStmt, QueryStmt, UseStmt, StructStmt, DefStmt>;

  Node node;
  // Source line of the first token; not part of structural equality.
  int line = 0;

  bool operator==(const StatementAst& o) const { return node == o.node; }
};

using Program = std::vector<StatementAst>;

bool is_placeholder_name(std::string_view name);

}  // namespace ldlog

#endif  // LDLOG_SYNTAX_H_

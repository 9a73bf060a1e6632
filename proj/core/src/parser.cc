#include "ldlog/parser.h"

#include <charconv>
#include <sstream>

#include "ldlog/errors.h"

namespace ldlog {

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kInt: return "integer";
    case TokenKind::kString: return "string";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kComma: return "','";
    case TokenKind::kDot: return "'.'";
    case TokenKind::kQuestion: return "'?'";
    case TokenKind::kColon: return "':'";
    case TokenKind::kColonDash: return "':-'";
    case TokenKind::kColonEqual: return "':='";
    case TokenKind::kLt: return "'<'";
    case TokenKind::kLe: return "'<='";
    case TokenKind::kGt: return "'>'";
    case TokenKind::kGe: return "'>='";
    case TokenKind::kEq: return "'='";
    case TokenKind::kNe: return "'!='";
    case TokenKind::kUse: return "'use'";
    case TokenKind::kStruct: return "'struct'";
    case TokenKind::kDef: return "'def'";
    case TokenKind::kEnd: return "end of input";
  }
  return "token";
}

bool is_placeholder_name(std::string_view name) {
  return name.size() > 1 && name.back() == '?';
}

TermAst TermAst::integer(std::int64_t v) {
  TermAst t;
  t.kind = Kind::kInt;
  t.int_value = v;
  return t;
}

TermAst TermAst::string(std::string v) {
  TermAst t;
  t.kind = Kind::kStr;
  t.text = std::move(v);
  return t;
}

TermAst TermAst::ident(std::string name) {
  TermAst t;
  t.kind = Kind::kIdent;
  t.text = std::move(name);
  return t;
}

TermAst TermAst::app(std::string head, std::vector<TermAst> args) {
  TermAst t;
  t.kind = Kind::kApp;
  t.text = std::move(head);
  t.args = std::move(args);
  return t;
}

TermAst TermAst::proj(TermAst base, std::string field) {
  TermAst t;
  t.kind = Kind::kProj;
  t.text = std::move(field);
  t.args.push_back(std::move(base));
  return t;
}

TermAst TermAst::cmp(CmpOp op, TermAst lhs, TermAst rhs) {
  TermAst t;
  t.kind = Kind::kCmp;
  t.op = op;
  t.args.push_back(std::move(lhs));
  t.args.push_back(std::move(rhs));
  return t;
}

AtomAst AtomAst::application(std::string name, std::vector<TermAst> args) {
  AtomAst a;
  a.kind = Kind::kApplication;
  a.name = std::move(name);
  a.args = std::move(args);
  return a;
}

AtomAst AtomAst::paren(TermAst term) {
  AtomAst a;
  a.kind = Kind::kParenTerm;
  a.args.push_back(std::move(term));
  return a;
}

namespace {

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of the UTF-8 sequence starting at s[i], or 0 if malformed.
std::size_t utf8_sequence_length(std::string_view s, std::size_t i) {
  auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char c = byte(i);
  std::size_t len;
  std::uint32_t cp;
  if (c < 0x80) return 1;
  if ((c & 0xE0) == 0xC0) {
    len = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    len = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    len = 4;
    cp = c & 0x07;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    if ((byte(i + k) & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (byte(i + k) & 0x3F);
  }
  // Overlong forms, surrogates and out of range code points.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    return 0;
  }
  return len;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    bool spaced = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
        spaced = true;
        continue;
      }
      if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        spaced = true;
        continue;
      }
      Token tok = next_token();
      tok.spaced = spaced;
      spaced = false;
      out.push_back(std::move(tok));
    }
    return out;
  }

 private:
  char peek(std::size_t k) const {
    return pos_ + k < src_.size() ? src_[pos_ + k] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  Token make(TokenKind kind, int line, int column) {
    Token t;
    t.kind = kind;
    t.line = line;
    t.column = column;
    return t;
  }

  Token punct(TokenKind kind, std::size_t width) {
    Token t = make(kind, line_, column_);
    for (std::size_t i = 0; i < width; ++i) advance();
    return t;
  }

  Token next_token() {
    char c = src_[pos_];
    if (is_ident_start(c)) return identifier();
    if (is_digit(c) || (c == '-' && is_digit(peek(1)))) return integer();
    if (c == '"') return string_literal();
    switch (c) {
      case '(': return punct(TokenKind::kLParen, 1);
      case ')': return punct(TokenKind::kRParen, 1);
      case ',': return punct(TokenKind::kComma, 1);
      case '.': return punct(TokenKind::kDot, 1);
      case '?': return punct(TokenKind::kQuestion, 1);
      case '=': return punct(TokenKind::kEq, 1);
      case ':':
        if (peek(1) == '-') return punct(TokenKind::kColonDash, 2);
        if (peek(1) == '=') return punct(TokenKind::kColonEqual, 2);
        return punct(TokenKind::kColon, 1);
      case '<':
        if (peek(1) == '=') return punct(TokenKind::kLe, 2);
        return punct(TokenKind::kLt, 1);
      case '>':
        if (peek(1) == '=') return punct(TokenKind::kGe, 2);
        return punct(TokenKind::kGt, 1);
      case '!':
        if (peek(1) == '=') return punct(TokenKind::kNe, 2);
        break;
      default:
        break;
    }
    std::ostringstream msg;
    unsigned char u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7F) {
      msg << "illegal character '" << c << "'";
    } else {
      msg << "illegal byte 0x" << std::hex << static_cast<int>(u);
    }
    throw LexError(line_, column_, msg.str());
  }

  Token identifier() {
    Token t = make(TokenKind::kIdent, line_, column_);
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
    if (pos_ < src_.size() && src_[pos_] == '?') advance();
    t.text = std::string(src_.substr(start, pos_ - start));
    if (t.text == "use") t.kind = TokenKind::kUse;
    if (t.text == "struct") t.kind = TokenKind::kStruct;
    if (t.text == "def") t.kind = TokenKind::kDef;
    return t;
  }

  Token integer() {
    Token t = make(TokenKind::kInt, line_, column_);
    std::size_t start = pos_;
    if (src_[pos_] == '-') advance();
    while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
    std::string_view digits = src_.substr(start, pos_ - start);
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), t.int_value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw LexError(t.line, t.column,
                     "integer literal out of range: " + std::string(digits));
    }
    if (pos_ < src_.size() && is_ident_start(src_[pos_])) {
      throw LexError(line_, column_, "identifier directly after integer literal");
    }
    return t;
  }

  Token string_literal() {
    Token t = make(TokenKind::kString, line_, column_);
    advance();  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        throw LexError(t.line, t.column, "unterminated string literal");
      }
      char c = src_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        char e = peek(1);
        char decoded;
        switch (e) {
          case '"': decoded = '"'; break;
          case '\\': decoded = '\\'; break;
          case 'n': decoded = '\n'; break;
          case 't': decoded = '\t'; break;
          case 'r': decoded = '\r'; break;
          default:
            throw LexError(line_, column_, "unknown escape sequence");
        }
        advance();
        advance();
        value += decoded;
        continue;
      }
      std::size_t len = utf8_sequence_length(src_, pos_);
      if (len == 0) throw LexError(line_, column_, "invalid UTF-8 in string");
      if (len == 1 && static_cast<unsigned char>(c) < 0x20 && c != '\t') {
        throw LexError(line_, column_, "control character in string");
      }
      value.append(src_.substr(pos_, len));
      for (std::size_t i = 0; i < len; ++i) advance();
    }
    t.text = std::move(value);
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

constexpr int kMaxNesting = 200;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {
    Token end;
    end.kind = TokenKind::kEnd;
    if (!toks_.empty()) {
      end.line = toks_.back().line;
      end.column = toks_.back().column + 1;
    }
    toks_.push_back(end);
  }

  Program program() {
    Program out;
    while (!at(TokenKind::kEnd)) out.push_back(statement());
    return out;
  }

  TermAst single_term() {
    TermAst t = term();
    expect({TokenKind::kEnd});
    return t;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& ahead(std::size_t k) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(TokenKind k) const { return cur().kind == k; }

  [[noreturn]] void fail(std::vector<TokenKind> expected) const {
    std::vector<std::string> names;
    for (TokenKind k : expected) names.push_back(token_kind_name(k));
    std::string found = token_kind_name(cur().kind);
    if (cur().kind == TokenKind::kIdent || cur().kind == TokenKind::kString) {
      found += " `" + cur().text + "`";
    }
    throw ParseError(cur().line, cur().column, std::move(names), found);
  }

  Token expect(std::vector<TokenKind> kinds) {
    for (TokenKind k : kinds) {
      if (at(k)) return toks_[pos_++];
    }
    fail(std::move(kinds));
  }

  std::string ident() { return expect({TokenKind::kIdent}).text; }

  StatementAst statement() {
    StatementAst s;
    s.line = cur().line;
    switch (cur().kind) {
      case TokenKind::kUse:
        s.node = use_statement();
        return s;
      case TokenKind::kStruct:
        s.node = struct_statement();
        return s;
      case TokenKind::kDef:
        s.node = def_statement();
        return s;
      default:
        break;
    }
    std::optional<std::string> label;
    if (at(TokenKind::kIdent) && ahead(1).kind == TokenKind::kColon) {
      label = ident();
      ++pos_;
    }
    AtomAst head = atom();
    Token end = expect(
        {TokenKind::kDot, TokenKind::kQuestion, TokenKind::kColonDash});
    if (end.kind == TokenKind::kDot) {
      s.node = FactStmt{std::move(label), std::move(head)};
    } else if (end.kind == TokenKind::kQuestion) {
      s.node = QueryStmt{std::move(label), std::move(head)};
    } else {
      std::vector<AtomAst> body;
      body.push_back(atom());
      while (at(TokenKind::kComma)) {
        ++pos_;
        body.push_back(atom());
      }
      expect({TokenKind::kComma, TokenKind::kDot});
      s.node = RuleStmt{std::move(label), std::move(head), std::move(body)};
    }
    return s;
  }

  UseStmt use_statement() {
    expect({TokenKind::kUse});
    UseStmt u;
    u.names.push_back(ident());
    while (at(TokenKind::kComma)) {
      ++pos_;
      u.names.push_back(ident());
    }
    expect({TokenKind::kComma, TokenKind::kDot});
    return u;
  }

  StructStmt struct_statement() {
    expect({TokenKind::kStruct});
    StructStmt s;
    s.name = ident();
    expect({TokenKind::kLParen});
    s.fields.push_back(ident());
    while (at(TokenKind::kComma)) {
      ++pos_;
      s.fields.push_back(ident());
    }
    expect({TokenKind::kComma, TokenKind::kRParen});
    expect({TokenKind::kDot});
    return s;
  }

  DefStmt def_statement() {
    expect({TokenKind::kDef});
    DefStmt d;
    d.name = ident();
    expect({TokenKind::kColonEqual});
    d.value = term();
    expect({TokenKind::kDot});
    return d;
  }

  AtomAst atom() {
    if (at(TokenKind::kLParen)) {
      ++pos_;
      TermAst t = term();
      expect({TokenKind::kRParen});
      return AtomAst::paren(std::move(t));
    }
    if (!at(TokenKind::kIdent)) fail({TokenKind::kIdent, TokenKind::kLParen});
    std::string name = ident();
    return AtomAst::application(std::move(name), arg_list());
  }

  std::vector<TermAst> arg_list() {
    expect({TokenKind::kLParen});
    std::vector<TermAst> args;
    if (at(TokenKind::kRParen)) {
      ++pos_;
      return args;
    }
    args.push_back(term());
    while (at(TokenKind::kComma)) {
      ++pos_;
      args.push_back(term());
    }
    expect({TokenKind::kComma, TokenKind::kRParen});
    return args;
  }

  static std::optional<CmpOp> comparison(TokenKind k) {
    switch (k) {
      case TokenKind::kLt: return CmpOp::kLt;
      case TokenKind::kLe: return CmpOp::kLe;
      case TokenKind::kGt: return CmpOp::kGt;
      case TokenKind::kGe: return CmpOp::kGe;
      case TokenKind::kEq: return CmpOp::kEq;
      case TokenKind::kNe: return CmpOp::kNe;
      default: return std::nullopt;
    }
  }

  TermAst term() {
    if (++depth_ > kMaxNesting) {
      throw ParseError(cur().line, cur().column, {"shallower nesting"},
                       "nesting deeper than " + std::to_string(kMaxNesting));
    }
    TermAst lhs = operand();
    if (auto op = comparison(cur().kind)) {
      ++pos_;
      lhs = TermAst::cmp(*op, std::move(lhs), operand());
    }
    --depth_;
    return lhs;
  }

  TermAst operand() {
    TermAst t = primary();
    // Projection is written without surrounding whitespace so that `a.` at
    // the end of a def is a terminator rather than a dangling projection.
    while (at(TokenKind::kDot) && !cur().spaced &&
           ahead(1).kind == TokenKind::kIdent && !ahead(1).spaced) {
      ++pos_;
      t = TermAst::proj(std::move(t), ident());
    }
    return t;
  }

  TermAst primary() {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::kInt:
        ++pos_;
        return TermAst::integer(t.int_value);
      case TokenKind::kString:
        ++pos_;
        return TermAst::string(t.text);
      case TokenKind::kIdent: {
        std::string name = ident();
        if (at(TokenKind::kLParen)) return TermAst::app(std::move(name), arg_list());
        return TermAst::ident(std::move(name));
      }
      default:
        fail({TokenKind::kIdent, TokenKind::kInt, TokenKind::kString});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

Program parse_program(std::string_view source) {
  return Parser(tokenize(source)).program();
}

TermAst parse_term(std::string_view source) {
  return Parser(tokenize(source)).single_term();
}

std::string render_term(const TermAst& t) {
  switch (t.kind) {
    case TermAst::Kind::kInt:
      return std::to_string(t.int_value);
    case TermAst::Kind::kStr:
      return quote_string(t.text);
    case TermAst::Kind::kIdent:
      return t.text;
    case TermAst::Kind::kApp: {
      std::string out = t.text + "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i > 0) out += ", ";
        out += render_term(t.args[i]);
      }
      return out + ")";
    }
    case TermAst::Kind::kProj:
      return render_term(t.args[0]) + "." + t.text;
    case TermAst::Kind::kCmp:
      return render_term(t.args[0]) + " " + cmp_op_text(t.op) + " " +
             render_term(t.args[1]);
  }
  return {};
}

std::string render_atom(const AtomAst& a) {
  if (a.kind == AtomAst::Kind::kParenTerm) return "(" + render_term(a.term()) + ")";
  std::string out = a.name + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += render_term(a.args[i]);
  }
  return out + ")";
}

namespace {

std::string labelled(const std::optional<std::string>& label) {
  return label ? *label + ": " : std::string();
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += names[i];
  }
  return out;
}

}  // namespace

std::string render_statement(const StatementAst& s) {
  return std::visit(
      [](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, FactStmt>) {
          return labelled(n.label) + render_atom(n.atom) + ".";
        } else if constexpr (std::is_same_v<N, RuleStmt>) {
          std::string out = labelled(n.label) + render_atom(n.head) + " :- ";
          for (std::size_t i = 0; i < n.body.size(); ++i) {
            if (i > 0) out += ", ";
            out += render_atom(n.body[i]);
          }
          return out + ".";
        } else if constexpr (std::is_same_v<N, QueryStmt>) {
          return labelled(n.label) + render_atom(n.atom) + "?";
        } else if constexpr (std::is_same_v<N, UseStmt>) {
          return "use " + joined(n.names) + ".";
        } else if constexpr (std::is_same_v<N, StructStmt>) {
          return "struct " + n.name + "(" + joined(n.fields) + ").";
        } else {
          return "def " + n.name + " := " + render_term(n.value) + ".";
        }
      },
      s.node);
}

std::string render_program(const Program& p) {
  std::string out;
  for (const StatementAst& s : p) {
    out += render_statement(s);
    out += '\n';
  }
  return out;
}

}  // namespace ldlog

#include <gtest/gtest.h>

#include <chrono>

#include "corpus.h"
#include "generators.h"
#include "ldlog/errors.h"
#include "ldlog/parser.h"

namespace ldlog {
namespace {

std::vector<TokenKind> kinds(const std::vector<Token>& toks) {
  std::vector<TokenKind> out;
  for (const Token& t : toks) out.push_back(t.kind);
  return out;
}

TEST(LexerTest, QueryTokens) {
  std::vector<Token> toks = tokenize("path(\"a\", m?)?");
  using K = TokenKind;
  EXPECT_EQ(kinds(toks), (std::vector<K>{K::kIdent, K::kLParen, K::kString, K::kComma,
                                         K::kIdent, K::kRParen, K::kQuestion}));
  EXPECT_EQ(toks[0].text, "path");
  EXPECT_EQ(toks[2].text, "a");
  EXPECT_EQ(toks[4].text, "m?");
}

TEST(LexerTest, EmptyAndCommentOnlyInput) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize("// nothing here\n   \n").empty());
}

TEST(LexerTest, OperatorsAndKeywords) {
  using K = TokenKind;
  EXPECT_EQ(kinds(tokenize(":- := : < <= > >= = != use struct def")),
            (std::vector<K>{K::kColonDash, K::kColonEqual, K::kColon, K::kLt, K::kLe,
                            K::kGt, K::kGe, K::kEq, K::kNe, K::kUse, K::kStruct,
                            K::kDef}));
}

TEST(LexerTest, NegativeIntegersAndPositions) {
  std::vector<Token> toks = tokenize("p(-5,\n  9223372036854775807)");
  EXPECT_EQ(toks[2].int_value, -5);
  EXPECT_EQ(toks[4].int_value, 9223372036854775807LL);
  EXPECT_EQ(toks[4].line, 2);
  EXPECT_EQ(toks[4].column, 3);
}

TEST(LexerTest, StringEscapesAndUtf8) {
  std::vector<Token> toks = tokenize("\"a\\\"b\\\\c\\nd\\te \xc3\xa9\"");
  ASSERT_EQ(toks.size(), 1u);
  EXPECT_EQ(toks[0].text, "a\"b\\c\nd\te \xc3\xa9");
}

TEST(LexerTest, Errors) {
  EXPECT_THROW(tokenize("\"unterminated"), LexError);
  EXPECT_THROW(tokenize("\"line\nbreak\""), LexError);
  EXPECT_THROW(tokenize("\"bad \\q escape\""), LexError);
  EXPECT_THROW(tokenize("\"\xff\""), LexError);
  EXPECT_THROW(tokenize("p(99999999999999999999)"), LexError);
  EXPECT_THROW(tokenize("p(a) # q"), LexError);
  EXPECT_THROW(tokenize("a ! b"), LexError);
  try {
    tokenize("ok.\n  $");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(ParserTest, LabelledQuery) {
  Program p = parse_program("q1: path(\"b\", m?)?");
  ASSERT_EQ(p.size(), 1u);
  const auto& q = std::get<QueryStmt>(p[0].node);
  EXPECT_EQ(q.label, "q1");
  EXPECT_EQ(q.atom, AtomAst::application("path", {TermAst::string("b"), TermAst::ident("m?")}));
}

TEST(ParserTest, RuleBodyKeepsOrder) {
  Program p = parse_program("r2: path(x, y) :- path(x, z), edge(z, y).");
  const auto& r = std::get<RuleStmt>(p[0].node);
  EXPECT_EQ(r.label, "r2");
  ASSERT_EQ(r.body.size(), 2u);
  EXPECT_EQ(r.body[0].name, "path");
  EXPECT_EQ(r.body[1].name, "edge");
}

TEST(ParserTest, UnlabelledFactAndComparisonAtoms) {
  Program p = parse_program("edge(\"a\", \"b\").\nok(x) :- p(x), (x >= 3).");
  EXPECT_FALSE(std::get<FactStmt>(p[0].node).label.has_value());
  const auto& r = std::get<RuleStmt>(p[1].node);
  EXPECT_EQ(r.body[1],
            AtomAst::paren(TermAst::cmp(CmpOp::kGe, TermAst::ident("x"), TermAst::integer(3))));
}

TEST(ParserTest, DeclarationsAndProjection) {
  Program p = parse_program(
      "struct Rect(x1, y1, x2, y2).\n"
      "def rect1 := Rect(50, 50, 400, 100).\n"
      "use a, b.\n"
      "q: (rect1.x2 > 5)?");
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(std::get<StructStmt>(p[0].node).fields.size(), 4u);
  EXPECT_EQ(std::get<DefStmt>(p[1].node).value.kind, TermAst::Kind::kApp);
  EXPECT_EQ(std::get<UseStmt>(p[2].node).names, (std::vector<std::string>{"a", "b"}));
  const TermAst& cmp = std::get<QueryStmt>(p[3].node).atom.term();
  EXPECT_EQ(cmp.args[0], TermAst::proj(TermAst::ident("rect1"), "x2"));
}

TEST(ParserTest, DefTerminatorIsNotProjection) {
  Program p = parse_program("def sin := sin().\ndef s := sin.\nq: p(s)?");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(std::get<DefStmt>(p[1].node).value, TermAst::ident("sin"));
}

TEST(ParserTest, ErrorsCarryExpectedTokens) {
  try {
    parse_program("path(\"a\" \"b\").");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 10);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse_program("p(a)"), ParseError);
  EXPECT_THROW(parse_program("p(a) :- ."), ParseError);
  EXPECT_THROW(parse_program("(a < b < c)."), ParseError);
  EXPECT_THROW(parse_program("struct S()."), ParseError);
  EXPECT_THROW(parse_program("def := a."), ParseError);
}

TEST(ParserTest, NestingLimit) {
  std::string deep = "q: p(";
  for (int i = 0; i < 1000; ++i) deep += "f(";
  deep += "a" + std::string(1000, ')') + ")?";
  EXPECT_THROW(parse_program(deep), ParseError);
}

TEST(ParserTest, ParseTermRejectsTrailingInput) {
  EXPECT_EQ(parse_term("f(a, \"b\")"),
            TermAst::app("f", {TermAst::ident("a"), TermAst::string("b")}));
  EXPECT_THROW(parse_term("f(a) g"), ParseError);
}

TEST(ParserTest, RenderIsCanonical) {
  Program p = parse_program("r2:path(x,y):-path(x,z),edge(z,y).  q:(x!=-3)?");
  EXPECT_EQ(render_program(p), "r2: path(x, y) :- path(x, z), edge(z, y).\nq: (x != -3)?\n");
}

TEST(ParserTest, CorpusRoundTrips) {
  for (const std::string& name : testing::corpus_files()) {
    Program once = parse_program(testing::read_corpus(name));
    Program twice = parse_program(render_program(once));
    EXPECT_EQ(once, twice) << name;
  }
}

TEST(ParserTest, RandomProgramsRoundTrip) {
  testing::Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    Program p = testing::random_program_ast(rng);
    std::string text = render_program(p);
    Program parsed = parse_program(text);
    ASSERT_EQ(parsed, p) << text;
    ASSERT_EQ(parse_program(render_program(parsed)), parsed) << text;
  }
}

TEST(ParserTest, ShortFuzzNeverCrashes) {
  testing::Rng rng(99);
  auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(500);
  int runs = 0;
  while (std::chrono::steady_clock::now() < deadline) {
    std::string input = testing::random_fuzz_input(rng);
    try {
      Program p = parse_program(input);
      EXPECT_EQ(parse_program(render_program(p)), p) << input;
    } catch (const LexError&) {
    } catch (const ParseError&) {
    }
    ++runs;
  }
  EXPECT_GT(runs, 100);
}

}  // namespace
}  // namespace ldlog

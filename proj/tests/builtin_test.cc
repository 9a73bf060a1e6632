#include <gtest/gtest.h>

#include "ldlog/builtin.h"
#include "ldlog/errors.h"

namespace ldlog {
namespace {

BuiltinAtom cmp(CmpOp op, Term l, Term r) { return {op, std::move(l), std::move(r)}; }

TEST(BuiltinTest, IntegerComparisons) {
  Term i300 = Term::integer(300), i50 = Term::integer(50);
  EXPECT_TRUE(eval_builtin(cmp(CmpOp::kGe, i300, i50)));
  EXPECT_FALSE(eval_builtin(cmp(CmpOp::kLt, i300, i50)));
  EXPECT_TRUE(eval_builtin(cmp(CmpOp::kLe, i50, i50)));
  EXPECT_FALSE(eval_builtin(cmp(CmpOp::kGt, i50, i50)));
  EXPECT_TRUE(eval_builtin(cmp(CmpOp::kNe, i300, i50)));
  EXPECT_TRUE(eval_builtin(cmp(CmpOp::kEq, i50, Term::integer(50))));
  // From the rectangles program: rect3 starts right of rect2.
  EXPECT_FALSE(eval_builtin(cmp(CmpOp::kLe, Term::integer(150), Term::integer(125))));
}

TEST(BuiltinTest, StringEquality) {
  EXPECT_TRUE(eval_builtin(cmp(CmpOp::kEq, Term::string("a"), Term::string("a"))));
  EXPECT_TRUE(eval_builtin(cmp(CmpOp::kNe, Term::string("a"), Term::string("b"))));
  EXPECT_THROW(eval_builtin(cmp(CmpOp::kLt, Term::string("a"), Term::string("b"))),
               SolveError);
}

TEST(BuiltinTest, MixedTypesAreErrors) {
  try {
    eval_builtin(cmp(CmpOp::kEq, Term::integer(1), Term::string("1")));
    FAIL();
  } catch (const SolveError& e) {
    EXPECT_EQ(e.kind(), SolveError::Kind::kTypeMismatch);
  }
  EXPECT_THROW(eval_builtin(cmp(CmpOp::kLt, Term::app("a"), Term::integer(1))), SolveError);
}

TEST(BuiltinTest, OpenOperands) {
  try {
    eval_builtin(cmp(CmpOp::kLt, Term::var("x"), Term::integer(1)));
    FAIL();
  } catch (const SolveError& e) {
    EXPECT_EQ(e.kind(), SolveError::Kind::kNonGroundBuiltin);
  }
  Substitution s({{VarKey::of_var("x"), Term::integer(0)}});
  EXPECT_TRUE(eval_builtin(cmp(CmpOp::kLt, Term::var("x"), Term::integer(1)), s));
}

}  // namespace
}  // namespace ldlog

#include <gtest/gtest.h>

#include "generators.h"
#include "ldlog/errors.h"
#include "ldlog/unify.h"
#include "oracles.h"

namespace ldlog {
namespace {

Term a() { return Term::app("a"); }
Term b() { return Term::app("b"); }
Term x() { return Term::var("x"); }
Term y() { return Term::var("y"); }
Term f(Term l, Term r) { return Term::app("f", {std::move(l), std::move(r)}); }
Term g(Term t) { return Term::app("g", {std::move(t)}); }

const std::vector<std::string> kVars = {"x", "y", "z"};

TEST(UnifyTest, Examples) {
  auto s = unify(f(x(), b()), f(a(), y()));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s->lookup(VarKey::of_var("x")), a());
  EXPECT_EQ(*s->lookup(VarKey::of_var("y")), b());
  EXPECT_FALSE(unify(f(a(), x()), f(b(), x())));
  EXPECT_FALSE(unify(Term::integer(1), Term::string("1")));
  EXPECT_FALSE(unify(Term::app("f", {a()}), f(a(), a())));
  EXPECT_TRUE(unify(Term::integer(3), Term::integer(3))->empty());
}

TEST(UnifyTest, OccursCheck) {
  EXPECT_FALSE(unify(x(), g(x())));
  EXPECT_FALSE(unify(g(x()), x()));
  EXPECT_FALSE(unify(f(x(), y()), f(y(), g(x()))));
  EXPECT_FALSE(unify(Term::meta(0, "m?"), f(a(), Term::meta(0, "m?"))));
  EXPECT_TRUE(unify(x(), x())->empty());
}

TEST(UnifyTest, VarIsBoundInPreferenceToMeta) {
  Term m = Term::meta(4, "m?");
  for (auto s : {unify(x(), m), unify(m, x())}) {
    ASSERT_TRUE(s);
    EXPECT_EQ(s->size(), 1u);
    EXPECT_EQ(*s->lookup(VarKey::of_var("x")), m);
  }
}

TEST(UnifyTest, ExtendsAnExistingSubstitution) {
  Substitution start({{VarKey::of_var("x"), a()}});
  EXPECT_FALSE(unify(x(), b(), start));
  auto s = unify(y(), x(), start);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s->lookup(VarKey::of_var("y")), a());
}

TEST(UnifyTest, AtomsAndBuiltins) {
  Atom p1 = Atom::pred("path", {Term::string("a"), x()});
  Atom p2 = Atom::pred("path", {y(), Term::string("c")});
  EXPECT_TRUE(unify_atoms(p1, p2));
  EXPECT_FALSE(unify_atoms(p1, Atom::pred("edge", {y(), y()})));
  EXPECT_FALSE(unify_atoms(p1, Atom::pred("path", {y()})));
  Atom cmp = Atom::builtin(CmpOp::kLt, Term::integer(1), Term::integer(2));
  EXPECT_THROW(unify_atoms(cmp, cmp), SolveError);
}

TEST(UnifyTest, MatchOneWayOnlyBindsPatternVariables) {
  auto s = match_one_way(f(x(), x()), f(a(), a()));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s->lookup(VarKey::of_var("x")), a());
  EXPECT_FALSE(match_one_way(f(x(), x()), f(a(), b())));
  EXPECT_FALSE(match_one_way(a(), x()));
  EXPECT_TRUE(match_one_way(x(), y()));
}

TEST(UnifyTest, RandomPairsAgainstGroundOracle) {
  testing::Rng rng(31);
  int unifiable = 0;
  for (int i = 0; i < 1500; ++i) {
    Term t1 = testing::random_term(rng, 3, kVars);
    Term t2 = testing::random_term(rng, 3, kVars);
    auto s = unify(t1, t2);
    if (s) ++unifiable;
    std::string verdict = testing::judge_unifier(t1, t2, s, kVars);
    ASSERT_TRUE(verdict.empty()) << verdict;
  }
  EXPECT_GT(unifiable, 100);
}

TEST(UnifyTest, SymmetricSuccess) {
  testing::Rng rng(32);
  for (int i = 0; i < 1500; ++i) {
    Term t1 = testing::random_term(rng, 3, kVars);
    Term t2 = testing::random_term(rng, 3, kVars);
    auto l = unify(t1, t2), r = unify(t2, t1);
    ASSERT_EQ(l.has_value(), r.has_value()) << to_string(t1) << " " << to_string(t2);
    if (l) {
      // The two unifiers are variants: each one's instance is an instance of
      // the other's.
      Term il = apply_subst(t1, *l), ir = apply_subst(t1, *r);
      EXPECT_TRUE(match_one_way(il, ir)) << to_string(il) << " " << to_string(ir);
      EXPECT_TRUE(match_one_way(ir, il)) << to_string(il) << " " << to_string(ir);
    }
  }
}

TEST(UnifyTest, RandomCyclicPairsFail) {
  testing::Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    const std::string& v = kVars[i % kVars.size()];
    Term inner = testing::random_term(rng, 2, kVars);
    Term cyclic = i % 2 ? g(f(inner, Term::var(v))) : f(Term::var(v), inner);
    EXPECT_FALSE(unify(Term::var(v), cyclic)) << v << " " << to_string(cyclic);
    EXPECT_FALSE(unify(cyclic, Term::var(v))) << v << " " << to_string(cyclic);
  }
}

}  // namespace
}  // namespace ldlog

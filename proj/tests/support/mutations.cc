#include "mutations.h"

namespace ldlog::testing {
namespace {

Atom with_arg(const Atom& a, std::size_t i, Term t) {
  PredAtom p = a.as_pred();
  p.args[i] = std::move(t);
  return Atom(std::move(p));
}

}  // namespace

std::vector<Mutation> single_field_mutations(const KnowledgeBase& kb,
                                             const ProofTree& valid) {
  using R = CheckError::Reason;
  std::vector<Mutation> out;
  auto add = [&](std::string what, ProofTree t, R reason,
                 std::vector<std::size_t> path = {}) {
    out.push_back(Mutation{std::move(what), std::move(t), reason, std::move(path)});
  };

  {
    ProofTree t = valid;
    t.clause_name = "no_such_clause";
    add("unknown clause name", std::move(t), R::kUnknownClause);
  }
  if (!valid.conclusion.as_pred().args.empty()) {
    ProofTree t = valid;
    t.conclusion = with_arg(t.conclusion, 0, Term::string("zz_mutant"));
    add("conclusion argument replaced", std::move(t), R::kHeadMismatch);

    ProofTree open = valid;
    open.conclusion = with_arg(open.conclusion, 0, Term::var("v"));
    add("conclusion argument made open", std::move(open), R::kNonGroundConclusion);
  }
  {
    ProofTree t = valid;
    if (t.premises.empty()) {
      t.premises.push_back(std::make_shared<const ProofTree>(valid));
      add("extra premise", std::move(t), R::kPremiseMismatch);
    } else {
      t.premises.pop_back();
      add("premise dropped", std::move(t), R::kPremiseMismatch);
    }
  }
  if (valid.premises.size() >= 2 && !same_premise(valid.premises[0], valid.premises[1])) {
    ProofTree t = valid;
    std::swap(t.premises[0], t.premises[1]);
    add("first two premises swapped", std::move(t), R::kPremiseMismatch, {0});
  }
  for (std::size_t i = 0; i < valid.premises.size(); ++i) {
    if (const auto* leaf = std::get_if<BuiltinLeaf>(&valid.premises[i])) {
      ProofTree t = valid;
      BuiltinAtom changed = leaf->atom;
      changed.rhs = Term::integer(changed.rhs.is_int() ? changed.rhs.as_int() + 1 : 0);
      t.premises[i] = BuiltinLeaf{changed};
      add("built-in premise altered", std::move(t), R::kPremiseMismatch, {i});
      break;
    }
  }
  for (std::size_t i = 0; i < valid.premises.size(); ++i) {
    if (const auto* child = std::get_if<ProofPtr>(&valid.premises[i])) {
      ProofTree inner = **child;
      inner.clause_name = "no_such_clause";
      ProofTree t = valid;
      t.premises[i] = std::make_shared<const ProofTree>(std::move(inner));
      add("nested clause name unknown", std::move(t), R::kUnknownClause, {i});
      break;
    }
  }
  if (!valid.instantiation.empty()) {
    const Clause* clause = kb.find(valid.clause_name);
    const VarKey key = valid.instantiation.begin()->first;
    ProofTree t = valid;
    t.instantiation.set(key, Term::string("zz_mutant"));
    if (clause && free_vars(clause->head).count(key) > 0) {
      add("instantiation altered", std::move(t), R::kHeadMismatch);
    } else if (clause) {
      std::size_t j = 0;
      while (j < clause->body.size() && free_vars(clause->body[j]).count(key) == 0) ++j;
      add("instantiation altered", std::move(t), R::kPremiseMismatch, {j});
    }
  }
  return out;
}

}  // namespace ldlog::testing

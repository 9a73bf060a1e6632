#include "oracles.h"

#include "generators.h"

namespace ldlog::testing {

std::vector<Substitution> ground_unifiers(const Term& t1, const Term& t2,
                                          const std::vector<std::string>& vars) {
  const std::vector<Term>& universe = ground_universe();
  std::vector<Substitution> out;
  std::vector<std::size_t> choice(vars.size(), 0);
  while (true) {
    Substitution theta;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      theta.set(VarKey::of_var(vars[i]), universe[choice[i]]);
    }
    if (apply_subst(t1, theta) == apply_subst(t2, theta)) out.push_back(theta);
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == universe.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return out;
}

std::string judge_unifier(const Term& t1, const Term& t2,
                          const std::optional<Substitution>& sigma,
                          const std::vector<std::string>& vars) {
  std::string pair = to_string(t1) + " =? " + to_string(t2);
  if (sigma) {
    if (!(apply_subst(t1, *sigma) == apply_subst(t2, *sigma))) {
      return "unsound unifier " + to_string(*sigma) + " for " + pair;
    }
    if (!is_idempotent(*sigma)) {
      return "non-idempotent unifier " + to_string(*sigma) + " for " + pair;
    }
  }
  for (const Substitution& theta : ground_unifiers(t1, t2, vars)) {
    if (!sigma) return "missed ground unifier " + to_string(theta) + " for " + pair;
    for (const std::string& v : vars) {
      Term direct = apply_subst(Term::var(v), theta);
      Term through = apply_subst(apply_subst(Term::var(v), *sigma), theta);
      if (!(direct == through)) {
        return "ground unifier " + to_string(theta) + " does not factor through " +
               to_string(*sigma) + " for " + pair;
      }
    }
  }
  return {};
}

}  // namespace ldlog::testing

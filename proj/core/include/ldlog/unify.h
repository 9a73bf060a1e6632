// First-order syntactic unification with occurs check, and one-way matching.

#ifndef LDLOG_UNIFY_H_
#define LDLOG_UNIFY_H_

#include <optional>

#include "ldlog/term.h"

namespace ldlog {

// Most general idempotent extension of `s` that makes t1 and t2 equal, or
// nullopt. Var and Meta unify alike; when a Var meets a Meta the Var is
// bound so that query placeholders stay representatives.
std::optional<Substitution> unify(const Term& t1, const Term& t2,
                                  const Substitution& s = {});

// Unifies two predicate atoms argument by argument. Throws SolveError
// (kBuiltinNotUnifiable) if either atom is a built-in comparison.
std::optional<Substitution> unify_atoms(const Atom& a1, const Atom& a2,
                                        const Substitution& s = {});

// Binds only variables of `pattern` so that it becomes `target`.
std::optional<Substitution> match_one_way(const Term& pattern,
                                          const Term& target);

}  // namespace ldlog

#endif  // LDLOG_UNIFY_H_

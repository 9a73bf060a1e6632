// Naive bottom-up evaluation. Used as a ground-truth oracle for the
// backward solver on finite, range-restricted programs.

#ifndef LDLOG_FORWARD_CHAIN_H_
#define LDLOG_FORWARD_CHAIN_H_

#include <set>

#include "ldlog/term.h"

namespace ldlog {

// Least set of ground predicate atoms containing the active facts and
// closed under the active rules. Throws UnsafeRule if an active clause has
// a head variable, or a comparison variable, that no predicate premise
// binds.
std::set<Atom> saturate(const KnowledgeBase& kb);

// Throws UnsafeRule as saturate.
bool oracle_entails(const KnowledgeBase& kb, const Atom& atom);

// Every binding of the goal's metavariables whose instance is in the
// fixpoint. Throws UnsafeRule as saturate.
std::set<Substitution> oracle_answers(const KnowledgeBase& kb, const Atom& goal);

// Same, over a fixpoint computed earlier.
std::set<Substitution> oracle_answers(const std::set<Atom>& fixpoint,
                                      const Atom& goal);

}  // namespace ldlog

#endif  // LDLOG_FORWARD_CHAIN_H_

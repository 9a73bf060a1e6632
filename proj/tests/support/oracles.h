// Brute-force reference implementations used to judge the engine.

#ifndef LDLOG_TESTS_SUPPORT_ORACLES_H_
#define LDLOG_TESTS_SUPPORT_ORACLES_H_

#include <optional>
#include <string>
#include <vector>

#include "ldlog/term.h"

namespace ldlog::testing {

// Every assignment of `vars` to members of ground_universe() under which t1
// and t2 become equal.
std::vector<Substitution> ground_unifiers(const Term& t1, const Term& t2,
                                          const std::vector<std::string>& vars);

// Judges the result of unify(t1, t2): it must equalise the terms, be
// idempotent, exist whenever a ground unifier exists, and every ground
// unifier theta must factor through it (theta == sigma then theta on each
// variable). Returns a description of the first violation, or "".
std::string judge_unifier(const Term& t1, const Term& t2,
                          const std::optional<Substitution>& sigma,
                          const std::vector<std::string>& vars);

}  // namespace ldlog::testing

#endif  // LDLOG_TESTS_SUPPORT_ORACLES_H_

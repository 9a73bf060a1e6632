#ifndef LDLOG_BUILTIN_H_
#define LDLOG_BUILTIN_H_

#include "ldlog/term.h"

namespace ldlog {

// Evaluates a comparison under `s`. Integers support every operator; string
// literals support only = and !=. Throws SolveError with kNonGroundBuiltin
// when an operand is still open, kTypeMismatch otherwise.
bool eval_builtin(const BuiltinAtom& atom, const Substitution& s = {});

}  // namespace ldlog

#endif  // LDLOG_BUILTIN_H_

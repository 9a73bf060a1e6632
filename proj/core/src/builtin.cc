#include "ldlog/builtin.h"

#include "ldlog/errors.h"

namespace ldlog {

bool eval_builtin(const BuiltinAtom& atom, const Substitution& s) {
  Term lhs = apply_subst(atom.lhs, s);
  Term rhs = apply_subst(atom.rhs, s);
  if (!is_ground(lhs) || !is_ground(rhs)) {
    throw SolveError(SolveError::Kind::kNonGroundBuiltin,
                     to_string(Atom::builtin(atom.op, lhs, rhs)));
  }
  if (lhs.is_int() && rhs.is_int()) {
    std::int64_t a = lhs.as_int();
    std::int64_t b = rhs.as_int();
    switch (atom.op) {
      case CmpOp::kLt: return a < b;
      case CmpOp::kLe: return a <= b;
      case CmpOp::kGt: return a > b;
      case CmpOp::kGe: return a >= b;
      case CmpOp::kEq: return a == b;
      case CmpOp::kNe: return a != b;
    }
  }
  if (lhs.is_str() && rhs.is_str()) {
    if (atom.op == CmpOp::kEq) return lhs.as_str() == rhs.as_str();
    if (atom.op == CmpOp::kNe) return lhs.as_str() != rhs.as_str();
  }
  throw SolveError(SolveError::Kind::kTypeMismatch,
                   to_string(Atom::builtin(atom.op, lhs, rhs)));
}

}  // namespace ldlog

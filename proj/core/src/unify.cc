#include "ldlog/unify.h"

#include "ldlog/errors.h"

namespace ldlog {
namespace {

bool occurs(const VarKey& key, const Term& t) {
  if (t.is_variable()) return VarKey::of(t) == key;
  if (!t.is_app()) return false;
  for (const Term& a : t.as_app().args) {
    if (occurs(key, a)) return true;
  }
  return false;
}

// Adds key := value to an idempotent substitution, keeping it idempotent.
// `value` must already be fully applied and must not contain `key`.
void bind(Substitution& s, const VarKey& key, const Term& value) {
  Substitution single;
  single.set(key, value);
  Substitution::Map updated;
  for (const auto& [k, v] : s) updated.emplace(k, apply_subst(v, single));
  updated.emplace(key, value);
  s = Substitution(std::move(updated));
}

bool unify_into(const Term& a, const Term& b, Substitution& s) {
  Term x = apply_subst(a, s);
  Term y = apply_subst(b, s);
  if (x == y) return true;
  if (x.is_variable() || y.is_variable()) {
    // Bind a Var in preference to a Meta, and the left side otherwise.
    bool bind_left = x.is_variable() && !(x.is_meta() && y.is_var());
    const Term& v = bind_left ? x : y;
    const Term& other = bind_left ? y : x;
    VarKey key = VarKey::of(v);
    if (occurs(key, other)) return false;
    bind(s, key, other);
    return true;
  }
  if (!x.is_app() || !y.is_app()) return false;
  const App& l = x.as_app();
  const App& r = y.as_app();
  if (l.constructor != r.constructor || l.args.size() != r.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < l.args.size(); ++i) {
    if (!unify_into(l.args[i], r.args[i], s)) return false;
  }
  return true;
}

bool match_into(const Term& pattern, const Term& target, Substitution& s) {
  if (pattern.is_variable()) {
    VarKey key = VarKey::of(pattern);
    if (const Term* bound = s.lookup(key)) return *bound == target;
    s.set(key, target);
    return true;
  }
  if (pattern.is_app()) {
    if (!target.is_app()) return false;
    const App& p = pattern.as_app();
    const App& t = target.as_app();
    if (p.constructor != t.constructor || p.args.size() != t.args.size()) {
      return false;
    }
    for (std::size_t i = 0; i < p.args.size(); ++i) {
      if (!match_into(p.args[i], t.args[i], s)) return false;
    }
    return true;
  }
  return pattern == target;
}

}  // namespace

std::optional<Substitution> unify(const Term& t1, const Term& t2,
                                  const Substitution& s) {
  Substitution out = s;
  if (!unify_into(t1, t2, out)) return std::nullopt;
  return out;
}

std::optional<Substitution> unify_atoms(const Atom& a1, const Atom& a2,
                                        const Substitution& s) {
  if (a1.is_builtin() || a2.is_builtin()) {
    throw SolveError(SolveError::Kind::kBuiltinNotUnifiable,
                     to_string(a1.is_builtin() ? a1 : a2));
  }
  const PredAtom& p = a1.as_pred();
  const PredAtom& q = a2.as_pred();
  if (p.symbol != q.symbol || p.args.size() != q.args.size()) {
    return std::nullopt;
  }
  Substitution out = s;
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    if (!unify_into(p.args[i], q.args[i], out)) return std::nullopt;
  }
  return out;
}

std::optional<Substitution> match_one_way(const Term& pattern,
                                          const Term& target) {
  Substitution s;
  if (!match_into(pattern, target, s)) return std::nullopt;
  return s;
}

}  // namespace ldlog

#include "ldlog/term.h"

#include <sstream>
#include <stdexcept>

#include "ldlog/errors.h"
#include "ldlog/unify.h"

namespace ldlog {

Term::Term(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

Term Term::integer(std::int64_t value) { return Term(IntLit{value}); }
Term Term::string(std::string value) { return Term(StrLit{std::move(value)}); }
Term Term::var(std::string name) { return Term(Var{std::move(name)}); }
Term Term::meta(MetaId id, std::string source_name) {
  return Term(Meta{id, std::move(source_name)});
}
Term Term::app(std::string constructor, std::vector<Term> args) {
  return Term(App{std::move(constructor), std::move(args)});
}

bool operator==(const Term& a, const Term& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.index() != y.index()) return x.index() <=> y.index();
  switch (x.index()) {
    case 0:
      return std::get<IntLit>(x).value <=> std::get<IntLit>(y).value;
    case 1:
      return std::get<StrLit>(x).value <=> std::get<StrLit>(y).value;
    case 2:
      return std::get<Var>(x).name <=> std::get<Var>(y).name;
    case 3:
      return std::get<Meta>(x).id <=> std::get<Meta>(y).id;
    default: {
      const App& l = std::get<App>(x);
      const App& r = std::get<App>(y);
      if (auto c = l.constructor <=> r.constructor; c != 0) return c;
      if (l.args.size() != r.args.size()) return l.args.size() <=> r.args.size();
      for (std::size_t i = 0; i < l.args.size(); ++i) {
        if (auto c = l.args[i] <=> r.args[i]; c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
  }
}

VarKey VarKey::of(const Term& t) {
  if (t.is_meta()) return of_meta(t.as_meta().id);
  return of_var(t.as_var().name);
}

const char* cmp_op_text(CmpOp op) {
  switch (op) {
    case CmpOp::kLt: return "<";
    case CmpOp::kLe: return "<=";
    case CmpOp::kGt: return ">";
    case CmpOp::kGe: return ">=";
    case CmpOp::kEq: return "=";
    case CmpOp::kNe: return "!=";
  }
  return "?";
}

const Term* Substitution::lookup(const VarKey& key) const {
  auto it = bindings_.find(key);
  return it == bindings_.end() ? nullptr : &it->second;
}

const Clause* KnowledgeBase::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &clauses_[it->second];
}

void KnowledgeBase::add_clause(Clause clause, bool active) {
  if (index_.count(clause.name) > 0) {
    throw std::invalid_argument("duplicate clause name: " + clause.name);
  }
  index_.emplace(clause.name, clauses_.size());
  if (active) active_.insert(clause.name);
  clauses_.push_back(std::move(clause));
}

void KnowledgeBase::set_active(const std::string& name, bool active) {
  if (index_.count(name) == 0) {
    throw std::invalid_argument("unknown clause name: " + name);
  }
  if (active) {
    active_.insert(name);
  } else {
    active_.erase(name);
  }
}

void KnowledgeBase::declare_constructor(const std::string& name,
                                        ConstructorInfo info) {
  constructors_.insert_or_assign(name, std::move(info));
}

void KnowledgeBase::define(const std::string& name, Term value) {
  defs_.insert_or_assign(name, std::move(value));
}

Term apply_subst(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  return std::visit(
      [&](const auto& n) -> Term {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var> || std::is_same_v<N, Meta>) {
          const Term* bound = s.lookup(VarKey::of(t));
          return bound ? *bound : t;
        } else if constexpr (std::is_same_v<N, App>) {
          std::vector<Term> args;
          args.reserve(n.args.size());
          bool changed = false;
          for (const Term& a : n.args) {
            args.push_back(apply_subst(a, s));
            changed = changed || !args.back().same_node(a);
          }
          return changed ? Term::app(n.constructor, std::move(args)) : t;
        } else {
          return t;
        }
      },
      t.node());
}

Atom apply_subst(const Atom& a, const Substitution& s) {
  if (a.is_pred()) {
    const PredAtom& p = a.as_pred();
    std::vector<Term> args;
    args.reserve(p.args.size());
    for (const Term& t : p.args) args.push_back(apply_subst(t, s));
    return Atom::pred(p.symbol, std::move(args));
  }
  const BuiltinAtom& b = a.as_builtin();
  return Atom::builtin(b.op, apply_subst(b.lhs, s), apply_subst(b.rhs, s));
}

bool is_idempotent(const Substitution& s) {
  for (const auto& [key, value] : s) {
    std::set<VarKey> vars = free_vars(value);
    for (const auto& [k2, unused] : s) {
      if (vars.count(k2) > 0) return false;
    }
  }
  return true;
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
  Substitution::Map out;
  for (const auto& [key, value] : s1) {
    Term v = apply_subst(value, s2);
    if (const Term* other = s2.lookup(key)) {
      // Both bind the key. s1 wins on the defining equation, but the two
      // bindings must at least be compatible.
      if (!unify(*other, v)) {
        throw ConflictingBinding("key bound to distinct terms " + to_string(v) +
                                 " and " + to_string(*other));
      }
    }
    if (v.is_variable() && VarKey::of(v) == key) continue;
    out.emplace(key, std::move(v));
  }
  for (const auto& [key, value] : s2) {
    if (out.count(key) == 0 && !s1.contains(key)) out.emplace(key, value);
  }
  Substitution result(std::move(out));
  if (!is_idempotent(result)) {
    throw ConflictingBinding("composition produces a cyclic binding");
  }
  return result;
}

void collect_free_vars(const Term& t, std::set<VarKey>& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var> || std::is_same_v<N, Meta>) {
          out.insert(VarKey::of(t));
        } else if constexpr (std::is_same_v<N, App>) {
          for (const Term& a : n.args) collect_free_vars(a, out);
        }
      },
      t.node());
}

std::set<VarKey> free_vars(const Term& t) {
  std::set<VarKey> out;
  collect_free_vars(t, out);
  return out;
}

std::set<VarKey> free_vars(const Atom& a) {
  std::set<VarKey> out;
  if (a.is_pred()) {
    for (const Term& t : a.as_pred().args) collect_free_vars(t, out);
  } else {
    collect_free_vars(a.as_builtin().lhs, out);
    collect_free_vars(a.as_builtin().rhs, out);
  }
  return out;
}

bool is_ground(const Term& t) {
  return std::visit(
      [](const auto& n) -> bool {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var> || std::is_same_v<N, Meta>) {
          return false;
        } else if constexpr (std::is_same_v<N, App>) {
          for (const Term& a : n.args) {
            if (!is_ground(a)) return false;
          }
          return true;
        } else {
          return true;
        }
      },
      t.node());
}

bool is_ground(const Atom& a) {
  if (a.is_builtin()) {
    return is_ground(a.as_builtin().lhs) && is_ground(a.as_builtin().rhs);
  }
  for (const Term& t : a.as_pred().args) {
    if (!is_ground(t)) return false;
  }
  return true;
}

std::string quote_string(const std::string& raw) {
  std::string out = "\"";
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

namespace {

void write_term(std::ostream& os, const Term& t) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, IntLit>) {
          os << n.value;
        } else if constexpr (std::is_same_v<N, StrLit>) {
          os << quote_string(n.value);
        } else if constexpr (std::is_same_v<N, Var>) {
          os << n.name;
        } else if constexpr (std::is_same_v<N, Meta>) {
          if (n.source_name.empty()) {
            os << "?" << n.id;
          } else {
            os << n.source_name;
          }
        } else {
          os << n.constructor;
          if (n.args.empty()) return;
          os << "(";
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i > 0) os << ", ";
            write_term(os, n.args[i]);
          }
          os << ")";
        }
      },
      t.node());
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  write_term(os, t);
  return os.str();
}

std::string to_string(const Atom& a) {
  std::ostringstream os;
  if (a.is_pred()) {
    const PredAtom& p = a.as_pred();
    os << p.symbol << "(";
    for (std::size_t i = 0; i < p.args.size(); ++i) {
      if (i > 0) os << ", ";
      write_term(os, p.args[i]);
    }
    os << ")";
  } else {
    const BuiltinAtom& b = a.as_builtin();
    write_term(os, b.lhs);
    os << " " << cmp_op_text(b.op) << " ";
    write_term(os, b.rhs);
  }
  return os.str();
}

std::string to_string(const Substitution& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [key, value] : s) {
    if (!first) os << ", ";
    first = false;
    if (key.is_meta) {
      os << "?" << key.meta_id;
    } else {
      os << key.name;
    }
    os << " := ";
    write_term(os, value);
  }
  os << "}";
  return os.str();
}

}  // namespace ldlog

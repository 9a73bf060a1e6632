// Terms, atoms, clauses, queries and the knowledge base.
//
// Terms are immutable handles onto shared nodes, so copying a Term is cheap
// and values may be shared freely between threads.

#ifndef LDLOG_TERM_H_
#define LDLOG_TERM_H_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace ldlog {

class Term;

using MetaId = std::uint32_t;

struct IntLit {
  std::int64_t value;
};

struct StrLit {
  std::string value;
};

// Universally quantified clause variable.
struct Var {
  std::string name;
};

// Existential query placeholder. Identity is the id; source_name is only
// kept for reporting.
struct Meta {
  MetaId id;
  std::string source_name;
};

// Applied constructor. Arity 0 doubles as a named constant.
struct App {
  std::string constructor;
  std::vector<Term> args;
};

class Term {
 public:
  using Node = std::variant<IntLit, StrLit, Var, Meta, App>;

  static Term integer(std::int64_t value);
  static Term string(std::string value);
  static Term var(std::string name);
  static Term meta(MetaId id, std::string source_name);
  static Term app(std::string constructor, std::vector<Term> args = {});

  const Node& node() const { return *node_; }

  bool is_int() const { return std::holds_alternative<IntLit>(*node_); }
  bool is_str() const { return std::holds_alternative<StrLit>(*node_); }
  bool is_var() const { return std::holds_alternative<Var>(*node_); }
  bool is_meta() const { return std::holds_alternative<Meta>(*node_); }
  bool is_app() const { return std::holds_alternative<App>(*node_); }
  // Var or Meta.
  bool is_variable() const { return is_var() || is_meta(); }

  std::int64_t as_int() const { return std::get<IntLit>(*node_).value; }
  const std::string& as_str() const { return std::get<StrLit>(*node_).value; }
  const Var& as_var() const { return std::get<Var>(*node_); }
  const Meta& as_meta() const { return std::get<Meta>(*node_); }
  const App& as_app() const { return std::get<App>(*node_); }

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  explicit Term(Node node);
  std::shared_ptr<const Node> node_;
};

// Key of a substitution: either a clause variable (by name) or a
// metavariable (by id).
struct VarKey {
  bool is_meta = false;
  MetaId meta_id = 0;
  std::string name;

  static VarKey of_var(std::string name) { return {false, 0, std::move(name)}; }
  static VarKey of_meta(MetaId id) { return {true, id, {}}; }
  // Precondition: t.is_variable().
  static VarKey of(const Term& t);

  auto operator<=>(const VarKey&) const = default;
  bool operator==(const VarKey&) const = default;
};

enum class CmpOp { kLt, kLe, kGt, kGe, kEq, kNe };

const char* cmp_op_text(CmpOp op);

struct PredAtom {
  std::string symbol;
  std::vector<Term> args;
  auto operator<=>(const PredAtom&) const = default;
  bool operator==(const PredAtom&) const = default;
};

struct BuiltinAtom {
  CmpOp op;
  Term lhs;
  Term rhs;
  auto operator<=>(const BuiltinAtom&) const = default;
  bool operator==(const BuiltinAtom&) const = default;
};

class Atom {
 public:
  using Node = std::variant<PredAtom, BuiltinAtom>;

  Atom(PredAtom p) : node_(std::move(p)) {}
  Atom(BuiltinAtom b) : node_(std::move(b)) {}

  static Atom pred(std::string symbol, std::vector<Term> args = {}) {
    return Atom(PredAtom{std::move(symbol), std::move(args)});
  }
  static Atom builtin(CmpOp op, Term lhs, Term rhs) {
    return Atom(BuiltinAtom{op, std::move(lhs), std::move(rhs)});
  }

  bool is_pred() const { return std::holds_alternative<PredAtom>(node_); }
  bool is_builtin() const { return std::holds_alternative<BuiltinAtom>(node_); }
  const PredAtom& as_pred() const { return std::get<PredAtom>(node_); }
  const BuiltinAtom& as_builtin() const { return std::get<BuiltinAtom>(node_); }
  const Node& node() const { return node_; }

  auto operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;

 private:
  Node node_;
};

enum class ClauseOrigin { kFact, kRule, kImported };

struct Clause {
  std::string name;
  Atom head;
  std::vector<Atom> body;
  ClauseOrigin origin = ClauseOrigin::kFact;

  bool operator==(const Clause&) const = default;
};

struct Query {
  std::string name;
  Atom goal;
  // Source placeholder name (with trailing '?') to metavariable id.
  std::map<std::string, MetaId> placeholder_map;

  bool operator==(const Query&) const = default;
};

class Substitution {
 public:
  using Map = std::map<VarKey, Term>;

  Substitution() = default;
  explicit Substitution(Map bindings) : bindings_(std::move(bindings)) {}

  const Term* lookup(const VarKey& key) const;
  bool contains(const VarKey& key) const { return bindings_.count(key) > 0; }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const Map& bindings() const { return bindings_; }

  // Raw insertion; callers are responsible for keeping the map idempotent.
  void set(VarKey key, Term value) { bindings_.insert_or_assign(std::move(key), std::move(value)); }
  void erase(const VarKey& key) { bindings_.erase(key); }

  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  bool operator==(const Substitution&) const = default;
  auto operator<=>(const Substitution&) const = default;

 private:
  Map bindings_;
};

struct ConstructorInfo {
  std::size_t arity = 0;
  // Present for struct declarations.
  std::optional<std::vector<std::string>> fields;

  bool operator==(const ConstructorInfo&) const = default;
};

class KnowledgeBase {
 public:
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::set<std::string>& active() const { return active_; }
  const std::map<std::string, ConstructorInfo>& constructors() const { return constructors_; }
  const std::map<std::string, Term>& defs() const { return defs_; }

  const Clause* find(const std::string& name) const;
  bool is_active(const std::string& name) const { return active_.count(name) > 0; }

  // Throws std::invalid_argument on a duplicate clause name.
  void add_clause(Clause clause, bool active = true);
  void set_active(const std::string& name, bool active);
  void declare_constructor(const std::string& name, ConstructorInfo info);
  void define(const std::string& name, Term value);

  bool operator==(const KnowledgeBase&) const = default;

 private:
  std::vector<Clause> clauses_;
  std::map<std::string, std::size_t> index_;
  std::set<std::string> active_;
  std::map<std::string, ConstructorInfo> constructors_;
  std::map<std::string, Term> defs_;
};

Term apply_subst(const Term& t, const Substitution& s);
Atom apply_subst(const Atom& a, const Substitution& s);

// Throws ConflictingBinding when the two substitutions cannot be combined
// into an idempotent one.
Substitution compose(const Substitution& s1, const Substitution& s2);

std::set<VarKey> free_vars(const Term& t);
std::set<VarKey> free_vars(const Atom& a);
void collect_free_vars(const Term& t, std::set<VarKey>& out);

bool is_ground(const Term& t);
bool is_ground(const Atom& a);

// True when no bound key occurs in any bound value.
bool is_idempotent(const Substitution& s);

// Concrete syntax of terms and atoms as used in reports and certificates.
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Substitution& s);
std::string quote_string(const std::string& raw);

}  // namespace ldlog

#endif  // LDLOG_TERM_H_

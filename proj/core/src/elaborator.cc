#include "ldlog/elaborator.h"

#include <set>

#include "ldlog/errors.h"
#include "ldlog/parser.h"

namespace ldlog {

std::string fresh_name(StatementKind kind, int counter) {
  const char* prefix = kind == StatementKind::kFact   ? "_fact_"
                       : kind == StatementKind::kRule ? "_rule_"
                                                      : "_query_";
  return prefix + std::to_string(counter);
}

namespace {

[[noreturn]] void fail(ElabError::Kind kind, const std::string& name,
                       const ElabContext& ctx, const std::string& detail = {}) {
  throw ElabError(kind, name, detail, ctx.line);
}

void check_pred_arity(const std::string& symbol, std::size_t arity,
                      ElabContext& ctx) {
  auto [it, inserted] = ctx.pred_arity.emplace(symbol, arity);
  if (!inserted && it->second != arity) {
    fail(ElabError::Kind::kArityMismatch, symbol, ctx,
         "used with " + std::to_string(arity) + " arguments, earlier with " +
             std::to_string(it->second));
  }
}

void check_pred_arities(const Atom& a, ElabContext& ctx) {
  if (a.is_pred()) check_pred_arity(a.as_pred().symbol, a.as_pred().args.size(), ctx);
}

Term rewrite_identifier(const std::string& name, ElabContext& ctx) {
  if (is_placeholder_name(name)) {
    if (ctx.policy != VarPolicy::kQuery) {
      fail(ElabError::Kind::kMisplacedPlaceholder, name, ctx,
           "placeholders may only appear in queries");
    }
    auto [it, inserted] = ctx.placeholders.emplace(name, ctx.next_meta);
    if (inserted) ++ctx.next_meta;
    return Term::meta(it->second, name);
  }
  if (auto d = ctx.defs.find(name); d != ctx.defs.end()) return d->second;
  if (auto c = ctx.constructors.find(name); c != ctx.constructors.end()) {
    if (c->second.arity != 0) {
      fail(ElabError::Kind::kArityMismatch, name, ctx,
           "constructor of arity " + std::to_string(c->second.arity) +
               " used as a constant");
    }
    return Term::app(name);
  }
  switch (ctx.policy) {
    case VarPolicy::kRule:
      return Term::var(name);
    case VarPolicy::kQuery:
      fail(ElabError::Kind::kUnboundQueryVar, name, ctx,
           "neither a placeholder, a def nor a constructor");
    case VarPolicy::kGround:
      break;
  }
  if (ctx.statement_name.rfind("def ", 0) == 0) {
    fail(ElabError::Kind::kNonGroundDef, ctx.statement_name.substr(4), ctx,
         "unknown identifier " + name);
  }
  fail(ElabError::Kind::kNonGroundFact, ctx.statement_name, ctx,
       "unknown identifier " + name);
}

Term project(const Term& base, const std::string& field, ElabContext& ctx) {
  if (!base.is_app() || !is_ground(base)) {
    fail(ElabError::Kind::kBadProjection, field, ctx,
         "projection needs a def-bound struct value, got " + to_string(base));
  }
  const App& app = base.as_app();
  auto c = ctx.constructors.find(app.constructor);
  if (c == ctx.constructors.end() || !c->second.fields) {
    fail(ElabError::Kind::kBadProjection, field, ctx,
         app.constructor + " is not a struct");
  }
  const std::vector<std::string>& fields = *c->second.fields;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i] == field) return app.args[i];
  }
  fail(ElabError::Kind::kUnknownField, field, ctx,
       "struct " + app.constructor + " has no such field");
}

}  // namespace

Term rewrite_term(const TermAst& t, ElabContext& ctx) {
  switch (t.kind) {
    case TermAst::Kind::kInt:
      return Term::integer(t.int_value);
    case TermAst::Kind::kStr:
      return Term::string(t.text);
    case TermAst::Kind::kIdent:
      return rewrite_identifier(t.text, ctx);
    case TermAst::Kind::kApp: {
      if (is_placeholder_name(t.text)) {
        fail(ElabError::Kind::kMisplacedPlaceholder, t.text, ctx,
             "placeholder in constructor position");
      }
      auto [it, inserted] =
          ctx.constructors.emplace(t.text, ConstructorInfo{t.args.size(), {}});
      if (!inserted && it->second.arity != t.args.size()) {
        fail(ElabError::Kind::kArityMismatch, t.text, ctx,
             "constructor applied to " + std::to_string(t.args.size()) +
                 " arguments, declared with " + std::to_string(it->second.arity));
      }
      std::vector<Term> args;
      for (const TermAst& a : t.args) args.push_back(rewrite_term(a, ctx));
      return Term::app(t.text, std::move(args));
    }
    case TermAst::Kind::kProj:
      return project(rewrite_term(t.args[0], ctx), t.text, ctx);
    case TermAst::Kind::kCmp:
      fail(ElabError::Kind::kComparisonAsTerm, render_term(t), ctx,
           "comparisons are atoms, not terms");
  }
  fail(ElabError::Kind::kNotAnAtom, render_term(t), ctx);
}

Atom rewrite_atom(const AtomAst& a, ElabContext& ctx) {
  if (a.kind == AtomAst::Kind::kApplication) {
    if (is_placeholder_name(a.name)) {
      fail(ElabError::Kind::kMisplacedPlaceholder, a.name, ctx,
           "placeholder in predicate position");
    }
    check_pred_arity(a.name, a.args.size(), ctx);
    std::vector<Term> args;
    for (const TermAst& t : a.args) args.push_back(rewrite_term(t, ctx));
    return Atom::pred(a.name, std::move(args));
  }
  const TermAst& t = a.term();
  switch (t.kind) {
    case TermAst::Kind::kCmp:
      return Atom::builtin(t.op, rewrite_term(t.args[0], ctx),
                           rewrite_term(t.args[1], ctx));
    case TermAst::Kind::kApp:
      return rewrite_atom(AtomAst::application(t.text, t.args), ctx);
    case TermAst::Kind::kIdent:
      return rewrite_atom(AtomAst::application(t.text, {}), ctx);
    default:
      fail(ElabError::Kind::kNotAnAtom, render_term(t), ctx,
           "parenthesized term is neither a comparison nor an application");
  }
}

namespace {

class Elaborator {
 public:
  Elaborator(bool library_mode, const KnowledgeBase* library)
      : library_mode_(library_mode), library_(library) {
    if (library) {
      ctx_.constructors = library->constructors();
      ctx_.defs = library->defs();
    }
  }

  void seed_from(const KnowledgeBase& base) {
    for (const Clause& c : base.clauses()) {
      taken_.insert(c.name);
      check_pred_arities(c.head, ctx_);
      for (const Atom& b : c.body) check_pred_arities(b, ctx_);
      kb_.add_clause(c, base.is_active(c.name));
    }
  }

  void run(const Program& statements) {
    for (const StatementAst& s : statements) {
      if (const auto* f = std::get_if<FactStmt>(&s.node)) {
        if (f->label) user_labels_.insert(*f->label);
      } else if (const auto* r = std::get_if<RuleStmt>(&s.node)) {
        if (r->label) user_labels_.insert(*r->label);
      } else if (const auto* q = std::get_if<QueryStmt>(&s.node)) {
        if (q->label) user_labels_.insert(*q->label);
      }
    }
    for (const StatementAst& s : statements) {
      ctx_.line = s.line;
      std::visit([&](const auto& n) { statement(n); }, s.node);
    }
  }

  ElaboratedProgram finish() {
    for (const auto& [name, info] : ctx_.constructors) {
      kb_.declare_constructor(name, info);
    }
    for (const auto& [name, value] : ctx_.defs) kb_.define(name, value);
    return {std::move(kb_), std::move(queries_)};
  }

 private:
  std::string name_for(const std::optional<std::string>& label,
                       StatementKind kind, int& counter) {
    std::string name;
    if (label) {
      name = *label;
    } else {
      do {
        name = fresh_name(kind, ++counter);
      } while (user_labels_.count(name) > 0 || taken_.count(name) > 0);
    }
    if (!taken_.insert(name).second) {
      fail(ElabError::Kind::kDuplicateName, name, ctx_);
    }
    return name;
  }

  void add(Clause clause) { kb_.add_clause(std::move(clause), true); }

  void statement(const FactStmt& f) {
    std::string name = name_for(f.label, StatementKind::kFact, facts_);
    ctx_.policy = VarPolicy::kGround;
    ctx_.statement_name = name;
    Atom head = rewrite_atom(f.atom, ctx_);
    if (head.is_builtin()) {
      fail(ElabError::Kind::kBuiltinHead, name, ctx_, "a fact must be a predicate atom");
    }
    add(Clause{name, std::move(head), {}, ClauseOrigin::kFact});
  }

  void statement(const RuleStmt& r) {
    std::string name = name_for(r.label, StatementKind::kRule, rules_);
    ctx_.policy = VarPolicy::kRule;
    ctx_.statement_name = name;
    Atom head = rewrite_atom(r.head, ctx_);
    if (head.is_builtin()) {
      fail(ElabError::Kind::kBuiltinHead, name, ctx_, "a rule head must be a predicate atom");
    }
    std::vector<Atom> body;
    for (const AtomAst& b : r.body) body.push_back(rewrite_atom(b, ctx_));
    add(Clause{name, std::move(head), std::move(body), ClauseOrigin::kRule});
  }

  void statement(const QueryStmt& q) {
    if (library_mode_) {
      fail(ElabError::Kind::kLibraryStatement, q.label.value_or("?"), ctx_,
           "queries are not allowed in library files");
    }
    std::string name = name_for(q.label, StatementKind::kQuery, queries_count_);
    ctx_.policy = VarPolicy::kQuery;
    ctx_.statement_name = name;
    ctx_.placeholders.clear();
    Atom goal = rewrite_atom(q.atom, ctx_);
    if (goal.is_builtin()) {
      fail(ElabError::Kind::kBuiltinQuery, name, ctx_,
           "a query must be a predicate atom");
    }
    queries_.push_back(Query{name, std::move(goal), ctx_.placeholders});
  }

  void statement(const UseStmt& u) {
    if (library_mode_) {
      fail(ElabError::Kind::kLibraryStatement, "use", ctx_,
           "use is not allowed in library files");
    }
    for (const std::string& name : u.names) {
      const Clause* c = library_ ? library_->find(name) : nullptr;
      if (!c) fail(ElabError::Kind::kUnknownUseName, name, ctx_);
      if (!taken_.insert(name).second) {
        fail(ElabError::Kind::kDuplicateName, name, ctx_);
      }
      check_pred_arities(c->head, ctx_);
      for (const Atom& b : c->body) check_pred_arities(b, ctx_);
      Clause imported = *c;
      imported.origin = ClauseOrigin::kImported;
      add(std::move(imported));
    }
  }

  void statement(const StructStmt& s) {
    if (ctx_.constructors.count(s.name) > 0) {
      fail(ElabError::Kind::kDuplicateName, s.name, ctx_, "constructor already declared");
    }
    std::set<std::string> seen;
    for (const std::string& f : s.fields) {
      if (!seen.insert(f).second) {
        fail(ElabError::Kind::kDuplicateName, f, ctx_, "repeated field of " + s.name);
      }
    }
    ctx_.constructors.emplace(s.name, ConstructorInfo{s.fields.size(), s.fields});
  }

  void statement(const DefStmt& d) {
    if (ctx_.defs.count(d.name) > 0) {
      fail(ElabError::Kind::kDuplicateName, d.name, ctx_, "already defined");
    }
    if (is_placeholder_name(d.name)) {
      fail(ElabError::Kind::kMisplacedPlaceholder, d.name, ctx_);
    }
    ctx_.policy = VarPolicy::kGround;
    ctx_.statement_name = "def " + d.name;
    Term value = rewrite_term(d.value, ctx_);
    ctx_.defs.emplace(d.name, std::move(value));
  }

  bool library_mode_;
  const KnowledgeBase* library_;
  ElabContext ctx_;
  KnowledgeBase kb_;
  std::vector<Query> queries_;
  std::set<std::string> user_labels_;
  std::set<std::string> taken_;
  int facts_ = 0;
  int rules_ = 0;
  int queries_count_ = 0;
};

}  // namespace

ElaboratedProgram elaborate(const Program& statements,
                            const KnowledgeBase* library) {
  Elaborator e(false, library);
  e.run(statements);
  return e.finish();
}

KnowledgeBase elaborate_library(const Program& statements,
                                const KnowledgeBase* base) {
  Elaborator e(true, base);
  if (base) e.seed_from(*base);
  e.run(statements);
  return e.finish().kb;
}

}  // namespace ldlog

// Elaboration: turns parsed statements into named axioms (facts and rules),
// goals (queries) and the set of clauses enabled for proof search.

#ifndef LDLOG_ELABORATOR_H_
#define LDLOG_ELABORATOR_H_

#include <map>
#include <string>
#include <vector>

#include "ldlog/syntax.h"
#include "ldlog/term.h"

namespace ldlog {

enum class StatementKind { kFact, kRule, kQuery };

// `_fact_1`, `_rule_2`, `_query_3`, ...
std::string fresh_name(StatementKind kind, int counter);

// How unknown identifiers are read inside one statement.
enum class VarPolicy {
  kGround,  // facts and defs: everything must resolve to a constant
  kRule,    // unknown identifiers are universally quantified variables
  kQuery,   // only `x?` placeholders may be open
};

struct ElabContext {
  VarPolicy policy = VarPolicy::kRule;
  std::map<std::string, ConstructorInfo> constructors;
  std::map<std::string, Term> defs;
  std::map<std::string, std::size_t> pred_arity;
  // Placeholders of the query being elaborated.
  std::map<std::string, MetaId> placeholders;
  MetaId next_meta = 0;
  // For error reports.
  std::string statement_name;
  int line = 0;
};

Term rewrite_term(const TermAst& t, ElabContext& ctx);
Atom rewrite_atom(const AtomAst& a, ElabContext& ctx);

struct ElaboratedProgram {
  KnowledgeBase kb;
  std::vector<Query> queries;
};

// Elaborates a main program. `use` statements resolve against `library`,
// whose struct and def declarations are also visible here. Throws
// ElabError.
ElaboratedProgram elaborate(const Program& statements,
                            const KnowledgeBase* library = nullptr);

// Elaborates a library file on top of `base` (which may be null). Only
// facts, rules, structs and defs are allowed. Throws ElabError.
KnowledgeBase elaborate_library(const Program& statements,
                                const KnowledgeBase* base = nullptr);

}  // namespace ldlog

#endif  // LDLOG_ELABORATOR_H_

// Random inputs shared by the property tests and the acceptance suite.

#ifndef LDLOG_TESTS_SUPPORT_GENERATORS_H_
#define LDLOG_TESTS_SUPPORT_GENERATORS_H_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ldlog/syntax.h"
#include "ldlog/term.h"

namespace ldlog::testing {

using Rng = std::mt19937_64;

// Surface syntax. Comparisons only appear where the grammar can read them
// back (argument and parenthesised-atom position, never nested).
TermAst random_term_ast(Rng& rng, int depth, bool allow_cmp);
StatementAst random_statement(Rng& rng);
Program random_program_ast(Rng& rng, std::size_t max_statements = 12);

// Bytes for the lexer/parser fuzzer: either uniformly random or a rendered
// program with a few byte-level mutations.
std::string random_fuzz_input(Rng& rng);

// Semantic terms over constants a, b, c, constructors g/1 and f/2, the
// integers 0 and 1, and the given variable names.
Term random_term(Rng& rng, int depth, const std::vector<std::string>& vars);

// Ground terms the unification oracle quantifies over.
const std::vector<Term>& ground_universe();

struct DatalogShape {
  int constants = 8;
  int predicates = 4;
  int max_rules = 6;
  int max_facts = 10;
  int queries = 6;
};

// A safe, comparison-free program over binary predicates p0.. and string
// constants "c0".., followed by ground and single-placeholder queries.
std::string random_datalog_source(Rng& rng, const DatalogShape& shape = {});

}  // namespace ldlog::testing

#endif  // LDLOG_TESTS_SUPPORT_GENERATORS_H_

// Command-line front end: `ldlog run <file> [options]`.

#ifndef LDLOG_TOOLS_CLI_H_
#define LDLOG_TOOLS_CLI_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ldlog/solver.h"
#include "ldlog/term.h"

namespace ldlog::cli {

enum ExitCode {
  kAllSolved = 0,
  kSomeUnsolved = 1,
  kInputError = 2,
  kCheckFailure = 3,
};

struct QueryResult {
  enum class Status { kSolved, kUnprovable, kError };

  explicit QueryResult(Query q) : query(std::move(q)) {}

  Query query;
  Status status = Status::kUnprovable;
  std::vector<Solution> solutions;
  // Answers from the forward-chaining oracle, when it was used instead of
  // the solver.
  bool from_oracle = false;
  std::vector<Substitution> oracle_bindings;
  std::string error;
  std::size_t depth = 6;
};

// One block per query, one line per solution; `no queries.` when empty.
std::string format_report(const std::vector<QueryResult>& results);

// `args` excludes the program name. Output goes to `out`, diagnostics to
// `err`; the return value is an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ldlog::cli

#endif  // LDLOG_TOOLS_CLI_H_

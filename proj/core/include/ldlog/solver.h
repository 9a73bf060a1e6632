// Depth-bounded backward chaining over the active clauses of a knowledge
// base.

#ifndef LDLOG_SOLVER_H_
#define LDLOG_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "ldlog/proof.h"
#include "ldlog/term.h"

namespace ldlog {

struct SolverConfig {
  // Maximum number of clause applications on any root-to-leaf branch of a
  // proof, i.e. the proof height.
  std::size_t max_depth = 6;
  // nullopt enumerates every solution.
  std::optional<std::size_t> solution_limit = 1;
  // Defer non-ground comparisons to the end of their conjunction.
  bool builtin_delay = true;
  // Reuse the answers of a subgoal already explored with the same remaining
  // depth. The solutions, their order and their proof heights are the same
  // either way; without it the search is exponential in the depth on
  // recursive programs.
  bool memoize = true;
};

struct Solution {
  // Restricted to the query's metavariables.
  Substitution bindings;
  ProofTree proof;
};

// Clauses are tried in knowledge-base order, body atoms left to right, with
// chronological backtracking. Returns up to solution_limit solutions in
// discovery order, one per distinct binding of the placeholders. Each comes
// with a proof of minimal height: the one found first under the smallest
// depth bound that admits the answer. An unprovable goal yields an empty
// list. Throws SolveError when a comparison flounders or fails to type
// check, or when a proof would leave a variable open.
std::vector<Solution> solve(const KnowledgeBase& kb, const Query& q,
                            const SolverConfig& cfg = {});

// Renames every variable `v` of `c` to `v#tick`.
Clause standardize_apart(const Clause& c, std::uint64_t tick);

}  // namespace ldlog

#endif  // LDLOG_SOLVER_H_

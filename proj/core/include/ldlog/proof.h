// Proof trees: the certificates produced by the solver, an independent
// checker for them, and their textual and JSON forms.

#ifndef LDLOG_PROOF_H_
#define LDLOG_PROOF_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ldlog/term.h"

namespace ldlog {

struct ProofTree;
using ProofPtr = std::shared_ptr<const ProofTree>;

// Premise discharged by evaluating a ground comparison.
struct BuiltinLeaf {
  BuiltinAtom atom;
  bool operator==(const BuiltinLeaf&) const = default;
};

using Premise = std::variant<ProofPtr, BuiltinLeaf>;

// One application of a named clause. `instantiation` maps the clause's own
// variable names to ground terms; premises follow the clause body in order.
struct ProofTree {
  std::string clause_name;
  Substitution instantiation;
  Atom conclusion;
  std::vector<Premise> premises;
};

// Deep structural equality.
bool operator==(const ProofTree& a, const ProofTree& b);
bool same_premise(const Premise& a, const Premise& b);

// Number of clause applications on the longest root-to-leaf branch.
std::size_t proof_height(const ProofTree& p);

struct CheckError {
  enum class Reason {
    kUnknownClause,
    kHeadMismatch,
    kPremiseMismatch,
    kBuiltinFalse,
    kNonGroundConclusion,
  };

  // Premise indices from the root to the offending node.
  std::vector<std::size_t> path;
  Reason reason;
  std::string detail;

  std::string message() const;
};

const char* to_string(CheckError::Reason reason);

// Validates `p` against the clauses of `kb` without searching: every node
// must be an instance of its named clause under its instantiation, and
// built-in premises must evaluate to true. Activation is not consulted.
// Returns nullopt when the proof is valid.
std::optional<CheckError> check_proof(const KnowledgeBase& kb,
                                      const ProofTree& p);

// Application syntax, e.g. `r2 (r1 f1) f2`.
std::string render_proof(const ProofTree& p);

// Placeholder bindings of `q` read off the conclusion of `p`, keyed by the
// placeholder's source name.
std::map<std::string, Term> placeholder_bindings(const ProofTree& p,
                                                 const Query& q);

// Single-line JSON certificate:
// {"query", "goal", "bindings", "render", "tree"} in that order.
std::string serialize_proof(const ProofTree& p, const Query& q);

struct ProofDocument {
  std::string query;
  std::string goal;
  std::map<std::string, std::string> bindings;
  std::string render;
  ProofTree tree;
};

// Reads a certificate back. Instantiations are reconstructed by matching
// the named clauses of `kb` against the recorded conclusions; a node whose
// clause is unknown or does not match keeps an empty instantiation, which
// check_proof then rejects. Throws Error on malformed documents.
ProofDocument parse_proof_document(std::string_view json,
                                   const KnowledgeBase& kb);

}  // namespace ldlog

#endif  // LDLOG_PROOF_H_

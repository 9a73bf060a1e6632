// Single-field perturbations of valid proof trees, each paired with the
// checker verdict it must provoke.

#ifndef LDLOG_TESTS_SUPPORT_MUTATIONS_H_
#define LDLOG_TESTS_SUPPORT_MUTATIONS_H_

#include <string>
#include <vector>

#include "ldlog/proof.h"

namespace ldlog::testing {

struct Mutation {
  std::string description;
  ProofTree tree;
  CheckError::Reason expected;
  std::vector<std::size_t> expected_path;
};

std::vector<Mutation> single_field_mutations(const KnowledgeBase& kb,
                                             const ProofTree& valid);

}  // namespace ldlog::testing

#endif  // LDLOG_TESTS_SUPPORT_MUTATIONS_H_

#include "ldlog/proof.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "ldlog/builtin.h"
#include "ldlog/errors.h"
#include "ldlog/parser.h"
#include "ldlog/unify.h"

namespace ldlog {

bool same_premise(const Premise& a, const Premise& b) {
  if (a.index() != b.index()) return false;
  if (const auto* leaf = std::get_if<BuiltinLeaf>(&a)) {
    return *leaf == std::get<BuiltinLeaf>(b);
  }
  const ProofPtr& x = std::get<ProofPtr>(a);
  const ProofPtr& y = std::get<ProofPtr>(b);
  if (x == y) return true;
  if (!x || !y) return false;
  return *x == *y;
}

bool operator==(const ProofTree& a, const ProofTree& b) {
  if (a.clause_name != b.clause_name || !(a.conclusion == b.conclusion) ||
      !(a.instantiation == b.instantiation) ||
      a.premises.size() != b.premises.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.premises.size(); ++i) {
    if (!same_premise(a.premises[i], b.premises[i])) return false;
  }
  return true;
}

std::size_t proof_height(const ProofTree& p) {
  std::size_t below = 0;
  for (const Premise& premise : p.premises) {
    if (const auto* child = std::get_if<ProofPtr>(&premise); child && *child) {
      below = std::max(below, proof_height(**child));
    }
  }
  return below + 1;
}

const char* to_string(CheckError::Reason reason) {
  switch (reason) {
    case CheckError::Reason::kUnknownClause: return "UnknownClause";
    case CheckError::Reason::kHeadMismatch: return "HeadMismatch";
    case CheckError::Reason::kPremiseMismatch: return "PremiseMismatch";
    case CheckError::Reason::kBuiltinFalse: return "BuiltinFalse";
    case CheckError::Reason::kNonGroundConclusion: return "NonGroundConclusion";
  }
  return "CheckError";
}

std::string CheckError::message() const {
  std::ostringstream os;
  os << to_string(reason) << " at [";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) os << ".";
    os << path[i];
  }
  os << "]";
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

namespace {

class Checker {
 public:
  explicit Checker(const KnowledgeBase& kb) : kb_(kb) {}

  std::optional<CheckError> check(const ProofTree& p) {
    const Clause* clause = kb_.find(p.clause_name);
    if (!clause) return fail(CheckError::Reason::kUnknownClause, p.clause_name);
    if (!p.conclusion.is_pred() || !is_ground(p.conclusion)) {
      return fail(CheckError::Reason::kNonGroundConclusion,
                  to_string(p.conclusion));
    }
    Atom head = apply_subst(clause->head, p.instantiation);
    if (!(head == p.conclusion)) {
      return fail(CheckError::Reason::kHeadMismatch,
                  to_string(head) + " vs " + to_string(p.conclusion));
    }
    if (p.premises.size() != clause->body.size()) {
      return fail(CheckError::Reason::kPremiseMismatch,
                  "expected " + std::to_string(clause->body.size()) +
                      " premises, found " + std::to_string(p.premises.size()));
    }
    for (std::size_t i = 0; i < clause->body.size(); ++i) {
      Atom expected = apply_subst(clause->body[i], p.instantiation);
      const Premise& premise = p.premises[i];
      path_.push_back(i);
      if (expected.is_builtin()) {
        const auto* leaf = std::get_if<BuiltinLeaf>(&premise);
        if (!leaf || !(Atom(leaf->atom) == expected)) {
          return fail(CheckError::Reason::kPremiseMismatch,
                      "expected built-in " + to_string(expected));
        }
        bool holds = false;
        try {
          holds = eval_builtin(leaf->atom);
        } catch (const SolveError& e) {
          return fail(CheckError::Reason::kBuiltinFalse, e.what());
        }
        if (!holds) {
          return fail(CheckError::Reason::kBuiltinFalse, to_string(expected));
        }
      } else {
        const auto* child = std::get_if<ProofPtr>(&premise);
        if (!child || !*child || !((*child)->conclusion == expected)) {
          return fail(CheckError::Reason::kPremiseMismatch,
                      "expected premise " + to_string(expected));
        }
        if (auto err = check(**child)) return err;
      }
      path_.pop_back();
    }
    return std::nullopt;
  }

 private:
  CheckError fail(CheckError::Reason reason, std::string detail) const {
    return CheckError{path_, reason, std::move(detail)};
  }

  const KnowledgeBase& kb_;
  std::vector<std::size_t> path_;
};

void write_proof(std::ostream& os, const ProofTree& p) {
  os << p.clause_name;
  for (const Premise& premise : p.premises) {
    os << " ";
    if (const auto* leaf = std::get_if<BuiltinLeaf>(&premise)) {
      os << "(" << to_string(Atom(leaf->atom)) << ")";
      continue;
    }
    const ProofPtr& child = std::get<ProofPtr>(premise);
    if (!child) {
      os << "_";
    } else if (child->premises.empty()) {
      os << child->clause_name;
    } else {
      os << "(";
      write_proof(os, *child);
      os << ")";
    }
  }
}

Term pred_as_term(const PredAtom& p) { return Term::app(p.symbol, p.args); }

using Json = nlohmann::ordered_json;

Json tree_to_json(const ProofTree& p) {
  Json children = Json::array();
  for (const Premise& premise : p.premises) {
    if (const auto* leaf = std::get_if<BuiltinLeaf>(&premise)) {
      children.push_back(Json{{"builtin", to_string(Atom(leaf->atom))}});
    } else if (const ProofPtr& child = std::get<ProofPtr>(premise)) {
      children.push_back(tree_to_json(*child));
    }
  }
  return Json{{"clause", p.clause_name},
              {"conclusion", to_string(p.conclusion)},
              {"children", std::move(children)}};
}

// Terms in certificates are ground, so every bare identifier is a constant.
Term ground_term(const TermAst& t) {
  switch (t.kind) {
    case TermAst::Kind::kInt:
      return Term::integer(t.int_value);
    case TermAst::Kind::kStr:
      return Term::string(t.text);
    case TermAst::Kind::kIdent:
      if (is_placeholder_name(t.text)) {
        throw Error("certificate term contains placeholder " + t.text);
      }
      return Term::app(t.text);
    case TermAst::Kind::kApp: {
      std::vector<Term> args;
      for (const TermAst& a : t.args) args.push_back(ground_term(a));
      return Term::app(t.text, std::move(args));
    }
    default:
      throw Error("unexpected term in certificate: " + render_term(t));
  }
}

Atom atom_from_text(const std::string& text) {
  TermAst t = parse_term(text);
  if (t.kind == TermAst::Kind::kCmp) {
    return Atom::builtin(t.op, ground_term(t.args[0]), ground_term(t.args[1]));
  }
  if (t.kind != TermAst::Kind::kApp) {
    throw Error("certificate atom is not an application: " + text);
  }
  std::vector<Term> args;
  for (const TermAst& a : t.args) args.push_back(ground_term(a));
  return Atom::pred(t.text, std::move(args));
}

void push_atom_terms(const Atom& a, std::vector<Term>& out) {
  if (a.is_pred()) {
    out.push_back(pred_as_term(a.as_pred()));
  } else {
    out.push_back(a.as_builtin().lhs);
    out.push_back(a.as_builtin().rhs);
  }
}

Substitution recover_instantiation(const KnowledgeBase& kb,
                                   const std::string& clause_name,
                                   const Atom& conclusion,
                                   const std::vector<Premise>& premises) {
  const Clause* clause = kb.find(clause_name);
  if (!clause || clause->body.size() != premises.size()) return {};
  std::vector<Term> patterns;
  std::vector<Term> targets;
  push_atom_terms(clause->head, patterns);
  push_atom_terms(conclusion, targets);
  for (std::size_t i = 0; i < premises.size(); ++i) {
    push_atom_terms(clause->body[i], patterns);
    if (const auto* leaf = std::get_if<BuiltinLeaf>(&premises[i])) {
      push_atom_terms(Atom(leaf->atom), targets);
    } else {
      push_atom_terms(std::get<ProofPtr>(premises[i])->conclusion, targets);
    }
  }
  if (patterns.size() != targets.size()) return {};
  auto m = match_one_way(Term::app("", std::move(patterns)),
                         Term::app("", std::move(targets)));
  return m ? *m : Substitution{};
}

ProofPtr tree_from_json(const Json& j, const KnowledgeBase& kb, int depth) {
  if (depth > 10000) throw Error("certificate nested too deeply");
  if (!j.is_object() || !j.contains("clause") || !j.contains("conclusion") ||
      !j.contains("children") || !j["children"].is_array()) {
    throw Error("malformed proof tree node");
  }
  std::string name = j["clause"].get<std::string>();
  Atom conclusion = atom_from_text(j["conclusion"].get<std::string>());
  std::vector<Premise> premises;
  for (const Json& c : j["children"]) {
    if (c.is_object() && c.contains("builtin")) {
      Atom a = atom_from_text(c["builtin"].get<std::string>());
      if (!a.is_builtin()) throw Error("builtin premise is not a comparison");
      premises.push_back(BuiltinLeaf{a.as_builtin()});
    } else {
      premises.push_back(tree_from_json(c, kb, depth + 1));
    }
  }
  Substitution inst = recover_instantiation(kb, name, conclusion, premises);
  return std::make_shared<const ProofTree>(
      ProofTree{std::move(name), std::move(inst), std::move(conclusion),
                std::move(premises)});
}

}  // namespace

std::optional<CheckError> check_proof(const KnowledgeBase& kb,
                                      const ProofTree& p) {
  return Checker(kb).check(p);
}

std::string render_proof(const ProofTree& p) {
  std::ostringstream os;
  write_proof(os, p);
  return os.str();
}

std::map<std::string, Term> placeholder_bindings(const ProofTree& p,
                                                 const Query& q) {
  std::map<std::string, Term> out;
  if (!q.goal.is_pred() || !p.conclusion.is_pred()) return out;
  auto m = match_one_way(pred_as_term(q.goal.as_pred()),
                         pred_as_term(p.conclusion.as_pred()));
  if (!m) return out;
  for (const auto& [name, id] : q.placeholder_map) {
    if (const Term* t = m->lookup(VarKey::of_meta(id))) out.emplace(name, *t);
  }
  return out;
}

std::string serialize_proof(const ProofTree& p, const Query& q) {
  Json bindings = Json::object();
  for (const auto& [name, term] : placeholder_bindings(p, q)) {
    bindings[name] = to_string(term);
  }
  Json doc{{"query", q.name},
           {"goal", to_string(p.conclusion)},
           {"bindings", std::move(bindings)},
           {"render", render_proof(p)},
           {"tree", tree_to_json(p)}};
  return doc.dump();
}

ProofDocument parse_proof_document(std::string_view json,
                                   const KnowledgeBase& kb) {
  Json doc;
  try {
    doc = Json::parse(json);
  } catch (const Json::exception& e) {
    throw Error(std::string("invalid certificate JSON: ") + e.what());
  }
  try {
    for (const char* key : {"query", "goal", "bindings", "render", "tree"}) {
      if (!doc.contains(key)) throw Error(std::string("certificate lacks ") + key);
    }
    std::map<std::string, std::string> bindings;
    for (const auto& [name, value] : doc["bindings"].items()) {
      bindings.emplace(name, value.get<std::string>());
    }
    ProofPtr tree = tree_from_json(doc["tree"], kb, 0);
    return ProofDocument{doc["query"].get<std::string>(),
                         doc["goal"].get<std::string>(), std::move(bindings),
                         doc["render"].get<std::string>(), *tree};
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace ldlog

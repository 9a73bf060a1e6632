#include "cli.h"

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ldlog/elaborator.h"
#include "ldlog/errors.h"
#include "ldlog/forward_chain.h"
#include "ldlog/parser.h"
#include "ldlog/proof.h"

namespace ldlog::cli {
namespace {

std::string goal_text(const Query& q, const Substitution& bindings) {
  return to_string(apply_subst(q.goal, bindings));
}

std::string bindings_text(const Query& q, const Substitution& bindings) {
  if (q.placeholder_map.empty()) return {};
  std::string out = "  [";
  bool first = true;
  for (const auto& [name, id] : q.placeholder_map) {
    if (!first) out += ", ";
    first = false;
    const Term* t = bindings.lookup(VarKey::of_meta(id));
    out += name + " := " + (t ? to_string(*t) : name);
  }
  return out + "]";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string file;
  std::vector<std::string> libs;
  std::size_t max_depth = 6;
  bool all = false;
  bool json = false;
  bool check = false;
  bool oracle = false;
};

QueryResult run_oracle(const Query& q, const std::set<Atom>& fixpoint,
                       bool all) {
  QueryResult r(q);
  r.from_oracle = true;
  for (const Substitution& s : oracle_answers(fixpoint, q.goal)) {
    if (!all && !r.oracle_bindings.empty()) break;
    r.oracle_bindings.push_back(s);
  }
  r.status = r.oracle_bindings.empty() ? QueryResult::Status::kUnprovable
                                       : QueryResult::Status::kSolved;
  return r;
}

QueryResult run_solver(const KnowledgeBase& kb, const Query& q,
                       const SolverConfig& cfg) {
  QueryResult r(q);
  r.depth = cfg.max_depth;
  try {
    r.solutions = solve(kb, q, cfg);
    r.status = r.solutions.empty() ? QueryResult::Status::kUnprovable
                                   : QueryResult::Status::kSolved;
  } catch (const SolveError& e) {
    r.status = QueryResult::Status::kError;
    r.error = e.what();
  }
  return r;
}

int execute(const Options& opt, std::ostream& out, std::ostream& err) {
  KnowledgeBase library;
  ElaboratedProgram program;
  try {
    for (const std::string& path : opt.libs) {
      try {
        library = elaborate_library(parse_program(read_file(path)), &library);
      } catch (const Error& e) {
        throw Error(path + ": " + e.what());
      }
    }
    try {
      program = elaborate(parse_program(read_file(opt.file)),
                          opt.libs.empty() ? nullptr : &library);
    } catch (const Error& e) {
      throw Error(opt.file + ": " + e.what());
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  std::vector<QueryResult> results;
  if (opt.oracle) {
    std::set<Atom> fixpoint;
    try {
      fixpoint = saturate(program.kb);
    } catch (const UnsafeRule& e) {
      err << opt.file << ": " << e.what() << "\n";
      return kInputError;
    }
    for (const Query& q : program.queries) {
      results.push_back(run_oracle(q, fixpoint, opt.all));
    }
  } else {
    SolverConfig cfg;
    cfg.max_depth = opt.max_depth;
    if (opt.all) cfg.solution_limit.reset();
    for (const Query& q : program.queries) {
      results.push_back(run_solver(program.kb, q, cfg));
    }
  }

  std::size_t checked = 0;
  bool check_failed = false;
  auto verify = [&](const QueryResult& r, const Solution& s,
                    const std::string* document) {
    ++checked;
    if (auto e = check_proof(program.kb, s.proof)) {
      err << r.query.name << ": proof rejected: " << e->message() << "\n";
      check_failed = true;
      return;
    }
    if (!document) return;
    try {
      ProofDocument doc = parse_proof_document(*document, program.kb);
      if (!(doc.tree == s.proof)) {
        err << r.query.name << ": certificate does not round-trip\n";
        check_failed = true;
      } else if (auto e = check_proof(program.kb, doc.tree)) {
        err << r.query.name << ": certificate rejected: " << e->message() << "\n";
        check_failed = true;
      }
    } catch (const Error& e) {
      err << r.query.name << ": unreadable certificate: " << e.what() << "\n";
      check_failed = true;
    }
  };

  bool all_solved = true;
  if (opt.json) {
    for (const QueryResult& r : results) {
      if (r.status == QueryResult::Status::kError) {
        err << r.query.name << ": " << r.error << "\n";
      } else if (r.status == QueryResult::Status::kUnprovable) {
        err << r.query.name << ": unprovable (depth " << r.depth << ")\n";
      }
      all_solved = all_solved && r.status == QueryResult::Status::kSolved;
      for (const Solution& s : r.solutions) {
        std::string doc = serialize_proof(s.proof, r.query);
        out << doc << "\n";
        if (opt.check) verify(r, s, &doc);
      }
    }
  } else {
    out << format_report(results);
    for (const QueryResult& r : results) {
      all_solved = all_solved && r.status == QueryResult::Status::kSolved;
      if (opt.check) {
        for (const Solution& s : r.solutions) verify(r, s, nullptr);
      }
    }
  }

  if (opt.check) {
    if (check_failed) return kCheckFailure;
    (opt.json ? err : out) << "checked " << checked << " proofs: all valid\n";
  }
  return all_solved ? kAllSolved : kSomeUnsolved;
}

}  // namespace

std::string format_report(const std::vector<QueryResult>& results) {
  if (results.empty()) return "no queries.\n";
  std::ostringstream os;
  for (const QueryResult& r : results) {
    const Query& q = r.query;
    switch (r.status) {
      case QueryResult::Status::kSolved:
        if (r.from_oracle) {
          for (const Substitution& b : r.oracle_bindings) {
            os << q.name << ": " << goal_text(q, b) << bindings_text(q, b)
               << "  entailed (oracle)\n";
          }
        } else {
          for (const Solution& s : r.solutions) {
            os << q.name << ": " << goal_text(q, s.bindings)
               << bindings_text(q, s.bindings)
               << "  proof: " << render_proof(s.proof) << "\n";
          }
        }
        break;
      case QueryResult::Status::kUnprovable:
        os << q.name << ": " << to_string(q.goal);
        if (r.from_oracle) {
          os << "  not entailed (oracle)\n";
        } else {
          os << "  unprovable (depth " << r.depth << ")\n";
        }
        break;
      case QueryResult::Status::kError:
        os << q.name << ": " << to_string(q.goal) << "  error: " << r.error << "\n";
        break;
    }
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Certifying Datalog engine"};
  app.require_subcommand(1);
  Options opt;
  CLI::App* cmd = app.add_subcommand("run", "Solve every query of a program");
  cmd->add_option("file", opt.file, "Program source (.ldl)")->required();
  cmd->add_option("--lib", opt.libs, "Axiom library file; may be repeated")
      ->take_all();
  cmd->add_option("--max-depth", opt.max_depth, "Maximum proof height")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--all", opt.all, "Enumerate every solution");
  auto* json = cmd->add_flag("--json", opt.json,
                             "Emit one proof certificate per line");
  auto* check = cmd->add_flag("--check", opt.check,
                              "Re-check every emitted proof");
  cmd->add_flag("--oracle", opt.oracle,
                "Answer with the forward-chaining oracle instead")
      ->excludes(json)
      ->excludes(check);

  std::vector<const char*> argv{"ldlog"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kAllSolved : kInputError;
  }
  return execute(opt, out, err);
}

}  // namespace ldlog::cli

#include "ldlog/solver.h"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "ldlog/builtin.h"
#include "ldlog/errors.h"
#include "ldlog/unify.h"

namespace ldlog {
namespace {

Term rename_term(const Term& t, const std::function<std::string(const std::string&)>& f) {
  if (t.is_var()) return Term::var(f(t.as_var().name));
  if (!t.is_app()) return t;
  std::vector<Term> args;
  args.reserve(t.as_app().args.size());
  for (const Term& a : t.as_app().args) args.push_back(rename_term(a, f));
  return Term::app(t.as_app().constructor, std::move(args));
}

Atom rename_atom(const Atom& a, const std::function<std::string(const std::string&)>& f) {
  if (a.is_builtin()) {
    const BuiltinAtom& b = a.as_builtin();
    return Atom::builtin(b.op, rename_term(b.lhs, f), rename_term(b.rhs, f));
  }
  std::vector<Term> args;
  for (const Term& t : a.as_pred().args) args.push_back(rename_term(t, f));
  return Atom::pred(a.as_pred().symbol, std::move(args));
}

// Variant-canonical form: variables and metavariables renamed to #0, #1, ...
// in order of first occurrence.
class Canonicalizer {
 public:
  Atom atom(const Atom& a) {
    std::vector<Term> args;
    for (const Term& t : a.as_pred().args) args.push_back(term(t));
    return Atom::pred(a.as_pred().symbol, std::move(args));
  }

 private:
  Term term(const Term& t) {
    if (t.is_variable()) {
      auto [it, inserted] = names_.emplace(VarKey::of(t), names_.size());
      return Term::var("#" + std::to_string(it->second));
    }
    if (!t.is_app()) return t;
    std::vector<Term> args;
    for (const Term& a : t.as_app().args) args.push_back(term(a));
    return Term::app(t.as_app().constructor, std::move(args));
  }

  std::map<VarKey, std::size_t> names_;
};

Atom canonical(const Atom& a) { return Canonicalizer().atom(a); }

bool substitution_ground(const Substitution& s) {
  for (const auto& [k, v] : s) {
    if (!is_ground(v)) return false;
  }
  return true;
}

bool tree_ground(const ProofTree& p) {
  if (!is_ground(p.conclusion) || !substitution_ground(p.instantiation)) return false;
  for (const Premise& premise : p.premises) {
    if (const auto* leaf = std::get_if<BuiltinLeaf>(&premise)) {
      if (!is_ground(Atom(leaf->atom))) return false;
    } else if (!tree_ground(*std::get<ProofPtr>(premise))) {
      return false;
    }
  }
  return true;
}

Substitution map_values(const Substitution& s,
                        const std::function<Term(const Term&)>& f) {
  Substitution out;
  for (const auto& [k, v] : s) out.set(k, f(v));
  return out;
}

ProofPtr subst_tree(const ProofPtr& p, const Substitution& s) {
  std::vector<Premise> premises;
  for (const Premise& premise : p->premises) {
    if (const auto* leaf = std::get_if<BuiltinLeaf>(&premise)) {
      premises.push_back(BuiltinLeaf{apply_subst(Atom(leaf->atom), s).as_builtin()});
    } else {
      premises.push_back(subst_tree(std::get<ProofPtr>(premise), s));
    }
  }
  return std::make_shared<const ProofTree>(ProofTree{
      p->clause_name,
      map_values(p->instantiation, [&](const Term& t) { return apply_subst(t, s); }),
      apply_subst(p->conclusion, s), std::move(premises)});
}

ProofPtr rename_tree(const ProofPtr& p,
                     const std::function<std::string(const std::string&)>& f) {
  std::vector<Premise> premises;
  for (const Premise& premise : p->premises) {
    if (const auto* leaf = std::get_if<BuiltinLeaf>(&premise)) {
      premises.push_back(BuiltinLeaf{rename_atom(Atom(leaf->atom), f).as_builtin()});
    } else {
      premises.push_back(rename_tree(std::get<ProofPtr>(premise), f));
    }
  }
  return std::make_shared<const ProofTree>(ProofTree{
      p->clause_name,
      map_values(p->instantiation, [&](const Term& t) { return rename_term(t, f); }),
      rename_atom(p->conclusion, f), std::move(premises)});
}

std::set<std::string> clause_vars(const Clause& c) {
  std::set<VarKey> keys = free_vars(c.head);
  for (const Atom& b : c.body) {
    for (const VarKey& k : free_vars(b)) keys.insert(k);
  }
  std::set<std::string> names;
  for (const VarKey& k : keys) {
    if (!k.is_meta) names.insert(k.name);
  }
  return names;
}

// An answer of a subgoal: the instantiated goal and its proof.
struct Answer {
  Atom instance;
  ProofPtr proof;
  bool ground;
};

using AnswerList = std::vector<Answer>;

class Search {
 public:
  Search(const KnowledgeBase& kb, const SolverConfig& cfg) : cfg_(cfg) {
    for (const Clause& c : kb.clauses()) {
      if (!kb.is_active(c.name) || !c.head.is_pred()) continue;
      const PredAtom& h = c.head.as_pred();
      index_[{h.symbol, h.args.size()}].push_back(Entry{&c, clause_vars(c)});
    }
  }

  // Answers of `goal` at `depth`. With memoization the levels 1, 2, ... are
  // computed for every goal met so far; once a level reproduces the one
  // below it for all of them, with ground answers only, every deeper level
  // would reproduce it too, so the search stops there.
  std::shared_ptr<const AnswerList> root_answers(const Atom& goal, std::size_t depth) {
    if (!cfg_.memoize) return answers(goal, depth);
    note(goal);
    for (std::size_t level = 1; level < depth; ++level) {
      bool stable = level >= 2;
      for (std::size_t i = 0; i < goals_.size(); ++i) {
        Atom g = goals_[i];
        auto now = answers(g, level);
        if (stable) stable = same_ground(*now, *answers(g, level - 1));
      }
      if (stable) return answers(goal, level);
    }
    return answers(goal, depth);
  }

  std::shared_ptr<const AnswerList> answers(const Atom& goal, std::size_t depth) {
    if (depth == 0) return empty_;
    std::pair<std::size_t, Atom> key{depth, goal};
    if (cfg_.memoize) {
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
      note(goal);
    }
    // Ground answers already provable one level down keep their proof, so
    // every answer carries a proof of minimal height.
    std::map<Atom, const Answer*> shallower;
    std::shared_ptr<const AnswerList> below;
    if (cfg_.memoize && depth > 1) {
      below = answers(goal, depth - 1);
      for (const Answer& a : *below) {
        if (a.ground) shallower.emplace(a.instance, &a);
      }
    }
    auto out = std::make_shared<AnswerList>();
    std::set<Atom> seen;
    const PredAtom& g = goal.as_pred();
    auto idx = index_.find({g.symbol, g.args.size()});
    if (idx != index_.end()) {
      for (const Entry& entry : idx->second) {
        std::uint64_t tick = ++tick_;
        Clause c = standardize_apart(*entry.clause, tick);
        auto s0 = unify_atoms(goal, c.head);
        if (!s0) continue;
        std::vector<Premise> premises(c.body.size());
        std::vector<bool> premise_ground(c.body.size(), true);
        std::vector<std::size_t> pending;
        Frame frame{c, depth - 1, premises, premise_ground, pending,
                    [&](const Substitution& s) {
                      emit(goal, entry, tick, c, s, premises, premise_ground,
                           shallower, seen, *out);
                    }};
        conj(frame, 0, *s0);
      }
    }
    if (cfg_.memoize) memo_.emplace(std::move(key), out);
    return out;
  }

  // Renames an answer's variables so that it shares none with the caller.
  Answer fresh(const Answer& a) {
    if (a.ground) return a;
    std::map<std::string, std::string> renaming;
    auto f = [&](const std::string& name) {
      auto [it, inserted] = renaming.emplace(name, std::string());
      if (inserted) it->second = "~" + std::to_string(++fresh_);
      return it->second;
    };
    Atom instance = rename_atom(a.instance, f);
    return Answer{std::move(instance), rename_tree(a.proof, f), false};
  }

 private:
  struct Entry {
    const Clause* clause;
    std::set<std::string> vars;
  };

  void note(const Atom& goal) {
    if (seen_goals_.insert(goal).second) goals_.push_back(goal);
  }

  // Ground answers of a level that only reuses the level below share its
  // proof objects.
  static bool same_ground(const AnswerList& a, const AnswerList& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].ground || a[i].proof != b[i].proof) return false;
    }
    return true;
  }

  struct Frame {
    const Clause& clause;
    std::size_t depth;
    std::vector<Premise>& premises;
    std::vector<bool>& premise_ground;
    std::vector<std::size_t>& pending;
    std::function<void(const Substitution&)> done;
  };

  void conj(Frame& f, std::size_t i, const Substitution& s) {
    const std::vector<Atom>& body = f.clause.body;
    if (i == body.size()) {
      for (std::size_t idx : f.pending) {
        Atom b = apply_subst(body[idx], s);
        if (!is_ground(b)) {
          throw SolveError(SolveError::Kind::kFlounderedBuiltin, to_string(b));
        }
        if (!eval_builtin(b.as_builtin())) return;
        f.premises[idx] = BuiltinLeaf{b.as_builtin()};
      }
      f.done(s);
      return;
    }
    Atom b = apply_subst(body[i], s);
    if (b.is_builtin()) {
      if (is_ground(b)) {
        if (!eval_builtin(b.as_builtin())) return;
        f.premises[i] = BuiltinLeaf{b.as_builtin()};
        conj(f, i + 1, s);
        return;
      }
      if (!cfg_.builtin_delay) {
        throw SolveError(SolveError::Kind::kFlounderedBuiltin, to_string(b));
      }
      f.pending.push_back(i);
      conj(f, i + 1, s);
      f.pending.pop_back();
      return;
    }
    std::shared_ptr<const AnswerList> list = answers(canonical(b), f.depth);
    for (const Answer& stored : *list) {
      Answer a = fresh(stored);
      auto s2 = unify_atoms(b, a.instance, s);
      if (!s2) continue;
      f.premises[i] = a.proof;
      f.premise_ground[i] = a.ground;
      conj(f, i + 1, *s2);
    }
  }

  void emit(const Atom& goal, const Entry& entry, std::uint64_t tick,
            const Clause& renamed, const Substitution& s,
            const std::vector<Premise>& premises,
            const std::vector<bool>& premise_ground,
            const std::map<Atom, const Answer*>& shallower,
            std::set<Atom>& seen, AnswerList& out) {
    Atom instance = apply_subst(goal, s);
    if (!seen.insert(canonical(instance)).second) return;
    if (auto it = shallower.find(instance); it != shallower.end()) {
      out.push_back(*it->second);
      return;
    }
    Substitution inst;
    for (const std::string& v : entry.vars) {
      inst.set(VarKey::of_var(v),
               apply_subst(Term::var(v + "#" + std::to_string(tick)), s));
    }
    bool ground = is_ground(instance) && substitution_ground(inst);
    std::vector<Premise> resolved = premises;
    for (std::size_t i = 0; i < resolved.size(); ++i) {
      if (premise_ground[i]) continue;
      if (auto* child = std::get_if<ProofPtr>(&resolved[i])) {
        *child = subst_tree(*child, s);
        ground = ground && tree_ground(**child);
      }
    }
    auto proof = std::make_shared<const ProofTree>(
        ProofTree{entry.clause->name, std::move(inst),
                  apply_subst(renamed.head, s), std::move(resolved)});
    out.push_back(Answer{std::move(instance), std::move(proof), ground});
  }

  const SolverConfig& cfg_;
  std::map<std::pair<std::string, std::size_t>, std::vector<Entry>> index_;
  std::map<std::pair<std::size_t, Atom>, std::shared_ptr<const AnswerList>> memo_;
  std::shared_ptr<const AnswerList> empty_ = std::make_shared<AnswerList>();
  std::set<Atom> seen_goals_;
  std::vector<Atom> goals_;
  std::uint64_t tick_ = 0;
  std::uint64_t fresh_ = 0;
};

}  // namespace

Clause standardize_apart(const Clause& c, std::uint64_t tick) {
  std::string suffix = "#" + std::to_string(tick);
  auto f = [&](const std::string& name) { return name + suffix; };
  Clause out{c.name, rename_atom(c.head, f), {}, c.origin};
  out.body.reserve(c.body.size());
  for (const Atom& b : c.body) out.body.push_back(rename_atom(b, f));
  return out;
}

namespace {

std::vector<Solution> collect(const KnowledgeBase& kb, const Query& q,
                              const SolverConfig& cfg) {
  Search search(kb, cfg);
  std::vector<Solution> out;
  std::set<Substitution> seen;
  auto list = search.root_answers(canonical(q.goal), cfg.max_depth);
  for (const Answer& stored : *list) {
    if (cfg.solution_limit && out.size() >= *cfg.solution_limit) break;
    Answer a = search.fresh(stored);
    auto s = unify_atoms(q.goal, a.instance);
    if (!s) continue;
    Substitution bindings;
    for (const auto& [name, id] : q.placeholder_map) {
      VarKey key = VarKey::of_meta(id);
      bindings.set(key, apply_subst(Term::meta(id, name), *s));
    }
    ProofPtr proof = a.ground ? a.proof : subst_tree(a.proof, *s);
    if (!substitution_ground(bindings) || (!a.ground && !tree_ground(*proof))) {
      throw SolveError(SolveError::Kind::kNonGroundAnswer,
                       to_string(proof->conclusion));
    }
    if (!seen.insert(bindings).second) continue;
    out.push_back(Solution{std::move(bindings), *proof});
  }
  return out;
}

}  // namespace

std::vector<Solution> solve(const KnowledgeBase& kb, const Query& q,
                            const SolverConfig& cfg) {
  if (cfg.max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  if (cfg.solution_limit && *cfg.solution_limit < 1) {
    throw std::invalid_argument("solution_limit must be positive");
  }
  if (!q.goal.is_pred()) {
    throw SolveError(SolveError::Kind::kBuiltinNotUnifiable, to_string(q.goal));
  }
  std::vector<Solution> out = collect(kb, q, cfg);
  if (cfg.memoize || out.empty()) return out;
  // Plain search reports the first proof at the full bound; re-run with
  // growing bounds so that each answer gets its proof of minimal height.
  std::map<Substitution, ProofTree*> pending;
  for (Solution& s : out) pending.emplace(s.bindings, &s.proof);
  SolverConfig shallow = cfg;
  shallow.solution_limit.reset();
  for (std::size_t depth = 1; depth < cfg.max_depth && !pending.empty(); ++depth) {
    shallow.max_depth = depth;
    for (Solution& s : collect(kb, q, shallow)) {
      if (auto it = pending.find(s.bindings); it != pending.end()) {
        *it->second = std::move(s.proof);
        pending.erase(it);
      }
    }
  }
  return out;
}

}  // namespace ldlog

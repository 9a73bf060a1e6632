#include "ldlog/forward_chain.h"

#include <map>
#include <vector>

#include "ldlog/builtin.h"
#include "ldlog/errors.h"

namespace ldlog {
namespace {

// Kept separate from the unifier on purpose: the oracle only ever matches
// clause patterns against ground atoms.
bool match(const Term& pattern, const Term& ground, Substitution& s) {
  if (pattern.is_variable()) {
    VarKey key = VarKey::of(pattern);
    if (const Term* bound = s.lookup(key)) return *bound == ground;
    s.set(key, ground);
    return true;
  }
  if (pattern.is_app() && ground.is_app()) {
    const App& p = pattern.as_app();
    const App& g = ground.as_app();
    if (p.constructor != g.constructor || p.args.size() != g.args.size()) {
      return false;
    }
    for (std::size_t i = 0; i < p.args.size(); ++i) {
      if (!match(p.args[i], g.args[i], s)) return false;
    }
    return true;
  }
  return pattern == ground;
}

bool match_atom(const PredAtom& pattern, const PredAtom& ground, Substitution& s) {
  if (pattern.symbol != ground.symbol || pattern.args.size() != ground.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!match(pattern.args[i], ground.args[i], s)) return false;
  }
  return true;
}

void check_safe(const Clause& c) {
  std::set<VarKey> bound;
  for (const Atom& b : c.body) {
    if (b.is_pred()) {
      for (const VarKey& k : free_vars(b)) bound.insert(k);
    }
  }
  auto covered = [&](const Atom& a) {
    for (const VarKey& k : free_vars(a)) {
      if (bound.count(k) == 0) return false;
    }
    return true;
  };
  if (!covered(c.head)) throw UnsafeRule(c.name);
  for (const Atom& b : c.body) {
    if (b.is_builtin() && !covered(b)) throw UnsafeRule(c.name);
  }
}

class Saturator {
 public:
  explicit Saturator(const KnowledgeBase& kb) {
    for (const Clause& c : kb.clauses()) {
      if (!kb.is_active(c.name)) continue;
      check_safe(c);
      clauses_.push_back(&c);
    }
  }

  std::set<Atom> run() {
    std::set<Atom> known;
    bool changed = true;
    while (changed) {
      changed = false;
      // Each pass derives from the atoms known at its start.
      std::map<std::string, std::vector<const PredAtom*>> by_symbol;
      for (const Atom& a : known) by_symbol[a.as_pred().symbol].push_back(&a.as_pred());
      std::vector<Atom> derived;
      for (const Clause* c : clauses_) {
        join(*c, 0, Substitution{}, by_symbol, derived);
      }
      for (Atom& a : derived) {
        if (known.insert(std::move(a)).second) changed = true;
      }
    }
    return known;
  }

 private:
  void join(const Clause& c, std::size_t i, const Substitution& s,
            const std::map<std::string, std::vector<const PredAtom*>>& by_symbol,
            std::vector<Atom>& out) {
    if (i == c.body.size()) {
      for (const Atom& b : c.body) {
        if (b.is_builtin() && !eval_builtin(b.as_builtin(), s)) return;
      }
      out.push_back(apply_subst(c.head, s));
      return;
    }
    const Atom& b = c.body[i];
    if (b.is_builtin()) {
      join(c, i + 1, s, by_symbol, out);
      return;
    }
    auto it = by_symbol.find(b.as_pred().symbol);
    if (it == by_symbol.end()) return;
    for (const PredAtom* fact : it->second) {
      Substitution extended = s;
      if (match_atom(b.as_pred(), *fact, extended)) {
        join(c, i + 1, extended, by_symbol, out);
      }
    }
  }

  std::vector<const Clause*> clauses_;
};

}  // namespace

std::set<Atom> saturate(const KnowledgeBase& kb) { return Saturator(kb).run(); }

bool oracle_entails(const KnowledgeBase& kb, const Atom& atom) {
  return saturate(kb).count(atom) > 0;
}

std::set<Substitution> oracle_answers(const std::set<Atom>& fixpoint,
                                      const Atom& goal) {
  std::set<Substitution> out;
  if (!goal.is_pred()) return out;
  for (const Atom& a : fixpoint) {
    Substitution s;
    if (!match_atom(goal.as_pred(), a.as_pred(), s)) continue;
    Substitution metas;
    for (const auto& [k, v] : s) {
      if (k.is_meta) metas.set(k, v);
    }
    out.insert(std::move(metas));
  }
  return out;
}

std::set<Substitution> oracle_answers(const KnowledgeBase& kb, const Atom& goal) {
  return oracle_answers(saturate(kb), goal);
}

}  // namespace ldlog

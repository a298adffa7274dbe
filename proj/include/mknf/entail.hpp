#pragma once

#include <cstdint>
#include <vector>

#include "mknf/formula.hpp"
#include "mknf/kb.hpp"

namespace mknf {

// Classical propositional entailment by exhaustive truth-table sweep over
// the atoms mentioned in the query. Throws SignatureTooLarge past the cap.
bool entails(const std::vector<FormulaPtr>& premises, const FormulaPtr& conclusion,
             int max_atoms = 20);

// True iff some total assignment satisfies every premise.
bool consistent(const std::vector<FormulaPtr>& premises, int max_atoms = 20);

struct Clause {
  AtomSet pos;
  AtomSet neg;
};

// Equivalence-preserving clausification: negation normal form, then
// distribution. No definitional variables, so the signature stays fixed.
std::vector<Clause> clausify(const FormulaPtr& f);

// Unit-propagating backtracking satisfiability over clause sets.
bool dpll_sat(std::vector<Clause> clauses);

// Same contract as entails(), via clausification + search. No atom cap.
bool entails_fast(const std::vector<FormulaPtr>& premises, const FormulaPtr& conclusion);

bool consistent_fast(const std::vector<FormulaPtr>& premises);

// Consequence oracle over a fixed knowledge base: answers OB-queries, i.e.
// ontology plus positive units `pos` plus negative units `neg`, quantified
// over sig_full. Uses the truth-table sweep up to `brute_cap` atoms and the
// clausal search beyond it.
class Oracle {
 public:
  explicit Oracle(const KnowledgeBase& kb, int brute_cap = 20);

  bool consistent(AtomSet pos, AtomSet neg) const;
  // Atoms a with ontology + pos |= a.
  AtomSet entailed(AtomSet pos) const;
  // Atoms a with ontology + pos + {~b | b in neg} |= ~a.
  AtomSet refuted(AtomSet pos, AtomSet neg) const;

 private:
  std::vector<std::uint64_t> sat_assignments(AtomSet pos, AtomSet neg) const;

  int n_;
  bool brute_;
  AtomSet all_;
  std::vector<std::uint64_t> ont_sat_;                // brute path, 2^n bits
  std::vector<std::vector<std::uint64_t>> atom_true_; // per-atom assignment masks
  std::vector<Clause> ont_clauses_;                   // search path
};

}  // namespace mknf

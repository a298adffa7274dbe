#pragma once

#include <random>
#include <string>
#include <vector>

#include "mknf/kb.hpp"
#include "mknf/lattice.hpp"

namespace mknf::testsupport {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng); }
  bool coin() { return below(2) == 1; }
  std::uint64_t word() { return eng(); }
};

inline AtomSet random_subset(Rng& rng, AtomSet universe) {
  return AtomSet{rng.word() & universe.bits};
}

// Random ground KB: 2..8 atoms, up to 12 rules with bodies of up to two
// positive and two negative atoms, and up to 4 random ontology clauses of
// up to 3 literals.
inline KnowledgeBase random_kb(Rng& rng) {
  int n = 2 + rng.below(7);
  SymbolTable symbols;
  for (int i = 0; i < n; ++i) symbols.intern(std::string(1, char('a' + i)));

  std::vector<Rule> rules;
  int n_rules = 1 + rng.below(12);
  for (int i = 0; i < n_rules; ++i) {
    Rule r{rng.below(n), {}, {}};
    int np = rng.below(3), nn = rng.below(3);
    for (int k = 0; k < np; ++k) r.body_pos |= AtomSet::single(rng.below(n));
    for (int k = 0; k < nn; ++k) r.body_neg |= AtomSet::single(rng.below(n));
    rules.push_back(r);
  }

  std::vector<FormulaPtr> ontology;
  int n_clauses = rng.below(5);
  for (int i = 0; i < n_clauses; ++i) {
    FormulaPtr clause;
    int width = 1 + rng.below(3);
    for (int k = 0; k < width; ++k) {
      FormulaPtr lit = Formula::var(rng.below(n));
      if (rng.coin()) lit = Formula::negate(std::move(lit));
      clause = clause ? Formula::disj(std::move(clause), std::move(lit)) : std::move(lit);
    }
    ontology.push_back(std::move(clause));
  }
  return make_kb(std::move(symbols), std::move(ontology), std::move(rules));
}

inline Tetra<AtomSet> random_tetra(Rng& rng, AtomSet universe) {
  return {random_subset(rng, universe), random_subset(rng, universe),
          random_subset(rng, universe), random_subset(rng, universe)};
}

// Random recurrent-shaped element (t, comp p, comp t, p).
inline Tetra<AtomSet> random_shaped(Rng& rng, const PowersetLattice& l) {
  Bi<AtomSet> ap{random_subset(rng, l.universe), random_subset(rng, l.universe)};
  return to_tetra(l, ap);
}

// Random pair x precision-below y: t and f grow, u and p shrink.
inline std::pair<Tetra<AtomSet>, Tetra<AtomSet>> random_prec_pair(Rng& rng, AtomSet universe) {
  Tetra<AtomSet> x = random_tetra(rng, universe);
  Tetra<AtomSet> y{x.t | random_subset(rng, universe), x.f | random_subset(rng, universe),
                   x.u & random_subset(rng, universe), x.p & random_subset(rng, universe)};
  return {x, y};
}

}  // namespace mknf::testsupport

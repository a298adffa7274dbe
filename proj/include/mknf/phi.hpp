#pragma once

#include <optional>
#include <string>

#include "mknf/aft.hpp"
#include "mknf/entail.hpp"
#include "mknf/kb.hpp"

namespace mknf {

// Selector of candidate false-atom subsets B used by extract0. Every
// strategy is subset-monotone in F. `Empty` yields no candidate at all;
// `None` yields only the empty set, so B = {} inferences survive.
struct FilterStrategy {
  enum class Kind { Empty, None, Singletons, BoundedSubsets, Powerset };

  Kind kind = Kind::Singletons;
  int bound = 0;  // only for BoundedSubsets

  static FilterStrategy empty() { return {Kind::Empty, 0}; }
  static FilterStrategy none() { return {Kind::None, 0}; }
  static FilterStrategy singletons() { return {Kind::Singletons, 0}; }
  static FilterStrategy bounded(int k) { return {Kind::BoundedSubsets, k}; }
  static FilterStrategy powerset() { return {Kind::Powerset, 0}; }

  // Parses none|empty|singletons|subsets:K|powerset.
  static std::optional<FilterStrategy> parse(const std::string& name);
  std::string name() const;

  // Candidate sets in size-then-lex order (lex over ascending atom ids).
  template <class Fn>
  void for_each_candidate(AtomSet f, Fn&& fn) const {
    switch (kind) {
      case Kind::Empty:
        return;
      case Kind::None:
        fn(AtomSet::none());
        return;
      case Kind::Singletons:
        fn(AtomSet::none());
        f.for_each([&](AtomId a) { fn(AtomSet::single(a)); });
        return;
      case Kind::BoundedSubsets:
      case Kind::Powerset: {
        int max_size = kind == Kind::Powerset ? f.size() : bound;
        for (int s = 0; s <= max_size; ++s)
          for_each_subset_of_size(f, s, std::forward<Fn>(fn));
        return;
      }
    }
  }

 private:
  template <class Fn>
  static void for_each_subset_of_size(AtomSet f, int s, Fn&& fn) {
    std::uint64_t rest = f.bits;
    std::uint64_t q = 0;
    for (;;) {
      if (std::popcount(q) == s) fn(AtomSet{q});
      if (q == rest) break;
      q = (q - rest) & rest;
    }
  }
};

struct PhiConfig {
  FilterStrategy filter = FilterStrategy::singletons();
  // Baseline mode: extract1 is disabled and extract0 is restricted to B = {}.
  bool legacy_mode = false;
};

struct ModelVerdict {
  bool subset = false;      // t <= p
  bool fixpoint = false;    // recurrent-shaped lift is a stable fixpoint
  bool consistent = false;  // OB over the unblocked upper closure is consistent
  bool model() const { return subset && fixpoint && consistent; }
};

// The recurrent approximator for ground hybrid knowledge bases, bound to one
// KB and configuration. Holds the consequence oracle; all calls are const
// and side-effect free.
class PhiOperator {
 public:
  PhiOperator(const KnowledgeBase& kb, PhiConfig cfg);

  // KA-atoms entailed by the ontology plus t.
  AtomSet add0(AtomSet t) const;
  // Heads of rules whose positive body lies in t and negative body misses p.
  AtomSet add1(AtomSet t, AtomSet p) const;
  // KA-atoms a with some admissible B <= f witnessing OB{t, B} |= ~a,
  // guarded by consistency of OB{p, B}.
  AtomSet extract0(AtomSet t, AtomSet f, AtomSet p) const;
  // Positive-body atoms whose rule has a false head, fully false negative
  // body, and all other positive atoms true.
  AtomSet extract1(AtomSet t, AtomSet f) const;

  Tetra<AtomSet> operator()(const Tetra<AtomSet>& x) const;

  // Least fixpoint of X -> add0(X) | add1(X, t): the upper bound of what the
  // rules can derive when only t blocks them; extraction plays no role.
  AtomSet upper_closure(AtomSet t) const;

  const KnowledgeBase& kb() const { return *kb_; }
  const PhiConfig& config() const { return cfg_; }
  const Oracle& oracle() const { return oracle_; }
  const PowersetLattice& ka_lattice() const { return ka_lat_; }

  TetraOp<PowersetLattice> as_op() const {
    return [this](const Tetra<AtomSet>& x) { return (*this)(x); };
  }

 private:
  const KnowledgeBase* kb_;
  PhiConfig cfg_;
  Oracle oracle_;
  PowersetLattice ka_lat_;
};

// Model check: t <= p, the recurrent-shaped lift is a stable fixpoint, and
// OB over the upper closure of t is consistent.
ModelVerdict check_model(const PhiOperator& phi, AtomSet t, AtomSet p);

// Necessary-condition cross oracle: evaluates every rule under the
// three-valued valuation induced by (t, p) and checks OB-consistency of
// both bounds. Requires t <= p <= KA.
bool sanity_threevalued(const KnowledgeBase& kb, AtomSet t, AtomSet p);

}  // namespace mknf

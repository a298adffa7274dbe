#include "mknf/entail.hpp"

#include <algorithm>

#include "mknf/errors.hpp"

namespace mknf {

namespace {

int query_width(const std::vector<FormulaPtr>& premises, const FormulaPtr& conclusion) {
  AtomSet s = atoms_of(premises);
  if (conclusion) s |= conclusion->atoms();
  int n = 0;
  s.for_each([&](AtomId a) { n = std::max(n, a + 1); });
  return n;
}

bool all_hold(const std::vector<FormulaPtr>& premises, std::uint64_t assign) {
  for (const auto& f : premises)
    if (!f->eval(assign)) return false;
  return true;
}

}  // namespace

bool entails(const std::vector<FormulaPtr>& premises, const FormulaPtr& conclusion,
             int max_atoms) {
  int n = query_width(premises, conclusion);
  if (n > max_atoms)
    throw SignatureTooLarge("truth-table sweep over " + std::to_string(n) +
                            " atoms exceeds cap " + std::to_string(max_atoms));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (all_hold(premises, m) && !conclusion->eval(m)) return false;
  return true;
}

bool consistent(const std::vector<FormulaPtr>& premises, int max_atoms) {
  int n = query_width(premises, nullptr);
  if (n > max_atoms)
    throw SignatureTooLarge("truth-table sweep over " + std::to_string(n) +
                            " atoms exceeds cap " + std::to_string(max_atoms));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (all_hold(premises, m)) return true;
  return false;
}

namespace {

using ClauseList = std::vector<Clause>;

// Cross product of two clause lists; tautologies are dropped.
ClauseList distribute(const ClauseList& a, const ClauseList& b) {
  ClauseList out;
  out.reserve(a.size() * b.size());
  for (const Clause& x : a)
    for (const Clause& y : b) {
      Clause c{x.pos | y.pos, x.neg | y.neg};
      if (c.pos.intersects(c.neg)) continue;
      out.push_back(c);
    }
  return out;
}

ClauseList append(ClauseList a, ClauseList b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// CNF of f (positive polarity) or of ~f (negative polarity).
ClauseList cnf(const FormulaPtr& f, bool positive) {
  using Op = Formula::Op;
  switch (f->op) {
    case Op::Falsum:
      if (positive) return {Clause{}};  // the empty clause
      return {};
    case Op::Atom:
      return positive ? ClauseList{Clause{AtomSet::single(f->atom), {}}}
                      : ClauseList{Clause{{}, AtomSet::single(f->atom)}};
    case Op::Not:
      return cnf(f->lhs, !positive);
    case Op::And:
      return positive ? append(cnf(f->lhs, true), cnf(f->rhs, true))
                      : distribute(cnf(f->lhs, false), cnf(f->rhs, false));
    case Op::Or:
      return positive ? distribute(cnf(f->lhs, true), cnf(f->rhs, true))
                      : append(cnf(f->lhs, false), cnf(f->rhs, false));
    case Op::Implies:
      return positive ? distribute(cnf(f->lhs, false), cnf(f->rhs, true))
                      : append(cnf(f->lhs, true), cnf(f->rhs, false));
    case Op::Iff:
      // (l -> r) & (r -> l); negated: (l | r) & (~l | ~r)
      return positive ? append(distribute(cnf(f->lhs, false), cnf(f->rhs, true)),
                               distribute(cnf(f->rhs, false), cnf(f->lhs, true)))
                      : append(distribute(cnf(f->lhs, true), cnf(f->rhs, true)),
                               distribute(cnf(f->lhs, false), cnf(f->rhs, false)));
  }
  return {};
}

bool dpll(const std::vector<Clause>& clauses, AtomSet tru, AtomSet fls) {
  // Unit propagation to a fixpoint.
  for (;;) {
    bool changed = false;
    for (const Clause& c : clauses) {
      if (c.pos.intersects(tru) || c.neg.intersects(fls)) continue;  // satisfied
      AtomSet open_pos = c.pos - fls;
      AtomSet open_neg = c.neg - tru;
      int open = open_pos.size() + open_neg.size();
      if (open == 0) return false;  // conflict
      if (open == 1) {
        if (!open_pos.empty())
          tru |= open_pos;
        else
          fls |= open_neg;
        changed = true;
      }
    }
    if (!changed) break;
  }
  // Branch on the lowest unassigned atom of an unsatisfied clause.
  for (const Clause& c : clauses) {
    if (c.pos.intersects(tru) || c.neg.intersects(fls)) continue;
    AtomSet open = (c.pos - fls) | (c.neg - tru);
    AtomId pick = -1;
    open.for_each([&](AtomId a) {
      if (pick < 0) pick = a;
    });
    return dpll(clauses, tru | AtomSet::single(pick), fls) ||
           dpll(clauses, tru, fls | AtomSet::single(pick));
  }
  return true;  // every clause satisfied
}

}  // namespace

std::vector<Clause> clausify(const FormulaPtr& f) { return cnf(f, true); }

bool dpll_sat(std::vector<Clause> clauses) { return dpll(clauses, {}, {}); }

bool entails_fast(const std::vector<FormulaPtr>& premises, const FormulaPtr& conclusion) {
  std::vector<Clause> clauses;
  for (const auto& p : premises) {
    auto cs = cnf(p, true);
    clauses.insert(clauses.end(), cs.begin(), cs.end());
  }
  auto neg = cnf(conclusion, false);
  clauses.insert(clauses.end(), neg.begin(), neg.end());
  return !dpll_sat(std::move(clauses));
}

bool consistent_fast(const std::vector<FormulaPtr>& premises) {
  std::vector<Clause> clauses;
  for (const auto& p : premises) {
    auto cs = cnf(p, true);
    clauses.insert(clauses.end(), cs.begin(), cs.end());
  }
  return dpll_sat(std::move(clauses));
}

Oracle::Oracle(const KnowledgeBase& kb, int brute_cap) {
  n_ = kb.n_atoms();
  all_ = kb.sig_full;
  brute_ = n_ <= brute_cap;
  if (brute_) {
    std::size_t words = std::max<std::size_t>(1, (std::size_t{1} << n_) / 64);
    ont_sat_.assign(words, 0);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n_); ++m) {
      bool ok = true;
      for (const auto& f : kb.ontology)
        if (!f->eval(m)) {
          ok = false;
          break;
        }
      if (ok) ont_sat_[m / 64] |= std::uint64_t{1} << (m % 64);
    }
    atom_true_.assign(n_, std::vector<std::uint64_t>(words, 0));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n_); ++m)
      for (int a = 0; a < n_; ++a)
        if ((m >> a) & 1) atom_true_[a][m / 64] |= std::uint64_t{1} << (m % 64);
  } else {
    for (const auto& f : kb.ontology) {
      auto cs = clausify(f);
      ont_clauses_.insert(ont_clauses_.end(), cs.begin(), cs.end());
    }
  }
}

std::vector<std::uint64_t> Oracle::sat_assignments(AtomSet pos, AtomSet neg) const {
  std::vector<std::uint64_t> sat = ont_sat_;
  pos.for_each([&](AtomId a) {
    for (std::size_t w = 0; w < sat.size(); ++w) sat[w] &= atom_true_[a][w];
  });
  neg.for_each([&](AtomId a) {
    for (std::size_t w = 0; w < sat.size(); ++w) sat[w] &= ~atom_true_[a][w];
  });
  return sat;
}

bool Oracle::consistent(AtomSet pos, AtomSet neg) const {
  if (brute_) {
    auto sat = sat_assignments(pos, neg);
    for (std::uint64_t w : sat)
      if (w) return true;
    return false;
  }
  std::vector<Clause> clauses = ont_clauses_;
  pos.for_each([&](AtomId a) { clauses.push_back({AtomSet::single(a), {}}); });
  neg.for_each([&](AtomId a) { clauses.push_back({{}, AtomSet::single(a)}); });
  return dpll_sat(std::move(clauses));
}

AtomSet Oracle::entailed(AtomSet pos) const {
  AtomSet out;
  if (brute_) {
    auto sat = sat_assignments(pos, {});
    all_.for_each([&](AtomId a) {
      for (std::size_t w = 0; w < sat.size(); ++w)
        if (sat[w] & ~atom_true_[a][w]) return;
      out |= AtomSet::single(a);
    });
    return out;
  }
  all_.for_each([&](AtomId a) {
    if (!consistent(pos, AtomSet::single(a))) out |= AtomSet::single(a);
  });
  return out;
}

AtomSet Oracle::refuted(AtomSet pos, AtomSet neg) const {
  AtomSet out;
  if (brute_) {
    auto sat = sat_assignments(pos, neg);
    all_.for_each([&](AtomId a) {
      for (std::size_t w = 0; w < sat.size(); ++w)
        if (sat[w] & atom_true_[a][w]) return;
      out |= AtomSet::single(a);
    });
    return out;
  }
  all_.for_each([&](AtomId a) {
    std::vector<Clause> clauses = ont_clauses_;
    pos.for_each([&](AtomId b) { clauses.push_back({AtomSet::single(b), {}}); });
    neg.for_each([&](AtomId b) { clauses.push_back({{}, AtomSet::single(b)}); });
    clauses.push_back({AtomSet::single(a), {}});
    if (!dpll_sat(std::move(clauses))) out |= AtomSet::single(a);
  });
  return out;
}

}  // namespace mknf

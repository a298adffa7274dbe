#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mknf/atomset.hpp"

namespace mknf {

// Propositional formula AST. Nodes are immutable and shared; `Falsum` is the
// built-in contradiction constant.
class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
 public:
  enum class Op { Falsum, Atom, Not, And, Or, Implies, Iff };

  Op op;
  AtomId atom = -1;
  FormulaPtr lhs;
  FormulaPtr rhs;

  static FormulaPtr falsum();
  static FormulaPtr var(AtomId a);
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);

  // Truth under a total assignment; bit i of `assign` is the value of atom i.
  bool eval(std::uint64_t assign) const;

  // Union of atoms occurring in the formula.
  AtomSet atoms() const;

 private:
  Formula(Op o, AtomId a, FormulaPtr l, FormulaPtr r)
      : op(o), atom(a), lhs(std::move(l)), rhs(std::move(r)) {}
};

AtomSet atoms_of(const std::vector<FormulaPtr>& fs);

}  // namespace mknf

#include "mknf/formula.hpp"

namespace mknf {

FormulaPtr Formula::falsum() {
  return FormulaPtr(new Formula(Op::Falsum, -1, nullptr, nullptr));
}

FormulaPtr Formula::var(AtomId a) {
  return FormulaPtr(new Formula(Op::Atom, a, nullptr, nullptr));
}

FormulaPtr Formula::negate(FormulaPtr f) {
  return FormulaPtr(new Formula(Op::Not, -1, std::move(f), nullptr));
}

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Op::And, -1, std::move(a), std::move(b)));
}

FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Op::Or, -1, std::move(a), std::move(b)));
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Op::Implies, -1, std::move(a), std::move(b)));
}

FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Op::Iff, -1, std::move(a), std::move(b)));
}

bool Formula::eval(std::uint64_t assign) const {
  switch (op) {
    case Op::Falsum: return false;
    case Op::Atom: return (assign >> atom) & 1;
    case Op::Not: return !lhs->eval(assign);
    case Op::And: return lhs->eval(assign) && rhs->eval(assign);
    case Op::Or: return lhs->eval(assign) || rhs->eval(assign);
    case Op::Implies: return !lhs->eval(assign) || rhs->eval(assign);
    case Op::Iff: return lhs->eval(assign) == rhs->eval(assign);
  }
  return false;
}

AtomSet Formula::atoms() const {
  switch (op) {
    case Op::Falsum: return {};
    case Op::Atom: return AtomSet::single(atom);
    case Op::Not: return lhs->atoms();
    default: return lhs->atoms() | rhs->atoms();
  }
}

AtomSet atoms_of(const std::vector<FormulaPtr>& fs) {
  AtomSet s;
  for (const auto& f : fs) s |= f->atoms();
  return s;
}

}  // namespace mknf

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mknf/atomset.hpp"
#include "mknf/formula.hpp"

namespace mknf {

// Injective interning of atom names; ids are dense in [0, size).
class SymbolTable {
 public:
  AtomId intern(const std::string& name);
  std::optional<AtomId> find(const std::string& name) const;
  const std::string& name(AtomId id) const { return names_[id]; }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> ids_;
};

// Ground rule: K head <- K p0, ..., not n0, ...
// pos and neg may overlap; nothing in the semantics forbids it.
struct Rule {
  AtomId head;
  AtomSet body_pos;
  AtomSet body_neg;
};

// Ground hybrid knowledge base with a propositional ontology. Immutable
// after construction; safe to share across threads.
struct KnowledgeBase {
  SymbolTable symbols;
  std::vector<FormulaPtr> ontology;
  std::vector<Rule> rules;
  AtomSet ka;        // atoms occurring in rule heads, positive or negative bodies
  AtomSet sig_full;  // every interned atom, including ontology-only ones
  int n_atoms() const { return symbols.size(); }
};

// Assembles a validated KnowledgeBase; derives ka and sig_full.
KnowledgeBase make_kb(SymbolTable symbols, std::vector<FormulaPtr> ontology,
                      std::vector<Rule> rules);

// Union over all rules of head, positive body and negative body atoms.
AtomSet ka_of(const KnowledgeBase& kb);

// Ontology formulas plus one positive unit per atom of s.
std::vector<FormulaPtr> ob_of(const KnowledgeBase& kb, AtomSet s);

// ob_of(p) plus one negative unit per atom of b.
std::vector<FormulaPtr> ob_of_neg(const KnowledgeBase& kb, AtomSet p, AtomSet b);

}  // namespace mknf

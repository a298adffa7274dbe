#include "mknf/kb.hpp"

namespace mknf {

AtomId SymbolTable::intern(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  AtomId id = static_cast<AtomId>(names_.size());
  names_.push_back(name);
  ids_.emplace(name, id);
  return id;
}

std::optional<AtomId> SymbolTable::find(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

KnowledgeBase make_kb(SymbolTable symbols, std::vector<FormulaPtr> ontology,
                      std::vector<Rule> rules) {
  KnowledgeBase kb;
  kb.symbols = std::move(symbols);
  kb.ontology = std::move(ontology);
  kb.rules = std::move(rules);
  kb.sig_full = AtomSet::first_n(kb.symbols.size());
  kb.ka = ka_of(kb);
  return kb;
}

AtomSet ka_of(const KnowledgeBase& kb) {
  AtomSet s;
  for (const Rule& r : kb.rules) {
    s |= AtomSet::single(r.head);
    s |= r.body_pos;
    s |= r.body_neg;
  }
  return s;
}

std::vector<FormulaPtr> ob_of(const KnowledgeBase& kb, AtomSet s) {
  std::vector<FormulaPtr> out = kb.ontology;
  s.for_each([&](AtomId a) { out.push_back(Formula::var(a)); });
  return out;
}

std::vector<FormulaPtr> ob_of_neg(const KnowledgeBase& kb, AtomSet p, AtomSet b) {
  std::vector<FormulaPtr> out = ob_of(kb, p);
  b.for_each([&](AtomId a) { out.push_back(Formula::negate(Formula::var(a))); });
  return out;
}

}  // namespace mknf

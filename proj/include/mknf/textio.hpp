#pragma once

#include <string>
#include <vector>

#include "mknf/aft.hpp"
#include "mknf/kb.hpp"
#include "mknf/phi.hpp"

namespace mknf {

// Parses the KB text format:
//   document := section*
//   section  := "%ontology" formula* | "%rules" rule*
//   formula  := expr "."        (precedence ~ > & > | > "->" > "<->")
//   rule     := atom (":-" lit ("," lit)*)? "."
//   lit      := atom | "not" atom
//   atom     := [a-z][A-Za-z0-9_']*
// Line comments start with '#'. Variable-like tokens are rejected: rules
// must be ground. Throws ParseError with line/column on malformed input.
KnowledgeBase parse_kb(const std::string& text);

// Emits a document in the same format; parse_kb(print_kb(kb)) reproduces kb
// up to whitespace.
std::string print_kb(const KnowledgeBase& kb);

enum class ReportFormat { Text, Json };

struct RunReport {
  StableTrace<AtomSet> trace;
  Tetra<AtomSet> fixpoint;
  ModelVerdict verdicts;
};

struct EnumReport {
  std::vector<Bi<AtomSet>> fixpoints;
  std::vector<ModelVerdict> verdicts;
};

RunReport run_lfp(const PhiOperator& phi);
EnumReport run_enumerate(const PhiOperator& phi, int cap_atoms = 12);

// "{a,a',b}" with names sorted lexicographically.
std::string set_text(const KnowledgeBase& kb, AtomSet s);

// Comma-separated atom names, validated against KA; unknown atoms are an
// error. The empty string denotes the empty set.
AtomSet parse_atom_list(const KnowledgeBase& kb, const std::string& list);

std::string print_report(const KnowledgeBase& kb, const RunReport& r, ReportFormat fmt,
                         bool show_inner = false);
std::string print_report(const KnowledgeBase& kb, const EnumReport& r, ReportFormat fmt);
std::string print_check(const KnowledgeBase& kb, AtomSet t, AtomSet p,
                        const ModelVerdict& v, ReportFormat fmt);

}  // namespace mknf

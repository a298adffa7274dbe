#include "mknf/golden.hpp"

#include "mknf/textio.hpp"

namespace mknf::golden {

const char* kEx1 =
    "%ontology\n"
    "~c.\n"
    "%rules\n"
    "a :- not a'.\n"
    "a' :- not a.\n"
    "c :- a, not b.\n";

const char* kEx1Rule4 =
    "%ontology\n"
    "~c.\n"
    "%rules\n"
    "a :- not a'.\n"
    "a' :- not a.\n"
    "c :- a, not b.\n"
    "b :- a.\n";

const char* kEx3 =
    "%ontology\n"
    "(x | y) & (~c <-> (~x | ~y)).\n"
    "%rules\n"
    "c :- b, not a.\n"
    "c :- not c'.\n"
    "c' :- not c.\n"
    "b :- not b'.\n"
    "b' :- not b.\n"
    "x :- x.\n"
    "y :- y.\n";

const char* kEx4 =
    "%ontology\n"
    "~a.\n"
    "%rules\n"
    "b :- not b'.\n"
    "b' :- not b.\n"
    "c :- not c'.\n"
    "c' :- not c.\n"
    "a :- b, c.\n"
    "a :- not b.\n";

namespace {

AtomSet named(const KnowledgeBase& kb, std::initializer_list<const char*> names) {
  AtomSet s;
  for (const char* n : names) s |= AtomSet::single(*kb.symbols.find(n));
  return s;
}

void expect(std::vector<CaseResult>& out, const std::string& name, bool ok,
            const std::string& detail) {
  out.push_back({name, ok, detail});
}

}  // namespace

std::vector<CaseResult> run_selftest() {
  std::vector<CaseResult> out;

  {
    KnowledgeBase kb = parse_kb(kEx1);
    PhiOperator phi(kb, PhiConfig{});
    RunReport r = run_lfp(phi);
    bool ok = r.fixpoint.t == named(kb, {"a'"}) && r.fixpoint.p == named(kb, {"a'"});
    expect(out, "ex1 lfp", ok,
           "fixpoint T=" + set_text(kb, r.fixpoint.t) + " P=" + set_text(kb, r.fixpoint.p));

    PhiOperator legacy(kb, PhiConfig{FilterStrategy::singletons(), true});
    RunReport rl = run_lfp(legacy);
    bool okl = rl.fixpoint.t == AtomSet::none() && rl.fixpoint.p == named(kb, {"a", "a'"});
    PowersetLattice l{kb.ka};
    Bi<AtomSet> lv{rl.fixpoint.t, rl.fixpoint.p};
    Bi<AtomSet> fv{r.fixpoint.t, r.fixpoint.p};
    okl = okl && prec_leq(l, lv, fv) && !(lv == fv);
    expect(out, "ex1 legacy baseline", okl,
           "legacy T=" + set_text(kb, rl.fixpoint.t) + " P=" + set_text(kb, rl.fixpoint.p));

    std::string a = print_report(kb, r, ReportFormat::Text, false);
    std::string b = print_report(kb, run_lfp(phi), ReportFormat::Text, false);
    expect(out, "ex1 determinism", a == b, "");
  }

  {
    KnowledgeBase kb = parse_kb(kEx1Rule4);
    PhiOperator phi(kb, PhiConfig{});
    EnumReport r = run_enumerate(phi);
    int models = 0;
    for (const auto& v : r.verdicts) models += v.model();
    bool ok = r.fixpoints.size() == 3 && models == 2;
    expect(out, "ex1+rule4 enumerate", ok,
           std::to_string(r.fixpoints.size()) + " fixpoints, " + std::to_string(models) +
               " models");
  }

  {
    KnowledgeBase kb = parse_kb(kEx3);
    PhiOperator phi(kb, PhiConfig{FilterStrategy::powerset(), false});
    RunReport r = run_lfp(phi);
    bool ok = r.fixpoint.t == named(kb, {"c'", "b'"}) && r.fixpoint.p == named(kb, {"c'", "b'"});
    expect(out, "ex3 powerset lfp", ok,
           "fixpoint T=" + set_text(kb, r.fixpoint.t) + " P=" + set_text(kb, r.fixpoint.p));

    PhiOperator phe(kb, PhiConfig{FilterStrategy::empty(), false});
    RunReport re = run_lfp(phe);
    AtomSet cc = named(kb, {"c", "c'"});
    bool undefined = (re.fixpoint.p & cc) == cc && !re.fixpoint.t.intersects(cc);
    PowersetLattice l{kb.ka};
    Bi<AtomSet> ev{re.fixpoint.t, re.fixpoint.p};
    Bi<AtomSet> pv{r.fixpoint.t, r.fixpoint.p};
    bool ok2 = undefined && prec_leq(l, ev, pv) && !(ev == pv);
    expect(out, "ex3 empty filter", ok2,
           "fixpoint T=" + set_text(kb, re.fixpoint.t) + " P=" + set_text(kb, re.fixpoint.p));
  }

  {
    KnowledgeBase kb = parse_kb(kEx4);
    PhiOperator phi(kb, PhiConfig{});
    RunReport r = run_lfp(phi);
    bool ok = r.fixpoint.t == AtomSet::none() &&
              r.fixpoint.p == named(kb, {"b", "b'", "c", "c'"});
    expect(out, "ex4 lfp", ok,
           "fixpoint T=" + set_text(kb, r.fixpoint.t) + " P=" + set_text(kb, r.fixpoint.p));
  }

  return out;
}

}  // namespace mknf::golden

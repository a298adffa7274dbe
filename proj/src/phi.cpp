#include "mknf/phi.hpp"

#include "mknf/errors.hpp"

namespace mknf {

std::optional<FilterStrategy> FilterStrategy::parse(const std::string& name) {
  if (name == "empty") return empty();
  if (name == "none") return none();
  if (name == "singletons") return singletons();
  if (name == "powerset") return powerset();
  if (name.rfind("subsets:", 0) == 0) {
    const std::string arg = name.substr(8);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    return bounded(std::stoi(arg));
  }
  return std::nullopt;
}

std::string FilterStrategy::name() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::None: return "none";
    case Kind::Singletons: return "singletons";
    case Kind::BoundedSubsets: return "subsets:" + std::to_string(bound);
    case Kind::Powerset: return "powerset";
  }
  return "?";
}

PhiOperator::PhiOperator(const KnowledgeBase& kb, PhiConfig cfg)
    : kb_(&kb), cfg_(cfg), oracle_(kb), ka_lat_{kb.ka} {}

AtomSet PhiOperator::add0(AtomSet t) const { return oracle_.entailed(t) & kb_->ka; }

AtomSet PhiOperator::add1(AtomSet t, AtomSet p) const {
  AtomSet out;
  for (const Rule& r : kb_->rules)
    if (r.body_pos.subset_of(t) && !r.body_neg.intersects(p))
      out |= AtomSet::single(r.head);
  return out;
}

AtomSet PhiOperator::extract0(AtomSet t, AtomSet f, AtomSet p) const {
  AtomSet out;
  if (cfg_.legacy_mode) {
    if (oracle_.consistent(p, {})) out = oracle_.refuted(t, {});
    return out & kb_->ka;
  }
  cfg_.filter.for_each_candidate(f, [&](AtomSet b) {
    if (!b.subset_of(f)) return;
    if (!oracle_.consistent(p, b)) return;
    // A witness set never refutes its own members: assuming ~a to conclude
    // ~a is not a classical consequence, and without the restriction an
    // ontology-free program could manufacture negative information.
    out |= oracle_.refuted(t, b) - b;
  });
  return out & kb_->ka;
}

AtomSet PhiOperator::extract1(AtomSet t, AtomSet f) const {
  AtomSet out;
  if (cfg_.legacy_mode) return out;
  for (const Rule& r : kb_->rules) {
    if (!f.contains(r.head) || !r.body_neg.subset_of(f)) continue;
    r.body_pos.for_each([&](AtomId a) {
      if ((r.body_pos - AtomSet::single(a)).subset_of(t)) out |= AtomSet::single(a);
    });
  }
  return out;
}

Tetra<AtomSet> PhiOperator::operator()(const Tetra<AtomSet>& x) const {
  AtomSet lower = add0(x.t) | add1(x.t, x.p);
  // The upper bound is rule-driven: ontology consequences of merely
  // possibly-true premises are not forced into p, otherwise atoms whose only
  // support is an unfounded loop could never be established false.
  AtomSet upper = add1(x.p, x.t) - (extract0(x.t, x.f, x.p) | extract1(x.t, x.f));
  return {lower, ka_lat_.comp(x.p), ka_lat_.comp(x.t), upper};
}

AtomSet PhiOperator::upper_closure(AtomSet t) const {
  // Inflationary closure. Ontology consequences join only while the premise
  // set stays consistent; past that point classical entailment would flood
  // the closure without changing any consistency verdict drawn from it.
  return lfp(
      ka_lat_,
      [&](AtomSet x) {
        AtomSet next = x | add1(x, t);
        if (oracle_.consistent(x, {})) next |= add0(x);
        return next & kb_->ka;
      },
      AtomSet::none(), ka_lat_.iter_bound());
}

ModelVerdict check_model(const PhiOperator& phi, AtomSet t, AtomSet p) {
  ModelVerdict v;
  v.subset = t.subset_of(p);
  const PowersetLattice& l = phi.ka_lattice();
  Tetra<AtomSet> shaped = to_tetra(l, Bi<AtomSet>{t, p});
  v.fixpoint = stable_revision_tetra(l, phi.as_op(), shaped) == shaped;
  v.consistent = phi.oracle().consistent(phi.upper_closure(t), {});
  return v;
}

namespace {

enum class Tv { False = 0, Undef = 1, True = 2 };

Tv min_tv(Tv a, Tv b) { return a < b ? a : b; }

}  // namespace

bool sanity_threevalued(const KnowledgeBase& kb, AtomSet t, AtomSet p) {
  if (!t.subset_of(p) || !p.subset_of(kb.ka))
    throw InvalidSample("sanity check requires t <= p <= KA");
  auto value = [&](AtomId a) {
    if (t.contains(a)) return Tv::True;
    if (p.contains(a)) return Tv::Undef;
    return Tv::False;
  };
  // A default-negated atom is evaluated against the upper bound: it is false
  // as soon as the atom is possibly true, and true otherwise.
  auto naf_value = [&](AtomId a) { return p.contains(a) ? Tv::False : Tv::True; };
  for (const Rule& r : kb.rules) {
    Tv body = Tv::True;
    r.body_pos.for_each([&](AtomId a) { body = min_tv(body, value(a)); });
    r.body_neg.for_each([&](AtomId a) { body = min_tv(body, naf_value(a)); });
    if (value(r.head) < body) return false;
  }
  Oracle oracle(kb);
  return oracle.consistent(p, {}) && oracle.consistent(t, {});
}

}  // namespace mknf

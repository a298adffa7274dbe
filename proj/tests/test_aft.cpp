#include "doctest.h"
#include "mknf/aft.hpp"
#include "mknf/golden.hpp"
#include "mknf/phi.hpp"
#include "mknf/textio.hpp"
#include "support.hpp"

using namespace mknf;
using testsupport::Rng;

namespace {

AtomSet named(const KnowledgeBase& kb, std::initializer_list<const char*> names) {
  AtomSet s;
  for (const char* n : names) {
    auto id = kb.symbols.find(n);
    REQUIRE(id.has_value());
    s |= AtomSet::single(*id);
  }
  return s;
}

// Lifts a bilattice operator to the tetralattice with forced recurrent slots.
template <class L>
TetraOp<L> lift_recurrent(const L& l, BiOp<L> o) {
  using E = typename L::Elem;
  return [&l, o = std::move(o)](const Tetra<E>& x) {
    Bi<E> y = o(Bi<E>{x.t, x.p});
    return Tetra<E>{y.first, l.comp(x.p), l.comp(x.t), y.second};
  };
}

std::vector<Tetra<Tri>> all_tri_tetras() {
  std::vector<Tetra<Tri>> out;
  const Tri vals[] = {Tri::Bot, Tri::Mid, Tri::Top};
  for (Tri t : vals)
    for (Tri f : vals)
      for (Tri u : vals)
        for (Tri p : vals) out.push_back({t, f, u, p});
  return out;
}

}  // namespace

TEST_CASE("stable revision on the bilattice") {
  TriLattice tri;
  BiOp<TriLattice> constant = [](const Bi<Tri>&) { return Bi<Tri>{Tri::Bot, Tri::Bot}; };
  CHECK(stable_revision_bi(tri, constant, Bi<Tri>{Tri::Top, Tri::Mid}) ==
        Bi<Tri>{Tri::Bot, Tri::Bot});

  // Over a powerset: first slot closes under "add a when a is possible".
  PowersetLattice l{AtomSet::first_n(2)};
  AtomSet a = AtomSet::single(0);
  BiOp<PowersetLattice> grow = [a](const Bi<AtomSet>& x) {
    return Bi<AtomSet>{x.second.contains(0) ? x.first | a : x.first, x.second};
  };
  // Hand iteration: first inner chain {} -> {a} -> {a}; second slot is the
  // identity, whose least fixpoint from bottom is {}.
  CHECK(stable_revision_bi(l, grow, Bi<AtomSet>{{}, l.top()}) == Bi<AtomSet>{a, {}});

  // The identity collapses both inner chains to bottom.
  BiOp<TriLattice> identity = [](const Bi<Tri>& x) { return x; };
  CHECK(stable_revision_bi(tri, identity, Bi<Tri>{Tri::Mid, Tri::Top}) ==
        Bi<Tri>{Tri::Bot, Tri::Bot});
}

TEST_CASE("stable revision walks the known revision sequence") {
  KnowledgeBase kb = parse_kb(golden::kEx1);
  PowersetLattice l{kb.ka};
  PhiOperator phi(kb, PhiConfig{});
  auto op = phi.as_op();
  AtomSet aa = named(kb, {"a", "a'"});
  AtomSet ap = named(kb, {"a'"});

  Tetra<AtomSet> s1 = stable_revision_tetra(l, op, prec_bottom4(l));
  CHECK(s1.t.empty());
  CHECK(s1.p == aa);
  CHECK(s1.f == l.comp(l.top()));  // recurrent slot: comp of the input p
  CHECK(s1.u == l.comp(AtomSet{}));

  // Revision steps three and four, fed the engine's own iterates: the recurrent
  // slot carries comp p = {b,c}, which is what lets the rule-driven
  // extraction block a.
  Tetra<AtomSet> s3 =
      stable_revision_tetra(l, op, Tetra<AtomSet>{{}, l.comp(aa), l.top(), aa});
  CHECK(s3.t.empty());
  CHECK(s3.p == ap);
  CHECK(s3.f == l.comp(aa));
  CHECK(s3.u == l.top());

  Tetra<AtomSet> s4 =
      stable_revision_tetra(l, op, Tetra<AtomSet>{{}, l.comp(aa), l.top(), ap});
  CHECK(s4.t == ap);
  CHECK(s4.p == ap);
  CHECK(s4.f == l.comp(ap));
  CHECK(s4.u == l.top());
}

TEST_CASE("least stable fixpoint of the golden corpus") {
  {
    KnowledgeBase kb = parse_kb(golden::kEx1);
    PhiOperator phi(kb, PhiConfig{});
    auto [fix, trace] = least_stable_fixpoint(PowersetLattice{kb.ka}, phi.as_op());
    CHECK(to_approx(fix) == Bi<AtomSet>{named(kb, {"a'"}), named(kb, {"a'"})});
    CHECK(trace.outer.size() >= 2);
  }
  {
    KnowledgeBase kb = parse_kb(golden::kEx1Rule4);
    PhiOperator phi(kb, PhiConfig{});
    auto [fix, trace] = least_stable_fixpoint(PowersetLattice{kb.ka}, phi.as_op());
    CHECK(fix.t.empty());
    CHECK(fix.p == named(kb, {"a", "a'", "b"}));
    CHECK(fix.f == named(kb, {"c"}));
    CHECK(fix.u == kb.ka);
  }
  {
    KnowledgeBase kb = parse_kb(golden::kEx3);
    PhiOperator phi(kb, PhiConfig{FilterStrategy::powerset(), false});
    auto [fix, trace] = least_stable_fixpoint(PowersetLattice{kb.ka}, phi.as_op());
    CHECK(to_approx(fix) == Bi<AtomSet>{named(kb, {"c'", "b'"}), named(kb, {"c'", "b'"})});
  }
}

TEST_CASE("outer iterates form a short increasing chain") {
  Rng rng(51);
  auto check_chain = [](const KnowledgeBase& kb, const PhiOperator& phi) {
    PowersetLattice l{kb.ka};
    auto [fix, trace] = least_stable_fixpoint(l, phi.as_op());
    for (std::size_t i = 1; i < trace.outer.size(); ++i)
      CHECK(prec_leq(l, trace.outer[i - 1], trace.outer[i]));
    // Applications until stationarity, bounded by 2|KA| + 2.
    CHECK(trace.inner.size() <= std::size_t(2 * kb.ka.size() + 2));
  };
  for (const char* text : {golden::kEx1, golden::kEx1Rule4, golden::kEx3, golden::kEx4}) {
    KnowledgeBase kb = parse_kb(text);
    PhiOperator phi(kb, PhiConfig{});
    check_chain(kb, phi);
  }
  for (int i = 0; i < 25; ++i) {
    KnowledgeBase kb = testsupport::random_kb(rng);
    PhiOperator phi(kb, PhiConfig{});
    check_chain(kb, phi);
  }
}

TEST_CASE("recurrence checks") {
  // The plain identity is not recurrent: slot 2 must be comp p.
  PowersetLattice one{AtomSet::first_n(1)};
  TetraOp<PowersetLattice> identity = [](const Tetra<AtomSet>& x) { return x; };
  CHECK_FALSE(check_recurrent(one, identity,
                              {Tetra<AtomSet>{AtomSet::single(0), {}, {}, {}}}));

  KnowledgeBase kb = parse_kb(golden::kEx1);
  PowersetLattice l{kb.ka};
  PhiOperator phi(kb, PhiConfig{});
  Rng rng(52);
  std::vector<Tetra<AtomSet>> samples;
  for (int i = 0; i < 100; ++i) samples.push_back(testsupport::random_tetra(rng, kb.ka));
  CHECK(check_recurrent(l, phi.as_op(), samples));

  // Stable revision of any precision-monotone operator is recurrent.
  TetraOp<PowersetLattice> srev = [&](const Tetra<AtomSet>& x) {
    return stable_revision_tetra(l, phi.as_op(), x);
  };
  CHECK(check_recurrent(l, srev, samples));
}

TEST_CASE("precision monotonicity checks") {
  KnowledgeBase kb = parse_kb(golden::kEx1);
  PowersetLattice l{kb.ka};
  PhiOperator phi(kb, PhiConfig{});
  Rng rng(53);

  std::vector<std::pair<Tetra<AtomSet>, Tetra<AtomSet>>> pairs;
  for (int i = 0; i < 300; ++i) pairs.push_back(testsupport::random_prec_pair(rng, kb.ka));
  CHECK(check_p4_monotone(l, phi.as_op(), pairs));

  TetraOp<PowersetLattice> constant = [&](const Tetra<AtomSet>&) {
    return Tetra<AtomSet>{{}, {}, {}, {}};
  };
  CHECK(check_p4_monotone(l, constant, pairs));

  // An operator that flips membership of one atom in its first slot is not
  // monotone; a violating ordered pair exists and the search finds one.
  AtomSet a = AtomSet::single(0);
  TetraOp<PowersetLattice> flip = [&, a](const Tetra<AtomSet>& x) {
    AtomSet t = x.t.contains(0) ? x.t - a : x.t | a;
    return Tetra<AtomSet>{t, l.comp(x.p), l.comp(x.t), x.p};
  };
  bool found_violation = false;
  for (int i = 0; i < 1000 && !found_violation; ++i) {
    auto pair = testsupport::random_prec_pair(rng, kb.ka);
    found_violation = !check_p4_monotone(l, flip, {pair});
  }
  CHECK(found_violation);

  CHECK_THROWS_AS(check_p4_monotone(
                      l, phi.as_op(),
                      {{Tetra<AtomSet>{kb.ka, {}, {}, {}}, Tetra<AtomSet>{{}, {}, kb.ka, kb.ka}}}),
                  InvalidSample);
}

TEST_CASE("increasing and decreasing variants") {
  KnowledgeBase kb = parse_kb(golden::kEx1);
  PowersetLattice l{kb.ka};
  PhiOperator phi(kb, PhiConfig{});
  auto op = phi.as_op();
  auto up = make_increasing(l, op);
  auto down = make_decreasing(l, op);
  Rng rng(54);

  // At the precision bottom the increasing variant coincides with the
  // operator on slots 1 and 4.
  Tetra<AtomSet> bot = prec_bottom4(l);
  CHECK(up(bot).t == op(bot).t);
  CHECK(up(bot).p == op(bot).p);

  std::vector<Tetra<AtomSet>> shaped;
  for (int i = 0; i < 300; ++i) shaped.push_back(testsupport::random_shaped(rng, l));

  CHECK(check_recurrent(l, up, shaped));
  CHECK(check_recurrent(l, down, shaped));

  for (const auto& x : shaped) {
    CHECK(prec_leq(l, x, up(x)));
    CHECK(prec_leq(l, down(x), x));
    CHECK(prec_leq(l, x, stable_revision_tetra(l, up, x)));
    CHECK(prec_leq(l, stable_revision_tetra(l, down, x), x));
  }

  std::vector<std::pair<Tetra<AtomSet>, Tetra<AtomSet>>> pairs;
  for (int i = 0; i < 200; ++i) pairs.push_back(testsupport::random_prec_pair(rng, kb.ka));
  CHECK(check_p4_monotone(l, up, pairs));
  CHECK(check_p4_monotone(l, down, pairs));
}

TEST_CASE("enumeration of stable fixpoints") {
  {
    KnowledgeBase kb = parse_kb(golden::kEx1Rule4);
    PhiOperator phi(kb, PhiConfig{});
    auto fps = enumerate_stable_fixpoints(PowersetLattice{kb.ka}, phi.as_op());
    REQUIRE(fps.size() == 3);
    // Canonical order: ascending (t, p) bit patterns.
    for (std::size_t i = 1; i < fps.size(); ++i) {
      bool ordered = fps[i - 1].first.bits < fps[i].first.bits ||
                     (fps[i - 1].first.bits == fps[i].first.bits &&
                      fps[i - 1].second.bits < fps[i].second.bits);
      CHECK(ordered);
    }
    auto has = [&](AtomSet t, AtomSet p) {
      for (const auto& f : fps)
        if (f.first == t && f.second == p) return true;
      return false;
    };
    CHECK(has({}, named(kb, {"a", "a'", "b"})));
    CHECK(has(named(kb, {"a", "b"}), named(kb, {"a", "b"})));
    CHECK(has(named(kb, {"a'"}), named(kb, {"a'"})));
  }
  {
    KnowledgeBase kb = parse_kb(golden::kEx1);
    PhiOperator phi(kb, PhiConfig{});
    auto fps = enumerate_stable_fixpoints(PowersetLattice{kb.ka}, phi.as_op());
    bool found = false;
    for (const auto& f : fps)
      found = found || (f.first == named(kb, {"a'"}) && f.second == named(kb, {"a'"}));
    CHECK(found);
  }
  {
    KnowledgeBase kb = parse_kb(golden::kEx4);
    PhiOperator phi(kb, PhiConfig{});
    auto fps = enumerate_stable_fixpoints(PowersetLattice{kb.ka}, phi.as_op());
    auto has = [&](AtomSet t, AtomSet p) {
      for (const auto& f : fps)
        if (f.first == t && f.second == p) return true;
      return false;
    };
    CHECK(has(named(kb, {"c'"}), named(kb, {"b", "b'", "c'"})));
    CHECK(has(named(kb, {"c'", "b"}), named(kb, {"b", "c'"})));
  }
  {
    SymbolTable sym;
    std::vector<Rule> rules;
    for (int i = 0; i < 13; ++i) {
      AtomId a = sym.intern("p" + std::to_string(i));
      rules.push_back(Rule{a, {}, AtomSet::single(a)});
    }
    KnowledgeBase kb = make_kb(std::move(sym), {}, std::move(rules));
    PhiOperator phi(kb, PhiConfig{});
    CHECK_THROWS_AS(enumerate_stable_fixpoints(PowersetLattice{kb.ka}, phi.as_op()), TooLarge);
  }
}

TEST_CASE("refining arbitrary approximations toward models") {
  KnowledgeBase kb = parse_kb(golden::kEx1Rule4);
  PowersetLattice l{kb.ka};
  PhiOperator phi(kb, PhiConfig{});
  auto op = phi.as_op();
  auto fps = enumerate_stable_fixpoints(l, op);
  Rng rng(55);
  for (const auto& star : fps) {
    if (!check_model(phi, star.first, star.second).model()) continue;
    for (int i = 0; i < 50; ++i) {
      // Below the model in precision: smaller t, larger p.
      Bi<AtomSet> lo{star.first & testsupport::random_subset(rng, l.universe),
                     star.second | testsupport::random_subset(rng, l.universe)};
      Bi<AtomSet> lo_next = to_approx(stable_revision_tetra(l, op, to_tetra(l, lo)));
      CHECK(prec_leq(l, lo_next, star));
      // Above the model: larger t, smaller p.
      Bi<AtomSet> hi{star.first | testsupport::random_subset(rng, l.universe),
                     star.second & testsupport::random_subset(rng, l.universe)};
      Bi<AtomSet> hi_next = to_approx(stable_revision_tetra(l, op, to_tetra(l, hi)));
      CHECK(prec_leq(l, star, hi_next));
    }
  }
}

TEST_CASE("three-element lattice demo operators") {
  TriLattice tri;
  BiOp<TriLattice> identity = [](const Bi<Tri>& x) { return x; };
  auto lifted = lift_recurrent(tri, identity);

  // Both inner least fixpoints collapse to bottom, so stable revision maps
  // every element to (bot, comp p, comp t, bot).
  for (const auto& x : all_tri_tetras()) {
    Tetra<Tri> y = stable_revision_tetra(tri, lifted, x);
    CHECK(y == Tetra<Tri>{Tri::Bot, tri.comp(x.p), tri.comp(x.t), Tri::Bot});
  }
  auto [fix, trace] = least_stable_fixpoint(tri, lifted);
  CHECK(fix == Tetra<Tri>{Tri::Bot, Tri::Top, Tri::Top, Tri::Bot});

  // The branch variant that collapses p when f is mid behaves identically
  // under stable revision: the branch never survives the inner iteration.
  TetraOp<TriLattice> branch = [&tri](const Tetra<Tri>& x) {
    Tri p = tri.comp(x.f) == Tri::Mid ? Tri::Bot : x.p;
    return Tetra<Tri>{x.t, tri.comp(x.p), tri.comp(x.t), p};
  };
  for (const auto& x : all_tri_tetras())
    CHECK(stable_revision_tetra(tri, branch, x) == stable_revision_tetra(tri, lifted, x));
}

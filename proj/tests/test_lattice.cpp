#include "doctest.h"
#include "mknf/golden.hpp"
#include "mknf/lattice.hpp"
#include "mknf/phi.hpp"
#include "mknf/textio.hpp"
#include "support.hpp"

using namespace mknf;
using testsupport::Rng;

namespace {

// Small fixed signature {a, b, c, d} for ordering tests.
const PowersetLattice kL{AtomSet::first_n(4)};
constexpr AtomSet A = AtomSet::single(0);
constexpr AtomSet B = AtomSet::single(1);
constexpr AtomSet C = AtomSet::single(2);
constexpr AtomSet D = AtomSet::single(3);

}  // namespace

TEST_CASE("bilattice truth ordering") {
  CHECK(truth_leq(kL, Bi<AtomSet>{{}, {}}, Bi<AtomSet>{A, A}));
  CHECK_FALSE(truth_leq(kL, Bi<AtomSet>{A, {}}, Bi<AtomSet>{{}, A}));
  CHECK(truth_leq(kL, Bi<AtomSet>{A, B}, Bi<AtomSet>{A | C, B}));
}

TEST_CASE("bilattice precision ordering") {
  Rng rng(11);
  for (int i = 0; i < 64; ++i) {
    Bi<AtomSet> any{testsupport::random_subset(rng, kL.universe),
                    testsupport::random_subset(rng, kL.universe)};
    CHECK(prec_leq(kL, Bi<AtomSet>{{}, kL.top()}, any));
  }
  CHECK_FALSE(prec_leq(kL, Bi<AtomSet>{A, A}, Bi<AtomSet>{A, A | B}));
  CHECK(prec_leq(kL, Bi<AtomSet>{A, A | B}, Bi<AtomSet>{A, A}));
}

TEST_CASE("tetralattice truth ordering") {
  Tetra<AtomSet> bot{{}, {}, {}, {}};
  Tetra<AtomSet> top{kL.top(), kL.top(), kL.top(), kL.top()};
  CHECK(truth_leq(kL, bot, top));
  CHECK_FALSE(truth_leq(kL, Tetra<AtomSet>{A, {}, {}, {}},
                        Tetra<AtomSet>{{}, kL.top(), kL.top(), kL.top()}));
  CHECK(truth_leq(kL, Tetra<AtomSet>{A, B, {}, C}, Tetra<AtomSet>{A, B | C, D, C}));
}

TEST_CASE("tetralattice precision ordering") {
  Rng rng(12);
  for (int i = 0; i < 64; ++i)
    CHECK(prec_leq(kL, prec_bottom4(kL), testsupport::random_tetra(rng, kL.universe)));
  CHECK_FALSE(prec_leq(kL, Tetra<AtomSet>{{}, C, kL.top(), A},
                       Tetra<AtomSet>{{}, C, kL.top(), A | B}));
  CHECK(prec_leq(kL, Tetra<AtomSet>{A, {}, kL.top(), kL.top()},
                 Tetra<AtomSet>{A | B, C, A | B, A | B}));
}

TEST_CASE("precision ordering formulations agree") {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    Tetra<AtomSet> x = testsupport::random_tetra(rng, kL.universe);
    Tetra<AtomSet> y = testsupport::random_tetra(rng, kL.universe);
    bool flat = kL.leq(x.t, y.t) && kL.leq(x.f, y.f) && kL.leq(y.u, x.u) && kL.leq(y.p, x.p);
    bool via_truth = truth_leq(kL, x.lower(), y.lower()) && truth_leq(kL, y.upper(), x.upper());
    bool via_prec = prec_leq(kL, Bi<AtomSet>{x.t, x.p}, Bi<AtomSet>{y.t, y.p}) &&
                    prec_leq(kL, Bi<AtomSet>{x.f, x.u}, Bi<AtomSet>{y.f, y.u});
    CHECK(flat == prec_leq(kL, x, y));
    CHECK(flat == via_truth);
    CHECK(flat == via_prec);
  }
}

TEST_CASE("orderings are partial orders") {
  Rng rng(14);
  std::vector<Tetra<AtomSet>> xs;
  for (int i = 0; i < 24; ++i) xs.push_back(testsupport::random_tetra(rng, kL.universe));
  for (const auto& x : xs) {
    CHECK(prec_leq(kL, x, x));
    CHECK(truth_leq(kL, x, x));
  }
  for (const auto& x : xs)
    for (const auto& y : xs) {
      if (prec_leq(kL, x, y) && prec_leq(kL, y, x)) CHECK(x == y);
      for (const auto& z : xs)
        if (prec_leq(kL, x, y) && prec_leq(kL, y, z)) CHECK(prec_leq(kL, x, z));
    }
}

TEST_CASE("complement laws") {
  TriLattice tri;
  for (Tri a : {Tri::Bot, Tri::Mid, Tri::Top}) {
    CHECK(tri.comp(tri.comp(a)) == a);
    for (Tri b : {Tri::Bot, Tri::Mid, Tri::Top})
      CHECK(tri.leq(a, b) == tri.leq(tri.comp(b), tri.comp(a)));
  }
  Rng rng(15);
  PowersetLattice big{AtomSet::first_n(10)};
  for (int i = 0; i < 500; ++i) {
    AtomSet a = testsupport::random_subset(rng, big.universe);
    AtomSet b = testsupport::random_subset(rng, big.universe);
    CHECK(big.comp(big.comp(a)) == a);
    CHECK(big.leq(a, b) == big.leq(big.comp(b), big.comp(a)));
  }
}

TEST_CASE("precision bottom and top") {
  CHECK(prec_bottom4(kL) == Tetra<AtomSet>{{}, {}, kL.top(), kL.top()});
  CHECK(prec_top4(kL) == Tetra<AtomSet>{kL.top(), kL.top(), {}, {}});
}

TEST_CASE("tetra lift and projection") {
  const KnowledgeBase kb = parse_kb(golden::kEx1);
  PowersetLattice l{kb.ka};
  AtomId ap = *kb.symbols.find("a'");
  Bi<AtomSet> x{AtomSet::single(ap), AtomSet::single(ap)};
  Tetra<AtomSet> lifted = to_tetra(l, x);
  CHECK(lifted.f == l.comp(x.second));
  CHECK(lifted.u == l.comp(x.first));
  CHECK(to_approx(lifted) == x);

  CHECK(to_tetra(l, Bi<AtomSet>{{}, l.top()}) == prec_bottom4(l));
  CHECK(to_tetra(l, Bi<AtomSet>{l.top(), l.top()}) ==
        Tetra<AtomSet>{l.top(), {}, {}, l.top()});
  CHECK(to_approx(Tetra<AtomSet>{A, B, C, D}) == Bi<AtomSet>{A, D});

  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    Bi<AtomSet> r{testsupport::random_subset(rng, l.universe),
                  testsupport::random_subset(rng, l.universe)};
    CHECK(to_approx(to_tetra(l, r)) == r);
  }
}

TEST_CASE("least fixpoint iteration") {
  PowersetLattice l{AtomSet::first_n(2)};
  auto id = [](AtomSet s) { return s; };
  CHECK(lfp(l, id, AtomSet::none(), l.iter_bound()) == AtomSet::none());

  auto close_a = [](AtomSet s) { return s | A; };
  CHECK(lfp(l, close_a, AtomSet::none(), l.iter_bound()) == A);

  // Monotone-increasing steps over n atoms settle within n+1 applications.
  Rng rng(17);
  PowersetLattice big{AtomSet::first_n(8)};
  for (int i = 0; i < 200; ++i) {
    AtomSet seed = testsupport::random_subset(rng, big.universe);
    auto step = [&](AtomSet s) { return s | seed; };
    CHECK(lfp(big, step, AtomSet::none(), big.universe.size() + 1) == seed);
  }
}

TEST_CASE("least fixpoint of the blocked-rule closure") {
  // Upper-bound step of the first revision of ex1: rule heads minus the
  // ontology-refuted head.
  const KnowledgeBase kb = parse_kb(golden::kEx1);
  PhiOperator phi(kb, PhiConfig{});
  PowersetLattice l{kb.ka};
  auto step = [&](AtomSet p) {
    return phi(Tetra<AtomSet>{{}, {}, l.top(), p}).p;
  };
  AtomSet expected = AtomSet::single(*kb.symbols.find("a")) |
                     AtomSet::single(*kb.symbols.find("a'"));
  CHECK(lfp(l, step, AtomSet::none(), l.iter_bound()) == expected);
}

TEST_CASE("non-convergent step reports") {
  PowersetLattice l{AtomSet::first_n(1)};
  auto flip = [&](AtomSet s) { return l.comp(s); };
  CHECK_THROWS_AS(lfp(l, flip, AtomSet::none(), l.iter_bound()), NonConvergence);
}

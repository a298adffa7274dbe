#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "mknf/lattice.hpp"

namespace mknf {

template <class L>
using BiOp = std::function<Bi<typename L::Elem>(const Bi<typename L::Elem>&)>;

template <class L>
using TetraOp = std::function<Tetra<typename L::Elem>(const Tetra<typename L::Elem>&)>;

// Inner-iteration log of one stable-revision application: the Kleene chains
// of the (t, f) half and the (u, p) half.
template <class E>
struct InnerLog {
  std::vector<Bi<E>> lower;
  std::vector<Bi<E>> upper;
};

// Outer iteration history of least_stable_fixpoint. outer[0] is the start
// element; inner[i] logs the application producing outer[i + 1].
template <class E>
struct StableTrace {
  std::vector<Tetra<E>> outer;
  std::vector<InnerLog<E>> inner;
};

namespace detail {

template <class L, class Step>
Bi<typename L::Elem> lfp_pair(const L& l, Step&& step, std::vector<Bi<typename L::Elem>>* log) {
  using E = typename L::Elem;
  Bi<E> x{l.bot(), l.bot()};
  int bound = 2 * l.iter_bound();
  if (log) log->push_back(x);
  for (int i = 0; i < bound; ++i) {
    Bi<E> y = step(x);
    if (l.eq(y.first, x.first) && l.eq(y.second, x.second)) return x;
    x = y;
    if (log) log->push_back(x);
  }
  throw NonConvergence("inner revision did not converge");
}

}  // namespace detail

// Stable revision on the induced bilattice: the pair of inner least
// fixpoints, each iterated from bot with the other slot held fixed.
template <class L>
Bi<typename L::Elem> stable_revision_bi(const L& l, const BiOp<L>& o,
                                        const Bi<typename L::Elem>& x) {
  using E = typename L::Elem;
  E first = lfp(
      l, [&](const E& a) { return o(Bi<E>{a, x.second}).first; }, l.bot(), l.iter_bound());
  E second = lfp(
      l, [&](const E& b) { return o(Bi<E>{x.first, b}).second; }, l.bot(), l.iter_bound());
  return {first, second};
}

// Stable revision on the tetralattice: the (t', f') half is iterated from
// (bot, bot) with (u, p) fixed, and dually for (u', p').
template <class L>
Tetra<typename L::Elem> stable_revision_tetra(const L& l, const TetraOp<L>& o,
                                              const Tetra<typename L::Elem>& x,
                                              InnerLog<typename L::Elem>* log = nullptr) {
  using E = typename L::Elem;
  Bi<E> lo = detail::lfp_pair(
      l,
      [&](const Bi<E>& tf) {
        Tetra<E> y = o(Tetra<E>{tf.first, tf.second, x.u, x.p});
        return Bi<E>{y.t, y.f};
      },
      log ? &log->lower : nullptr);
  Bi<E> hi = detail::lfp_pair(
      l,
      [&](const Bi<E>& up) {
        Tetra<E> y = o(Tetra<E>{x.t, x.f, up.first, up.second});
        return Bi<E>{y.u, y.p};
      },
      log ? &log->upper : nullptr);
  return {lo.first, lo.second, hi.first, hi.second};
}

// Iterates stable revision from the precision-least element until two
// consecutive outputs agree; returns the fixpoint and the full trace.
template <class L>
std::pair<Tetra<typename L::Elem>, StableTrace<typename L::Elem>> least_stable_fixpoint(
    const L& l, const TetraOp<L>& o) {
  using E = typename L::Elem;
  StableTrace<E> trace;
  Tetra<E> x = prec_bottom4(l);
  trace.outer.push_back(x);
  int bound = 4 * l.iter_bound() + 4;
  for (int i = 0; i < bound; ++i) {
    InnerLog<E> log;
    Tetra<E> y = stable_revision_tetra(l, o, x, &log);
    trace.inner.push_back(std::move(log));
    if (y == x) {
      trace.outer.push_back(y);
      return {x, std::move(trace)};
    }
    x = y;
    trace.outer.push_back(x);
  }
  throw NonConvergence("outer stable revision did not converge");
}

// True iff slots (2, 3) of o(x) are (comp p, comp t) for every sample.
template <class L>
bool check_recurrent(const L& l, const TetraOp<L>& o,
                     const std::vector<Tetra<typename L::Elem>>& samples) {
  for (const auto& x : samples) {
    Tetra<typename L::Elem> y = o(x);
    if (!l.eq(y.f, l.comp(x.p)) || !l.eq(y.u, l.comp(x.t))) return false;
  }
  return true;
}

// Relaxed precision-monotonicity check: on precision-ordered pairs it
// suffices to compare the (1, 4) projections under the bilattice precision
// order. Pairs that are not precision-ordered are rejected.
template <class L>
bool check_p4_monotone(const L& l, const TetraOp<L>& o,
                       const std::vector<std::pair<Tetra<typename L::Elem>,
                                                   Tetra<typename L::Elem>>>& pairs) {
  for (const auto& [x, y] : pairs) {
    if (!prec_leq(l, x, y)) throw InvalidSample("pair is not precision-ordered");
    if (!prec_leq(l, to_approx(o(x)), to_approx(o(y)))) return false;
  }
  return true;
}

// Increasing variant: slot 1 joins comp u, slot 4 drops f; the recurrent
// slots stay forced.
template <class L>
TetraOp<L> make_increasing(const L& l, TetraOp<L> o) {
  using E = typename L::Elem;
  return [&l, o = std::move(o)](const Tetra<E>& x) {
    Tetra<E> y = o(x);
    return Tetra<E>{l.join(y.t, l.comp(x.u)), l.comp(x.p), l.comp(x.t),
                    l.meet(y.p, l.comp(x.f))};
  };
}

// Decreasing variant: slot 1 is capped away from u, slot 4 joins comp f.
template <class L>
TetraOp<L> make_decreasing(const L& l, TetraOp<L> o) {
  using E = typename L::Elem;
  return [&l, o = std::move(o)](const Tetra<E>& x) {
    Tetra<E> y = o(x);
    return Tetra<E>{l.meet(y.t, l.comp(x.u)), l.comp(x.p), l.comp(x.t),
                    l.join(y.p, l.comp(x.f))};
  };
}

// All consistent approximations (t, p), t <= p, whose recurrent-shaped
// lift (t, comp p, comp t, p) is a fixpoint of stable revision. Sorted by
// (t, p) bit patterns. Refuses signatures above the cap.
inline std::vector<Bi<AtomSet>> enumerate_stable_fixpoints(const PowersetLattice& l,
                                                           const TetraOp<PowersetLattice>& o,
                                                           int cap_atoms = 12) {
  if (l.universe.size() > cap_atoms)
    throw TooLarge("enumeration over " + std::to_string(l.universe.size()) +
                   " atoms exceeds cap " + std::to_string(cap_atoms));
  std::vector<Bi<AtomSet>> out;
  std::uint64_t full = l.universe.bits;
  std::uint64_t t = 0;
  for (;;) {
    std::uint64_t rest = full & ~t;
    std::uint64_t q = 0;
    for (;;) {
      Bi<AtomSet> ap{AtomSet{t}, AtomSet{t | q}};
      Tetra<AtomSet> shaped = to_tetra(l, ap);
      if (stable_revision_tetra(l, o, shaped) == shaped) out.push_back(ap);
      if (q == rest) break;
      q = (q - rest) & rest;
    }
    if (t == full) break;
    t = (t - full) & full;
  }
  std::sort(out.begin(), out.end(), [](const Bi<AtomSet>& a, const Bi<AtomSet>& b) {
    return a.first.bits != b.first.bits ? a.first.bits < b.first.bits
                                        : a.second.bits < b.second.bits;
  });
  return out;
}

}  // namespace mknf

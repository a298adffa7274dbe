#pragma once

#include <string>
#include <utility>

#include "mknf/atomset.hpp"
#include "mknf/errors.hpp"

namespace mknf {

// Pair over a lattice carrier. As an approximation, `first` is the set of
// true atoms and `second` the set of possibly-true atoms.
template <class E>
struct Bi {
  E first{};
  E second{};
  friend bool operator==(const Bi& a, const Bi& b) {
    return a.first == b.first && a.second == b.second;
  }
  friend bool operator!=(const Bi& a, const Bi& b) { return !(a == b); }
};

// 4-tuple over a lattice carrier, read as ((t, f), (u, p)). Tuple flattening
// is built in: the pair-of-pairs view and the flat view are the same object.
template <class E>
struct Tetra {
  E t{};
  E f{};
  E u{};
  E p{};
  Bi<E> lower() const { return {t, f}; }
  Bi<E> upper() const { return {u, p}; }
  friend bool operator==(const Tetra& a, const Tetra& b) {
    return a.t == b.t && a.f == b.f && a.u == b.u && a.p == b.p;
  }
  friend bool operator!=(const Tetra& a, const Tetra& b) { return !(a == b); }
};

// Finite powerset lattice over an interned signature. Elements are AtomSets;
// the complement is relative to the universe.
struct PowersetLattice {
  using Elem = AtomSet;
  AtomSet universe{};

  Elem bot() const { return {}; }
  Elem top() const { return universe; }
  bool leq(Elem a, Elem b) const { return a.subset_of(b); }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem join(Elem a, Elem b) const { return a | b; }
  Elem meet(Elem a, Elem b) const { return a & b; }
  Elem comp(Elem a) const { return universe - a; }
  // Inflationary chains from bot have at most |universe| strict steps.
  int iter_bound() const { return universe.size() + 2; }
};

// The three-element chain bot < mid < top, with mid its own complement.
enum class Tri { Bot, Mid, Top };

inline const char* to_string(Tri v) {
  switch (v) {
    case Tri::Bot: return "bot";
    case Tri::Mid: return "mid";
    case Tri::Top: return "top";
  }
  return "?";
}

struct TriLattice {
  using Elem = Tri;
  Elem bot() const { return Tri::Bot; }
  Elem top() const { return Tri::Top; }
  bool leq(Elem a, Elem b) const { return static_cast<int>(a) <= static_cast<int>(b); }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem join(Elem a, Elem b) const { return leq(a, b) ? b : a; }
  Elem meet(Elem a, Elem b) const { return leq(a, b) ? a : b; }
  Elem comp(Elem a) const {
    switch (a) {
      case Tri::Bot: return Tri::Top;
      case Tri::Mid: return Tri::Mid;
      case Tri::Top: return Tri::Bot;
    }
    return Tri::Mid;
  }
  int iter_bound() const { return 4; }
};

// Orderings on the induced bilattice.
template <class L>
bool truth_leq(const L& l, const Bi<typename L::Elem>& a, const Bi<typename L::Elem>& b) {
  return l.leq(a.first, b.first) && l.leq(a.second, b.second);
}

template <class L>
bool prec_leq(const L& l, const Bi<typename L::Elem>& a, const Bi<typename L::Elem>& b) {
  return l.leq(a.first, b.first) && l.leq(b.second, a.second);
}

// Orderings on the tetralattice (the bilattice built over the truth order).
template <class L>
bool truth_leq(const L& l, const Tetra<typename L::Elem>& a, const Tetra<typename L::Elem>& b) {
  return l.leq(a.t, b.t) && l.leq(a.f, b.f) && l.leq(a.u, b.u) && l.leq(a.p, b.p);
}

template <class L>
bool prec_leq(const L& l, const Tetra<typename L::Elem>& a, const Tetra<typename L::Elem>& b) {
  return l.leq(a.t, b.t) && l.leq(a.f, b.f) && l.leq(b.u, a.u) && l.leq(b.p, a.p);
}

template <class L>
Tetra<typename L::Elem> prec_bottom4(const L& l) {
  return {l.bot(), l.bot(), l.top(), l.top()};
}

template <class L>
Tetra<typename L::Elem> prec_top4(const L& l) {
  return {l.top(), l.top(), l.bot(), l.bot()};
}

// (T, P) -> (T, comp P, comp T, P).
template <class L>
Tetra<typename L::Elem> to_tetra(const L& l, const Bi<typename L::Elem>& ap) {
  return {ap.first, l.comp(ap.second), l.comp(ap.first), ap.second};
}

// (T, F, U, P) -> (T, P). Inverse of to_tetra on its image.
template <class E>
Bi<E> to_approx(const Tetra<E>& x) {
  return {x.t, x.p};
}

// Kleene iteration from `start`: returns the first element x with
// step(x) = x, applying `step` at most max_iters times.
template <class E, class Step, class Eq>
E lfp(Step&& step, E start, int max_iters, Eq&& eq) {
  E x = std::move(start);
  for (int i = 0; i < max_iters; ++i) {
    E y = step(x);
    if (eq(y, x)) return x;
    x = std::move(y);
  }
  throw NonConvergence("no fixpoint within " + std::to_string(max_iters) +
                       " iterations");
}

template <class L, class Step>
typename L::Elem lfp(const L& l, Step&& step, typename L::Elem start, int max_iters) {
  return lfp(std::forward<Step>(step), start, max_iters,
             [&l](const typename L::Elem& a, const typename L::Elem& b) { return l.eq(a, b); });
}

}  // namespace mknf

#pragma once

#include <bit>
#include <cstdint>

namespace mknf {

using AtomId = int;

// A set of interned atoms over a signature of at most 64 atoms, stored as a
// bit-vector. Pure value type; set algebra is bitwise.
struct AtomSet {
  std::uint64_t bits = 0;

  static constexpr AtomSet none() { return {}; }
  static constexpr AtomSet single(AtomId i) { return {std::uint64_t{1} << i}; }
  static constexpr AtomSet first_n(int n) {
    return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool contains(AtomId i) const { return (bits >> i) & 1; }
  constexpr bool subset_of(AtomSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(AtomSet o) const { return (bits & o.bits) != 0; }

  friend constexpr AtomSet operator|(AtomSet a, AtomSet b) { return {a.bits | b.bits}; }
  friend constexpr AtomSet operator&(AtomSet a, AtomSet b) { return {a.bits & b.bits}; }
  friend constexpr AtomSet operator-(AtomSet a, AtomSet b) { return {a.bits & ~b.bits}; }
  friend constexpr bool operator==(AtomSet a, AtomSet b) { return a.bits == b.bits; }
  friend constexpr bool operator!=(AtomSet a, AtomSet b) { return a.bits != b.bits; }
  AtomSet& operator|=(AtomSet o) { bits |= o.bits; return *this; }
  AtomSet& operator&=(AtomSet o) { bits &= o.bits; return *this; }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t m = bits; m; m &= m - 1) f(AtomId(std::countr_zero(m)));
  }
};

}  // namespace mknf

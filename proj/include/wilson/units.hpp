#pragma once

#include <vector>

#include "wilson/arith.hpp"

namespace wilson {

/// Default ceiling on n for anything that materializes all units mod n.
inline constexpr u64 kDefaultEnumerationCap = 10'000'000;

/// The multiplicative group U(Z/nZ), elements sorted ascending.
///
/// For n = 1 the ring has a single element, 0 = 1, so the group is {0}.
struct UnitGroup {
  u64 n = 1;
  u64 phi = 1;
  u64 lambda = 1;
  std::vector<u64> elements;
  bool is_cyclic = true;
};

/// The cyclic subgroup generated by one unit, elements sorted ascending.
struct Subgroup {
  u64 n = 1;
  u64 generator = 0;
  std::vector<u64> elements;
  u64 order = 1;
};

/// Throws EnumerationTooLarge when n > cap and std::invalid_argument for n = 0.
UnitGroup enumerate_units(u64 n, u64 cap = kDefaultEnumerationCap);

/// Coprimality mask over [0, n): mask[a] is true iff gcd(a, n) = 1.
/// Built by striking out multiples of each prime factor of n.
std::vector<bool> unit_mask(const Factorization& f);

/// Least t >= 1 with a^t = 1 mod n, found by dividing prime factors out of
/// lambda(n). Throws NotAUnit when gcd(a, n) != 1.
u64 element_order(u64 a, u64 n);

/// <g> as an explicit element list. Throws NotAUnit when gcd(g, n) != 1 and
/// EnumerationTooLarge when the order of g exceeds cap.
Subgroup cyclic_subgroup(u64 g, u64 n, u64 cap = kDefaultEnumerationCap);

/// True iff n is 1, 2, 4, p^k or 2p^k for an odd prime p.
bool has_primitive_root(u64 n);
bool has_primitive_root(const Factorization& f);

}  // namespace wilson

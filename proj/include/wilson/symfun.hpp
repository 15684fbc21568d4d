#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wilson/arith.hpp"

namespace wilson {

using BigInt = boost::multiprecision::cpp_int;

/// s_1, ..., s_m of a residue multiset, reduced mod n: values[k-1] = s_k.
/// An empty input produces m = 0 and no values.
struct SymmetricProfile {
  u64 n = 1;
  u64 m = 0;
  std::vector<u64> values;

  bool empty() const { return m == 0; }

  friend bool operator==(const SymmetricProfile&, const SymmetricProfile&) = default;
};

/// Expands prod (x - a_i) in Z_n[x] one linear factor at a time and reads
/// s_k = (-1)^k [x^(m-k)] off the coefficient vector. O(m^2) multiplications,
/// no divisions, so it is valid for composite n.
SymmetricProfile elementary_symmetrics_mod(std::span<const u64> elements, u64 n);

/// Same expansion over unbounded integers. Returns an empty vector for empty input.
std::vector<BigInt> elementary_symmetrics_exact(std::span<const u64> elements);

/// floor(k/m) * (-1)^(m+1) as a canonical residue mod n: zero for k < m,
/// and -1 or +1 mod n at k = m depending on the parity of m.
u64 predicted_symmetric(u64 m, u64 k, u64 n);

}  // namespace wilson

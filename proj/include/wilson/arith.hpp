#pragma once

/**
 * @file arith.hpp
 * @brief Word-size integer and modular arithmetic.
 *
 * Everything here works on unsigned 64-bit values. Moduli up to 2^63 - 1
 * are supported; products are formed in a 128-bit intermediate so results
 * are exact for every supported modulus.
 */

#include <cstdint>
#include <span>
#include <vector>

namespace wilson {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Largest modulus the arithmetic layer promises to handle exactly.
inline constexpr u64 kMaxModulus = (u64{1} << 63) - 1;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n together with its prime-power decomposition, primes strictly
/// increasing. n = 1 has no factors.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  /// Product of prime^exponent over all factors.
  u64 value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Canonical residue: 0 <= value < modulus.
class Residue {
 public:
  Residue(u64 value, u64 modulus);

  /// -1 reduced mod n; that is n - 1, or 0 when n = 1.
  static Residue minus_one(u64 modulus);

  u64 value() const { return value_; }
  u64 modulus() const { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  u64 value_;
  u64 modulus_;
};

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// (a * b) mod n. Throws std::invalid_argument when n = 0.
u64 mod_mul(u64 a, u64 b, u64 n);

/// a^e mod n by square-and-multiply; a^0 = 1 mod n.
u64 mod_pow(u64 a, u64 e, u64 n);

/// Inverse of a mod n. Throws NotInvertible when gcd(a, n) != 1.
u64 mod_inv(u64 a, u64 n);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Trial division by primes up to 10^6, then Pollard-Brent rho on
/// whatever cofactor remains. Throws std::invalid_argument for n = 0.
Factorization factorize(u64 n);

u64 euler_phi(const Factorization& f);
u64 carmichael_lambda(const Factorization& f);

/// phi(lo), ..., phi(hi) by a segmented sieve. Requires 1 <= lo <= hi.
std::vector<u64> totients_in_range(u64 lo, u64 hi);

/// Reduction modulo a fixed n with a precomputed Barrett reciprocal.
///
/// `mul_add(x, a, b)` returns (x + a*b) mod n for x, a, b < n. For n < 2^32
/// the sum fits in 64 bits and is reduced with a single high multiply;
/// larger moduli fall back to 128-bit division.
class Reducer {
 public:
  explicit Reducer(u64 n);

  u64 modulus() const { return n_; }

  u64 mul_add(u64 x, u64 a, u64 b) const {
    return small_ ? mul_add_word(x, a, b) : mul_add_wide(x, a, b);
  }

  /// True when mul_add_word may be used (2 <= n < 2^32).
  bool word_sized() const { return small_; }

  u64 mul_add_word(u64 x, u64 a, u64 b) const {
    const u64 t = x + a * b;
    const u64 q = static_cast<u64>((static_cast<u128>(t) * inv_) >> 64);
    const u64 r = t - q * n_;
    return r >= n_ ? r - n_ : r;
  }

  u64 mul_add_wide(u64 x, u64 a, u64 b) const {
    return static_cast<u64>((static_cast<u128>(a) * b + x) % n_);
  }

  u64 mul(u64 a, u64 b) const { return mul_add(0, a, b); }

 private:
  u64 n_;
  u64 inv_ = 0;  // floor(2^64 / n) when small_
  bool small_ = false;
};

}  // namespace wilson

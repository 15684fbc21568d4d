#include "wilson/arith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wilson/errors.hpp"

namespace wilson {

namespace {

constexpr u64 kTrialDivisionBound = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool is_strong_probable_prime(u64 n, u64 base, u64 d, int s) {
  base %= n;
  if (base == 0) return true;
  u64 x = mod_pow(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mod_mul(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho. n must be odd and composite.
u64 pollard_brent(u64 n) {
  constexpr u64 kBatch = 128;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mod_mul(v, v, n) + c) % n; };
    u64 y = 2, x = 2, ys = 2, g = 1, q = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mod_mul(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_cofactor(u64 m, std::vector<u64>& primes) {
  if (m == 1) return;
  if (is_prime(m)) {
    primes.push_back(m);
    return;
  }
  const u64 d = pollard_brent(m);
  split_cofactor(d, primes);
  split_cofactor(m / d, primes);
}

u64 prime_power(u64 p, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

u64 Factorization::value() const {
  u64 r = 1;
  for (const auto& [p, e] : factors) r *= prime_power(p, e);
  return r;
}

Residue::Residue(u64 value, u64 modulus) : value_(0), modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("residue modulus must be positive");
  value_ = value % modulus;
}

Residue Residue::minus_one(u64 modulus) { return Residue(modulus - 1, modulus); }

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) { return std::lcm(a, b); }

u64 mod_mul(u64 a, u64 b, u64 n) {
  if (n == 0) throw std::invalid_argument("mod_mul: modulus must be positive");
  return static_cast<u64>(static_cast<u128>(a) * b % n);
}

u64 mod_pow(u64 a, u64 e, u64 n) {
  if (n == 0) throw std::invalid_argument("mod_pow: modulus must be positive");
  u64 result = 1 % n;
  a %= n;
  while (e > 0) {
    if (e & 1) result = mod_mul(result, a, n);
    a = mod_mul(a, a, n);
    e >>= 1;
  }
  return result;
}

u64 mod_inv(u64 a, u64 n) {
  if (n == 0) throw std::invalid_argument("mod_inv: modulus must be positive");
  // Extended Euclid on (a, n) tracking only the coefficient of a.
  __int128 old_r = a % n, r = n;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw NotInvertible(std::to_string(a) + " is not invertible mod " + std::to_string(n));
  }
  __int128 inv = old_s % static_cast<__int128>(n);
  if (inv < 0) inv += n;
  return static_cast<u64>(inv);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  const int s = std::countr_zero(n - 1);
  const u64 d = (n - 1) >> s;
  // Sinclair's base set: no strong pseudoprime below 2^64 passes all seven.
  for (u64 base : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!is_strong_probable_prime(n, base, d, s)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f{n, {}};
  u64 m = n;
  for (u64 p : small_primes()) {
    if (p * p > m) break;
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (m == 1) return f;

  // m has no prime factor <= 10^6, or m itself is prime.
  std::vector<u64> rest;
  split_cofactor(m, rest);
  std::sort(rest.begin(), rest.end());
  for (u64 p : rest) {
    if (!f.factors.empty() && f.factors.back().prime == p) {
      ++f.factors.back().exponent;
    } else {
      f.factors.push_back({p, 1});
    }
  }
  return f;
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors) phi *= prime_power(p, e - 1) * (p - 1);
  return phi;
}

u64 carmichael_lambda(const Factorization& f) {
  u64 lambda = 1;
  for (const auto& [p, e] : f.factors) {
    u64 component;
    if (p == 2) {
      component = e == 1 ? 1 : e == 2 ? 2 : prime_power(2, e - 2);
    } else {
      component = prime_power(p, e - 1) * (p - 1);
    }
    lambda = lcm(lambda, component);
  }
  return lambda;
}

std::vector<u64> totients_in_range(u64 lo, u64 hi) {
  if (lo == 0 || lo > hi) throw std::invalid_argument("totients_in_range: need 1 <= lo <= hi");
  const std::size_t len = hi - lo + 1;
  std::vector<u64> phi(len), rest(len);
  for (std::size_t i = 0; i < len; ++i) phi[i] = rest[i] = lo + i;

  const auto& primes = small_primes();
  for (u64 p : primes) {
    if (p > hi / p) break;
    for (u64 m = (lo + p - 1) / p * p; m <= hi; m += p) {
      const std::size_t i = m - lo;
      phi[i] -= phi[i] / p;
      while (rest[i] % p == 0) rest[i] /= p;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (rest[i] > 1) {
      if (rest[i] > kTrialDivisionBound * kTrialDivisionBound) {
        // Beyond the sieve's reach; fall back to a full factorization.
        phi[i] = euler_phi(factorize(lo + i));
      } else {
        phi[i] -= phi[i] / rest[i];
      }
    }
  }
  return phi;
}

Reducer::Reducer(u64 n) : n_(n) {
  if (n == 0) throw std::invalid_argument("Reducer: modulus must be positive");
  if (n >= 2 && n < (u64{1} << 32)) {
    small_ = true;
    inv_ = static_cast<u64>((static_cast<u128>(1) << 64) / n);
  }
}

}  // namespace wilson

#include "wilson/units.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wilson/errors.hpp"

namespace wilson {

namespace {

void require_unit(u64 a, u64 n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  if (a >= n || gcd(a, n) != 1) {
    throw NotAUnit(std::to_string(a) + " is not a unit mod " + std::to_string(n));
  }
}

}  // namespace

std::vector<bool> unit_mask(const Factorization& f) {
  const u64 n = f.n;
  if (n == 1) return {true};
  std::vector<bool> mask(n, true);
  mask[0] = false;
  for (const auto& pp : f.factors) {
    for (u64 m = pp.prime; m < n; m += pp.prime) mask[m] = false;
  }
  return mask;
}

UnitGroup enumerate_units(u64 n, u64 cap) {
  if (n == 0) throw std::invalid_argument("enumerate_units: n must be positive");
  if (n > cap) {
    throw EnumerationTooLarge("modulus " + std::to_string(n) + " exceeds enumeration cap " +
                              std::to_string(cap));
  }
  const Factorization f = factorize(n);
  UnitGroup g;
  g.n = n;
  g.phi = euler_phi(f);
  g.lambda = carmichael_lambda(f);
  g.is_cyclic = g.lambda == g.phi;
  if (n == 1) {
    g.elements = {0};
    return g;
  }
  const auto mask = unit_mask(f);
  g.elements.reserve(g.phi);
  for (u64 a = 1; a < n; ++a) {
    if (mask[a]) g.elements.push_back(a);
  }
  return g;
}

u64 element_order(u64 a, u64 n) {
  require_unit(a, n);
  const u64 lambda = carmichael_lambda(factorize(n));
  u64 order = lambda;
  for (const auto& [p, e] : factorize(lambda).factors) {
    for (unsigned i = 0; i < e && order % p == 0; ++i) {
      if (mod_pow(a, order / p, n) != 1 % n) break;
      order /= p;
    }
  }
  return order;
}

Subgroup cyclic_subgroup(u64 g, u64 n, u64 cap) {
  require_unit(g, n);
  const u64 order = element_order(g, n);
  if (order > cap) {
    throw EnumerationTooLarge("subgroup order " + std::to_string(order) +
                              " exceeds enumeration cap " + std::to_string(cap));
  }
  Subgroup h;
  h.n = n;
  h.generator = g;
  h.order = order;
  h.elements.reserve(order);
  u64 x = 1 % n;
  for (u64 j = 0; j < order; ++j) {
    h.elements.push_back(x);
    x = mod_mul(x, g, n);
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

bool has_primitive_root(const Factorization& f) {
  const u64 n = f.n;
  if (n == 1 || n == 2 || n == 4) return true;
  const auto& fs = f.factors;
  if (fs.size() == 1) return fs[0].prime != 2;
  return fs.size() == 2 && fs[0] == PrimePower{2, 1};
}

bool has_primitive_root(u64 n) { return has_primitive_root(factorize(n)); }

}  // namespace wilson

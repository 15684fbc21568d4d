#include "wilson/symfun.hpp"

#include <stdexcept>

namespace wilson {

SymmetricProfile elementary_symmetrics_mod(std::span<const u64> elements, u64 n) {
  if (n == 0) throw std::invalid_argument("elementary_symmetrics_mod: modulus must be positive");
  SymmetricProfile profile{n, elements.size(), {}};
  if (elements.empty()) return profile;

  const Reducer mod(n);
  const std::size_t m = elements.size();

  // coeff[j] is the coefficient of x^(deg - j) in the running product, so
  // multiplying by (x - a) maps coeff[j] to coeff[j] - a * coeff[j-1].
  std::vector<u64> coeff(m + 1, 0);
  coeff[0] = 1 % n;
  auto expand = [&](auto mul_add) {
    std::size_t deg = 0;
    for (u64 a : elements) {
      if (a >= n) throw std::invalid_argument("elementary_symmetrics_mod: element not reduced mod n");
      const u64 neg_a = a == 0 ? 0 : n - a;
      ++deg;
      for (std::size_t j = deg; j >= 1; --j) coeff[j] = mul_add(coeff[j], neg_a, coeff[j - 1]);
    }
  };
  if (mod.word_sized()) {
    expand([&mod](u64 x, u64 a, u64 b) { return mod.mul_add_word(x, a, b); });
  } else {
    expand([&mod](u64 x, u64 a, u64 b) { return mod.mul_add_wide(x, a, b); });
  }

  profile.values.resize(m);
  for (std::size_t k = 1; k <= m; ++k) {
    const u64 c = coeff[k];
    profile.values[k - 1] = (k % 2 == 0 || c == 0) ? c : n - c;
  }
  return profile;
}

std::vector<BigInt> elementary_symmetrics_exact(std::span<const u64> elements) {
  const std::size_t m = elements.size();
  std::vector<BigInt> coeff(m + 1);
  if (m == 0) return {};
  coeff[0] = 1;
  std::size_t deg = 0;
  for (u64 a : elements) {
    ++deg;
    for (std::size_t j = deg; j >= 1; --j) coeff[j] -= coeff[j - 1] * a;
  }
  std::vector<BigInt> s(m);
  for (std::size_t k = 1; k <= m; ++k) s[k - 1] = k % 2 == 0 ? coeff[k] : BigInt(-coeff[k]);
  return s;
}

u64 predicted_symmetric(u64 m, u64 k, u64 n) {
  if (n == 0) throw std::invalid_argument("predicted_symmetric: modulus must be positive");
  if (k == 0 || k > m) throw std::invalid_argument("predicted_symmetric: need 1 <= k <= m");
  if (k < m) return 0;
  return m % 2 == 1 ? 1 % n : Residue::minus_one(n).value();
}

}  // namespace wilson

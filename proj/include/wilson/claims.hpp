#pragma once

/**
 * @file claims.hpp
 * @brief Evaluating the Euler-type Wilson identity against computed values.
 *
 * The identity under test says that for the units a_1..a_m of Z/nZ,
 * m = phi(n), every elementary symmetric function s_k with k < m vanishes
 * and s_m = (-1)^(m+1). Nothing here assumes it: each report carries the
 * computed s_k next to the predicted value, and the k = m case is also
 * cross-checked against Gauss's classical product-of-units theorem.
 */

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "wilson/arith.hpp"
#include "wilson/symfun.hpp"
#include "wilson/units.hpp"

namespace wilson {

struct Mismatch {
  u64 k = 0;
  u64 actual = 0;
  u64 predicted = 0;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct ClaimReport {
  u64 n = 1;
  u64 phi = 1;
  bool degenerate = false;  // n <= 2, where phi(n) = 1
  SymmetricProfile actual;
  std::vector<u64> predicted;
  std::vector<Mismatch> mismatches;  // ascending k
  bool holds = true;
  u64 product_of_units = 0;
  u64 gauss_expected = 0;
  bool gauss_matches = true;

  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

/// The k = phi(n) comparison on its own, without the full profile.
struct ProductCheck {
  u64 n = 1;
  u64 phi = 1;
  u64 product = 0;
  u64 predicted = 0;
  bool holds = true;
  u64 gauss_expected = 0;
  bool gauss_matches = true;

  friend bool operator==(const ProductCheck&, const ProductCheck&) = default;
};

struct SubgroupReport {
  u64 n = 1;
  u64 generator = 0;
  u64 order = 1;
  std::vector<u64> elements;
  u64 product = 0;
  u64 predicted = 0;
  bool holds = true;

  friend bool operator==(const SubgroupReport&, const SubgroupReport&) = default;
};

enum class ScanMode { ProductOnly, FullProfile };

std::string_view to_string(ScanMode mode);

struct FailingModulus {
  u64 n = 0;
  u64 first_failing_k = 0;

  friend bool operator==(const FailingModulus&, const FailingModulus&) = default;
};

struct ScanSummary {
  u64 lo = 0;
  u64 hi = 0;
  ScanMode mode = ScanMode::FullProfile;
  u64 total = 0;
  u64 holding = 0;
  std::vector<FailingModulus> failing;  // ascending n
  std::vector<u64> gauss_violations;    // expected to stay empty

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

inline constexpr u64 kDefaultFullProfileBudget = 10'000'000'000;  // sum of phi(n)^2
inline constexpr u64 kDefaultProductBudget = 1'000'000'000;       // sum of phi(n)

struct ScanOptions {
  ScanMode mode = ScanMode::FullProfile;
  unsigned jobs = 1;
  u64 full_profile_budget = kDefaultFullProfileBudget;
  u64 product_budget = kDefaultProductBudget;
  u64 enumeration_cap = kDefaultEnumerationCap;

  // Per-modulus results, delivered on the calling thread in ascending n.
  std::function<void(const ClaimReport&)> on_report;    // FullProfile only
  std::function<void(const ProductCheck&)> on_product;  // ProductOnly only
};

/// Compares s_1..s_m against predicted_symmetric(m, k, n) for every k.
std::vector<Mismatch> compare_with_prediction(std::span<const u64> s, u64 n);

ClaimReport check_unit_claim(u64 n, u64 cap = kDefaultEnumerationCap);
ProductCheck check_unit_product(u64 n, u64 cap = kDefaultEnumerationCap);

/// Gauss: the product of the units mod n is -1 when n has a primitive root
/// and +1 otherwise.
u64 gauss_expected(u64 n);

/// (p-1)! = -1 mod p by a running product. Throws NotPrime for composite p.
bool wilson_check(u64 p, u64 cap = kDefaultEnumerationCap);

SubgroupReport check_subgroup_claim(u64 n, u64 g, u64 cap = kDefaultEnumerationCap);

/// Sum of phi(n)^2 (full profile) or phi(n) (product only) over [lo, hi],
/// saturating at budget + 1 once the budget is exceeded.
u64 estimate_scan_work(u64 lo, u64 hi, ScanMode mode, u64 budget);

/// Runs the claim over every modulus in [lo, hi]. Requires 3 <= lo <= hi.
/// Results are identical for every value of options.jobs.
ScanSummary scan_range(u64 lo, u64 hi, const ScanOptions& options = {});

}  // namespace wilson

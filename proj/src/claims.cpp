#include "wilson/claims.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "wilson/errors.hpp"

namespace wilson {

namespace {

void check_cap(u64 n, u64 cap) {
  if (n > cap) {
    throw EnumerationTooLarge("modulus " + std::to_string(n) + " exceeds enumeration cap " +
                              std::to_string(cap));
  }
}

// Computes compute(n) for n in [lo, hi] on up to `jobs` threads and hands
// each result to consume() in ascending n. Work is done in batches so only
// one batch of results is buffered at a time. If any modulus throws, the
// exception for the smallest such n is rethrown after the batch drains.
template <class Compute, class Consume>
void ordered_parallel_for(u64 lo, u64 hi, unsigned jobs, Compute compute, Consume consume) {
  using Result = decltype(compute(lo));
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (u64 n = lo;; ++n) {
      consume(compute(n));
      if (n == hi) break;
    }
    return;
  }

  const u64 batch = u64{256} * jobs;
  for (u64 start = lo;;) {
    const u64 len = std::min(batch, hi - start + 1);
    std::vector<std::optional<Result>> results(len);
    std::vector<std::exception_ptr> errors(len);
    std::atomic<u64> next{0};
    auto worker = [&] {
      for (u64 i = next.fetch_add(1); i < len; i = next.fetch_add(1)) {
        try {
          results[i].emplace(compute(start + i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < std::min<u64>(jobs, len); ++t) pool.emplace_back(worker);
    }
    for (u64 i = 0; i < len; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      consume(std::move(*results[i]));
    }
    if (hi - start + 1 == len) break;
    start += len;
  }
}

}  // namespace

std::string_view to_string(ScanMode mode) {
  return mode == ScanMode::ProductOnly ? "product" : "full";
}

std::vector<Mismatch> compare_with_prediction(std::span<const u64> s, u64 n) {
  std::vector<Mismatch> out;
  const u64 m = s.size();
  for (u64 k = 1; k <= m; ++k) {
    const u64 predicted = predicted_symmetric(m, k, n);
    if (s[k - 1] != predicted) out.push_back({k, s[k - 1], predicted});
  }
  return out;
}

u64 gauss_expected(u64 n) {
  if (n == 0) throw std::invalid_argument("gauss_expected: n must be positive");
  return has_primitive_root(n) ? Residue::minus_one(n).value() : 1 % n;
}

ClaimReport check_unit_claim(u64 n, u64 cap) {
  const UnitGroup units = enumerate_units(n, cap);
  ClaimReport r;
  r.n = n;
  r.phi = units.phi;
  r.degenerate = n <= 2;
  r.actual = elementary_symmetrics_mod(units.elements, n);
  r.predicted.reserve(r.phi);
  for (u64 k = 1; k <= r.phi; ++k) r.predicted.push_back(predicted_symmetric(r.phi, k, n));
  r.mismatches = compare_with_prediction(r.actual.values, n);
  r.holds = r.mismatches.empty();
  r.product_of_units = r.actual.values.back();
  r.gauss_expected = gauss_expected(n);
  r.gauss_matches = r.product_of_units == r.gauss_expected;
  return r;
}

ProductCheck check_unit_product(u64 n, u64 cap) {
  if (n == 0) throw std::invalid_argument("check_unit_product: n must be positive");
  check_cap(n, cap);
  const Factorization f = factorize(n);
  ProductCheck c;
  c.n = n;
  c.phi = euler_phi(f);
  if (n == 1) {
    c.product = 0;
  } else {
    const auto mask = unit_mask(f);
    const Reducer mod(n);
    u64 product = 1;
    for (u64 a = 2; a < n; ++a) {
      if (mask[a]) product = mod.mul(product, a);
    }
    c.product = product;
  }
  c.predicted = predicted_symmetric(c.phi, c.phi, n);
  c.holds = c.product == c.predicted;
  c.gauss_expected = has_primitive_root(f) ? Residue::minus_one(n).value() : 1 % n;
  c.gauss_matches = c.product == c.gauss_expected;
  return c;
}

bool wilson_check(u64 p, u64 cap) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  check_cap(p, cap);
  const Reducer mod(p);
  u64 product = 1;
  for (u64 a = 2; a < p; ++a) product = mod.mul(product, a);
  return product == p - 1;
}

SubgroupReport check_subgroup_claim(u64 n, u64 g, u64 cap) {
  Subgroup h = cyclic_subgroup(g, n, cap);
  SubgroupReport r;
  r.n = n;
  r.generator = g;
  r.order = h.order;
  u64 product = 1 % n;
  for (u64 a : h.elements) product = mod_mul(product, a, n);
  r.product = product;
  r.predicted = h.order % 2 == 1 ? 1 % n : Residue::minus_one(n).value();
  r.holds = r.product == r.predicted;
  r.elements = std::move(h.elements);
  return r;
}

u64 estimate_scan_work(u64 lo, u64 hi, ScanMode mode, u64 budget) {
  constexpr u64 kSegment = u64{1} << 16;
  u64 work = 0;
  for (u64 start = lo;; start += kSegment) {
    const u64 end = hi - start < kSegment ? hi : start + kSegment - 1;
    for (u64 phi : totients_in_range(start, end)) {
      work += mode == ScanMode::FullProfile ? phi * phi : phi;
      if (work > budget) return budget + 1;
    }
    if (end == hi) break;
  }
  return work;
}

ScanSummary scan_range(u64 lo, u64 hi, const ScanOptions& options) {
  if (lo < 3 || lo > hi) throw std::invalid_argument("scan_range: need 3 <= lo <= hi");
  check_cap(hi, options.enumeration_cap);
  const u64 budget = options.mode == ScanMode::FullProfile ? options.full_profile_budget
                                                           : options.product_budget;
  if (estimate_scan_work(lo, hi, options.mode, budget) > budget) {
    throw RangeTooLarge("scan of [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "] exceeds the " + std::string(to_string(options.mode)) +
                        " work budget of " + std::to_string(budget));
  }

  ScanSummary summary;
  summary.lo = lo;
  summary.hi = hi;
  summary.mode = options.mode;
  summary.total = hi - lo + 1;

  const u64 cap = options.enumeration_cap;
  if (options.mode == ScanMode::FullProfile) {
    ordered_parallel_for(
        lo, hi, options.jobs, [cap](u64 n) { return check_unit_claim(n, cap); },
        [&](const ClaimReport& r) {
          if (r.holds) {
            ++summary.holding;
          } else {
            summary.failing.push_back({r.n, r.mismatches.front().k});
          }
          if (!r.gauss_matches) summary.gauss_violations.push_back(r.n);
          if (options.on_report) options.on_report(r);
        });
  } else {
    ordered_parallel_for(
        lo, hi, options.jobs, [cap](u64 n) { return check_unit_product(n, cap); },
        [&](const ProductCheck& c) {
          if (c.holds) {
            ++summary.holding;
          } else {
            summary.failing.push_back({c.n, c.phi});
          }
          if (!c.gauss_matches) summary.gauss_violations.push_back(c.n);
          if (options.on_product) options.on_product(c);
        });
  }
  return summary;
}

}  // namespace wilson

// Acceptance suite: each criterion is an exact check (no tolerances) and
// prints one PASS/FAIL line. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wilson/claims.hpp"
#include "wilson/report.hpp"

using namespace wilson;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome wilson_recovery() {
  Outcome o;
  u64 primes = 0;
  for (u64 p = 2; p <= 10'000; ++p) {
    if (!oracle::is_prime(p)) continue;
    ++primes;
    if (!wilson_check(p)) o.fail("wilson_check(" + std::to_string(p) + ") is false");
    if (!check_unit_claim(p).holds) o.fail("identity fails at prime " + std::to_string(p));
  }
  if (o.pass) o.detail = std::to_string(primes) + " primes";
  return o;
}

Outcome gauss_agreement() {
  Outcome o;
  for (u64 n = 3; n <= 5'000; ++n) {
    const u64 product = oracle::product_mod(enumerate_units(n).elements, n);
    // -1 exactly when n is 4, p^k or 2p^k, from trial-division factors.
    u64 odd = n % 2 == 0 ? n / 2 : n;
    const bool classical = n == 4 || (odd % 2 == 1 && odd > 1 && oracle::factor(odd).size() == 1);
    const u64 expected = classical ? n - 1 : 1;
    if (gauss_expected(n) != expected) o.fail("gauss_expected(" + std::to_string(n) + ")");
    if (product != expected) o.fail("product of units mod " + std::to_string(n));
    if (check_unit_product(n).product != product) o.fail("check_unit_product(" + std::to_string(n) + ")");
  }
  ScanOptions options;
  options.mode = ScanMode::ProductOnly;
  if (!scan_range(3, 5'000, options).gauss_violations.empty()) o.fail("scan reports Gauss violations");
  if (o.pass) o.detail = "3 <= n <= 5000";
  return o;
}

Outcome claim_anchors() {
  Outcome o;
  if (!check_unit_claim(5).holds) o.fail("n = 5 should hold");
  const auto r8 = check_unit_claim(8);
  if (r8.holds || r8.mismatches != std::vector<Mismatch>{{2, 6, 0}, {4, 1, 7}}) o.fail("n = 8 mismatches");
  const auto r12 = check_unit_claim(12);
  if (r12.holds || r12.mismatches != std::vector<Mismatch>{{2, 10, 0}, {4, 1, 11}}) {
    o.fail("n = 12 mismatches");
  }
  const auto s = scan_range(3, 8);
  if (s.failing != std::vector<FailingModulus>{{8, 2}}) o.fail("scan_range(3, 8) failing set");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (u64 n = 1; n <= 100; ++n) {
    const auto units = enumerate_units(n).elements;
    if (elementary_symmetrics_mod(units, n).values !=
        oracle::reduce(elementary_symmetrics_exact(units), n)) {
      o.fail("profiles differ at n = " + std::to_string(n));
    }
  }
  return o;
}

Outcome subgroup_field_case() {
  Outcome o;
  u64 checked = 0;
  for (u64 p = 2; p <= 200; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (u64 g = 1; g < p; ++g, ++checked) {
      if (!check_subgroup_claim(p, g).holds) {
        o.fail("<" + std::to_string(g) + "> mod " + std::to_string(p));
      }
    }
  }
  const auto r = check_subgroup_claim(8, 3);
  if (r.holds || r.product != 3 || r.predicted != 7) o.fail("(8, 3) counterexample not exhibited");
  if (o.pass) o.detail = std::to_string(checked) + " subgroups; (8,3): 3 != 7";
  return o;
}

Outcome structural_consistency() {
  Outcome o;
  for (u64 n = 1; n <= 2'000; ++n) {
    const auto f = factorize(n);
    if (has_primitive_root(n) != (carmichael_lambda(f) == euler_phi(f))) {
      o.fail("primitive root classification at " + std::to_string(n));
    }
    if (n > 2) {
      u64 sum = 0;
      for (u64 a : enumerate_units(n).elements) sum = (sum + a) % n;
      if (sum != 0) o.fail("sum of units mod " + std::to_string(n));
    }
  }
  return o;
}

std::string serialize(const ScanSummary& s, const std::string& rows) {
  return report::to_json(s).dump() + "\n" + rows;
}

std::string run_scan(u64 lo, u64 hi, ScanMode mode, unsigned jobs, double& elapsed) {
  std::ostringstream rows;
  ScanOptions options;
  options.mode = mode;
  options.jobs = jobs;
  options.on_report = [&](const ClaimReport& r) { report::write_claim_csv_rows(rows, r); };
  options.on_product = [&](const ProductCheck& c) { report::write_product_csv_row(rows, c); };
  const auto t0 = Clock::now();
  const ScanSummary s = scan_range(lo, hi, options);
  elapsed = seconds_since(t0);
  return serialize(s, rows.str());
}

Outcome performance_envelope() {
  Outcome o;
  double product_time = 0, full_time = 0, ignored = 0;
  const std::string product1 = run_scan(3, 30'000, ScanMode::ProductOnly, 1, product_time);
  const std::string full1 = run_scan(3, 2'000, ScanMode::FullProfile, 1, full_time);
  if (product_time >= 10.0) o.fail("product-only scan took " + std::to_string(product_time) + " s");
  if (full_time >= 30.0) o.fail("full-profile scan took " + std::to_string(full_time) + " s");
  for (unsigned jobs : {2u, 4u}) {
    if (run_scan(3, 30'000, ScanMode::ProductOnly, jobs, ignored) != product1) {
      o.fail("product-only output differs at --jobs " + std::to_string(jobs));
    }
    if (run_scan(3, 2'000, ScanMode::FullProfile, jobs, ignored) != full1) {
      o.fail("full-profile output differs at --jobs " + std::to_string(jobs));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "product 3..30000 %.2f s, full 3..2000 %.2f s", product_time,
                full_time);
  if (o.pass) o.detail = buf;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 Wilson recovery on primes <= 10000", wilson_recovery},
      {"2 Gauss oracle agreement 3 <= n <= 5000", gauss_agreement},
      {"3 Claim-status anchors (5, 8, 12, scan 3..8)", claim_anchors},
      {"4 Oracle equivalence n <= 100", oracle_equivalence},
      {"5 Subgroup claim, field case + composite counterexample", subgroup_field_case},
      {"6 Structural consistency n <= 2000", structural_consistency},
      {"7 Performance envelope and --jobs determinism", performance_envelope},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", name, seconds_since(t0),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "wilson/report.hpp"

#include <iomanip>
#include <ostream>

namespace wilson::report {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* bool_str(bool b) { return b ? "true" : "false"; }

void write_list(std::ostream& os, const std::vector<u64>& xs, const char* sep) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

Json to_json(const ClaimReport& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"k", m.k}, {"actual", m.actual}, {"predicted", m.predicted}});
  }
  return {
      {"n", r.n},
      {"phi", r.phi},
      {"degenerate", r.degenerate},
      {"holds", r.holds},
      {"s", r.actual.values},
      {"predicted", r.predicted},
      {"mismatches", std::move(mismatches)},
      {"product_of_units", r.product_of_units},
      {"gauss_expected", r.gauss_expected},
      {"gauss_matches", r.gauss_matches},
  };
}

ClaimReport claim_report_from_json(const Json& j) {
  ClaimReport r;
  r.n = j.at("n").get<u64>();
  r.phi = j.at("phi").get<u64>();
  r.degenerate = j.at("degenerate").get<bool>();
  r.holds = j.at("holds").get<bool>();
  r.actual.n = r.n;
  r.actual.values = j.at("s").get<std::vector<u64>>();
  r.actual.m = r.actual.values.size();
  r.predicted = j.at("predicted").get<std::vector<u64>>();
  for (const auto& m : j.at("mismatches")) {
    r.mismatches.push_back(
        {m.at("k").get<u64>(), m.at("actual").get<u64>(), m.at("predicted").get<u64>()});
  }
  r.product_of_units = j.at("product_of_units").get<u64>();
  r.gauss_expected = j.at("gauss_expected").get<u64>();
  r.gauss_matches = j.at("gauss_matches").get<bool>();
  return r;
}

Json to_json(const SubgroupReport& r) {
  return {
      {"n", r.n},
      {"generator", r.generator},
      {"order", r.order},
      {"elements", r.elements},
      {"product", r.product},
      {"predicted", r.predicted},
      {"holds", r.holds},
  };
}

Json to_json(const ScanSummary& s) {
  Json failing = Json::array();
  for (const auto& f : s.failing) failing.push_back({{"n", f.n}, {"k", f.first_failing_k}});
  return {
      {"lo", s.lo},
      {"hi", s.hi},
      {"mode", std::string(to_string(s.mode))},
      {"total", s.total},
      {"holding", s.holding},
      {"failing", std::move(failing)},
      {"gauss_violations", s.gauss_violations},
  };
}

Json to_json(const UnitGroup& g) {
  return {
      {"n", g.n},
      {"phi", g.phi},
      {"lambda", g.lambda},
      {"is_cyclic", g.is_cyclic},
      {"elements", g.elements},
  };
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({{"prime", p}, {"exponent", e}});
  return {{"n", f.n}, {"factors", std::move(factors)}};
}

Json to_json(const SymmetricProfile& p, const std::vector<BigInt>* exact) {
  Json j = {{"n", p.n}, {"m", p.m}, {"s", p.values}};
  if (exact) {
    Json ex = Json::array();
    for (const auto& v : *exact) ex.push_back(v.str());
    j["exact"] = std::move(ex);
  }
  return j;
}

void write_claim_csv_rows(std::ostream& os, const ClaimReport& r) {
  for (u64 k = 1; k <= r.phi; ++k) {
    const u64 s = r.actual.values[k - 1];
    const u64 p = r.predicted[k - 1];
    os << r.n << ',' << r.phi << ',' << k << ',' << s << ',' << p << ',' << bool_str(s == p)
       << '\n';
  }
}

void write_product_csv_row(std::ostream& os, const ProductCheck& c) {
  os << c.n << ',' << c.phi << ',' << c.product << ',' << c.predicted << ',' << c.gauss_expected
     << ',' << bool_str(c.holds) << '\n';
}

void write_text(std::ostream& os, const ClaimReport& r) {
  os << "n = " << r.n << ", phi = " << r.phi;
  if (r.degenerate) os << " (degenerate)";
  os << '\n';
  os << std::setw(8) << "k" << std::setw(12) << "s_k" << std::setw(12) << "predicted" << '\n';
  for (u64 k = 1; k <= r.phi; ++k) {
    const u64 s = r.actual.values[k - 1];
    const u64 p = r.predicted[k - 1];
    os << std::setw(8) << k << std::setw(12) << s << std::setw(12) << p;
    if (s != p) os << "  mismatch";
    os << '\n';
  }
  if (r.holds) {
    os << "identity holds\n";
  } else {
    os << "identity fails: " << r.mismatches.size() << " mismatch(es), first at k = "
       << r.mismatches.front().k << '\n';
  }
  os << "product of units = " << r.product_of_units << ", Gauss expects " << r.gauss_expected
     << " (" << (r.gauss_matches ? "agrees" : "DISAGREES") << ")\n";
}

void write_text(std::ostream& os, const SubgroupReport& r) {
  os << "<" << r.generator << "> mod " << r.n << ": order " << r.order << ", elements {";
  write_list(os, r.elements, ", ");
  os << "}\n";
  os << "product = " << r.product << ", predicted = " << r.predicted << ": "
     << (r.holds ? "holds" : "fails") << '\n';
}

void write_text(std::ostream& os, const ScanSummary& s) {
  os << "scan [" << s.lo << ", " << s.hi << "] mode " << to_string(s.mode) << '\n';
  os << "total " << s.total << ", holding " << s.holding << ", failing " << s.failing.size()
     << '\n';
  if (!s.failing.empty()) {
    os << "failing (n:k):";
    for (const auto& f : s.failing) os << ' ' << f.n << ':' << f.first_failing_k;
    os << '\n';
  }
  os << "gauss violations: ";
  if (s.gauss_violations.empty()) {
    os << "none";
  } else {
    write_list(os, s.gauss_violations, " ");
  }
  os << '\n';
}

void write_text(std::ostream& os, const UnitGroup& g) {
  os << "U(Z/" << g.n << "Z): phi = " << g.phi << ", lambda = " << g.lambda
     << ", cyclic = " << yes_no(g.is_cyclic) << '\n';
  write_list(os, g.elements, " ");
  os << '\n';
}

void write_text(std::ostream& os, const Factorization& f) {
  os << f.n << " =";
  if (f.factors.empty()) os << " 1";
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    os << (i ? " * " : " ") << f.factors[i].prime;
    if (f.factors[i].exponent > 1) os << '^' << f.factors[i].exponent;
  }
  os << '\n';
}

void write_text(std::ostream& os, const SymmetricProfile& p, const std::vector<BigInt>* exact) {
  for (u64 k = 1; k <= p.m; ++k) {
    os << "s_" << k << " = " << p.values[k - 1];
    if (exact) os << "  (exact " << (*exact)[k - 1] << ')';
    os << '\n';
  }
}

}  // namespace wilson::report

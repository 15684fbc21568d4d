#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wilson/claims.hpp"

namespace wilson::report {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json, Csv };

std::optional<OutputFormat> parse_format(std::string_view name);

Json to_json(const ClaimReport& r);
Json to_json(const SubgroupReport& r);
Json to_json(const ScanSummary& s);
Json to_json(const UnitGroup& g);
Json to_json(const Factorization& f);

/// Exact values are emitted as decimal strings; JSON numbers cannot carry them.
Json to_json(const SymmetricProfile& p, const std::vector<BigInt>* exact = nullptr);

/// Inverse of to_json(ClaimReport). Throws nlohmann::json::exception on
/// missing or mistyped fields.
ClaimReport claim_report_from_json(const Json& j);

inline constexpr std::string_view kClaimCsvHeader = "n,phi,k,s_k,predicted,match";
inline constexpr std::string_view kProductCsvHeader = "n,phi,product,predicted,gauss_expected,match";

/// One row per k, no header.
void write_claim_csv_rows(std::ostream& os, const ClaimReport& r);
void write_product_csv_row(std::ostream& os, const ProductCheck& c);

void write_text(std::ostream& os, const ClaimReport& r);
void write_text(std::ostream& os, const SubgroupReport& r);
void write_text(std::ostream& os, const ScanSummary& s);
void write_text(std::ostream& os, const UnitGroup& g);
void write_text(std::ostream& os, const Factorization& f);
void write_text(std::ostream& os, const SymmetricProfile& p,
                const std::vector<BigInt>* exact = nullptr);

}  // namespace wilson::report

#include "wilson/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "wilson/claims.hpp"
#include "wilson/errors.hpp"
#include "wilson/report.hpp"

namespace wilson::cli {

namespace {

using report::Json;
using report::OutputFormat;

struct Emitter {
  OutputFormat format;
  std::ostream& os;

  void json(const Json& j) const { os << j.dump(2) << '\n'; }
};

void emit_scalar(const Emitter& e, const char* name, u64 n, u64 value) {
  switch (e.format) {
    case OutputFormat::Text:
      e.os << value << '\n';
      break;
    case OutputFormat::Json:
      e.json({{"n", n}, {name, value}});
      break;
    case OutputFormat::Csv:
      e.os << "n," << name << '\n' << n << ',' << value << '\n';
      break;
  }
}

void emit_factor(const Emitter& e, const Factorization& f) {
  switch (e.format) {
    case OutputFormat::Text:
      report::write_text(e.os, f);
      break;
    case OutputFormat::Json:
      e.json(report::to_json(f));
      break;
    case OutputFormat::Csv:
      e.os << "prime,exponent\n";
      for (const auto& [p, k] : f.factors) e.os << p << ',' << k << '\n';
      break;
  }
}

void emit_units(const Emitter& e, const UnitGroup& g) {
  switch (e.format) {
    case OutputFormat::Text:
      report::write_text(e.os, g);
      break;
    case OutputFormat::Json:
      e.json(report::to_json(g));
      break;
    case OutputFormat::Csv:
      e.os << "n,unit\n";
      for (u64 a : g.elements) e.os << g.n << ',' << a << '\n';
      break;
  }
}

void emit_symfun(const Emitter& e, u64 n, bool exact) {
  const UnitGroup g = enumerate_units(n);
  const SymmetricProfile p = elementary_symmetrics_mod(g.elements, n);
  std::vector<BigInt> ex;
  if (exact) ex = elementary_symmetrics_exact(g.elements);
  const auto* exp = exact ? &ex : nullptr;
  switch (e.format) {
    case OutputFormat::Text:
      report::write_text(e.os, p, exp);
      break;
    case OutputFormat::Json:
      e.json(report::to_json(p, exp));
      break;
    case OutputFormat::Csv:
      e.os << (exact ? "k,s_k,exact\n" : "k,s_k\n");
      for (u64 k = 1; k <= p.m; ++k) {
        e.os << k << ',' << p.values[k - 1];
        if (exact) e.os << ',' << ex[k - 1];
        e.os << '\n';
      }
      break;
  }
}

void emit_check(const Emitter& e, const ClaimReport& r) {
  switch (e.format) {
    case OutputFormat::Text:
      report::write_text(e.os, r);
      break;
    case OutputFormat::Json:
      e.json(report::to_json(r));
      break;
    case OutputFormat::Csv:
      e.os << report::kClaimCsvHeader << '\n';
      report::write_claim_csv_rows(e.os, r);
      break;
  }
}

void emit_subgroup(const Emitter& e, const SubgroupReport& r) {
  switch (e.format) {
    case OutputFormat::Text:
      report::write_text(e.os, r);
      break;
    case OutputFormat::Json:
      e.json(report::to_json(r));
      break;
    case OutputFormat::Csv:
      e.os << "n,generator,order,product,predicted,holds\n"
           << r.n << ',' << r.generator << ',' << r.order << ',' << r.product << ','
           << r.predicted << ',' << (r.holds ? "true" : "false") << '\n';
      break;
  }
}

void emit_wilson(const Emitter& e, u64 p, bool holds) {
  switch (e.format) {
    case OutputFormat::Text:
      e.os << "(" << p << " - 1)! = -1 mod " << p << ": " << (holds ? "holds" : "fails") << '\n';
      break;
    case OutputFormat::Json:
      e.json({{"p", p}, {"holds", holds}});
      break;
    case OutputFormat::Csv:
      e.os << "p,holds\n" << p << ',' << (holds ? "true" : "false") << '\n';
      break;
  }
}

void run_scan(const Emitter& e, u64 lo, u64 hi, ScanMode mode, unsigned jobs) {
  ScanOptions options;
  options.mode = mode;
  options.jobs = jobs;
  const bool csv = e.format == OutputFormat::Csv;
  if (csv) {
    e.os << (mode == ScanMode::FullProfile ? report::kClaimCsvHeader : report::kProductCsvHeader)
         << '\n';
    options.on_report = [&](const ClaimReport& r) { report::write_claim_csv_rows(e.os, r); };
    options.on_product = [&](const ProductCheck& c) { report::write_product_csv_row(e.os, c); };
  }
  const ScanSummary summary = scan_range(lo, hi, options);
  if (e.format == OutputFormat::Text) report::write_text(e.os, summary);
  if (e.format == OutputFormat::Json) e.json(report::to_json(summary));
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elementary symmetric functions of unit groups mod n, checked against the "
               "Euler-type Wilson identity",
               "wilson"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string out_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");

  const auto modulus = CLI::Range(u64{1}, kMaxModulus);
  u64 n = 0, g = 0, lo = 0, hi = 0;
  bool exact = false;
  std::string mode_name = "full";
  unsigned jobs = 1;

  std::function<void(const Emitter&)> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  sub("phi", "Euler's totient of N")->add_option("N", n)->required()->check(modulus);
  sub("lambda", "Carmichael function of N")->add_option("N", n)->required()->check(modulus);
  sub("factor", "Prime factorization of N")->add_option("N", n)->required()->check(modulus);
  sub("units", "List the unit group mod N")->add_option("N", n)->required()->check(modulus);
  auto* symfun = sub("symfun", "Elementary symmetric functions of the units mod N");
  symfun->add_option("N", n)->required()->check(modulus);
  symfun->add_flag("--exact", exact, "Also print the exact integer values");
  sub("check", "Compare s_k over the units mod N with the predicted values")
      ->add_option("N", n)
      ->required()
      ->check(modulus);
  auto* subgroup = sub("subgroup", "Check the product identity on the cyclic subgroup <G> mod N");
  subgroup->add_option("N", n)->required()->check(modulus);
  subgroup->add_option("G", g)->required();
  sub("wilson", "Check (P-1)! = -1 mod P")->add_option("P", n)->required()->check(modulus);
  auto* scan = sub("scan", "Check every modulus in [LO, HI]");
  scan->add_option("LO", lo)->required()->check(CLI::Range(u64{3}, kMaxModulus));
  scan->add_option("HI", hi)->required()->check(CLI::Range(u64{3}, kMaxModulus));
  scan->add_option("--mode", mode_name, "product or full")
      ->check(CLI::IsMember({"product", "full"}));
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

  std::vector<const char*> argv{"wilson"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  const OutputFormat format = *report::parse_format(format_name);
  const std::string command = app.get_subcommands().front()->get_name();

  std::ostringstream buffer;
  const Emitter emitter{format, buffer};
  try {
    if (command == "phi") {
      emit_scalar(emitter, "phi", n, euler_phi(factorize(n)));
    } else if (command == "lambda") {
      emit_scalar(emitter, "lambda", n, carmichael_lambda(factorize(n)));
    } else if (command == "factor") {
      emit_factor(emitter, factorize(n));
    } else if (command == "units") {
      emit_units(emitter, enumerate_units(n));
    } else if (command == "symfun") {
      emit_symfun(emitter, n, exact);
    } else if (command == "check") {
      emit_check(emitter, check_unit_claim(n));
    } else if (command == "subgroup") {
      emit_subgroup(emitter, check_subgroup_claim(n, g));
    } else if (command == "wilson") {
      emit_wilson(emitter, n, wilson_check(n));
    } else if (command == "scan") {
      if (lo > hi) throw std::invalid_argument("scan: LO must not exceed HI");
      run_scan(emitter, lo, hi, mode_name == "product" ? ScanMode::ProductOnly : ScanMode::FullProfile,
               jobs);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << buffer.str()) || !file.flush()) {
      err << "error: cannot write " << out_path << '\n';
      return kExitComputation;
    }
  }
  return kExitOk;
}

}  // namespace wilson::cli

// Command-line front end: counting, enumeration, critical-group queries and
// the verification suites, with CSV / JSON-lines / text output.  All integers
// are printed in full decimal (totals overflow 64 bits long before n = 43).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bident/core.hpp"
#include "bident/critical.hpp"
#include "bident/oracle.hpp"
#include "bident/smooth.hpp"
#include "bident/transform.hpp"
#include "bident/verify.hpp"

namespace {

using namespace bident;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int env_cap(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    return fallback;
  }
}

std::string join(const Vec& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void print_structure_row(const std::string& format, const Structure& s, const Int& order) {
  if (format == "json") {
    std::cout << "{\"n\":" << s.n() << ",\"d\":[" << join(s.d(), ",") << "],\"r\":["
              << join(s.r(), ",") << "],\"order\":" << order.get_str() << "}\n";
  } else if (format == "csv") {
    std::cout << s.n() << ",\"" << join(s.d(), " ") << "\",\"" << join(s.r(), " ") << "\","
              << order.get_str() << "\n";
  } else {
    std::cout << "n=" << s.n() << " d=(" << join(s.d(), ",") << ") r=(" << join(s.r(), ",")
              << ") order=" << order.get_str() << "\n";
  }
}

int cmd_count(int from, int to, bool smooth_only, const std::string& format) {
  if (from < 3 || from > to) {
    std::cerr << "count: need 3 <= from <= to\n";
    return kExitUsage;
  }
  std::vector<CountRow> rows = count_table(from, to);
  if (format == "csv") std::cout << (smooth_only ? "n,smooth\n" : "n,smooth,total\n");
  for (const CountRow& row : rows) {
    if (format == "json") {
      std::cout << "{\"n\":" << row.n << ",\"smooth\":" << row.smooth.get_str();
      if (!smooth_only) std::cout << ",\"total\":" << row.total.get_str();
      std::cout << "}\n";
    } else if (format == "csv") {
      std::cout << row.n << "," << row.smooth.get_str();
      if (!smooth_only) std::cout << "," << row.total.get_str();
      std::cout << "\n";
    } else {
      std::cout << "n=" << row.n << " smooth=" << row.smooth.get_str();
      if (!smooth_only) std::cout << " total=" << row.total.get_str();
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_enumerate(int n, bool smooth_only, int max_n, const std::string& format) {
  const int cap = max_n > 0 ? max_n
                            : (smooth_only ? env_cap("BIDENT_SMOOTH_CAP", 60)
                                           : env_cap("BIDENT_ENUM_CAP", 12));
  if (n > cap) {
    std::cerr << "enumerate: n=" << n << " exceeds the cap " << cap
              << " (raise with --max-n or the cap environment variable)\n";
    return kExitUsage;
  }
  if (n < 3) {
    std::cerr << "enumerate: need n >= 3\n";
    return kExitUsage;
  }
  std::vector<Structure> list = smooth_only ? enumerate_smooth(n) : oracle_all(n);
  if (format == "csv") std::cout << "n,d,r,order\n";
  for (const Structure& s : list) print_structure_row(format, s, group_order(s));
  return kExitOk;
}

int cmd_critical_distribution(int n, int max_n, const std::string& format) {
  const int cap = max_n > 0 ? max_n : env_cap("BIDENT_ENUM_CAP", 12);
  if (n > cap) {
    std::cerr << "critical: n=" << n << " exceeds the cap " << cap
              << " (raise with --max-n or BIDENT_ENUM_CAP)\n";
    return kExitUsage;
  }
  if (n < 4) {
    std::cerr << "critical: need n >= 4\n";
    return kExitUsage;
  }
  std::map<long, Int> dist = order_distribution(n);
  if (format == "json") {
    std::cout << "{\"n\":" << n << ",\"orders\":[";
    bool first = true;
    for (const auto& [order, count] : dist) {
      std::cout << (first ? "" : ",") << "[" << order << "," << count.get_str() << "]";
      first = false;
    }
    std::cout << "]}\n";
  } else if (format == "csv") {
    std::cout << "n,order,count\n";
    for (const auto& [order, count] : dist)
      std::cout << n << "," << order << "," << count.get_str() << "\n";
  } else {
    std::cout << "critical group orders on D_" << n << ":\n";
    for (const auto& [order, count] : dist)
      std::cout << "  order " << order << ": " << count.get_str() << "\n";
  }
  return kExitOk;
}

int cmd_critical_order(long m, const std::string& format) {
  if (m < 2) {
    std::cerr << "critical: need --order m >= 2\n";
    return kExitUsage;
  }
  auto [n, witness] = min_vertices_witness(m);
  if (format == "json") {
    std::cout << "{\"order\":" << m << ",\"n\":" << n << ",\"witness\":" << to_json(witness)
              << "}\n";
  } else if (format == "csv") {
    std::cout << "order,n,d,r\n"
              << m << "," << n << ",\"" << join(witness.d(), " ") << "\",\""
              << join(witness.r(), " ") << "\"\n";
  } else {
    std::cout << "smallest bident with a critical group of order " << m << ": n=" << n << "\n"
              << "witness: " << to_json(witness) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_n, const std::string& format) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites.assign(std::begin(kVerifySuites), std::end(kVerifySuites));
  } else {
    suites.push_back(suite);
  }
  bool ok = true;
  if (format == "csv") std::cout << "suite,check,status,cases,detail\n";
  for (const std::string& name : suites) {
    int bound = max_n;
    if (bound < 0 && name == "total-oracle") bound = env_cap("BIDENT_ORACLE_CAP", -1);
    std::vector<CheckResult> results = run_suite(name, bound);
    ok = ok && all_passed(results);
    for (const CheckResult& r : results) {
      const char* status = r.pass ? (r.report_only ? "REPORT-PASS" : "PASS")
                                  : (r.report_only ? "REPORT-FINDING" : "FAIL");
      if (format == "json") {
        std::cout << "{\"suite\":\"" << name << "\",\"check\":\"" << r.name << "\",\"status\":\""
                  << status << "\",\"cases\":" << r.cases << ",\"detail\":\"" << r.detail
                  << "\"}\n";
      } else if (format == "csv") {
        std::cout << name << "," << r.name << "," << status << "," << r.cases << ",\"" << r.detail
                  << "\"\n";
      } else {
        std::cout << status << "  " << r.name << " (" << r.cases << " cases)";
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
      }
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetical structures and critical groups on bident graphs"};
  app.require_subcommand(1);

  int from = 0, to = 0, n = 0, max_n = -1;
  long order_m = -1;
  bool smooth_only = false;
  std::string format = "csv";
  std::string suite;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
  };

  CLI::App* count = app.add_subcommand("count", "count structures for a range of n");
  count->add_option("from", from)->required();
  count->add_option("to", to)->required();
  count->add_flag("--smooth", smooth_only, "only the smooth column");
  add_format(count);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list structures on D_n");
  enumerate->add_option("n", n)->required();
  enumerate->add_flag("--smooth", smooth_only, "smooth structures only");
  enumerate->add_option("--max-n", max_n, "override the enumeration cap");
  add_format(enumerate);

  CLI::App* critical = app.add_subcommand("critical", "critical-group queries");
  critical->add_option("n", n, "distribution of orders on D_n");
  critical->add_option("--order", order_m, "smallest n reaching this order, with witness");
  critical->add_option("--max-n", max_n, "override the enumeration cap");
  add_format(critical);

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify
      ->add_option("suite", suite,
                   "one of lemmas-F, smooth-oracle, total-oracle, critical, bounds, parity, all")
      ->required();
  verify->add_option("--max-n", max_n, "sweep bound (suite default when omitted)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(from, to, smooth_only, format);
    if (enumerate->parsed()) return cmd_enumerate(n, smooth_only, max_n, format);
    if (critical->parsed()) {
      const bool has_n = critical->count("n") > 0;
      const bool has_order = critical->count("--order") > 0;
      if (has_n == has_order) {
        std::cerr << "critical: give either n or --order m\n";
        return kExitUsage;
      }
      return has_order ? cmd_critical_order(order_m, format)
                       : cmd_critical_distribution(n, max_n, format);
    }
    if (verify->parsed()) {
      const bool known =
          suite == "all" || std::any_of(std::begin(kVerifySuites), std::end(kVerifySuites),
                                        [&suite](const char* s) { return suite == s; });
      if (!known) {
        std::cerr << "verify: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      return cmd_verify(suite, max_n, format);
    }
  } catch (const bident::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

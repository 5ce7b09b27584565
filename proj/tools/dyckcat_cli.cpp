// dyckcat: command-line front end for enumeration, classes, canonical forms,
// series and the verification harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dyckcat/error.hpp"
#include "dyckcat/path.hpp"
#include "dyckcat/pattern.hpp"
#include "dyckcat/representatives.hpp"
#include "dyckcat/series.hpp"
#include "dyckcat/verify.hpp"

namespace {

using namespace dyckcat;
using nlohmann::ordered_json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

// Usage problems detected after parsing.
struct UsageError {
  std::string message;
};

Pattern pattern_or_throw(const std::string& name) {
  const auto p = parse_pattern(name);
  if (!p) throw Error(ErrorKind::SyntaxError, "unknown pattern " + name);
  return *p;
}

std::string profile_string(const Profile& prof) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < prof.entries.size(); ++i) {
    if (i) os << ',';
    const auto& e = prof.entries[i];
    if (prof.kind == ProfileKind::Sized) {
      os << '(' << e.position << ',' << e.size << ')';
    } else {
      os << e.position;
    }
  }
  os << '}';
  return os.str();
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_enum(int length, bool list, const std::string& format) {
  if (length < 0) throw UsageError{"length must be non-negative"};
  if (length > kMaxSeriesOrder) throw UsageError{"length above " + std::to_string(kMaxSeriesOrder)};
  if (list && length > kDefaultBruteForceBound) {
    throw UsageError{"--list needs length <= " + std::to_string(kDefaultBruteForceBound)};
  }
  const std::string count = length <= kDefaultBruteForceBound
                                ? std::to_string(count_paths(length))
                                : rational_string(gf("E", length)[length]);
  std::vector<Path> paths;
  if (list) paths = enumerate_paths(length);
  if (format == "json") {
    ordered_json j = {{"length", length}, {"count", count}};
    if (list) {
      ordered_json words = ordered_json::array();
      for (const Path& p : paths) words.push_back(format_path(p));
      j["paths"] = words;
    }
    print_json(j);
  } else if (format == "csv") {
    if (list) {
      std::cout << "n,path\n";
      for (const Path& p : paths) std::cout << length << ',' << format_path(p) << '\n';
    } else {
      std::cout << "n,value\n" << length << ',' << count << '\n';
    }
  } else {
    std::cout << "count: " << count << '\n';
    for (const Path& p : paths) std::cout << format_path(p) << '\n';
  }
  return 0;
}

int cmd_classes(const std::string& pattern_id, int length, bool show, const std::string& format) {
  const Pattern pat = pattern_or_throw(pattern_id);
  if (length < 0 || length > kDefaultBruteForceBound) {
    throw UsageError{"length must be in 0.." + std::to_string(kDefaultBruteForceBound)};
  }
  const ClassPartition classes = partition_classes(length, pat);
  if (format == "json") {
    ordered_json j = {{"pattern", pattern_id}, {"length", length}, {"classes", classes.size()}};
    if (show) {
      ordered_json list = ordered_json::array();
      for (const auto& [prof, members] : classes) {
        ordered_json entries = ordered_json::array();
        for (const auto& e : prof.entries) {
          entries.push_back({{"position", e.position}, {"size", e.size}});
        }
        ordered_json words = ordered_json::array();
        for (const Path& p : members) words.push_back(format_path(p));
        list.push_back({{"profile", entries}, {"members", words}});
      }
      j["profiles"] = list;
    }
    print_json(j);
  } else if (format == "csv") {
    if (show) {
      std::cout << "profile,path\n";
      for (const auto& [prof, members] : classes) {
        for (const Path& p : members) std::cout << '"' << profile_string(prof) << "\"," << format_path(p) << '\n';
      }
    } else {
      std::cout << "n,value\n" << length << ',' << classes.size() << '\n';
    }
  } else {
    std::cout << "classes: " << classes.size() << '\n';
    if (show) {
      for (const auto& [prof, members] : classes) {
        std::cout << profile_string(prof) << ':';
        for (const Path& p : members) std::cout << ' ' << (p.empty() ? "(empty)" : format_path(p));
        std::cout << '\n';
      }
    }
  }
  return 0;
}

int cmd_canon(const std::string& pattern_id, const std::string& word) {
  const Pattern pat = pattern_or_throw(pattern_id);
  const Path p = parse_path(word);
  if (pat == Pattern::DD && static_cast<int>(p.length()) > kDefaultBruteForceBound) {
    throw UsageError{"DD canonical forms need length <= " + std::to_string(kDefaultBruteForceBound)};
  }
  std::cout << format_path(canonical(p, pat)) << '\n';
  return 0;
}

int cmd_series(const std::string& name, int order, const std::string& format) {
  if (order < 0 || order > kMaxSeriesOrder) {
    throw UsageError{"order must be in 0.." + std::to_string(kMaxSeriesOrder)};
  }
  const auto& names = gf_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw UsageError{"unknown series " + name};
  }
  const std::vector<std::string> coeffs = coefficient_strings(gf(name, order));
  if (format == "json") {
    print_json({{"name", name}, {"order", order}, {"coefficients", coeffs}});
  } else if (format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << i << ',' << coeffs[i] << '\n';
  } else {
    for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << (i ? "," : "") << coeffs[i];
    std::cout << '\n';
  }
  return 0;
}

std::vector<Pattern> parse_pattern_list(const std::string& csv) {
  std::vector<Pattern> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(pattern_or_throw(item));
  }
  return out;
}

int cmd_verify(const VerifyConfig& cfg, const std::string& report_path, const std::string& format) {
  if (cfg.max_length < 0 || cfg.max_length > kDefaultBruteForceBound) {
    throw UsageError{"--max-length must be in 0.." + std::to_string(kDefaultBruteForceBound)};
  }
  if (cfg.enum_length < 0 || cfg.enum_length > kDefaultBruteForceBound) {
    throw UsageError{"--enum-length must be in 0.." + std::to_string(kDefaultBruteForceBound)};
  }
  if (cfg.series_order < 0 || cfg.series_order > kMaxSeriesOrder) {
    throw UsageError{"--series-order must be in 0.." + std::to_string(kMaxSeriesOrder)};
  }
  const VerificationReport report = run_verification(cfg);
  const ordered_json j = report.to_json();
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw UsageError{"cannot write " + report_path};
    out << j.dump(2) << '\n';
  }
  if (format == "json") {
    print_json(j);
  } else if (format == "csv") {
    std::cout << "id,params,status\n";
    for (const CheckRecord& r : report.checks) {
      std::string params = r.params.dump();
      std::string quoted;
      for (const char c : params) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      std::cout << r.id << ",\"" << quoted << "\"," << status_name(r.status) << '\n';
    }
  } else {
    for (const CheckRecord& r : report.checks) {
      if (r.status == CheckStatus::Pass) continue;
      std::cout << status_name(r.status) << ' ' << r.id << ' ' << r.params.dump()
                << " expected=" << r.expected.dump() << " actual=" << r.actual.dump() << '\n';
    }
    std::cout << "checks: " << report.checks.size() << " pass: " << report.count(CheckStatus::Pass)
              << " fail: " << report.count(CheckStatus::Fail)
              << " erratum-noted: " << report.count(CheckStatus::ErratumNoted) << '\n'
              << "status: " << (report.passed() ? "pass" : "fail") << '\n';
  }
  return report.passed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck paths with catastrophes: enumeration, pattern classes and series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string format = "text";
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  int length = 0;
  bool list = false;
  auto* en = app.add_subcommand("enum", "Count (and list) paths of a given length");
  en->add_option("--length", length, "Path length")->required();
  en->add_flag("--list", list, "Print every path word");
  add_format(en);

  std::string pattern;
  bool show_profiles = false;
  auto* cl = app.add_subcommand("classes", "Equivalence classes for a pattern");
  cl->add_option("--pattern", pattern, "Pattern id")->required();
  cl->add_option("--length", length, "Path length")->required();
  cl->add_flag("--show-profiles", show_profiles, "Print profiles with their members");
  add_format(cl);

  std::string word;
  auto* ca = app.add_subcommand("canon", "Canonical representative of a path");
  ca->add_option("--pattern", pattern, "Pattern id")->required();
  ca->add_option("--path", word, "Path word, e.g. UUC2UD")->required();

  std::string name;
  int order = kDefaultSeriesOrder;
  auto* se = app.add_subcommand("series", "Expand a generating function");
  se->add_option("--name", name, "Series name")->required();
  se->add_option("--order", order, "Truncation order");
  add_format(se);

  VerifyConfig cfg;
  std::string patterns;
  std::string report_path;
  auto* ve = app.add_subcommand("verify", "Run the cross-validation harness");
  ve->add_option("--max-length", cfg.max_length, "Largest length for class suites");
  ve->add_option("--enum-length", cfg.enum_length, "Largest length for enumeration counts");
  ve->add_option("--series-order", cfg.series_order, "Series truncation order");
  ve->add_option("--patterns", patterns, "Comma-separated pattern ids");
  ve->add_option("--report", report_path, "Write the JSON report here");
  add_format(ve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*en) return cmd_enum(length, list, format);
    if (*cl) return cmd_classes(pattern, length, show_profiles, format);
    if (*ca) return cmd_canon(pattern, word);
    if (*se) return cmd_series(name, order, format);
    if (*ve) {
      if (!patterns.empty()) cfg.patterns = parse_pattern_list(patterns);
      return cmd_verify(cfg, report_path, format);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitUsage;
}

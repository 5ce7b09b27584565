// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero only when a
// criterion outside kKnownUnattainable fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dyckcat/dd.hpp"
#include "dyckcat/pattern.hpp"
#include "dyckcat/representatives.hpp"
#include "dyckcat/series.hpp"
#include "dyckcat/verify.hpp"

using namespace dyckcat;

namespace {

// Criterion 6 asks for raw one-step ratios within 1e-4 of 2 and recurrence
// ratios within 1e-6 of five-digit decimals; neither holds for the exact
// sequences (see the detail line it prints).
const std::set<int> kKnownUnattainable = {6};

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& what) {
    ok = false;
    if (notes.size() < 16) notes.push_back(what);
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

std::string str(double v, int prec = 8) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

std::string_view series_for(Pattern p) {
  switch (p) {
    case Pattern::U: return "A";
    case Pattern::D: return "B";
    case Pattern::C: return "C";
    case Pattern::UU: return "F";
    case Pattern::UD: return "G";
    case Pattern::UC: return "I";
    case Pattern::DC: return "J";
    case Pattern::CU: return "K";
    case Pattern::DU: return "L_DU";
    case Pattern::DD: return "L_DD";
  }
  return "";
}

Outcome criterion1() {
  Outcome o;
  const RationalSeries e = gf("E", 16);
  for (int n = 0; n <= 16; ++n) {
    const auto c = count_paths(n);
    o.expect(mpq_class(static_cast<unsigned long>(c)) == e[n], "count_paths(" + std::to_string(n) + ")");
    o.expect(enumerate_paths(n).size() == c, "enumerate_paths(" + std::to_string(n) + ") size");
  }
  const std::vector<std::uint64_t> want = {1, 0, 1, 1, 3, 5, 12, 23, 52, 105, 232, 480};
  for (int n = 0; n < 12; ++n) {
    o.expect(count_paths(n) == want[static_cast<std::size_t>(n)], "pinned n=" + std::to_string(n));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const Pattern pat : kAllPatterns) {
    const RationalSeries s = gf(series_for(pat), 14);
    for (int n = 2; n <= 14; ++n) {
      const std::size_t c = count_classes(n, pat);
      o.expect(mpq_class(static_cast<unsigned long>(c)) == s[n],
               std::string(pattern_name(pat)) + " n=" + std::to_string(n));
    }
  }
  const std::vector<std::tuple<Pattern, int, std::size_t>> pinned = {
      {Pattern::U, 4, 3},   {Pattern::U, 8, 35},  {Pattern::D, 6, 11},  {Pattern::D, 8, 42},
      {Pattern::C, 10, 34}, {Pattern::UU, 10, 73}, {Pattern::UD, 6, 10}, {Pattern::UC, 7, 9},
      {Pattern::DC, 7, 4},  {Pattern::CU, 8, 8},  {Pattern::DU, 10, 34}, {Pattern::DD, 4, 2},
      {Pattern::DD, 5, 1},  {Pattern::DD, 6, 4},  {Pattern::DD, 10, 27}};
  for (const auto& [pat, n, v] : pinned) {
    o.expect(count_classes(n, pat) == v,
             "pinned " + std::string(pattern_name(pat)) + " n=" + std::to_string(n));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const Pattern pat : kAllPatterns) {
    for (int n = 0; n <= 12; ++n) {
      for (const auto& [prof, members] : partition_classes(n, pat)) {
        const Path* rep = nullptr;
        int reps = 0;
        for (const Path& p : members) {
          if (is_representative(p, pat)) {
            ++reps;
            rep = &p;
          }
        }
        const std::string where = std::string(pattern_name(pat)) + " n=" + std::to_string(n);
        if (reps != 1) {
          o.fail(where + ": " + std::to_string(reps) + " representatives in a class");
          continue;
        }
        for (const Path& p : members) {
          const Path c = canonical(p, pat);
          o.expect(c == *rep, where + ": canonical(" + format_path(p) + ")");
          o.expect(canonical(c, pat) == c, where + ": idempotence at " + format_path(c));
        }
      }
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const std::string& name : recurrence_names()) {
    const RationalSeries s = gf(gf_of_sequence(name), 64);
    const auto terms = recurrence_terms(name, 65);
    for (int n = 0; n <= 64; ++n) {
      o.expect(mpq_class(terms[static_cast<std::size_t>(n)]) == s[n], name + " n=" + std::to_string(n));
    }
  }
  for (const char* name : {"a", "b"}) {
    const RationalSeries s = gf(gf_of_sequence(name), 64);
    for (int n = 0; n <= 64; ++n) {
      o.expect(mpq_class(closed_form_eval(name, n)) == s[n], std::string(name) + " n=" + std::to_string(n));
    }
  }
  for (const std::string& id : identity_names()) {
    o.expect(check_algebraic_identity(id, 64).is_zero(), id + " residual");
  }
  o.expect(parity_merge_check(64), "parity merge to order 64");
  const RationalSeries v = gf("V", 64);
  const RationalSeries n = gf("N", 64);
  o.expect(v[14] == 194, "V x^14");
  o.expect(n[13] == 88, "N x^13");
  for (const PrintedExpansion& pe : printed_expansions()) {
    if (pe.gf != "N" && pe.gf != "V") continue;
    const RationalSeries s = gf(pe.gf, 64);
    for (std::size_t i = 0; i < pe.values.size(); ++i) {
      const int idx = pe.first + static_cast<int>(i) * pe.stride;
      o.expect(s[idx] == pe.values[i], pe.gf + " printed x^" + std::to_string(idx));
    }
  }
  return o;
}

std::vector<int> substituted_dd(const Path& p) {
  std::vector<bool> down;
  for (const Step s : p) {
    if (s.is_catastrophe()) down.insert(down.end(), static_cast<std::size_t>(s.size()), true);
    else down.push_back(s.is_down());
  }
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < p.length(); ++i) {
    if (down[i] && down[i + 1]) out.push_back(static_cast<int>(i));
  }
  return out;
}

Outcome criterion5() {
  Outcome o;
  for (int n = 0; n <= 14; ++n) {
    for (const Path& p : enumerate_paths(n)) {
      if (p.catastrophe_count() != 1) continue;
      for (const Step s : p) {
        if (s.is_catastrophe() && (s.size() - n) % 2 == 0) o.fail("parity at " + format_path(p));
      }
    }
  }
  for (int n = 0; n <= 12; ++n) {
    const auto paths = enumerate_paths(n);
    std::map<std::pair<int, std::vector<int>>, int> condc;
    for (const Path& q : paths) {
      const int cats = q.catastrophe_count();
      const bool final_cat = cats == 1 && q[q.length() - 1].is_catastrophe();
      if ((cats == 0 || final_cat) && satisfies_condition_C(q).holds) {
        ++condc[{cats ? q[q.length() - 1].size() : 0, substituted_dd(q)}];
      }
    }
    for (const Path& p : paths) {
      const Profile prof = occurrences(p, Pattern::DD);
      const int cats = p.catastrophe_count();
      if (cats >= 1) {
        const Path c = collapse_catastrophes(p);
        o.expect(c.length() == p.length() && occurrences(c, Pattern::DD) == prof,
                 "collapse at " + format_path(p));
        const Path e = eliminate_isolated_tail(c);
        o.expect(e.length() == p.length() && occurrences(e, Pattern::DD) == prof,
                 "eliminate at " + format_path(c));
      }
      if (cats == 1 && satisfies_condition_C(p).holds) {
        for (const Step s : p) {
          if (s.is_catastrophe() && s.size() >= 4) {
            const Path r = reduce_catastrophe(p);
            o.expect(r.length() == p.length() && occurrences(r, Pattern::DD) == prof,
                     "reduce at " + format_path(p));
          }
        }
      }
      const bool final_cat = cats == 1 && p[p.length() - 1].is_catastrophe();
      if (cats == 0 || final_cat) {
        const Path q = psi(p);
        const auto key = std::make_pair(cats ? p[p.length() - 1].size() : 0, substituted_dd(p));
        o.expect(satisfies_condition_C(q).holds, "psi condition C at " + format_path(p));
        o.expect(substituted_dd(q) == key.second, "psi profile at " + format_path(p));
        o.expect(condc[key] == 1, "psi uniqueness at " + format_path(p));
      }
    }
  }
  return o;
}

// Literal reading of the asymptotic criterion.
Outcome criterion6() {
  Outcome o;
  for (const char* name : {"a", "b"}) {
    const AsymptoticReport r = asymptotic_diagnostic(name, 2000);
    const double dev = std::abs(r.one_step_ratio - 2);
    o.expect(dev <= 1e-4, std::string(name) + ": a[2001]/a[2000]=" + str(r.one_step_ratio, 10) +
                              " (|.-2|=" + str(dev, 3) + "; normalized two-step " +
                              str(r.growth_statistic, 10) + ")");
  }
  for (const char* name : {"c", "g", "k", "l", "f", "i", "j"}) {
    const AsymptoticReport r = asymptotic_diagnostic(name, 300);
    const double dev = std::abs(r.one_step_ratio - r.printed_base);
    o.expect(dev <= 1e-6, std::string(name) + ": ratio " + str(r.one_step_ratio, 10) + " vs " +
                              str(r.printed_base, 6) + " (" + str(dev, 3) + ")");
  }
  const AsymptoticReport dd = asymptotic_diagnostic("dd", 200);
  o.expect(std::abs(dd.growth_statistic - 3) <= 0.1, "dd statistic " + str(dd.growth_statistic));
  for (const char* name : {"f", "g", "i", "j", "k", "l"}) {
    const AsymptoticReport r = asymptotic_diagnostic(name, 300);
    const double rel = std::abs(r.empirical_constant / r.printed_constant - 1);
    o.expect(rel <= 0.02, std::string(name) + ": prefactor " + str(r.empirical_constant) + " vs " +
                              str(r.printed_constant));
  }
  const DDConstantEstimate est = dd_constant_estimate(400);
  o.notes.push_back("dd constants (reported): even " + str(est.extrapolated_even, 6) + " vs " +
                    str(est.printed_even, 6) + ", odd " + str(est.extrapolated_odd, 6) + " vs " +
                    str(est.printed_odd, 6));
  return o;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* f = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!f) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, got);
  const int st = pclose(f);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome criterion7(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.fail("no CLI path given");
    return o;
  }
  const RunResult canon = run(cli + " canon --pattern U --path UUC2UUC2");
  o.expect(canon.exit_code == 0 && canon.out == "UUDUUC3\n", "canon printed '" + canon.out + "'");

  const auto dir = std::filesystem::temp_directory_path() / ("dyckcat-acc-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto r1 = dir / "r1.json";
  const auto r2 = dir / "r2.json";
  const std::string verify = cli + " verify --max-length 10 --series-order 64 --format json --report ";
  const RunResult v1 = run(verify + r1.string());
  const RunResult v2 = run(verify + r2.string());
  o.expect(v1.exit_code == 0, "verify exit code " + std::to_string(v1.exit_code));
  try {
    const auto report = nlohmann::ordered_json::parse(slurp(r1));
    const std::string problem = validate_report_json(report);
    o.expect(problem.empty(), "report schema: " + problem);
  } catch (const std::exception& e) {
    o.fail(std::string("report is not JSON: ") + e.what());
  }
  o.expect(slurp(r1) == slurp(r2) && v1.out == v2.out, "verify output differs between runs");

  for (const std::string& args :
       {std::string(" canon --pattern DD --path UUUC3"), std::string(" enum --length 8 --list"),
        std::string(" classes --pattern DD --length 8 --show-profiles --format json"),
        std::string(" series --name L_DD --order 40 --format csv")}) {
    const RunResult a = run(cli + args);
    const RunResult b = run(cli + args);
    o.expect(a.exit_code == 0 && a.out == b.out && !a.out.empty(), "nondeterministic:" + args);
  }
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"enumeration vs E(x)", criterion1},
      {"class counts vs generating series", criterion2},
      {"one representative per class, canonical", criterion3},
      {"series identities", criterion4},
      {"DD machinery properties", criterion5},
      {"asymptotic growth and prefactors", criterion6},
      {"CLI", [&] { return criterion7(cli); }},
  };
  bool unexpected = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool known = kKnownUnattainable.count(id) > 0;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first << " ("
              << str(secs, 3) << " s)" << (!o.ok && known ? " [known unattainable]" : "") << "\n";
    for (const std::string& n : o.notes) std::cout << "    " << n << "\n";
    if (!o.ok && !known) unexpected = true;
  }
  return unexpected ? 1 : 0;
}

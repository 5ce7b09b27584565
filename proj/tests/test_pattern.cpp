#include <doctest.h>

#include <set>

#include "dyckcat/error.hpp"
#include "dyckcat/pattern.hpp"
#include "dyckcat/series.hpp"

using namespace dyckcat;

namespace {

const char* kTwoCats = "UUC2UUUDUDDUC2UD";

std::vector<int> positions(std::string_view word, Pattern pat) {
  return occurrences(parse_path(word), pat).positions();
}

// One letter per step, catastrophes collapsed to 'C'.
std::string letters(const Path& p) {
  std::string s;
  for (const Step st : p) s += st.is_up() ? 'U' : (st.is_down() ? 'D' : 'C');
  return s;
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

}  // namespace

TEST_CASE("pattern ids") {
  CHECK(kAllPatterns.size() == 10);
  for (const Pattern p : kAllPatterns) {
    CHECK(parse_pattern(pattern_name(p)) == p);
    const bool has_c = pattern_name(p).find('C') != std::string_view::npos;
    CHECK(pattern_is_sized(p) == has_c);
  }
  CHECK_FALSE(parse_pattern("UUU").has_value());
  CHECK_FALSE(parse_pattern("").has_value());
  CHECK_FALSE(parse_pattern("dd").has_value());
}

TEST_CASE("occurrence examples") {
  CHECK(positions(kTwoCats, Pattern::UU) == std::vector<int>{1, 4, 5});
  const Profile c = occurrences(parse_path("UUC2UUC2"), Pattern::C);
  CHECK(c.kind == ProfileKind::Sized);
  REQUIRE(c.entries.size() == 2);
  CHECK(c.entries[0].position == 3);
  CHECK(c.entries[0].size == 2);
  CHECK(c.entries[1].position == 6);
  CHECK(c.entries[1].size == 2);
  CHECK(positions("UDUD", Pattern::DD).empty());
  CHECK(positions("UUDUUC3", Pattern::U) == std::vector<int>{1, 2, 4, 5});
}

TEST_CASE("D and DD never match catastrophes") {
  CHECK(positions("UUUDC2", Pattern::D) == std::vector<int>{4});
  CHECK(positions("UUUC3", Pattern::D).empty());
  CHECK(positions("UUUDC2", Pattern::DD).empty());
  CHECK(positions("UUUDC2", Pattern::DC) == std::vector<int>{4});
}

TEST_CASE("occurrence heights") {
  const Path fig = parse_path(kTwoCats);
  CHECK(occurrence_height(fig, 1, Pattern::UU) == 0);
  CHECK(occurrence_height(fig, 4, Pattern::UU) == 0);
  CHECK(occurrence_height(fig, 5, Pattern::UU) == 1);
  CHECK(occurrence_height(parse_path("UUDD"), 1, Pattern::UU) == 0);
  CHECK_THROWS_AS(occurrence_height(fig, 2, Pattern::UU), Error);
  try {
    occurrence_height(fig, 2, Pattern::UU);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnOccurrence);
  }
}

TEST_CASE("equivalence examples") {
  const Path a = parse_path("UUDUUC3");
  const Path b = parse_path("UUC2UUC2");
  CHECK(equivalent(a, b, Pattern::U));
  CHECK_FALSE(equivalent(a, b, Pattern::C));
  for (const Pattern pat : kAllPatterns) CHECK(equivalent(a, a, pat));
  CHECK_FALSE(equivalent(parse_path("UD"), parse_path("UDUD"), Pattern::DD));
}

TEST_CASE("occurrences agree with a substring scan") {
  for (int n = 0; n <= 11; ++n) {
    for (const Path& p : enumerate_paths(n)) {
      const std::string w = letters(p);
      for (const Pattern pat : kAllPatterns) {
        const std::string_view needle = pattern_name(pat);
        std::vector<int> want;
        for (std::size_t i = 0; i + needle.size() <= w.size(); ++i) {
          if (w.compare(i, needle.size(), needle) == 0) want.push_back(static_cast<int>(i) + 1);
        }
        const Profile prof = occurrences(p, pat);
        REQUIRE(prof.positions() == want);
        for (const auto& e : prof.entries) {
          CHECK(e.position >= 1);
          CHECK(e.position + pattern_span(pat) - 1 <= n);
          if (pattern_is_sized(pat)) {
            const std::size_t at = static_cast<std::size_t>(e.position - 1) + needle.find('C');
            CHECK(e.size == p[at].size());
          } else {
            CHECK(e.size == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("equivalence is an equivalence relation") {
  for (int n = 0; n <= 8; ++n) {
    const auto paths = enumerate_paths(n);
    for (const Pattern pat : kAllPatterns) {
      for (const Path& a : paths) {
        CHECK(equivalent(a, a, pat));
        for (const Path& b : paths) {
          const bool ab = equivalent(a, b, pat);
          REQUIRE(ab == equivalent(b, a, pat));
          if (!ab) continue;
          for (const Path& c : paths) {
            if (equivalent(b, c, pat)) REQUIRE(equivalent(a, c, pat));
          }
        }
      }
    }
  }
}

TEST_CASE("partition examples") {
  const ClassPartition dd4 = partition_classes(4, Pattern::DD);
  REQUIRE(dd4.size() == 2);
  std::set<std::set<std::string>> buckets;
  for (const auto& [prof, members] : dd4) {
    std::set<std::string> b;
    for (const Path& p : members) b.insert(format_path(p));
    buckets.insert(b);
  }
  CHECK(buckets == std::set<std::set<std::string>>{{"UUDD"}, {"UDUD", "UUUC3"}});
  CHECK(partition_classes(0, Pattern::U).size() == 1);
  const ClassPartition dd5 = partition_classes(5, Pattern::DD);
  REQUIRE(dd5.size() == 1);
  CHECK(dd5.begin()->second.size() == 5);
  CHECK(count_classes(4, Pattern::U) == 3);
  CHECK(count_classes(6, Pattern::UD) == 10);
  CHECK(count_classes(10, Pattern::UU) == 73);
}

TEST_CASE("brute-force bound") {
  CHECK_THROWS_AS(count_classes(17, Pattern::U), Error);
  try {
    partition_classes(20, Pattern::DD);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BruteForceBoundExceeded);
  }
  CHECK(count_classes(6, Pattern::U, 6) == 10);
  CHECK_THROWS_AS(count_classes(7, Pattern::U, 6), Error);
}

TEST_CASE("buckets partition the enumeration") {
  for (int n = 0; n <= 10; ++n) {
    const auto all = enumerate_paths(n);
    for (const Pattern pat : kAllPatterns) {
      std::size_t total = 0;
      std::set<Path> seen;
      for (const auto& [prof, members] : partition_classes(n, pat)) {
        total += members.size();
        for (const Path& p : members) {
          CHECK(occurrences(p, pat) == prof);
          seen.insert(p);
        }
      }
      CHECK(total == all.size());
      CHECK(seen.size() == all.size());
    }
  }
}

TEST_CASE("class counts equal the generating series for n <= 14") {
  for (const Pattern pat : kAllPatterns) {
    const RationalSeries s = gf(series_for(pat), 14);
    for (int n = 0; n <= 14; ++n) {
      INFO(pattern_name(pat) << " n=" << n);
      CHECK(mpq_class(static_cast<unsigned long>(count_classes(n, pat))) == s[n]);
    }
  }
}

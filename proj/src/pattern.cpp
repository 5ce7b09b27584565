#include "dyckcat/pattern.hpp"

#include <algorithm>

#include "dyckcat/error.hpp"

namespace dyckcat {

namespace {

struct PatternInfo {
  Pattern pattern;
  std::string_view name;
};

constexpr std::array<PatternInfo, 10> kInfo = {{
    {Pattern::U, "U"},
    {Pattern::D, "D"},
    {Pattern::C, "C"},
    {Pattern::UU, "UU"},
    {Pattern::UD, "UD"},
    {Pattern::UC, "UC"},
    {Pattern::DC, "DC"},
    {Pattern::CU, "CU"},
    {Pattern::DU, "DU"},
    {Pattern::DD, "DD"},
}};

// Letter-level match: 'C' matches any catastrophe, 'D' only genuine Down steps.
bool letter_matches(Step s, char letter) {
  switch (letter) {
    case 'U': return s.is_up();
    case 'D': return s.is_down();
    default: return s.is_catastrophe();
  }
}

}  // namespace

std::string_view pattern_name(Pattern pat) {
  for (const auto& info : kInfo) {
    if (info.pattern == pat) return info.name;
  }
  return "?";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
  for (const auto& info : kInfo) {
    if (info.name == name) return info.pattern;
  }
  return std::nullopt;
}

int pattern_span(Pattern pat) { return static_cast<int>(pattern_name(pat).size()); }

bool pattern_is_sized(Pattern pat) { return pattern_name(pat).find('C') != std::string_view::npos; }

std::vector<int> Profile::positions() const {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.position);
  return out;
}

Profile occurrences(const Path& p, Pattern pat) {
  const std::string_view letters = pattern_name(pat);
  const std::size_t span = letters.size();
  Profile prof;
  prof.kind = pattern_is_sized(pat) ? ProfileKind::Sized : ProfileKind::Plain;
  prof.path_length = static_cast<int>(p.length());
  if (p.length() < span) return prof;
  for (std::size_t i = 0; i + span <= p.length(); ++i) {
    bool hit = true;
    int size = 0;
    for (std::size_t j = 0; j < span && hit; ++j) {
      hit = letter_matches(p[i + j], letters[j]);
      if (hit && p[i + j].is_catastrophe()) size = p[i + j].size();
    }
    if (hit) prof.entries.push_back({static_cast<int>(i) + 1, size});
  }
  return prof;
}

int occurrence_height(const Path& p, int position, Pattern pat) {
  const Profile prof = occurrences(p, pat);
  const bool found = std::any_of(prof.entries.begin(), prof.entries.end(),
                                 [&](const Profile::Entry& e) { return e.position == position; });
  if (!found) {
    throw Error(ErrorKind::NotAnOccurrence, "no occurrence of " + std::string(pattern_name(pat)) +
                                                " at position " + std::to_string(position));
  }
  const std::vector<int> h = heights(p.steps());
  const auto first = h.begin() + (position - 1);
  return *std::min_element(first, first + pattern_span(pat) + 1);
}

bool equivalent(const Path& p, const Path& q, Pattern pat) {
  return p.length() == q.length() && occurrences(p, pat) == occurrences(q, pat);
}

void require_within_bound(int n, int bound) {
  if (n > bound) {
    throw Error(ErrorKind::BruteForceBoundExceeded,
                "length " + std::to_string(n) + " exceeds brute-force bound " +
                    std::to_string(bound));
  }
}

ClassPartition partition_paths(const std::vector<Path>& paths, Pattern pat) {
  ClassPartition classes;
  for (const Path& p : paths) classes[occurrences(p, pat)].push_back(p);
  return classes;
}

ClassPartition partition_classes(int n, Pattern pat, int bound) {
  require_within_bound(n, bound);
  return partition_paths(enumerate_paths(n), pat);
}

std::size_t count_classes(int n, Pattern pat, int bound) {
  return partition_classes(n, pat, bound).size();
}

}  // namespace dyckcat

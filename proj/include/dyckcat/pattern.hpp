#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyckcat/path.hpp"

namespace dyckcat {

enum class Pattern { U, D, C, UU, UD, UC, DC, CU, DU, DD };

inline constexpr std::array<Pattern, 10> kAllPatterns = {
    Pattern::U,  Pattern::D,  Pattern::C,  Pattern::UU, Pattern::UD,
    Pattern::UC, Pattern::DC, Pattern::CU, Pattern::DU, Pattern::DD};

std::string_view pattern_name(Pattern pat);
std::optional<Pattern> parse_pattern(std::string_view name);

/// Number of steps the pattern spans.
int pattern_span(Pattern pat);
/// True for patterns whose occurrences also record a catastrophe size.
bool pattern_is_sized(Pattern pat);

enum class ProfileKind { Plain, Sized };

/// Occurrence profile of one pattern in one path. Entries are kept sorted by
/// position; for Plain profiles the size component is always 0.
struct Profile {
  struct Entry {
    int position;  // 1-based
    int size;      // catastrophe size, 0 for plain profiles
    auto operator<=>(const Entry&) const = default;
  };

  ProfileKind kind = ProfileKind::Plain;
  int path_length = 0;
  std::vector<Entry> entries;

  std::vector<int> positions() const;
  auto operator<=>(const Profile&) const = default;
};

Profile occurrences(const Path& p, Pattern pat);

/// Minimal ordinate over the lattice points of the occurrence at position i.
int occurrence_height(const Path& p, int position, Pattern pat);

bool equivalent(const Path& p, const Path& q, Pattern pat);

using ClassPartition = std::map<Profile, std::vector<Path>>;

/// Brute-force equivalence classes of all length-n paths; members keep
/// enumeration order. Throws BruteForceBoundExceeded above `bound`.
ClassPartition partition_classes(int n, Pattern pat, int bound = kDefaultBruteForceBound);
std::size_t count_classes(int n, Pattern pat, int bound = kDefaultBruteForceBound);

/// Same partition over a caller-supplied path list (all of one length).
ClassPartition partition_paths(const std::vector<Path>& paths, Pattern pat);

void require_within_bound(int n, int bound);

}  // namespace dyckcat

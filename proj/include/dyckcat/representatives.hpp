#pragma once

#include <string_view>
#include <vector>

#include "dyckcat/path.hpp"
#include "dyckcat/pattern.hpp"

namespace dyckcat {

/// Representative family attached to each pattern.
enum class RepFamily { A, B, Cset, F, G, Iset, Jset, Kset, Lset, R_DD };

RepFamily family_of(Pattern pat);
std::string_view family_name(RepFamily fam);

/// Membership of p in the representative family of `pat`. For DD this is
/// R1 on odd lengths and R2 on even lengths.
bool is_representative(const Path& p, Pattern pat);

std::vector<Path> representatives_of_length(int n, Pattern pat,
                                            int bound = kDefaultBruteForceBound);

/// The unique representative equivalent to p. DD is delegated to the
/// DD normalization module.
Path canonical(const Path& p, Pattern pat);

}  // namespace dyckcat

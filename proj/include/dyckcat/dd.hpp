#pragma once

// Normalization for the DD pattern: Condition (C), the psi normalizer, the
// catastrophe lemmas, the odd/even representative sets and canonical_dd.

#include <optional>
#include <span>
#include <string_view>

#include "dyckcat/path.hpp"

namespace dyckcat {

enum class ConditionCViolation { UUDUOccurrence, UDUTooHigh };

struct ConditionCStatus {
  struct Violation {
    ConditionCViolation kind;
    int position;  // 1-based start of the offending occurrence
    bool operator==(const Violation&) const = default;
  };

  bool holds = true;
  std::optional<Violation> first_violation;
};

/// Avoids UUDU and every UDU occurrence has height <= 1. Works on any step
/// sequence that starts at height 0 (prefixes included); catastrophes break
/// occurrences since only consecutive U/D steps are matched.
ConditionCStatus satisfies_condition_C(std::span<const Step> steps);
inline ConditionCStatus satisfies_condition_C(const Path& p) {
  return satisfies_condition_C(p.steps());
}

/// A Down step that is not part of any DD occurrence.
bool is_isolated_down(std::span<const Step> steps, std::size_t index);

/// Unique Condition-(C) path with the same DD profile once a final C_k is
/// read as D^k. Input must be a Dyck path or have a single final catastrophe.
Path psi(const Path& p);

/// Replaces every catastrophe but the last by U and enlarges the last one.
Path collapse_catastrophes(const Path& p);

/// Single-catastrophe input; output has catastrophe C_{k+2} (or is unchanged)
/// and no isolated Down step to the right of its catastrophe.
Path eliminate_isolated_tail(const Path& p);

/// C_k -> C_{k-2} at the same position, for Condition-(C) inputs with k >= 4.
Path reduce_catastrophe(const Path& p);

enum class DDFamily { Abar, Aprime, A2, S0, S1, R1, R2 };

std::string_view dd_family_name(DDFamily fam);
bool in_dd_family(const Path& p, DDFamily fam);

/// R1 for odd lengths, R2 for even lengths.
bool is_dd_representative(const Path& p);

/// The unique R1/R2 member DD-equivalent to p, found by profile-pruned search.
Path canonical_dd(const Path& p);

/// Same result reached through the lemma pipeline. Returns nullopt when the
/// even-length case analysis does not apply (its R = R'UUUR'' split with
/// UR''D a Dyck path does not exist for the reduced path).
std::optional<Path> canonical_dd_by_lemmas(const Path& p);

}  // namespace dyckcat

#pragma once

// Dyck paths with catastrophes: steps U=(1,1), D=(1,-1) and C_k=(1,-k),
// k >= 2, where a catastrophe always lands on the x-axis.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyckcat {

/// Default largest length handled by exhaustive enumeration.
inline constexpr int kDefaultBruteForceBound = 16;

enum class StepKind : std::uint8_t { Up, Down, Catastrophe };

/// One step. Ordering is U < D < C2 < C3 < ... (the enumeration order).
class Step {
 public:
  static constexpr Step up() { return Step(0); }
  static constexpr Step down() { return Step(1); }
  /// Size must be >= 2; a catastrophe of size 1 is a Down step.
  static Step catastrophe(int size);

  constexpr StepKind kind() const {
    return code_ == 0 ? StepKind::Up
                      : (code_ == 1 ? StepKind::Down : StepKind::Catastrophe);
  }
  constexpr bool is_up() const { return code_ == 0; }
  constexpr bool is_down() const { return code_ == 1; }
  constexpr bool is_catastrophe() const { return code_ >= 2; }
  /// Catastrophe size; 0 for U and D.
  constexpr int size() const { return code_ >= 2 ? code_ : 0; }
  constexpr int displacement() const {
    return code_ == 0 ? 1 : (code_ == 1 ? -1 : -code_);
  }

  constexpr auto operator<=>(const Step&) const = default;

 private:
  constexpr explicit Step(int code) : code_(code) {}
  int code_;
};

using StepSeq = std::vector<Step>;

/// A valid Dyck path with catastrophes. Immutable once built.
class Path {
 public:
  Path() = default;

  /// Validates and throws NegativeHeight, CatastropheHeightMismatch or OpenPath.
  static Path from_steps(StepSeq steps);
  /// For constructions that are valid by design; still checked in debug builds.
  static Path from_valid_steps(StepSeq steps);

  const StepSeq& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const Step& operator[](std::size_t i) const { return steps_[i]; }
  auto begin() const { return steps_.begin(); }
  auto end() const { return steps_.end(); }

  int catastrophe_count() const;

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;

 private:
  explicit Path(StepSeq steps) : steps_(std::move(steps)) {}
  StepSeq steps_;
};

/// Throws if `steps` is not a valid path. Also usable on partial sequences
/// through `require_closed = false` (only prefix conditions are checked).
void validate_steps(std::span<const Step> steps, bool require_closed = true);
bool is_valid_steps(std::span<const Step> steps);

/// Heights h_0..h_n of the lattice points of a step sequence starting at 0.
std::vector<int> heights(std::span<const Step> steps);

Path parse_path(std::string_view word);
std::string format_path(const Path& p);
std::string format_steps(std::span<const Step> steps);

/// Height before the i-th step, 1-based; i = length + 1 gives the final height.
int height_before(const Path& p, std::size_t i);

/// All valid paths of length n in lexicographic step order.
std::vector<Path> enumerate_paths(int n);
/// Number of paths of length n; counted without materializing them.
std::uint64_t count_paths(int n);

/// p = a_1 C_{k_1} a_2 ... a_r C_{k_r} a_{r+1}.
struct CatDecomposition {
  std::vector<StepSeq> blocks;  // r + 1 catastrophe-free blocks
  std::vector<int> sizes;       // k_1..k_r

  std::size_t catastrophes() const { return sizes.size(); }
  Path reassemble() const;
};

CatDecomposition decompose_at_catastrophes(const Path& p);

// Small builders used by the canonical constructions.
void append_repeat(StepSeq& out, std::span<const Step> unit, int times);
void append_ups(StepSeq& out, int count);
void append_downs(StepSeq& out, int count);
/// Appends C_s, or a Down step when s == 1.
void append_drop(StepSeq& out, int s);

}  // namespace dyckcat

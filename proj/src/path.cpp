#include "dyckcat/path.hpp"

#include <cassert>
#include <string>

#include "dyckcat/error.hpp"

namespace dyckcat {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NegativeHeight: return "NegativeHeight";
    case ErrorKind::CatastropheHeightMismatch: return "CatastropheHeightMismatch";
    case ErrorKind::OpenPath: return "OpenPath";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::NotAnOccurrence: return "NotAnOccurrence";
    case ErrorKind::BruteForceBoundExceeded: return "BruteForceBoundExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NoCatastrophe: return "NoCatastrophe";
    case ErrorKind::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorKind::NonSquareConstantTerm: return "NonSquareConstantTerm";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

Step Step::catastrophe(int size) {
  if (size < 2) {
    throw Error(ErrorKind::SyntaxError,
                "catastrophe size must be at least 2, got " + std::to_string(size));
  }
  return Step(size);
}

void validate_steps(std::span<const Step> steps, bool require_closed) {
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step s = steps[i];
    if (s.is_catastrophe() && h != s.size()) {
      throw Error(ErrorKind::CatastropheHeightMismatch,
                  "C" + std::to_string(s.size()) + " at position " + std::to_string(i + 1) +
                      " taken at height " + std::to_string(h));
    }
    h += s.displacement();
    if (h < 0) {
      throw Error(ErrorKind::NegativeHeight,
                  "height drops below 0 at position " + std::to_string(i + 1));
    }
  }
  if (require_closed && h != 0) {
    throw Error(ErrorKind::OpenPath, "path ends at height " + std::to_string(h));
  }
}

bool is_valid_steps(std::span<const Step> steps) {
  int h = 0;
  for (const Step s : steps) {
    if (s.is_catastrophe() && h != s.size()) return false;
    h += s.displacement();
    if (h < 0) return false;
  }
  return h == 0;
}

Path Path::from_steps(StepSeq steps) {
  validate_steps(steps);
  return Path(std::move(steps));
}

Path Path::from_valid_steps(StepSeq steps) {
  assert(is_valid_steps(steps));
  return Path(std::move(steps));
}

int Path::catastrophe_count() const {
  int c = 0;
  for (const Step s : steps_) c += s.is_catastrophe() ? 1 : 0;
  return c;
}

std::vector<int> heights(std::span<const Step> steps) {
  std::vector<int> h;
  h.reserve(steps.size() + 1);
  h.push_back(0);
  for (const Step s : steps) h.push_back(h.back() + s.displacement());
  return h;
}

Path parse_path(std::string_view word) {
  StepSeq steps;
  std::size_t i = 0;
  while (i < word.size()) {
    const char c = word[i];
    if (c == 'U') {
      steps.push_back(Step::up());
      ++i;
    } else if (c == 'D') {
      steps.push_back(Step::down());
      ++i;
    } else if (c == 'C') {
      std::size_t j = i + 1;
      while (j < word.size() && word[j] >= '0' && word[j] <= '9') ++j;
      const std::string_view digits = word.substr(i + 1, j - i - 1);
      if (digits.empty() || digits.size() > 9 || digits.front() == '0') {
        throw Error(ErrorKind::SyntaxError,
                    "bad catastrophe token at offset " + std::to_string(i));
      }
      const int k = std::stoi(std::string(digits));
      if (k < 2) {
        throw Error(ErrorKind::SyntaxError,
                    "catastrophe C" + std::string(digits) + " at offset " + std::to_string(i) +
                        " must have size at least 2");
      }
      steps.push_back(Step::catastrophe(k));
      i = j;
    } else {
      throw Error(ErrorKind::SyntaxError, std::string("unexpected character '") + c +
                                              "' at offset " + std::to_string(i));
    }
  }
  return Path::from_steps(std::move(steps));
}

std::string format_steps(std::span<const Step> steps) {
  std::string out;
  out.reserve(steps.size() * 2);
  for (const Step s : steps) {
    if (s.is_up()) {
      out += 'U';
    } else if (s.is_down()) {
      out += 'D';
    } else {
      out += 'C';
      out += std::to_string(s.size());
    }
  }
  return out;
}

std::string format_path(const Path& p) { return format_steps(p.steps()); }

int height_before(const Path& p, std::size_t i) {
  if (i < 1 || i > p.length() + 1) {
    throw Error(ErrorKind::PositionOutOfRange,
                "position " + std::to_string(i) + " outside [1, " +
                    std::to_string(p.length() + 1) + "]");
  }
  int h = 0;
  for (std::size_t j = 0; j + 1 < i; ++j) h += p[j].displacement();
  return h;
}

namespace {

// A prefix at height h with `remaining` steps left can still close iff
// h == 0, or at least one step remains (a D from height 1, a catastrophe
// from any height >= 2).
bool can_close(int h, int remaining) { return h == 0 || remaining >= 1; }

void enumerate_rec(int n, int h, StepSeq& cur, std::vector<Path>& out) {
  const int remaining = n - static_cast<int>(cur.size());
  if (remaining == 0) {
    if (h == 0) out.push_back(Path::from_valid_steps(cur));
    return;
  }
  if (can_close(h + 1, remaining - 1)) {
    cur.push_back(Step::up());
    enumerate_rec(n, h + 1, cur, out);
    cur.pop_back();
  }
  if (h >= 1 && can_close(h - 1, remaining - 1)) {
    cur.push_back(Step::down());
    enumerate_rec(n, h - 1, cur, out);
    cur.pop_back();
  }
  if (h >= 2) {
    cur.push_back(Step::catastrophe(h));
    enumerate_rec(n, 0, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_paths(int n) {
  std::vector<Path> out;
  if (n < 0) return out;
  StepSeq cur;
  cur.reserve(static_cast<std::size_t>(n));
  enumerate_rec(n, 0, cur, out);
  return out;
}

std::uint64_t count_paths(int n) {
  if (n < 0) return 0;
  // ways[h] = number of valid prefixes of the current length ending at h.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 2, 0);
  ways[0] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (std::size_t h = 0; h + 1 < ways.size(); ++h) {
      if (ways[h] == 0) continue;
      next[h + 1] += ways[h];
      if (h >= 1) next[h - 1] += ways[h];
      if (h >= 2) next[0] += ways[h];
    }
    ways = std::move(next);
  }
  return ways[0];
}

Path CatDecomposition::reassemble() const {
  StepSeq steps;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    steps.insert(steps.end(), blocks[i].begin(), blocks[i].end());
    if (i < sizes.size()) steps.push_back(Step::catastrophe(sizes[i]));
  }
  return Path::from_steps(std::move(steps));
}

CatDecomposition decompose_at_catastrophes(const Path& p) {
  CatDecomposition d;
  d.blocks.emplace_back();
  for (const Step s : p) {
    if (s.is_catastrophe()) {
      d.sizes.push_back(s.size());
      d.blocks.emplace_back();
    } else {
      d.blocks.back().push_back(s);
    }
  }
  return d;
}

void append_repeat(StepSeq& out, std::span<const Step> unit, int times) {
  for (int t = 0; t < times; ++t) out.insert(out.end(), unit.begin(), unit.end());
}

void append_ups(StepSeq& out, int count) { out.insert(out.end(), count, Step::up()); }

void append_downs(StepSeq& out, int count) { out.insert(out.end(), count, Step::down()); }

void append_drop(StepSeq& out, int s) {
  out.push_back(s == 1 ? Step::down() : Step::catastrophe(s));
}

}  // namespace dyckcat

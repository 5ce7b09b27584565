#include "dyckcat/representatives.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "dyckcat/dd.hpp"
#include "dyckcat/error.hpp"

namespace dyckcat {

namespace {

const Step kUD[] = {Step::up(), Step::down()};

// Read-only cursor over a step sequence.
class Cursor {
 public:
  explicit Cursor(const StepSeq& steps) : s_(steps) {}

  bool at_end() const { return i_ >= s_.size(); }
  std::size_t index() const { return i_; }
  std::size_t remaining() const { return s_.size() - i_; }
  bool is(std::size_t off, StepKind kind) const {
    return i_ + off < s_.size() && s_[i_ + off].kind() == kind;
  }
  const Step& peek(std::size_t off = 0) const { return s_[i_ + off]; }
  void advance(std::size_t n = 1) { i_ += n; }

  /// Consumes (UD)* greedily and returns the number of pairs.
  int take_ud_pairs() {
    int k = 0;
    while (is(0, StepKind::Up) && is(1, StepKind::Down)) {
      i_ += 2;
      ++k;
    }
    return k;
  }
  int take_ups() {
    int k = 0;
    while (is(0, StepKind::Up)) {
      ++i_;
      ++k;
    }
    return k;
  }

 private:
  const StepSeq& s_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------- membership

bool member_A(const Path& p) {
  const int c = p.catastrophe_count();
  return c == 0 || (c == 1 && p.steps().back().is_catastrophe());
}

bool member_B(const Path& p) { return p.catastrophe_count() <= 1; }

// (UD)^k, or blocks (UD)^l U^k C_k followed by a final (UD)^l.
bool member_Cset(const Path& p) {
  Cursor c(p.steps());
  for (;;) {
    c.take_ud_pairs();
    if (c.at_end()) return true;
    const int ups = c.take_ups();
    if (c.at_end() || !c.peek().is_catastrophe() || c.peek().size() != ups) return false;
    c.advance();
  }
}

// (UD)^l0 U^k1 a1 ... U^kr ar: inner a_i in {(DU)^k D, (DU)^k DD}, last a_r in
// {(DU)^k C_s, (DU)^k D C_s} with C_1 = D.
bool member_F(const Path& p) {
  const StepSeq& s = p.steps();
  Cursor c(s);
  c.take_ud_pairs();
  if (c.at_end()) return true;
  for (;;) {
    if (c.take_ups() < 2) return false;
    // (DU)* where each U is followed by a D or a catastrophe.
    while (c.is(0, StepKind::Down) && c.is(1, StepKind::Up) &&
           (c.is(2, StepKind::Down) || c.is(2, StepKind::Catastrophe))) {
      c.advance(2);
    }
    const std::size_t rest = c.remaining();
    if (rest == 1 && !c.peek().is_up()) return true;  // C_s or D
    if (rest == 2 && c.peek().is_down() && !c.peek(1).is_up()) return true;  // D C_s or DD
    if (!c.is(0, StepKind::Down)) return false;
    c.advance(c.is(1, StepKind::Down) ? 2 : 1);
    if (!c.is(0, StepKind::Up)) return false;
  }
}

// Marks the steps covered by UD occurrences.
std::vector<bool> ud_cover(const StepSeq& s) {
  std::vector<bool> covered(s.size(), false);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].is_up() && s[i + 1].is_down()) covered[i] = covered[i + 1] = true;
  }
  return covered;
}

struct Gap {
  std::size_t begin;
  std::size_t end;  // exclusive
};

// Maximal runs of steps outside UD occurrences.
std::vector<Gap> ud_gaps(const StepSeq& s) {
  const std::vector<bool> covered = ud_cover(s);
  std::vector<Gap> gaps;
  for (std::size_t i = 0; i < s.size();) {
    if (covered[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !covered[j]) ++j;
    gaps.push_back({i, j});
    i = j;
  }
  return gaps;
}

// Outside the UD occurrences every step is U, except that the last gap ends
// with a single drop step (D or a catastrophe).
bool member_G(const Path& p) {
  const StepSeq& s = p.steps();
  const std::vector<Gap> gaps = ud_gaps(s);
  for (std::size_t g = 0; g < gaps.size(); ++g) {
    const bool last = g + 1 == gaps.size();
    const std::size_t stop = last ? gaps[g].end - 1 : gaps[g].end;
    for (std::size_t i = gaps[g].begin; i < stop; ++i) {
      if (!s[i].is_up()) return false;
    }
    if (last && s[gaps[g].end - 1].is_up()) return false;
  }
  return true;
}

// alpha_1 U^k1 C_k1 alpha_2 ... with alpha_i in I1 = {(UD)^m, (UD)^m UUUDC_2}.
bool member_I(const Path& p) {
  Cursor c(p.steps());
  for (;;) {
    c.take_ud_pairs();
    if (c.at_end()) return true;
    int ups = c.take_ups();
    if (c.is(0, StepKind::Catastrophe)) {
      if (c.peek().size() != ups) return false;
      c.advance();
      continue;
    }
    if (ups != 3 || !c.is(0, StepKind::Down) || !c.is(1, StepKind::Catastrophe) ||
        c.peek(1).size() != 2) {
      return false;
    }
    c.advance(2);
    if (c.at_end()) return true;
    ups = c.take_ups();
    if (!c.is(0, StepKind::Catastrophe) || c.peek().size() != ups) return false;
    c.advance();
  }
}

// alpha_1 U^{k1+1} D C_k1 alpha_2 ... with alpha_i in J1 = {(UD)^m, (UD)^m UUC_2}.
bool member_J(const Path& p) {
  Cursor c(p.steps());
  for (;;) {
    c.take_ud_pairs();
    if (c.at_end()) return true;
    int ups = c.take_ups();
    if (c.is(0, StepKind::Down)) {
      if (!c.is(1, StepKind::Catastrophe) || c.peek(1).size() != ups - 1) return false;
      c.advance(2);
      continue;
    }
    if (ups != 2 || !c.is(0, StepKind::Catastrophe)) return false;
    c.advance();
    if (c.at_end()) return true;
    ups = c.take_ups();
    if (!c.is(0, StepKind::Down) || !c.is(1, StepKind::Catastrophe) ||
        c.peek(1).size() != ups - 1) {
      return false;
    }
    c.advance(2);
  }
}

// beta_1 U^k1 C_k1 ... beta_r U^kr C_kr beta_{r+1}, beta_i in (UD)*, the tail in
// K2 = {(UD)^m, (UD)^m UUC_2} and nonempty once r >= 1.
bool member_K(const Path& p) {
  Cursor c(p.steps());
  int blocks = 0;
  for (;;) {
    const int pairs = c.take_ud_pairs();
    if (c.at_end()) return blocks == 0 || pairs > 0;
    const int ups = c.take_ups();
    if (!c.is(0, StepKind::Catastrophe) || c.peek().size() != ups) return false;
    c.advance();
    if (c.at_end()) return ups == 2;  // tail (UD)^m UUC_2
    ++blocks;
  }
}

// Every step before the last is U or a D followed by U; the last is a drop.
bool member_L(const Path& p) {
  const StepSeq& s = p.steps();
  if (s.empty()) return true;
  if (s.back().is_up()) return false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].is_catastrophe()) return false;
    if (s[i].is_down() && !s[i + 1].is_up()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- canonical

int final_height(const StepSeq& s) {
  int h = 0;
  for (const Step st : s) h += st.displacement();
  return h;
}

// Appends a drop that brings the sequence back to the axis.
void close_with_drop(StepSeq& out) { append_drop(out, final_height(out)); }

Path canonical_A(const Path& p) {
  if (member_A(p)) return p;
  const CatDecomposition d = decompose_at_catastrophes(p);
  const std::size_t r = d.catastrophes();
  StepSeq q;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    q.insert(q.end(), d.blocks[i].begin(), d.blocks[i].end());
    q.push_back(Step::down());
  }
  q.insert(q.end(), d.blocks[r - 1].begin(), d.blocks[r - 1].end());
  const StepSeq& tail = d.blocks[r];
  if (!tail.empty()) {
    // tail = a' D
    q.push_back(Step::down());
    q.insert(q.end(), tail.begin(), tail.end() - 1);
  }
  close_with_drop(q);
  return Path::from_valid_steps(std::move(q));
}

Path canonical_B(const Path& p) {
  if (member_B(p)) return p;
  const CatDecomposition d = decompose_at_catastrophes(p);
  const std::size_t r = d.catastrophes();
  StepSeq q;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    q.insert(q.end(), d.blocks[i].begin(), d.blocks[i].end());
    q.push_back(Step::up());
  }
  q.insert(q.end(), d.blocks[r - 1].begin(), d.blocks[r - 1].end());
  close_with_drop(q);
  q.insert(q.end(), d.blocks[r].begin(), d.blocks[r].end());
  return Path::from_valid_steps(std::move(q));
}

// Each a_i C_{k_i} becomes (UD)^j U^k C_k with 2j + k = |a_i|.
Path canonical_Cset(const Path& p) {
  const CatDecomposition d = decompose_at_catastrophes(p);
  StepSeq q;
  for (std::size_t i = 0; i < d.catastrophes(); ++i) {
    const int k = d.sizes[i];
    const int len = static_cast<int>(d.blocks[i].size());
    append_repeat(q, kUD, (len - k) / 2);
    append_ups(q, k);
    q.push_back(Step::catastrophe(k));
  }
  append_repeat(q, kUD, static_cast<int>(d.blocks.back().size()) / 2);
  return Path::from_valid_steps(std::move(q));
}

// Maximal U-runs of length >= 2 are kept; the stretches between them are
// refilled with (DU)^* D / (DU)^* DD, and the last one ends with a drop.
Path canonical_F(const Path& p) {
  const StepSeq& s = p.steps();
  struct Run {
    std::size_t begin, end;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < s.size();) {
    if (!s[i].is_up()) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && s[j].is_up()) ++j;
    if (j - i >= 2) runs.push_back({i, j});
    i = j;
  }
  if (runs.empty()) return p;  // no UU means p = (UD)^k

  StepSeq q;
  append_repeat(q, kUD, static_cast<int>(runs.front().begin) / 2);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    append_ups(q, static_cast<int>(runs[r].end - runs[r].begin));
    const bool last = r + 1 == runs.size();
    const std::size_t stretch_end = last ? s.size() : runs[r + 1].begin;
    const int t = static_cast<int>(stretch_end - runs[r].end);
    const Step du[] = {Step::down(), Step::up()};
    if (t % 2 == 1) {
      append_repeat(q, du, (t - 1) / 2);
      if (last) {
        close_with_drop(q);
      } else {
        q.push_back(Step::down());
      }
    } else {
      append_repeat(q, du, (t - 2) / 2);
      q.push_back(Step::down());
      if (last) {
        close_with_drop(q);
      } else {
        q.push_back(Step::down());
      }
    }
  }
  return Path::from_valid_steps(std::move(q));
}

// Gaps between UD occurrences become U-runs; the last gap keeps one step for
// the closing drop.
Path canonical_G(const Path& p) {
  const StepSeq& s = p.steps();
  const std::vector<Gap> gaps = ud_gaps(s);
  if (gaps.empty()) return p;
  StepSeq q = s;
  for (std::size_t g = 0; g < gaps.size(); ++g) {
    for (std::size_t i = gaps[g].begin; i < gaps[g].end; ++i) q[i] = Step::up();
  }
  const std::size_t drop_at = gaps.back().end - 1;
  int h = 0;
  for (std::size_t i = 0; i < drop_at; ++i) h += q[i].displacement();
  q[drop_at] = h == 1 ? Step::down() : Step::catastrophe(h);
  return Path::from_valid_steps(std::move(q));
}

void append_I1(StepSeq& out, int len) {
  if (len % 2 == 0) {
    append_repeat(out, kUD, len / 2);
  } else {
    append_repeat(out, kUD, (len - 5) / 2);
    append_ups(out, 3);
    out.push_back(Step::down());
    out.push_back(Step::catastrophe(2));
  }
}

void append_J1(StepSeq& out, int len) {
  if (len % 2 == 0) {
    append_repeat(out, kUD, len / 2);
  } else {
    append_repeat(out, kUD, (len - 3) / 2);
    append_ups(out, 2);
    out.push_back(Step::catastrophe(2));
  }
}

// K2 tail: (UD)^m, or (UD)^m UUC_2 for odd lengths.
void append_K2(StepSeq& out, int len) { append_J1(out, len); }

// Occurrence of UC_k at position u: block U^k C_k occupies [u-k+1, u+1].
Path canonical_I(const Path& p) {
  const Profile prof = occurrences(p, Pattern::UC);
  const int n = static_cast<int>(p.length());
  StepSeq q;
  int next = 1;  // first unfilled position
  for (const auto& e : prof.entries) {
    const int start = e.position - e.size + 1;
    append_I1(q, start - next);
    append_ups(q, e.size);
    q.push_back(Step::catastrophe(e.size));
    next = e.position + 2;
  }
  append_I1(q, n - next + 1);
  return Path::from_steps(std::move(q));
}

// Occurrence of DC_k at position d: block U^{k+1} D C_k occupies [d-k-1, d+1].
Path canonical_J(const Path& p) {
  const Profile prof = occurrences(p, Pattern::DC);
  const int n = static_cast<int>(p.length());
  StepSeq q;
  int next = 1;
  for (const auto& e : prof.entries) {
    const int start = e.position - e.size - 1;
    append_J1(q, start - next);
    append_ups(q, e.size + 1);
    q.push_back(Step::down());
    q.push_back(Step::catastrophe(e.size));
    next = e.position + 2;
  }
  append_J1(q, n - next + 1);
  return Path::from_steps(std::move(q));
}

// Occurrence of C_kU at position c: block U^k C_k occupies [c-k, c].
Path canonical_K(const Path& p) {
  const Profile prof = occurrences(p, Pattern::CU);
  const int n = static_cast<int>(p.length());
  StepSeq q;
  int next = 1;
  for (const auto& e : prof.entries) {
    const int start = e.position - e.size;
    append_repeat(q, kUD, (start - next) / 2);
    append_ups(q, e.size);
    q.push_back(Step::catastrophe(e.size));
    next = e.position + 1;
  }
  append_K2(q, n - next + 1);
  return Path::from_steps(std::move(q));
}

// D exactly at the DU positions, U elsewhere, closing drop at the end.
Path canonical_L(const Path& p) {
  if (p.empty()) return p;
  const Profile prof = occurrences(p, Pattern::DU);
  StepSeq q(p.length(), Step::up());
  for (const int pos : prof.positions()) q[static_cast<std::size_t>(pos - 1)] = Step::down();
  q.pop_back();
  close_with_drop(q);
  return Path::from_valid_steps(std::move(q));
}

}  // namespace

RepFamily family_of(Pattern pat) {
  switch (pat) {
    case Pattern::U: return RepFamily::A;
    case Pattern::D: return RepFamily::B;
    case Pattern::C: return RepFamily::Cset;
    case Pattern::UU: return RepFamily::F;
    case Pattern::UD: return RepFamily::G;
    case Pattern::UC: return RepFamily::Iset;
    case Pattern::DC: return RepFamily::Jset;
    case Pattern::CU: return RepFamily::Kset;
    case Pattern::DU: return RepFamily::Lset;
    case Pattern::DD: return RepFamily::R_DD;
  }
  throw std::logic_error("unreachable pattern");
}

std::string_view family_name(RepFamily fam) {
  switch (fam) {
    case RepFamily::A: return "A";
    case RepFamily::B: return "B";
    case RepFamily::Cset: return "Cset";
    case RepFamily::F: return "F";
    case RepFamily::G: return "G";
    case RepFamily::Iset: return "Iset";
    case RepFamily::Jset: return "Jset";
    case RepFamily::Kset: return "Kset";
    case RepFamily::Lset: return "Lset";
    case RepFamily::R_DD: return "R_DD";
  }
  return "?";
}

bool is_representative(const Path& p, Pattern pat) {
  switch (pat) {
    case Pattern::U: return member_A(p);
    case Pattern::D: return member_B(p);
    case Pattern::C: return member_Cset(p);
    case Pattern::UU: return member_F(p);
    case Pattern::UD: return member_G(p);
    case Pattern::UC: return member_I(p);
    case Pattern::DC: return member_J(p);
    case Pattern::CU: return member_K(p);
    case Pattern::DU: return member_L(p);
    case Pattern::DD: return is_dd_representative(p);
  }
  return false;
}

std::vector<Path> representatives_of_length(int n, Pattern pat, int bound) {
  require_within_bound(n, bound);
  std::vector<Path> out;
  for (Path& p : enumerate_paths(n)) {
    if (is_representative(p, pat)) out.push_back(std::move(p));
  }
  return out;
}

Path canonical(const Path& p, Pattern pat) {
  switch (pat) {
    case Pattern::U: return canonical_A(p);
    case Pattern::D: return canonical_B(p);
    case Pattern::C: return canonical_Cset(p);
    case Pattern::UU: return canonical_F(p);
    case Pattern::UD: return canonical_G(p);
    case Pattern::UC: return canonical_I(p);
    case Pattern::DC: return canonical_J(p);
    case Pattern::CU: return canonical_K(p);
    case Pattern::DU: return canonical_L(p);
    case Pattern::DD: return canonical_dd(p);
  }
  throw std::logic_error("unreachable pattern");
}

}  // namespace dyckcat

#include "dyckcat/dd.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyckcat/error.hpp"
#include "dyckcat/pattern.hpp"

namespace dyckcat {

namespace {

bool seq_has(std::span<const Step> s, std::size_t i, std::string_view word) {
  if (i + word.size() > s.size()) return false;
  for (std::size_t j = 0; j < word.size(); ++j) {
    const Step st = s[i + j];
    if ((word[j] == 'U' && !st.is_up()) || (word[j] == 'D' && !st.is_down())) return false;
  }
  return true;
}

bool ends_with(std::span<const Step> s, std::string_view word) {
  return s.size() >= word.size() && seq_has(s, s.size() - word.size(), word);
}

bool contains(std::span<const Step> s, std::string_view word) {
  for (std::size_t i = 0; i + word.size() <= s.size(); ++i) {
    if (seq_has(s, i, word)) return true;
  }
  return false;
}

bool has_catastrophe(std::span<const Step> s) {
  return std::any_of(s.begin(), s.end(), [](Step st) { return st.is_catastrophe(); });
}

int count_catastrophes(std::span<const Step> s) {
  return static_cast<int>(
      std::count_if(s.begin(), s.end(), [](Step st) { return st.is_catastrophe(); }));
}

std::size_t first_catastrophe(std::span<const Step> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].is_catastrophe()) return i;
  }
  return s.size();
}

// 0-based starts of DD occurrences.
std::vector<int> dd_positions(std::span<const Step> s) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].is_down() && s[i + 1].is_down()) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> dd_positions(const Path& p) { return dd_positions(p.steps()); }

StepSeq concat(std::initializer_list<std::span<const Step>> parts) {
  StepSeq out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::span<const Step> sub(const StepSeq& s, std::size_t from, std::size_t to) {
  return std::span<const Step>(s).subspan(from, to - from);
}

std::span<const Step> word_steps(std::string_view w) {
  static const Step kU[] = {Step::up()};
  static const Step kD[] = {Step::down()};
  static const Step kUD[] = {Step::up(), Step::down()};
  static const Step kUDU[] = {Step::up(), Step::down(), Step::up()};
  static const Step kUDUD[] = {Step::up(), Step::down(), Step::up(), Step::down()};
  static const Step kUU[] = {Step::up(), Step::up()};
  static const Step kDUDUDU[] = {Step::down(), Step::up(), Step::down(),
                                 Step::up(),   Step::down(), Step::up()};
  if (w == "U") return kU;
  if (w == "D") return kD;
  if (w == "UD") return kUD;
  if (w == "UDU") return kUDU;
  if (w == "UDUD") return kUDUD;
  if (w == "UU") return kUU;
  if (w == "DUDUDU") return kDUDUDU;
  throw std::logic_error("unknown word");
}

// Condition-(C) Dyck path search with a prescribed DD profile.
class AbarSearch {
 public:
  AbarSearch(int n, std::vector<int> dd) : n_(n) {
    want_.assign(static_cast<std::size_t>(std::max(n, 1)), false);
    for (const int i : dd) want_[static_cast<std::size_t>(i)] = true;
  }

  std::vector<StepSeq> run(std::size_t limit) {
    limit_ = limit;
    cur_.clear();
    h_.assign(1, 0);
    found_.clear();
    rec();
    return found_;
  }

 private:
  void rec() {
    if (found_.size() >= limit_) return;
    const int i = static_cast<int>(cur_.size());
    const int h = h_.back();
    if (i == n_) {
      if (h == 0) found_.push_back(cur_);
      return;
    }
    const int rem = n_ - i;
    for (const Step st : {Step::up(), Step::down()}) {
      const int nh = h + st.displacement();
      if (nh < 0 || nh > rem - 1) continue;
      if (i >= 1) {
        const bool dd = cur_.back().is_down() && st.is_down();
        if (dd != want_[static_cast<std::size_t>(i - 1)]) continue;
      }
      cur_.push_back(st);
      h_.push_back(nh);
      if (tail_ok()) rec();
      cur_.pop_back();
      h_.pop_back();
    }
  }

  // Checks the Condition-(C) patterns ending at the newest step.
  bool tail_ok() const {
    const std::size_t m = cur_.size();
    if (m >= 4 && seq_has(cur_, m - 4, "UUDU")) return false;
    if (m >= 3 && seq_has(cur_, m - 3, "UDU")) {
      const int lo = std::min({h_[m - 3], h_[m - 2], h_[m - 1], h_[m]});
      if (lo > 1) return false;
    }
    return true;
  }

  int n_;
  std::vector<bool> want_;
  std::size_t limit_ = 2;
  StepSeq cur_;
  std::vector<int> h_;
  std::vector<StepSeq> found_;
};

StepSeq abar_rep(std::span<const Step> dyck) {
  AbarSearch search(static_cast<int>(dyck.size()), dd_positions(dyck));
  std::vector<StepSeq> hits = search.run(2);
  if (hits.size() != 1) {
    throw std::logic_error("Condition (C) representative not unique for " + format_steps(dyck));
  }
  return std::move(hits.front());
}

// psi applied to the prefix ending at the (single) catastrophe.
Path psi_prefix(const Path& p) {
  const StepSeq& s = p.steps();
  const std::size_t c = first_catastrophe(s);
  const Path head = psi(Path::from_valid_steps(StepSeq(s.begin(), s.begin() + c + 1)));
  return Path::from_valid_steps(concat({head.steps(), sub(s, c + 1, s.size())}));
}

// Index of the rightmost U step starting at height h, among the first `limit` steps.
std::size_t rightmost_up_at(const StepSeq& s, std::size_t limit, int h) {
  const std::vector<int> hs = heights(s);
  for (std::size_t i = limit; i-- > 0;) {
    if (s[i].is_up() && hs[i] == h) return i;
  }
  throw std::logic_error("no Up step at height " + std::to_string(h));
}

bool is_dyck(std::span<const Step> s) { return !has_catastrophe(s); }

bool abar(std::span<const Step> s) { return is_dyck(s) && satisfies_condition_C(s).holds; }

bool aprime(std::span<const Step> s) {
  return abar(s) && !contains(s, "UDU") && !ends_with(s, "UD");
}

bool a2(std::span<const Step> s) {
  if (s.empty() || s.back() != Step::catastrophe(2) || count_catastrophes(s) != 1) return false;
  return satisfies_condition_C(s).holds && !ends_with(s.first(s.size() - 1), "UD");
}

bool r1(std::span<const Step> s) {
  const std::size_t c = first_catastrophe(s);
  if (c == s.size()) return false;
  return a2(s.first(c + 1)) && aprime(s.subspan(c + 1));
}

bool ends_with_c3(std::span<const Step> s) {
  return !s.empty() && s.back() == Step::catastrophe(3) && count_catastrophes(s) == 1;
}

bool s0(std::span<const Step> s) {
  return ends_with_c3(s) && ends_with(s.first(s.size() - 1), "DUU") &&
         satisfies_condition_C(s.first(s.size() - 2)).holds;
}

bool s1(std::span<const Step> s) {
  return ends_with_c3(s) && ends_with(s.first(s.size() - 1), "DD") &&
         satisfies_condition_C(s.first(s.size() - 3)).holds;
}

bool r2(std::span<const Step> s) { return abar(s) || s0(s) || s1(s); }

// Depth-first search over all paths of length n with the given DD profile.
class DDSearch {
 public:
  DDSearch(int n, const std::vector<int>& dd) : n_(n) {
    want_.assign(static_cast<std::size_t>(std::max(n, 1)), false);
    for (const int i : dd) want_[static_cast<std::size_t>(i)] = true;
  }

  std::optional<Path> find_representative() {
    rec(0);
    return result_;
  }

 private:
  void rec(int h) {
    if (result_) return;
    const int i = static_cast<int>(cur_.size());
    if (i == n_) {
      if (h == 0 && is_dd_representative(Path::from_valid_steps(cur_))) {
        result_ = Path::from_valid_steps(cur_);
      }
      return;
    }
    const int rem = n_ - i;
    auto try_step = [&](Step st, int nh) {
      if (i >= 1) {
        const bool dd = cur_.back().is_down() && st.is_down();
        if (dd != want_[static_cast<std::size_t>(i - 1)]) return;
      }
      cur_.push_back(st);
      rec(nh);
      cur_.pop_back();
    };
    // With catastrophes any positive height closes in one step.
    if (rem >= 2) try_step(Step::up(), h + 1);
    if (h >= 1 && (h == 1 || rem >= 2)) try_step(Step::down(), h - 1);
    if (h >= 2) try_step(Step::catastrophe(h), 0);
  }

  int n_;
  std::vector<bool> want_;
  StepSeq cur_;
  std::optional<Path> result_;
};

std::optional<Path> even_pipeline(Path p) {
  for (;;) {
    const StepSeq& s = p.steps();
    const std::size_t c = first_catastrophe(s);
    const auto r = sub(s, 0, c);
    if (ends_with(r, "DUU") || ends_with(r, "DD")) break;
    const std::size_t j = rightmost_up_at(s, c, 0);
    if (!seq_has(s, j, "UUU")) throw std::logic_error("expected UUU in " + format_path(p));
    const std::vector<int> hs = heights(s);
    for (std::size_t t = j + 3; t <= c; ++t) {
      if (hs[t] < 3) return std::nullopt;
    }
    const auto rp = sub(s, 0, j);
    const auto rpp = sub(s, j + 3, c);
    const auto after = sub(s, c + 1, s.size());
    StepSeq out;
    bool again = false;
    if (rpp.empty()) {
      out = concat({rp, word_steps("UDUD"), after});
    } else if (rpp.back().is_up()) {
      out = concat({rp, word_steps("UDU"), rpp.first(rpp.size() - 1), word_steps("UD"), after});
    } else if (ends_with(rpp, "UD")) {
      const Step c3[] = {Step::catastrophe(3)};
      out = concat({rp, word_steps("UDU"), rpp.first(rpp.size() - 2), word_steps("UU"), c3,
                    after});
      again = true;
    } else {
      out = s;
    }
    p = Path::from_valid_steps(std::move(out));
    if (!has_catastrophe(p.steps())) return psi(p);
    p = psi_prefix(p);
    if (!again) break;
  }
  if (r2(p.steps())) return p;

  const StepSeq& s = p.steps();
  const std::size_t c = first_catastrophe(s);
  const auto r = sub(s, 0, c);
  if (!seq_has(s, c + 1, "UU")) throw std::logic_error("expected UU after C3 in " + format_path(p));
  const auto sp = sub(s, c + 3, s.size());
  StepSeq out;
  if (ends_with(r, "DUU")) {
    out = concat({r.first(r.size() - 3), word_steps("DUDUDU"), sp});
  } else {
    const std::size_t j = rightmost_up_at(s, c, 0);
    out = concat({sub(s, 0, j), word_steps("UDU"), sub(s, j + 3, c), word_steps("UDU"), sp});
  }
  return psi(Path::from_valid_steps(std::move(out)));
}

}  // namespace

ConditionCStatus satisfies_condition_C(std::span<const Step> steps) {
  // A UDU that is too high is reported ahead of any UUDU occurrence.
  const std::vector<int> hs = heights(steps);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (seq_has(steps, i, "UDU") && std::min({hs[i], hs[i + 1], hs[i + 2], hs[i + 3]}) > 1) {
      return {false, ConditionCStatus::Violation{ConditionCViolation::UDUTooHigh,
                                                 static_cast<int>(i) + 1}};
    }
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (seq_has(steps, i, "UUDU")) {
      return {false, ConditionCStatus::Violation{ConditionCViolation::UUDUOccurrence,
                                                 static_cast<int>(i) + 1}};
    }
  }
  return {};
}

bool is_isolated_down(std::span<const Step> steps, std::size_t index) {
  if (index >= steps.size() || !steps[index].is_down()) return false;
  const bool left = index > 0 && steps[index - 1].is_down();
  const bool right = index + 1 < steps.size() && steps[index + 1].is_down();
  return !left && !right;
}

Path psi(const Path& p) {
  const StepSeq& s = p.steps();
  const int cats = count_catastrophes(s);
  if (cats == 0) return Path::from_valid_steps(abar_rep(s));
  if (cats > 1 || !s.back().is_catastrophe()) {
    throw Error(ErrorKind::PreconditionViolated,
                "psi needs a Dyck path or a single final catastrophe: " + format_path(p));
  }
  const int k = s.back().size();
  StepSeq q(s.begin(), s.end() - 1);
  append_downs(q, k);
  StepSeq r = abar_rep(q);
  if (!std::all_of(r.end() - k, r.end(), [](Step st) { return st.is_down(); })) {
    throw std::logic_error("psi image does not end with D^k for " + format_path(p));
  }
  r.erase(r.end() - k, r.end());
  r.push_back(Step::catastrophe(k));
  return Path::from_valid_steps(std::move(r));
}

Path collapse_catastrophes(const Path& p) {
  StepSeq s = p.steps();
  std::vector<std::size_t> cats;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].is_catastrophe()) cats.push_back(i);
  }
  if (cats.empty()) throw Error(ErrorKind::NoCatastrophe, "no catastrophe in " + format_path(p));
  int extra = 0;
  for (std::size_t t = 0; t + 1 < cats.size(); ++t) {
    extra += s[cats[t]].size() + 1;
    s[cats[t]] = Step::up();
  }
  s[cats.back()] = Step::catastrophe(s[cats.back()].size() + extra);
  return Path::from_valid_steps(std::move(s));
}

Path eliminate_isolated_tail(const Path& p) {
  const StepSeq& s = p.steps();
  if (count_catastrophes(s) != 1) {
    throw Error(ErrorKind::PreconditionViolated,
                "exactly one catastrophe required: " + format_path(p));
  }
  const std::size_t c = first_catastrophe(s);
  const int k = s[c].size();
  const auto r = sub(s, c + 1, s.size());
  bool any = false;
  for (std::size_t i = 0; i < r.size(); ++i) any = any || is_isolated_down(r, i);
  if (!any) return p;

  const Path head = psi(Path::from_valid_steps(StepSeq(s.begin(), s.begin() + c + 1)));
  const auto qp = std::span<const Step>(head.steps()).first(c);
  const StepSeq rp = abar_rep(r);
  std::size_t j = rp.size();
  for (std::size_t i = rp.size(); i-- > 0;) {
    if (is_isolated_down(rp, i)) {
      j = i;
      break;
    }
  }
  const Step up[] = {Step::up()};
  const Step big[] = {Step::catastrophe(k + 2)};
  const auto r1 = sub(rp, 0, j - 1);
  StepSeq out;
  if (j + 1 == rp.size()) {
    out = concat({qp, up, r1, up, big});
  } else {
    const int h = heights(rp)[j - 1];
    const auto r2 = sub(rp, j + 2, rp.size());
    if (h == 0) {
      out = concat({qp, up, r1, up, big, up, r2});
    } else if (h == 1) {
      out = concat({qp, up, r1, big, up, up, r2});
    } else {
      throw std::logic_error("isolated Down above height 1 in " + format_steps(rp));
    }
  }
  return Path::from_valid_steps(std::move(out));
}

Path reduce_catastrophe(const Path& p) {
  const StepSeq& s = p.steps();
  if (count_catastrophes(s) != 1) {
    throw Error(ErrorKind::PreconditionViolated,
                "exactly one catastrophe required: " + format_path(p));
  }
  const std::size_t c = first_catastrophe(s);
  const int k = s[c].size();
  if (k < 4) {
    throw Error(ErrorKind::PreconditionViolated, "catastrophe size below 4: " + format_path(p));
  }
  if (!satisfies_condition_C(p).holds) {
    throw Error(ErrorKind::PreconditionViolated, "Condition (C) fails: " + format_path(p));
  }
  const std::size_t j = rightmost_up_at(s, c, k - 3);
  if (!seq_has(s, j, "UUU")) throw std::logic_error("expected UUU in " + format_path(p));
  StepSeq out = s;
  out[j + 1] = Step::down();
  out[c] = Step::catastrophe(k - 2);
  return Path::from_valid_steps(std::move(out));
}

std::string_view dd_family_name(DDFamily fam) {
  switch (fam) {
    case DDFamily::Abar: return "Abar";
    case DDFamily::Aprime: return "Aprime";
    case DDFamily::A2: return "A2";
    case DDFamily::S0: return "S0";
    case DDFamily::S1: return "S1";
    case DDFamily::R1: return "R1";
    case DDFamily::R2: return "R2";
  }
  return "?";
}

bool in_dd_family(const Path& p, DDFamily fam) {
  const std::span<const Step> s = p.steps();
  switch (fam) {
    case DDFamily::Abar: return abar(s);
    case DDFamily::Aprime: return aprime(s);
    case DDFamily::A2: return a2(s);
    case DDFamily::S0: return s0(s);
    case DDFamily::S1: return s1(s);
    case DDFamily::R1: return r1(s);
    case DDFamily::R2: return r2(s);
  }
  return false;
}

bool is_dd_representative(const Path& p) {
  return p.length() % 2 == 1 ? r1(p.steps()) : r2(p.steps());
}

Path canonical_dd(const Path& p) {
  DDSearch search(static_cast<int>(p.length()), dd_positions(p));
  std::optional<Path> rep = search.find_representative();
  if (!rep) throw std::logic_error("no DD representative for " + format_path(p));
  return *rep;
}

std::optional<Path> canonical_dd_by_lemmas(const Path& p) {
  if (!has_catastrophe(p.steps())) return psi(p);
  Path q = collapse_catastrophes(p);
  q = eliminate_isolated_tail(q);
  q = psi_prefix(q);
  const bool odd = p.length() % 2 == 1;
  const int target = odd ? 2 : 3;
  for (;;) {
    while (q[first_catastrophe(q.steps())].size() > target) {
      q = psi_prefix(reduce_catastrophe(q));
    }
    if (!odd) break;
    const StepSeq& s = q.steps();
    const std::size_t c = first_catastrophe(s);
    if (c < 2 || !seq_has(s, c - 2, "UD")) return q;
    // Q1 UD C2 Q2 -> Q1 UU C4 Q2
    StepSeq out = s;
    out[c - 1] = Step::up();
    out[c] = Step::catastrophe(4);
    q = psi_prefix(Path::from_valid_steps(std::move(out)));
  }
  return even_pipeline(std::move(q));
}

}  // namespace dyckcat

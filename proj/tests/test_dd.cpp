#include <doctest.h>

#include <map>

#include "dyckcat/dd.hpp"
#include "dyckcat/error.hpp"
#include "dyckcat/pattern.hpp"
#include "dyckcat/series.hpp"

using namespace dyckcat;

namespace {

std::string fmt(const Path& p) { return format_path(p); }
Path P(std::string_view w) { return parse_path(w); }

ErrorKind error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::UnknownName;
}

Profile dd_profile(const Path& p) { return occurrences(p, Pattern::DD); }

// A final C_k read as D^k, then the DD positions of the resulting Dyck word.
std::vector<int> substituted_dd(const Path& p) {
  std::string w;
  for (const Step s : p) {
    if (s.is_up()) w += 'U';
    else if (s.is_down()) w += 'D';
    else w += std::string(static_cast<std::size_t>(s.size()), 'D');
  }
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size() && i + 1 < p.length(); ++i) {
    if (w[i] == 'D' && w[i + 1] == 'D') out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

// Direct reading of Condition (C) on letters, used as an oracle.
bool condition_c_oracle(const Path& p) {
  std::string w;
  std::vector<int> h{0};
  for (const Step s : p) {
    w += s.is_up() ? 'U' : (s.is_down() ? 'D' : 'C');
    h.push_back(s.is_up() ? h.back() + 1 : (s.is_down() ? h.back() - 1 : 0));
  }
  for (std::size_t i = 0; i + 4 <= w.size(); ++i) {
    if (w.compare(i, 4, "UUDU") == 0) return false;
  }
  for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
    if (w.compare(i, 3, "UDU") == 0 && std::min({h[i], h[i + 1], h[i + 2], h[i + 3]}) > 1) return false;
  }
  return true;
}

bool dyck_or_final_cat(const Path& p) {
  const int c = p.catastrophe_count();
  return c == 0 || (c == 1 && p[p.length() - 1].is_catastrophe());
}

}  // namespace

TEST_CASE("condition C examples") {
  CHECK(satisfies_condition_C(P("UUDD")).holds);
  const auto a = satisfies_condition_C(P("UUDUDD"));
  CHECK_FALSE(a.holds);
  REQUIRE(a.first_violation.has_value());
  CHECK(a.first_violation->kind == ConditionCViolation::UUDUOccurrence);
  CHECK(a.first_violation->position == 1);
  const auto b = satisfies_condition_C(P("UUUDUDDD"));
  CHECK_FALSE(b.holds);
  REQUIRE(b.first_violation.has_value());
  CHECK(b.first_violation->kind == ConditionCViolation::UDUTooHigh);
  CHECK(b.first_violation->position == 3);
}

TEST_CASE("condition C agrees with a letter scan") {
  for (int n = 0; n <= 12; ++n) {
    for (const Path& p : enumerate_paths(n)) {
      INFO(fmt(p));
      CHECK(satisfies_condition_C(p).holds == condition_c_oracle(p));
    }
  }
}

TEST_CASE("psi examples and errors") {
  CHECK(fmt(psi(P("UDUD"))) == "UDUD");
  CHECK(fmt(psi(P("UUDUDD"))) == "UDUUDD");
  CHECK(fmt(psi(P("UUUDC2"))) == "UUUDC2");
  CHECK(error_of([] { psi(P("UUC2UUC2")); }) == ErrorKind::PreconditionViolated);
  CHECK(error_of([] { psi(P("UUC2UD")); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("psi is the unique condition-C path with the substituted profile") {
  for (int n = 0; n <= 12; ++n) {
    const auto paths = enumerate_paths(n);
    // Oracle: index the condition-C candidates by (final catastrophe, substituted profile).
    std::multimap<std::pair<int, std::vector<int>>, Path> candidates;
    for (const Path& q : paths) {
      if (!dyck_or_final_cat(q) || !condition_c_oracle(q)) continue;
      const int k = q.catastrophe_count() ? q[q.length() - 1].size() : 0;
      candidates.emplace(std::make_pair(k, substituted_dd(q)), q);
    }
    for (const Path& p : paths) {
      if (!dyck_or_final_cat(p)) continue;
      const int k = p.catastrophe_count() ? p[p.length() - 1].size() : 0;
      const auto key = std::make_pair(k, substituted_dd(p));
      INFO(fmt(p));
      REQUIRE(candidates.count(key) == 1);
      const Path q = psi(p);
      CHECK(q == candidates.find(key)->second);
      CHECK(psi(q) == q);
    }
  }
}

TEST_CASE("collapse examples") {
  CHECK(fmt(collapse_catastrophes(P("UUC2UUC2"))) == "UUUUUC5");
  CHECK(fmt(collapse_catastrophes(P("UUUC3"))) == "UUUC3");
  const Path fig = collapse_catastrophes(P("UUC2UUUDUDDUC2UD"));
  CHECK(fig.catastrophe_count() == 1);
  CHECK(fig.length() == 14);
  CHECK(dd_profile(fig) == dd_profile(P("UUC2UUUDUDDUC2UD")));
  CHECK(fmt(fig) == "UUUUUUDUDDUC5UD");
  CHECK(error_of([] { collapse_catastrophes(P("UUDD")); }) == ErrorKind::NoCatastrophe);
}

TEST_CASE("eliminate and reduce examples") {
  CHECK(fmt(eliminate_isolated_tail(P("UUC2UD"))) == "UUUUC4");
  CHECK(fmt(eliminate_isolated_tail(P("UUUC3"))) == "UUUC3");
  CHECK(fmt(eliminate_isolated_tail(P("UUC2UDUD"))) == "UUUUDUC4");
  CHECK(error_of([] { eliminate_isolated_tail(P("UUC2UUC2")); }) == ErrorKind::PreconditionViolated);

  CHECK(fmt(reduce_catastrophe(P("UUUUC4"))) == "UUDUC2");
  CHECK(fmt(reduce_catastrophe(P("UUUUUUC6"))) == "UUUUDUC4");
  CHECK(error_of([] { reduce_catastrophe(P("UUUC3")); }) == ErrorKind::PreconditionViolated);
  CHECK(error_of([] { reduce_catastrophe(P("UUDD")); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("catastrophe size and length have different parity") {
  for (int n = 0; n <= 14; ++n) {
    for (const Path& p : enumerate_paths(n)) {
      if (p.catastrophe_count() != 1) continue;
      for (const Step s : p) {
        if (s.is_catastrophe()) CHECK((s.size() - n) % 2 != 0);
      }
    }
  }
}

TEST_CASE("lemmas preserve length and DD profile") {
  for (int n = 0; n <= 12; ++n) {
    for (const Path& p : enumerate_paths(n)) {
      INFO(fmt(p));
      const Profile prof = dd_profile(p);
      if (p.catastrophe_count() == 0) continue;
      const Path c = collapse_catastrophes(p);
      CHECK(c.length() == p.length());
      CHECK(c.catastrophe_count() == 1);
      CHECK(dd_profile(c) == prof);
      const Path e = eliminate_isolated_tail(c);
      CHECK(e.length() == p.length());
      CHECK(e.catastrophe_count() == 1);
      CHECK(dd_profile(e) == prof);
      bool after = false;
      for (std::size_t i = 0; i < e.length(); ++i) {
        if (e[i].is_catastrophe()) after = true;
        else if (after && e[i].is_down()) CHECK_FALSE(is_isolated_down(e.steps(), i));
      }
      if (p.catastrophe_count() == 1 && satisfies_condition_C(p).holds) {
        int k = 0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < p.length(); ++i) {
          if (p[i].is_catastrophe()) {
            k = p[i].size();
            at = i;
          }
        }
        if (k >= 4) {
          const Path r = reduce_catastrophe(p);
          CHECK(r.length() == p.length());
          CHECK(dd_profile(r) == prof);
          REQUIRE(r[at].is_catastrophe());
          CHECK(r[at].size() == k - 2);
        }
      }
    }
  }
}

TEST_CASE("family examples") {
  CHECK(in_dd_family(P("UUC2"), DDFamily::A2));
  CHECK_FALSE(in_dd_family(P("UUUDC2"), DDFamily::A2));
  CHECK(in_dd_family(P("UDUD"), DDFamily::Abar));
  CHECK(in_dd_family(P("UUDD"), DDFamily::Aprime));
  CHECK_FALSE(in_dd_family(P("UD"), DDFamily::Aprime));
  CHECK(in_dd_family(P(""), DDFamily::Aprime));
  CHECK(dd_family_name(DDFamily::R1) == "R1");
}

TEST_CASE("R1 and R2 counts match N and V, one member per class") {
  const RationalSeries nser = gf("N", 14);
  const RationalSeries vser = gf("V", 14);
  for (int n = 0; n <= 13; ++n) {
    const DDFamily fam = n % 2 ? DDFamily::R1 : DDFamily::R2;
    const ClassPartition parts = partition_classes(n, Pattern::DD);
    std::size_t members = 0;
    for (const auto& [prof, paths] : parts) {
      std::size_t in_class = 0;
      for (const Path& p : paths) {
        const bool in = in_dd_family(p, fam);
        CHECK(in == is_dd_representative(p));
        if (in) ++in_class;
      }
      INFO("n=" << n);
      CHECK(in_class == 1);
      members += in_class;
    }
    CHECK(members == parts.size());
    const mpq_class want = n % 2 ? nser[n] : vser[n];
    CHECK(mpq_class(static_cast<unsigned long>(members)) == want);
  }
}

TEST_CASE("canonical_dd examples") {
  CHECK(fmt(canonical_dd(P("UUUC3"))) == "UDUD");
  CHECK(fmt(canonical_dd(P("UUUDC2"))) == "UDUUC2");
  CHECK(fmt(canonical_dd(P("UDUD"))) == "UDUD");
  CHECK(canonical_dd(P("")).empty());
}

TEST_CASE("canonical_dd is a fixed point in R1/R2 and the lemma pipeline agrees") {
  std::map<int, int> skipped;
  for (int n = 0; n <= 12; ++n) {
    for (const Path& p : enumerate_paths(n)) {
      INFO(fmt(p));
      const Path c = canonical_dd(p);
      CHECK(c.length() == p.length());
      CHECK(is_dd_representative(c));
      CHECK(dd_profile(c) == dd_profile(p));
      CHECK(canonical_dd(c) == c);
      const auto viaLemmas = canonical_dd_by_lemmas(p);
      if (viaLemmas) CHECK(*viaLemmas == c);
      else ++skipped[n];
      if (n % 2 == 1) CHECK(viaLemmas.has_value());
    }
  }
  // The even case analysis leaves a few inputs uncovered; see canonical_dd_by_lemmas.
  CHECK(skipped == std::map<int, int>{{8, 1}, {10, 10}, {12, 67}});
}

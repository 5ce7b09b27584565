#include "dyckcat/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "dyckcat/error.hpp"

namespace dyckcat {

RationalSeries::RationalSeries(int order)
    : order_(order), c_(static_cast<std::size_t>(order + 1)) {}

RationalSeries::RationalSeries(std::vector<mpq_class> coeffs, int order)
    : order_(order), c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(order + 1));
}

RationalSeries RationalSeries::polynomial(std::initializer_list<long> coeffs, int order) {
  RationalSeries s(order);
  int i = 0;
  for (const long c : coeffs) {
    if (i > order) break;
    s.c_[static_cast<std::size_t>(i++)] = c;
  }
  return s;
}

RationalSeries RationalSeries::constant(const mpq_class& c, int order) {
  RationalSeries s(order);
  s.c_[0] = c;
  return s;
}

RationalSeries RationalSeries::monomial(int k, int order) {
  RationalSeries s(order);
  if (k <= order) s.c_[static_cast<std::size_t>(k)] = 1;
  return s;
}

int RationalSeries::valuation() const {
  for (int i = 0; i <= order_; ++i) {
    if (sgn(c_[static_cast<std::size_t>(i)]) != 0) return i;
  }
  return order_ + 1;
}

RationalSeries RationalSeries::truncated(int order) const {
  std::vector<mpq_class> c(c_.begin(), c_.begin() + std::min(order, order_) + 1);
  return RationalSeries(std::move(c), std::min(order, order_));
}

RationalSeries RationalSeries::shifted_down(int k) const {
  if (valuation() < k) {
    throw Error(ErrorKind::PreconditionViolated,
                "series not divisible by x^" + std::to_string(k));
  }
  std::vector<mpq_class> c(c_.begin() + k, c_.end());
  return RationalSeries(std::move(c), order_ - k);
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& b) {
  *this = truncated(b.order_);
  for (int i = 0; i <= order_; ++i) c_[static_cast<std::size_t>(i)] += b[i];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& b) {
  *this = truncated(b.order_);
  for (int i = 0; i <= order_; ++i) c_[static_cast<std::size_t>(i)] -= b[i];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const mpq_class& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
RationalSeries operator-(RationalSeries a) { return a *= mpq_class(-1); }
RationalSeries operator*(const mpq_class& s, RationalSeries a) { return a *= s; }

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<mpq_class> c(static_cast<std::size_t>(n + 1));
  const int va = a.valuation();
  const int vb = b.valuation();
  for (int i = va; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = vb; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return RationalSeries(std::move(c), n);
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) { return a + b; }
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) { return a * b; }

RationalSeries series_div(const RationalSeries& a, const RationalSeries& b) {
  if (sgn(b[0]) == 0) throw Error(ErrorKind::DivisionByNonUnit, "divisor has zero constant term");
  const int n = std::min(a.order(), b.order());
  std::vector<mpq_class> q(static_cast<std::size_t>(n + 1));
  const mpq_class inv = 1 / b[0];
  for (int i = 0; i <= n; ++i) {
    mpq_class acc = a[i];
    for (int j = 1; j <= i; ++j) acc -= b[j] * q[static_cast<std::size_t>(i - j)];
    q[static_cast<std::size_t>(i)] = acc * inv;
  }
  return RationalSeries(std::move(q), n);
}

RationalSeries series_div_cancel(const RationalSeries& a, const RationalSeries& b) {
  const int v = b.valuation();
  if (v > b.order()) throw Error(ErrorKind::DivisionByNonUnit, "divisor is zero to its order");
  if (a.valuation() < v) {
    throw Error(ErrorKind::DivisionByNonUnit, "quotient is not a power series");
  }
  return series_div(a.shifted_down(v), b.shifted_down(v));
}

namespace {

bool rational_sqrt(const mpq_class& q, mpq_class& root) {
  if (sgn(q) <= 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  root = mpq_class(sqrt(num), sqrt(den));
  root.canonicalize();
  return true;
}

}  // namespace

RationalSeries series_sqrt(const RationalSeries& a) {
  mpq_class b0;
  if (!rational_sqrt(a[0], b0)) {
    throw Error(ErrorKind::NonSquareConstantTerm,
                "constant term " + rational_string(a[0]) + " is not a nonzero rational square");
  }
  const int n = a.order();
  std::vector<mpq_class> b(static_cast<std::size_t>(n + 1));
  b[0] = b0;
  const mpq_class inv = 1 / (2 * b0);
  for (int i = 1; i <= n; ++i) {
    mpq_class acc = a[i];
    for (int j = 1; j < i; ++j) acc -= b[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i - j)];
    b[static_cast<std::size_t>(i)] = acc * inv;
  }
  return RationalSeries(std::move(b), n);
}

std::string rational_string(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<std::string> coefficient_strings(const RationalSeries& s) {
  std::vector<std::string> out;
  out.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) out.push_back(rational_string(c));
  return out;
}

// ---------------------------------------------------------------- generating functions

namespace {

// Extra working order absorbed by the x^v cancellations in the quotients.
constexpr int kMargin = 16;

using Poly = std::initializer_list<long>;

struct Ctx {
  int w;  // working order
  RationalSeries P(Poly c) const { return RationalSeries::polynomial(c, w); }
  // sqrt(1 - 4x^2)
  RationalSeries s() const { return series_sqrt(P({1, 0, -4})); }
  // sqrt(1 - 2x^2 - 3x^4)
  RationalSeries r() const { return series_sqrt(P({1, 0, -2, 0, -3})); }
};

RationalSeries div(const RationalSeries& a, const RationalSeries& b) {
  return series_div_cancel(a, b);
}

RationalSeries gf_E(const Ctx& k) {
  const auto s = k.s();
  return div(k.P({-1, 2}) + s, k.P({-1, 1}) + k.P({1, 1}) * s);
}

RationalSeries gf_A(const Ctx& k) {
  const auto s = k.s();
  return div((k.P({1}) - s) * k.P({1, -1}), k.P({0, 1}) * (k.P({-1, 2}) + s));
}

RationalSeries gf_B(const Ctx& k) {
  const auto s = k.s();
  return div((k.P({1}) - s) * (k.P({1, 0, -4, 2}) + k.P({-1, 0, 2}) * s),
             k.P({0, 0, 0, 0, 2}) * (k.P({-1, 2}) + s));
}

RationalSeries gf_Abar(const Ctx& k) {
  const auto r = k.r();
  return div(k.P({1, 0, -1}) + r, k.P({1, 0, -3, 0, 1, 0, 1}) - k.P({-1, 0, 0, 0, 1}) * r);
}

RationalSeries gf_BDD(const Ctx& k) {
  const auto r = k.r();
  return div(k.P({2, 0, -1, 0, -1}) + k.P({0, 0, 1}) * r, k.P({1, 0, -1}) + r);
}

RationalSeries gf_Nudu(const Ctx& k) {
  return div(k.P({1, 0, 1}) - k.r(), k.P({0, 0, 2})) - k.P({1});
}

RationalSeries gf_Aprime(const Ctx& k) {
  return div(k.P({1}), k.P({1}) - k.P({0, 0, 1}) * gf_Nudu(k));
}

RationalSeries gf_S0(const Ctx& k) {
  const auto ab = gf_Abar(k);
  return k.P({0, 0, 1}) * (ab - k.P({1}) - k.P({0, 0, 1, 0, 1}) * ab);
}

RationalSeries gf_S1(const Ctx& k) {
  const auto ap = gf_Aprime(k);
  return k.P({0, 0, 0, 0, 1}) * gf_Abar(k) * (gf_BDD(k) - k.P({0, 0, 1})) * ap *
         (ap - k.P({1}));
}

// ((-x^2-1) r + x^4 + 2x^2 - 1) (x^2 + r + 1)^2
RationalSeries dd_denominator(const Ctx& k, const RationalSeries& r) {
  const auto t = k.P({1, 0, 1}) + r;
  return (k.P({-1, 0, -1}) * r + k.P({-1, 0, 2, 0, 1})) * t * t;
}

RationalSeries gf_N(const Ctx& k) {
  const auto r = k.r();
  const auto t = k.P({1, 0, 1}) + r;
  return div(k.P({0, 0, 0, 8}), t * t * (k.P({1, 0, -2, 0, -1}) + k.P({1, 0, 1}) * r));
}

RationalSeries gf_V(const Ctx& k) {
  const auto r = k.r();
  return div(k.P({-4, 0, -4, 0, 4}) * r + k.P({-4, 0, 0, 0, 8, 0, 20, 0, 8}),
             dd_denominator(k, r));
}

RationalSeries gf_LDD(const Ctx& k) {
  const auto r = k.r();
  return div(k.P({-4, 0, -4, 0, 4}) * r + k.P({-4, 0, 0, -8, 8, 0, 20, 0, 8}),
             dd_denominator(k, r));
}

RationalSeries rational_gf(const Ctx& k, Poly num, Poly den) { return div(k.P(num), k.P(den)); }

using Builder = std::function<RationalSeries(const Ctx&)>;

const std::map<std::string, Builder, std::less<>>& builders() {
  static const std::map<std::string, Builder, std::less<>> table = {
      {"E", gf_E},
      {"A", gf_A},
      {"B", gf_B},
      {"C", [](const Ctx& k) { return rational_gf(k, {1, -1}, {1, -1, -1}); }},
      // (x-1) / ((x+1)(x^3-x^2+2x-1))
      {"F", [](const Ctx& k) {
         return div(k.P({-1, 1}), k.P({1, 1}) * k.P({-1, 2, -1, 1}));
       }},
      // (2x^3-2x+1) / ((1-x^2-x)(1-x)^2(x+1))
      {"G", [](const Ctx& k) {
         return div(k.P({1, -2, 0, 2}),
                    k.P({1, -1, -1}) * k.P({1, -1}) * k.P({1, -1}) * k.P({1, 1}));
       }},
      {"I", [](const Ctx& k) {
         return rational_gf(k, {-1, 2, -2, 2, -2, 1}, {-1, 2, -1, 1, -1, 1, -1, 1});
       }},
      {"J", [](const Ctx& k) {
         return rational_gf(k, {-1, 2, -2, 1}, {-1, 2, -1, 0, 0, 1, -1, 1});
       }},
      {"K", [](const Ctx& k) { return rational_gf(k, {-1, 1, 0, 0, 1}, {-1, 1, 1}); }},
      {"L_DU", [](const Ctx& k) { return rational_gf(k, {1, -1}, {1, -1, -1}); }},
      {"N", gf_N},
      {"V", gf_V},
      {"L_DD", gf_LDD},
      {"Abar", gf_Abar},
      {"B_DD", gf_BDD},
      {"N_udu", gf_Nudu},
      {"Aprime", gf_Aprime},
      {"S0", gf_S0},
      {"S1", gf_S1},
  };
  return table;
}

void require_order(int order) {
  if (order < 0 || order > kMaxSeriesOrder) {
    throw Error(ErrorKind::PreconditionViolated,
                "series order " + std::to_string(order) + " outside 0.." +
                    std::to_string(kMaxSeriesOrder));
  }
}

}  // namespace

const std::vector<std::string>& gf_names() {
  static const std::vector<std::string> names = {
      "E", "A", "B", "C", "F", "G", "I", "J", "K", "L_DU", "N", "V", "L_DD",
      "Abar", "B_DD", "N_udu", "Aprime", "S0", "S1"};
  return names;
}

RationalSeries gf(std::string_view name, int order) {
  const auto& table = builders();
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::UnknownName, "unknown series " + std::string(name));
  require_order(order);
  const RationalSeries s = it->second(Ctx{order + kMargin});
  if (s.order() < order) throw std::logic_error("working margin too small for " + std::string(name));
  return s.truncated(order);
}

// ---------------------------------------------------------------- sequence engines

namespace {

struct Recurrence {
  std::vector<long> coeffs;  // a_n = sum coeffs[i] a_{n-1-i}
  std::vector<long> init;
};

const std::map<std::string, Recurrence, std::less<>>& recurrences() {
  static const std::map<std::string, Recurrence, std::less<>> table = {
      {"c", {{1, 1}, {1, 0}}},
      {"f", {{1, 1, 0, 1}, {1, 0, 1, 1}}},
      {"g", {{2, 1, -3, 0, 1}, {1, 0, 1, 1, 3}}},
      {"i", {{2, -1, 1, -1, 1, -1, 1}, {1, 0, 1, 1, 2, 4, 5}}},
      {"j", {{2, -1, 0, 0, 1, -1, 1}, {1, 0, 1, 1, 1, 2, 2}}},
      {"k", {{1, 1}, {1, 0, 1, 1, 1}}},
      {"l", {{1, 1}, {1, 0, 1}}},
  };
  return table;
}

const Recurrence& find_recurrence(std::string_view name) {
  const auto it = recurrences().find(name);
  if (it == recurrences().end()) {
    throw Error(ErrorKind::UnknownName, "unknown recurrence " + std::string(name));
  }
  return it->second;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

const std::vector<std::string>& recurrence_names() {
  static const std::vector<std::string> names = {"c", "f", "g", "i", "j", "k", "l"};
  return names;
}

std::vector<mpz_class> recurrence_terms(std::string_view name, int count) {
  const Recurrence& rec = find_recurrence(name);
  std::vector<mpz_class> a;
  for (int n = 0; n < count; ++n) {
    if (static_cast<std::size_t>(n) < rec.init.size()) {
      a.emplace_back(rec.init[static_cast<std::size_t>(n)]);
      continue;
    }
    mpz_class v = 0;
    for (std::size_t i = 0; i < rec.coeffs.size(); ++i) {
      v += rec.coeffs[i] * a[static_cast<std::size_t>(n) - 1 - i];
    }
    a.push_back(v);
  }
  return a;
}

mpz_class recurrence_eval(std::string_view name, int n) {
  if (n < 0) throw Error(ErrorKind::PreconditionViolated, "negative index");
  return recurrence_terms(name, n + 1).back();
}

mpz_class closed_form_eval(std::string_view name, int n) {
  if (name != "a" && name != "b") {
    throw Error(ErrorKind::UnknownName, "unknown closed form " + std::string(name));
  }
  if (n < 0) throw Error(ErrorKind::PreconditionViolated, "negative index");
  if (n == 0) return 1;
  if (n == 1) return 0;
  if (name == "a") return binomial(n - 1, (n - 2) / 2);
  if (n % 2 == 1) return binomial(n, (n - 3) / 2);
  return binomial(n, (n - 4) / 2) + binomial(n, n / 2) / (n / 2 + 1);
}

std::string_view gf_of_sequence(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"a", "A"}, {"b", "B"}, {"c", "C"}, {"f", "F"}, {"g", "G"}, {"i", "I"},
      {"j", "J"}, {"k", "K"}, {"l", "L_DU"}, {"dd", "L_DD"}};
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::UnknownName, "unknown sequence " + std::string(name));
  return it->second;
}

// ---------------------------------------------------------------- identities

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"A-quadratic", "B-quadratic", "LDD-quadratic"};
  return names;
}

RationalSeries check_algebraic_identity(std::string_view name, int order) {
  require_order(order);
  const auto P = [order](Poly c) { return RationalSeries::polynomial(c, order); };
  RationalSeries p0, p1, p2, f;
  if (name == "A-quadratic") {
    f = gf("A", order);
    p0 = P({1, -2, 1});
    p1 = P({-1, 3, -2});
    p2 = P({0, -1, 2});
  } else if (name == "B-quadratic") {
    f = gf("B", order);
    p0 = P({1, -1, -4, 5});
    p1 = P({-1, 1, 5, -5, -2});
    p2 = P({0, 0, 0, 0, -1, 2});
  } else if (name == "LDD-quadratic") {
    f = gf("L_DD", order);
    p0 = P({1, -1, 1, -2, 2, -5, 5, -3, 4, -1, 1});
    p1 = P({-1, 1, 0, 3, -3, 6, -9, 5, -6, 1, -1});
    p2 = P({0, 0, 0, -1, 2, -3, 5, -3, 4, -1, 1});
  } else {
    throw Error(ErrorKind::UnknownName, "unknown identity " + std::string(name));
  }
  return p0 + p1 * f + p2 * f * f;
}

bool parity_merge_check(int order) {
  const RationalSeries n = gf("N", order);
  const RationalSeries v = gf("V", order);
  const RationalSeries l = gf("L_DD", order);
  for (int i = 0; i <= order; ++i) {
    if (i % 2 == 0 && sgn(n[i]) != 0) return false;
    if (i % 2 == 1 && sgn(v[i]) != 0) return false;
    if (n[i] + v[i] != l[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- asymptotics

namespace {

// log of a positive integer, without overflowing double.
long double log_mpz(const mpz_class& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(static_cast<long double>(mant)) +
         static_cast<long double>(exp) * std::numbers::ln2_v<long double>;
}

double ratio(const mpz_class& a, const mpz_class& b) { return mpq_class(a, b).get_d(); }

// Smallest positive root of a polynomial (lowest degree first) on (0, 1).
long double smallest_root(std::initializer_list<long double> poly) {
  const auto eval = [&](long double x) {
    long double acc = 0, p = 1;
    for (const long double c : poly) {
      acc += c * p;
      p *= x;
    }
    return acc;
  };
  // Scan for the first sign change, then bisect.
  long double lo = 0;
  const long double step = 1.0L / 4096;
  while (eval(lo) * eval(lo + step) > 0) lo += step;
  long double hi = lo + step;
  for (int it = 0; it < 200; ++it) {
    const long double mid = (lo + hi) / 2;
    (eval(lo) * eval(mid) <= 0 ? hi : lo) = mid;
  }
  return (lo + hi) / 2;
}

struct AsymptoticForm {
  double printed_base;      // per step; 0 if none printed
  double printed_constant;  // 0 if none printed
  long double exact_base;   // dominant growth per step
};

const std::map<std::string, AsymptoticForm, std::less<>>& forms() {
  static const std::map<std::string, AsymptoticForm, std::less<>> table = [] {
    const long double phi = (1 + std::sqrt(5.0L)) / 2;
    std::map<std::string, AsymptoticForm, std::less<>> t;
    t["a"] = {2.0, 0, 2.0L};
    t["b"] = {2.0, 0, 2.0L};
    t["c"] = {1.61803, 0.27639, phi};
    t["f"] = {1.75487, 0.26212, 1 / smallest_root({-1, 2, -1, 1})};
    t["g"] = {1.61803, 0.72360, phi};
    t["i"] = {1.64072, 0.28134, 1 / smallest_root({-1, 2, -1, 1, -1, 1, -1, 1})};
    t["j"] = {1.48698, 0.25317, 1 / smallest_root({-1, 2, -1, 0, 0, 1, -1, 1})};
    t["k"] = {1.61803, 0.17082, phi};
    t["l"] = {1.61803, 0.27639, phi};
    t["dd"] = {0, 0, std::sqrt(3.0L)};
    return t;
  }();
  return table;
}

const AsymptoticForm& find_form(std::string_view name) {
  const auto it = forms().find(name);
  if (it == forms().end()) throw Error(ErrorKind::UnknownName, "unknown sequence " + std::string(name));
  return it->second;
}

// Natural log of the printed estimate for a_n.
long double log_estimate(std::string_view name, int n) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double ln = std::log(static_cast<long double>(n));
  if (name == "a") return n * std::log(2.0L) - 0.5L * std::log(2 * pi * n);
  if (name == "b") return (n + 0.5L) * std::log(2.0L) - 0.5L * std::log(pi * n);
  if (name == "dd") {
    const long double sq2 = std::sqrt(2.0L), sqpi = std::sqrt(pi);
    const long double l3 = 0.5L * std::log(3.0L);
    if (n % 2 == 0) return std::log(41 * sq2 / (2 * sqpi)) + (n + 1) * l3 - 1.5L * ln;
    return std::log(135 * sq2 / (4 * sqpi)) + n * l3 - 1.5L * ln;
  }
  const AsymptoticForm& f = find_form(name);
  return std::log(static_cast<long double>(f.printed_constant)) +
         n * std::log(static_cast<long double>(f.printed_base));
}

}  // namespace

const std::vector<std::string>& asymptotic_names() {
  static const std::vector<std::string> names = {"a", "b", "c", "f", "g", "i", "j", "k", "l", "dd"};
  return names;
}

mpz_class sequence_value(std::string_view name, int n) {
  if (name == "a" || name == "b") return closed_form_eval(name, n);
  if (name == "dd") {
    const RationalSeries s = gf("L_DD", n);
    return s[n].get_num();
  }
  return recurrence_eval(name, n);
}

AsymptoticReport asymptotic_diagnostic(std::string_view name, int n) {
  const AsymptoticForm& form = find_form(name);
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "index too small for a diagnostic");
  std::vector<mpz_class> a;  // a_n, a_{n+1}, a_{n+2}
  if (name == "dd") {
    const RationalSeries s = gf("L_DD", n + 2);
    for (int i = 0; i < 3; ++i) a.push_back(s[n + i].get_num());
  } else if (name == "a" || name == "b") {
    for (int i = 0; i < 3; ++i) a.push_back(closed_form_eval(name, n + i));
  } else {
    const std::vector<mpz_class> terms = recurrence_terms(name, n + 3);
    a.assign(terms.end() - 3, terms.end());
  }

  AsymptoticReport rep;
  rep.name = std::string(name);
  rep.n = n;
  rep.actual_over_estimate = static_cast<double>(std::exp(log_mpz(a[0]) - log_estimate(name, n)));
  rep.relative_error = std::abs(rep.actual_over_estimate - 1);
  rep.one_step_ratio = ratio(a[1], a[0]);
  rep.printed_base = form.printed_base;
  rep.printed_constant = form.printed_constant;
  const double nn = n;
  if (name == "dd") {
    rep.growth_statistic = ratio(a[2], a[0]) * std::pow((nn + 2) / nn, 1.5);
    rep.growth_target = static_cast<double>(form.exact_base * form.exact_base);
    rep.statistic = "(a[n+2]/a[n])*((n+2)/n)^(3/2)";
  } else if (name == "a" || name == "b") {
    rep.growth_statistic = std::sqrt(ratio(a[2], a[0]) * std::sqrt((nn + 2) / nn));
    rep.growth_target = static_cast<double>(form.exact_base);
    rep.statistic = "sqrt((a[n+2]/a[n])*((n+2)/n)^(1/2))";
  } else {
    rep.growth_statistic = rep.one_step_ratio;
    rep.growth_target = static_cast<double>(form.exact_base);
    rep.statistic = "a[n+1]/a[n]";
  }
  if (form.printed_base > 0) {
    rep.empirical_constant = static_cast<double>(
        std::exp(log_mpz(a[0]) - n * std::log(static_cast<long double>(form.printed_base))));
  }
  return rep;
}

DDConstantEstimate dd_constant_estimate(int n) {
  if (n < 8) throw Error(ErrorKind::PreconditionViolated, "index too small for extrapolation");
  const RationalSeries s = gf("L_DD", n + 1);
  const long double l3 = 0.5L * std::log(3.0L);
  // c_m = a_m m^{3/2} / sqrt(3)^{m + [m even]}
  const auto raw = [&](int m) {
    const long double shift = m % 2 == 0 ? m + 1 : m;
    return std::exp(log_mpz(s[m].get_num()) + 1.5L * std::log(static_cast<long double>(m)) -
                    shift * l3);
  };
  // Fourth-order Richardson in 1/m over same-parity indices m, m-2, ..., m-8.
  const auto extrapolate = [&](int m) {
    constexpr int kOrder = 4;
    long double acc = 0, fact_j = 1;
    for (int j = 0; j <= kOrder; ++j) {
      if (j > 0) fact_j *= j;
      long double fact_rest = 1;
      for (int t = 2; t <= kOrder - j; ++t) fact_rest *= t;
      const int idx = m - 2 * (kOrder - j);
      const long double half = idx / 2.0L;
      const long double sign = (kOrder - j) % 2 == 0 ? 1 : -1;
      acc += sign * std::pow(half, kOrder) * raw(idx) / (fact_j * fact_rest);
    }
    return acc;
  };
  const int even = n % 2 == 0 ? n : n + 1;
  const int odd = n % 2 == 1 ? n : n + 1;
  const long double pi = std::numbers::pi_v<long double>;
  DDConstantEstimate est;
  est.printed_even = static_cast<double>(41 * std::sqrt(2.0L) / (2 * std::sqrt(pi)));
  est.printed_odd = static_cast<double>(135 * std::sqrt(2.0L) / (4 * std::sqrt(pi)));
  est.raw_even = static_cast<double>(raw(even));
  est.raw_odd = static_cast<double>(raw(odd));
  est.extrapolated_even = static_cast<double>(extrapolate(even));
  est.extrapolated_odd = static_cast<double>(extrapolate(odd));
  return est;
}

}  // namespace dyckcat

#pragma once

// Exact truncated power series over the rationals, the generating functions
// of the class counts, and the sequence engines checked against them.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dyckcat {

inline constexpr int kDefaultSeriesOrder = 64;
inline constexpr int kMaxSeriesOrder = 512;

/// c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
class RationalSeries {
 public:
  explicit RationalSeries(int order = 0);
  RationalSeries(std::vector<mpq_class> coeffs, int order);

  /// Polynomial with integer coefficients, lowest degree first.
  static RationalSeries polynomial(std::initializer_list<long> coeffs, int order);
  static RationalSeries constant(const mpq_class& c, int order);
  /// x^k.
  static RationalSeries monomial(int k, int order);

  int order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  /// Index of the first nonzero coefficient, order + 1 for the zero series.
  int valuation() const;
  bool is_zero() const { return valuation() > order_; }

  RationalSeries truncated(int order) const;
  /// Divides by x^k; the first k coefficients must vanish. Order drops by k.
  RationalSeries shifted_down(int k) const;

  RationalSeries& operator+=(const RationalSeries& b);
  RationalSeries& operator-=(const RationalSeries& b);
  RationalSeries& operator*=(const mpq_class& s);

  bool operator==(const RationalSeries&) const = default;

 private:
  int order_;
  std::vector<mpq_class> c_;
};

RationalSeries operator+(RationalSeries a, const RationalSeries& b);
RationalSeries operator-(RationalSeries a, const RationalSeries& b);
RationalSeries operator-(RationalSeries a);
RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator*(const mpq_class& s, RationalSeries a);

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);
/// Throws DivisionByNonUnit when b has zero constant term.
RationalSeries series_div(const RationalSeries& a, const RationalSeries& b);
/// a / b after removing the common factor x^v, v = valuation(b). Throws
/// DivisionByNonUnit if a vanishes to a lower order than b.
RationalSeries series_div_cancel(const RationalSeries& a, const RationalSeries& b);
/// Throws NonSquareConstantTerm unless c_0 is the square of a nonzero rational.
RationalSeries series_sqrt(const RationalSeries& a);

/// "p/q", or "p" for integers.
std::string rational_string(const mpq_class& q);
std::vector<std::string> coefficient_strings(const RationalSeries& s);

// ---------------------------------------------------------------- generating functions

/// E, A, B, C, F, G, I, J, K, L_DU, N, V, L_DD and the auxiliaries
/// Abar, B_DD, N_udu, Aprime, S0, S1.
const std::vector<std::string>& gf_names();
RationalSeries gf(std::string_view name, int order = kDefaultSeriesOrder);

// ---------------------------------------------------------------- sequence engines

/// c, f, g, i, j, k, l: linear recurrences with their initial terms.
const std::vector<std::string>& recurrence_names();
mpz_class recurrence_eval(std::string_view name, int n);
std::vector<mpz_class> recurrence_terms(std::string_view name, int count);

/// a, b: binomial closed forms (1 at n = 0, 0 at n = 1).
mpz_class closed_form_eval(std::string_view name, int n);

/// GF attached to a recurrence or closed-form sequence name.
std::string_view gf_of_sequence(std::string_view name);

// ---------------------------------------------------------------- identities

/// A-quadratic, B-quadratic, LDD-quadratic.
const std::vector<std::string>& identity_names();
/// Residual P0 + P1 F + P2 F^2; zero when the identity holds.
RationalSeries check_algebraic_identity(std::string_view name, int order = kDefaultSeriesOrder);

/// N carries exactly the odd coefficients, V exactly the even ones, and N + V = L_DD.
bool parity_merge_check(int order);

// ---------------------------------------------------------------- asymptotics

struct AsymptoticReport {
  std::string name;
  int n = 0;
  double actual_over_estimate = 0;  // a_n / printed estimate
  double relative_error = 0;        // |actual_over_estimate - 1|
  double one_step_ratio = 0;        // a_{n+1} / a_n
  double growth_statistic = 0;      // parity-safe normalized ratio, see growth_target
  double growth_target = 0;         // exact dominant base (per step, or per two steps for dd)
  double printed_base = 0;          // 0 when no decimal base is published
  double printed_constant = 0;      // 0 when no decimal constant is published
  double empirical_constant = 0;    // a_n / printed_base^n
  std::string statistic;            // how growth_statistic was formed
};

/// Names: a, b (closed forms), c f g i j k l (recurrences), dd (L_DD series).
const std::vector<std::string>& asymptotic_names();
AsymptoticReport asymptotic_diagnostic(std::string_view name, int n);

/// a_n for any asymptotic name; dd is read off L_DD expanded to order n.
mpz_class sequence_value(std::string_view name, int n);

/// Constant of the dd asymptotic form per parity, extrapolated from
/// a_n n^{3/2} / sqrt(3)^{n or n+1} by fourth-order Richardson extrapolation.
struct DDConstantEstimate {
  double printed_even = 0;
  double printed_odd = 0;
  double raw_even = 0;
  double raw_odd = 0;
  double extrapolated_even = 0;
  double extrapolated_odd = 0;
};
DDConstantEstimate dd_constant_estimate(int n);

}  // namespace dyckcat

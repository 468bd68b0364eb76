#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ksl::algebra {

using Rational = mpq_class;

/// Indeterminates of the proof: gamma, a, b, beta, k, eps, lambda, q, n,
/// plus x (= a/beta) and lambda1 for the eigenvalue rearrangements.
enum class Var : std::uint8_t {
  gamma, a, b, beta, k, eps, lambda, q, n, x, lambda1,
};
inline constexpr int kNumVars = 11;

std::string_view var_name(Var v);

using Exponents = std::array<std::uint16_t, kNumVars>;

/// Values for (a subset of) the indeterminates.
class Point {
 public:
  Point& set(Var v, const Rational& value);
  bool has(Var v) const { return values_[int(v)].has_value(); }
  const Rational& at(Var v) const;
  std::string to_string() const;

 private:
  std::array<std::optional<Rational>, kNumVars> values_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical: no zero coefficients are stored and terms are kept in
/// lexicographic exponent order, so structural equality is equality.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Poly var(Var v, unsigned power = 1);
  static Poly monomial(const Exponents& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int degree(Var v) const;
  /// Smallest exponent of v over all terms (0 for the zero polynomial).
  int min_degree(Var v) const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  /// Componentwise minimum of all exponent vectors.
  Exponents monomial_content() const;
  Poly divide_monomial(const Exponents& e) const;
  Poly scaled(const Rational& c) const;

  /// Exact quotient when `divisor` divides this polynomial.
  std::optional<Poly> exact_div(const Poly& divisor) const;

  /// Coefficients of v^0, v^1, ... as polynomials free of v.
  std::vector<Poly> coefficients_in(Var v) const;

  Poly set_zero(Var v) const;
  Rational eval(const Point& pt) const;
  long double eval_ld(const std::array<long double, kNumVars>& values) const;

  Poly pow(unsigned e) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator<(const Poly& a, const Poly& b);

  /// Leading term in the lexicographic order (largest exponent vector).
  const std::pair<const Exponents, Rational>& leading() const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

Poly operator*(const Poly& a, const Poly& b);

}  // namespace ksl::algebra

#pragma once

#include <string>
#include <vector>

#include "ksl/algebra/poly.hpp"

namespace ksl::algebra {

/// num/den with den != 0. No GCD normalization is performed; only common
/// monomial factors, constant denominators and literally equal parts are
/// cancelled. Equality is decided by cross-multiplication (rf_equal).
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c) {}  // NOLINT
  RationalFunction(Poly num) : num_(std::move(num)) {}  // NOLINT
  RationalFunction(Poly num, Poly den);

  static RationalFunction var(Var v) { return RationalFunction(Poly::var(v)); }
  static RationalFunction ratio(long p, long q) { return Rational(p, q); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

  RationalFunction operator-() const { return {-num_, den_}; }
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction pow(unsigned e) const;

  /// Replaces every occurrence of v by `value`.
  RationalFunction substitute(Var v, const RationalFunction& value) const;

  /// Value at v = 0 after cancelling the largest power of v common to
  /// numerator and denominator. Throws if the denominator still vanishes.
  RationalFunction limit_at_zero(Var v) const;

  /// Coefficients of v^0, v^1, ...; the denominator must be free of v.
  std::vector<RationalFunction> coefficients_in(Var v) const;

  /// Exact value; throws std::domain_error when the denominator vanishes.
  Rational eval(const Point& pt) const;
  long double eval_ld(const std::array<long double, kNumVars>& values) const;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_ = Poly(1);
};

using RF = RationalFunction;

/// p/q == r/s iff p*s - r*q is the zero polynomial.
bool rf_equal(const RationalFunction& lhs, const RationalFunction& rhs);

/// The cross-multiplied difference lhs.num*rhs.den - rhs.num*lhs.den.
Poly rf_residual(const RationalFunction& lhs, const RationalFunction& rhs);

/// Discriminant b^2 - 4ac of a polynomial of degree <= 2 in v.
RationalFunction discriminant(const RationalFunction& quadratic, Var v);

}  // namespace ksl::algebra

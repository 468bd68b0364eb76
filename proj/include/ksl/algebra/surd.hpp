#pragma once

#include <string>

#include "ksl/algebra/rational_function.hpp"

namespace ksl::algebra {

/// Element u + v*sqrt(R) of the quadratic extension of the rational
/// function field by a fixed radicand R. Identities with one radical are
/// decided by requiring both u and v to vanish, which is sufficient for
/// the identity to hold whenever sqrt(R) is real.
class Surd {
 public:
  explicit Surd(RationalFunction radicand, RationalFunction rational = {},
                RationalFunction radical = {});

  /// rational + coeff * sqrt(radicand)
  static Surd root(const RationalFunction& radicand,
                   const RationalFunction& coeff = RationalFunction(1));

  const RationalFunction& radicand() const { return radicand_; }
  const RationalFunction& rational() const { return rational_; }
  const RationalFunction& radical() const { return radical_; }

  bool is_zero() const { return rational_.is_zero() && radical_.is_zero(); }

  Surd lift(const RationalFunction& c) const { return Surd(radicand_, c); }

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o) { return *this += -o; }
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }

  Surd& operator+=(const RationalFunction& c);
  Surd& operator*=(const RationalFunction& c);
  friend Surd operator+(Surd a, const RationalFunction& c) { return a += c; }
  friend Surd operator-(Surd a, const RationalFunction& c) { return a += -c; }
  friend Surd operator*(Surd a, const RationalFunction& c) { return a *= c; }
  friend Surd operator*(const RationalFunction& c, Surd a) { return a *= c; }
  friend Surd operator/(Surd a, const RationalFunction& c) {
    return a *= RationalFunction(1) / c;
  }

  /// Evaluates a polynomial in v at v = *this.
  static Surd eval_in(const RationalFunction& poly, Var v, const Surd& value);

  long double eval_ld(const std::array<long double, kNumVars>& values) const;
  std::string to_string() const;

 private:
  void require_same(const Surd& o) const;
  RationalFunction radicand_;
  RationalFunction rational_;
  RationalFunction radical_;
};

}  // namespace ksl::algebra

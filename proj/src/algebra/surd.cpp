#include "ksl/algebra/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace ksl::algebra {

Surd::Surd(RationalFunction radicand, RationalFunction rational, RationalFunction radical)
    : radicand_(std::move(radicand)),
      rational_(std::move(rational)),
      radical_(std::move(radical)) {}

Surd Surd::root(const RationalFunction& radicand, const RationalFunction& coeff) {
  return Surd(radicand, {}, coeff);
}

void Surd::require_same(const Surd& o) const {
  if (!rf_equal(radicand_, o.radicand_))
    throw std::invalid_argument("surds over different radicands");
}

Surd Surd::operator-() const { return Surd(radicand_, -rational_, -radical_); }

Surd& Surd::operator+=(const Surd& o) {
  require_same(o);
  rational_ += o.rational_;
  radical_ += o.radical_;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  require_same(o);
  RationalFunction u = rational_ * o.rational_ + radical_ * o.radical_ * radicand_;
  RationalFunction v = rational_ * o.radical_ + radical_ * o.rational_;
  rational_ = std::move(u);
  radical_ = std::move(v);
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  require_same(o);
  // 1/(u + v r) = (u - v r)/(u^2 - v^2 R)
  const RationalFunction norm =
      o.rational_ * o.rational_ - o.radical_ * o.radical_ * radicand_;
  if (norm.is_zero()) throw std::domain_error("surd division by a zero-norm element");
  Surd conj(radicand_, o.rational_ / norm, -o.radical_ / norm);
  return *this *= conj;
}

Surd& Surd::operator+=(const RationalFunction& c) {
  rational_ += c;
  return *this;
}

Surd& Surd::operator*=(const RationalFunction& c) {
  rational_ *= c;
  radical_ *= c;
  return *this;
}

Surd Surd::eval_in(const RationalFunction& poly, Var v, const Surd& value) {
  const auto c = poly.coefficients_in(v);
  Surd acc = value.lift(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * value + c[i];
  return acc;
}

long double Surd::eval_ld(const std::array<long double, kNumVars>& values) const {
  const long double r = radicand_.eval_ld(values);
  return rational_.eval_ld(values) + radical_.eval_ld(values) * std::sqrt(r);
}

std::string Surd::to_string() const {
  return "[" + rational_.to_string() + "] + [" + radical_.to_string() + "]*sqrt(" +
         radicand_.to_string() + ")";
}

}  // namespace ksl::algebra

#include "ksl/algebra/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace ksl::algebra {
namespace {

// Horner evaluation of p at v = N/D, returning the numerator
// sum_i c_i N^i D^(E-i) and the exponent E of the implied denominator D^E.
std::pair<Poly, unsigned> substitute_poly(const Poly& p, Var v, const Poly& N,
                                          const Poly& D) {
  const std::vector<Poly> c = p.coefficients_in(v);
  const unsigned E = static_cast<unsigned>(c.size() - 1);
  if (E == 0) return {p, 0};
  Poly acc = c[E];
  Poly dpow(1);
  for (unsigned i = E; i-- > 0;) {
    dpow = dpow * D;
    acc = acc * N + c[i] * dpow;
  }
  return {acc, E};
}

}  // namespace

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Exponents common = num_.monomial_content();
  const Exponents dc = den_.monomial_content();
  for (int i = 0; i < kNumVars; ++i) common[i] = std::min(common[i], dc[i]);
  if (common != Exponents{}) {
    num_ = num_.divide_monomial(common);
    den_ = den_.divide_monomial(common);
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(1 / den_.constant_term());
    den_ = Poly(1);
    return;
  }
  const Rational lc = den_.leading().second;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  if (auto q = num_.exact_div(den_)) {
    num_ = std::move(*q);
    den_ = Poly(1);
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (auto m = o.den_.exact_div(den_)) {
    num_ = num_ * *m + o.num_;
    den_ = o.den_;
  } else if (auto m2 = den_.exact_div(o.den_)) {
    num_ += o.num_ * *m2;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d1.is_constant()) {
    if (auto r = n2.exact_div(d1)) { n2 = std::move(*r); d1 = Poly(1); }
  }
  if (!d2.is_constant()) {
    if (auto r = n1.exact_div(d2)) { n1 = std::move(*r); d2 = Poly(1); }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return *this *= RationalFunction(o.den_, o.num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
  return RationalFunction(num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::substitute(Var v, const RationalFunction& value) const {
  if (!depends_on(v)) return *this;
  auto [a, ea] = substitute_poly(num_, v, value.num(), value.den());
  auto [b, eb] = substitute_poly(den_, v, value.num(), value.den());
  // (a / D^ea) / (b / D^eb)
  if (ea > eb) b = b * value.den().pow(ea - eb);
  if (eb > ea) a = a * value.den().pow(eb - ea);
  return RationalFunction(std::move(a), std::move(b));
}

RationalFunction RationalFunction::limit_at_zero(Var v) const {
  if (is_zero()) return {};
  const int jn = num_.min_degree(v), jd = den_.min_degree(v);
  if (jd > jn)
    throw std::domain_error("pole at " + std::string(var_name(v)) + " = 0");
  Exponents e{};
  e[int(v)] = static_cast<std::uint16_t>(jd);
  Poly den = den_.divide_monomial(e).set_zero(v);
  if (den.is_zero())
    throw std::domain_error("denominator vanishes at " + std::string(var_name(v)) + " = 0");
  return RationalFunction(num_.divide_monomial(e).set_zero(v), std::move(den));
}

std::vector<RationalFunction> RationalFunction::coefficients_in(Var v) const {
  if (den_.depends_on(v))
    throw std::invalid_argument("denominator depends on " + std::string(var_name(v)));
  std::vector<RationalFunction> out;
  for (Poly& c : num_.coefficients_in(v)) out.emplace_back(std::move(c), den_);
  return out;
}

Rational RationalFunction::eval(const Point& pt) const {
  const Rational d = den_.eval(pt);
  if (d == 0) throw std::domain_error("denominator vanishes at " + pt.to_string());
  return num_.eval(pt) / d;
}

long double RationalFunction::eval_ld(const std::array<long double, kNumVars>& values) const {
  return num_.eval_ld(values) / den_.eval_ld(values);
}

std::string RationalFunction::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Poly rf_residual(const RationalFunction& lhs, const RationalFunction& rhs) {
  if (lhs.den() == rhs.den()) return lhs.num() - rhs.num();
  return lhs.num() * rhs.den() - rhs.num() * lhs.den();
}

bool rf_equal(const RationalFunction& lhs, const RationalFunction& rhs) {
  return rf_residual(lhs, rhs).is_zero();
}

RationalFunction discriminant(const RationalFunction& quadratic, Var v) {
  auto c = quadratic.coefficients_in(v);
  if (c.size() > 3)
    throw std::invalid_argument("not a quadratic in " + std::string(var_name(v)));
  c.resize(3);
  return c[1] * c[1] - RationalFunction(4) * c[2] * c[0];
}

}  // namespace ksl::algebra

#include "ksl/algebra/formal.hpp"

#include <stdexcept>
#include <tuple>

namespace ksl::algebra {
namespace {

const Poly& gamma_p() {
  static const Poly p = Poly::var(Var::gamma);
  return p;
}

RF var(Var v) { return RF::var(v); }

FormalTerm hessian(Shape s, Poly power) { return {s, std::move(power), 0, 0}; }

std::string shape_label(Shape s) {
  switch (s) {
    case Shape::kScalar: return "scalar";
    case Shape::kComplexHessianSq: return "int |v_{i jb}|^2 v^";
    case Shape::kMixedCubic: return "int v_{i jb} v_ib v_j v^";
    case Shape::kHolomorphicHessianSq: return "int |v_{ib jb}|^2 v^";
    case Shape::kHolomorphicCubic: return "int v_i v_j v_{ib jb} v^";
    case Shape::kShiftedHolomorphicSq: return "int |v_{ib jb} + a v_ib v_jb/v|^2 v^";
    case Shape::kShiftedComplexSq: return "int |v_{i jb} + b v_i v_jb/v|^2 v^";
    case Shape::kTracelessHessianSq: return "int (|v_{i jb}|^2 - (box v)^2/n) v^";
  }
  return "?";
}

// Sign requirement of a bound acting on a coefficient.
void require_sign(const RF& c, SideCondition::Sign sign, const std::string& what,
                  std::vector<SideCondition>& out) {
  if (c.num().is_constant() && c.den().is_constant()) {
    const Rational v = c.num().constant_term();
    const bool ok = sign == SideCondition::Sign::kNonNegative ? v >= 0 : v <= 0;
    if (!ok) throw std::logic_error(what + ": coefficient has the wrong sign");
    return;
  }
  out.push_back({what, c, sign});
}

}  // namespace

bool operator<(const FormalTerm& a, const FormalTerm& b) {
  return std::tie(a.shape, a.box, a.grad, a.power) <
         std::tie(b.shape, b.box, b.grad, b.power);
}

namespace terms {
FormalTerm scalar(Poly power, int box, int grad) {
  return {Shape::kScalar, std::move(power), box, grad};
}
FormalTerm I1() { return scalar(gamma_p() - Poly(2), 0, 2); }
FormalTerm I2() {
  const Poly beta = Poly::var(Var::beta);
  return scalar(beta + gamma_p() - beta * Poly::var(Var::q), 0, 1);
}
FormalTerm I3() { return scalar(gamma_p(), 0, 1); }
FormalTerm I4() { return scalar(gamma_p(), 2, 0); }
FormalTerm I5() { return hessian(Shape::kComplexHessianSq, gamma_p()); }
FormalTerm I6() { return scalar(gamma_p() - Poly(1), 1, 1); }
FormalTerm I7() { return hessian(Shape::kMixedCubic, gamma_p() - Poly(1)); }
FormalTerm I8() { return hessian(Shape::kHolomorphicHessianSq, gamma_p()); }
FormalTerm I9() { return hessian(Shape::kHolomorphicCubic, gamma_p() - Poly(1)); }
FormalTerm I11() { return hessian(Shape::kShiftedHolomorphicSq, gamma_p()); }
FormalTerm I13() { return hessian(Shape::kShiftedComplexSq, gamma_p()); }
FormalTerm traceless() { return hessian(Shape::kTracelessHessianSq, gamma_p()); }
FormalTerm J(Poly p) { return scalar(std::move(p), 1, 0); }
FormalTerm K(Poly p) { return scalar(std::move(p) - Poly(1), 0, 1); }
}  // namespace terms

std::string FormalTerm::name() const {
  static const std::vector<std::pair<FormalTerm, std::string>> known = {
      {terms::I1(), "I1"}, {terms::I2(), "I2"}, {terms::I3(), "I3"},
      {terms::I4(), "I4"}, {terms::I5(), "I5"}, {terms::I6(), "I6"},
      {terms::I7(), "I7"}, {terms::I8(), "I8"}, {terms::I9(), "I9"},
      {terms::I11(), "I11"}, {terms::I13(), "I13"},
      {terms::traceless(), "T"}};
  for (const auto& [t, n] : known)
    if (t == *this) return n;
  if (shape != Shape::kScalar) return shape_label(shape) + "(" + power.to_string() + ")";
  std::string s = "int v^(" + power.to_string() + ")";
  if (box > 0) s += " (box v)^" + std::to_string(box);
  if (grad > 0) s += " |dv|^" + std::to_string(2 * grad);
  return s;
}

FormalExpr::FormalExpr(const FormalTerm& t, RationalFunction c) { add(t, c); }

void FormalExpr::add(const FormalTerm& t, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalFunction FormalExpr::coefficient(const FormalTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? RationalFunction() : it->second;
}

FormalExpr FormalExpr::operator-() const {
  return map_coefficients([](const RF& c) { return -c; });
}

FormalExpr& FormalExpr::operator+=(const FormalExpr& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

FormalExpr& FormalExpr::operator-=(const FormalExpr& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

FormalExpr& FormalExpr::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

FormalExpr integrand_product(const FormalExpr& a, const FormalExpr& b) {
  FormalExpr out;
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      if (ta.shape != Shape::kScalar || tb.shape != Shape::kScalar)
        throw std::invalid_argument("integrand product needs scalar integrands");
      out.add(terms::scalar(ta.power + tb.power, ta.box + tb.box, ta.grad + tb.grad),
              ca * cb);
    }
  }
  return out;
}

std::string FormalExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + t.name();
  }
  return s;
}

Derivation::Derivation(Statement start, std::string origin) : stmt_(std::move(start)) {
  trail_.push_back(std::move(origin));
}

Derivation& Derivation::rewrite(const Relation& rel) {
  const RF c = stmt_.expr.coefficient(rel.target);
  if (c.is_zero()) return *this;
  if (rel.kind != Relation::Kind::kEqual) {
    const auto sign = rel.kind == Relation::Kind::kUpperBound
                          ? SideCondition::Sign::kNonNegative
                          : SideCondition::Sign::kNonPositive;
    require_sign(c, sign, "coefficient of " + rel.target.name() + " under " + rel.name,
                 conditions_);
    stmt_.sense = Statement::Sense::kNonNegative;
  }
  stmt_.expr.add(rel.target, -c);
  stmt_.expr += rel.replacement * c;
  trail_.push_back(rel.name + " on " + rel.target.name());
  return *this;
}

Derivation& Derivation::eliminate_box() {
  for (;;) {
    const FormalTerm* found = nullptr;
    for (const auto& [t, c] : stmt_.expr.terms())
      if (t.shape == Shape::kScalar && t.box > 0) {
        found = &t;
        break;
      }
    if (found == nullptr) return *this;
    const FormalTerm t = *found;
    if (t.box == 1 && t.grad == 0)
      rewrite(axioms::integration_by_parts(t));
    else
      rewrite(axioms::equation(t));
  }
}

Derivation& Derivation::combine(const Statement& other, const RationalFunction& multiplier,
                                const std::string& label) {
  if (other.sense == Statement::Sense::kNonNegative) {
    require_sign(multiplier, SideCondition::Sign::kNonNegative,
                 "multiplier of " + label, conditions_);
    stmt_.sense = Statement::Sense::kNonNegative;
  }
  stmt_.expr += other.expr * multiplier;
  trail_.push_back("add (" + multiplier.to_string() + ") x " + label);
  return *this;
}

Derivation& Derivation::substitute(Var v, const RationalFunction& value) {
  for (const auto& [t, c] : stmt_.expr.terms())
    if (t.power.depends_on(v))
      throw std::invalid_argument("substitution would change the exponent of " + t.name());
  stmt_.expr = stmt_.expr.map_coefficients([&](const RF& c) { return c.substitute(v, value); });
  trail_.push_back("substitute " + std::string(var_name(v)) + " = " + value.to_string());
  return *this;
}

namespace axioms {

Relation equation(const FormalTerm& t) {
  if (t.shape != Shape::kScalar || t.box < 1)
    throw std::invalid_argument("equation needs a box v factor in " + t.name());
  const Poly beta = Poly::var(Var::beta), q = Poly::var(Var::q);
  const RF inv_beta = RF(1) / var(Var::beta);
  FormalExpr r;
  r.add(terms::scalar(t.power + beta + Poly(1) - beta * q, t.box - 1, t.grad), inv_beta);
  r.add(terms::scalar(t.power + Poly(1), t.box - 1, t.grad), -var(Var::lambda) * inv_beta);
  r.add(terms::scalar(t.power - Poly(1), t.box - 1, t.grad + 1), var(Var::beta) + RF(1));
  return {"R-EQ", t, std::move(r), Relation::Kind::kEqual};
}

Relation integration_by_parts(const FormalTerm& t) {
  if (t.shape != Shape::kScalar || t.box != 1 || t.grad != 0)
    throw std::invalid_argument("integration by parts needs int v^p box v, got " + t.name());
  FormalExpr r(terms::scalar(t.power - Poly(1), 0, 1), -RF(t.power));
  return {"R-IBP", t, std::move(r), Relation::Kind::kEqual};
}

Relation holomorphic_cubic() {
  const RF g = var(Var::gamma);
  FormalExpr r;
  r.add(terms::I7(), -1);
  r.add(terms::I1(), RF(1) - g);
  r.add(terms::I6(), -1);
  return {"R-I9", terms::I9(), std::move(r), Relation::Kind::kEqual};
}

Relation mixed_cubic() {
  const RF inv_g = RF(1) / var(Var::gamma);
  FormalExpr r;
  r.add(terms::I4(), inv_g);
  r.add(terms::I6(), 1);
  r.add(terms::I5(), -inv_g);
  return {"R-L223", terms::I7(), std::move(r), Relation::Kind::kEqual};
}

Relation holomorphic_hessian_bound() {
  const RF g = var(Var::gamma);
  FormalExpr r;
  r.add(terms::I1(), g * (g - RF(1)));
  r.add(terms::I7(), g);
  r.add(terms::I6(), RF(2) * g);
  r.add(terms::I4(), 1);
  r.add(terms::I3(), -1);
  return {"R-L21", terms::I8(), std::move(r), Relation::Kind::kUpperBound};
}

Relation shifted_holomorphic_expansion() {
  const RF a = var(Var::a);
  FormalExpr r;
  r.add(terms::I8(), 1);
  r.add(terms::I9(), RF(2) * a);
  r.add(terms::I1(), a * a);
  return {"R-SQ", terms::I11(), std::move(r), Relation::Kind::kEqual};
}

Relation shifted_complex_expansion() {
  const RF b = var(Var::b);
  FormalExpr r;
  r.add(terms::I5(), 1);
  r.add(terms::I7(), RF(2) * b);
  r.add(terms::I1(), b * b);
  return {"R-CSX", terms::I13(), std::move(r), Relation::Kind::kEqual};
}

Relation traceless_split() {
  FormalExpr r;
  r.add(terms::traceless(), 1);
  r.add(terms::I4(), RF(1) / var(Var::n));
  return {"R-TR", terms::I5(), std::move(r), Relation::Kind::kEqual};
}

Statement shifted_holomorphic_nonnegative() {
  return {FormalExpr(terms::I11()), Statement::Sense::kNonNegative};
}

Statement cauchy_schwarz() {
  FormalExpr factor;
  factor.add(terms::scalar(Poly(0), 1, 0), 1);
  factor.add(terms::scalar(Poly(-1), 0, 1), var(Var::b));
  const FormalExpr weight(terms::scalar(gamma_p(), 0, 0));
  const FormalExpr square = integrand_product(integrand_product(factor, factor), weight);
  FormalExpr e(terms::I13());
  e -= square * (RF(1) / var(Var::n));
  return {std::move(e), Statement::Sense::kNonNegative};
}

}  // namespace axioms
}  // namespace ksl::algebra

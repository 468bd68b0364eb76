#include "ksl/algebra/derivations.hpp"

#include <stdexcept>

namespace ksl::algebra {

Statement as_statement(const Relation& rel) {
  FormalExpr e = rel.replacement;
  e.add(rel.target, -1);
  switch (rel.kind) {
    case Relation::Kind::kEqual:
      return {std::move(e), Statement::Sense::kEqualsZero};
    case Relation::Kind::kUpperBound:
      return {std::move(e), Statement::Sense::kNonNegative};
    case Relation::Kind::kLowerBound:
      return {-e, Statement::Sense::kNonNegative};
  }
  throw std::logic_error("unreachable");
}

Relation solve_for(const Statement& stmt, const FormalTerm& t, std::string name) {
  if (stmt.sense != Statement::Sense::kEqualsZero)
    throw std::invalid_argument("can only solve an equality for a term");
  const RationalFunction c = stmt.expr.coefficient(t);
  if (c.is_zero()) throw std::invalid_argument(t.name() + " does not occur");
  FormalExpr rest = stmt.expr;
  rest.add(t, -c);
  return {std::move(name), t, rest * (RationalFunction(-1) / c), Relation::Kind::kEqual};
}

namespace derive {

FormalExpr reduce(const FormalTerm& t) {
  Derivation d({FormalExpr(t), Statement::Sense::kEqualsZero}, t.name());
  d.eliminate_box();
  return d.expr();
}

FormalExpr box_gradient_identity() { return reduce(terms::I6()); }
FormalExpr box_squared_identity() { return reduce(terms::I4()); }

Derivation shifted_holomorphic_bound_raw() {
  Derivation d(axioms::shifted_holomorphic_nonnegative(), "I11 >= 0");
  d.rewrite(axioms::shifted_holomorphic_expansion())
      .rewrite(axioms::holomorphic_cubic())
      .rewrite(axioms::holomorphic_hessian_bound())
      .rewrite(axioms::mixed_cubic());
  return d;
}

Derivation shifted_holomorphic_bound() {
  Derivation d(as_statement(axioms::shifted_holomorphic_expansion()), "R-SQ");
  d.rewrite(axioms::holomorphic_cubic())
      .rewrite(axioms::holomorphic_hessian_bound())
      .rewrite(axioms::mixed_cubic())
      .eliminate_box();
  return d;
}

Derivation cauchy_schwarz_bound_raw() {
  Derivation d(axioms::cauchy_schwarz(), "R-CS");
  d.rewrite(axioms::shifted_complex_expansion()).rewrite(axioms::mixed_cubic());
  return d;
}

Derivation cauchy_schwarz_bound() {
  Derivation d = cauchy_schwarz_bound_raw();
  d.eliminate_box();
  return d;
}

Derivation box_squared_raw() {
  Derivation d(as_statement(axioms::equation(terms::I4())), "R-EQ on I4");
  const FormalExpr start = d.expr();
  for (const auto& [t, c] : start.terms())
    if (t.shape == Shape::kScalar && t.box == 1 && t.grad == 0)
      d.rewrite(axioms::integration_by_parts(t));
  return d;
}

Relation gradient_power_identity() {
  return solve_for(as_statement(axioms::equation(terms::I6())), terms::I2(), "eq7");
}

Relation box_gradient_elimination() {
  Derivation d = box_squared_raw();
  d.rewrite(gradient_power_identity());
  return solve_for(d.statement(), terms::I6(), "I6 elimination");
}

Derivation section2_combined() {
  Derivation d = shifted_holomorphic_bound();
  d.combine(axioms::shifted_holomorphic_nonnegative(), 1, "I11 >= 0");
  d.combine(cauchy_schwarz_bound().statement(), RationalFunction::var(Var::k),
            "Cauchy-Schwarz bound");
  d.rewrite(axioms::traceless_split()).eliminate_box();
  return d;
}

Derivation section3_combined_raw() {
  Derivation d = shifted_holomorphic_bound_raw();
  d.combine(cauchy_schwarz_bound_raw().statement(), RationalFunction::var(Var::k),
            "Cauchy-Schwarz bound");
  return d;
}

Derivation section3_combined() {
  Derivation d = section3_combined_raw();
  d.rewrite(box_gradient_elimination());
  return d;
}

CoefficientSet coefficients(const FormalExpr& e, const FormalTerm& t1,
                            const FormalTerm& t2, const FormalTerm& t3,
                            const FormalTerm& t4) {
  return {e.coefficient(t1), e.coefficient(t2), e.coefficient(t3), e.coefficient(t4)};
}

}  // namespace derive
}  // namespace ksl::algebra

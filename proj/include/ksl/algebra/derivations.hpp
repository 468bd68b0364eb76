#pragma once

// Coefficient derivations built purely from the axioms in formal.hpp.
// Nothing here restates a target formula; the results are compared with
// the closed forms in claims.hpp by the verifiers.

#include "ksl/algebra/formal.hpp"

namespace ksl::algebra {

/// Coefficients on (I1, I2, I3, Hessian term).
struct CoefficientSet {
  RationalFunction A, B, C, D;
};

/// The statement as `replacement - target` (= 0 or >= 0).
Statement as_statement(const Relation& rel);

/// Solves an equality statement for one of its terms.
Relation solve_for(const Statement& stmt, const FormalTerm& t, std::string name);

namespace derive {

/// Normal form of a single term after eliminating every box v factor.
FormalExpr reduce(const FormalTerm& t);

/// I6 and I4 expressed on (I1, I2, I3).
FormalExpr box_gradient_identity();   // I6
FormalExpr box_squared_identity();    // I4

/// I11 <= A1 I1 + B1 I2 + C1 I3 + D1 I5, as "rhs - I11 >= 0".
Derivation shifted_holomorphic_bound();
/// A2 I1 + B2 I2 + C2 I3 + D2 I5 >= 0.
Derivation cauchy_schwarz_bound();
/// Same two inequalities before the equation for v is used (box terms kept).
Derivation shifted_holomorphic_bound_raw();
Derivation cauchy_schwarz_bound_raw();

/// First line after multiplying the equation by v^gamma box v and
/// integrating by parts: an identity between I4, I2, I3, I6.
Derivation box_squared_raw();
/// The equation multiplied by v^(gamma-1)|dv|^2, solved for I2.
Relation gradient_power_identity();
/// I6 on (I4, I3, I1) with I2 eliminated.
Relation box_gradient_elimination();

/// Combined inequality with the Hessian term split into its traceless part
/// and the box-squared part reduced: coefficients on (I1, I2, I3, T).
Derivation section2_combined();
/// Raw combined inequality, then I6 eliminated: coefficients on
/// (I1, I4, I3, I5).
Derivation section3_combined_raw();
Derivation section3_combined();

CoefficientSet coefficients(const FormalExpr& e, const FormalTerm& t1,
                            const FormalTerm& t2, const FormalTerm& t3,
                            const FormalTerm& t4);

}  // namespace derive
}  // namespace ksl::algebra

#pragma once

// Formal integral calculus for a positive solution v of
//   box v = (1/beta) v^(beta+1-beta q) - (lambda/beta) v + (beta+1)|dv|^2/v.
//
// Integrals are basis vectors; identities and inequalities between them
// are rewrite relations. Geometric facts (integration by parts over the
// manifold, Ricci identities, Cauchy-Schwarz) enter as axioms: they are
// applied, never proved.

#include <map>
#include <string>
#include <vector>

#include "ksl/algebra/rational_function.hpp"

namespace ksl::algebra {

enum class Shape : std::uint8_t {
  kScalar,                 // int v^p (box v)^s |dv|^(2t)
  kComplexHessianSq,       // int |v_{i jb}|^2 v^p
  kMixedCubic,             // int v^p v_{i jb} v_{ib} v_j
  kHolomorphicHessianSq,   // int |v_{ib jb}|^2 v^p
  kHolomorphicCubic,       // int v^p v_i v_j v_{ib jb}
  kShiftedHolomorphicSq,   // int |v_{ib jb} + a v_ib v_jb / v|^2 v^p
  kShiftedComplexSq,       // int |v_{i jb} + b v_i v_jb / v|^2 v^p
  kTracelessHessianSq,     // int (|v_{i jb}|^2 - (box v)^2 / n) v^p
};

struct FormalTerm {
  Shape shape = Shape::kScalar;
  Poly power;    // exponent of v
  int box = 0;   // power of box v (scalar shape only)
  int grad = 0;  // power of |dv|^2 (scalar shape only)

  std::string name() const;
  friend bool operator==(const FormalTerm& a, const FormalTerm& b) {
    return a.shape == b.shape && a.box == b.box && a.grad == b.grad &&
           a.power == b.power;
  }
  friend bool operator<(const FormalTerm& a, const FormalTerm& b);
};

/// The recurring integrals.
namespace terms {
FormalTerm scalar(Poly power, int box, int grad);
FormalTerm I1();   // int v^(gamma-2) |dv|^4
FormalTerm I2();   // int v^(beta+gamma-beta q) |dv|^2
FormalTerm I3();   // int v^gamma |dv|^2
FormalTerm I4();   // int v^gamma (box v)^2
FormalTerm I5();   // int |v_{i jb}|^2 v^gamma
FormalTerm I6();   // int v^(gamma-1) |dv|^2 box v
FormalTerm I7();   // int v^(gamma-1) v_{i jb} v_ib v_j
FormalTerm I8();   // int v^gamma |v_{ib jb}|^2
FormalTerm I9();   // int v^(gamma-1) v_i v_j v_{ib jb}
FormalTerm I11();  // int |v_{ib jb} + a v_ib v_jb/v|^2 v^gamma
FormalTerm I13();  // int |v_{i jb} + b v_i v_jb/v|^2 v^gamma
FormalTerm traceless();  // int (|v_{i jb}|^2 - (box v)^2/n) v^gamma
FormalTerm J(Poly p);    // int v^p box v
FormalTerm K(Poly p);    // int v^(p-1) |dv|^2
}  // namespace terms

/// Finite linear combination of formal terms with rational-function
/// coefficients. Zero coefficients are never stored.
class FormalExpr {
 public:
  using Map = std::map<FormalTerm, RationalFunction>;

  FormalExpr() = default;
  FormalExpr(const FormalTerm& t, RationalFunction c = RationalFunction(1));  // NOLINT

  void add(const FormalTerm& t, const RationalFunction& c);
  RationalFunction coefficient(const FormalTerm& t) const;
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }

  /// Applies f to every coefficient.
  template <class F>
  FormalExpr map_coefficients(F&& f) const {
    FormalExpr out;
    for (const auto& [t, c] : terms_) out.add(t, f(c));
    return out;
  }

  FormalExpr operator-() const;
  FormalExpr& operator+=(const FormalExpr& o);
  FormalExpr& operator-=(const FormalExpr& o);
  FormalExpr& operator*=(const RationalFunction& c);
  friend FormalExpr operator+(FormalExpr a, const FormalExpr& b) { return a += b; }
  friend FormalExpr operator-(FormalExpr a, const FormalExpr& b) { return a -= b; }
  friend FormalExpr operator*(FormalExpr a, const RationalFunction& c) { return a *= c; }
  friend FormalExpr operator*(const RationalFunction& c, FormalExpr a) { return a *= c; }

  /// Pointwise product of two integrands; both must be scalar-shaped.
  friend FormalExpr integrand_product(const FormalExpr& a, const FormalExpr& b);

  std::string to_string() const;

 private:
  Map terms_;
};

FormalExpr integrand_product(const FormalExpr& a, const FormalExpr& b);

/// target = replacement, target <= replacement or target >= replacement.
struct Relation {
  enum class Kind { kEqual, kUpperBound, kLowerBound };
  std::string name;
  FormalTerm target;
  FormalExpr replacement;
  Kind kind = Kind::kEqual;
};

/// expr = 0 or expr >= 0.
struct Statement {
  enum class Sense { kEqualsZero, kNonNegative };
  FormalExpr expr;
  Sense sense = Sense::kEqualsZero;
};

/// A quantity whose sign a derivation step relies on.
struct SideCondition {
  enum class Sign { kPositive, kNonNegative, kNonPositive, kNonZero };
  std::string description;
  RationalFunction quantity;
  Sign sign = Sign::kNonNegative;
};

/// A statement transformed step by step; inequality rewrites record the
/// sign requirement on the coefficient they act on.
class Derivation {
 public:
  explicit Derivation(Statement start, std::string origin = "start");

  /// Rewrites every occurrence of rel.target.
  Derivation& rewrite(const Relation& rel);

  /// Rewrites until no scalar term carries a box factor: int v^p box v is
  /// integrated by parts, every other box factor is replaced using the
  /// equation for v.
  Derivation& eliminate_box();

  /// this + multiplier * other; a nonnegative `other` needs multiplier >= 0.
  Derivation& combine(const Statement& other, const RationalFunction& multiplier,
                      const std::string& label);

  Derivation& substitute(Var v, const RationalFunction& value);

  const FormalExpr& expr() const { return stmt_.expr; }
  const Statement& statement() const { return stmt_; }
  const std::vector<SideCondition>& side_conditions() const { return conditions_; }
  const std::vector<std::string>& trail() const { return trail_; }

 private:
  Statement stmt_;
  std::vector<SideCondition> conditions_;
  std::vector<std::string> trail_;
};

/// Trusted rewrite rules.
namespace axioms {
/// Replace one box v factor of a scalar term by the equation for v.
Relation equation(const FormalTerm& t);
/// int v^p box v = -p int v^(p-1) |dv|^2.
Relation integration_by_parts(const FormalTerm& t);
/// I9 = -I7 - (gamma-1) I1 - I6.
Relation holomorphic_cubic();
/// I7 = (1/gamma) I4 + I6 - (1/gamma) I5.
Relation mixed_cubic();
/// I8 <= gamma(gamma-1) I1 + gamma I7 + 2 gamma I6 + I4 - I3.
Relation holomorphic_hessian_bound();
/// I11 = I8 + 2a I9 + a^2 I1 (the two cross terms are real and equal).
Relation shifted_holomorphic_expansion();
/// I13 = I5 + 2b I7 + b^2 I1.
Relation shifted_complex_expansion();
/// I5 = traceless + (1/n) I4.
Relation traceless_split();
/// I11 >= 0.
Statement shifted_holomorphic_nonnegative();
/// I13 - (1/n) int (box v + b |dv|^2/v)^2 v^gamma >= 0, the square being
/// expanded by integrand multiplication.
Statement cauchy_schwarz();
}  // namespace axioms

}  // namespace ksl::algebra

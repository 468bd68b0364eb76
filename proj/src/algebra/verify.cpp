#include "ksl/algebra/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "ksl/algebra/claims.hpp"
#include "ksl/algebra/derivations.hpp"
#include "ksl/constants.hpp"

namespace ksl::algebra {

bool PassReport::passed() const {
  for (const auto& s : steps)
    if (!s.passed) return false;
  return !steps.empty();
}

std::size_t PassReport::instantiation_count() const {
  std::size_t c = 0;
  for (const auto& s : steps) c += s.instantiations.size();
  return c;
}

const StepReport* PassReport::step(const std::string& name) const {
  for (const auto& s : steps)
    if (s.name == name) return &s;
  return nullptr;
}

Surd rebase(const Surd& s, const RationalFunction& radicand, const RationalFunction& factor) {
  if (!rf_equal(s.radicand(), factor * factor * radicand))
    throw std::invalid_argument("rebase: radicands are not related by the given factor");
  return Surd(radicand, s.rational(), s.radical() * factor);
}

Surd surd_eval(const RationalFunction& f, Var v, const Surd& value) {
  return Surd::eval_in(RationalFunction(f.num()), v, value) /
         Surd::eval_in(RationalFunction(f.den()), v, value);
}

namespace {

using Values = std::array<long double, kNumVars>;

const RF g = RF::var(Var::gamma);
const RF a = RF::var(Var::a);
const RF b = RF::var(Var::b);
const RF be = RF::var(Var::beta);
const RF k = RF::var(Var::k);
const RF e = RF::var(Var::eps);
const RF l = RF::var(Var::lambda);
const RF q = RF::var(Var::q);
const RF n = RF::var(Var::n);
const RF x = RF::var(Var::x);
const RF l1 = RF::var(Var::lambda1);

constexpr int kInstantiations = 3;
constexpr int kSignSamples = 40;
constexpr std::size_t kMaxResidualChars = 2000;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void set(Values& v, Var var, long double value) { v[static_cast<int>(var)] = value; }

// A point inside the region where the chains are used: n >= 2, q strictly
// subcritical, k inside its interval, eps in [0, eps_max], x between its
// bounds.
Values admissible_sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nd(2, 4);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  Dimensions dims{nd(rng), 2.0};
  dims.q = 1.0 + u(rng) * (dims.critical_exponent() - 1.0);
  const KInterval iv = k_interval(dims);
  const double kv = iv.k_lo + u(rng) * iv.width();
  const XBounds xb = x_bounds(dims, kv);
  Values v{};
  set(v, Var::n, dims.n);
  set(v, Var::q, dims.q);
  set(v, Var::k, kv);
  set(v, Var::eps, u(rng) * epsilon_max(dims));
  set(v, Var::x, xb.x_lo + u(rng) * (xb.x_hi - xb.x_lo));
  set(v, Var::gamma, 0.5 * u(rng));
  set(v, Var::beta, 3.0 * u(rng));
  set(v, Var::a, 4.0 * u(rng) - 2.0);
  set(v, Var::b, 4.0 * u(rng) - 2.0);
  set(v, Var::lambda, u(rng));
  set(v, Var::lambda1, 1.0 + 4.0 * u(rng));
  return v;
}

Point random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  Point p;
  for (int i = 0; i < kNumVars; ++i) {
    long nv = 0;
    while (nv == 0) nv = num(rng);
    Rational r(nv, den(rng));
    r.canonicalize();
    p.set(static_cast<Var>(i), r);
  }
  return p;
}

std::string clip(std::string s) {
  if (s.size() > kMaxResidualChars) s = s.substr(0, kMaxResidualChars) + " ...";
  return s;
}

const char* sign_text(SideCondition::Sign s) {
  switch (s) {
    case SideCondition::Sign::kPositive: return "> 0";
    case SideCondition::Sign::kNonNegative: return ">= 0";
    case SideCondition::Sign::kNonPositive: return "<= 0";
    case SideCondition::Sign::kNonZero: return "!= 0";
  }
  return "?";
}

bool sign_ok(SideCondition::Sign s, long double v) {
  if (!std::isfinite(v)) return false;
  switch (s) {
    case SideCondition::Sign::kPositive: return v > 0;
    case SideCondition::Sign::kNonNegative: return v >= 0;
    case SideCondition::Sign::kNonPositive: return v <= 0;
    case SideCondition::Sign::kNonZero: return v != 0;
  }
  return false;
}

class Step {
 public:
  Step(std::string name, std::string description) {
    report_.name = std::move(name);
    report_.description = std::move(description);
  }

  void equal(const std::string& label, const RF& derived, const RF& claimed) {
    pairs_.push_back({label, derived, claimed});
    if (!rf_equal(derived, claimed))
      fail(label + ": residual " + rf_residual(derived, claimed).to_string());
  }

  void zero(const std::string& label, const RF& r) { equal(label, r, RF()); }

  void surd_equal(const std::string& label, const Surd& derived, const Surd& claimed) {
    if (!rf_equal(derived.radicand(), claimed.radicand())) {
      fail(label + ": radicands differ");
      return;
    }
    equal(label + ".rational", derived.rational(), claimed.rational());
    equal(label + ".radical", derived.radical(), claimed.radical());
  }

  void surd_zero(const std::string& label, const Surd& s) {
    zero(label + ".rational", s.rational());
    zero(label + ".radical", s.radical());
  }

  void expr_equal(const std::string& label, const FormalExpr& derived,
                  const FormalExpr& claimed) {
    std::set<FormalTerm> all;
    for (const auto& [t, c] : derived.terms()) all.insert(t);
    for (const auto& [t, c] : claimed.terms()) all.insert(t);
    for (const auto& t : all)
      equal(label + "[" + t.name() + "]", derived.coefficient(t), claimed.coefficient(t));
  }

  void coefficients_equal(const std::string& label, const CoefficientSet& derived,
                          const CoefficientSet& claimed, bool with_d = true) {
    equal(label + ".A", derived.A, claimed.A);
    equal(label + ".B", derived.B, claimed.B);
    equal(label + ".C", derived.C, claimed.C);
    if (with_d) equal(label + ".D", derived.D, claimed.D);
  }

  void holds(const std::string& label, bool ok) {
    if (!ok) fail(label + ": does not hold");
  }

  // Sign of a quantity the step relies on, checked at admissible samples.
  void require(const SideCondition& sc) {
    std::mt19937_64 rng(fnv1a(report_.name + sc.description));
    int bad = 0;
    for (int i = 0; i < kSignSamples; ++i)
      if (!sign_ok(sc.sign, sc.quantity.eval_ld(admissible_sample(rng)))) ++bad;
    std::string text = "requires " + sc.description + " " + sign_text(sc.sign) + ": " +
                       sc.quantity.to_string();
    if (bad == 0) {
      note(text + " (holds at " + std::to_string(kSignSamples) + " admissible samples)");
    } else {
      fail(text + " (violated at " + std::to_string(bad) + " admissible samples)");
    }
  }

  void require(const std::string& description, const RF& quantity,
               SideCondition::Sign sign = SideCondition::Sign::kPositive) {
    require(SideCondition{description, quantity, sign});
  }

  void require_all(const std::vector<SideCondition>& conditions) {
    for (const auto& sc : conditions) require(sc);
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  // Runs f, turning an engine exception into a failed comparison.
  template <class F>
  void guard(const std::string& label, F&& f) {
    try {
      f();
    } catch (const std::exception& ex) {
      fail(label + ": " + ex.what());
    }
  }

  StepReport finish() {
    if (!pairs_.empty()) instantiate();
    return std::move(report_);
  }

 private:
  struct Pair {
    std::string label;
    RF lhs, rhs;
  };

  void fail(const std::string& what) {
    report_.passed = false;
    report_.residuals.push_back(clip(what));
  }

  void instantiate() {
    std::mt19937_64 rng(fnv1a(report_.name));
    int found = 0;
    for (int attempt = 0; attempt < 500 && found < kInstantiations; ++attempt) {
      const Point p = random_point(rng);
      bool agreed = true;
      try {
        for (const auto& pr : pairs_)
          if (pr.lhs.eval(p) != pr.rhs.eval(p)) agreed = false;
      } catch (const std::domain_error&) {
        continue;
      }
      report_.instantiations.push_back({p.to_string(), agreed});
      if (!agreed) fail("instantiation disagrees at " + p.to_string());
      ++found;
    }
    if (found < kInstantiations) fail("fewer than 3 denominator-free instantiation points");
  }

  StepReport report_;
  std::vector<Pair> pairs_;
};

FormalExpr on_basis(const CoefficientSet& c, const FormalTerm& t1, const FormalTerm& t2,
                    const FormalTerm& t3) {
  FormalExpr out;
  out.add(t1, c.A);
  out.add(t2, c.B);
  out.add(t3, c.C);
  return out;
}

CoefficientSet map_set(const CoefficientSet& c, const std::function<RF(const RF&)>& f) {
  return {f(c.A), f(c.B), f(c.C), f(c.D)};
}

Surd surd_substitute(const Surd& s, Var v, const RF& value) {
  return Surd(s.radicand().substitute(v, value), s.rational().substitute(v, value),
              s.radical().substitute(v, value));
}

// I6 from the two box identities with I2 eliminated.
Relation i6_from_box_identities() {
  Statement s1{derive::box_gradient_identity() - FormalExpr(terms::I6()),
               Statement::Sense::kEqualsZero};
  Statement s2{derive::box_squared_identity() - FormalExpr(terms::I4()),
               Statement::Sense::kEqualsZero};
  Derivation d(s2, "I4 identity");
  d.rewrite(solve_for(s1, terms::I2(), "I6 identity for I2"));
  return solve_for(d.statement(), terms::I6(), "I6");
}

const auto kPositive = SideCondition::Sign::kPositive;

}  // namespace

PassReport verify_lemma22(int idx) {
  if (idx < 1 || idx > 3) throw DomainError("verify_lemma22: idx must be 1, 2 or 3");
  PassReport rep{"lemma22." + std::to_string(idx), {}};
  using namespace terms;
  if (idx == 1) {
    Step s("identity", "box v in the I6 integrand replaced by the equation");
    s.expr_equal("I6", derive::box_gradient_identity(),
                 on_basis(claims::box_gradient(), I1(), I2(), I3()));
    rep.steps.push_back(s.finish());
  } else if (idx == 2) {
    Step s("identity", "I4 reduced by the equation and integration by parts");
    s.expr_equal("I4", derive::box_squared_identity(),
                 on_basis(claims::box_squared(), I1(), I2(), I3()));
    rep.steps.push_back(s.finish());
  } else {
    Step s1("rearrangement", "final line I5 = I4 + gamma I6 - gamma I7 solved for I7");
    FormalExpr line = FormalExpr(I5()) - FormalExpr(I4()) - g * FormalExpr(I6()) +
                      g * FormalExpr(I7());
    const Relation r = solve_for({line, Statement::Sense::kEqualsZero}, I7(), "I7");
    s1.expr_equal("I7", r.replacement, axioms::mixed_cubic().replacement);
    s1.require("gamma", g);
    rep.steps.push_back(s1.finish());

    Step s2("lemma31_cross_check", "I6 elimination agrees with the box identities");
    s2.expr_equal("I6", derive::box_gradient_elimination().replacement,
                  i6_from_box_identities().replacement);
    rep.steps.push_back(s2.finish());
  }
  return rep;
}

PassReport verify_lemma23() {
  PassReport rep{"lemma23", {}};
  using namespace terms;
  const Derivation d = derive::shifted_holomorphic_bound();
  Step s("coefficients", "shifted holomorphic square expanded and bounded");
  s.coefficients_equal("", derive::coefficients(d.expr(), I1(), I2(), I3(), I5()),
                       claims::shifted_holomorphic());
  s.equal("I11", d.expr().coefficient(I11()), RF(-1));
  s.holds("five terms", d.expr().terms().size() == 5);
  s.holds("nonnegative statement", d.statement().sense == Statement::Sense::kNonNegative);
  s.require_all(d.side_conditions());
  rep.steps.push_back(s.finish());
  return rep;
}

PassReport verify_remark_b1() {
  PassReport rep{"remark_b1", {}};
  using namespace terms;
  const CoefficientSet c = derive::coefficients(derive::shifted_holomorphic_bound().expr(),
                                                I1(), I2(), I3(), I5());
  const RF two_a = 2 * a;

  Step s1("b1_at_gamma_2a", "B1 at gamma = 2a");
  s1.equal("B1", c.B.substitute(Var::gamma, two_a), q);
  rep.steps.push_back(s1.finish());

  Step s2("d1_at_gamma_2a", "D1 at gamma = 2a");
  s2.zero("D1", c.D.substitute(Var::gamma, two_a));
  rep.steps.push_back(s2.finish());

  Step s3("c1_split", "C1 = (2 - 2a/gamma)(q-1) lambda - 1 - lambda B1");
  const RF lhs = (RF(2) - 2 * a / g) * (q - 1) * l - 1;
  s3.equal("C1 - lhs", c.C - lhs, -l * c.B);
  s3.require("lambda", l);
  s3.note("B1 <= 0 and C1 <= 0 therefore force (2 - 2a/gamma)(q-1) lambda - 1 <= 0");
  rep.steps.push_back(s3.finish());
  return rep;
}

PassReport verify_lemma24() {
  PassReport rep{"lemma24", {}};
  using namespace terms;
  const Derivation d = derive::cauchy_schwarz_bound();
  Step s("coefficients", "Cauchy-Schwarz bound expanded and reduced");
  s.coefficients_equal("", derive::coefficients(d.expr(), I1(), I2(), I3(), I5()),
                       claims::cauchy_schwarz());
  s.holds("four terms", d.expr().terms().size() == 4);
  s.require_all(d.side_conditions());
  rep.steps.push_back(s.finish());
  return rep;
}

PassReport verify_section2_chain() {
  PassReport rep{"section2", {}};
  using namespace terms;

  const Derivation d = derive::section2_combined();
  const CoefficientSet combined =
      derive::coefficients(d.expr(), I1(), I2(), I3(), traceless());
  {
    Step s("step1", "combined coefficients with the Hessian term split");
    s.coefficients_equal("", combined, claims::s2_combined());
    s.holds("four terms", d.expr().terms().size() == 4);
    s.require_all(d.side_conditions());
    rep.steps.push_back(s.finish());
  }

  const CoefficientSet after_b = map_set(
      combined, [](const RF& r) { return r.substitute(Var::b, claims::s2_b_choice()); });
  {
    Step s("step2", "b chosen so that D = -eps");
    s.coefficients_equal("", after_b, claims::s2_after_b());
    s.equal("D", after_b.D, -e);
    s.require("k", k);
    rep.steps.push_back(s.finish());
  }

  const CoefficientSet g0 =
      map_set(after_b, [](const RF& r) { return r.limit_at_zero(Var::gamma); });
  {
    Step s("step3", "coefficients at gamma = 0");
    s.coefficients_equal("", g0, claims::s2_gamma0());
    rep.steps.push_back(s.finish());
  }

  const RF a_star = claims::s2_a_choice();
  const RF A_star = g0.A.substitute(Var::a, a_star);
  {
    Step s("step4", "a chosen so that B = 0");
    s.zero("B", g0.B.substitute(Var::a, a_star));
    s.equal("C", g0.C.substitute(Var::a, a_star), claims::s2_c_after_a());
    s.require("s = 1 + (n-1)(k+eps)/n", claims::s2_s());
    s.note("C < 0 iff lambda < 1/((q-1) s)");
    rep.steps.push_back(s.finish());
  }

  const RF quad = claims::s2_beta_quadratic();
  {
    Step s("step5", "A as s times a quadratic in beta");
    s.equal("A", A_star, claims::s2_s() * quad);
    s.require("cleared factor s", claims::s2_s());
    rep.steps.push_back(s.finish());
  }

  const RF star = claims::s2_star_star();
  {
    Step s("step6", "discriminant in beta against the quadratic in k");
    const RF factor = k * (n + 1) * (n + 1) / q;
    s.equal("disc * k (n+1)^2 / q", discriminant(quad, Var::beta) * factor, -star);
    s.require("cleared factor k (n+1)^2 / q", factor);
    s.note("disc <= 0 iff the quadratic in k is >= 0");
    rep.steps.push_back(s.finish());
  }

  const RF delta = discriminant(star, Var::k);
  {
    Step s("step7", "discriminant in k, eps bound and roots");
    s.equal("Delta(0)", delta.substitute(Var::eps, RF()), claims::s2_delta0());
    s.equal("Delta(0) = 16 R", claims::s2_delta0(), 16 * claims::s2_k_lo_radicand());
    s.surd_zero("Delta(eps_max)", surd_eval(delta, Var::eps, claims::s2_eps_max()));
    for (int sign : {-1, 1}) {
      const std::string tag = sign < 0 ? "lower" : "upper";
      s.surd_zero("root." + tag, surd_eval(star, Var::k, claims::s2_k_root(sign)));
      s.surd_equal("shifted." + tag, claims::s2_k_root(sign) + e,
                   claims::s2_k_shifted_root(sign));
    }
    s.require("leading coefficient n(n-1)q", n * (n - 1) * q);
    rep.steps.push_back(s.finish());
  }

  {
    Step s("step8", "k lower bound at eps = 0 and the final threshold");
    s.guard("radicals", [&] {
      const Surd root0 = surd_substitute(claims::s2_k_root(-1), Var::eps, RF());
      const Surd k_lo = rebase(root0, claims::s2_k_lo_radicand(), RF(4));
      s.surd_equal("k_lo", k_lo, claims::s2_k_lo());
      const Surd k_lo1 = rebase(claims::s2_k_lo(), claims::base_radicand(), n);
      const Surd lhs = (k_lo1 * ((n - 1) / n) + RF(1)) * (q - 1);
      s.surd_zero("(q-1)(1+(n-1)k_lo/n) - 2 C_S", lhs - claims::sharp_constant() * RF(2));
    });
    s.require("rebase factor n", n);
    s.note("threshold 1/((q-1)(1+(n-1)k_lo/n)) = 1/(2 C_S)");
    rep.steps.push_back(s.finish());
  }
  return rep;
}

PassReport verify_lemma31() {
  PassReport rep{"lemma31", {}};
  using namespace terms;
  {
    Step s("eq6", "I4 after the equation and integration by parts");
    const Relation r6 = solve_for(derive::box_squared_raw().statement(), I4(), "I4");
    s.expr_equal("I4", r6.replacement, claims::eq6_rhs());
    rep.steps.push_back(s.finish());
  }
  {
    Step s("eq7", "I2 from the equation multiplied by v^(gamma-1)|dv|^2");
    s.expr_equal("I2", derive::gradient_power_identity().replacement, claims::eq7_rhs());
    rep.steps.push_back(s.finish());
  }
  {
    Step s("i6", "I6 with I2 eliminated");
    s.expr_equal("I6", derive::box_gradient_elimination().replacement, claims::lemma_i6());
    s.expr_equal("I6 via box identities", i6_from_box_identities().replacement,
                 claims::lemma_i6());
    s.require("beta q - gamma", be * q - g, SideCondition::Sign::kNonZero);
    rep.steps.push_back(s.finish());
  }
  return rep;
}

PassReport verify_section3_chain() {
  PassReport rep{"section3", {}};
  using namespace terms;

  const Derivation d = derive::section3_combined();
  const CoefficientSet combined = derive::coefficients(d.expr(), I1(), I4(), I3(), I5());
  {
    Step s("step1", "combined inequality with I6 eliminated");
    s.expr_equal("lemma32", derive::shifted_holomorphic_bound_raw().expr(),
                 claims::shifted_holomorphic_raw());
    s.expr_equal("lemma33", derive::cauchy_schwarz_bound_raw().expr(),
                 claims::cauchy_schwarz_raw());
    s.expr_equal("combined", derive::section3_combined_raw().expr(),
                 claims::s3_combined_raw());
    s.coefficients_equal("", combined, claims::s3_combined());
    s.holds("four terms", d.expr().terms().size() == 4);
    s.require_all(d.side_conditions());
    rep.steps.push_back(s.finish());
  }

  const CoefficientSet after_b = map_set(
      combined, [](const RF& r) { return r.substitute(Var::b, claims::s3_b_choice()); });
  {
    Step s("step2", "b chosen so that D = 0");
    s.zero("D", after_b.D);
    s.coefficients_equal("", after_b, claims::s3_after_b(), false);
    rep.steps.push_back(s.finish());
  }

  const CoefficientSet g0 =
      map_set(after_b, [](const RF& r) { return r.limit_at_zero(Var::gamma); });
  {
    Step s("step3", "coefficients at gamma = 0");
    s.coefficients_equal("", g0, claims::s3_gamma0(), false);
    rep.steps.push_back(s.finish());
  }

  const CoefficientSet xy =
      map_set(g0, [](const RF& r) { return r.substitute(Var::a, x * be); });
  const RF qy = claims::s3_y_quadratic();
  {
    Step s("step4", "a = x beta turns A into x times a quadratic in y = beta");
    s.equal("A", xy.A, x * qy);
    s.holds("B free of beta", !xy.B.depends_on(Var::beta));
    s.holds("C free of beta", !xy.C.depends_on(Var::beta));
    s.equal("discriminant", discriminant(qy, Var::beta), claims::s3_y_discriminant());
    s.require("cleared factor x", x);
    rep.steps.push_back(s.finish());
  }
  {
    Step s("step5", "discriminant >= 0 iff x <= x_hi");
    const RF factor = 8 * (n + 1) * (k * n + n - 1) / (q * n * n * k);
    s.equal("disc", claims::s3_y_discriminant(), -factor * (x - claims::s3_x_hi()));
    s.require("cleared factor 8(n+1)(kn+n-1)/(q n^2 k)", factor);
    rep.steps.push_back(s.finish());
  }
  {
    Step s("step6", "B <= 0 iff x >= x_lo");
    const RF factor = 2 * (n + 1) / (n * q);
    s.equal("B", xy.B, -factor * (x - claims::s3_x_lo()));
    s.require("cleared factor 2(n+1)/(nq)", factor);
    rep.steps.push_back(s.finish());
  }
  {
    Step s("step7", "x_lo <= x_hi iff a quadratic in k is <= 0");
    const RF factor = q * n * (n - 1) / (2 * (n + 1) * (k * n + n - 1));
    s.equal("x_hi - x_lo", claims::s3_x_hi() - claims::s3_x_lo(),
            -factor * claims::s3_k_quadratic());
    for (int sign : {-1, 1})
      s.surd_zero(sign < 0 ? "root.lower" : "root.upper",
                  surd_eval(claims::s3_k_quadratic(), Var::k, claims::s3_k_end(sign)));
    s.require("cleared factor qn(n-1)/(2(n+1)(kn+n-1))", factor);
    s.require("interval radicand 1 - (n-1)q/(n+1)", claims::s3_interval_radicand(),
              SideCondition::Sign::kNonNegative);
    rep.steps.push_back(s.finish());
  }
  {
    Step s("step8", "C + B lambda1 >= 0 rearranged as a lower bound on lambda");
    const RF factor = 2 * (q - 1) * (n + 1) * x / (n * q);
    s.equal("C + B lambda1", xy.C + xy.B * l1, factor * (l - claims::s3_lambda_rhs()));
    s.require("cleared factor 2(q-1)(n+1)x/(nq)", factor);
    rep.steps.push_back(s.finish());
  }
  {
    Step s("step9", "bound at x = x_hi");
    s.equal("F", claims::s3_lambda_rhs().substitute(Var::x, claims::s3_x_hi()),
            claims::s3_f());
    s.equal("1/C", claims::s3_inverse_constant(), 2 * claims::s3_f());
    rep.steps.push_back(s.finish());
  }
  {
    Step s("step10", "left endpoint of the k-interval recovers the sharp constant");
    s.guard("radicals", [&] {
      const Surd k_lo = rebase(claims::s3_k_end(-1), claims::base_radicand(), RF(1) / (n + 1));
      const RF c = 4 * n * n + 4 * n + q;
      const RF coeff = RF(1) - (n + (n - 1) * k) * (k * n + n - 1) * q / (c * k);
      s.surd_zero("lambda1 coefficient", surd_eval(coeff, Var::k, k_lo));
      s.surd_zero("2 F(k_lo) C_S - 1",
                  surd_eval(claims::s3_f(), Var::k, k_lo) * claims::sharp_constant() * RF(2) -
                      RF(1));
    });
    s.require("rebase factor 1/(n+1)", RF(1) / (n + 1));
    rep.steps.push_back(s.finish());
  }
  return rep;
}

PassReport verify_cross_chain() {
  PassReport rep{"cross_chain", {}};
  Step s("k_lo", "both chains give the same k lower bound and threshold");
  s.guard("radicals", [&] {
    const Surd k2 = rebase(claims::s2_k_lo(), claims::base_radicand(), n);
    const Surd k3 = rebase(claims::s3_k_end(-1), claims::base_radicand(), RF(1) / (n + 1));
    s.surd_equal("k_lo", k2, k3);
    const Surd t2 = (k2 * ((n - 1) / n) + RF(1)) * (q - 1);
    s.surd_zero("threshold", t2 * surd_eval(claims::s3_f(), Var::k, k3) - RF(1));
  });
  rep.steps.push_back(s.finish());
  return rep;
}

PassReport verify_psi_monotone(double alpha, double beta, double gamma) {
  if (!(alpha > 0 && beta > 0 && gamma > 0))
    throw DomainError("verify_psi_monotone: alpha, beta, gamma must be positive");
  const long double al = alpha, bl = beta, gl = gamma;
  const long double disc = bl * bl - 4 * al * al * gl;
  if (!(disc > 0))
    throw DomainError("verify_psi_monotone: requires beta^2 > 4 alpha^2 gamma");
  const long double upper = (bl - std::sqrt(disc)) / (2 * al * al);
  auto radicand = [&](long double t) { return al * al * t * t - bl * t + gl; };
  auto psi = [&](long double t) { return al * t - std::sqrt(radicand(t)); };
  auto dpsi = [&](long double t) {
    return al - (2 * al * al * t - bl) / (2 * std::sqrt(radicand(t)));
  };

  constexpr int kSamples = 1000;
  Step s("sampling", "psi strictly increasing on (0, e_max)");
  int not_increasing = 0, bad_derivative = 0;
  long double prev = 0;
  for (int i = 0; i < kSamples; ++i) {
    const long double t = upper * (i + 1) / (kSamples + 1);
    const long double v = psi(t);
    if (i > 0 && !(v > prev)) ++not_increasing;
    if (!(dpsi(t) > 0)) ++bad_derivative;
    prev = v;
  }
  s.holds("strict increase between consecutive samples", not_increasing == 0);
  s.holds("psi' > 0 at every sample", bad_derivative == 0);
  s.note(std::to_string(kSamples) + " samples on (0, " + std::to_string(double(upper)) + ")");
  PassReport rep{"psi_monotone", {}};
  rep.steps.push_back(s.finish());
  return rep;
}

std::vector<PassReport> verify_all() {
  return {verify_lemma22(1),        verify_lemma22(2),     verify_lemma22(3),
          verify_lemma23(),         verify_remark_b1(),    verify_lemma24(),
          verify_section2_chain(),  verify_lemma31(),      verify_section3_chain(),
          verify_cross_chain()};
}

}  // namespace ksl::algebra

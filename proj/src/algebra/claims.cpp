#include "ksl/algebra/claims.hpp"

namespace ksl::algebra::claims {
namespace {

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
const RF one = RF(1);
const RF two = RF(2);

RF sq(const RF& r) { return r * r; }

FormalExpr on(std::initializer_list<std::pair<FormalTerm, RF>> entries) {
  FormalExpr out;
  for (const auto& [t, c] : entries) out.add(t, c);
  return out;
}

}  // namespace

CoefficientSet box_gradient() { return {be + 1, one / be, -l / be, RF()}; }

CoefficientSet box_squared() {
  return {sq(be + 1), (be * q - g) / be, l * (g - be) / be, RF()};
}

CoefficientSet shifted_holomorphic() {
  const RF w = two - two * a / g;
  return {g * (g - 1) - two * a * (g - 1) + sq(a) + (3 * g - 4 * a) * (be + 1) +
              w * sq(be + 1),
          (3 * g - 4 * a) / be + w * ((be * q - g) / be),
          (4 * a - 3 * g) * l / be + w * l * (g - be) / be - 1,
          two * a / g - 1};
}

CoefficientSet cauchy_schwarz() {
  const RF m = one - one / n;
  const RF w = two * b / g - one / n;
  return {sq(b) * m + sq(be + 1) * w + two * (be + 1) * b * m,
          w * (q - g / be) + (two * b / be) * m,
          l * (w * ((g - be) / be) - (two * b / be) * m),
          one - two * b / g};
}

CoefficientSet s2_combined() {
  const RF m = one - one / n;
  const RF w = two * b / g - one / n;
  const RF D = two * a / g - 1 + k * (one - two * b / g);
  const RF A = g * (g - 1) - two * a * (g - 1) + sq(a) + (3 * g - 4 * a) * (be + 1) +
               (two - two * a / g) * sq(be + 1) +
               k * (sq(b) * m + sq(be + 1) * w + two * b * (be + 1) * m) +
               (D / n) * sq(be + 1);
  const RF B = (3 * g - 4 * a) / be + (two - two * a / g) * (q - g / be) +
               k * (w * (q - g / be) + (two * b / be) * m) + (D / n) * (q - g / be);
  const RF C = ((4 * a - 3 * g) / be + (two - two * a / g) * (g / be - 1) +
                k * w * (g / be - 1) - (two * b * k / be) * m + (g / be - 1) * D / n) *
                   l -
               1;
  return {A, B, C, D};
}

RF s2_b_choice() { return (g * e / 2 + a - g / 2) / k + g / 2; }

RF s2_s() { return one + ((n - 1) / n) * (k + e); }

CoefficientSet s2_after_b() {
  const RF bb = s2_b_choice();
  const RF s = s2_s();
  const RF m = one - one / n;
  return {g * (g - 1) - two * a * (g - 1) + sq(a) + (3 * g - 4 * a) * (be + 1) +
              sq(be + 1) * s + sq(bb) * k * m + two * bb * k * (be + 1) * m,
          (3 * g - 4 * a) / be + (q - g / be) * s + two * bb * k / be * m,
          ((4 * a - 3 * g) / be + (g / be - 1) * s - two * bb * k / be * m) * l - 1,
          -e};
}

CoefficientSet s2_gamma0() {
  const RF s = s2_s();
  return {two * a + sq(a) + (sq(a) / k) * ((n - 1) / n) -
              two * a * (be + 1) * ((n + 1) / n) + s * sq(be + 1),
          -(two * a / be) * ((n + 1) / n) + q * s,
          ((two * a / be) * ((n + 1) / n) - s) * l - 1,
          -e};
}

RF s2_a_choice() { return q * s2_s() * n * be / (two * (n + 1)); }

RF s2_c_after_a() { return (q - 1) * s2_s() * l - 1; }

RF s2_beta_quadratic() {
  return sq(be) * (sq(q) * s2_s() * (n * k + n - 1) * n / (4 * k * sq(n + 1)) - q + 1) +
         be * (two - q / (n + 1)) + 1;
}

RF s2_star_star() {
  return n * (n - 1) * q * sq(k) +
         k * (q * (two * sq(n) + n * (n - 1) * e - two * n) - 4 * sq(n) - 4 * n) +
         q * e * sq(n - 1) + q * n * (n - 1);
}

RF s2_eps_radicand() { return sq(q) + 4 * q * n * (n + 1); }

Surd s2_eps_max() {
  const RF den = n * (n - 1) * q;
  return Surd(s2_eps_radicand(), (4 * n * (n + 1) - two * q * (n - 1)) / den,
              -two * (n - 1) / den);
}

Surd s2_k_root(int sign) {
  const RF den = two * n * (n - 1) * q;
  return Surd(discriminant(s2_star_star(), Var::k),
              (4 * sq(n) + 4 * n - q * (two * sq(n) + n * (n - 1) * e - two * n)) / den,
              RF(sign) / den);
}

Surd s2_k_shifted_root(int sign) {
  const RF den = two * n * (n - 1) * q;
  return Surd(discriminant(s2_star_star(), Var::k),
              (4 * sq(n) + 4 * n - q * (two * sq(n) - n * (n - 1) * e - two * n)) / den,
              RF(sign) / den);
}

RF s2_delta0() {
  return sq(4 * sq(n) + 4 * n) - 16 * (sq(n) + n) * q * (sq(n) - n);
}

RF s2_k_lo_radicand() { return sq(sq(n) + n) - (sq(n) - n) * q * (sq(n) + n); }

Surd s2_k_lo() {
  const RF den = n * (n - 1) * q;
  return Surd(s2_k_lo_radicand(), (two * sq(n) + two * n - q * (sq(n) - n)) / den,
              -two / den);
}

RF base_radicand() { return (n + 1) * (n + 1 - (n - 1) * q); }

Surd sharp_constant() {
  const RF den = two * q * n;
  return Surd(base_radicand(), (q - 1) * (two * n + q + 2) / den, -two * (q - 1) / den);
}

FormalExpr eq6_rhs() {
  return on({{terms::I2(), (be * q - be - g - 1) / be},
             {terms::I3(), l * (g + 1) / be},
             {terms::I6(), be + 1}});
}

FormalExpr eq7_rhs() {
  return on({{terms::I6(), be}, {terms::I3(), l}, {terms::I1(), -be * (be + 1)}});
}

FormalExpr lemma_i6() {
  const RF d = be * q - g;
  return on({{terms::I4(), one / d},
             {terms::I3(), -(l * (q - 1)) / d},
             {terms::I1(), (be * q - be - g - 1) * (be + 1) / d}});
}

FormalExpr shifted_holomorphic_raw() {
  return on({{terms::I1(), g * (g - 1) - two * a * (g - 1) + sq(a)},
             {terms::I6(), 3 * g - 4 * a},
             {terms::I4(), two - two * a / g},
             {terms::I5(), two * a / g - 1},
             {terms::I3(), RF(-1)}});
}

FormalExpr cauchy_schwarz_raw() {
  const RF m = one - one / n;
  return on({{terms::I5(), one - two * b / g},
             {terms::I1(), sq(b) * m},
             {terms::I4(), two * b / g - one / n},
             {terms::I6(), two * b * m}});
}

FormalExpr s3_combined_raw() {
  const RF m = one - one / n;
  return on({{terms::I1(), g * (g - 1) - two * a * (g - 1) + sq(a) + k * sq(b) * m},
             {terms::I4(), two - two * a / g + k * (two * b / g - one / n)},
             {terms::I6(), 3 * g - 4 * a + two * b * k * m},
             {terms::I5(), two * a / g - 1 + k * (one - two * b / g)},
             {terms::I3(), RF(-1)}});
}

CoefficientSet s3_combined() {
  const RF m = one - one / n;
  const RF d = be * q - g;
  const RF w6 = 3 * g - 4 * a + two * b * k * m;
  return {g * (g - 1) - two * a * (g - 1) + sq(a) + sq(b) * k * m +
              w6 * (be * q - be - g - 1) * (be + 1) / d,
          two - two * a / g + k * (two * b / g - one / n) + w6 / d,
          -((l * (q - 1) / d) * w6 + 1),
          two * a / g - 1 + k * (one - two * b / g)};
}

RF s3_b_choice() { return (g / 2) * (one - one / k) + a / k; }

CoefficientSet s3_after_b() {
  const RF bb = s3_b_choice();
  const RF m = one - one / n;
  const RF d = be * q - g;
  const RF w6 = 3 * g - 4 * a + two * bb * k * m;
  return {g * (g - 1) - two * a * (g - 1) + sq(a) + sq(bb) * k * m +
              w6 * (be * q - be - g - 1) * (be + 1) / d,
          one + (n - 1) * k / n + w6 / d,
          -((l * (q - 1) / d) * w6 + 1),
          RF()};
}

CoefficientSet s3_gamma0() {
  return {two * a + sq(a) + (sq(a) / k) * ((n - 1) / n) -
              two * a * ((n + 1) / n) * (be * q - be - 1) * (be + 1) / (be * q),
          one + (n - 1) * k / n - (two * a / (be * q)) * ((n + 1) / n),
          (l * (q - 1) / (be * q)) * (two * a * (n + 1) / n) - 1,
          RF()};
}

RF s3_y_quadratic() {
  const RF y = be;
  return sq(y) * (x + x * (n - 1) / (k * n) - two * (n + 1) / n + two * (n + 1) / (q * n)) +
         y * (two + two * (n + 1) / (q * n) - two * ((q - 1) / q) * ((n + 1) / n)) +
         two * (n + 1) / (q * n);
}

RF s3_y_discriminant() {
  return sq(two + two * (n + 1) / (q * n) - two * ((q - 1) / q) * ((n + 1) / n)) -
         8 * ((n + 1) / (q * n)) *
             (x + x * (n - 1) / (k * n) - two * (n + 1) / n + two * (n + 1) / (q * n));
}

RF s3_x_hi() {
  return (4 * sq(n) + 4 * n + q) * k / (two * (n + 1) * (k * n + n - 1));
}

RF s3_x_lo() { return (k * n + n - k) * q / (two * (n + 1)); }

RF s3_k_quadratic() { return sq(k) + (two - 4 * (n + 1) / ((n - 1) * q)) * k + 1; }

RF s3_interval_radicand() { return one - (n - 1) * q / (n + 1); }

Surd s3_k_end(int sign) {
  const RF s3 = two * (n + 1) / (q * (n - 1));
  return Surd(s3_interval_radicand(), s3 - 1, RF(sign) * s3);
}

RF s3_lambda_rhs() {
  return l1 / (q - 1) +
         (one - l1 * (one + (n - 1) * k / n)) / (two * (q - 1) * (n + 1) * x / (q * n));
}

RF s3_f() {
  const RF c = 4 * sq(n) + 4 * n + q;
  return (one / (q - 1)) * (one - (n + (n - 1) * k) * (k * n + n - 1) * q / (c * k)) * l1 +
         q * n * (k * n + n - 1) / ((q - 1) * c * k);
}

RF s3_inverse_constant() {
  const RF c = 4 * sq(n) + 4 * n + q;
  return (two / (q - 1)) *
         ((one - (n + (n - 1) * k) * (k * n + n - 1) * q / (c * k)) * l1 +
          q * n * (k * n + n - 1) / (c * k));
}

}  // namespace ksl::algebra::claims

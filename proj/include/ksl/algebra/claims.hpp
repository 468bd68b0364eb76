#pragma once

// Closed forms the derivations are checked against, transcribed as written
// (unsimplified) so that a transcription slip shows up as a residual.

#include "ksl/algebra/derivations.hpp"
#include "ksl/algebra/surd.hpp"

namespace ksl::algebra::claims {

// I6 and I4 on (I1, I2, I3); D unused.
CoefficientSet box_gradient();
CoefficientSet box_squared();

// Coefficients on (I1, I2, I3, I5).
CoefficientSet shifted_holomorphic();
CoefficientSet cauchy_schwarz();

// Combined coefficients on (I1, I2, I3, traceless).
CoefficientSet s2_combined();
RF s2_b_choice();
CoefficientSet s2_after_b();
CoefficientSet s2_gamma0();
RF s2_s();
RF s2_a_choice();
RF s2_c_after_a();
RF s2_beta_quadratic();
RF s2_star_star();           // quadratic in k, parameter eps
RF s2_eps_radicand();
Surd s2_eps_max();
Surd s2_k_root(int sign);     // roots of star_star in k, radicand disc(eps)
Surd s2_k_shifted_root(int sign);  // same roots plus eps
RF s2_delta0();
RF s2_k_lo_radicand();        // (n^2+n)^2 - (n^2-n) q (n^2+n)
Surd s2_k_lo();

// Riemannian-type radicand (n+1)(n+1-(n-1)q) and the sharp constant.
RF base_radicand();
Surd sharp_constant();

// Box-gradient elimination pieces, as relations on formal terms.
FormalExpr eq6_rhs();   // I4 = ...
FormalExpr eq7_rhs();   // I2 = ...
FormalExpr lemma_i6();  // I6 = ...

// Raw inequalities as coefficient maps on the box-carrying basis.
FormalExpr shifted_holomorphic_raw();  // rhs >= 0, includes -1 * I3
FormalExpr cauchy_schwarz_raw();
FormalExpr s3_combined_raw();

// After I6 elimination: A on I1, B on I4, C on I3, D on I5.
CoefficientSet s3_combined();
RF s3_b_choice();
CoefficientSet s3_after_b();
CoefficientSet s3_gamma0();
RF s3_y_quadratic();          // in y (beta), x
RF s3_y_discriminant();
RF s3_x_hi();
RF s3_x_lo();
RF s3_k_quadratic();
RF s3_interval_radicand();    // 1 - (n-1) q/(n+1)
Surd s3_k_end(int sign);
RF s3_lambda_rhs();           // right side of the lambda condition, in x, lambda1
RF s3_f();                    // F(k) in k, lambda1
RF s3_inverse_constant();     // 1/C_{S,lambda1,k}

}  // namespace ksl::algebra::claims

#pragma once

#include "cvarn/boundary.hpp"
#include "cvarn/fitting.hpp"

namespace cvarn {

/// Harmonic function u = Re h(z) fitted to boundary data, with h a
/// polynomial in the orthogonalized basis: coefficients c_k = a_k + i b_k,
/// b_0 = 0 (the imaginary constant does not affect u).
struct HarmonicModel {
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  Eigen::MatrixXcd hessenberg;
  BasisKind basis_kind = BasisKind::HermiteOrthogonalized;
  double residual = 0.0;

  int degree() const { return static_cast<int>(a.size()) - 1; }
  Eigen::VectorXcd coeffs() const { return a + Complex(0, 1) * b; }
};

/// Fit u(z_j) = Re sum_k c_k q_k(z_j) ~ f_j in the chosen basis (order-1
/// orthogonalization for Hermite kind, order-0 for values kind). For a
/// rectangular least-squares problem m >= 2n+1 is recommended.
HarmonicModel harmonic_fit(const BoundaryCurve& curve, const Eigen::VectorXd& f, int degree,
                           BasisKind kind = BasisKind::HermiteOrthogonalized,
                           const ArnoldiOptions& opts = {});

/// Values of u at arbitrary points.
Eigen::VectorXd harmonic_eval(const HarmonicModel& model, const Eigen::VectorXcd& points);

/// Outward normal derivative of u at the curve samples,
/// d_nu u = Re(nu(z) h'(z)), assembled from the derivative block of the
/// basis at the curve points.
Eigen::VectorXd dtn_evaluate(const HarmonicModel& model, const BoundaryCurve& curve);

}  // namespace cvarn
